#pragma once

#include "ddg2d/discretization.hpp"
#include "ddg2d/field.hpp"

#include <string>

namespace ddg2d {

/// Sampled (x, y, u) triples, one row per sample, resolution * resolution
/// collapsed-tensor samples per element.
void export_field_csv(const Discretization& disc, const DGField& u, const std::string& path,
                      int resolution);

/// Legacy-ASCII VTK unstructured grid: each element subdivided into a
/// barycentric lattice of resolution^2 sub-triangles with point data u
/// (vertices duplicated between elements, keeping interface jumps visible).
void export_field_vtk(const Discretization& disc, const DGField& u, const std::string& path,
                      int resolution);

} // namespace ddg2d
