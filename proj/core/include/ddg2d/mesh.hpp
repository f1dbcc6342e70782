#pragma once

#include "ddg2d/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace ddg2d {

enum class BoundaryKind { periodic, dirichlet };

/// Mesh edge. Endpoints are stored in the owner element's counterclockwise
/// traversal order, so the outward normal is the tangent rotated by -90deg.
/// Periodic partner edges are merged into a single record: the neighbor is
/// looked up across the identification and `shift` maps owner-side
/// coordinates onto the neighbor side.
struct Edge {
    std::array<int, 2> vertices{-1, -1};
    int owner = -1;
    int neighbor = -1; // -1 on a non-periodic boundary edge
    Vec2 normal;
    double length = 0.0;
    double h_e = 0.0;
    Vec2 shift;             // zero unless periodic
    bool periodic = false;

    bool is_boundary() const { return neighbor < 0; }
};

/// Immutable triangulation of the square [x0, x0+L]^2. Safe for concurrent
/// reads once built.
struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> elements; // CCW vertex triples
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> element_edges;
    std::vector<double> h_K; // inscribed-circle diameter per element

    Vec2 origin;
    double side_length = 0.0;
    int n_per_side = 0;
    BoundaryKind boundary = BoundaryKind::periodic;

    int n_elements() const { return static_cast<int>(elements.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    double element_area(int e) const;
    double min_h() const;
    double total_area() const;
};

/// Uniform triangulation of [x0,x0+L]^2: n_per_side x n_per_side squares,
/// each split along the same diagonal (lower-right to upper-left corner).
/// 2*n^2 elements. For periodic meshes, opposite boundary edges are
/// identified pairwise.
Mesh build_uniform_mesh(Vec2 origin, double L, int n_per_side, BoundaryKind kind);

/// Plain-text CSV export (vertices: x,y; elements: v0,v1,v2) for plotting.
void write_mesh_csv(const Mesh& mesh, const std::string& vertices_path,
                    const std::string& elements_path);

} // namespace ddg2d
