#include "ddg2d/export.hpp"

#include "ddg2d/quadrature.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace ddg2d {

void export_field_csv(const Discretization& disc, const DGField& u, const std::string& path,
                      int resolution) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_field_csv: cannot open " + path);
    os.precision(17);

    const std::vector<Vec2> pts = collapsed_sample_points(resolution);
    const std::vector<double> phi = disc.basis().values_at(pts);
    const int ndof = disc.n_dof();

    os << "x,y,u\n";
    for (int e = 0; e < disc.mesh().n_elements(); ++e) {
        const AffineMap& m = disc.map(e);
        const auto c = u.element(e);
        for (std::size_t q = 0; q < pts.size(); ++q) {
            double uh = 0.0;
            for (int j = 0; j < ndof; ++j) uh += c[j] * phi[q * ndof + j];
            const Vec2 x = m.to_physical(pts[q]);
            os << x.x << ',' << x.y << ',' << uh << '\n';
        }
    }
}

void export_field_vtk(const Discretization& disc, const DGField& u, const std::string& path,
                      int resolution) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_field_vtk: cannot open " + path);
    os.precision(12);

    // Barycentric lattice with resolution+1 points per side.
    const int r = resolution;
    std::vector<Vec2> lattice;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r - i; ++j)
            lattice.push_back({static_cast<double>(j) / r, static_cast<double>(i) / r});
    const auto node_id = [r](int i, int j) {
        // rows i = 0..r stacked, row i has r+1-i entries
        return i * (r + 1) - i * (i - 1) / 2 + j;
    };
    const int nodes_per_elem = static_cast<int>(lattice.size());
    const std::vector<double> phi = disc.basis().values_at(lattice);
    const int ndof = disc.n_dof();
    const int ne = disc.mesh().n_elements();

    std::vector<std::array<int, 3>> subtris;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r - i; ++j) {
            subtris.push_back({node_id(i, j), node_id(i, j + 1), node_id(i + 1, j)});
            if (j < r - i - 1)
                subtris.push_back({node_id(i, j + 1), node_id(i + 1, j + 1), node_id(i + 1, j)});
        }
    }

    os << "# vtk DataFile Version 3.0\nddg2d field\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << nodes_per_elem * ne << " double\n";
    for (int e = 0; e < ne; ++e) {
        const AffineMap& m = disc.map(e);
        for (const Vec2& p : lattice) {
            const Vec2 x = m.to_physical(p);
            os << x.x << ' ' << x.y << " 0\n";
        }
    }
    const int ncells = static_cast<int>(subtris.size()) * ne;
    os << "CELLS " << ncells << ' ' << 4 * ncells << '\n';
    for (int e = 0; e < ne; ++e) {
        const int base = e * nodes_per_elem;
        for (const auto& t : subtris)
            os << "3 " << base + t[0] << ' ' << base + t[1] << ' ' << base + t[2] << '\n';
    }
    os << "CELL_TYPES " << ncells << '\n';
    for (int i = 0; i < ncells; ++i) os << "5\n";
    os << "POINT_DATA " << nodes_per_elem * ne << "\nSCALARS u double 1\nLOOKUP_TABLE default\n";
    for (int e = 0; e < ne; ++e) {
        const auto c = u.element(e);
        for (int q = 0; q < nodes_per_elem; ++q) {
            double uh = 0.0;
            for (int j = 0; j < ndof; ++j) uh += c[j] * phi[q * ndof + j];
            os << uh << '\n';
        }
    }
}

} // namespace ddg2d
