#include "ddg2d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

namespace ddg2d {

double Mesh::element_area(int e) const {
    const auto& t = elements[e];
    const Vec2 a = vertices[t[0]], b = vertices[t[1]], c = vertices[t[2]];
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double Mesh::min_h() const {
    double m = h_K.front();
    for (double h : h_K) m = std::fmin(m, h);
    return m;
}

double Mesh::total_area() const {
    double a = 0.0;
    for (int e = 0; e < n_elements(); ++e) a += element_area(e);
    return a;
}

namespace {

double inscribed_diameter(Vec2 a, Vec2 b, Vec2 c) {
    const double area = 0.5 * std::fabs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    const double per = (b - a).norm() + (c - b).norm() + (a - c).norm();
    return 4.0 * area / per;
}

struct SideEdge {
    int edge = -1;
    double lo = 0.0, hi = 0.0; // coordinate interval along the side
};

void pair_periodic_side(std::vector<SideEdge>& from, std::vector<SideEdge>& to, Vec2 shift,
                        double tol, Mesh& mesh, std::vector<int>& remove) {
    auto by_lo = [](const SideEdge& a, const SideEdge& b) { return a.lo < b.lo; };
    std::sort(from.begin(), from.end(), by_lo);
    std::sort(to.begin(), to.end(), by_lo);
    if (from.size() != to.size())
        throw std::runtime_error("periodic pairing: opposite sides have unequal edge counts");
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (std::fabs(from[i].lo - to[i].lo) > tol || std::fabs(from[i].hi - to[i].hi) > tol)
            throw std::runtime_error("periodic pairing: edge intervals do not line up");
        Edge& keep = mesh.edges[from[i].edge];
        const Edge& drop = mesh.edges[to[i].edge];
        keep.neighbor = drop.owner;
        keep.periodic = true;
        keep.shift = shift;
        keep.h_e = 0.5 * (mesh.h_K[keep.owner] + mesh.h_K[drop.owner]);
        remove.push_back(to[i].edge);
    }
}

} // namespace

Mesh build_uniform_mesh(Vec2 origin, double L, int n_per_side, BoundaryKind kind) {
    if (n_per_side < 1) throw std::invalid_argument("build_uniform_mesh: n_per_side must be >= 1");
    if (!(L > 0.0)) throw std::invalid_argument("build_uniform_mesh: L must be > 0");

    Mesh mesh;
    mesh.origin = origin;
    mesh.side_length = L;
    mesh.n_per_side = n_per_side;
    mesh.boundary = kind;

    const int n = n_per_side;
    const double h = L / n;
    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };

    mesh.vertices.resize(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices[vid(i, j)] = {origin.x + i * h, origin.y + j * h};

    // Every square is split along the (i+1,j)-(i,j+1) diagonal. This is the
    // pattern that reproduces the paper-style error magnitudes; alternating
    // the diagonal direction leaves convergence orders intact but shifts
    // absolute errors by ~3x on these problems.
    mesh.elements.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
            mesh.elements.push_back({a, b, d});
            mesh.elements.push_back({b, c, d});
        }
    }

    mesh.h_K.resize(mesh.elements.size());
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto& t = mesh.elements[e];
        mesh.h_K[e] =
            inscribed_diameter(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
    }

    // Edge table keyed by the sorted vertex pair; the first (= lowest-index)
    // element to reach an edge owns it.
    std::map<std::pair<int, int>, int> index;
    mesh.element_edges.resize(mesh.elements.size());
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto& t = mesh.elements[e];
        for (int le = 0; le < 3; ++le) {
            const int v0 = t[le], v1 = t[(le + 1) % 3];
            const auto key = std::minmax(v0, v1);
            auto it = index.find(key);
            if (it == index.end()) {
                Edge edge;
                edge.vertices = {v0, v1};
                edge.owner = e;
                const Vec2 p0 = mesh.vertices[v0], p1 = mesh.vertices[v1];
                edge.length = (p1 - p0).norm();
                edge.normal = {(p1.y - p0.y) / edge.length, -(p1.x - p0.x) / edge.length};
                mesh.edges.push_back(edge);
                it = index.emplace(key, mesh.n_edges() - 1).first;
            } else {
                Edge& edge = mesh.edges[it->second];
                if (edge.neighbor >= 0)
                    throw std::runtime_error("build_uniform_mesh: edge with >2 incident elements");
                edge.neighbor = e;
            }
            mesh.element_edges[e][le] = it->second;
        }
    }

    for (Edge& edge : mesh.edges) {
        edge.h_e = edge.neighbor >= 0 ? 0.5 * (mesh.h_K[edge.owner] + mesh.h_K[edge.neighbor])
                                      : mesh.h_K[edge.owner];
    }

    if (kind == BoundaryKind::periodic) {
        const double tol = 1e-12 * L;
        std::vector<SideEdge> left, right, bottom, top;
        for (int i = 0; i < mesh.n_edges(); ++i) {
            const Edge& edge = mesh.edges[i];
            if (edge.neighbor >= 0) continue;
            const Vec2 p0 = mesh.vertices[edge.vertices[0]], p1 = mesh.vertices[edge.vertices[1]];
            SideEdge se;
            se.edge = i;
            if (std::fabs(p0.x - origin.x) < tol && std::fabs(p1.x - origin.x) < tol) {
                se.lo = std::fmin(p0.y, p1.y);
                se.hi = std::fmax(p0.y, p1.y);
                left.push_back(se);
            } else if (std::fabs(p0.x - origin.x - L) < tol && std::fabs(p1.x - origin.x - L) < tol) {
                se.lo = std::fmin(p0.y, p1.y);
                se.hi = std::fmax(p0.y, p1.y);
                right.push_back(se);
            } else if (std::fabs(p0.y - origin.y) < tol && std::fabs(p1.y - origin.y) < tol) {
                se.lo = std::fmin(p0.x, p1.x);
                se.hi = std::fmax(p0.x, p1.x);
                bottom.push_back(se);
            } else if (std::fabs(p0.y - origin.y - L) < tol && std::fabs(p1.y - origin.y - L) < tol) {
                se.lo = std::fmin(p0.x, p1.x);
                se.hi = std::fmax(p0.x, p1.x);
                top.push_back(se);
            } else {
                throw std::runtime_error("build_uniform_mesh: boundary edge off the square sides");
            }
        }

        std::vector<int> remove;
        const double match_tol = 1e-9 * L;
        pair_periodic_side(left, right, {L, 0.0}, match_tol, mesh, remove);
        pair_periodic_side(bottom, top, {0.0, L}, match_tol, mesh, remove);

        // Compact the edge list, dropping the merged-away partner records.
        // element_edges entries pointing at a dropped record are redirected
        // to the surviving twin.
        std::vector<int> remap(mesh.edges.size());
        std::vector<char> dead(mesh.edges.size(), 0);
        for (int i : remove) dead[i] = 1;
        std::vector<int> twin(mesh.edges.size(), -1);
        for (int i = 0; i < mesh.n_edges(); ++i) twin[i] = i;
        auto link = [&](const std::vector<SideEdge>& a, const std::vector<SideEdge>& b) {
            for (std::size_t s = 0; s < a.size(); ++s) twin[b[s].edge] = a[s].edge;
        };
        link(left, right);
        link(bottom, top);

        std::vector<Edge> compacted;
        compacted.reserve(mesh.edges.size() - remove.size());
        for (int i = 0; i < mesh.n_edges(); ++i) {
            if (!dead[i]) {
                remap[i] = static_cast<int>(compacted.size());
                compacted.push_back(mesh.edges[i]);
            }
        }
        for (int i = 0; i < mesh.n_edges(); ++i)
            if (dead[i]) remap[i] = remap[twin[i]];
        for (auto& ee : mesh.element_edges)
            for (int& idx : ee) idx = remap[idx];
        mesh.edges = std::move(compacted);
    }

    return mesh;
}

void write_mesh_csv(const Mesh& mesh, const std::string& vertices_path,
                    const std::string& elements_path) {
    std::ofstream vf(vertices_path);
    if (!vf) throw std::runtime_error("write_mesh_csv: cannot open " + vertices_path);
    vf.precision(17);
    vf << "x,y\n";
    for (const Vec2& v : mesh.vertices) vf << v.x << ',' << v.y << '\n';

    std::ofstream ef(elements_path);
    if (!ef) throw std::runtime_error("write_mesh_csv: cannot open " + elements_path);
    ef << "v0,v1,v2\n";
    for (const auto& t : mesh.elements) ef << t[0] << ',' << t[1] << ',' << t[2] << '\n';
}

} // namespace ddg2d
