#pragma once

// Planar triangulations with tagged boundary edges and boundary node normals.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "splitfem/data/cylinder_g1.hpp"
#include "splitfem/errors.hpp"

namespace splitfem {

using Point = Eigen::Vector2d;

/// Boundary tags used by the built-in generators.
namespace tags {
inline constexpr int bottom = 1;
inline constexpr int right = 2;
inline constexpr int top = 3;
inline constexpr int left = 4;

inline constexpr int inflow = 1;
inline constexpr int outflow = 2;
inline constexpr int walls = 3;
inline constexpr int cylinder = 4;
}  // namespace tags

struct BoundaryEdge {
    std::array<int, 2> v;
    int tag = 0;
    bool operator==(const BoundaryEdge&) const = default;
};

/// Undirected mesh edge with its one or two adjacent triangles (-1 if absent).
struct Edge {
    std::array<int, 2> v;  // v[0] < v[1]
    std::array<int, 2> triangles{-1, -1};
    bool on_boundary() const { return triangles[1] < 0; }
};

/// Immutable planar triangulation.
///
/// Construction validates indices, requires counterclockwise triangles, and
/// checks that the listed boundary edges are exactly the edges owned by one
/// triangle. Boundary edges are stored oriented with the domain on their left,
/// so (dy, -dx) is the outward direction.
class Mesh {
public:
    Mesh() = default;

    Mesh(std::vector<Point> vertices, std::vector<std::array<int, 3>> triangles,
         std::vector<BoundaryEdge> boundary_edges)
        : vertices_(std::move(vertices)),
          triangles_(std::move(triangles)),
          boundary_edges_(std::move(boundary_edges)) {
        validate_and_index();
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_edges_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<int, Point>& node_normals() const { return node_normals_; }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }

    /// Index into edges() of the edge joining a and b, or -1.
    int edge_index(int a, int b) const {
        auto it = edge_lookup_.find(edge_key(a, b));
        return it == edge_lookup_.end() ? -1 : it->second;
    }

    /// Edge index for each triangle side; side k joins local vertices k and k+1.
    const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[t]; }

    /// Triangle owning boundary edge `i` of boundary_edges().
    int boundary_owner(int i) const { return boundary_owner_[i]; }

    double signed_area(int t) const {
        const auto& tri = triangles_[t];
        return signed_area(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]);
    }

    static double signed_area(const Point& a, const Point& b, const Point& c) {
        return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
    }

    double edge_length(int e) const {
        return (vertices_[edges_[e].v[0]] - vertices_[edges_[e].v[1]]).norm();
    }

    double h_min() const {
        double h = std::numeric_limits<double>::infinity();
        for (int e = 0; e < num_edges(); ++e) h = std::min(h, edge_length(e));
        return h;
    }

    double h_max() const {
        double h = 0.0;
        for (int e = 0; e < num_edges(); ++e) h = std::max(h, edge_length(e));
        return h;
    }

    /// Unit outward normal of boundary edge `i`.
    Point boundary_edge_normal(int i) const {
        const auto& be = boundary_edges_[i];
        Point d = vertices_[be.v[1]] - vertices_[be.v[0]];
        return Point(d.y(), -d.x()).normalized();
    }

    bool has_node_normals() const { return !node_normals_.empty(); }

    /// Copy of this mesh carrying the given node normals.
    Mesh with_node_normals(std::map<int, Point> normals) const {
        Mesh m = *this;
        for (const auto& [v, n] : normals) {
            if (v < 0 || v >= num_vertices())
                throw InvalidArgument("node normal for nonexistent vertex " + std::to_string(v));
            if (std::abs(n.norm() - 1.0) > 1e-12)
                throw InvalidArgument("node normal at vertex " + std::to_string(v) + " is not unit length");
        }
        m.node_normals_ = std::move(normals);
        return m;
    }

    /// Number of closed boundary loops; throws MalformedBoundary if the
    /// boundary edges do not decompose into simple closed loops.
    int boundary_loop_count() const {
        std::unordered_map<int, int> next;
        for (const auto& be : boundary_edges_) {
            if (!next.emplace(be.v[0], be.v[1]).second)
                throw MalformedBoundary("boundary vertex " + std::to_string(be.v[0]) +
                                        " starts more than one boundary edge");
        }
        std::unordered_map<int, bool> seen;
        int loops = 0;
        for (const auto& be : boundary_edges_) {
            if (seen[be.v[0]]) continue;
            ++loops;
            int v = be.v[0];
            while (!seen[v]) {
                seen[v] = true;
                auto it = next.find(v);
                if (it == next.end())
                    throw MalformedBoundary("boundary loop through vertex " + std::to_string(v) +
                                            " is not closed");
                v = it->second;
            }
            if (v != be.v[0])
                throw MalformedBoundary("boundary loops are not simple");
        }
        return loops;
    }

    bool operator==(const Mesh& other) const {
        return vertices_ == other.vertices_ && triangles_ == other.triangles_ &&
               boundary_edges_ == other.boundary_edges_ && node_normals_ == other.node_normals_;
    }

private:
    static std::uint64_t edge_key(int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }

    void validate_and_index() {
        const int nv = num_vertices();
        for (int t = 0; t < num_triangles(); ++t) {
            const auto& tri = triangles_[t];
            for (int k = 0; k < 3; ++k) {
                if (tri[k] < 0 || tri[k] >= nv)
                    throw MalformedMesh("triangle " + std::to_string(t) + " references vertex " +
                                        std::to_string(tri[k]) + " outside [0, " +
                                        std::to_string(nv) + ")");
            }
            if (!(signed_area(t) > 0.0))
                throw MalformedMesh("triangle " + std::to_string(t) +
                                    " is not counterclockwise with positive area");
        }

        edges_.clear();
        edge_lookup_.clear();
        triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
        for (int t = 0; t < num_triangles(); ++t) {
            const auto& tri = triangles_[t];
            for (int k = 0; k < 3; ++k) {
                int a = tri[k], b = tri[(k + 1) % 3];
                auto [it, inserted] = edge_lookup_.emplace(edge_key(a, b), num_edges());
                if (inserted) {
                    edges_.push_back(Edge{{std::min(a, b), std::max(a, b)}, {t, -1}});
                } else {
                    Edge& e = edges_[it->second];
                    if (e.triangles[1] >= 0)
                        throw MalformedMesh("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                            ") is shared by more than two triangles");
                    e.triangles[1] = t;
                }
                triangle_edges_[t][k] = it->second;
            }
        }

        std::vector<char> listed(edges_.size(), 0);
        boundary_owner_.assign(boundary_edges_.size(), -1);
        for (std::size_t i = 0; i < boundary_edges_.size(); ++i) {
            auto& be = boundary_edges_[i];
            if (be.v[0] < 0 || be.v[0] >= nv || be.v[1] < 0 || be.v[1] >= nv)
                throw MalformedMesh("boundary edge " + std::to_string(i) + " references a vertex outside [0, " +
                                    std::to_string(nv) + ")");
            int e = edge_index(be.v[0], be.v[1]);
            if (e < 0)
                throw MalformedMesh("boundary edge " + std::to_string(i) + " is not an edge of any triangle");
            if (!edges_[e].on_boundary())
                throw MalformedMesh("boundary edge " + std::to_string(i) + " is shared by two triangles");
            if (listed[e]) throw MalformedMesh("boundary edge " + std::to_string(i) + " is listed twice");
            listed[e] = 1;
            const int t = edges_[e].triangles[0];
            boundary_owner_[i] = t;
            // Orient counterclockwise with respect to the owning triangle.
            const auto& tri = triangles_[t];
            for (int k = 0; k < 3; ++k) {
                if (tri[k] == be.v[1] && tri[(k + 1) % 3] == be.v[0]) std::swap(be.v[0], be.v[1]);
            }
        }
        for (int e = 0; e < num_edges(); ++e) {
            if (edges_[e].on_boundary() && !listed[e])
                throw MalformedMesh("edge (" + std::to_string(edges_[e].v[0]) + ", " +
                                    std::to_string(edges_[e].v[1]) +
                                    ") lies on the mesh boundary but is not a boundary edge");
        }
    }

    std::vector<Point> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<BoundaryEdge> boundary_edges_;
    std::map<int, Point> node_normals_;

    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, int> edge_lookup_;
    std::vector<std::array<int, 3>> triangle_edges_;
    std::vector<int> boundary_owner_;
};

namespace detail {

inline Mesh lattice_square(int m, const std::vector<double>& coords) {
    const int n1 = m + 1;
    std::vector<Point> verts;
    verts.reserve(static_cast<std::size_t>(n1) * n1);
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m; ++i) verts.emplace_back(coords[i], coords[j]);
    auto id = [n1](int i, int j) { return j * n1 + i; };
    std::vector<std::array<int, 3>> tris;
    tris.reserve(2 * static_cast<std::size_t>(m) * m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    std::vector<BoundaryEdge> bnd;
    bnd.reserve(4 * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bnd.push_back({{id(i, 0), id(i + 1, 0)}, tags::bottom});
    for (int j = 0; j < m; ++j) bnd.push_back({{id(m, j), id(m, j + 1)}, tags::right});
    for (int i = m; i > 0; --i) bnd.push_back({{id(i, m), id(i - 1, m)}, tags::top});
    for (int j = m; j > 0; --j) bnd.push_back({{id(0, j), id(0, j - 1)}, tags::left});
    return Mesh(std::move(verts), std::move(tris), std::move(bnd));
}

}  // namespace detail

/// Uniform triangulation of the unit square with m cells per side.
///
/// Every lattice cell is split along its lower-left to upper-right diagonal.
/// Boundary tags: bottom 1, right 2, top 3, left 4.
inline Mesh gen_unit_square(int m) {
    if (m < 1) throw InvalidArgument("gen_unit_square: need at least one cell per side");
    std::vector<double> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = static_cast<double>(i) / m;
    c[m] = 1.0;
    return detail::lattice_square(m, c);
}

/// Sinusoidal grading s(xi) = xi - beta sin(2 pi xi) / (2 pi), clustering towards 0 and 1.
inline double stretch_map(double xi, double beta) {
    return xi - beta * std::sin(2.0 * std::numbers::pi * xi) / (2.0 * std::numbers::pi);
}

/// Unit square lattice graded towards all four sides.
inline Mesh gen_stretched_square(int m, double beta) {
    if (m < 2) throw InvalidArgument("gen_stretched_square: need at least two cells per side");
    if (!(beta >= 0.0 && beta < 1.0)) throw InvalidArgument("gen_stretched_square: beta must lie in [0, 1)");
    std::vector<double> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = stretch_map(static_cast<double>(i) / m, beta);
    c[0] = 0.0;
    c[m] = 1.0;
    return detail::lattice_square(m, c);
}

/// Ratio of largest to smallest lattice spacing produced by gen_stretched_square.
inline double stretch_spacing_ratio(int m, double beta) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = stretch_map(static_cast<double>(i + 1) / m, beta) - stretch_map(static_cast<double>(i) / m, beta);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi / lo;
}

/// Stretching strength giving the requested max/min spacing ratio (bisection).
inline double stretch_beta_for_ratio(int m, double ratio) {
    if (m < 2 || ratio < 1.0) throw InvalidArgument("stretch_beta_for_ratio: need m >= 2 and ratio >= 1");
    double lo = 0.0, hi = 0.999;
    if (stretch_spacing_ratio(m, hi) < ratio) throw InvalidArgument("stretch_beta_for_ratio: ratio not attainable");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (stretch_spacing_ratio(m, mid) < ratio ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Splits every triangle into n^2 similar triangles.
///
/// New boundary nodes stay on the straight boundary edges; tags are
/// inherited. Original vertices keep their indices, followed by edge nodes
/// (edge by edge) and then triangle-interior nodes.
inline Mesh refine_uniform(const Mesh& mesh, int n) {
    if (n < 1) throw InvalidArgument("refine_uniform: split factor must be >= 1");
    if (n == 1) return mesh;
    const auto& V = mesh.vertices();
    std::vector<Point> verts(V.begin(), V.end());
    const int nv = mesh.num_vertices();
    // Edge nodes, ordered from edge.v[0] to edge.v[1].
    for (const auto& e : mesh.edges()) {
        for (int k = 1; k < n; ++k) {
            double s = static_cast<double>(k) / n;
            verts.push_back((1.0 - s) * V[e.v[0]] + s * V[e.v[1]]);
        }
    }
    auto edge_node = [&](int a, int b, int k) {
        // k-th node (0..n) walking from a to b.
        if (k == 0) return a;
        if (k == n) return b;
        int e = mesh.edge_index(a, b);
        const auto& ed = mesh.edges()[e];
        int pos = (ed.v[0] == a) ? k : n - k;
        return nv + e * (n - 1) + (pos - 1);
    };

    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<std::size_t>(mesh.num_triangles()) * n * n);
    std::vector<int> local((n + 1) * (n + 1), -1);
    auto lid = [n](int i, int j) { return j * (n + 1) + i; };
    for (const auto& tri : mesh.triangles()) {
        const Point& a = V[tri[0]];
        const Point& b = V[tri[1]];
        const Point& c = V[tri[2]];
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i + j <= n; ++i) {
                int id;
                if (j == 0) id = edge_node(tri[0], tri[1], i);
                else if (i == 0) id = edge_node(tri[0], tri[2], j);
                else if (i + j == n) id = edge_node(tri[1], tri[2], j);
                else {
                    id = static_cast<int>(verts.size());
                    verts.push_back(a + (static_cast<double>(i) / n) * (b - a) + (static_cast<double>(j) / n) * (c - a));
                }
                local[lid(i, j)] = id;
            }
        }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i + j < n; ++i) {
                tris.push_back({local[lid(i, j)], local[lid(i + 1, j)], local[lid(i, j + 1)]});
                if (i + j + 2 <= n)
                    tris.push_back({local[lid(i + 1, j)], local[lid(i + 1, j + 1)], local[lid(i, j + 1)]});
            }
        }
    }

    std::vector<BoundaryEdge> bnd;
    bnd.reserve(mesh.boundary_edges().size() * n);
    for (const auto& be : mesh.boundary_edges()) {
        for (int k = 0; k < n; ++k)
            bnd.push_back({{edge_node(be.v[0], be.v[1], k), edge_node(be.v[0], be.v[1], k + 1)}, be.tag});
    }
    return Mesh(std::move(verts), std::move(tris), std::move(bnd));
}

/// Populates boundary node normals: the normalized sum of the two adjacent
/// boundary-edge outward normals (the angle bisector of the edge normals).
inline Mesh compute_node_normals(const Mesh& mesh) {
    std::map<int, Point> sum;
    std::map<int, int> count;
    for (int i = 0; i < static_cast<int>(mesh.boundary_edges().size()); ++i) {
        const Point n = mesh.boundary_edge_normal(i);
        for (int v : mesh.boundary_edges()[i].v) {
            auto [it, inserted] = sum.emplace(v, Point::Zero());
            it->second += n;
            ++count[v];
        }
    }
    for (auto& [v, n] : sum) {
        if (count[v] != 2)
            throw MalformedBoundary("boundary vertex " + std::to_string(v) + " has " + std::to_string(count[v]) +
                                    " adjacent boundary edges, expected 2");
        const double len = n.norm();
        if (len < 1e-14)
            throw MalformedBoundary("boundary vertex " + std::to_string(v) + " has opposing edge normals");
        n /= len;
    }
    return mesh.with_node_normals(std::move(sum));
}

// ---------------------------------------------------------------------------
// Text format:
//   mesh 2d triangle
//   vertices N      then N lines "x y"
//   triangles T     then T lines "i j k" (0-based)
//   boundary_edges B then B lines "i j tag"
// '#' starts a comment. Blank lines are ignored.

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-empty, comment-stripped line; false at end of input.
    bool next(std::istringstream& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.clear();
            out.str(line);
            return true;
        }
        return false;
    }

    std::istringstream require(const std::string& what) {
        std::istringstream ss;
        if (!next(ss)) throw ParseError(line_no_ + 1, "unexpected end of input, expected " + what);
        return ss;
    }

    std::size_t line() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

inline long read_count(LineReader& r, const std::string& keyword) {
    auto ss = r.require("'" + keyword + " <count>'");
    std::string kw;
    long n = -1;
    if (!(ss >> kw >> n) || kw != keyword || n < 0)
        throw ParseError(r.line(), "expected '" + keyword + " <count>'");
    std::string extra;
    if (ss >> extra) throw ParseError(r.line(), "trailing text after '" + keyword + "' header");
    return n;
}

template <typename... T>
void read_row(LineReader& r, const std::string& what, T&... values) {
    auto ss = r.require(what);
    if (!((ss >> values) && ...)) throw ParseError(r.line(), "malformed " + what);
    std::string extra;
    if (ss >> extra) throw ParseError(r.line(), "trailing text in " + what);
}

}  // namespace detail

inline Mesh read_mesh(std::istream& in) {
    detail::LineReader r(in);
    {
        auto ss = r.require("header 'mesh 2d triangle'");
        std::string a, b, c, extra;
        if (!(ss >> a >> b >> c) || a != "mesh" || b != "2d" || c != "triangle" || (ss >> extra))
            throw ParseError(r.line(), "expected header 'mesh 2d triangle'");
    }
    const long nv = detail::read_count(r, "vertices");
    std::vector<Point> verts(nv);
    for (long i = 0; i < nv; ++i) {
        double x, y;
        detail::read_row(r, "vertex line", x, y);
        verts[i] = Point(x, y);
    }
    const long nt = detail::read_count(r, "triangles");
    std::vector<std::array<int, 3>> tris(nt);
    for (long i = 0; i < nt; ++i) detail::read_row(r, "triangle line", tris[i][0], tris[i][1], tris[i][2]);
    const long nb = detail::read_count(r, "boundary_edges");
    std::vector<BoundaryEdge> bnd(nb);
    for (long i = 0; i < nb; ++i) detail::read_row(r, "boundary edge line", bnd[i].v[0], bnd[i].v[1], bnd[i].tag);
    std::istringstream extra;
    if (r.next(extra)) throw ParseError(r.line(), "unexpected content after boundary edges");
    return Mesh(std::move(verts), std::move(tris), std::move(bnd));
}

inline void write_mesh(const Mesh& mesh, std::ostream& out) {
    out << "mesh 2d triangle\n";
    out << "vertices " << mesh.num_vertices() << '\n';
    out << std::setprecision(17);
    for (const auto& p : mesh.vertices()) out << p.x() << ' ' << p.y() << '\n';
    out << "triangles " << mesh.num_triangles() << '\n';
    for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << "boundary_edges " << mesh.boundary_edges().size() << '\n';
    for (const auto& be : mesh.boundary_edges()) out << be.v[0] << ' ' << be.v[1] << ' ' << be.tag << '\n';
}

inline Mesh load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open mesh file");
    try {
        return read_mesh(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

inline void save_mesh(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open mesh file for writing");
    write_mesh(mesh, out);
    if (!out) throw IoError(path, "write failed");
}

/// The bundled channel-with-cylinder mesh (486 vertices, 814 triangles).
/// Tags: inflow 1 (x = 0), outflow 2 (x = 2.2), walls 3, cylinder 4.
inline Mesh gen_cylinder_channel() {
    std::istringstream in(data::cylinder_g1_mesh);
    return read_mesh(in);
}

}  // namespace splitfem
