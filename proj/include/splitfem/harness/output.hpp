#pragma once

// Time series, CSV and legacy VTK output.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <string>
#include <vector>

#include "splitfem/assembly.hpp"
#include "splitfem/elements.hpp"
#include "splitfem/errors.hpp"

namespace splitfem::harness {

/// Named columns sampled at strictly increasing times.
class FunctionalSeries {
public:
    FunctionalSeries() = default;
    explicit FunctionalSeries(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void push(double t, std::vector<double> row) {
        if (row.size() != columns_.size()) throw InvalidArgument("FunctionalSeries: row width mismatch");
        if (!times_.empty() && !(t > times_.back()))
            throw InvalidArgument("FunctionalSeries: timestamps must increase strictly");
        times_.push_back(t);
        rows_.push_back(std::move(row));
    }

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (columns_[i] == name) return static_cast<int>(i);
        throw InvalidArgument("FunctionalSeries: no column '" + name + "'");
    }

    std::vector<double> values(const std::string& name) const {
        const int c = column(name);
        std::vector<double> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r[c]);
        return out;
    }

private:
    std::vector<std::string> columns_;
    std::vector<double> times_;
    std::vector<std::vector<double>> rows_;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

inline std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path);
    if (!os) throw IoError(path.string(), "cannot open for writing");
    os << std::setprecision(12);
    return os;
}

}  // namespace detail

/// Header row, then one row per sample.
inline void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    auto os = detail::open_output(path);
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << detail::csv_field(header[i]);
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    }
    if (!os) throw IoError(path.string(), "write failed");
}

inline void write_csv(const std::filesystem::path& path, const FunctionalSeries& series) {
    std::vector<std::string> header{"t"};
    header.insert(header.end(), series.columns().begin(), series.columns().end());
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < series.size(); ++i) {
        std::vector<double> r{series.times()[i]};
        r.insert(r.end(), series.rows()[i].begin(), series.rows()[i].end());
        rows.push_back(std::move(r));
    }
    write_csv(path, header, rows);
}

/// Vertex values of velocity, pressure, vorticity and divergence.
struct VertexFields {
    std::vector<double> u, v, p, vorticity, divergence;
};

/// Samples the fields at mesh vertices. Derivatives are averaged over the
/// triangles sharing a vertex.
inline VertexFields vertex_fields(const FiniteElementSpace& space, const Vector& u, const Vector& p) {
    const Mesh& mesh = space.mesh();
    const int N = space.num_scalar_dofs();
    if (u.size() != 2 * N || p.size() != N) throw InvalidArgument("vertex_fields: coefficient size mismatch");
    const int nv = mesh.num_vertices();
    VertexFields out;
    out.u.assign(nv, 0.0);
    out.v.assign(nv, 0.0);
    out.p.assign(nv, 0.0);
    out.vorticity.assign(nv, 0.0);
    out.divergence.assign(nv, 0.0);
    std::vector<int> count(nv, 0);
    const std::array<Point, 3> rv{Point(0, 0), Point(1, 0), Point(0, 1)};
    std::array<Eigen::MatrixX2d, 3> grads;
    for (int k = 0; k < 3; ++k) grads[k] = space.reference().grad(rv[k]);
    const int nb = space.nodes_per_cell();
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const int* cd = space.cell_dofs(t);
        const Eigen::Matrix2d& jt = space.inv_jacobian_t(t);
        for (int k = 0; k < 3; ++k) {
            const int vtx = mesh.triangles()[t][k];
            Eigen::Vector2d gu = Eigen::Vector2d::Zero(), gv = Eigen::Vector2d::Zero();
            for (int i = 0; i < nb; ++i) {
                gu += u(cd[i]) * grads[k].row(i).transpose();
                gv += u(N + cd[i]) * grads[k].row(i).transpose();
            }
            gu = jt * gu;
            gv = jt * gv;
            out.vorticity[vtx] += gv.x() - gu.y();
            out.divergence[vtx] += gu.x() + gv.y();
            ++count[vtx];
            out.u[vtx] = u(cd[k]);
            out.v[vtx] = u(N + cd[k]);
            out.p[vtx] = p(cd[k]);
        }
    }
    for (int i = 0; i < nv; ++i) {
        if (count[i] == 0) continue;
        out.vorticity[i] /= count[i];
        out.divergence[i] /= count[i];
    }
    return out;
}

/// Legacy ASCII VTK unstructured grid on the mesh vertices.
inline void write_vtk(const std::filesystem::path& path, const FiniteElementSpace& space, const Vector& u,
                      const Vector& p, double t = 0.0) {
    const Mesh& mesh = space.mesh();
    const VertexFields f = vertex_fields(space, u, p);
    auto os = detail::open_output(path);
    os << "# vtk DataFile Version 3.0\n";
    os << "splitfem t=" << t << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.num_vertices() << " double\n";
    for (const auto& x : mesh.vertices()) os << x.x() << ' ' << x.y() << " 0\n";
    os << "CELLS " << mesh.num_triangles() << ' ' << 4 * mesh.num_triangles() << '\n';
    for (const auto& tri : mesh.triangles()) os << "3 " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
    os << "CELL_TYPES " << mesh.num_triangles() << '\n';
    for (int i = 0; i < mesh.num_triangles(); ++i) os << "5\n";
    os << "POINT_DATA " << mesh.num_vertices() << '\n';
    os << "VECTORS velocity double\n";
    for (int i = 0; i < mesh.num_vertices(); ++i) os << f.u[i] << ' ' << f.v[i] << " 0\n";
    auto scalar = [&](const char* name, const std::vector<double>& d) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (double x : d) os << x << '\n';
    };
    scalar("u", f.u);
    scalar("v", f.v);
    scalar("p", f.p);
    scalar("vorticity", f.vorticity);
    scalar("divergence", f.divergence);
    if (!os) throw IoError(path.string(), "write failed");
}

}  // namespace splitfem::harness
