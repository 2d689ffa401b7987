#include "dibm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dibm {

std::string format_real(double value)
{
    if (std::isnan(value))
        return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
}

namespace {

std::string vtk_name(std::string name)
{
    for (auto& c : name)
        if (c == ' ')
            c = '_';
    return name;
}

void write_scalars(std::ostream& os, const std::vector<NamedField>& fields, std::size_t expected)
{
    for (const auto& [name, values] : fields) {
        if (values.size() != expected)
            throw std::invalid_argument("VTK field '" + name + "' has the wrong length");
        os << "SCALARS " << vtk_name(name) << " double 1\nLOOKUP_TABLE default\n";
        for (double v : values)
            os << format_real(v) << '\n';
    }
}

std::ofstream open_or_throw(const std::string& path)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return os;
}

} // namespace

void write_vtk(std::ostream& os, const TriMesh& mesh, const std::vector<NamedField>& point_fields,
               const std::vector<NamedField>& cell_fields)
{
    const auto nv = mesh.num_vertices();
    const auto nt = mesh.num_triangles();
    os << "# vtk DataFile Version 3.0\n"
       << "dibm triangulation\n"
       << "ASCII\n"
       << "DATASET UNSTRUCTURED_GRID\n"
       << "POINTS " << nv << " double\n";
    for (const auto& p : mesh.vertices())
        os << format_real(p.x) << ' ' << format_real(p.y) << ' ' << format_real(0.0) << '\n';
    os << "CELLS " << nt << ' ' << 4 * nt << '\n';
    for (const auto& t : mesh.triangles())
        os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    os << "CELL_TYPES " << nt << '\n';
    for (std::size_t t = 0; t < nt; ++t)
        os << "5\n";
    if (!point_fields.empty()) {
        os << "POINT_DATA " << nv << '\n';
        write_scalars(os, point_fields, nv);
    }
    if (!cell_fields.empty()) {
        os << "CELL_DATA " << nt << '\n';
        write_scalars(os, cell_fields, nt);
    }
}

void write_vtk(const std::string& path, const TriMesh& mesh, const std::vector<NamedField>& point_fields,
               const std::vector<NamedField>& cell_fields)
{
    auto os = open_or_throw(path);
    write_vtk(os, mesh, point_fields, cell_fields);
}

void write_dual_vtk(std::ostream& os, const DualMesh& dual, const std::vector<NamedField>& box_fields)
{
    std::size_t nfrag = 0;
    for (const auto& box : dual.boxes)
        nfrag += box.size();

    os << "# vtk DataFile Version 3.0\n"
       << "dibm box mesh\n"
       << "ASCII\n"
       << "DATASET POLYDATA\n"
       << "POINTS " << 4 * nfrag << " double\n";
    for (const auto& box : dual.boxes)
        for (const auto& frag : box)
            for (const auto& p : frag.polygon)
                os << format_real(p.x) << ' ' << format_real(p.y) << ' ' << format_real(0.0) << '\n';
    os << "POLYGONS " << nfrag << ' ' << 5 * nfrag << '\n';
    for (std::size_t f = 0; f < nfrag; ++f)
        os << "4 " << 4 * f << ' ' << 4 * f + 1 << ' ' << 4 * f + 2 << ' ' << 4 * f + 3 << '\n';

    std::vector<NamedField> cell_fields;
    std::vector<double> owner;
    owner.reserve(nfrag);
    for (const auto& box : dual.boxes)
        for (const auto& frag : box)
            owner.push_back(frag.vertex);
    cell_fields.emplace_back("box", std::move(owner));
    for (const auto& [name, values] : box_fields) {
        if (values.size() != dual.boxes.size())
            throw std::invalid_argument("box field '" + name + "' must have one value per vertex");
        std::vector<double> expanded;
        expanded.reserve(nfrag);
        for (std::size_t v = 0; v < dual.boxes.size(); ++v)
            expanded.insert(expanded.end(), dual.boxes[v].size(), values[v]);
        cell_fields.emplace_back(name, std::move(expanded));
    }
    os << "CELL_DATA " << nfrag << '\n';
    write_scalars(os, cell_fields, nfrag);
}

void write_dual_vtk(const std::string& path, const DualMesh& dual, const std::vector<NamedField>& box_fields)
{
    auto os = open_or_throw(path);
    write_dual_vtk(os, dual, box_fields);
}

void write_matrix_market(std::ostream& os, const SparseMatrix& matrix)
{
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << matrix.size() << ' ' << matrix.size() << ' ' << matrix.nonzeros() << '\n';
    for (int i = 0; i < matrix.size(); ++i) {
        const auto cols = matrix.row_cols(i);
        const auto vals = matrix.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            os << i + 1 << ' ' << cols[k] + 1 << ' ' << format_real(vals[k]) << '\n';
    }
}

} // namespace dibm
