// Text formats. A matrix file is a "GF p e modulus" header, a "SHAPE m n"
// line, then matrices one row per line with blank-line separators; '#'
// starts a comment. Ferrers code files replace SHAPE with "DIAGRAM 4,4,2".
// Elements print as decimal integers under the digit encoding of gf.hpp.

#ifndef FERROCODE_IO_HPP
#define FERROCODE_IO_HPP

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fdcodes.hpp"

namespace ferrocode {

inline std::string field_header(const Field& f) {
    std::ostringstream os;
    os << "GF " << f.characteristic() << " " << f.degree() << " " << f.modulus_value();
    return os.str();
}

inline FieldPtr parse_field_header(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    std::uint64_t p = 0, e = 0, modval = 0;
    if (!(is >> tag >> p >> e >> modval) || tag != "GF")
        throw error(errc::parse_error, "expected 'GF p e modulus' header");
    std::string rest;
    if (is >> rest) throw error(errc::parse_error, "trailing text after GF header");
    if (p < 2 || e < 1) throw error(errc::parse_error, "bad GF header values");
    std::vector<std::uint32_t> digits(e + 1, 0);
    for (std::size_t i = 0; i <= e; ++i) {
        digits[i] = static_cast<std::uint32_t>(modval % p);
        modval /= p;
    }
    if (modval != 0) throw error(errc::parse_error, "modulus value too large for degree");
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), digits);
}

struct MatrixFile {
    FieldPtr field;
    std::size_t rows = 0, cols = 0;
    std::optional<FerrersDiagram> diagram;  // present for DIAGRAM files
    std::vector<Matrix> matrices;
};

namespace detail {

inline std::string strip_line(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    return line.substr(start);
}

}  // namespace detail

inline MatrixFile read_matrix_file(std::istream& in) {
    MatrixFile out;
    std::string raw;

    // header: GF line, then SHAPE or DIAGRAM
    while (std::getline(in, raw)) {
        std::string line = detail::strip_line(raw);
        if (line.empty()) continue;
        out.field = parse_field_header(line);
        break;
    }
    if (!out.field) throw error(errc::parse_error, "missing GF header");

    bool have_shape = false;
    while (std::getline(in, raw)) {
        std::string line = detail::strip_line(raw);
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "SHAPE") {
            if (!(is >> out.rows >> out.cols))
                throw error(errc::parse_error, "expected 'SHAPE m n'");
        } else if (tag == "DIAGRAM") {
            std::string spec;
            if (!(is >> spec)) throw error(errc::parse_error, "expected 'DIAGRAM r1,r2,...'");
            out.diagram = FerrersDiagram::parse(spec);
            out.rows = out.diagram->rows();
            out.cols = out.diagram->cols();
        } else {
            throw error(errc::parse_error, "expected SHAPE or DIAGRAM after the GF header");
        }
        have_shape = true;
        break;
    }
    if (!have_shape) throw error(errc::parse_error, "missing SHAPE or DIAGRAM line");

    // matrices: out.rows lines each, separated by blank lines
    std::vector<std::vector<std::uint32_t>> current;
    auto flush = [&]() {
        if (current.empty()) return;
        if (current.size() != out.rows)
            throw error(errc::parse_error, "matrix row count differs from header");
        out.matrices.push_back(Matrix::from_rows(out.field, current));
        current.clear();
    };
    while (std::getline(in, raw)) {
        std::string line = detail::strip_line(raw);
        if (line.empty()) {
            flush();
            continue;
        }
        std::istringstream is(line);
        std::vector<std::uint32_t> row;
        std::uint64_t x;
        while (is >> x) {
            if (x >= out.field->size())
                throw error(errc::parse_error, "entry not below the field size");
            row.push_back(static_cast<std::uint32_t>(x));
        }
        if (!is.eof()) throw error(errc::parse_error, "non-numeric matrix entry");
        if (row.size() != out.cols)
            throw error(errc::parse_error, "matrix column count differs from header");
        current.push_back(std::move(row));
    }
    flush();
    return out;
}

inline void write_matrix_file(std::ostream& os, const FieldPtr& field, std::size_t rows,
                              std::size_t cols, const std::vector<Matrix>& matrices) {
    os << field_header(*field) << "\n";
    os << "SHAPE " << rows << " " << cols << "\n";
    for (const auto& m : matrices) {
        os << "\n";
        os << m.to_string();
    }
}

inline void write_code_file(std::ostream& os, const RankMetricCode& c) {
    write_matrix_file(os, c.field(), c.row_dim(), c.col_dim(), c.words());
}

inline void write_ferrers_code_file(std::ostream& os, const FerrersCode& c) {
    os << field_header(*c.field()) << "\n";
    os << "DIAGRAM " << c.diagram().to_string() << "\n";
    for (const auto& m : c.code().words()) {
        os << "\n";
        os << m.to_string();
    }
}

inline RankMetricCode to_code(const MatrixFile& f) {
    return RankMetricCode(f.field, f.rows, f.cols, f.matrices);
}

inline FerrersCode to_ferrers_code(const MatrixFile& f,
                                   std::optional<unsigned> declared_d = std::nullopt) {
    if (!f.diagram) throw error(errc::parse_error, "file has no DIAGRAM line");
    return FerrersCode(*f.diagram, f.field, f.matrices, declared_d);
}

}  // namespace ferrocode

#endif
