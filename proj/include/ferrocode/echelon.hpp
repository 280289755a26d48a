// The bridge between subspaces and diagrams: identifying vectors, echelon
// Ferrers forms, and the matrix of free entries carried by an RREF.

#ifndef FERROCODE_ECHELON_HPP
#define FERROCODE_ECHELON_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "ferrers.hpp"
#include "matrix.hpp"

namespace ferrocode {

class IdentifyingVector {
  public:
    explicit IdentifyingVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw error(errc::bad_params, "identifying vector bits must be 0/1");
    }

    // "1100100"
    static IdentifyingVector parse(const std::string& text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw error(errc::parse_error, "identifying vector must be an unspaced bitstring");
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return IdentifyingVector(std::move(bits));
    }

    std::size_t length() const noexcept { return bits_.size(); }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    bool bit(std::size_t j) const { return bits_.at(j) != 0; }

    std::vector<std::size_t> one_positions() const {
        std::vector<std::size_t> pos;
        for (std::size_t j = 0; j < bits_.size(); ++j)
            if (bits_[j]) pos.push_back(j);
        return pos;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s += static_cast<char>('0' + b);
        return s;
    }

    friend bool operator==(const IdentifyingVector& a, const IdentifyingVector& b) {
        return a.bits_ == b.bits_;
    }

  private:
    std::vector<std::uint8_t> bits_;
};

inline IdentifyingVector identifying_vector(const RrefMatrix& r) {
    std::vector<std::uint8_t> bits(r.cols(), 0);
    for (auto c : r.pivot_columns()) bits[c] = 1;
    return IdentifyingVector(std::move(bits));
}

enum class CellKind : std::uint8_t { PinnedZero, PinnedOne, Dot };

// EF(v): pinned ones at the pivot positions of v, pinned zeros left of each
// pivot and in pivot columns, free dots elsewhere. The dots form a Ferrers
// diagram with at most weight(v) rows and at most n-weight(v) columns.
class EchelonFerrersForm {
  public:
    explicit EchelonFerrersForm(IdentifyingVector v) : v_(std::move(v)), n_(v_.length()) {
        pivots_ = v_.one_positions();
        k_ = pivots_.size();
        cells_.assign(k_ * n_, CellKind::PinnedZero);
        for (std::size_t r = 0; r < k_; ++r) {
            cells_[r * n_ + pivots_[r]] = CellKind::PinnedOne;
            for (std::size_t c = pivots_[r] + 1; c < n_; ++c)
                if (!v_.bit(c)) cells_[r * n_ + c] = CellKind::Dot;
        }

        // form columns hosting dots: non-pivot columns right of the first pivot
        for (std::size_t c = 0; c < n_; ++c)
            if (!v_.bit(c) && k_ > 0 && c > pivots_[0]) dot_cols_.push_back(c);

        std::vector<unsigned> row_lengths;
        for (std::size_t r = 0; r < k_; ++r) {
            unsigned len = 0;
            for (std::size_t c = 0; c < n_; ++c)
                if (cells_[r * n_ + c] == CellKind::Dot) ++len;
            if (len > 0) row_lengths.push_back(len);
        }
        diagram_ = row_lengths.empty() ? FerrersDiagram{} : FerrersDiagram(std::move(row_lengths));
    }

    const IdentifyingVector& v() const noexcept { return v_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    const FerrersDiagram& diagram() const noexcept { return diagram_; }

    CellKind cell(std::size_t r, std::size_t c) const {
        if (r >= k_ || c >= n_) throw error(errc::out_of_range, "form cell index");
        return cells_[r * n_ + c];
    }

    // Form column backing diagram column j (diagram columns keep the
    // left-to-right order of the dot-carrying non-pivot columns).
    std::size_t form_column(unsigned diagram_col) const {
        std::size_t b = diagram_.cols();
        if (diagram_col >= b) throw error(errc::out_of_range, "diagram column index");
        // the diagram's columns are the last b entries of dot_cols_
        return dot_cols_[dot_cols_.size() - b + diagram_col];
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < k_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                switch (cells_[r * n_ + c]) {
                    case CellKind::PinnedZero: s += '0'; break;
                    case CellKind::PinnedOne: s += '1'; break;
                    case CellKind::Dot: s += '.'; break;
                }
            }
            s += '\n';
        }
        return s;
    }

  private:
    IdentifyingVector v_;
    std::size_t n_;
    std::size_t k_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<CellKind> cells_;
    FerrersDiagram diagram_;
    std::vector<std::size_t> dot_cols_;
};

inline EchelonFerrersForm echelon_ferrers_form(const IdentifyingVector& v) {
    return EchelonFerrersForm(v);
}

// Free-dot entries keyed by diagram-box cell (row, col).
using FerrersFill = std::map<std::pair<unsigned, unsigned>, std::uint32_t>;

// Reads the entries of R sitting on the dots of EF(v(R)); pinned cells are
// checked against their pinned values. The second component is the a x b
// "matrix associated with the Ferrers diagram": dot entries in place, zeros
// off the dots.
inline std::pair<EchelonFerrersForm, Matrix> extract_ferrers_matrix(const RrefMatrix& r) {
    EchelonFerrersForm ef(identifying_vector(r));
    const Matrix& base = r.base();
    const FerrersDiagram& dia = ef.diagram();
    Matrix fill(r.field(), dia.rows(), dia.cols());
    for (std::size_t row = 0; row < ef.k(); ++row) {
        for (std::size_t col = 0; col < ef.n(); ++col) {
            std::uint32_t val = base.at(row, col);
            switch (ef.cell(row, col)) {
                case CellKind::PinnedZero:
                    if (val != 0)
                        throw error(errc::pinned_mismatch, "nonzero entry at pinned zero cell");
                    break;
                case CellKind::PinnedOne:
                    if (val != 1)
                        throw error(errc::pinned_mismatch, "pivot entry is not one");
                    break;
                case CellKind::Dot:
                    break;
            }
        }
    }
    for (unsigned dr = 0; dr < dia.rows(); ++dr)
        for (unsigned dc = 0; dc < dia.cols(); ++dc)
            if (dia.has_dot(dr, dc)) fill.set(dr, dc, base.at(dr, ef.form_column(dc)));
    return {std::move(ef), std::move(fill)};
}

inline RrefMatrix inject_ferrers_matrix(const EchelonFerrersForm& ef, const FieldPtr& field,
                                        const FerrersFill& fill) {
    const FerrersDiagram& dia = ef.diagram();
    for (const auto& [cell, value] : fill) {
        if (!dia.has_dot(cell.first, cell.second))
            throw error(errc::extra_cell, "fill entry outside the diagram dots");
        if (value >= field->size()) throw error(errc::out_of_range, "fill value not below q");
    }
    if (fill.size() != dia.dots())
        throw error(errc::incomplete_fill, "fill must cover every dot cell");

    Matrix m(field, ef.k(), ef.n());
    for (std::size_t r = 0; r < ef.k(); ++r)
        if (ef.cell(r, ef.pivot_columns()[r]) == CellKind::PinnedOne)
            m.set(r, ef.pivot_columns()[r], 1);
    for (const auto& [cell, value] : fill)
        m.set(cell.first, ef.form_column(cell.second), value);
    return RrefMatrix(std::move(m), ef.pivot_columns());
}

// Convenience: fill given as the a x b diagram matrix (zeros off the dots).
inline RrefMatrix inject_ferrers_matrix(const EchelonFerrersForm& ef, const Matrix& fill) {
    const FerrersDiagram& dia = ef.diagram();
    if (fill.rows() != dia.rows() || fill.cols() != dia.cols())
        throw error(errc::shape_mismatch, "fill shape must match the diagram box");
    FerrersFill map;
    for (unsigned r = 0; r < dia.rows(); ++r)
        for (unsigned c = 0; c < dia.cols(); ++c) {
            if (dia.has_dot(r, c))
                map[{r, c}] = fill.at(r, c);
            else if (fill.at(r, c) != 0)
                throw error(errc::extra_cell, "nonzero fill entry outside the diagram dots");
        }
    return inject_ferrers_matrix(ef, fill.field(), map);
}

// Ordered bases of a k-dimensional space over F_q: (q^k-1)(q^k-q)...(q^k-q^{k-1}).
inline BigInt count_spanning_matrices(unsigned k, std::uint64_t q) {
    BigInt qk = big_pow(q, k);
    BigInt count = 1;
    BigInt qi = 1;
    for (unsigned i = 0; i < k; ++i) {
        count *= qk - qi;
        qi *= q;
    }
    return count;
}

inline BigInt count_spanning_matrices(const RrefMatrix& r) {
    return count_spanning_matrices(static_cast<unsigned>(r.rank()), r.field()->size());
}

}  // namespace ferrocode

#endif
