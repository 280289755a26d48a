// Dense matrices over F_q: rank, reduced row echelon form (zero rows
// dropped), rank distance, puncturing, extension-field vector expansion.

#ifndef FERROCODE_MATRIX_HPP
#define FERROCODE_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gf.hpp"

namespace ferrocode {

class RrefMatrix;

class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), v_(std::move(entries)) {
        if (v_.size() != rows_ * cols_)
            throw error(errc::shape_mismatch, "entry count does not match shape");
        for (auto x : v_)
            if (x >= field_->size()) throw error(errc::out_of_range, "entry value not below q");
    }

    static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
        std::vector<std::vector<std::uint32_t>> r;
        for (auto& row : rows) r.emplace_back(row);
        return from_rows(std::move(field), r);
    }

    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
        std::size_t m = rows.size();
        std::size_t n = m == 0 ? 0 : rows[0].size();
        std::vector<std::uint32_t> entries;
        entries.reserve(m * n);
        for (auto& row : rows) {
            if (row.size() != n) throw error(errc::shape_mismatch, "ragged rows");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return Matrix(std::move(field), m, n, std::move(entries));
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix I(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) I.set(i, i, 1);
        return I;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<std::uint32_t>& values() const noexcept { return v_; }

    std::uint32_t at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw error(errc::out_of_range, "matrix index");
        return v_[r * cols_ + c];
    }

    void set(std::size_t r, std::size_t c, std::uint32_t value) {
        if (r >= rows_ || c >= cols_) throw error(errc::out_of_range, "matrix index");
        if (value >= field_->size()) throw error(errc::out_of_range, "entry value not below q");
        v_[r * cols_ + c] = value;
    }

    std::vector<std::uint32_t> row(std::size_t r) const {
        if (r >= rows_) throw error(errc::out_of_range, "row index");
        return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    bool is_zero() const noexcept {
        return std::all_of(v_.begin(), v_.end(), [](std::uint32_t x) { return x == 0; });
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_compatible(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = a.field_->add(a.v_[i], b.v_[i]);
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_compatible(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = a.field_->sub(a.v_[i], b.v_[i]);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_) throw error(errc::shape_mismatch, "inner dimensions differ");
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::uint32_t aik = a.v_[i * a.cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    std::uint32_t t = a.field_->mul(aik, b.v_[k * b.cols_ + j]);
                    r.v_[i * r.cols_ + j] = a.field_->add(r.v_[i * r.cols_ + j], t);
                }
            }
        return r;
    }

    Matrix scaled(std::uint32_t s) const {
        Matrix r = *this;
        for (auto& x : r.v_) x = field_->mul(x, s);
        return r;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.v_[c * rows_ + r] = v_[r * cols_ + c];
        return t;
    }

    // Keeps rows i.. and columns ..cols-j-1 ("delete the first i rows and
    // the last j columns").
    Matrix puncture(std::size_t drop_first_rows, std::size_t drop_last_cols) const {
        if (drop_first_rows > rows_ || drop_last_cols > cols_)
            throw error(errc::out_of_range, "puncture exceeds matrix shape");
        std::size_t m = rows_ - drop_first_rows, n = cols_ - drop_last_cols;
        Matrix r(field_, m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r.v_[i * n + j] = v_[(i + drop_first_rows) * cols_ + j];
        return r;
    }

    std::size_t rank() const {
        std::vector<std::uint32_t> a = v_;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
            std::size_t piv = rk;
            while (piv < rows_ && a[piv * cols_ + c] == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != rk)
                for (std::size_t j = c; j < cols_; ++j)
                    std::swap(a[piv * cols_ + j], a[rk * cols_ + j]);
            std::uint32_t pinv = field_->inv(a[rk * cols_ + c]);
            for (std::size_t i = rk + 1; i < rows_; ++i) {
                std::uint32_t f = field_->mul(a[i * cols_ + c], pinv);
                if (f == 0) continue;
                for (std::size_t j = c; j < cols_; ++j)
                    a[i * cols_ + j] =
                        field_->sub(a[i * cols_ + j], field_->mul(f, a[rk * cols_ + j]));
            }
            ++rk;
        }
        return rk;
    }

    RrefMatrix rref() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_->same_field(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.v_ == b.v_;
    }

    // lexicographic on shape then row-major entries; orders codeword sets
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(),
                                                      b.v_.end());
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ' ';
                s += std::to_string(v_[r * cols_ + c]);
            }
            s += '\n';
        }
        return s;
    }

  private:
    void require_compatible(const Matrix& b) const {
        require_same_field(field_, b.field_);
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw error(errc::shape_mismatch, "matrix shapes differ");
    }

    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> v_;
};

inline std::size_t rank_distance(const Matrix& a, const Matrix& b) { return (a - b).rank(); }

// RREF with the leading-one, cleared-pivot-column convention and all-zero
// rows dropped; unique per row space.
class RrefMatrix {
  public:
    RrefMatrix(Matrix base, std::vector<std::size_t> pivot_cols)
        : base_(std::move(base)), pivots_(std::move(pivot_cols)) {
        if (pivots_.size() != base_.rows())
            throw error(errc::shape_mismatch, "one pivot per row required");
    }

    const Matrix& base() const noexcept { return base_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    std::size_t rank() const noexcept { return base_.rows(); }
    std::size_t cols() const noexcept { return base_.cols(); }
    const FieldPtr& field() const noexcept { return base_.field(); }

    friend bool operator==(const RrefMatrix& a, const RrefMatrix& b) {
        return a.base_ == b.base_ && a.pivots_ == b.pivots_;
    }

  private:
    Matrix base_;
    std::vector<std::size_t> pivots_;
};

inline RrefMatrix Matrix::rref() const {
    std::vector<std::uint32_t> a = v_;
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
        std::size_t piv = rk;
        while (piv < rows_ && a[piv * cols_ + c] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a[piv * cols_ + j], a[rk * cols_ + j]);
        std::uint32_t pinv = field_->inv(a[rk * cols_ + c]);
        for (std::size_t j = 0; j < cols_; ++j)
            a[rk * cols_ + j] = field_->mul(a[rk * cols_ + j], pinv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rk) continue;
            std::uint32_t f = a[i * cols_ + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                a[i * cols_ + j] = field_->sub(a[i * cols_ + j], field_->mul(f, a[rk * cols_ + j]));
        }
        pivots.push_back(c);
        ++rk;
    }
    Matrix reduced(field_, rk, cols_,
                   std::vector<std::uint32_t>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rk * cols_)));
    return RrefMatrix(std::move(reduced), std::move(pivots));
}

// Writes a length-n vector over F_{p^e} as an n x e matrix over F_p: row i
// holds the coordinates of v[i] in the given basis, left to right.
inline Matrix expand_ext_vector(const FieldPtr& ext, const std::vector<std::uint32_t>& v,
                                const std::vector<std::uint32_t>& basis) {
    std::uint32_t e = ext->degree();
    if (basis.size() != e) throw error(errc::dependent_basis, "basis size must equal degree");
    FieldPtr prime = Field::make(ext->characteristic(), 1);

    // Solve B * C = D by Gauss-Jordan on [B | D]: B's column j = digits of
    // basis[j], D's column i = digits of v[i].
    std::size_t n = v.size();
    Matrix aug(prime, e, e + n);
    for (std::uint32_t j = 0; j < e; ++j) {
        auto d = ext->digits(basis[j]);
        for (std::uint32_t i = 0; i < e; ++i) aug.set(i, j, d[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto d = ext->digits(v[i]);
        for (std::uint32_t r = 0; r < e; ++r) aug.set(r, e + i, d[r]);
    }
    RrefMatrix rr = aug.rref();
    bool independent = rr.rank() == e;
    for (std::uint32_t j = 0; independent && j < e; ++j)
        independent = rr.pivot_columns()[j] == j;
    if (!independent)
        throw error(errc::dependent_basis, "basis is linearly dependent over the prime field");

    Matrix out(prime, n, e);
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t r = 0; r < e; ++r) out.set(i, r, rr.base().at(r, e + i));
    return out;
}

}  // namespace ferrocode

#endif
