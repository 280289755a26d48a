// Generalized Ferrers diagram rank-metric codes and their Singleton-type
// bound, with the row/column puncturing machinery behind its proof.

#ifndef FERROCODE_FDCODES_HPP
#define FERROCODE_FDCODES_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "ferrers.hpp"

namespace ferrocode {

// An (F, M, d) code: matrices of the diagram's bounding-box shape that are
// zero outside the dots. Linearity of the underlying code is not required.
class FerrersCode {
  public:
    FerrersCode(FerrersDiagram diagram, FieldPtr field, std::vector<Matrix> words,
                std::optional<unsigned> declared_d = std::nullopt)
        : diagram_(std::move(diagram)),
          code_(check_support(diagram_, std::move(field), std::move(words))),
          declared_d_(declared_d) {}

    const FerrersDiagram& diagram() const noexcept { return diagram_; }
    const RankMetricCode& code() const noexcept { return code_; }
    const FieldPtr& field() const noexcept { return code_.field(); }
    std::size_t size() const noexcept { return code_.size(); }
    std::optional<unsigned> declared_distance() const noexcept { return declared_d_; }

    unsigned min_distance() const { return code_.min_distance(); }

    // d used by theorem-premise operations: the verified minimum distance
    // when feasible; declared_d only defers the O(M^2) check.
    unsigned effective_distance() const {
        if (code_.size() >= 2) {
            unsigned d = code_.min_distance();
            if (declared_d_ && d < *declared_d_)
                throw error(errc::consistency_violation,
                            "declared distance exceeds the verified minimum distance");
            return d;
        }
        return declared_d_.value_or(0);
    }

  private:
    static RankMetricCode check_support(const FerrersDiagram& diagram, FieldPtr field,
                                        std::vector<Matrix> words) {
        std::size_t a = diagram.rows(), b = diagram.cols();
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (words[w].rows() != a || words[w].cols() != b)
                throw error(errc::shape_mismatch, "codeword shape differs from the diagram box");
            for (unsigned r = 0; r < a; ++r)
                for (unsigned c = 0; c < b; ++c)
                    if (!diagram.has_dot(r, c) && words[w].at(r, c) != 0) {
                        std::ostringstream os;
                        os << "codeword " << w << " has a nonzero entry off the diagram at ("
                           << r << ", " << c << ")";
                        throw error(errc::support_violation, os.str());
                    }
        }
        return RankMetricCode(std::move(field), a, b, std::move(words));
    }

    FerrersDiagram diagram_;
    RankMetricCode code_;
    std::optional<unsigned> declared_d_;
};

inline FerrersCode ferrers_code_new(const FerrersDiagram& diagram, const FieldPtr& field,
                                    std::vector<Matrix> words,
                                    std::optional<unsigned> declared_d = std::nullopt) {
    return FerrersCode(diagram, field, std::move(words), declared_d);
}

inline BigInt ferrers_singleton_bound(const FerrersDiagram& f, unsigned d, std::uint64_t q) {
    if (q < 2) throw error(errc::bad_params, "need q >= 2");
    return big_pow(q, ferrers_bound_exponent(f, d).exponent);
}

// Exponent reading of the bound: upper bound on dim(F, d) for linear codes.
inline unsigned ferrers_dim_bound(const FerrersDiagram& f, unsigned d) {
    return ferrers_bound_exponent(f, d).exponent;
}

struct PunctureReport {
    std::vector<Matrix> images;  // one per codeword, codeword order kept
    bool all_distinct = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_collision;
};

// Deletes the first i rows and the last d-1-i columns of every codeword.
// With minimum distance >= d the images must stay distinct; a collision
// against a declared or verified distance is a falsified theorem premise.
inline PunctureReport puncture_code(const FerrersCode& c, unsigned i, unsigned d) {
    if (d < 1) throw error(errc::out_of_range, "d must be positive");
    if (i > d - 1) throw error(errc::out_of_range, "i must lie in [0, d-1]");
    unsigned j = d - 1 - i;
    if (i > c.diagram().rows() || j > c.diagram().cols())
        throw error(errc::out_of_range, "puncturing exceeds the diagram box");

    PunctureReport rep;
    rep.images.reserve(c.size());
    for (const auto& w : c.code().words()) rep.images.push_back(w.puncture(i, j));
    for (std::size_t x = 0; x < rep.images.size() && rep.all_distinct; ++x)
        for (std::size_t y = x + 1; y < rep.images.size(); ++y)
            if (rep.images[x] == rep.images[y]) {
                rep.all_distinct = false;
                rep.first_collision = {x, y};
                break;
            }

    if (!rep.all_distinct) {
        if (c.size() >= 2 && c.min_distance() >= d)
            throw error(errc::consistency_violation,
                        "distinct codewords at distance >= d collided after puncturing");
        if (c.declared_distance() && *c.declared_distance() >= d)
            throw error(errc::consistency_violation,
                        "declared minimum distance is falsified by a puncturing collision");
    }
    return rep;
}

// The block decomposition of the proof: when X and Y agree after deleting the
// first i rows and last d-1-i columns, X-Y is [A B; O C] with O zero, so
// rank(X-Y) <= rank([A B]) + rank(C) <= i + (d-1-i) = d-1.
inline bool rank_decomposition_check(const Matrix& x, const Matrix& y, unsigned i, unsigned d) {
    if (d < 1) throw error(errc::bad_index, "d must be positive");
    if (i > d - 1) throw error(errc::bad_index, "i must lie in [0, d-1]");
    unsigned j = d - 1 - i;
    if (i > x.rows() || j > x.cols())
        throw error(errc::out_of_range, "block split exceeds matrix shape");
    if (!(x.puncture(i, j) == y.puncture(i, j)))
        throw error(errc::premature_call, "punctured images differ");

    Matrix diff = x - y;
    std::size_t a = diff.rows(), b = diff.cols();
    Matrix top(diff.field(), i, b);  // [A B]
    for (std::size_t r = 0; r < i; ++r)
        for (std::size_t col = 0; col < b; ++col) top.set(r, col, diff.at(r, col));
    Matrix c_block(diff.field(), a - i, j);
    for (std::size_t r = 0; r < a - i; ++r)
        for (std::size_t col = 0; col < j; ++col) c_block.set(r, col, diff.at(i + r, b - j + col));

    std::size_t rank_top = top.rank();
    std::size_t rank_c = c_block.rank();
    return diff.rank() <= rank_top + rank_c && rank_top <= i && rank_c <= j;
}

}  // namespace ferrocode

#endif
