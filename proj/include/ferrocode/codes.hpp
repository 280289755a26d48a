// Generalized rank-metric codes: minimum distance, error-correction radius,
// the classical and rank-metric Singleton bounds, and Gabidulin codes.

#ifndef FERROCODE_CODES_HPP
#define FERROCODE_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"

namespace ferrocode {

// Extension-field parameters recorded by the Gabidulin constructors. The
// dimension accessor of the code itself always reports base-field dimension;
// ext_k is the dimension over F_{q^m}.
struct GabidulinMeta {
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::uint32_t ext_k = 0;
};

class RankMetricCode {
  public:
    RankMetricCode(FieldPtr field, std::size_t m, std::size_t n, std::vector<Matrix> words)
        : field_(std::move(field)), m_(m), n_(n), words_(std::move(words)) {
        for (const auto& w : words_) {
            if (!w.field()->same_field(*field_))
                throw error(errc::spec_mismatch, "codeword over a different field");
            if (w.rows() != m_ || w.cols() != n_)
                throw error(errc::shape_mismatch, "codeword shape differs from code shape");
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t row_dim() const noexcept { return m_; }
    std::size_t col_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<Matrix>& words() const noexcept { return words_; }

    bool contains(const Matrix& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

    // Exact brute force over unordered pairs.
    unsigned min_distance() const {
        if (words_.size() < 2)
            throw error(errc::too_few_codewords, "minimum distance needs two codewords");
        if (!min_dist_) {
            std::size_t best = std::min(m_, n_) + 1;
            for (std::size_t i = 0; i < words_.size() && best > 1; ++i)
                for (std::size_t j = i + 1; j < words_.size() && best > 1; ++j)
                    best = std::min(best, rank_distance(words_[i], words_[j]));
            min_dist_ = static_cast<unsigned>(best);
        }
        return *min_dist_;
    }

    // Closure under addition and F_q-scalar multiplication, by brute force.
    bool is_linear() const {
        if (!linear_) {
            bool ok = !words_.empty();
            for (std::size_t i = 0; ok && i < words_.size(); ++i) {
                for (std::size_t j = i; ok && j < words_.size(); ++j)
                    ok = contains(words_[i] + words_[j]);
                for (std::uint32_t s = 0; ok && s < field_->size(); ++s)
                    ok = contains(words_[i].scaled(s));
            }
            linear_ = ok;
        }
        return *linear_;
    }

    // Base-field dimension log_q |C|; only defined for linear codes.
    std::optional<unsigned> dimension() const {
        if (!is_linear()) return std::nullopt;
        unsigned dim = 0;
        std::size_t sz = 1;
        while (sz < words_.size()) {
            sz *= field_->size();
            ++dim;
        }
        return sz == words_.size() ? std::optional<unsigned>(dim) : std::nullopt;
    }

    const std::optional<GabidulinMeta>& gabidulin_meta() const noexcept { return meta_; }
    void set_gabidulin_meta(GabidulinMeta meta) { meta_ = meta; }

  private:
    FieldPtr field_;
    std::size_t m_, n_;
    std::vector<Matrix> words_;
    mutable std::optional<unsigned> min_dist_;
    mutable std::optional<bool> linear_;
    std::optional<GabidulinMeta> meta_;
};

inline unsigned min_rank_distance(const RankMetricCode& c) { return c.min_distance(); }

inline unsigned correctable_errors(unsigned d) {
    if (d < 1) throw error(errc::bad_params, "minimum distance must be positive");
    return (d - 1) / 2;
}

inline BigInt classical_singleton_bound(unsigned n, unsigned d, std::uint64_t q) {
    if (q < 2 || d < 1 || d > n) throw error(errc::bad_params, "need q >= 2 and 1 <= d <= n");
    return big_pow(q, n - d + 1);
}

inline unsigned rank_singleton_exponent(unsigned m, unsigned n, unsigned d) {
    if (d < 1 || d > std::min(m, n))
        throw error(errc::bad_params, "need 1 <= d <= min(m, n)");
    return std::min(m * (n - d + 1), n * (m - d + 1));
}

inline BigInt rank_singleton_bound(unsigned m, unsigned n, unsigned d, std::uint64_t q) {
    if (q < 2) throw error(errc::bad_params, "need q >= 2");
    return big_pow(q, rank_singleton_exponent(m, n, d));
}

// ---- classical q-nary codes (the deletion argument of the classical bound) ----

class HammingCode {
  public:
    HammingCode(FieldPtr field, std::size_t n, std::vector<std::vector<std::uint32_t>> words)
        : field_(std::move(field)), n_(n), words_(std::move(words)) {
        for (const auto& w : words_) {
            if (w.size() != n_) throw error(errc::shape_mismatch, "word length differs");
            for (auto x : w)
                if (x >= field_->size()) throw error(errc::out_of_range, "symbol not below q");
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<std::vector<std::uint32_t>>& words() const noexcept { return words_; }

    unsigned min_distance() const {
        if (words_.size() < 2)
            throw error(errc::too_few_codewords, "minimum distance needs two codewords");
        std::size_t best = n_ + 1;
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = i + 1; j < words_.size(); ++j) {
                std::size_t dist = 0;
                for (std::size_t t = 0; t < n_; ++t) dist += words_[i][t] != words_[j][t];
                best = std::min(best, dist);
            }
        return static_cast<unsigned>(best);
    }

  private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> words_;
};

struct DeletionReport {
    std::vector<std::vector<std::uint32_t>> words;  // one per codeword, order kept
    bool all_distinct = true;
    std::size_t distinct_count = 0;
};

// Deletes the given coordinates from every codeword. With fewer than d
// positions removed the images stay distinct (the classical bound's proof
// step); the report lets tests check exactly that.
inline DeletionReport delete_coordinates(const HammingCode& c, const std::set<std::size_t>& positions) {
    for (auto p : positions)
        if (p >= c.length()) throw error(errc::out_of_range, "deletion position out of range");
    DeletionReport rep;
    rep.words.reserve(c.size());
    for (const auto& w : c.words()) {
        std::vector<std::uint32_t> img;
        img.reserve(c.length() - positions.size());
        for (std::size_t t = 0; t < c.length(); ++t)
            if (!positions.count(t)) img.push_back(w[t]);
        rep.words.push_back(std::move(img));
    }
    auto sorted = rep.words;
    std::sort(sorted.begin(), sorted.end());
    rep.distinct_count = static_cast<std::size_t>(
        std::distance(sorted.begin(), std::unique(sorted.begin(), sorted.end())));
    rep.all_distinct = rep.distinct_count == rep.words.size();
    return rep;
}

// ---- Gabidulin codes ----

// The (3x3, 64, 2) code over F_2 built from the kernel of H = (1, a^2, a)
// in F_8^3, expanded against the basis {1, a, a^2} with a^3 = a + 1.
inline RankMetricCode gabidulin_example_code() {
    FieldPtr f8 = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
    const std::uint32_t alpha = 2;
    std::vector<std::uint32_t> h = {1, f8->pow(alpha, 2), alpha};
    std::vector<std::uint32_t> span1 = {1, alpha, 1};
    std::vector<std::uint32_t> span2 = {0, 1, alpha};
    std::vector<std::uint32_t> basis = {1, alpha, f8->pow(alpha, 2)};

    std::vector<Matrix> words;
    words.reserve(64);
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) {
            std::vector<std::uint32_t> x(3);
            std::uint32_t syndrome = 0;
            for (int i = 0; i < 3; ++i) {
                x[i] = f8->add(f8->mul(a, span1[i]), f8->mul(b, span2[i]));
                syndrome = f8->add(syndrome, f8->mul(x[i], h[i]));
            }
            if (syndrome != 0)
                throw error(errc::consistency_violation, "spanning vector outside the kernel");
            words.push_back(expand_ext_vector(f8, x, basis));
        }

    FieldPtr base_field = words.front().field();
    RankMetricCode code(std::move(base_field), 3, 3, std::move(words));
    code.set_gabidulin_meta({2, 3, 3, 2});
    return code;
}

// Evaluation code of q-linearized polynomials of q-degree < k on n
// independent points (the first n basis elements), expanded to n x m
// matrices over F_q. Prime q only: the expansion works against the prime
// subfield. Verified MRD at desk scale.
inline RankMetricCode gabidulin_construct(std::uint32_t q, std::uint32_t m, std::uint32_t n,
                                          std::uint32_t k, const std::vector<std::uint32_t>& basis) {
    if (!Field::is_prime(q))
        throw error(errc::bad_params, "gabidulin construction supports prime q only");
    if (k < 1 || k > n || n > m) throw error(errc::bad_params, "need 1 <= k <= n <= m");
    FieldPtr ext = Field::make(q, m);
    if (basis.size() != m) throw error(errc::dependent_points, "basis must have m elements");

    // independence of the evaluation points over F_q
    {
        FieldPtr prime = Field::make(q, 1);
        Matrix pts(prime, n, m);
        for (std::uint32_t j = 0; j < n; ++j) {
            auto d = ext->digits(basis[j]);
            for (std::uint32_t i = 0; i < m; ++i) pts.set(j, i, d[i]);
        }
        if (pts.rank() != n)
            throw error(errc::dependent_points, "evaluation points are linearly dependent");
    }

    // powers[i][j] = g_j^{q^i}
    std::vector<std::vector<std::uint32_t>> powers(k, std::vector<std::uint32_t>(n));
    for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t x = basis[j];
        for (std::uint32_t i = 0; i < k; ++i) {
            powers[i][j] = x;
            x = ext->pow(x, q);
        }
    }

    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        count *= ext->size();
        if (count > (1ull << 20))
            throw error(errc::bad_params, "code too large for desk-scale construction");
    }

    std::vector<Matrix> words;
    words.reserve(count);
    std::vector<std::uint32_t> coeff(k, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            coeff[i] = static_cast<std::uint32_t>(t % ext->size());
            t /= ext->size();
        }
        std::vector<std::uint32_t> eval(n, 0);
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t i = 0; i < k; ++i)
                eval[j] = ext->add(eval[j], ext->mul(coeff[i], powers[i][j]));
        words.push_back(expand_ext_vector(ext, eval, basis));
    }

    FieldPtr base_field = words.front().field();
    RankMetricCode code(std::move(base_field), n, m, std::move(words));
    code.set_gabidulin_meta({q, m, n, k});

    if (code.size() != count)
        throw error(errc::consistency_violation, "evaluation map is not injective");
    if (code.size() <= 2048) {
        unsigned d = code.min_distance();
        if (d != n - k + 1)
            throw error(errc::consistency_violation, "constructed code misses distance n-k+1");
        if (BigInt(count) != rank_singleton_bound(n, m, d, q))
            throw error(errc::consistency_violation, "constructed code is not MRD");
    }
    return code;
}

}  // namespace ferrocode

#endif
