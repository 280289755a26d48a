// Arithmetic in F_q for prime powers q = p^e, q <= 2^16.
//
// Elements are encoded as integers in [0, q): the base-p digits of the value
// are the polynomial-basis coordinates, least significant digit = constant
// term. Multiplication runs on precomputed discrete-log/antilog tables.

#ifndef FERROCODE_GF_HPP
#define FERROCODE_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ferrocode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement;

class Field : public std::enable_shared_from_this<Field> {
  public:
    static constexpr std::uint32_t max_size = 1u << 16;

    // modulus: e+1 base-p digits, constant term first, leading digit 1.
    // Omitted -> smallest monic irreducible of degree e (by integer encoding).
    static FieldPtr make(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        return FieldPtr(new Field(p, e, std::move(modulus)));
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return mod_; }

    // Modulus digits read as a base-p integer, for the "GF p e modulus" header.
    std::uint64_t modulus_value() const noexcept {
        std::uint64_t v = 0;
        for (std::size_t i = mod_.size(); i-- > 0;) v = v * p_ + mod_[i];
        return v;
    }

    bool same_field(const Field& other) const noexcept {
        return this == &other || (p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_);
    }

    // ---- arithmetic on encoded values in [0, q) ----

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        check_value(a);
        check_value(b);
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (a % p_ + b % p_) % p_ * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        check_value(a);
        if (p_ == 2) return a;
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (p_ - a % p_) % p_ * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        check_value(a);
        check_value(b);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        check_value(a);
        if (a == 0) throw error(errc::division_by_zero, "inverse of zero");
        return exp_[(q_ - 1) - log_[a]];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
        check_value(a);
        if (a == 0) return k == 0 ? 1 : 0;
        std::uint64_t ord = q_ - 1;
        return exp_[static_cast<std::uint32_t>(log_[a] * (k % ord) % ord)];
    }

    // A fixed generator of the multiplicative group (1 for F_2).
    std::uint32_t generator() const noexcept { return gen_; }

    FieldElement element(std::uint32_t value) const;

    // Digits of a value, base p, constant term first, length e.
    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        check_value(a);
        std::vector<std::uint32_t> d(e_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint32_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] >= p_) throw error(errc::out_of_range, "digit not below characteristic");
            v = v * p_ + d[i];
        }
        check_value(v);
        return v;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << p_;
        if (e_ > 1) os << "^" << e_;
        os << ")";
        return os.str();
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    Field(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus)
        : p_(p), e_(e) {
        if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
        if (e < 1) throw error(errc::unsupported_size, "degree must be positive");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > max_size) throw error(errc::unsupported_size, "field size exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (modulus) {
            mod_ = std::move(*modulus);
            if (mod_.size() != e_ + 1 || mod_.back() != 1)
                throw error(errc::reducible_modulus, "modulus must be monic of degree e");
            for (auto d : mod_)
                if (d >= p_) throw error(errc::reducible_modulus, "modulus digit not below p");
            if (!poly_irreducible(mod_))
                throw error(errc::reducible_modulus, "modulus is reducible over F_p");
        } else {
            mod_ = default_modulus();
        }

        build_tables();
    }

    void check_value(std::uint32_t a) const {
        if (a >= q_) throw error(errc::out_of_range, "element value not below q");
    }

    // ---- polynomial arithmetic over F_p on digit vectors (table construction) ----

    static void poly_trim(std::vector<std::uint32_t>& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    // remainder of a mod b, b monic after normalization
    std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                        const std::vector<std::uint32_t>& b) const {
        poly_trim(a);
        std::uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size()) {
            std::uint32_t coef = static_cast<std::uint64_t>(a.back()) * lead_inv % p_;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(coef) * b[i] % p_;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p_ - t) % p_);
            }
            poly_trim(a);
        }
        return a;
    }

    std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) const {
        if (a.empty() || b.empty()) return {};
        std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<std::uint32_t>(
                    (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
        }
        return poly_mod(std::move(c), mod_);
    }

    std::uint32_t inv_mod_p(std::uint32_t a) const {
        // p is small; Fermat via repeated squaring
        std::uint64_t r = 1, base = a % p_, k = p_ - 2;
        while (k > 0) {
            if (k & 1) r = r * base % p_;
            base = base * base % p_;
            k >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        // trial division by every monic polynomial of degree 1..e/2
        std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
        if (deg == 1) return true;
        for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
            // divisors encoded as integers: value in [p^d, 2*p^d) with top digit 1
            std::uint64_t lo = 1;
            for (std::uint32_t i = 0; i < d; ++i) lo *= p_;
            for (std::uint64_t v = 0; v < lo; ++v) {
                std::vector<std::uint32_t> g(d + 1);
                std::uint64_t t = v;
                for (std::uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                if (poly_mod(f, g).empty()) return false;
            }
        }
        return true;
    }

    std::vector<std::uint32_t> default_modulus() const {
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < e_; ++i) pe *= p_;
        for (std::uint64_t v = 0; v < pe; ++v) {
            std::vector<std::uint32_t> f(e_ + 1);
            std::uint64_t t = v;
            for (std::uint32_t i = 0; i < e_; ++i) {
                f[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            f[e_] = 1;
            if (poly_irreducible(f)) return f;
        }
        throw error(errc::reducible_modulus, "no irreducible polynomial found");  // unreachable
    }

    std::uint32_t encode(const std::vector<std::uint32_t>& poly) const {
        std::uint32_t v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = v * p_ + poly[i];
        return v;
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        std::vector<std::uint32_t> pa, pb;
        for (std::uint32_t i = 0, t = a; i < e_; ++i, t /= p_) pa.push_back(t % p_);
        for (std::uint32_t i = 0, t = b; i < e_; ++i, t /= p_) pb.push_back(t % p_);
        poly_trim(pa);
        poly_trim(pb);
        return encode(poly_mul_mod(pa, pb));
    }

    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k) const {
        std::uint32_t r = 1;
        while (k > 0) {
            if (k & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            k >>= 1;
        }
        return r;
    }

    void build_tables() {
        std::uint32_t ord = q_ - 1;
        gen_ = 1;
        if (ord > 1) {
            std::vector<std::uint32_t> prime_factors;
            std::uint32_t t = ord;
            for (std::uint32_t d = 2; d * d <= t; ++d) {
                if (t % d == 0) {
                    prime_factors.push_back(d);
                    while (t % d == 0) t /= d;
                }
            }
            if (t > 1) prime_factors.push_back(t);
            for (std::uint32_t c = 2; c < q_; ++c) {
                bool primitive = true;
                for (auto r : prime_factors) {
                    if (slow_pow(c, ord / r) == 1) {
                        primitive = false;
                        break;
                    }
                }
                if (primitive) {
                    gen_ = c;
                    break;
                }
            }
        }
        exp_.assign(2 * ord, 1);
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < ord; ++i) {
            exp_[i] = x;
            exp_[i + ord] = x;
            log_[x] = i;
            x = slow_mul(x, gen_);
        }
    }

    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> mod_;
    std::uint32_t gen_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same_field(*b)) throw error(errc::spec_mismatch, "elements from different fields");
}

class FieldElement {
  public:
    FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), v_(value) {
        if (v_ >= field_->size()) throw error(errc::out_of_range, "element value not below q");
    }

    std::uint32_t value() const noexcept { return v_; }
    const FieldPtr& field() const noexcept { return field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(v_)}; }

    FieldElement inverse() const { return {field_, field_->inv(v_)}; }
    FieldElement pow(std::uint64_t k) const { return {field_, field_->pow(v_, k)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->same_field(*b.field_) && a.v_ == b.v_;
    }

  private:
    FieldPtr field_;
    std::uint32_t v_;
};

inline FieldElement Field::element(std::uint32_t value) const {
    return FieldElement(shared_from_this(), value);
}

}  // namespace ferrocode

#endif
