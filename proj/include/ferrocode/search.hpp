// Brute-force maximum-code search: an exact branch-and-bound oracle over the
// compatibility graph (pairs at rank distance >= d) and a seeded greedy
// heuristic. Used to probe tightness of the Singleton-type bounds; the exact
// search never consults those bounds for pruning.

#ifndef FERROCODE_SEARCH_HPP
#define FERROCODE_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "fdcodes.hpp"

namespace ferrocode {

enum class SearchMode { exact, greedy };

class SearchProblem {
  public:
    static SearchProblem rank_space(FieldPtr field, std::size_t m, std::size_t n, unsigned d,
                                    SearchMode mode = SearchMode::exact, std::uint64_t seed = 0) {
        SearchProblem p;
        p.field_ = std::move(field);
        p.shape_ = {m, n};
        p.d_ = d;
        p.mode_ = mode;
        p.seed_ = seed;
        p.validate();
        return p;
    }

    static SearchProblem ferrers_space(FieldPtr field, FerrersDiagram diagram, unsigned d,
                                       SearchMode mode = SearchMode::exact, std::uint64_t seed = 0) {
        SearchProblem p;
        p.field_ = std::move(field);
        p.diagram_ = std::move(diagram);
        p.d_ = d;
        p.mode_ = mode;
        p.seed_ = seed;
        p.validate();
        return p;
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::optional<std::pair<std::size_t, std::size_t>>& shape() const noexcept { return shape_; }
    const std::optional<FerrersDiagram>& diagram() const noexcept { return diagram_; }
    unsigned distance() const noexcept { return d_; }
    SearchMode mode() const noexcept { return mode_; }
    std::uint64_t seed() const noexcept { return seed_; }

  private:
    SearchProblem() = default;

    void validate() const {
        if (d_ < 1) throw error(errc::bad_params, "target distance must be positive");
    }

    FieldPtr field_;
    std::optional<std::pair<std::size_t, std::size_t>> shape_;
    std::optional<FerrersDiagram> diagram_;
    unsigned d_ = 1;
    SearchMode mode_ = SearchMode::exact;
    std::uint64_t seed_ = 0;
};

struct SearchResult {
    std::size_t size = 0;
    RankMetricCode code;
    std::optional<FerrersCode> ferrers_code;  // set for diagram problems
    BigInt bound;                             // Theorem-side bound, reporting only
    bool tight = false;
};

namespace detail {

// minimal deterministic PRNG + Fisher-Yates, stable across platforms
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline void shuffle_indices(std::vector<std::uint64_t>& v, std::uint64_t seed) {
    SplitMix64 rng{seed};
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.next() % i]);
}

class VBitset {
  public:
    explicit VBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static VBitset full(std::size_t n) {
        VBitset b(n);
        for (auto& word : b.w_) word = ~0ull;
        b.trim();
        return b;
    }

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto word : w_) c += static_cast<std::size_t>(__builtin_popcountll(word));
        return c;
    }

    bool empty() const {
        for (auto word : w_)
            if (word) return false;
        return true;
    }

    VBitset& operator&=(const VBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VBitset& operator|=(const VBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    void or_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= row[i];
    }

    // intersect with a row of a packed adjacency matrix
    void mask_with(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t word = w_[wi];
            while (word) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
                f(wi * 64 + bit);
                word &= word - 1;
            }
        }
    }

  private:
    void trim() {
        if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
        if (n_ == 0) w_.assign(w_.size(), 0);
    }

    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// Candidate matrices of a search problem in lexicographic (row-major entry)
// order: index digits base q over the free cells, first cell most significant.
struct CandidateSpace {
    FieldPtr field;
    std::size_t box_rows = 0, box_cols = 0;
    std::vector<std::pair<unsigned, unsigned>> cells;
    std::uint64_t count = 0;

    static CandidateSpace make(const SearchProblem& p, std::uint64_t cap) {
        CandidateSpace s;
        s.field = p.field();
        if (p.shape()) {
            s.box_rows = p.shape()->first;
            s.box_cols = p.shape()->second;
            for (unsigned r = 0; r < s.box_rows; ++r)
                for (unsigned c = 0; c < s.box_cols; ++c) s.cells.emplace_back(r, c);
        } else {
            const FerrersDiagram& f = *p.diagram();
            s.box_rows = f.rows();
            s.box_cols = f.cols();
            for (auto cell : f.dot_cells()) s.cells.push_back(cell);
        }
        BigInt total = big_pow(s.field->size(), s.cells.size());
        if (total > BigInt(cap))
            throw error(errc::too_large, "candidate space exceeds " + std::to_string(cap) +
                                             " matrices");
        s.count = static_cast<std::uint64_t>(total);
        return s;
    }

    Matrix decode(std::uint64_t index) const {
        Matrix m(field, box_rows, box_cols);
        std::uint32_t q = field->size();
        for (std::size_t pos = cells.size(); pos-- > 0;) {
            m.set(cells[pos].first, cells[pos].second, static_cast<std::uint32_t>(index % q));
            index /= q;
        }
        return m;
    }

    std::uint64_t encode(const Matrix& m) const {
        std::uint64_t index = 0;
        for (const auto& [r, c] : cells) index = index * field->size() + m.at(r, c);
        return index;
    }

    // Vertices grouped by their value outside one maximal line of cells (the
    // longest row or the tallest column of the support). Within a group all
    // differences have rank <= 1, so for d >= 2 each group is one color
    // class; for d = 2 the group count matches the Singleton-type bound.
    std::vector<std::uint32_t> coset_color_order() const {
        bool use_row = box_cols >= box_rows;
        std::vector<char> in_group(cells.size(), 0);
        for (std::size_t pos = 0; pos < cells.size(); ++pos)
            in_group[pos] = use_row ? cells[pos].first == cells[0].first
                                    : cells[pos].second == box_cols - 1;
        std::uint32_t q = field->size();
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>> keyed(count);
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t outside = 0, inside = 0, t = v;
            for (std::size_t pos = cells.size(); pos-- > 0;) {
                std::uint64_t digit = t % q;
                t /= q;
                if (in_group[pos])
                    inside = inside * q + digit;
                else
                    outside = outside * q + digit;
            }
            keyed[v] = {outside, inside, static_cast<std::uint32_t>(v)};
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::uint32_t> order(count);
        for (std::uint64_t i = 0; i < count; ++i) order[i] = std::get<2>(keyed[i]);
        return order;
    }
};

// Branch and bound in the style of Tomita's coloring algorithms, over a
// packed adjacency matrix. Deterministic: fixed vertex order, sequential
// greedy coloring along a caller-supplied permutation.
class MaxCliqueSolver {
  public:
    // color_order: permutation of 0..V-1 used by the greedy coloring. A good
    // order groups pairwise non-adjacent vertices (for rank-distance graphs,
    // cosets of a single-row or single-column support space) consecutively,
    // which drives the root bound down to the coset count.
    MaxCliqueSolver(std::size_t v, std::vector<std::uint64_t> adjacency,
                    std::vector<std::uint32_t> color_order = {})
        : V(v), W((v + 63) / 64), adj(std::move(adjacency)), color_order_(std::move(color_order)) {
        if (color_order_.empty()) {
            color_order_.resize(V);
            for (std::size_t i = 0; i < V; ++i) color_order_[i] = static_cast<std::uint32_t>(i);
        }
    }

    const std::uint64_t* row(std::size_t u) const { return adj.data() + u * W; }

    bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }

    // lexicographic greedy clique: admit each vertex compatible with all admitted
    std::vector<std::uint32_t> greedy_clique() const {
        std::vector<std::uint32_t> r;
        for (std::size_t v = 0; v < V; ++v) {
            bool ok = true;
            for (auto u : r)
                if (!adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) r.push_back(static_cast<std::uint32_t>(v));
        }
        return r;
    }

    // incumbent candidate found elsewhere; must be a valid clique
    void seed(const std::vector<std::uint32_t>& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!adjacent(clique[i], clique[j]))
                    throw error(errc::consistency_violation, "seed is not a clique");
        if (clique.size() > best_.size()) {
            best_ = clique;
            best_from_greedy_ = false;
        }
    }

    // cayley: the candidate set is closed under differences, so some maximum
    // clique contains vertex 0 and the root search may start there.
    std::vector<std::uint32_t> solve(bool cayley = false) {
        auto g = greedy_clique();
        bool greedy_leads = g.size() >= best_.size();
        if (greedy_leads) {
            best_ = g;
            best_from_greedy_ = true;
        }
        std::vector<std::uint32_t> r;
        if (cayley && V > 0) {
            VBitset p(V);
            p = VBitset::full(V);
            p.mask_with(row(0));
            r.push_back(0);
            expand(r, p);
            r.pop_back();
        } else {
            expand(r, VBitset::full(V));
        }
        if (best_from_greedy_) return best_;  // greedy optimum is already lex-minimal
        return canonical(best_.size());
    }

  private:
    void expand(std::vector<std::uint32_t>& r, VBitset p) {
        if (p.empty()) {
            if (r.size() > best_.size()) {
                best_ = r;
                best_from_greedy_ = false;
            }
            return;
        }
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> color;
        color_sort(p, order, color);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            std::uint32_t v = order[idx];
            if (r.size() + color[idx] <= best_.size()) return;
            VBitset next = p;
            next.mask_with(row(v));
            r.push_back(v);
            expand(r, next);
            r.pop_back();
            p.reset(v);
        }
    }

    // exists a clique of size `need` inside p?
    bool find_clique(const VBitset& p, std::size_t need) {
        if (need == 0) return true;
        if (p.count() < need) return false;
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> color;
        color_sort(p, order, color);
        VBitset pool = p;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            std::uint32_t v = order[idx];
            if (color[idx] < need) return false;
            VBitset next = pool;
            next.mask_with(row(v));
            if (find_clique(next, need - 1)) return true;
            pool.reset(v);
        }
        return false;
    }

    // lexicographically smallest maximum clique, fixing one vertex at a time
    std::vector<std::uint32_t> canonical(std::size_t m) {
        std::vector<std::uint32_t> r;
        VBitset pool = VBitset::full(V);
        while (r.size() < m) {
            std::optional<std::uint32_t> chosen;
            std::vector<std::uint32_t> vs;
            pool.for_each([&](std::size_t v) { vs.push_back(static_cast<std::uint32_t>(v)); });
            for (auto v : vs) {
                VBitset cand = pool;
                cand.mask_with(row(v));
                for (std::uint32_t u = 0; u <= v; ++u)
                    if (cand.test(u)) cand.reset(u);  // remaining clique members are larger
                if (find_clique(cand, m - r.size() - 1)) {
                    chosen = v;
                    pool = cand;
                    break;
                }
                pool.reset(v);
            }
            if (!chosen)
                throw error(errc::consistency_violation, "canonical witness reconstruction failed");
            r.push_back(*chosen);
        }
        return r;
    }

    // greedy sequential coloring along color_order_; emits vertices class by
    // class so color values ascend along `order`
    void color_sort(const VBitset& p, std::vector<std::uint32_t>& order,
                    std::vector<std::uint32_t>& color) const {
        std::vector<std::vector<std::uint32_t>> classes;
        std::vector<VBitset> class_adj;  // union of members' neighborhoods
        for (auto v : color_order_) {
            if (!p.test(v)) continue;
            bool placed = false;
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (!class_adj[c].test(v)) {
                    classes[c].push_back(v);
                    class_adj[c].or_row(row(v));
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.push_back({v});
                class_adj.emplace_back(V);
                class_adj.back().or_row(row(v));
            }
        }
        order.clear();
        color.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c]) {
                order.push_back(v);
                color.push_back(static_cast<std::uint32_t>(c + 1));
            }
    }

    std::size_t V, W;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint32_t> color_order_;
    std::vector<std::uint32_t> best_;
    bool best_from_greedy_ = true;
};

// Plain branch and bound for spaces too large for a packed adjacency matrix;
// correct but with no coloring bound. Only the candidate-count prune applies.
inline void plain_expand(const CandidateSpace& space, unsigned d, std::vector<std::uint64_t>& r,
                         const std::vector<std::uint64_t>& p, std::vector<std::uint64_t>& best) {
    if (r.size() + p.size() <= best.size()) return;
    if (p.empty()) {
        if (r.size() > best.size()) best = r;
        return;
    }
    std::vector<std::uint64_t> pool = p;
    while (!pool.empty()) {
        if (r.size() + pool.size() <= best.size()) return;
        std::uint64_t v = pool.front();
        pool.erase(pool.begin());
        Matrix mv = space.decode(v);
        std::vector<std::uint64_t> next;
        for (auto u : pool)
            if (rank_distance(mv, space.decode(u)) >= d) next.push_back(u);
        r.push_back(v);
        plain_expand(space, d, r, next, best);
        r.pop_back();
    }
}

inline SearchResult finish_search(const SearchProblem& p, const detail::CandidateSpace& space,
                                  const std::vector<std::uint64_t>& picked) {
    std::vector<Matrix> words;
    words.reserve(picked.size());
    for (auto idx : picked) words.push_back(space.decode(idx));

    SearchResult res{.size = picked.size(),
                     .code = RankMetricCode(p.field(), space.box_rows, space.box_cols, words),
                     .ferrers_code = std::nullopt,
                     .bound = 0,
                     .tight = false};
    if (p.diagram()) {
        res.ferrers_code = FerrersCode(*p.diagram(), p.field(), std::move(words));
        res.bound = ferrers_singleton_bound(*p.diagram(), p.distance(), p.field()->size());
    } else {
        auto [m, n] = *p.shape();
        if (p.distance() <= std::min(m, n) && std::min(m, n) >= 1)
            res.bound = rank_singleton_bound(static_cast<unsigned>(m), static_cast<unsigned>(n),
                                             p.distance(), p.field()->size());
        else
            res.bound = ferrers_singleton_bound(FerrersDiagram::rectangle(static_cast<unsigned>(m),
                                                                          static_cast<unsigned>(n)),
                                                p.distance(), p.field()->size());
    }
    res.tight = BigInt(res.size) == res.bound;
    return res;
}

namespace detail {

// Warm-start incumbent: an MRD code on the largest rectangle inscribed in the
// support, placed into the box. Valid independently of the bounds under test
// (the seed is itself a verified code); it only speeds up the proof side.
inline std::vector<std::uint32_t> gabidulin_seed(const SearchProblem& p,
                                                 const CandidateSpace& space) {
    std::uint32_t q = space.field->size();
    if (!Field::is_prime(q)) return {};
    unsigned d = p.distance();

    // candidate inscribed rectangles: the top r rows by the rightmost c
    // columns, fully dotted iff the r-th row has at least c dots
    std::vector<std::pair<unsigned, unsigned>> rects;
    if (p.shape()) {
        rects.emplace_back(static_cast<unsigned>(p.shape()->first),
                           static_cast<unsigned>(p.shape()->second));
    } else {
        const auto& lens = p.diagram()->row_lengths();
        for (unsigned r = 0; r < lens.size(); ++r)
            for (unsigned c = 1; c <= lens[r]; ++c) rects.emplace_back(r + 1, c);
    }

    std::uint64_t best_size = 0;
    std::vector<std::uint32_t> best;
    for (auto [a, b] : rects) {
        if (d > std::min(a, b)) continue;
        unsigned n = std::min(a, b), m = std::max(a, b), k = n - d + 1;
        unsigned exponent = m * k;
        if (exponent >= 21 || (1ull << exponent) <= best_size) continue;
        std::uint64_t qm = 1;
        bool fits = true;
        for (unsigned i = 0; i < m && fits; ++i) {
            qm *= q;
            fits = qm <= Field::max_size;
        }
        if (!fits) continue;
        try {
            std::vector<std::uint32_t> basis(m);
            std::uint64_t pw = 1;
            for (unsigned i = 0; i < m; ++i, pw *= q) basis[i] = static_cast<std::uint32_t>(pw);
            RankMetricCode code = gabidulin_construct(q, m, n, k, basis);
            std::vector<std::uint32_t> indices;
            indices.reserve(code.size());
            for (const auto& w : code.words()) {
                // orient to a x b, then place at the top rows, rightmost columns
                Matrix oriented = (w.rows() == a && w.cols() == b) ? w : w.transpose();
                Matrix placed(space.field, space.box_rows, space.box_cols);
                for (unsigned r = 0; r < a; ++r)
                    for (unsigned c = 0; c < b; ++c)
                        placed.set(r, space.box_cols - b + c, oriented.at(r, c));
                indices.push_back(static_cast<std::uint32_t>(space.encode(placed)));
            }
            best_size = code.size();
            best = std::move(indices);
        } catch (const error&) {
            // construction out of range for this rectangle; not a seed
        }
    }
    return best;
}

}  // namespace detail

// Maximum set of candidates pairwise at rank distance >= d, plus the
// lexicographically smallest witness of that size.
inline SearchResult max_code_exact(const SearchProblem& p) {
    constexpr std::uint64_t exact_cap = 1ull << 20;
    constexpr std::uint64_t dense_cap = 1ull << 13;
    auto space = detail::CandidateSpace::make(p, exact_cap);
    std::uint64_t V = space.count;

    std::vector<std::uint64_t> picked;
    if (p.distance() == 1) {
        // any two distinct matrices differ in rank >= 1: the whole space
        picked.resize(V);
        for (std::uint64_t i = 0; i < V; ++i) picked[i] = i;
    } else if (V <= dense_cap) {
        std::vector<Matrix> mats;
        mats.reserve(V);
        for (std::uint64_t i = 0; i < V; ++i) mats.push_back(space.decode(i));
        std::size_t w = (V + 63) / 64;
        std::vector<std::uint64_t> adj(V * w, 0);
        for (std::uint64_t a = 0; a < V; ++a)
            for (std::uint64_t b = a + 1; b < V; ++b)
                if (rank_distance(mats[a], mats[b]) >= p.distance()) {
                    adj[a * w + (b >> 6)] |= 1ull << (b & 63);
                    adj[b * w + (a >> 6)] |= 1ull << (a & 63);
                }
        detail::MaxCliqueSolver solver(V, std::move(adj), space.coset_color_order());

        auto mrd = detail::gabidulin_seed(p, space);
        if (!mrd.empty()) solver.seed(mrd);
        for (std::uint64_t greedy_seed = 1; greedy_seed <= 8; ++greedy_seed) {
            std::vector<std::uint64_t> order(V);
            for (std::uint64_t i = 0; i < V; ++i) order[i] = i;
            detail::shuffle_indices(order, greedy_seed);
            detail::VBitset allowed = detail::VBitset::full(V);
            std::vector<std::uint32_t> clique;
            for (auto v : order)
                if (allowed.test(v)) {
                    clique.push_back(static_cast<std::uint32_t>(v));
                    allowed.mask_with(solver.row(v));
                }
            solver.seed(clique);
        }

        for (auto v : solver.solve(/*cayley=*/true)) picked.push_back(v);
    } else {
        std::vector<std::uint64_t> all(V);
        for (std::uint64_t i = 0; i < V; ++i) all[i] = i;
        std::vector<std::uint64_t> r;
        detail::plain_expand(space, p.distance(), r, all, picked);
    }
    return detail::finish_search(p, space, picked);
}

// Seeded randomized greedy: shuffle the candidates, admit each one at rank
// distance >= d from everything admitted. Valid but not optimal in general.
inline SearchResult max_code_greedy(const SearchProblem& p) {
    constexpr std::uint64_t greedy_cap = 1ull << 24;
    auto space = detail::CandidateSpace::make(p, greedy_cap);

    std::vector<std::uint64_t> order(space.count);
    for (std::uint64_t i = 0; i < space.count; ++i) order[i] = i;
    detail::shuffle_indices(order, p.seed());

    std::vector<std::uint64_t> picked;
    std::vector<Matrix> mats;
    for (auto idx : order) {
        Matrix m = space.decode(idx);
        bool ok = true;
        for (const auto& u : mats)
            if (rank_distance(m, u) < p.distance()) {
                ok = false;
                break;
            }
        if (ok) {
            picked.push_back(idx);
            mats.push_back(std::move(m));
        }
    }
    return detail::finish_search(p, space, picked);
}

}  // namespace ferrocode

#endif
