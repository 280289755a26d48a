#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <ferrocode/codes.hpp>

using namespace ferrocode;

namespace {

FieldPtr f2() {
    static FieldPtr f = Field::make(2, 1);
    return f;
}

RankMetricCode example1() {
    std::vector<Matrix> words = {Matrix::from_rows(f2(), {{1, 1}, {1, 1}}),
                                 Matrix::from_rows(f2(), {{1, 0}, {0, 1}})};
    return RankMetricCode(f2(), 2, 2, words);
}

unsigned hamming(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

TEST_CASE("the two-codeword 2x2 code", "[codes]") {
    RankMetricCode c = example1();
    CHECK(c.size() == 2);
    CHECK(c.row_dim() == 2);
    CHECK(c.col_dim() == 2);
    CHECK(c.min_distance() == 2);
    CHECK_FALSE(c.is_linear());
    CHECK_FALSE(c.dimension().has_value());
}

TEST_CASE("code construction", "[codes]") {
    SECTION("duplicates collapse") {
        std::vector<Matrix> words = {Matrix(f2(), 2, 2), Matrix(f2(), 2, 2),
                                     Matrix::identity(f2(), 2)};
        RankMetricCode c(f2(), 2, 2, words);
        CHECK(c.size() == 2);
        CHECK(c.min_distance() == 2);
    }

    SECTION("shape and field are enforced") {
        std::vector<Matrix> bad_shape = {Matrix(f2(), 2, 3)};
        CHECK_THROWS_AS(RankMetricCode(f2(), 2, 2, bad_shape), error);
        std::vector<Matrix> bad_field = {Matrix(Field::make(3, 1), 2, 2)};
        CHECK_THROWS_AS(RankMetricCode(f2(), 2, 2, bad_field), error);
    }

    SECTION("minimum distance needs two codewords") {
        RankMetricCode one(f2(), 2, 2, {Matrix(f2(), 2, 2)});
        CHECK_THROWS_MATCHES(one.min_distance(), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::too_few_codewords;
                             }));
    }

    SECTION("the singleton zero code is linear") {
        RankMetricCode zero(f2(), 2, 2, {Matrix(f2(), 2, 2)});
        CHECK(zero.is_linear());
        CHECK(zero.dimension() == 0u);
    }
}

TEST_CASE("correctable errors", "[codes]") {
    CHECK(correctable_errors(1) == 0);
    CHECK(correctable_errors(2) == 0);
    CHECK(correctable_errors(5) == 2);
    CHECK_THROWS_AS(correctable_errors(0), error);

    for (unsigned d = 1; d < 40; ++d) REQUIRE(correctable_errors(d) <= correctable_errors(d + 1));
}

TEST_CASE("classical Singleton bound", "[codes]") {
    CHECK(classical_singleton_bound(7, 3, 2) == 32);
    CHECK(classical_singleton_bound(5, 5, 7) == 7);
    CHECK(classical_singleton_bound(6, 1, 3) == big_pow(3, 6));
    CHECK(classical_singleton_bound(100, 1, 2) == big_pow(2, 100));  // exceeds 64 bits
    CHECK_THROWS_AS(classical_singleton_bound(3, 4, 2), error);
    CHECK_THROWS_AS(classical_singleton_bound(3, 0, 2), error);
}

TEST_CASE("rank-metric Singleton bound", "[codes]") {
    CHECK(rank_singleton_bound(3, 3, 2, 2) == 64);
    CHECK(rank_singleton_bound(2, 2, 2, 2) == 4);
    CHECK(rank_singleton_bound(4, 5, 1, 2) == big_pow(2, 20));
    CHECK(rank_singleton_exponent(3, 3, 2) == 6);
    CHECK(rank_singleton_exponent(2, 3, 2) == std::min(2u * 2u, 3u * 1u));
    CHECK_THROWS_AS(rank_singleton_bound(2, 2, 3, 2), error);
}

TEST_CASE("coordinate deletion on classical codes", "[codes]") {
    SECTION("deleting nothing changes nothing") {
        HammingCode c(f2(), 3, {{0, 0, 0}, {1, 1, 1}});
        DeletionReport rep = delete_coordinates(c, {});
        CHECK(rep.all_distinct);
        CHECK(rep.words == c.words());
    }

    SECTION("binary repetition code of length 3") {
        HammingCode c(f2(), 3, {{0, 0, 0}, {1, 1, 1}});
        CHECK(c.min_distance() == 3);
        for (std::size_t p1 = 0; p1 < 3; ++p1)
            for (std::size_t p2 = p1 + 1; p2 < 3; ++p2) {
                DeletionReport rep = delete_coordinates(c, {p1, p2});
                REQUIRE(rep.all_distinct);
                REQUIRE(rep.words ==
                        std::vector<std::vector<std::uint32_t>>{{0}, {1}});
            }
    }

    SECTION("random codes stay distinct after d-1 deletions") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t n = 4 + rng() % 5;
            std::set<std::vector<std::uint32_t>> words;
            std::size_t target = 2 + rng() % 7;
            while (words.size() < target) {
                std::vector<std::uint32_t> w(n);
                for (auto& x : w) x = static_cast<std::uint32_t>(rng() % 2);
                words.insert(w);
            }
            HammingCode c(f2(), n, {words.begin(), words.end()});

            // pairwise Hamming oracle
            unsigned d = static_cast<unsigned>(n) + 1;
            for (auto it = words.begin(); it != words.end(); ++it)
                for (auto jt = std::next(it); jt != words.end(); ++jt)
                    d = std::min(d, hamming(*it, *jt));
            REQUIRE(c.min_distance() == d);

            std::set<std::size_t> positions;
            while (positions.size() < d - 1) positions.insert(rng() % n);
            REQUIRE(delete_coordinates(c, positions).all_distinct);
        }
    }

    SECTION("position bounds") {
        HammingCode c(f2(), 3, {{0, 0, 0}, {1, 1, 1}});
        CHECK_THROWS_AS(delete_coordinates(c, {3}), error);
    }
}

TEST_CASE("the 64-codeword example code", "[codes][gabidulin]") {
    RankMetricCode c = gabidulin_example_code();
    CHECK(c.size() == 64);
    CHECK(c.row_dim() == 3);
    CHECK(c.col_dim() == 3);

    SECTION("contains both displayed expansions") {
        CHECK(c.contains(Matrix::from_rows(f2(), {{1, 0, 0}, {0, 1, 0}, {1, 0, 0}})));
        CHECK(c.contains(Matrix::from_rows(f2(), {{1, 0, 0}, {1, 1, 0}, {1, 1, 0}})));
    }

    SECTION("minimum distance two, and the code is linear and MRD") {
        CHECK(c.min_distance() == 2);
        CHECK(c.is_linear());
        CHECK(c.dimension() == 6u);  // base-field dimension; extension dimension is 2
        REQUIRE(c.gabidulin_meta().has_value());
        CHECK(c.gabidulin_meta()->ext_k == 2);
        CHECK(BigInt(c.size()) == rank_singleton_bound(3, 3, 2, 2));
    }

    SECTION("kernel enumeration oracle") {
        FieldPtr f8 = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
        const std::uint32_t alpha = 2;
        std::vector<std::uint32_t> h = {1, f8->pow(alpha, 2), alpha};
        std::vector<std::uint32_t> basis = {1, alpha, f8->pow(alpha, 2)};
        std::vector<Matrix> kernel;
        for (std::uint32_t x0 = 0; x0 < 8; ++x0)
            for (std::uint32_t x1 = 0; x1 < 8; ++x1)
                for (std::uint32_t x2 = 0; x2 < 8; ++x2) {
                    std::uint32_t s = f8->add(f8->mul(x0, h[0]),
                                              f8->add(f8->mul(x1, h[1]), f8->mul(x2, h[2])));
                    if (s == 0) kernel.push_back(expand_ext_vector(f8, {x0, x1, x2}, basis));
                }
        REQUIRE(kernel.size() == 64);
        std::sort(kernel.begin(), kernel.end());
        CHECK(std::equal(kernel.begin(), kernel.end(), c.words().begin(), c.words().end()));
    }
}

TEST_CASE("general Gabidulin construction", "[codes][gabidulin]") {
    FieldPtr f8 = Field::make(2, 3);
    const std::uint32_t alpha = 2;

    SECTION("(2,3,3,2) gives a (3x3, 64, 2) MRD code") {
        RankMetricCode c = gabidulin_construct(2, 3, 3, 2, {1, alpha, f8->pow(alpha, 2)});
        CHECK(c.size() == 64);
        CHECK(c.min_distance() == 2);  // brute force over 2016 pairs
        CHECK(c.is_linear());
        CHECK(BigInt(c.size()) == rank_singleton_bound(3, 3, 2, 2));
    }

    SECTION("(2,2,2,1) gives a (2x2, 4, 2) MRD code, exhaustive over 6 pairs") {
        RankMetricCode c = gabidulin_construct(2, 2, 2, 1, {1, 2});
        CHECK(c.size() == 4);
        unsigned d = std::min(c.row_dim(), c.col_dim()) + 1;
        unsigned pairs = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                d = std::min<unsigned>(d, static_cast<unsigned>(
                                              rank_distance(c.words()[i], c.words()[j])));
                ++pairs;
            }
        CHECK(pairs == 6);
        CHECK(d == 2);
        CHECK(BigInt(c.size()) == rank_singleton_bound(2, 2, 2, 2));
    }

    SECTION("k = n is the degenerate whole-space code with d = 1") {
        RankMetricCode c = gabidulin_construct(2, 3, 3, 3, {1, alpha, f8->pow(alpha, 2)});
        CHECK(c.size() == 512);
        CHECK(c.min_distance() == 1);
    }

    SECTION("MRD equality for all constructible instances with q^m <= 2^9") {
        struct Params {
            std::uint32_t q, m, n, k;
            std::vector<std::uint32_t> basis;
        };
        std::vector<Params> runs = {
            {2, 2, 2, 1, {1, 2}},      {2, 3, 2, 1, {1, 2, 4}},    {2, 3, 3, 2, {1, 2, 4}},
            {2, 3, 3, 1, {1, 2, 4}},   {3, 2, 2, 1, {1, 3}},       {2, 4, 3, 2, {1, 2, 4, 8}},
            {2, 4, 4, 2, {1, 2, 4, 8}},
        };
        for (const auto& p : runs) {
            RankMetricCode c = gabidulin_construct(p.q, p.m, p.n, p.k, p.basis);
            unsigned d = c.min_distance();
            INFO("q=" << p.q << " m=" << p.m << " n=" << p.n << " k=" << p.k);
            REQUIRE(d == p.n - p.k + 1);
            REQUIRE(BigInt(c.size()) ==
                    rank_singleton_bound(static_cast<unsigned>(c.row_dim()),
                                         static_cast<unsigned>(c.col_dim()), d, p.q));
        }
    }

    SECTION("parameter validation") {
        CHECK_THROWS_MATCHES(gabidulin_construct(4, 2, 2, 1, {1, 4}), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::bad_params;
                             }));
        CHECK_THROWS_AS(gabidulin_construct(2, 3, 4, 2, {1, 2, 4}), error);
        CHECK_THROWS_MATCHES(gabidulin_construct(2, 2, 2, 1, {1, 1}), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::dependent_points;
                             }));
    }
}

TEST_CASE("linearity checks", "[codes]") {
    CHECK_FALSE(example1().is_linear());
    CHECK(gabidulin_example_code().is_linear());

    // closed under addition but missing scalar closure over F_3
    FieldPtr f3 = Field::make(3, 1);
    Matrix one = Matrix::from_rows(f3, {{1}});
    Matrix two = Matrix::from_rows(f3, {{2}});
    RankMetricCode full(f3, 1, 1, {Matrix(f3, 1, 1), one, two});
    CHECK(full.is_linear());
    RankMetricCode partial(f3, 1, 1, {Matrix(f3, 1, 1), one});
    CHECK_FALSE(partial.is_linear());
}

TEST_CASE("theorem-style properties of rank codes", "[codes][property]") {
    std::mt19937_64 rng(41);

    SECTION("|C| respects the rank Singleton bound on random codes") {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t m = 2 + rng() % 2, n = 2 + rng() % 2;
            std::set<std::vector<std::uint32_t>> raw;
            std::size_t target = 2 + rng() % 6;
            std::vector<Matrix> words;
            while (words.size() < target) {
                Matrix w(f2(), m, n);
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        w.set(r, c, static_cast<std::uint32_t>(rng() % 2));
                if (raw.insert(w.values()).second) words.push_back(std::move(w));
            }
            RankMetricCode c(f2(), m, n, words);
            unsigned d = c.min_distance();
            REQUIRE(BigInt(c.size()) <=
                    rank_singleton_bound(static_cast<unsigned>(m), static_cast<unsigned>(n), d, 2));
        }
    }

    SECTION("deleting d-1 columns or rows keeps codewords distinct") {
        for (int trial = 0; trial < 100; ++trial) {
            RankMetricCode c = trial % 2 == 0 ? gabidulin_example_code() : example1();
            unsigned d = c.min_distance();
            std::set<std::vector<std::uint32_t>> col_images, row_images;
            for (const auto& w : c.words()) {
                REQUIRE(col_images.insert(w.puncture(0, d - 1).values()).second);
                REQUIRE(row_images.insert(w.puncture(d - 1, 0).values()).second);
            }
        }
    }
}
