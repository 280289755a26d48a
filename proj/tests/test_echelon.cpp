#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <ferrocode/echelon.hpp>

using namespace ferrocode;

namespace {

FieldPtr f2() {
    static FieldPtr f = Field::make(2, 1);
    return f;
}

Matrix example_rref_base() {
    return Matrix::from_rows(f2(), {
                                       {1, 0, 0, 0, 0, 0, 1},
                                       {0, 0, 1, 0, 0, 1, 0},
                                       {0, 0, 0, 0, 1, 1, 1},
                                   });
}

// all distinct RREFs of subspaces of F_2^n with dimension <= kmax, found by
// reducing every kmax x n binary matrix (independent of the EF machinery)
std::vector<RrefMatrix> all_rrefs(std::size_t n, std::size_t kmax) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<RrefMatrix> out;
    for (std::uint64_t idx = 0; idx < (1ull << (kmax * n)); ++idx) {
        Matrix a(f2(), kmax, n);
        std::uint64_t t = idx;
        for (std::size_t r = 0; r < kmax; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                a.set(r, c, t & 1);
                t >>= 1;
            }
        RrefMatrix r = a.rref();
        auto key = r.base().values();
        key.push_back(static_cast<std::uint32_t>(r.rank()));
        if (seen.insert(key).second) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

TEST_CASE("identifying vectors", "[echelon]") {
    RrefMatrix r = example_rref_base().rref();
    CHECK(identifying_vector(r) == IdentifyingVector::parse("1010100"));
    CHECK(identifying_vector(r).to_string() == "1010100");

    CHECK(identifying_vector(Matrix::identity(f2(), 4).rref()).to_string() == "1111");
    CHECK(identifying_vector(Matrix(f2(), 0, 5).rref()).to_string() == "00000");

    CHECK(IdentifyingVector::parse("1100100").weight() == 3);
    CHECK_THROWS_MATCHES(IdentifyingVector::parse("10a1"), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::parse_error;
                         }));
}

TEST_CASE("echelon Ferrers forms", "[echelon]") {
    SECTION("the 3x7 displayed form") {
        EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse("1100100"));
        CHECK(ef.to_string() ==
              "10..0..\n"
              "01..0..\n"
              "00001..\n");
        CHECK(ef.diagram() == FerrersDiagram({4, 4, 2}));
    }

    SECTION("the displayed diagram with rows of 4, 3, 2 dots") {
        EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse("1010100"));
        CHECK(ef.diagram() == FerrersDiagram({4, 3, 2}));
        CHECK(ef.to_string() ==
              "1.0.0..\n"
              "001.0..\n"
              "00001..\n");
    }

    SECTION("identity form has no free dots") {
        EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse("11111"));
        CHECK(ef.diagram().dots() == 0);
        CHECK(ef.k() == 5);
    }

    SECTION("zero-weight vector maps to the empty form") {
        EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse("0000"));
        CHECK(ef.k() == 0);
        CHECK(ef.diagram().dots() == 0);
    }

    SECTION("diagram fits in k rows and n-k columns, all vectors up to n = 7") {
        for (std::size_t n = 1; n <= 7; ++n)
            for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
                std::vector<std::uint8_t> v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = (bits >> j) & 1;
                IdentifyingVector iv(v);
                EchelonFerrersForm ef = echelon_ferrers_form(iv);
                REQUIRE(ef.diagram().rows() <= iv.weight());
                REQUIRE(ef.diagram().cols() <= n - iv.weight());
            }
    }
}

TEST_CASE("extracting the Ferrers-diagram matrix", "[echelon]") {
    SECTION("the displayed dot-filling") {
        auto [ef, fill] = extract_ferrers_matrix(example_rref_base().rref());
        CHECK(ef.diagram() == FerrersDiagram({4, 3, 2}));
        CHECK(fill == Matrix::from_rows(f2(), {
                                                  {0, 0, 0, 1},
                                                  {0, 0, 1, 0},
                                                  {0, 0, 1, 1},
                                              }));
    }

    SECTION("identity has an empty filling") {
        auto [ef, fill] = extract_ferrers_matrix(Matrix::identity(f2(), 3).rref());
        CHECK(fill.rows() == 0);
        CHECK(fill.cols() == 0);
        CHECK(ef.diagram().dots() == 0);
    }

    SECTION("pinned cells are verified") {
        Matrix bad = Matrix::from_rows(f2(), {{1, 1}, {0, 1}});  // pivot column 1 not cleared
        RrefMatrix fake(bad, {0, 1});
        CHECK_THROWS_MATCHES(extract_ferrers_matrix(fake), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::pinned_mismatch;
                             }));
    }
}

TEST_CASE("injecting fills", "[echelon]") {
    EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse("1100100"));

    SECTION("all-zero fill pins just the pivots") {
        RrefMatrix r = inject_ferrers_matrix(ef, Matrix(f2(), 3, 4));
        Matrix expected(f2(), 3, 7);
        expected.set(0, 0, 1);
        expected.set(1, 1, 1);
        expected.set(2, 4, 1);
        CHECK(r.base() == expected);
        CHECK(r.pivot_columns() == std::vector<std::size_t>{0, 1, 4});
    }

    SECTION("round trip through the displayed example") {
        auto [ef6, fill6] = extract_ferrers_matrix(example_rref_base().rref());
        RrefMatrix back = inject_ferrers_matrix(ef6, fill6);
        CHECK(back.base() == example_rref_base());
    }

    SECTION("map-based fill errors") {
        FerrersFill incomplete;
        incomplete[{0, 0}] = 1;
        CHECK_THROWS_MATCHES(inject_ferrers_matrix(ef, f2(), incomplete), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::incomplete_fill;
                             }));

        FerrersFill extra;
        for (auto [r, c] : ef.diagram().dot_cells()) extra[{r, c}] = 0;
        extra[{2, 0}] = 1;  // (2,0) is off the (4,4,2) dots
        CHECK_THROWS_MATCHES(inject_ferrers_matrix(ef, f2(), extra), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::extra_cell;
                             }));
    }

    SECTION("matrix fill with an off-dot nonzero entry") {
        Matrix bad(f2(), 3, 4);
        bad.set(2, 0, 1);
        CHECK_THROWS_MATCHES(inject_ferrers_matrix(ef, bad), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::extra_cell;
                             }));
    }
}

TEST_CASE("extract and inject are mutually inverse", "[echelon][property]") {
    SECTION("inject then extract over every RREF of F_2^5, k <= 3") {
        for (const auto& r : all_rrefs(5, 3)) {
            auto [ef, fill] = extract_ferrers_matrix(r);
            RrefMatrix back = inject_ferrers_matrix(ef, fill);
            REQUIRE(back.base() == r.base());
            REQUIRE(back.pivot_columns() == r.pivot_columns());
            auto [ef2, fill2] = extract_ferrers_matrix(back);
            REQUIRE(fill2 == fill);
        }
    }

    SECTION("identifying vector survives injection, randomized fills") {
        std::mt19937_64 rng(17);
        std::vector<std::string> vs = {"1100100", "1010100", "0110010", "111000", "0101"};
        for (const auto& vstr : vs) {
            EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector::parse(vstr));
            for (int trial = 0; trial < 50; ++trial) {
                FerrersFill fill;
                for (auto cell : ef.diagram().dot_cells())
                    fill[cell] = static_cast<std::uint32_t>(rng() % 2);
                RrefMatrix r = inject_ferrers_matrix(ef, f2(), fill);
                REQUIRE(identifying_vector(r) == ef.v());
            }
        }
    }

    SECTION("distinct fills give distinct subspaces, F_2, n = 5, k = 2") {
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
            if (__builtin_popcountll(bits) != 2) continue;
            std::vector<std::uint8_t> v(5);
            for (std::size_t j = 0; j < 5; ++j) v[j] = (bits >> j) & 1;
            EchelonFerrersForm ef = echelon_ferrers_form(IdentifyingVector(v));
            auto cells = ef.diagram().dot_cells();
            std::set<std::vector<std::uint32_t>> bases;
            for (std::uint64_t raw = 0; raw < (1ull << cells.size()); ++raw) {
                FerrersFill fill;
                for (std::size_t t = 0; t < cells.size(); ++t)
                    fill[cells[t]] = (raw >> t) & 1;
                RrefMatrix r = inject_ferrers_matrix(ef, f2(), fill);
                REQUIRE(bases.insert(r.base().values()).second);
            }
        }
    }
}

TEST_CASE("counting spanning matrices", "[echelon]") {
    CHECK(count_spanning_matrices(3, 2) == 168);
    CHECK(count_spanning_matrices(1, 2) == 1);
    CHECK(count_spanning_matrices(example_rref_base().rref()) == 168);

    SECTION("brute-force oracle over ordered pairs in F_3^2") {
        FieldPtr f3 = Field::make(3, 1);
        unsigned count = 0;
        for (std::uint32_t a = 0; a < 9; ++a)
            for (std::uint32_t b = 0; b < 9; ++b) {
                Matrix m = Matrix::from_rows(f3, {{a / 3, a % 3}, {b / 3, b % 3}});
                if (m.rank() == 2) ++count;
            }
        CHECK(count == 48);
        CHECK(count_spanning_matrices(2, 3) == count);
    }

    SECTION("independent of which rank-k subspace is given") {
        Matrix other = Matrix::from_rows(f2(), {
                                                   {1, 1, 0, 1, 0, 0, 0},
                                                   {0, 0, 1, 1, 0, 0, 1},
                                                   {0, 0, 0, 0, 0, 1, 1},
                                               });
        CHECK(count_spanning_matrices(other.rref()) ==
              count_spanning_matrices(example_rref_base().rref()));
    }
}
