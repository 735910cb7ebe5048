#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cyclic_stab/error.hpp"
#include "cyclic_stab/polymat.hpp"
#include "test_util.hpp"

using namespace cstab;
using testutil::q;

namespace {

TruncPoly x_pow(const Ring& r, int k) { return TruncPoly::var_pow(r, k); }

TruncPoly random_poly(std::mt19937& rng, const Ring& r) {
    std::uniform_int_distribution<int> c(-5, 5);
    TruncPoly p(r);
    for (const auto& e : monomial_basis(r))
        if (rng() % 2) p.add_term(e, q(c(rng), 1 + rng() % 3));
    return p;
}

}  // namespace

TEST_CASE("poly_mul_trunc examples") {
    Ring r{{"x"}, 3};
    TruncPoly one = TruncPoly::constant(r, 1);
    CHECK(poly_mul_trunc(x_pow(r, 1) + one, x_pow(r, 2)) == x_pow(r, 2));
    CHECK(poly_mul_trunc(x_pow(r, 1) + one, TruncPoly(r)).is_zero());
    CHECK(poly_mul_trunc(x_pow(r, 2), x_pow(r, 2)).is_zero());
}

TEST_CASE("mismatched rings are rejected") {
    TruncPoly a = TruncPoly::var_pow(Ring{{"x"}, 3}, 1);
    TruncPoly b = TruncPoly::var_pow(Ring{{"x"}, 4}, 1);
    try {
        (void)poly_mul_trunc(a, b);
        FAIL("expected RingMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RingMismatch);
    }
}

TEST_CASE("no stored zero coefficients and degrees below the bound") {
    Ring r{{"x", "y"}, 4};
    TruncPoly p = TruncPoly::monomial(r, {1, 1}, 2) + TruncPoly::monomial(r, {1, 1}, -2);
    CHECK(p.coeffs().empty());
    TruncPoly s = TruncPoly::monomial(r, {2, 0}) * TruncPoly::monomial(r, {1, 1});
    CHECK(s.is_zero());
    TruncPoly t = TruncPoly::monomial(r, {1, 0}) * TruncPoly::monomial(r, {1, 1});
    for (const auto& [e, c] : t.coeffs()) CHECK(total_degree(e) < 4);
    CHECK(t.coeff({2, 1}) == 1);
}

TEST_CASE("mat_kernel_basis examples") {
    CHECK(mat_kernel_basis(RationalMatrix::identity(3)).empty());
    auto z = mat_kernel_basis(RationalMatrix(2, 2));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == RatVec{1, 0});
    CHECK(z[1] == RatVec{0, 1});
    auto k = mat_kernel_basis(RationalMatrix::from_rows({{1, 1}, {1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVec{-1, 1});  // same line as (1, -1), free column normalized to 1
}

TEST_CASE("mat_solve examples") {
    auto s = mat_solve(RationalMatrix::identity(2), {q(2, 3), 5});
    REQUIRE(s);
    CHECK(*s == RatVec{q(2, 3), 5});
    CHECK_FALSE(mat_solve(RationalMatrix(2, 2), {1, 0}));
    auto h = mat_solve(RationalMatrix::from_rows({{2}}), {1});
    REQUIRE(h);
    CHECK(*h == RatVec{q(1, 2)});
    try {
        (void)mat_solve(RationalMatrix::identity(2), {1, 2, 3});
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimensionMismatch);
    }
}

TEST_CASE("ring axioms on random truncated polynomials") {
    std::mt19937 rng(7);
    for (Ring r : {Ring{{"x"}, 6}, Ring{{"x", "y"}, 4}}) {
        for (int i = 0; i < 30; ++i) {
            TruncPoly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-2, 2), dim(1, 6);
    for (int t = 0; t < 60; ++t) {
        size_t m = dim(rng), n = dim(rng);
        RationalMatrix a(m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) a.at(i, j) = q(c(rng), 1 + rng() % 2);
        auto ker = mat_kernel_basis(a);
        for (const auto& v : ker) CHECK(is_zero_vec(a.apply(v)));
        CHECK(mat_rank(a) + ker.size() == n);
        CHECK(mat_kernel_basis(a) == ker);  // deterministic
        RatVec b(m);
        for (auto& x : b) x = c(rng);
        auto s = mat_solve(a, b);
        if (s) CHECK(a.apply(*s) == b);
    }
}
