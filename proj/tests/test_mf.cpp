#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cyclic_stab/an_catalog.hpp"
#include "cyclic_stab/error.hpp"
#include "cyclic_stab/mf.hpp"
#include "mf_oracle.hpp"
#include "test_util.hpp"

using namespace cstab;
using testutil::q;

namespace {

const Ring R{{"x"}, 8};

PolyMatrix m1(const TruncPoly& p) { return PolyMatrix::scalar(p.ring(), 1, p); }
TruncPoly xp(int k, const Ring& r = R) { return TruncPoly::var_pow(r, k); }

template <class F>
Errc error_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::DocumentError;
}

MatrixFactorization plain(const MatrixFactorization& x) {
    MatrixFactorization y = x;
    y.weights.reset();
    return y;
}

HomOptions nonequivariant() {
    HomOptions o;
    o.invariant_only = false;
    return o;
}

}  // namespace

TEST_CASE("make_mf examples") {
    TruncPoly w = xp(3);
    auto a2 = make_mf(w, m1(xp(1)), m1(xp(2)));
    CHECK(a2.rank() == 1);
    CHECK(error_of([&] { make_mf(w, m1(xp(1)), m1(xp(1))); }) == Errc::NotAFactorization);
    TruncPoly w2 = xp(2) + xp(5).scaled(3);
    CHECK_NOTHROW(make_mf(w2, m1(TruncPoly::constant(R, 1)), m1(w2)));
}

TEST_CASE("equivariance of the differential is enforced") {
    Weights ok{{0}, {q(1, 3)}, 3};
    CHECK_NOTHROW(make_mf(xp(3), m1(xp(1)), m1(xp(2)), ok));
    Weights bad{{0}, {q(2, 3)}, 3};
    CHECK(error_of([&] { make_mf(xp(3), m1(xp(1)), m1(xp(2)), bad); }) == Errc::NotEquivariant);
}

TEST_CASE("shift examples") {
    auto x = rank_one_mf(R, 1, 2);
    auto s = shift(x);
    CHECK(s.delta0 == m1(-xp(2)));
    CHECK(s.delta1 == m1(-xp(1)));
    CHECK(shift(s) == x);
    auto k = make_mf(xp(3), m1(TruncPoly::constant(R, 1)), m1(xp(3)));
    CHECK(shift(k).delta0 == m1(-xp(3)));
    CHECK(shift(k).delta1 == m1(TruncPoly::constant(R, -1)));
    Weights w{{0}, {q(1, 3)}, 3};
    auto e = rank_one_mf(R, 1, 2, w);
    CHECK(shift(e).weights->w0 == std::vector<Rat>{q(1, 3)});
    CHECK(shift(shift(e)) == e);
}

TEST_CASE("cone examples") {
    auto x = rank_one_mf(R, 1, 2), y = rank_one_mf(R, 2, 1);
    ConeData ci = cone(identity_map(x));
    CHECK(ci.cone.rank() == 2);
    CHECK(is_contractible(ci.cone));
    CHECK(is_closed(ci.incl));
    CHECK(is_closed(ci.proj));

    ConeData cz = cone(zero_map(x, y, 0));
    CHECK(cz.cone.delta0 == PolyMatrix::block(y.delta0, m1(TruncPoly(R)), m1(TruncPoly(R)), -x.delta1));
    CHECK(cz.cone.delta1 == PolyMatrix::block(y.delta1, m1(TruncPoly(R)), m1(TruncPoly(R)), -x.delta0));

    // (1, x): (x, x^2) -> (x^2, x) is closed and generates Hom^0
    HomElement g{x, y, 0, m1(TruncPoly::constant(R, 1)), m1(xp(1)), std::nullopt};
    REQUIRE(is_closed(g));
    ConeData cg = cone(g);
    auto fp = [&](const MatrixFactorization& z) {
        std::vector<size_t> out;
        for (const auto& t : {x, y}) {
            HomComplex h(z, t, nonequivariant());
            out.push_back(h.dim(0));
            out.push_back(h.dim(1));
        }
        return out;
    };
    CHECK(fp(cg.cone) == fp(x));
    CHECK(find_isomorphism(cg.cone, x, nonequivariant()).has_value());
    CHECK_FALSE(find_isomorphism(cg.cone, y, nonequivariant()).has_value());

    HomElement open{x, y, 0, m1(TruncPoly::constant(R, 1)), m1(TruncPoly::constant(R, 1)), std::nullopt};
    CHECK(error_of([&] { cone(open); }) == Errc::NotClosed);
}

TEST_CASE("hom_space examples") {
    auto x = rank_one_mf(R, 1, 2);
    CHECK(hom_space(x, x, 0).size() == 1);
    CHECK(hom_space(x, x, 1).size() == 1);
    auto k = make_mf(xp(3), m1(TruncPoly::constant(R, 1)), m1(xp(3)));
    CHECK(hom_space(k, x, 0).empty());
    CHECK(hom_space(k, x, 1).empty());
    CHECK(hom_space(x, shift(x), 0).size() == 1);
    auto other = rank_one_mf(Ring{{"x"}, 6}, 1, 2);
    CHECK(error_of([&] { hom_space(x, other, 0); }) == Errc::RingMismatch);
}

TEST_CASE("hom bases are closed and independent modulo exact maps") {
    std::mt19937 rng(3);
    auto cat = build_an_catalog(3, 4, 8);
    for (const auto& a : cat->ids)
        for (const auto& b : cat->ids)
            for (int p = 0; p < 2; ++p) {
                const HomComplex& h = cat->hom(a, b);
                const auto& basis = h.basis(p);
                for (const auto& f : basis) {
                    CHECK(is_closed(f));
                    CHECK_FALSE(h.is_exact(f));
                }
                if (basis.size() < 2) continue;
                HomElement s = zero_map(basis[0].source, basis[0].target, p);
                for (const auto& f : basis) s = add(s, scale(f, q(1 + rng() % 5, 1 + rng() % 3)));
                CHECK_FALSE(h.is_exact(s));
            }
}

TEST_CASE("hom dimensions match the monomial oracle at several bounds") {
    for (auto [n, d] : {std::pair{2, 3}, {2, 1}, {3, 4}, {3, 2}}) {
        for (int bound : {6, 8, 10}) {
            auto cat = build_an_catalog(n, d, bound);
            for (const auto& a : cat->ids)
                for (const auto& b : cat->ids) {
                    const auto& x = cat->objects.at(a);
                    const auto& y = cat->objects.at(b);
                    int ax = static_cast<int>(total_degree(x.delta0.at(0, 0).coeffs().begin()->first));
                    int ay = static_cast<int>(total_degree(y.delta0.at(0, 0).coeffs().begin()->first));
                    testutil::Twist u{x.weights->w0[0], x.weights->w1[0]}, v{y.weights->w0[0], y.weights->w1[0]};
                    auto want = testutil::rank_one_hom_dims(n + 1, ax, ay, u, v, d);
                    const HomComplex& h = cat->hom(a, b);
                    INFO("A_" << n << " Z/" << d << " bound " << bound << " " << a << " -> " << b);
                    CHECK(static_cast<int>(h.dim(0)) == want.first);
                    CHECK(static_cast<int>(h.dim(1)) == want.second);
                    auto plain_want = testutil::rank_one_hom_dims(n + 1, ax, ay);
                    HomComplex hp(plain(x), plain(y), nonequivariant());
                    CHECK(static_cast<int>(hp.dim(0)) == plain_want.first);
                    CHECK(static_cast<int>(hp.dim(1)) == plain_want.second);
                }
        }
    }
}

TEST_CASE("equivariant dimensions sum over twists to the plain ones") {
    auto cat = build_an_catalog(2, 3, 8);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            std::string src = an_object_id(a, 0);
            size_t s0 = 0, s1 = 0;
            for (int j = 0; j < 3; ++j) {
                const HomComplex& h = cat->hom(src, an_object_id(b, j));
                s0 += h.dim(0);
                s1 += h.dim(1);
            }
            HomComplex hp(plain(cat->objects.at(src)), plain(cat->objects.at(an_object_id(b, 0))),
                          nonequivariant());
            CHECK(s0 == hp.dim(0));
            CHECK(s1 == hp.dim(1));
        }
}

TEST_CASE("Kapustin-Li pairing examples") {
    auto x = rank_one_mf(R, 1, 2);
    HomElement id = identity_map(x);
    auto odd = hom_space(x, x, 1);
    REQUIRE(odd.size() == 1);
    Rat v = kapustin_li_pair(id, odd[0]);
    CHECK(sgn(v) != 0);
    CHECK(kapustin_li_pair(id, scale(odd[0], 2)) == 2 * v);
    // exact second argument: d of an arbitrary even map
    for (int k = 0; k < 4; ++k) {
        HomElement h{x, x, 0, m1(xp(k)), m1(xp(k + 1) + TruncPoly::constant(R, 3)), std::nullopt};
        HomElement g = hom_differential(h);
        CHECK(kapustin_li_pair(id, g) == 0);
    }
    Ring r2{{"x", "y"}, 4};
    auto w2 = TruncPoly::monomial(r2, {2, 0}) + TruncPoly::monomial(r2, {0, 2});
    auto z2 = make_mf(w2, PolyMatrix::scalar(r2, 1, TruncPoly::constant(r2, 1)), PolyMatrix::scalar(r2, 1, w2));
    CHECK(error_of([&] { kapustin_li_pair(identity_map(z2), zero_map(z2, z2, 1)); }) == Errc::UnsupportedArity);
}

TEST_CASE("Kapustin-Li pairing is nondegenerate on A_2 and A_3") {
    for (int n : {2, 3}) {
        std::vector<MatrixFactorization> objs;
        for (int a = 1; a <= n; ++a) objs.push_back(rank_one_mf(R, a, n + 1 - a));
        for (const auto& x : objs)
            for (const auto& y : objs)
                for (int p = 0; p < 2; ++p) {
                    auto f = hom_space(x, y, p, nonequivariant());
                    auto g = hom_space(y, x, 1 - p, nonequivariant());
                    REQUIRE(f.size() == g.size());
                    RationalMatrix m(f.size(), g.size());
                    for (size_t i = 0; i < f.size(); ++i)
                        for (size_t j = 0; j < g.size(); ++j) m.at(i, j) = kapustin_li_pair(f[i], g[j]);
                    CHECK(mat_rank(m) == f.size());
                }
    }
}

TEST_CASE("build_an_equivariant on A_2") {
    auto cat = build_an_catalog(2, 3, 8);
    const auto& c = cat->presentation;
    CHECK(c.objects.size() == 6);
    for (const auto& o : c.objects) CHECK(c.shift.at(c.shift.at(o)) == o);
    for (int j = 0; j < 3; ++j) CHECK(c.shift.at(an_object_id(1, j)) == an_object_id(2, j));
    CHECK(c.name("M1_0") == "M_1^1");
    for (const auto& a : c.arrows) {
        if (a.label == "id") CHECK(a.degree == 0);
        else CHECK(a.degree == q(1, 3));
    }
    // x . id : M_1^j -> M_1^{j+1} carries R-charge 2/3 and vanishes in the homotopy category
    const auto& x0 = cat->objects.at("M1_0");
    const auto& x1 = cat->objects.at("M1_1");
    HomElement xm{x0, x1, 0, m1(xp(1)), m1(xp(1)), std::nullopt};
    const HomComplex& h = cat->hom("M1_0", "M1_1");
    REQUIRE(is_closed(xm));
    RatVec v = h.vectorize(xm);
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) CHECK(h.unknown_rcharge(0, i) == q(2, 3));
    CHECK(h.is_exact(xm));

    auto one = build_an_catalog(2, 1, 8);
    REQUIRE(one->presentation.objects.size() == 2);
    CHECK(one->presentation.shift.at("M1_0") == "M2_0");
    CHECK(one->presentation.shift.at("M2_0") == "M1_0");
}

TEST_CASE("factorization identities hold for every catalog object and cone") {
    auto cat = build_an_catalog(3, 4, 8);
    for (const auto& [id, x] : cat->objects) {
        PolyMatrix wi = PolyMatrix::scalar(x.ring(), x.rank(), x.w);
        CHECK(x.delta0 * x.delta1 == wi);
        CHECK(x.delta1 * x.delta0 == wi);
        CHECK(shift(shift(x)) == x);
    }
    for (const auto& [id, f] : cat->reps) {
        auto cd = cone(f);
        PolyMatrix wi = PolyMatrix::scalar(cd.cone.ring(), cd.cone.rank(), cd.cone.w);
        CHECK(cd.cone.delta0 * cd.cone.delta1 == wi);
    }
}
