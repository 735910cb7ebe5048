#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cyclic_stab/charge.hpp"
#include "cyclic_stab/error.hpp"
#include "cyclic_stab/examples.hpp"
#include "test_util.hpp"

using namespace cstab;
using testutil::q;

namespace {

const CategoryPresentation& a2() {
    static const CategoryPresentation c = a2_z3();
    return c;
}

// Phase table at Walcher's point, written out by hand.
std::map<std::string, Rat> walcher_phases() {
    return {{"M1_0", q(2)},    {"M2_2", q(1, 4)}, {"M1_1", q(1, 2)},
            {"M2_0", q(1)},    {"M1_2", q(5, 4)}, {"M2_1", q(3, 2)}};
}

// Hand-made hexagon A -f-> B -g-> C -h-> A1 -f1-> B1 -g1-> C1 -h1-> A.
CategoryPresentation hexagon(const Rat& qf, const Rat& qg, const Rat& qh) {
    auto c = testutil::graph({"A", "B", "C", "A1", "B1", "C1"},
                             {{"f", "A", "B", qf, "hom"},   {"g", "B", "C", qg, "hom"},
                              {"h", "C", "A1", qh, "hom"},  {"f1", "A1", "B1", qf, "hom"},
                              {"g1", "B1", "C1", qg, "hom"}, {"h1", "C1", "A", qh, "hom"}});
    c.shift = {{"A", "A1"}, {"A1", "A"}, {"B", "B1"}, {"B1", "B"}, {"C", "C1"}, {"C1", "C"}};
    c.arrow_shift = {{"f", "f1"}, {"f1", "f"}, {"g", "g1"}, {"g1", "g"}, {"h", "h1"}, {"h1", "h"}};
    c.triangles = {{"f", "g", "h"}};
    c.reindex();
    validate_presentation(c);
    return c;
}

ChargeTriple degrees_only(const CategoryPresentation& c) {
    ChargeTriple r;
    r.lattice_rank = 0;
    for (const auto& o : c.objects) {
        r.v[o] = {};
        r.phi[o] = 1;
    }
    r.q = c.degrees();
    return r;
}

}  // namespace

TEST_CASE("Walcher triple matches the hand phase table") {
    auto r = walcher_triple(a2());
    CHECK(r.phi == walcher_phases());
    for (const auto& a : a2().arrows) {
        Rat expect = a.label == "id" ? Rat(0)
                                     : mod_half_open(Rat(walcher_phases()[a.dst] - walcher_phases()[a.src]), 2);
        CHECK(r.q.at(a.id) == expect);
    }
    CHECK(r.charge("M1_0") == Complex{1, 0});
    CHECK(r.charge("M1_1") == Complex{0, 1});
    CHECK(r.charge("M2_2") == Complex{1, 1});
}

TEST_CASE("validate_triple examples") {
    auto r = walcher_triple(a2());
    CHECK(validate_triple(r, a2()).pass());

    auto bad1 = r;
    bad1.phi["M2_0"] = bad1.phi["M1_0"];
    auto rep1 = validate_triple(bad1, a2());
    CHECK_FALSE(rep1.c1.pass);

    auto bad3 = r;
    std::string f = "M1_0>M2_2#0";
    bad3.q[f] = bad3.phi["M2_2"] - bad3.phi["M1_0"] + 1;
    auto rep3 = validate_triple(bad3, a2());
    CHECK(rep3.c1.pass);
    CHECK(rep3.c2.pass);
    CHECK_FALSE(rep3.c3.pass);
    REQUIRE(rep3.c3.violations.size() == 1);
    CHECK(rep3.c3.violations[0].rfind(f, 0) == 0);

    auto bad2 = r;
    bad2.Z[0] = Complex{-1, 0};
    CHECK_FALSE(validate_triple(bad2, a2()).c2.pass);

    auto stray = r;
    stray.phi["nope"] = 1;
    try {
        (void)validate_triple(stray, a2());
        FAIL("expected IdMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IdMismatch);
    }
}

TEST_CASE("exact_phase on the rational-angle directions") {
    CHECK(*exact_phase({1, 0}) == 2);
    CHECK(*exact_phase({-3, 0}) == 1);
    CHECK(*exact_phase({0, 2}) == q(1, 2));
    CHECK(*exact_phase({0, -1}) == q(3, 2));
    CHECK(*exact_phase({2, 2}) == q(1, 4));
    CHECK(*exact_phase({-1, 1}) == q(3, 4));
    CHECK(*exact_phase({-1, -1}) == q(5, 4));
    CHECK(*exact_phase({1, -1}) == q(7, 4));
    CHECK_FALSE(exact_phase({2, 1}).has_value());
    CHECK_FALSE(exact_phase({0, 0}).has_value());
    CHECK(phase_matches({1, 0}, 0));
    CHECK_FALSE(phase_matches({1, 0}, 1));
}

TEST_CASE("pair_to_triple examples") {
    auto r = walcher_triple(a2());
    CHECK(pair_to_triple(strip_phases(r), a2()) == r);

    auto zero = strip_phases(r);
    for (auto& z : zero.Z) z = Complex{0, 0};
    try {
        (void)pair_to_triple(zero, a2());
        FAIL("expected TrivialCharge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TrivialCharge);
    }

    auto off = strip_phases(r);
    off.q["M1_1>M2_0#0"] += q(1, 2);
    try {
        (void)pair_to_triple(off, a2());
        FAIL("expected Inconsistent");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Inconsistent);
    }
}

TEST_CASE("maslov_index examples") {
    auto h0 = hexagon(q(1, 4), q(1, 4), q(1, 2));
    auto loops0 = basic_loops(h0);
    REQUIRE(loops0.size() == 1);
    CHECK(path_degree(loops0[0].witness, h0) == 1);
    CHECK(maslov_index(loops0[0], h0, degrees_only(h0)) == 0);

    auto h1 = hexagon(q(1, 4), q(1, 4), q(5, 2));
    auto loops1 = basic_loops(h1);
    CHECK(path_degree(loops1[0].witness, h1) == 3);
    CHECK(maslov_index(loops1[0], h1, degrees_only(h1)) == 1);

    // hexagon closed into a loop of nonzero degree
    auto hc = h0;
    hc.triangles = {{"f", "g", "h"}};
    hc.arrows.push_back({"ab", "A", "B", q(1, 3), "hom"});
    hc.reindex();
    auto lc = basic_loops(hc)[0];
    lc.hexagon.edges.push_back({"ab", "A", "B", {{0, 0, "ab"}}});
    try {
        (void)maslov_index(lc, hc, degrees_only(hc));
        FAIL("expected NotLocallyLiftable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLocallyLiftable);
    }
}

TEST_CASE("every basic loop of A_2 Z/3 at Walcher's point has Maslov index 0") {
    auto r = walcher_triple(a2());
    auto phases = walcher_phases();
    auto entries = maslov_indices(a2(), r);
    CHECK(entries.size() == 6);
    for (const auto& e : entries) {
        const Triangle& t = e.loop.triangle;
        // oracle: degrees recomputed from the phase table
        Rat sum = 0;
        for (const auto& id : {t.f, t.g, t.h}) {
            const Arrow& a = a2().arrow(id);
            sum += mod_half_open(Rat(phases[a.dst] - phases[a.src]), 2);
        }
        CHECK((sum - 1) / 2 == 0);
        CHECK(e.index == 0);
        CHECK(is_liftable(e.loop.hexagon, a2(), r.q).liftable);
    }
}

TEST_CASE("the closed six-arrow cycle carries the Bott degree 2 at Walcher's point") {
    auto r = walcher_triple(a2());
    auto lr = is_liftable(presentation_diagram(a2()), a2(), r.q);
    CHECK_FALSE(lr.liftable);
    CHECK(abs(lr.witness_degree) == 2);
}

TEST_CASE("Maslov index does not depend on the witness base") {
    auto c = a2();
    for (const auto& r : {walcher_triple(c), tau(walcher_triple(c))}) {
        for (const auto& l : basic_loops(c)) {
            Rat m = maslov_index(l, c, r);
            for (int base : {1, 2}) CHECK((path_degree(loop_witness(l, c, base), c, r.q) - 1) / 2 == m);
        }
    }
    auto h = hexagon(q(1, 3), q(1, 6), q(3, 2));
    auto l = basic_loops(h)[0];
    for (int base : {0, 1, 2}) CHECK(path_degree(loop_witness(l, h, base), h) == 2);
}

TEST_CASE("deformation_equivalent examples") {
    auto r = walcher_triple(a2());
    CHECK(deformation_equivalent(r, r, a2()).equivalent);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    std::map<std::string, Rat> delta;
    for (const auto& o : a2().objects) delta[o] = q(d(rng), 7);
    auto shifted = r;
    for (const auto& a : a2().arrows) shifted.q[a.id] += delta[a.dst] - delta[a.src];
    CHECK(deformation_equivalent(r, shifted, a2()).equivalent);

    auto rep = deformation_equivalent(r, tau(r), a2());
    CHECK_FALSE(rep.equivalent);
    REQUIRE(rep.witness);
    CHECK(abs(rep.witness_degree) == 4);

    auto fewer = r;
    fewer.q.erase(fewer.q.begin());
    try {
        (void)deformation_equivalent(r, fewer, a2());
        FAIL("expected ArrowSetMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ArrowSetMismatch);
    }
}

TEST_CASE("tau examples") {
    ChargeTriple r;
    r.lattice_rank = 1;
    r.v = {{"E", {1}}};
    r.Z = {Complex{q(2, 3), q(1, 5)}};
    r.phi = {{"E", q(3, 10)}};
    r.q = {{"f", q(2, 5)}};
    auto t = tau(r);
    CHECK(t.phi["E"] == q(7, 10));
    CHECK(t.q["f"] == q(-2, 5));
    CHECK(t.Z[0] == Complex{q(-2, 3), q(1, 5)});
    CHECK(tau(t) == r);
    auto w = walcher_triple(a2());
    CHECK(tau(tau(w)) == w);
    CHECK(validate_triple(tau(w), a2()).pass());
}

TEST_CASE("chirality examples") {
    auto c = testutil::graph({"E", "F"}, {{"l", "E", "F", q(1, 3), "hom"}, {"r", "E", "F", q(-1, 3), "hom"}});
    ChargeTriple r = degrees_only(c);
    auto rep = chirality(r, c);
    CHECK(rep.arrows["l"] == Chirality::Left);
    CHECK(rep.arrows["r"] == Chirality::Right);

    auto w = walcher_triple(a2());
    auto left = chirality(w, a2());
    auto right = chirality(tau(w), a2());
    for (const auto& o : a2().objects) {
        CHECK(left.objects[o] == Chirality::Left);
        CHECK(right.objects[o] == Chirality::Right);
    }
    for (const auto& a : a2().arrows) {
        if (a.label == "id") continue;
        CHECK(left.arrows[a.id] == Chirality::Left);
        CHECK(right.arrows[a.id] == Chirality::Right);
    }
    CHECK(std::string(chirality_name(Chirality::Mixed)) == "mixed");
}
