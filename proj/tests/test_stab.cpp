#include <catch2/catch_amalgamated.hpp>
#include <algorithm>

#include "cyclic_stab/error.hpp"
#include "cyclic_stab/examples.hpp"
#include "cyclic_stab/stab.hpp"
#include "test_util.hpp"

using namespace cstab;
using testutil::q;

namespace {

const CategoryPresentation& a2() {
    static const CategoryPresentation c = a2_z3();
    return c;
}

const StabilityCondition& walcher() {
    static const StabilityCondition s = walcher_stability(a2());
    return s;
}

const StabilityCondition& deformed() {
    static const StabilityCondition s = deform_along_path(walcher(), a2(), left_path()).end;
    return s;
}

// Triple with the given lattice values; degrees are phase gaps reduced into (0,2].
ChargeTriple triple_at(const std::vector<Complex>& z, const std::map<std::string, Rat>& phi) {
    ChargeTriple r = walcher_triple(a2());
    r.Z = z;
    r.phi = phi;
    for (const auto& a : a2().arrows)
        r.q[a.id] = a.label == "id" ? Rat(0) : mod_half_open(Rat(phi.at(a.dst) - phi.at(a.src)), 2);
    return r;
}

}  // namespace

TEST_CASE("validate_stability examples") {
    auto rep = validate_stability(walcher(), a2());
    for (int i = 0; i < 7; ++i) CHECK(rep.c[i].pass);
    CHECK(walcher().slicing.size() == 6);

    auto bad = walcher();
    bad.triple.q["M1_0>M2_2#0"] = q(-1, 3);
    auto r6 = validate_stability(bad, a2());
    CHECK_FALSE(r6.c[5].pass);
    REQUIRE_FALSE(r6.c[5].violations.empty());
    CHECK(r6.c[5].violations[0].find("M1_0>M2_2#0") != std::string::npos);

    auto mirror = validate_stability(mirror_stability(a2()), a2());
    CHECK_FALSE(mirror.pass());
    CHECK_FALSE(mirror.c[5].pass);
    for (int i : {0, 1, 2, 3, 4}) CHECK(mirror.c[i].pass);
}

TEST_CASE("slicing respects the shift and the charges") {
    for (const auto* s : {&walcher(), &deformed()}) {
        for (const auto& [o, ph] : s->slicing) {
            const std::string& sh = a2().shift.at(o);
            REQUIRE(s->slicing.count(sh));
            CHECK(mod_half_open(Rat(s->slicing.at(sh) - ph - 1), 2) == 2);
            CHECK(phase_matches(s->triple.charge(o), ph));
        }
    }
}

TEST_CASE("hn_search examples") {
    auto one = hn_search("M1_0", walcher(), a2());
    CHECK(one.factors.size() == 1);
    CHECK(one.factors[0].summands == std::vector<std::string>{"M1_0"});
    CHECK(one.filtration == std::vector<std::string>{"M1_0"});

    for (const std::string& z : {std::string("0"), std::string("")}) {
        try {
            (void)hn_search(z, walcher(), a2());
            FAIL("expected NoFiltration");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NoFiltration);
        }
    }
    try {
        (void)hn_search("M9_9", walcher(), a2());
        FAIL("expected IdMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IdMismatch);
    }

    StabilityCondition bare = deformed();
    bare.hn_table.clear();
    for (const std::string& e : {std::string("M1_1"), std::string("M2_1")}) {
        CHECK_FALSE(bare.slicing.count(e));
        auto h = hn_search(e, bare, a2());
        REQUIRE(h.factors.size() == 2);
        CHECK(h.factors[0].phase > h.factors[1].phase);
        REQUIRE(h.gaps.size() == 1);
        CHECK(h.gaps[0] < 0);
        CHECK(verify_certificate(h, bare, a2()).pass);
        // factor charges add up to the charge of E
        Complex sum{0, 0};
        for (const auto& f : h.factors)
            for (const auto& x : f.summands) sum = sum + bare.triple.charge(x);
        CHECK(sum == bare.triple.charge(e));
    }
    auto m11 = hn_search("M1_1", bare, a2());
    CHECK(m11.factors[0].summands == std::vector<std::string>{"M2_2"});
    CHECK(m11.factors[1].summands == std::vector<std::string>{"M2_0"});
    CHECK(m11.gaps[0] == q(-1, 2));
}

TEST_CASE("HN diagrams are connective and liftable with negative gaps") {
    for (const auto& [o, h] : deformed().hn_table) {
        CHECK(diagram_connective(h.diagram));
        CHECK(is_liftable(h.diagram, a2(), deformed().triple.q).liftable);
        for (const auto& g : h.gaps) CHECK(g < 0);
    }
}

TEST_CASE("filtration composites do not vanish") {
    size_t checked = 0;
    for (const auto& [o, h] : deformed().hn_table) {
        std::vector<std::string> fs;
        for (const auto& t : h.triangles) fs.push_back(t.f);
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j) {
                std::vector<std::string> path(fs.begin() + i, fs.begin() + j + 1);
                auto lc = a2().compose(path);
                REQUIRE(lc);
                CHECK_FALSE(lc->empty());
                ++checked;
            }
        for (const auto& t : h.triangles) CHECK(a2().distinguished(t));
    }
    // every deformed filtration has length 2, so there is no composite to test
    CHECK(checked == 0);
}

TEST_CASE("hn_isomorphic examples") {
    auto h = deformed().hn_table.at("M1_1");
    CHECK(hn_isomorphic(h, h));
    auto swapped = h;
    std::swap(swapped.factors[0], swapped.factors[1]);
    CHECK_FALSE(hn_isomorphic(h, swapped));

    StabilityCondition bare = deformed();
    bare.hn_table.clear();
    for (const auto& o : a2().objects) {
        if (bare.slicing.count(o)) continue;
        auto a = hn_search(o, bare, a2(), 4, HNOrder::PhaseThenId);
        auto b = hn_search(o, bare, a2(), 4, HNOrder::PhaseThenIdReversed);
        CHECK(hn_isomorphic(a, b));
    }
    for (const auto& e : maslov_indices(a2(), deformed().triple)) CHECK(e.index >= 0);
}

TEST_CASE("stab_equivalent examples") {
    CHECK(stab_equivalent(walcher(), walcher(), a2()).equivalent);
    CHECK(stab_equivalent(deformed(), deformed(), a2()).equivalent);

    // z2 = 0 leaves M_1^2 and its shift with zero charge and a free phase
    std::map<std::string, Rat> phi{{"M1_0", q(2)}, {"M2_0", q(1)},    {"M1_2", q(1)},
                                   {"M2_2", q(2)}, {"M1_1", q(1, 2)}, {"M2_1", q(3, 2)}};
    auto r1 = triple_at({Complex{1, 0}, Complex{0, 0}}, phi);
    phi["M1_1"] = q(3, 4);
    phi["M2_1"] = q(7, 4);
    auto r2 = triple_at({Complex{1, 0}, Complex{0, 0}}, phi);
    CHECK(validate_triple(r1, a2()).pass());
    CHECK(validate_triple(r2, a2()).pass());
    auto s1 = complete_stability(r1, a2());
    auto s2 = complete_stability(r2, a2());
    CHECK_FALSE(s1.slicing.count("M1_1"));
    CHECK_FALSE(s1.slicing.count("M2_1"));
    CHECK(r1.q != r2.q);
    auto eq = stab_equivalent(s1, s2, a2());
    CHECK(eq.equivalent);
    INFO(eq.detail);

    auto bumped = walcher();
    bumped.triple.q["M1_0>M2_2#0"] += 2;
    auto neq = stab_equivalent(walcher(), bumped, a2());
    CHECK_FALSE(neq.equivalent);
    CHECK(neq.failing_clause == 4);

    auto moved = walcher();
    moved.slicing["M1_0"] = 1;
    CHECK(stab_equivalent(walcher(), moved, a2()).failing_clause == 1);
    CHECK(stab_equivalent(walcher(), deformed(), a2()).failing_clause == 1);
}

TEST_CASE("stab_equivalent is an equivalence relation on a small family") {
    std::vector<StabilityCondition> fam{walcher(), deformed()};
    auto potential = walcher();
    for (const auto& a : a2().arrows) {
        if (a.dst == "M1_0" || a.dst == "M2_0") potential.triple.q[a.id] += 2;
        if (a.src == "M1_0" || a.src == "M2_0") potential.triple.q[a.id] -= 2;
    }
    fam.push_back(potential);
    auto bumped = walcher();
    bumped.triple.q["M2_1>M1_0#0"] += 2;
    fam.push_back(bumped);
    for (const auto& a : fam) {
        CHECK(stab_equivalent(a, a, a2()).equivalent);
        for (const auto& b : fam) {
            bool ab = stab_equivalent(a, b, a2()).equivalent;
            CHECK(ab == stab_equivalent(b, a, a2()).equivalent);
            for (const auto& c : fam)
                if (ab && stab_equivalent(b, c, a2()).equivalent) CHECK(stab_equivalent(a, c, a2()).equivalent);
        }
    }
}

TEST_CASE("push_down examples") {
    for (const auto* s : {&walcher(), &deformed()}) {
        auto l = build_z_lift(a2(), s->triple, 2);
        auto b = lift_stability(*s, l);
        REQUIRE(check_bridgeland(l, b).pass());
        auto p = push_down(l, b);
        CHECK(validate_stability(p, a2()).pass());
        CHECK(stab_equivalent(p, *s, a2()).equivalent);
        // lift of the push-down recovers B (global shift 0)
        auto b2 = lift_stability(p, l);
        CHECK(b2.phase == b.phase);
        CHECK(b2.hn == b.hn);

        // lifted semistable-to-semistable arrows push down to their phase gap
        for (const auto& [x, px] : b.phase)
            for (const auto& [y, py] : b.phase)
                for (const auto& f : l.hom(x, y)) CHECK(p.triple.q.at(f) == py - px);
    }
}

TEST_CASE("push_down is invariant under the global shift by 2") {
    for (const auto* st : {&walcher(), &deformed()}) {
        auto l = build_z_lift(a2(), st->triple, 2);
        auto b = lift_stability(*st, l);
        auto p = push_down(l, b);
        // the same window materialized one period up carries the shifted data
        auto lup = l;
        for (auto& x : lup.objects) x.level += 2;
        auto s = shift_levels(b, 2);
        CHECK(s.phase.size() == b.phase.size());
        auto ps = push_down(lup, s);
        CHECK(ps.slicing == p.slicing);
        CHECK(ps.triple == p.triple);
        CHECK(ps.hn_table == p.hn_table);
    }
}

TEST_CASE("push_down rejects invalid data") {
    auto l = build_z_lift(a2(), walcher().triple, 2);
    auto b = lift_stability(walcher(), l);
    for (auto& [x, ph] : b.phase)
        if (x.obj == "M2_2") ph += 1;
    try {
        (void)push_down(l, b);
        FAIL("expected InvalidBridgeland");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidBridgeland);
    }
}
