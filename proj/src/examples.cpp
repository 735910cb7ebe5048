#include "cyclic_stab/examples.hpp"

#include <regex>

#include "cyclic_stab/an_catalog.hpp"
#include "cyclic_stab/error.hpp"

namespace cstab {

CategoryPresentation a2_z3(int bound, const Rat& rcharge_scale) {
    return build_an_equivariant(2, 3, bound, rcharge_scale);
}

ChargeTriple walcher_triple(const CategoryPresentation& c) {
    ChargeTriple r;
    r.lattice_rank = 2;
    r.Z = {{1, 0}, {0, 1}};
    const std::vector<std::vector<long>> m1 = {{1, 0}, {0, 1}, {-1, -1}};
    for (int j = 0; j < 3; ++j) {
        r.v[an_object_id(1, j)] = m1[j];
        r.v[an_object_id(2, j)] = {-m1[j][0], -m1[j][1]};
    }
    r.phi = {{"M1_0", 2},          {"M2_2", ratio(1, 4)}, {"M1_1", ratio(1, 2)},
             {"M2_0", 1},          {"M1_2", ratio(5, 4)}, {"M2_1", ratio(3, 2)}};
    for (const auto& a : c.arrows)
        r.q[a.id] = a.label == "id" ? Rat(0) : mod_half_open(Rat(r.phi.at(a.dst) - r.phi.at(a.src)), 2);
    return r;
}

StabilityCondition walcher_stability(const CategoryPresentation& c) {
    return complete_stability(walcher_triple(c), c);
}

StabilityCondition mirror_stability(const CategoryPresentation& c) {
    StabilityCondition s;
    s.triple = tau(walcher_triple(c));
    for (const auto& o : c.objects) s.slicing[o] = s.triple.phi.at(o);
    return s;
}

namespace {

ChargeSample z(const Rat& re1, const Rat& im1, const Rat& re2, const Rat& im2) {
    return {{re1, im1}, {re2, im2}};
}

ChargePath z2_path(const std::vector<std::pair<Rat, Rat>>& pts) {
    ChargePath p;
    for (const auto& [re, im] : pts) p.push_back(z(1, 0, re, im));
    return p;
}

}  // namespace

ChargePath left_path() {
    Rat h = ratio(1, 2), t = ratio(3, 2);
    return z2_path({{0, 1}, {-1, 1}, {-t, h}, {-2, 0}, {-t, -h}, {-1, -1}});
}

std::vector<ChargePath> generator_loops() {
    Rat h = ratio(1, 2), t = ratio(3, 2);
    std::vector<std::pair<Rat, Rat>> circle = {{h, 0}, {h, h}, {0, h},   {-h, h}, {-h, 0},
                                              {-h, -h}, {0, -h}, {h, -h}, {h, 0}};
    ChargePath h1{z(1, 0, 0, 1)};
    for (const auto& [re, im] : circle) h1.push_back(z(re, im, 0, 1));
    h1.push_back(z(1, 0, 0, 1));
    ChargePath h2 = z2_path({{0, 1}, {0, h}, {-h, h}, {-h, 0}, {-h, -h}, {0, -h}, {h, -h}, {h, 0},
                             {h, h}, {0, h}, {0, 1}});
    ChargePath h3 = z2_path({{0, 1}, {-h, h}, {-1, h}, {-t, h}, {-t, 0}, {-t, -h}, {-1, -h},
                             {-h, -h}, {-h, 0}, {-h, h}, {0, 1}});
    return {h1, h2, h3};
}

ChargePath contractible_loop() {
    Rat k = ratio(1, 4), f = ratio(5, 4);
    return z2_path({{0, 1}, {k, 1}, {k, f}, {0, f}, {0, 1}});
}

ExampleDocs build_example(const std::string& name, int bound, const Rat& rcharge_scale) {
    ExampleDocs d;
    if (name == "a2-z3-walcher" || name == "a2-z3-mirror") {
        d.presentation = a2_z3(bound, rcharge_scale);
        d.stability = name == "a2-z3-walcher" ? walcher_stability(d.presentation)
                                              : mirror_stability(d.presentation);
        d.triple = d.stability->triple;
        return d;
    }
    static const std::regex an(R"(an-zd:(\d+),(\d+))");
    std::smatch m;
    if (std::regex_match(name, m, an)) {
        d.presentation = build_an_equivariant(std::stoi(m[1]), std::stoi(m[2]), bound, rcharge_scale);
        return d;
    }
    throw Error(Errc::UnknownExample, "unknown example " + name);
}

}  // namespace cstab
