#pragma once
#include <map>
#include <string>
#include <vector>

#include "cyclic_stab/charge.hpp"

namespace cstab {

struct LiftedObject {
    std::string obj;
    Rat level;
    bool operator<(const LiftedObject& o) const {
        return obj != o.obj ? obj < o.obj : level < o.level;
    }
    bool operator==(const LiftedObject& o) const { return obj == o.obj && level == o.level; }
};

std::string lifted_str(const LiftedObject& x);

struct LiftedCategory {
    CategoryPresentation base;
    ChargeTriple triple;
    int window = 2;                     // levels phi(E) + 2k with |2k| <= window
    std::vector<LiftedObject> objects;  // materialized window
    size_t lifted_triangles = 0;        // triangles whose lifts close up, over the window

    bool in_window(const LiftedObject& x) const;
    // Arrows f with q(f) = level(b) - level(a).
    std::vector<std::string> hom(const LiftedObject& a, const LiftedObject& b) const;
    LiftedObject shift(const LiftedObject& x) const;
    LiftedObject canonical(const std::string& obj) const;  // level phi(E) in (0,2]
};

LiftedCategory build_z_lift(const CategoryPresentation& c, const ChargeTriple& r, int window = 2);

// Number of lifted arrows between the canonical lifts of a and b at each level gap,
// summed over all gaps (must equal the number of base arrows a -> b).
std::map<Rat, size_t> lifted_hom_dims(const LiftedCategory& l, const std::string& a,
                                      const std::string& b);

struct Relabeling {
    std::string base_object;
    std::map<std::string, Rat> offset;  // H(F, l) = (F, l + offset[F])
    bool commutes_with_shift = true;
    bool projection_compatible = true;  // pi2 H = pi1 and arrows go to arrows
    LiftedObject apply(const LiftedObject& x) const;
};

Relabeling connection_equiv(const LiftedCategory& l1, const LiftedCategory& l2,
                            const std::string& base_object);

// Slicing data on the lift: phases of semistable lifted objects and HN factors
// (descending) of the others.
struct BridgelandData {
    int window = 2;
    std::map<LiftedObject, Rat> phase;
    std::map<LiftedObject, std::vector<LiftedObject>> hn;
};

struct BridgelandReport {
    ConditionResult a, b, c, d;
    bool pass() const { return a.pass && b.pass && c.pass && d.pass; }
};

BridgelandReport check_bridgeland(const LiftedCategory& l, const BridgelandData& s);
BridgelandData shift_levels(const BridgelandData& s, const Rat& by);

}  // namespace cstab
