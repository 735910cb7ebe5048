#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclic_stab/charge.hpp"
#include "cyclic_stab/lift.hpp"

namespace cstab {

struct HNFactor {
    std::vector<std::string> summands;  // all in one slice
    Rat phase;
    bool operator==(const HNFactor& o) const { return summands == o.summands && phase == o.phase; }
};

// Filtration 0 = E_0 -> E_1 -> ... -> E_n = E with cones Q_i. E_1 = Q_1; triangles[i]
// is E_{i+1} -> E_{i+2} -> Q_{i+2} -> E_{i+1}[1].
struct HNCertificate {
    std::string object;
    std::vector<HNFactor> factors;
    std::vector<std::string> filtration;  // E_1 .. E_n
    std::vector<Triangle> triangles;
    Diagram diagram;
    std::vector<Rat> gaps;  // c_2 .. c_n
    bool operator==(const HNCertificate& o) const {
        return object == o.object && factors == o.factors && filtration == o.filtration &&
               triangles == o.triangles && gaps == o.gaps;
    }
};

struct StabilityCondition {
    ChargeTriple triple;
    std::map<std::string, Rat> slicing;  // semistable object -> phase in (0,2]
    std::map<std::string, HNCertificate> hn_table;
};

struct StabilityReport {
    ConditionResult c[7];
    bool pass() const {
        for (const auto& r : c)
            if (!r.pass) return false;
        return true;
    }
};

StabilityReport validate_stability(const StabilityCondition& s, const CategoryPresentation& c);
// Checks one certificate against the slicing and degrees of s.
ConditionResult verify_certificate(const HNCertificate& h, const StabilityCondition& s,
                                   const CategoryPresentation& c);
// The diagram E_i, Q_i, E_{i-1}[1] nodes of a filtration with its triangles.
Diagram hn_diagram(const std::vector<std::string>& filtration, const std::vector<Triangle>& triangles,
                   const CategoryPresentation& c);

enum class HNOrder { PhaseThenId, PhaseThenIdReversed };

// Throws NoFiltration.
HNCertificate hn_search(const std::string& e, const StabilityCondition& s, const CategoryPresentation& c,
                        size_t max_len = 4, HNOrder order = HNOrder::PhaseThenId);
bool hn_isomorphic(const HNCertificate& a, const HNCertificate& b);

struct EquivalenceResult {
    bool equivalent = true;
    int failing_clause = 0;  // 1..4
    std::string detail;
};
EquivalenceResult stab_equivalent(const StabilityCondition& s1, const StabilityCondition& s2,
                                  const CategoryPresentation& c);

// Semistable objects of a triple: nonzero charge, not destabilized by a catalog triangle
// A -> E -> C with A, C semistable and q(A -> E) + q(E -> C) < 0.
std::map<std::string, Rat> derive_slicing(const ChargeTriple& r, const CategoryPresentation& c);
// Same rule with approximate degrees, for intermediate samples of a deformation.
std::set<std::string> semistable_approx(const CategoryPresentation& c, const std::set<std::string>& nonzero,
                                        const std::map<std::string, double>& q);
// Slicing from derive_slicing plus searched certificates for the rest.
StabilityCondition complete_stability(const ChargeTriple& r, const CategoryPresentation& c);

BridgelandData lift_stability(const StabilityCondition& s, const LiftedCategory& l);
// Throws InvalidBridgeland.
StabilityCondition push_down(const LiftedCategory& l, const BridgelandData& b);

}  // namespace cstab
