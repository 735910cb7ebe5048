#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cyclic_stab/deform.hpp"
#include "cyclic_stab/polymat.hpp"

namespace cstab {

// A_2 with Z/3: six objects M_a^j, a = 1, 2.
CategoryPresentation a2_z3(int bound = default_bound(), const Rat& rcharge_scale = 2);

// Walcher's point: Z = (1, i) on the lattice spanned by M_1^1, M_1^2.
ChargeTriple walcher_triple(const CategoryPresentation& c);
StabilityCondition walcher_stability(const CategoryPresentation& c);
// tau of Walcher with every object kept in the slicing at its tau phase.
StabilityCondition mirror_stability(const CategoryPresentation& c);

// Left dotted path: z1 = 1 fixed, z2 from i around to -1 - i.
ChargePath left_path();
// H1 winds z1 around 0, H2 winds z2 around 0, H3 winds z2 around -z1; all based at (1, i).
std::vector<ChargePath> generator_loops();
ChargePath contractible_loop();

struct ExampleDocs {
    CategoryPresentation presentation;
    std::optional<ChargeTriple> triple;
    std::optional<StabilityCondition> stability;
};

// Names: a2-z3-walcher, a2-z3-mirror, an-zd:<n>,<d>. Throws UnknownExample.
ExampleDocs build_example(const std::string& name, int bound = default_bound(),
                          const Rat& rcharge_scale = 2);

}  // namespace cstab
