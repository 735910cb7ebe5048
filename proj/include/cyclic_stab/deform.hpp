#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_stab/stab.hpp"

namespace cstab {

// One sample: Z on each lattice basis vector.
using ChargeSample = std::vector<Complex>;
using ChargePath = std::vector<ChargeSample>;

struct DeformEvent {
    size_t sample = 0;
    std::string object;
    std::string event;  // "destabilized" or "stabilized"
};

struct DeformResult {
    StabilityCondition end;
    std::map<std::string, Rat> unwrapped;  // total phase change per object
    std::vector<DeformEvent> events;
};

// Tracks phases continuously from s along the samples; a first sample equal to the current
// charge is skipped. Throws StepTooLarge, ChargeVanished, InexactEndpoint.
DeformResult deform_along_path(const StabilityCondition& s, const CategoryPresentation& c,
                               const ChargePath& samples);

std::string event_line(const DeformEvent& e);

struct MonodromyStep {
    std::map<std::string, Rat> offset;  // lifted relabeling (E, l) -> (E, l + offset)
    bool base_identity = false;         // degrees unchanged on the base
};

struct MonodromyResult {
    std::vector<MonodromyStep> loops;
    MonodromyStep composite;
    std::optional<Rat> lifted_offset;  // when the composite offset is uniform
    StabilityCondition end;
};

// Throws LoopNotClosed when a loop does not start and end at the charge of s.
MonodromyResult monodromy_word(const StabilityCondition& s, const CategoryPresentation& c,
                               const std::vector<ChargePath>& loops);

}  // namespace cstab
