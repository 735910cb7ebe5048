#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_stab/catgraph.hpp"

namespace cstab {

struct ChargeTriple {
    int lattice_rank = 0;
    std::map<std::string, std::vector<long>> v;  // class map into the lattice
    std::vector<Complex> Z;                       // value on each lattice basis vector
    std::map<std::string, Rat> phi;
    DegreeMap q;

    Complex charge(const std::string& obj) const;
    bool operator==(const ChargeTriple& o) const {
        return lattice_rank == o.lattice_rank && v == o.v && Z == o.Z && phi == o.phi && q == o.q;
    }
};

struct ChargePair {
    int lattice_rank = 0;
    std::map<std::string, std::vector<long>> v;
    std::vector<Complex> Z;
    DegreeMap q;

    Complex charge(const std::string& obj) const;
};

ChargePair strip_phases(const ChargeTriple& r);

// Phase in (0,2] of a nonzero Gaussian rational. A rational point has a rational-angle
// argument only at multiples of pi/4 (Niven), so any other value is reported absent.
std::optional<Rat> exact_phase(const Complex& z);
// Condition Z = m e^{i pi phi} with m > 0 (z nonzero).
bool phase_matches(const Complex& z, const Rat& phi);

struct ConditionResult {
    bool pass = true;
    std::vector<std::string> violations;
    void fail(const std::string& what) {
        pass = false;
        violations.push_back(what);
    }
};

struct TripleReport {
    ConditionResult c1, c2, c3;
    ConditionResult shift_degree;  // q(f[1]) = q(f) on known arrow shifts
    bool pass() const { return c1.pass && c2.pass && c3.pass && shift_degree.pass; }
};

// Throws IdMismatch when objects or arrows do not match the presentation.
void check_ids(const ChargeTriple& r, const CategoryPresentation& c);
TripleReport validate_triple(const ChargeTriple& r, const CategoryPresentation& c);

ChargeTriple pair_to_triple(const ChargePair& p, const CategoryPresentation& c);
ChargeTriple tau(const ChargeTriple& r);

struct BasicLoop {
    Triangle triangle;
    ConnectingPath witness;  // A -> B -> C -> A[1]
    Diagram hexagon;         // open chain A -> B -> C -> A[1] -> B[1] -> C[1]
    std::vector<std::string> objects;
};

std::vector<BasicLoop> basic_loops(const CategoryPresentation& c);
// Witness path based at A (0), B (1) or C (2).
ConnectingPath loop_witness(const BasicLoop& l, const CategoryPresentation& c, int base);
Rat maslov_index(const BasicLoop& l, const CategoryPresentation& c, const ChargeTriple& r);

struct MaslovEntry {
    BasicLoop loop;
    Rat index;
};
std::vector<MaslovEntry> maslov_indices(const CategoryPresentation& c, const ChargeTriple& r);

// One node per object, one single-block edge per arrow.
Diagram presentation_diagram(const CategoryPresentation& c);

struct EquivReport {
    bool equivalent = true;
    std::optional<ConnectingPath> witness;
    Rat witness_degree = 0;  // degree of the witness loop under q1 - q2
};
EquivReport deformation_equivalent(const ChargeTriple& r1, const ChargeTriple& r2,
                                   const CategoryPresentation& c);

enum class Chirality { Left, Right, Neutral, Mixed };
const char* chirality_name(Chirality c);

struct ChiralityReport {
    std::map<std::string, Chirality> arrows;
    std::map<std::string, Chirality> objects;
};
ChiralityReport chirality(const ChargeTriple& r, const CategoryPresentation& c);

}  // namespace cstab
