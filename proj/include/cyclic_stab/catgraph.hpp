#pragma once
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_stab/rational.hpp"

namespace cstab {

struct Arrow {
    std::string id, src, dst;
    Rat degree;
    std::string label;
    bool operator==(const Arrow& o) const {
        return id == o.id && src == o.src && dst == o.dst && degree == o.degree && label == o.label;
    }
};

// A distinguished triangle A -f-> B -g-> C -h-> A[1] by arrow ids.
struct Triangle {
    std::string f, g, h;
    bool operator==(const Triangle& o) const { return f == o.f && g == o.g && h == o.h; }
};

using LinComb = std::vector<std::pair<std::string, Rat>>;
using DegreeMap = std::map<std::string, Rat>;

struct CategoryPresentation {
    std::vector<std::string> objects;
    std::map<std::string, std::string> shift;
    std::vector<Arrow> arrows;
    std::map<std::string, std::string> arrow_shift;  // may be partial
    std::vector<Triangle> triangles;                 // catalog of distinguished triangles
    std::map<std::string, std::string> display;      // optional display names
    std::vector<std::string> notes;
    std::string source;  // builder recipe, e.g. "an-zd:2,3"; empty if hand-made
    int bound = 0;
    Rat rcharge_scale = 2;

    // Composite of a path of arrows (first arrow applied first), as a combination of arrows
    // from the first source to the last target; absent when unknown.
    std::function<std::optional<LinComb>(const std::vector<std::string>&)> compose;
    // Re-derives a triangle from its first arrow in the backend; absent when unknown.
    std::function<bool(const Triangle&)> distinguished;

    const Arrow& arrow(const std::string& id) const;
    bool has_arrow(const std::string& id) const;
    bool has_object(const std::string& id) const;
    std::string name(const std::string& obj) const;
    DegreeMap degrees() const;
    std::vector<const Arrow*> arrows_between(const std::string& a, const std::string& b) const;
    std::optional<Triangle> triangle_starting(const std::string& f, const std::string& g) const;
    void reindex();

private:
    std::map<std::string, size_t> arrow_index_;
};

// Structural checks: shift is an involution, identities and Bott arrows of degree 0,
// arrow shift preserves degree. Throws IdMismatch / Inconsistent.
void validate_presentation(const CategoryPresentation& c);
bool presentations_equal(const CategoryPresentation& a, const CategoryPresentation& b);

struct Step {
    std::string arrow;
    bool forward = true;
};

struct ConnectingPath {
    std::string start;
    std::vector<Step> steps;
};

ConnectingPath reverse(const ConnectingPath& p, const CategoryPresentation& c);
// Endpoint object of a path; throws BrokenChain.
std::string path_end(const ConnectingPath& p, const CategoryPresentation& c);
Rat path_degree(const ConnectingPath& p, const CategoryPresentation& c);
Rat path_degree(const ConnectingPath& p, const CategoryPresentation& c, const DegreeMap& q);
std::string path_str(const ConnectingPath& p);

struct DiagramNode {
    std::string id;
    std::vector<std::string> summands;
};

struct Block {
    size_t src = 0, dst = 0;  // summand indices
    std::string arrow;
};

struct DiagramEdge {
    std::string id, src, dst;
    std::vector<Block> blocks;
};

struct Diagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;

    const DiagramNode& node(const std::string& id) const;
    bool has_node(const std::string& id) const;
    const DiagramEdge& edge(const std::string& id) const;
};

// Throws IdMismatch when a block does not match the declared summands.
void validate_diagram(const Diagram& d, const CategoryPresentation& c);

// Forest choice 0 scans vertices and edges in declaration order; other values shuffle
// both deterministically.
std::vector<ConnectingPath> cycle_basis(const Diagram& d, const CategoryPresentation& c,
                                        unsigned forest = 0);

struct LiftReport {
    bool liftable = true;
    std::optional<ConnectingPath> witness;
    Rat witness_degree = 0;
};
LiftReport is_liftable(const Diagram& d, const CategoryPresentation& c, const DegreeMap& q,
                       unsigned forest = 0);
LiftReport is_liftable(const Diagram& d, const CategoryPresentation& c, unsigned forest = 0);

// Summand graph of the diagram is connected.
bool diagram_connective(const Diagram& d);

using PartialMatrix = std::vector<std::vector<std::optional<Rat>>>;
// Entry (j, i): degree of any path from source summand i to target summand j.
PartialMatrix degree_matrix(const std::string& edge, const Diagram& d, const CategoryPresentation& c,
                            const DegreeMap& q);

struct RMatrix {
    std::vector<std::vector<std::complex<double>>> entries;  // exp(2 pi i q), display only
    PartialMatrix q;
    bool rank_one = false;
};
RMatrix r_matrix(const std::string& edge, const Diagram& d, const CategoryPresentation& c,
                 const DegreeMap& q);

bool is_connective(const CategoryPresentation& c);

struct GlueResult {
    Diagram diagram;
    bool predicted_liftable = false;  // d1, d2 liftable and common connective
    LiftReport verified;
};
GlueResult glue(const Diagram& d1, const Diagram& d2, const Diagram& common,
                const CategoryPresentation& c, const DegreeMap& q);

}  // namespace cstab
