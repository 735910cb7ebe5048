#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cyclic_stab/catgraph.hpp"
#include "cyclic_stab/mf.hpp"

namespace cstab {

// Equivariant A_n catalog for w = x^{n+1} with Z/d acting by weight 1/d on x.
struct AnCatalog {
    int n = 2, d = 3;
    Ring ring;
    HomOptions opts;
    std::vector<std::string> ids;
    std::map<std::string, MatrixFactorization> objects;
    std::map<std::string, HomElement> reps;  // arrow id -> representative
    CategoryPresentation presentation;       // oracles not attached

    const HomComplex& hom(const std::string& a, const std::string& b) const;
    // Coordinates of an even closed map between catalog objects in the arrow basis.
    std::optional<RatVec> arrow_coords(const std::string& a, const std::string& b,
                                       const HomElement& f) const;
    std::optional<LinComb> compose_path(const std::vector<std::string>& path) const;
    // Catalog object isomorphic to x, with u: x -> P and v: P -> x.
    std::optional<std::string> match(const MatrixFactorization& x, HomElement* u = nullptr,
                                     HomElement* v = nullptr) const;
    std::vector<size_t> fingerprint(const MatrixFactorization& x) const;
    // Cone of t.f is isomorphic to the third vertex (explicit inverse pair) and the
    // induced maps are t.g and t.h.
    bool verify_triangle(const Triangle& t) const;
    std::optional<Triangle> cone_triangle(const std::string& f, std::string* why = nullptr) const;

    std::map<std::pair<std::string, std::string>, std::shared_ptr<HomComplex>> homs;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> arrow_ids;
    std::map<std::string, std::vector<size_t>> fingerprints;
    std::map<std::string, std::pair<HomElement, HomElement>> shift_iso;  // shift(E) -> S(E), back
};

std::string an_object_id(int a, int j);
std::string an_display_name(int a, int j);
// Twist offset used for M_a^j; chosen so shift(M_a^j) = M_{n+1-a}^j when 2a != n+1.
int an_twist_offset(int n, int a);

std::shared_ptr<const AnCatalog> build_an_catalog(int n, int d, int bound = default_bound(),
                                                  const Rat& rcharge_scale = 2);
// Catalog presentation with the composition oracle attached.
CategoryPresentation build_an_equivariant(int n, int d, int bound = default_bound(),
                                          const Rat& rcharge_scale = 2);
CategoryPresentation attach_oracles(const std::shared_ptr<const AnCatalog>& cat);

}  // namespace cstab
