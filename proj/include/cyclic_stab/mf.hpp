#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "cyclic_stab/polymat.hpp"

namespace cstab {

// Twist weights per basis element of E^0, E^1; x carries weight 1/d.
struct Weights {
    std::vector<Rat> w0, w1;
    int d = 1;
    bool operator==(const Weights& o) const { return w0 == o.w0 && w1 == o.w1 && d == o.d; }
};

struct MatrixFactorization {
    TruncPoly w;
    PolyMatrix delta0;  // E^0 -> E^1
    PolyMatrix delta1;  // E^1 -> E^0
    std::optional<Weights> weights;

    size_t rank() const { return delta0.rows(); }
    const Ring& ring() const { return w.ring(); }
    PolyMatrix full() const;  // [[0, delta1], [delta0, 0]] on E^0 (+) E^1
    bool operator==(const MatrixFactorization& o) const {
        return w == o.w && delta0 == o.delta0 && delta1 == o.delta1 && weights == o.weights;
    }
};

MatrixFactorization make_mf(const TruncPoly& w, const PolyMatrix& delta0, const PolyMatrix& delta1,
                            std::optional<Weights> weights = std::nullopt);
MatrixFactorization shift(const MatrixFactorization& x);
// Rank-one A_n object (x^a, x^b) over the one-variable ring.
MatrixFactorization rank_one_mf(const Ring& r, int a, int b, std::optional<Weights> wt = std::nullopt);

// Weighted degree of a monomial: sum of exponents / d.
Rat monomial_weight(const Exps& e, int d);

// Degree h of a homogeneous potential (x has grading weight 1/h); absent otherwise.
std::optional<int> grading_degree(const TruncPoly& w);

// R-charge offsets of the basis of E^0 then E^1, chosen so every differential entry has
// R-charge 1 (x weighted 1/h); absent when no consistent assignment exists.
std::optional<std::vector<Rat>> r_offsets(const MatrixFactorization& x, const Rat& scale);

// Block form: even maps b0: E^0->F^0, b1: E^1->F^1; odd maps b0: E^0->F^1, b1: E^1->F^0.
struct HomElement {
    MatrixFactorization source, target;
    int parity = 0;
    PolyMatrix b0, b1;
    std::optional<Rat> rcharge;

    PolyMatrix full() const;
    bool is_zero() const { return b0.is_zero() && b1.is_zero(); }
};

HomElement zero_map(const MatrixFactorization& x, const MatrixFactorization& y, int parity);
HomElement identity_map(const MatrixFactorization& x);
HomElement from_full(const MatrixFactorization& x, const MatrixFactorization& y, int parity,
                     const PolyMatrix& full);
HomElement compose(const HomElement& g, const HomElement& f);  // g after f
HomElement add(const HomElement& a, const HomElement& b);
HomElement scale(const HomElement& a, const Rat& k);
// d f = delta_F f - (-1)^|f| f delta_E
HomElement hom_differential(const HomElement& f);
bool is_closed(const HomElement& f);
// Same map viewed between the shifted objects.
HomElement shift_map(const HomElement& f);

struct ConeData {
    MatrixFactorization cone;
    HomElement incl;  // Y -> cone
    HomElement proj;  // cone -> shift(X)
};
ConeData cone(const HomElement& f);

struct HomOptions {
    bool invariant_only = true;
    Rat rcharge_scale = 2;
};

// Linearized hom complex Hom(X, Y) with cohomology bases in both parities.
class HomComplex {
public:
    HomComplex(const MatrixFactorization& x, const MatrixFactorization& y, HomOptions opts = {});

    const std::vector<HomElement>& basis(int parity) const { return basis_[parity]; }
    size_t dim(int parity) const { return basis_[parity].size(); }
    bool equivariant() const { return equivariant_; }
    bool graded() const { return graded_; }

    // Coefficients of f in basis(f.parity) modulo exact maps; absent if f is not closed
    // or not in the span.
    std::optional<RatVec> decompose(const HomElement& f) const;
    bool is_exact(const HomElement& f) const;
    std::optional<HomElement> homotopy(const HomElement& f) const;

    RatVec vectorize(const HomElement& f) const;
    HomElement devectorize(int parity, const RatVec& v) const;
    std::optional<Rat> unknown_rcharge(int parity, size_t idx) const;

private:
    struct Unknown {
        int blk;
        size_t i, j, mono;
        bool invariant;
        std::optional<Rat> rcharge;
    };
    void build_layout();
    void build_differentials();
    void build_cohomology(int parity);
    // Every monomial of this parity and R-charge lies below the truncation bound.
    bool piece_complete(int parity, const Rat& rho) const;
    bool usable_homotopy(int parity, size_t idx) const;

    MatrixFactorization x_, y_;
    HomOptions opts_;
    bool equivariant_ = false, graded_ = false;
    std::vector<Exps> monos_;
    std::vector<Rat> ox_, oy_;
    int h_ = 0;
    std::vector<Unknown> unk_[2];
    RationalMatrix d_[2];  // d_[p]: parity p unknowns -> parity 1-p coordinates
    std::vector<HomElement> basis_[2];
    std::vector<RatVec> basis_vec_[2];
};

std::vector<HomElement> hom_space(const MatrixFactorization& x, const MatrixFactorization& y,
                                  int parity, HomOptions opts = {});

// Explicit inverse pair u: X->Y, v: Y->X with v u ~ id and u v ~ id.
std::optional<std::pair<HomElement, HomElement>> find_isomorphism(
    const MatrixFactorization& x, const MatrixFactorization& y, HomOptions opts = {});
bool is_contractible(const MatrixFactorization& x, HomOptions opts = {});

// One-variable Kapustin-Li residue pairing of f: X->Y with g: Y->X of complementary parity:
//   (-1)^{C(n+1,2)} / n! Res[ str(F G (dQ)^n) / (d_1 w ... d_n w) ],  n = number of variables.
// Only n = 1 is implemented.
Rat kapustin_li_pair(const HomElement& f, const HomElement& g);

}  // namespace cstab
