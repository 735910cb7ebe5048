#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_stab/rational.hpp"

namespace cstab {

int default_bound();  // 8, or CYCLIC_STAB_BOUND if set

struct Ring {
    std::vector<std::string> vars{"x"};
    int bound = 8;
    bool operator==(const Ring& o) const { return vars == o.vars && bound == o.bound; }
};

using Exps = std::vector<int>;

// Polynomial in k[x_1..x_N]/(monomials of total degree >= bound).
class TruncPoly {
public:
    TruncPoly() = default;
    explicit TruncPoly(Ring r) : ring_(std::move(r)) {}

    static TruncPoly constant(const Ring& r, const Rat& c);
    static TruncPoly monomial(const Ring& r, const Exps& e, const Rat& c = 1);
    // x_i^k for a one-variable ring this is just x^k.
    static TruncPoly var_pow(const Ring& r, int k, size_t i = 0);

    const Ring& ring() const { return ring_; }
    const std::map<Exps, Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(const Exps& e) const;
    void add_term(const Exps& e, const Rat& c);

    TruncPoly operator+(const TruncPoly& o) const;
    TruncPoly operator-(const TruncPoly& o) const;
    TruncPoly operator-() const;
    TruncPoly operator*(const TruncPoly& o) const;
    TruncPoly scaled(const Rat& k) const;
    bool operator==(const TruncPoly& o) const { return ring_ == o.ring_ && c_ == o.c_; }

    // Derivative with respect to variable i (truncation preserved).
    TruncPoly derivative(size_t i = 0) const;
    std::string str() const;

private:
    void check_ring(const TruncPoly& o) const;
    Ring ring_;
    std::map<Exps, Rat> c_;
};

TruncPoly poly_mul_trunc(const TruncPoly& a, const TruncPoly& b);

int total_degree(const Exps& e);
// All exponent vectors of total degree < bound, sorted by (degree, lex).
std::vector<Exps> monomial_basis(const Ring& r);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Ring r, size_t rows, size_t cols);
    static PolyMatrix identity(const Ring& r, size_t n);
    static PolyMatrix scalar(const Ring& r, size_t n, const TruncPoly& p);
    static PolyMatrix from_rows(const Ring& r, const std::vector<std::vector<TruncPoly>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }
    TruncPoly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const TruncPoly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix scaled(const Rat& k) const;
    bool operator==(const PolyMatrix& o) const;
    bool is_zero() const;
    PolyMatrix derivative(size_t var = 0) const;

    // [[a, b], [c, d]] assembled from blocks.
    static PolyMatrix block(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                            const PolyMatrix& d);
    PolyMatrix sub(size_t r0, size_t c0, size_t nr, size_t nc) const;

private:
    Ring ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<TruncPoly> e_;
};

using RatVec = std::vector<Rat>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix identity(size_t n);
    static RationalMatrix from_rows(const std::vector<RatVec>& rows);
    static RationalMatrix from_columns(size_t rows, const std::vector<RatVec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    RatVec apply(const RatVec& v) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct Rref {
    RationalMatrix r;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};
Rref rref(RationalMatrix m);
size_t mat_rank(const RationalMatrix& m);
// Free column f gives the vector with 1 at f and -R(i, f) at the i-th pivot column.
std::vector<RatVec> mat_kernel_basis(const RationalMatrix& m);
// Free variables are set to zero.
std::optional<RatVec> mat_solve(const RationalMatrix& m, const RatVec& b);

bool is_zero_vec(const RatVec& v);

}  // namespace cstab
