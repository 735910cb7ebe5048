#include "cyclic_stab/polymat.hpp"

#include <cstdlib>
#include <sstream>

#include "cyclic_stab/error.hpp"

namespace cstab {

int default_bound() {
    if (const char* s = std::getenv("CYCLIC_STAB_BOUND")) {
        int b = std::atoi(s);
        if (b > 0) return b;
    }
    return 8;
}

int total_degree(const Exps& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

TruncPoly TruncPoly::constant(const Ring& r, const Rat& c) {
    TruncPoly p(r);
    p.add_term(Exps(r.vars.size(), 0), c);
    return p;
}

TruncPoly TruncPoly::monomial(const Ring& r, const Exps& e, const Rat& c) {
    if (e.size() != r.vars.size()) throw Error(Errc::RingMismatch, "exponent arity");
    TruncPoly p(r);
    p.add_term(e, c);
    return p;
}

TruncPoly TruncPoly::var_pow(const Ring& r, int k, size_t i) {
    Exps e(r.vars.size(), 0);
    e.at(i) = k;
    return monomial(r, e);
}

Rat TruncPoly::coeff(const Exps& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void TruncPoly::add_term(const Exps& e, const Rat& c) {
    if (sgn(c) == 0 || total_degree(e) >= ring_.bound) return;
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) c_.erase(it);
    }
}

void TruncPoly::check_ring(const TruncPoly& o) const {
    if (!(ring_ == o.ring_)) throw Error(Errc::RingMismatch, "polynomials from different rings");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
    check_ring(o);
    TruncPoly r = *this;
    for (const auto& [e, c] : o.c_) r.add_term(e, c);
    return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const { return *this + (-o); }

TruncPoly TruncPoly::operator-() const { return scaled(-1); }

TruncPoly TruncPoly::scaled(const Rat& k) const {
    TruncPoly r(ring_);
    if (sgn(k) == 0) return r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, c * k);
    return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
    check_ring(o);
    TruncPoly r(ring_);
    Exps e(ring_.vars.size());
    for (const auto& [ea, ca] : c_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.c_) {
            if (da + total_degree(eb) >= ring_.bound) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncPoly poly_mul_trunc(const TruncPoly& a, const TruncPoly& b) { return a * b; }

TruncPoly TruncPoly::derivative(size_t i) const {
    TruncPoly r(ring_);
    for (const auto& [e, c] : c_) {
        if (e.at(i) == 0) continue;
        Exps f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

std::string TruncPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        bool unit = (c == 1) && total_degree(e) > 0;
        if (!unit) os << c.get_str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!unit) os << "*";
            unit = false;
            os << ring_.vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Exps> monomial_basis(const Ring& r) {
    std::vector<Exps> out;
    size_t n = r.vars.size();
    for (int d = 0; d < r.bound; ++d) {
        // compositions of d into n parts, lexicographically descending in the first slot
        Exps e(n, 0);
        std::vector<Exps> level;
        auto rec = [&](auto&& self, size_t i, int left) -> void {
            if (i + 1 == n) {
                e[i] = left;
                level.push_back(e);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[i] = k;
                self(self, i + 1, left - k);
            }
        };
        if (n == 0) {
            if (d == 0) out.push_back({});
            continue;
        }
        rec(rec, 0, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

PolyMatrix::PolyMatrix(Ring r, size_t rows, size_t cols)
    : ring_(r), rows_(rows), cols_(cols), e_(rows * cols, TruncPoly(r)) {}

PolyMatrix PolyMatrix::identity(const Ring& r, size_t n) {
    return scalar(r, n, TruncPoly::constant(r, 1));
}

PolyMatrix PolyMatrix::scalar(const Ring& r, size_t n, const TruncPoly& p) {
    PolyMatrix m(r, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::from_rows(const Ring& r, const std::vector<std::vector<TruncPoly>>& rows) {
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    PolyMatrix m(r, nr, nc);
    for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
        for (size_t j = 0; j < nc; ++j) {
            if (!(rows[i][j].ring() == r)) throw Error(Errc::RingMismatch, "matrix entry ring");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (!(ring_ == o.ring_)) throw Error(Errc::RingMismatch, "matrix product");
    if (cols_ != o.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
    PolyMatrix m(ring_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const TruncPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const TruncPoly& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) = m.at(i, j) + a * b;
            }
        }
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (!(ring_ == o.ring_)) throw Error(Errc::RingMismatch, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix sum");
    PolyMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = m.e_[i] + o.e_[i];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const { return scaled(-1); }

PolyMatrix PolyMatrix::scaled(const Rat& k) const {
    PolyMatrix m = *this;
    for (auto& p : m.e_) p = p.scaled(k);
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::derivative(size_t var) const {
    PolyMatrix m = *this;
    for (auto& p : m.e_) p = p.derivative(var);
    return m;
}

PolyMatrix PolyMatrix::block(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                             const PolyMatrix& d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_)
        throw Error(Errc::DimensionMismatch, "block assembly");
    PolyMatrix m(a.ring_, a.rows_ + c.rows_, a.cols_ + b.cols_);
    auto put = [&](const PolyMatrix& s, size_t r0, size_t c0) {
        if (!(s.ring_ == a.ring_)) throw Error(Errc::RingMismatch, "block assembly");
        for (size_t i = 0; i < s.rows_; ++i)
            for (size_t j = 0; j < s.cols_; ++j) m.at(r0 + i, c0 + j) = s.at(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols_);
    put(c, a.rows_, 0);
    put(d, a.rows_, a.cols_);
    return m;
}

PolyMatrix PolyMatrix::sub(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::DimensionMismatch, "submatrix");
    PolyMatrix m(ring_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows) {
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    RationalMatrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw Error(Errc::DimensionMismatch, "ragged rows");
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(size_t rows, const std::vector<RatVec>& cols) {
    RationalMatrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RationalMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    RatVec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
    RationalMatrix m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (sgn(at(i, k)) == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                if (sgn(o.at(k, j)) != 0) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

Rref rref(RationalMatrix m) {
    Rref out;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m.at(i, col)) == 0) continue;
            Rat f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                if (sgn(m.at(row, j)) != 0) m.at(i, j) -= f * m.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.r = std::move(m);
    return out;
}

size_t mat_rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> mat_kernel_basis(const RationalMatrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> mat_solve(const RationalMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Rref rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    RatVec v(m.cols());
    for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = rr.r.at(i, m.cols());
    return v;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace cstab
