#include "cyclic_stab/mf.hpp"

#include <deque>
#include <set>

#include "cyclic_stab/error.hpp"

namespace cstab {

namespace {

void check_same_ring(const MatrixFactorization& x, const MatrixFactorization& y) {
    if (!(x.ring() == y.ring())) throw Error(Errc::RingMismatch, "factorizations over different rings");
    if (!(x.w == y.w)) throw Error(Errc::RingMismatch, "factorizations of different potentials");
}

}  // namespace

PolyMatrix MatrixFactorization::full() const {
    size_t r = rank();
    PolyMatrix z(ring(), r, r);
    return PolyMatrix::block(z, delta1, delta0, z);
}

Rat monomial_weight(const Exps& e, int d) { return ratio(total_degree(e), d); }

MatrixFactorization make_mf(const TruncPoly& w, const PolyMatrix& delta0, const PolyMatrix& delta1,
                            std::optional<Weights> weights) {
    size_t r = delta0.rows();
    if (delta0.cols() != r || delta1.rows() != r || delta1.cols() != r)
        throw Error(Errc::DimensionMismatch, "differentials must be square of equal size");
    if (!(delta0.ring() == w.ring()) || !(delta1.ring() == w.ring()))
        throw Error(Errc::RingMismatch, "differentials and potential over different rings");
    PolyMatrix wi = PolyMatrix::scalar(w.ring(), r, w);
    if (!(delta0 * delta1 == wi) || !(delta1 * delta0 == wi))
        throw Error(Errc::NotAFactorization, "delta0*delta1 or delta1*delta0 differs from w*I");
    if (weights) {
        if (weights->w0.size() != r || weights->w1.size() != r || weights->d < 1)
            throw Error(Errc::DimensionMismatch, "weight vector length");
        for (auto& v : weights->w0) v = frac(v);
        for (auto& v : weights->w1) v = frac(v);
        auto check = [&](const PolyMatrix& m, const std::vector<Rat>& wt_t,
                         const std::vector<Rat>& wt_s, const char* name) {
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j)
                    for (const auto& [e, c] : m.at(i, j).coeffs()) {
                        Rat gap = wt_t[i] - wt_s[j] - monomial_weight(e, weights->d);
                        if (!is_integer(gap))
                            throw Error(Errc::NotEquivariant,
                                        std::string(name) + " entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") breaks the twist weights");
                    }
        };
        check(delta0, weights->w1, weights->w0, "delta0");
        check(delta1, weights->w0, weights->w1, "delta1");
    }
    return MatrixFactorization{w, delta0, delta1, weights};
}

MatrixFactorization shift(const MatrixFactorization& x) {
    MatrixFactorization s{x.w, -x.delta1, -x.delta0, std::nullopt};
    if (x.weights) s.weights = Weights{x.weights->w1, x.weights->w0, x.weights->d};
    return s;
}

MatrixFactorization rank_one_mf(const Ring& r, int a, int b, std::optional<Weights> wt) {
    TruncPoly w = TruncPoly::var_pow(r, a + b);
    PolyMatrix d0 = PolyMatrix::scalar(r, 1, TruncPoly::var_pow(r, a));
    PolyMatrix d1 = PolyMatrix::scalar(r, 1, TruncPoly::var_pow(r, b));
    return make_mf(w, d0, d1, std::move(wt));
}

std::optional<int> grading_degree(const TruncPoly& w) {
    std::optional<int> h;
    for (const auto& [e, c] : w.coeffs()) {
        int k = total_degree(e);
        if (h && *h != k) return std::nullopt;
        h = k;
    }
    if (!h || *h == 0) return std::nullopt;
    return h;
}

std::optional<std::vector<Rat>> r_offsets(const MatrixFactorization& x, const Rat& scale) {
    auto h = grading_degree(x.w);
    if (!h) return std::nullopt;
    size_t r = x.rank();
    int d = *h;
    // edge (s, t, D): r_t = r_s + D - 1
    struct Edge {
        size_t s, t;
        Rat shift;
    };
    std::vector<Edge> edges;
    auto collect = [&](const PolyMatrix& m, size_t soff, size_t toff) -> bool {
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                const auto& cs = m.at(i, j).coeffs();
                if (cs.empty()) continue;
                std::optional<Rat> deg;
                for (const auto& [e, c] : cs) {
                    Rat dd = scale * monomial_weight(e, d);
                    if (deg && *deg != dd) return false;
                    deg = dd;
                }
                edges.push_back({soff + j, toff + i, *deg - 1});
            }
        return true;
    };
    if (!collect(x.delta0, 0, r) || !collect(x.delta1, r, 0)) return std::nullopt;
    std::vector<std::vector<std::pair<size_t, Rat>>> adj(2 * r);
    for (const auto& e : edges) {
        adj[e.s].push_back({e.t, e.shift});
        adj[e.t].push_back({e.s, -e.shift});
    }
    std::vector<std::optional<Rat>> val(2 * r);
    for (size_t root = 0; root < 2 * r; ++root) {
        if (val[root]) continue;
        std::vector<size_t> comp{root};
        val[root] = Rat(0);
        std::deque<size_t> q{root};
        while (!q.empty()) {
            size_t u = q.front();
            q.pop_front();
            for (const auto& [v, sh] : adj[u]) {
                Rat want = *val[u] + sh;
                if (!val[v]) {
                    val[v] = want;
                    comp.push_back(v);
                    q.push_back(v);
                } else if (*val[v] != want) {
                    return std::nullopt;
                }
            }
        }
        Rat sum = 0;
        for (size_t v : comp) sum += *val[v];
        Rat corr = (ratio(-1, 2) * Rat(comp.size()) - sum) / Rat(comp.size());
        for (size_t v : comp) *val[v] += corr;
    }
    std::vector<Rat> out;
    for (auto& v : val) out.push_back(*v);
    return out;
}

PolyMatrix HomElement::full() const {
    const Ring& r = source.ring();
    size_t rs = source.rank(), rt = target.rank();
    PolyMatrix z(r, rt, rs);
    if (parity == 0) return PolyMatrix::block(b0, z, z, b1);
    return PolyMatrix::block(z, b1, b0, z);
}

HomElement zero_map(const MatrixFactorization& x, const MatrixFactorization& y, int parity) {
    check_same_ring(x, y);
    PolyMatrix z(x.ring(), y.rank(), x.rank());
    return HomElement{x, y, parity, z, z, std::nullopt};
}

HomElement identity_map(const MatrixFactorization& x) {
    PolyMatrix id = PolyMatrix::identity(x.ring(), x.rank());
    return HomElement{x, x, 0, id, id, Rat(0)};
}

HomElement from_full(const MatrixFactorization& x, const MatrixFactorization& y, int parity,
                     const PolyMatrix& full) {
    size_t rs = x.rank(), rt = y.rank();
    if (full.rows() != 2 * rt || full.cols() != 2 * rs)
        throw Error(Errc::DimensionMismatch, "full map has wrong shape");
    HomElement h{x, y, parity, {}, {}, std::nullopt};
    if (parity == 0) {
        h.b0 = full.sub(0, 0, rt, rs);
        h.b1 = full.sub(rt, rs, rt, rs);
        PolyMatrix off1 = full.sub(0, rs, rt, rs), off2 = full.sub(rt, 0, rt, rs);
        if (!off1.is_zero() || !off2.is_zero())
            throw Error(Errc::DimensionMismatch, "even map with off-diagonal blocks");
    } else {
        h.b0 = full.sub(rt, 0, rt, rs);
        h.b1 = full.sub(0, rs, rt, rs);
        PolyMatrix d1 = full.sub(0, 0, rt, rs), d2 = full.sub(rt, rs, rt, rs);
        if (!d1.is_zero() || !d2.is_zero())
            throw Error(Errc::DimensionMismatch, "odd map with diagonal blocks");
    }
    return h;
}

HomElement compose(const HomElement& g, const HomElement& f) {
    if (!(f.target == g.source)) throw Error(Errc::DimensionMismatch, "maps are not composable");
    HomElement h = from_full(f.source, g.target, (f.parity + g.parity) % 2, g.full() * f.full());
    if (f.rcharge && g.rcharge) h.rcharge = *f.rcharge + *g.rcharge;
    return h;
}

HomElement add(const HomElement& a, const HomElement& b) {
    if (!(a.source == b.source) || !(a.target == b.target) || a.parity != b.parity)
        throw Error(Errc::DimensionMismatch, "adding maps of different type");
    HomElement h = a;
    h.b0 = a.b0 + b.b0;
    h.b1 = a.b1 + b.b1;
    if (!(a.rcharge == b.rcharge)) h.rcharge.reset();
    return h;
}

HomElement scale(const HomElement& a, const Rat& k) {
    HomElement h = a;
    h.b0 = a.b0.scaled(k);
    h.b1 = a.b1.scaled(k);
    return h;
}

HomElement hom_differential(const HomElement& f) {
    PolyMatrix ff = f.full();
    PolyMatrix df = f.target.full() * ff;
    PolyMatrix fd = ff * f.source.full();
    PolyMatrix out = f.parity == 0 ? df - fd : df + fd;
    HomElement h = from_full(f.source, f.target, 1 - f.parity, out);
    if (f.rcharge) h.rcharge = *f.rcharge + 1;
    return h;
}

bool is_closed(const HomElement& f) { return hom_differential(f).is_zero(); }

HomElement shift_map(const HomElement& f) {
    HomElement h{shift(f.source), shift(f.target), f.parity, f.b1, f.b0, f.rcharge};
    return h;
}

ConeData cone(const HomElement& f) {
    if (f.parity != 0) throw Error(Errc::NotClosed, "cone needs an even map");
    if (!is_closed(f)) throw Error(Errc::NotClosed, "cone of a non-closed map");
    const MatrixFactorization& x = f.source;
    const MatrixFactorization& y = f.target;
    const Ring& r = x.ring();
    size_t rx = x.rank(), ry = y.rank();
    PolyMatrix zyx(r, x.rank(), y.rank());
    PolyMatrix dc0 = PolyMatrix::block(y.delta0, f.b1, zyx, -x.delta1);
    PolyMatrix dc1 = PolyMatrix::block(y.delta1, f.b0, zyx, -x.delta0);
    std::optional<Weights> wt;
    if (x.weights && y.weights && x.weights->d == y.weights->d) {
        Weights w;
        w.d = x.weights->d;
        w.w0 = y.weights->w0;
        w.w0.insert(w.w0.end(), x.weights->w1.begin(), x.weights->w1.end());
        w.w1 = y.weights->w1;
        w.w1.insert(w.w1.end(), x.weights->w0.begin(), x.weights->w0.end());
        wt = w;
    }
    MatrixFactorization c = make_mf(x.w, dc0, dc1, wt);
    PolyMatrix inc(r, ry + rx, ry);
    for (size_t i = 0; i < ry; ++i) inc.at(i, i) = TruncPoly::constant(r, 1);
    PolyMatrix pr(r, rx, ry + rx);
    for (size_t i = 0; i < rx; ++i) pr.at(i, ry + i) = TruncPoly::constant(r, 1);
    HomElement incl{y, c, 0, inc, inc, Rat(0)};
    HomElement proj{c, shift(x), 0, pr, pr, Rat(0)};
    return ConeData{c, incl, proj};
}

// ---------------------------------------------------------------- HomComplex

HomComplex::HomComplex(const MatrixFactorization& x, const MatrixFactorization& y, HomOptions opts)
    : x_(x), y_(y), opts_(opts) {
    check_same_ring(x, y);
    equivariant_ = x.weights && y.weights && x.weights->d == y.weights->d;
    monos_ = monomial_basis(x.ring());
    build_layout();
    build_differentials();
    build_cohomology(0);
    build_cohomology(1);
}

void HomComplex::build_layout() {
    size_t rx = x_.rank(), ry = y_.rank();
    auto ox = r_offsets(x_, opts_.rcharge_scale);
    auto oy = r_offsets(y_, opts_.rcharge_scale);
    graded_ = ox && oy;
    if (graded_) {
        ox_ = *ox;
        oy_ = *oy;
        h_ = *grading_degree(x_.w);
    }
    for (int p = 0; p < 2; ++p) {
        unk_[p].clear();
        for (int blk = 0; blk < 2; ++blk)
            for (size_t i = 0; i < ry; ++i)
                for (size_t j = 0; j < rx; ++j)
                    for (size_t m = 0; m < monos_.size(); ++m) {
                        Unknown u{blk, i, j, m, true, std::nullopt};
                        // source basis index in E^0(+)E^1 and target in F^0(+)F^1
                        size_t s = blk == 0 ? j : rx + j;
                        int tpar = (blk + p) % 2;
                        size_t t = tpar == 0 ? i : ry + i;
                        if (equivariant_) {
                            const Weights& wx = *x_.weights;
                            const Weights& wy = *y_.weights;
                            Rat ws = blk == 0 ? wx.w0[j] : wx.w1[j];
                            Rat wt = tpar == 0 ? wy.w0[i] : wy.w1[i];
                            Rat mu = monomial_weight(monos_[m], wx.d);
                            u.invariant = is_integer(Rat(wt - ws - mu));
                        }
                        if (graded_)
                            u.rcharge = opts_.rcharge_scale * monomial_weight(monos_[m], h_) +
                                        ox_[s] - oy_[t];
                        unk_[p].push_back(u);
                    }
    }
}

RatVec HomComplex::vectorize(const HomElement& f) const {
    if (!(f.source == x_) || !(f.target == y_))
        throw Error(Errc::DimensionMismatch, "map does not belong to this hom complex");
    const auto& us = unk_[f.parity];
    RatVec v(us.size());
    for (size_t k = 0; k < us.size(); ++k) {
        const Unknown& u = us[k];
        const TruncPoly& e = (u.blk == 0 ? f.b0 : f.b1).at(u.i, u.j);
        v[k] = e.coeff(monos_[u.mono]);
    }
    return v;
}

HomElement HomComplex::devectorize(int parity, const RatVec& v) const {
    HomElement h = zero_map(x_, y_, parity);
    const auto& us = unk_[parity];
    std::optional<Rat> rc;
    bool uniform = true;
    for (size_t k = 0; k < us.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        const Unknown& u = us[k];
        PolyMatrix& b = u.blk == 0 ? h.b0 : h.b1;
        b.at(u.i, u.j).add_term(monos_[u.mono], v[k]);
        if (!u.rcharge) uniform = false;
        else if (!rc) rc = u.rcharge;
        else if (*rc != *u.rcharge) uniform = false;
    }
    if (uniform) h.rcharge = rc;
    return h;
}

std::optional<Rat> HomComplex::unknown_rcharge(int parity, size_t idx) const {
    return unk_[parity].at(idx).rcharge;
}

void HomComplex::build_differentials() {
    for (int p = 0; p < 2; ++p) {
        const auto& us = unk_[p];
        RationalMatrix d(unk_[1 - p].size(), us.size());
        for (size_t k = 0; k < us.size(); ++k) {
            RatVec unit(us.size());
            unit[k] = 1;
            HomElement f = devectorize(p, unit);
            RatVec img = vectorize(hom_differential(f));
            for (size_t r = 0; r < img.size(); ++r) d.at(r, k) = img[r];
        }
        d_[p] = std::move(d);
    }
}

bool HomComplex::piece_complete(int p, const Rat& rho) const {
    if (!graded_) return true;
    size_t rx = x_.rank(), ry = y_.rank();
    for (int blk = 0; blk < 2; ++blk)
        for (size_t i = 0; i < ry; ++i)
            for (size_t j = 0; j < rx; ++j) {
                size_t s = blk == 0 ? j : rx + j;
                size_t t = (blk + p) % 2 == 0 ? i : ry + i;
                Rat k = (rho - ox_[s] + oy_[t]) * h_ / opts_.rcharge_scale;
                if (is_integer(k) && sgn(k) >= 0 && k >= x_.ring().bound) return false;
            }
    return true;
}

bool HomComplex::usable_homotopy(int p, size_t idx) const {
    const Unknown& u = unk_[p][idx];
    if (equivariant_ && opts_.invariant_only && !u.invariant) return false;
    if (!graded_) return true;
    return piece_complete(p, *u.rcharge) && piece_complete(1 - p, *u.rcharge + 1);
}

void HomComplex::build_cohomology(int p) {
    const auto& us = unk_[p];
    const auto& ue = unk_[1 - p];
    bool restrict = equivariant_ && opts_.invariant_only;
    // group parity-p unknowns by rcharge (single group if ungraded)
    std::map<Rat, std::vector<size_t>> groups;
    std::vector<size_t> all;
    for (size_t k = 0; k < us.size(); ++k) {
        if (restrict && !us[k].invariant) continue;
        if (graded_) groups[*us[k].rcharge].push_back(k);
        else all.push_back(k);
    }
    if (!graded_) groups[Rat(0)] = all;
    for (const auto& [rho, cols] : groups) {
        if (graded_ && !(piece_complete(p, rho) && piece_complete(1 - p, rho - 1) &&
                         piece_complete(1 - p, rho + 1)))
            continue;
        RationalMatrix sub(d_[p].rows(), cols.size());
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < d_[p].rows(); ++r) sub.at(r, c) = d_[p].at(r, cols[c]);
        std::vector<RatVec> closed;
        for (const RatVec& kv : mat_kernel_basis(sub)) {
            RatVec v(us.size());
            for (size_t c = 0; c < cols.size(); ++c) v[cols[c]] = kv[c];
            closed.push_back(std::move(v));
        }
        std::vector<RatVec> span;
        for (size_t k = 0; k < ue.size(); ++k) {
            if (restrict && !ue[k].invariant) continue;
            if (graded_ && *ue[k].rcharge != rho - 1) continue;
            RatVec col(us.size());
            for (size_t r = 0; r < us.size(); ++r) col[r] = d_[1 - p].at(r, k);
            if (!is_zero_vec(col)) span.push_back(std::move(col));
        }
        size_t rank = span.empty() ? 0 : mat_rank(RationalMatrix::from_columns(us.size(), span));
        for (auto& v : closed) {
            span.push_back(v);
            size_t nr = mat_rank(RationalMatrix::from_columns(us.size(), span));
            if (nr > rank) {
                rank = nr;
                HomElement h = devectorize(p, v);
                if (graded_) h.rcharge = rho;
                basis_[p].push_back(h);
                basis_vec_[p].push_back(v);
            } else {
                span.pop_back();
            }
        }
    }
}

std::optional<RatVec> HomComplex::decompose(const HomElement& f) const {
    int p = f.parity;
    RatVec v = vectorize(f);
    if (!is_zero_vec(d_[p].apply(v))) return std::nullopt;
    std::vector<RatVec> cols = basis_vec_[p];
    for (size_t k = 0; k < unk_[1 - p].size(); ++k) {
        if (!usable_homotopy(1 - p, k)) continue;
        RatVec col(unk_[p].size());
        for (size_t r = 0; r < col.size(); ++r) col[r] = d_[1 - p].at(r, k);
        cols.push_back(std::move(col));
    }
    auto sol = mat_solve(RationalMatrix::from_columns(v.size(), cols), v);
    if (!sol) return std::nullopt;
    return RatVec(sol->begin(), sol->begin() + basis_vec_[p].size());
}

std::optional<HomElement> HomComplex::homotopy(const HomElement& f) const {
    int q = 1 - f.parity;
    std::vector<size_t> use;
    for (size_t k = 0; k < unk_[q].size(); ++k)
        if (usable_homotopy(q, k)) use.push_back(k);
    RationalMatrix m(d_[q].rows(), use.size());
    for (size_t c = 0; c < use.size(); ++c)
        for (size_t r = 0; r < m.rows(); ++r) m.at(r, c) = d_[q].at(r, use[c]);
    auto sol = mat_solve(m, vectorize(f));
    if (!sol) return std::nullopt;
    RatVec full(unk_[q].size());
    for (size_t c = 0; c < use.size(); ++c) full[use[c]] = (*sol)[c];
    return devectorize(q, full);
}

bool HomComplex::is_exact(const HomElement& f) const { return homotopy(f).has_value(); }

std::vector<HomElement> hom_space(const MatrixFactorization& x, const MatrixFactorization& y,
                                  int parity, HomOptions opts) {
    return HomComplex(x, y, opts).basis(parity);
}

bool is_contractible(const MatrixFactorization& x, HomOptions opts) {
    HomComplex e(x, x, opts);
    return e.is_exact(identity_map(x));
}

std::optional<std::pair<HomElement, HomElement>> find_isomorphism(const MatrixFactorization& x,
                                                                  const MatrixFactorization& y,
                                                                  HomOptions opts) {
    HomComplex xy(x, y, opts), yx(y, x, opts), xx(x, x, opts), yy(y, y, opts);
    bool zx = xx.dim(0) == 0 && xx.dim(1) == 0, zy = yy.dim(0) == 0 && yy.dim(1) == 0;
    if (zx || zy) {
        if (zx && zy) return std::make_pair(zero_map(x, y, 0), zero_map(y, x, 0));
        return std::nullopt;
    }
    auto idx = xx.decompose(identity_map(x));
    auto idy = yy.decompose(identity_map(y));
    if (!idx || !idy) return std::nullopt;
    auto candidates = [](const HomComplex& h) {
        std::vector<HomElement> c = h.basis(0);
        if (c.size() > 1) {
            HomElement s = c[0];
            for (size_t i = 1; i < c.size(); ++i) s = add(s, c[i]);
            c.push_back(s);
        }
        return c;
    };
    // returns lambda with a ~ lambda * b in coordinates, if any
    auto ratio = [](const RatVec& a, const RatVec& b) -> std::optional<Rat> {
        std::optional<Rat> lam;
        for (size_t i = 0; i < a.size(); ++i) {
            if (sgn(b[i]) == 0) {
                if (sgn(a[i]) != 0) return std::nullopt;
                continue;
            }
            Rat l = a[i] / b[i];
            if (lam && *lam != l) return std::nullopt;
            lam = l;
        }
        if (!lam || sgn(*lam) == 0) return std::nullopt;
        return lam;
    };
    for (const auto& u : candidates(xy))
        for (const auto& v : candidates(yx)) {
            auto vu = xx.decompose(compose(v, u));
            if (!vu) continue;
            auto lam = ratio(*vu, *idx);
            if (!lam) continue;
            HomElement vs = scale(v, 1 / *lam);
            auto uv = yy.decompose(compose(u, vs));
            if (!uv || *uv != *idy) continue;
            return std::make_pair(u, vs);
        }
    return std::nullopt;
}

Rat kapustin_li_pair(const HomElement& f, const HomElement& g) {
    const Ring& r = f.source.ring();
    if (r.vars.size() != 1)
        throw Error(Errc::UnsupportedArity, "Kapustin-Li pairing implemented for one variable only");
    if ((f.parity + g.parity) % 2 != 1)
        throw Error(Errc::DimensionMismatch, "pairing needs complementary parities");
    HomElement phi = compose(g, f);  // odd endomorphism of X
    const MatrixFactorization& x = f.source;
    PolyMatrix dq = x.full().derivative(0);
    PolyMatrix m = dq * phi.full();
    size_t n = x.rank();
    TruncPoly str(r);
    for (size_t i = 0; i < n; ++i) str = str + m.at(i, i) - m.at(n + i, n + i);
    // Res_{x=0} str / w'(x): write w' = x^k u with u a unit, expand u^{-1}.
    TruncPoly wp = x.w.derivative(0);
    if (wp.is_zero()) throw Error(Errc::DimensionMismatch, "potential has zero derivative");
    int k = wp.coeffs().begin()->first[0];
    std::vector<Rat> u(k + 1), uinv(k + 1);
    for (const auto& [e, c] : wp.coeffs())
        if (e[0] - k <= k) u[e[0] - k] = c;
    uinv[0] = 1 / u[0];
    for (int i = 1; i <= k; ++i) {
        Rat s = 0;
        for (int j = 1; j <= i; ++j) s += u[j] * uinv[i - j];
        uinv[i] = -s / u[0];
    }
    if (k - 1 >= r.bound) throw Error(Errc::DimensionMismatch, "truncation bound too small for residue");
    Rat res = 0;
    for (int i = 0; i <= k - 1; ++i) res += str.coeff({i}) * uinv[k - 1 - i];
    // n = 1: sign (-1)^{C(2,2)} = -1, 1/1! = 1
    return -res;
}

}  // namespace cstab
