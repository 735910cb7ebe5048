#include "cyclic_stab/stab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "cyclic_stab/error.hpp"

namespace cstab {

namespace {

std::string qnode(size_t i) { return i == 1 ? "E1" : "Q" + std::to_string(i); }

// All vertex-simple undirected paths between two diagram nodes, as signed degree sums.
std::vector<std::pair<std::string, Rat>> simple_path_degrees(const Diagram& d, const std::string& from,
                                                             const std::string& to,
                                                             const CategoryPresentation& c,
                                                             const DegreeMap& q) {
    std::vector<std::pair<std::string, Rat>> out;
    std::set<std::string> seen{from};
    std::function<void(const std::string&, Rat, std::string)> go = [&](const std::string& at, Rat deg,
                                                                      std::string trail) {
        if (at == to) {
            out.push_back({trail, deg});
            return;
        }
        for (const auto& e : d.edges) {
            if (e.blocks.size() != 1) continue;
            Rat dq = q.at(e.blocks[0].arrow);
            std::string next;
            if (e.src == at) next = e.dst;
            else if (e.dst == at) {
                next = e.src;
                dq = -dq;
            } else continue;
            if (seen.count(next)) continue;
            seen.insert(next);
            go(next, deg + dq, trail + " " + e.id);
            seen.erase(next);
        }
    };
    go(from, 0, from);
    return out;
}

template <class Sum>
std::set<std::string> semistable_fixpoint(const CategoryPresentation& c, std::set<std::string> start,
                                          Sum negative) {
    std::set<std::string> s = start;
    for (size_t it = 0; it <= c.objects.size() + 1; ++it) {
        std::set<std::string> next;
        for (const auto& e : start) {
            bool bad = false;
            for (const auto& t : c.triangles) {
                const Arrow& f = c.arrow(t.f);
                const Arrow& g = c.arrow(t.g);
                if (f.dst != e) continue;
                if (s.count(f.src) && s.count(g.dst) && negative(t.f, t.g)) {
                    bad = true;
                    break;
                }
            }
            if (!bad) next.insert(e);
        }
        if (next == s) break;
        s = next;
    }
    return s;
}

}  // namespace

std::map<std::string, Rat> derive_slicing(const ChargeTriple& r, const CategoryPresentation& c) {
    std::set<std::string> start;
    for (const auto& o : c.objects)
        if (!r.charge(o).is_zero()) start.insert(o);
    auto s = semistable_fixpoint(c, start, [&](const std::string& f, const std::string& g) {
        return sgn(Rat(r.q.at(f) + r.q.at(g))) < 0;
    });
    std::map<std::string, Rat> out;
    for (const auto& e : s) out[e] = r.phi.at(e);
    return out;
}

std::set<std::string> semistable_approx(const CategoryPresentation& c, const std::set<std::string>& nonzero,
                                        const std::map<std::string, double>& q) {
    return semistable_fixpoint(c, nonzero, [&](const std::string& f, const std::string& g) {
        return q.at(f) + q.at(g) < -1e-12;
    });
}

Diagram hn_diagram(const std::vector<std::string>& filtration, const std::vector<Triangle>& triangles,
                   const CategoryPresentation& c) {
    Diagram d;
    size_t n = filtration.size();
    for (size_t i = 1; i <= n; ++i) d.nodes.push_back({"E" + std::to_string(i), {filtration[i - 1]}});
    for (size_t i = 2; i <= n; ++i) {
        const Triangle& t = triangles[i - 2];
        std::string si = std::to_string(i);
        d.nodes.push_back({"Q" + si, {c.arrow(t.g).dst}});
        d.nodes.push_back({"T" + si, {c.arrow(t.h).dst}});
        d.edges.push_back({"f" + si, "E" + std::to_string(i - 1), "E" + si, {{0, 0, t.f}}});
        d.edges.push_back({"g" + si, "E" + si, "Q" + si, {{0, 0, t.g}}});
        d.edges.push_back({"h" + si, "Q" + si, "T" + si, {{0, 0, t.h}}});
        if (i >= 3) {
            auto it = c.arrow_shift.find(triangles[i - 3].f);
            if (it != c.arrow_shift.end())
                d.edges.push_back({"s" + si, "T" + std::to_string(i - 1), "T" + si, {{0, 0, it->second}}});
        }
    }
    return d;
}

ConditionResult verify_certificate(const HNCertificate& h, const StabilityCondition& s,
                                   const CategoryPresentation& c) {
    ConditionResult r;
    const std::string& e = h.object;
    size_t n = h.factors.size();
    if (!c.has_object(e)) {
        r.fail(e + ": unknown object");
        return r;
    }
    if (n == 0 || h.filtration.size() != n || h.triangles.size() + 1 != n || h.gaps.size() + 1 != n) {
        r.fail(e + ": malformed certificate");
        return r;
    }
    if (h.filtration.back() != e) r.fail(e + ": filtration does not end at the object");
    for (size_t i = 0; i < n; ++i) {
        const HNFactor& f = h.factors[i];
        if (f.summands.size() != 1) {
            r.fail(e + ": factor " + std::to_string(i + 1) + " is not indecomposable");
            continue;
        }
        auto it = s.slicing.find(f.summands[0]);
        if (it == s.slicing.end()) r.fail(e + ": factor " + f.summands[0] + " is not semistable");
        else if (it->second != f.phase && mod_half_open(f.phase, 2) != it->second)
            r.fail(e + ": factor " + f.summands[0] + " has the wrong phase");
        if (i > 0 && !(f.phase < h.factors[i - 1].phase))
            r.fail(e + ": factor phases are not strictly decreasing");
    }
    if (!r.pass) return r;
    if (h.filtration[0] != h.factors[0].summands[0]) r.fail(e + ": E_1 differs from Q_1");
    for (size_t i = 2; i <= n; ++i) {
        const Triangle& t = h.triangles[i - 2];
        std::string si = std::to_string(i);
        if (!c.has_arrow(t.f) || !c.has_arrow(t.g) || !c.has_arrow(t.h)) {
            r.fail(e + ": triangle " + si + " uses unknown arrows");
            return r;
        }
        const Arrow &f = c.arrow(t.f), &g = c.arrow(t.g), &hh = c.arrow(t.h);
        if (f.src != h.filtration[i - 2] || f.dst != h.filtration[i - 1] || g.src != f.dst ||
            g.dst != h.factors[i - 1].summands[0] || hh.src != g.dst || hh.dst != c.shift.at(f.src))
            r.fail(e + ": triangle " + si + " does not match the filtration");
        if (std::find(c.triangles.begin(), c.triangles.end(), t) == c.triangles.end())
            r.fail(e + ": triangle " + si + " is not in the catalog");
        else if (c.distinguished && !c.distinguished(t))
            r.fail(e + ": triangle " + si + " is not distinguished in the backend");
    }
    if (!r.pass) return r;
    Diagram d = hn_diagram(h.filtration, h.triangles, c);
    validate_diagram(d, c);
    if (!diagram_connective(d)) r.fail(e + ": HN diagram is not connective");
    LiftReport lr = is_liftable(d, c, s.triple.q);
    if (!lr.liftable) r.fail(e + ": HN diagram is not liftable, loop " + path_str(*lr.witness));
    for (size_t i = 2; i <= n; ++i) {
        Rat ci = h.gaps[i - 2];
        if (sgn(ci) >= 0) r.fail(e + ": gap c_" + std::to_string(i) + " is not negative");
        for (const auto& [trail, deg] : simple_path_degrees(d, qnode(i - 1), qnode(i), c, s.triple.q))
            if (deg != ci)
                r.fail(e + ": path" + trail.substr(trail.find(' ')) + " has degree " + rat_str(deg) +
                       ", expected " + rat_str(ci));
    }
    // composites f_j o ... o f_i
    if (c.compose)
        for (size_t i = 2; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) {
                std::vector<std::string> path;
                for (size_t k = i; k <= j; ++k) path.push_back(h.triangles[k - 2].f);
                auto lc = c.compose(path);
                if (!lc || lc->empty())
                    r.fail(e + ": composite f_" + std::to_string(j) + "..f_" + std::to_string(i) +
                           " vanishes");
            }
    return r;
}

StabilityReport validate_stability(const StabilityCondition& s, const CategoryPresentation& c) {
    StabilityReport rep;
    try {
        TripleReport t = validate_triple(s.triple, c);
        rep.c[0] = t.c1;
        rep.c[1] = t.c2;
        rep.c[2] = t.c3;
        for (const auto& v : t.shift_degree.violations) rep.c[2].fail(v);
    } catch (const Error& e) {
        rep.c[0].fail(e.what());
        return rep;
    }
    for (const auto& [e, ph] : s.slicing) {
        if (!c.has_object(e)) {
            rep.c[3].fail(e + ": unknown object");
            continue;
        }
        std::string se = c.shift.at(e);
        auto it = s.slicing.find(se);
        Rat want = mod_half_open(Rat(ph + 1), 2);
        if (it == s.slicing.end()) rep.c[3].fail(e + " is semistable but " + se + " is not");
        else if (it->second != want)
            rep.c[3].fail(se + " has phase " + rat_str(it->second) + ", expected " + rat_str(want));
        Complex z = s.triple.charge(e);
        if (z.is_zero()) rep.c[4].fail(e + ": semistable with zero charge");
        else if (!phase_matches(z, ph)) rep.c[4].fail(e + ": charge does not have phase " + rat_str(ph));
        if (s.triple.phi.at(e) != ph)
            rep.c[4].fail(e + ": phi " + rat_str(s.triple.phi.at(e)) + " differs from slice " + rat_str(ph));
    }
    for (const auto& a : c.arrows)
        if (s.slicing.count(a.src) && s.slicing.count(a.dst) && sgn(s.triple.q.at(a.id)) < 0)
            rep.c[5].fail("arrow " + a.id + " between semistables has q = " + rat_str(s.triple.q.at(a.id)));
    for (const auto& o : c.objects) {
        if (s.slicing.count(o)) continue;
        if (!s.hn_table.count(o)) rep.c[6].fail(o + ": no HN certificate");
    }
    for (const auto& [o, h] : s.hn_table) {
        if (h.object != o) {
            rep.c[6].fail(o + ": certificate is for " + h.object);
            continue;
        }
        for (const auto& v : verify_certificate(h, s, c).violations) rep.c[6].fail(v);
    }
    return rep;
}

namespace {

HNCertificate make_certificate(const std::string& e, const std::vector<std::string>& filtration,
                               const std::vector<Triangle>& tris, const StabilityCondition& s,
                               const CategoryPresentation& c) {
    HNCertificate h;
    h.object = e;
    h.filtration = filtration;
    h.triangles = tris;
    h.factors.push_back({{filtration[0]}, s.slicing.at(filtration[0])});
    for (const auto& t : tris) {
        std::string q = c.arrow(t.g).dst;
        h.factors.push_back({{q}, s.slicing.at(q)});
    }
    // lift factor phases so they strictly decrease: Q_i sits at Q_{i-1} + c_i
    h.diagram = hn_diagram(filtration, tris, c);
    for (size_t i = 2; i <= filtration.size(); ++i) {
        auto paths = simple_path_degrees(h.diagram, qnode(i - 1), qnode(i), c, s.triple.q);
        Rat ci = paths.empty() ? Rat(0) : paths.front().second;
        h.gaps.push_back(ci);
        h.factors[i - 1].phase = h.factors[i - 2].phase + ci;
    }
    return h;
}

}  // namespace

HNCertificate hn_search(const std::string& e, const StabilityCondition& s, const CategoryPresentation& c,
                        size_t max_len, HNOrder order) {
    if (e.empty() || e == "0") throw Error(Errc::NoFiltration, "zero object is not indecomposable");
    if (!c.has_object(e)) throw Error(Errc::IdMismatch, "unknown object " + e);
    if (s.slicing.count(e)) return make_certificate(e, {e}, {}, s, c);
    bool rev = order == HNOrder::PhaseThenIdReversed;
    auto id_less = [rev](const std::string& a, const std::string& b) { return rev ? b < a : a < b; };

    std::vector<std::string> firsts;
    for (const auto& [o, ph] : s.slicing) firsts.push_back(o);
    std::sort(firsts.begin(), firsts.end(), [&](const std::string& a, const std::string& b) {
        Rat pa = s.slicing.at(a), pb = s.slicing.at(b);
        return pa != pb ? pa > pb : id_less(a, b);
    });

    std::optional<HNCertificate> found;
    std::vector<std::string> chain;
    std::vector<Triangle> tris;
    std::function<void(Rat)> dfs = [&](Rat last_phase) {
        if (found) return;
        if (chain.back() == e && chain.size() > 1) {
            HNCertificate h = make_certificate(e, chain, tris, s, c);
            if (verify_certificate(h, s, c).pass) found = h;
            return;
        }
        if (chain.size() >= max_len) return;
        std::vector<const Triangle*> cand;
        for (const auto& t : c.triangles) {
            const Arrow& f = c.arrow(t.f);
            std::string q = c.arrow(t.g).dst;
            if (f.src != chain.back() || !s.slicing.count(q)) continue;
            if (std::find(chain.begin(), chain.end(), f.dst) != chain.end()) continue;
            cand.push_back(&t);
        }
        std::sort(cand.begin(), cand.end(), [&](const Triangle* a, const Triangle* b) {
            std::string qa = c.arrow(a->g).dst, qb = c.arrow(b->g).dst;
            Rat pa = s.slicing.at(qa), pb = s.slicing.at(qb);
            if (pa != pb) return pa > pb;
            if (qa != qb) return id_less(qa, qb);
            return id_less(a->f, b->f);
        });
        for (const Triangle* t : cand) {
            // gap of this step must be negative, i.e. the next factor has lower phase
            Rat gap = s.triple.q.at(t->f) + s.triple.q.at(t->g);
            if (chain.size() >= 2) gap -= s.triple.q.at(tris.back().g);
            if (sgn(gap) >= 0) continue;
            chain.push_back(c.arrow(t->f).dst);
            tris.push_back(*t);
            dfs(last_phase + gap);
            chain.pop_back();
            tris.pop_back();
            if (found) return;
        }
    };
    for (const auto& q1 : firsts) {
        chain = {q1};
        tris.clear();
        dfs(s.slicing.at(q1));
        if (found) return *found;
    }
    throw Error(Errc::NoFiltration, "no HN filtration of " + e + " up to length " + std::to_string(max_len));
}

bool hn_isomorphic(const HNCertificate& a, const HNCertificate& b) {
    if (a.object != b.object || a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        auto sa = a.factors[i].summands, sb = b.factors[i].summands;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb || a.factors[i].phase != b.factors[i].phase) return false;
    }
    return a.filtration == b.filtration && a.triangles == b.triangles && a.gaps == b.gaps;
}

EquivalenceResult stab_equivalent(const StabilityCondition& s1, const StabilityCondition& s2,
                                  const CategoryPresentation& c) {
    EquivalenceResult r;
    auto fail = [&r](int clause, const std::string& why) {
        r.equivalent = false;
        r.failing_clause = clause;
        r.detail = why;
        return r;
    };
    if (s1.slicing != s2.slicing) return fail(1, "slicings differ");
    for (const auto& o : c.objects)
        if (!(s1.triple.charge(o) == s2.triple.charge(o))) return fail(1, "charge of " + o + " differs");
    std::set<std::string> k1, k2;
    for (const auto& [a, q] : s1.triple.q) k1.insert(a);
    for (const auto& [a, q] : s2.triple.q) k2.insert(a);
    if (k1 != k2) return fail(2, "homogeneous arrow sets differ");
    for (const auto& o : c.objects) {
        auto i1 = s1.hn_table.find(o), i2 = s2.hn_table.find(o);
        bool h1 = i1 != s1.hn_table.end() && i1->second.factors.size() > 1;
        bool h2 = i2 != s2.hn_table.end() && i2->second.factors.size() > 1;
        if (h1 != h2 || (h1 && !hn_isomorphic(i1->second, i2->second)))
            return fail(3, "HN certificates of " + o + " differ");
    }
    // q1 - q2 must be a potential difference that is constant on semistables
    std::map<std::string, Rat> pot;
    std::map<std::string, std::string> comp;
    for (const auto& root : c.objects) {
        if (pot.count(root)) continue;
        pot[root] = 0;
        comp[root] = root;
        std::deque<std::string> queue{root};
        while (!queue.empty()) {
            std::string x = queue.front();
            queue.pop_front();
            for (const auto& a : c.arrows) {
                Rat dq = s1.triple.q.at(a.id) - s2.triple.q.at(a.id);
                if (a.src == x && !pot.count(a.dst)) {
                    pot[a.dst] = pot[x] + dq;
                    comp[a.dst] = root;
                    queue.push_back(a.dst);
                } else if (a.dst == x && !pot.count(a.src)) {
                    pot[a.src] = pot[x] - dq;
                    comp[a.src] = root;
                    queue.push_back(a.src);
                }
            }
        }
    }
    for (const auto& a : c.arrows) {
        Rat dq = s1.triple.q.at(a.id) - s2.triple.q.at(a.id);
        if (dq != pot.at(a.dst) - pot.at(a.src))
            return fail(4, "a loop through " + a.id + " changes degree");
    }
    for (const auto& [a, pa] : s1.slicing)
        for (const auto& [b, pb] : s1.slicing)
            if (a < b && comp.at(a) == comp.at(b) && pot.at(a) != pot.at(b))
                return fail(4, "paths " + a + " -> " + b + " change degree by " +
                                   rat_str(Rat(pot.at(b) - pot.at(a))));
    return r;
}

StabilityCondition complete_stability(const ChargeTriple& r, const CategoryPresentation& c) {
    StabilityCondition s;
    s.triple = r;
    s.slicing = derive_slicing(r, c);
    for (const auto& o : c.objects) {
        if (s.slicing.count(o)) continue;
        try {
            s.hn_table[o] = hn_search(o, s, c);
        } catch (const Error& e) {
            if (e.code() != Errc::NoFiltration) throw;
        }
    }
    return s;
}

BridgelandData lift_stability(const StabilityCondition& s, const LiftedCategory& l) {
    BridgelandData b;
    b.window = l.window;
    const DegreeMap& q = s.triple.q;
    for (const auto& x : l.objects) {
        auto it = s.slicing.find(x.obj);
        if (it != s.slicing.end()) {
            b.phase[x] = it->second + (x.level - l.triple.phi.at(x.obj));
            continue;
        }
        auto h = s.hn_table.find(x.obj);
        if (h == s.hn_table.end()) continue;
        const HNCertificate& cert = h->second;
        size_t n = cert.filtration.size();
        std::vector<Rat> lev(n);
        lev[n - 1] = x.level;
        for (size_t i = n - 1; i >= 1; --i) lev[i - 1] = lev[i] - q.at(cert.triangles[i - 1].f);
        std::vector<LiftedObject> fs{{cert.filtration[0], lev[0]}};
        for (size_t i = 2; i <= n; ++i) {
            const Triangle& t = cert.triangles[i - 2];
            fs.push_back({l.base.arrow(t.g).dst, lev[i - 1] + q.at(t.g)});
        }
        b.hn[x] = fs;
    }
    return b;
}

StabilityCondition push_down(const LiftedCategory& l, const BridgelandData& b) {
    BridgelandReport rep = check_bridgeland(l, b);
    if (!rep.pass()) {
        for (const auto* cr : {&rep.a, &rep.b, &rep.c, &rep.d})
            if (!cr->pass) throw Error(Errc::InvalidBridgeland, cr->violations.front());
    }
    const CategoryPresentation& c = l.base;
    std::map<std::string, Rat> phi, corr;
    std::map<std::string, Rat> slicing;
    for (const auto& o : c.objects) {
        const LiftedObject* best = nullptr;
        for (const auto& [x, ph] : b.phase)
            if (x.obj == o && (!best || (x.level > 0 && x.level <= 2))) best = &x;
        if (best) {
            Rat ph = b.phase.at(*best);
            phi[o] = mod_half_open(ph, 2);
            corr[o] = ph - best->level;
            slicing[o] = phi[o];
        } else {
            Complex z = l.triple.charge(o);
            auto ep = z.is_zero() ? std::nullopt : exact_phase(z);
            phi[o] = ep ? *ep : l.triple.phi.at(o);
            corr[o] = phi[o] - l.triple.phi.at(o);
        }
    }
    StabilityCondition s;
    s.triple = l.triple;
    s.triple.phi = phi;
    for (const auto& a : c.arrows)
        s.triple.q[a.id] = l.triple.q.at(a.id) + corr.at(a.dst) - corr.at(a.src);
    s.slicing = slicing;
    for (const auto& o : c.objects) {
        if (slicing.count(o)) continue;
        try {
            s.hn_table[o] = hn_search(o, s, c);
        } catch (const Error& e) {
            throw Error(Errc::InvalidBridgeland, std::string("push-down: ") + e.what());
        }
    }
    StabilityReport v = validate_stability(s, c);
    for (int i = 0; i < 7; ++i)
        if (!v.c[i].pass)
            throw Error(Errc::InvalidBridgeland,
                        "push-down fails condition (" + std::to_string(i + 1) + "): " + v.c[i].violations.front());
    return s;
}

}  // namespace cstab
