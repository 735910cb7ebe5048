#include "cyclic_stab/charge.hpp"

#include <deque>
#include <set>

#include "cyclic_stab/error.hpp"

namespace cstab {

namespace {

Complex lattice_value(const std::vector<long>& v, const std::vector<Complex>& z) {
    if (v.size() != z.size()) throw Error(Errc::DimensionMismatch, "class vector length differs from lattice rank");
    Complex out{0, 0};
    for (size_t i = 0; i < v.size(); ++i) out = out + Rat(v[i]) * z[i];
    return out;
}

Rat norm2(const Rat& x) { return mod_half_open(x, 2); }

}  // namespace

Complex ChargeTriple::charge(const std::string& obj) const {
    auto it = v.find(obj);
    if (it == v.end()) throw Error(Errc::IdMismatch, "no class for object " + obj);
    return lattice_value(it->second, Z);
}

Complex ChargePair::charge(const std::string& obj) const {
    auto it = v.find(obj);
    if (it == v.end()) throw Error(Errc::IdMismatch, "no class for object " + obj);
    return lattice_value(it->second, Z);
}

ChargePair strip_phases(const ChargeTriple& r) { return ChargePair{r.lattice_rank, r.v, r.Z, r.q}; }

std::optional<Rat> exact_phase(const Complex& z) {
    int sr = sgn(z.re), si = sgn(z.im);
    if (sr == 0 && si == 0) return std::nullopt;
    if (si == 0) return sr > 0 ? Rat(2) : Rat(1);
    if (sr == 0) return si > 0 ? ratio(1, 2) : ratio(3, 2);
    if (z.re == z.im) return sr > 0 ? ratio(1, 4) : ratio(5, 4);
    if (z.re == -z.im) return sr < 0 ? ratio(3, 4) : ratio(7, 4);
    return std::nullopt;
}

bool phase_matches(const Complex& z, const Rat& phi) {
    auto e = exact_phase(z);
    return e && *e == norm2(phi);
}

void check_ids(const ChargeTriple& r, const CategoryPresentation& c) {
    std::set<std::string> objs(c.objects.begin(), c.objects.end());
    for (const auto& o : c.objects) {
        if (!r.phi.count(o)) throw Error(Errc::IdMismatch, "no phase for object " + o);
        if (!r.v.count(o)) throw Error(Errc::IdMismatch, "no class for object " + o);
    }
    for (const auto& [o, p] : r.phi)
        if (!objs.count(o)) throw Error(Errc::IdMismatch, "phase for unknown object " + o);
    for (const auto& [o, p] : r.v) {
        if (!objs.count(o)) throw Error(Errc::IdMismatch, "class for unknown object " + o);
        if (static_cast<int>(p.size()) != r.lattice_rank)
            throw Error(Errc::IdMismatch, "class of " + o + " has wrong length");
    }
    if (static_cast<int>(r.Z.size()) != r.lattice_rank)
        throw Error(Errc::IdMismatch, "central charge has wrong number of lattice values");
    for (const auto& a : c.arrows)
        if (!r.q.count(a.id)) throw Error(Errc::IdMismatch, "no degree for arrow " + a.id);
    for (const auto& [a, d] : r.q)
        if (!c.has_arrow(a)) throw Error(Errc::IdMismatch, "degree for unknown arrow " + a);
}

TripleReport validate_triple(const ChargeTriple& r, const CategoryPresentation& c) {
    check_ids(r, c);
    TripleReport rep;
    for (const auto& o : c.objects) {
        const Rat& p = r.phi.at(o);
        if (sgn(p) <= 0 || p > 2) rep.c1.fail(o + ": phase " + rat_str(p) + " outside (0,2]");
        const std::string& s = c.shift.at(o);
        if (norm2(r.phi.at(s)) != norm2(Rat(p + 1)))
            rep.c1.fail(o + ": phi(" + s + ") = " + rat_str(r.phi.at(s)) + " is not phi + 1 mod 2");
        Complex z = r.charge(o);
        if (!z.is_zero() && !phase_matches(z, p))
            rep.c2.fail(o + ": Z = " + rat_str(z.re) + (sgn(z.im) < 0 ? "" : "+") + rat_str(z.im) +
                        "i does not have phase " + rat_str(p));
    }
    for (const auto& a : c.arrows) {
        Rat gap = r.q.at(a.id) - (r.phi.at(a.dst) - r.phi.at(a.src));
        if (!is_even_integer(gap))
            rep.c3.fail(a.id + ": q = " + rat_str(r.q.at(a.id)) + " is not the phase gap mod 2");
    }
    for (const auto& [f, g] : c.arrow_shift)
        if (r.q.at(f) != r.q.at(g))
            rep.shift_degree.fail(f + ": degree differs from its shift " + g);
    return rep;
}

ChargeTriple pair_to_triple(const ChargePair& p, const CategoryPresentation& c) {
    if (!is_connective(c)) throw Error(Errc::NotConnective, "presentation is not connective");
    std::optional<std::string> root;
    for (const auto& o : c.objects)
        if (!p.charge(o).is_zero()) {
            root = o;
            break;
        }
    if (!root) throw Error(Errc::TrivialCharge, "central charge vanishes on every object");
    auto rp = exact_phase(p.charge(*root));
    if (!rp) throw Error(Errc::Inconsistent, "phase of " + *root + " is not an exact rational angle");
    ChargeTriple t{p.lattice_rank, p.v, p.Z, {}, p.q};
    t.phi[*root] = *rp;
    std::deque<std::string> queue{*root};
    while (!queue.empty()) {
        std::string x = queue.front();
        queue.pop_front();
        for (const auto& a : c.arrows) {
            if (a.src == x && !t.phi.count(a.dst)) {
                t.phi[a.dst] = norm2(Rat(t.phi[x] + p.q.at(a.id)));
                queue.push_back(a.dst);
            } else if (a.dst == x && !t.phi.count(a.src)) {
                t.phi[a.src] = norm2(Rat(t.phi[x] - p.q.at(a.id)));
                queue.push_back(a.src);
            }
        }
    }
    TripleReport rep = validate_triple(t, c);
    if (!rep.c1.pass || !rep.c2.pass || !rep.c3.pass) {
        std::string why = !rep.c3.pass ? rep.c3.violations[0]
                          : !rep.c2.pass ? rep.c2.violations[0]
                                         : rep.c1.violations[0];
        throw Error(Errc::Inconsistent, "propagated phases contradict the pair: " + why);
    }
    return t;
}

ChargeTriple tau(const ChargeTriple& r) {
    ChargeTriple t = r;
    for (auto& z : t.Z) z = Complex{-z.re, z.im};
    for (auto& [o, p] : t.phi) p = norm2(Rat(1 - p));
    for (auto& [a, d] : t.q) d = -d;
    return t;
}

std::vector<BasicLoop> basic_loops(const CategoryPresentation& c) {
    std::vector<BasicLoop> out;
    for (const auto& t : c.triangles) {
        const Arrow& f = c.arrow(t.f);
        const Arrow& g = c.arrow(t.g);
        const Arrow& h = c.arrow(t.h);
        BasicLoop l;
        l.triangle = t;
        l.witness = ConnectingPath{f.src, {{t.f, true}, {t.g, true}, {t.h, true}}};
        std::string a = f.src, b = f.dst, cc = g.dst, a1 = h.dst;
        l.objects = {a, b, cc, a1, c.shift.at(b), c.shift.at(cc)};
        Diagram& d = l.hexagon;
        d.nodes = {{"A", {a}}, {"B", {b}}, {"C", {cc}}, {"A1", {a1}}};
        d.edges = {{"f", "A", "B", {{0, 0, t.f}}},
                   {"g", "B", "C", {{0, 0, t.g}}},
                   {"h", "C", "A1", {{0, 0, t.h}}}};
        auto f1 = c.arrow_shift.find(t.f);
        if (f1 != c.arrow_shift.end()) {
            d.nodes.push_back({"B1", {c.arrow(f1->second).dst}});
            d.edges.push_back({"f1", "A1", "B1", {{0, 0, f1->second}}});
            auto g1 = c.arrow_shift.find(t.g);
            if (g1 != c.arrow_shift.end()) {
                d.nodes.push_back({"C1", {c.arrow(g1->second).dst}});
                d.edges.push_back({"g1", "B1", "C1", {{0, 0, g1->second}}});
            }
        }
        out.push_back(std::move(l));
    }
    return out;
}

ConnectingPath loop_witness(const BasicLoop& l, const CategoryPresentation& c, int base) {
    const Triangle& t = l.triangle;
    if (base == 0) return l.witness;
    auto f1 = c.arrow_shift.find(t.f);
    if (f1 == c.arrow_shift.end()) throw Error(Errc::IdMismatch, "no shifted arrow for " + t.f);
    if (base == 1)
        return ConnectingPath{c.arrow(t.g).src, {{t.g, true}, {t.h, true}, {f1->second, true}}};
    auto g1 = c.arrow_shift.find(t.g);
    if (g1 == c.arrow_shift.end()) throw Error(Errc::IdMismatch, "no shifted arrow for " + t.g);
    return ConnectingPath{c.arrow(t.h).src, {{t.h, true}, {f1->second, true}, {g1->second, true}}};
}

Rat maslov_index(const BasicLoop& l, const CategoryPresentation& c, const ChargeTriple& r) {
    LiftReport lr = is_liftable(l.hexagon, c, r.q);
    if (!lr.liftable)
        throw Error(Errc::NotLocallyLiftable, "hexagon of " + l.triangle.f + " has loop degree " +
                                                  rat_str(lr.witness_degree));
    return (path_degree(l.witness, c, r.q) - 1) / 2;
}

std::vector<MaslovEntry> maslov_indices(const CategoryPresentation& c, const ChargeTriple& r) {
    std::vector<MaslovEntry> out;
    for (auto& l : basic_loops(c)) {
        Rat m = maslov_index(l, c, r);
        out.push_back({std::move(l), m});
    }
    return out;
}

Diagram presentation_diagram(const CategoryPresentation& c) {
    Diagram d;
    for (const auto& o : c.objects) d.nodes.push_back({o, {o}});
    for (const auto& a : c.arrows) d.edges.push_back({a.id, a.src, a.dst, {{0, 0, a.id}}});
    return d;
}

EquivReport deformation_equivalent(const ChargeTriple& r1, const ChargeTriple& r2,
                                   const CategoryPresentation& c) {
    std::set<std::string> k1, k2;
    for (const auto& [a, d] : r1.q) k1.insert(a);
    for (const auto& [a, d] : r2.q) k2.insert(a);
    if (k1 != k2) throw Error(Errc::ArrowSetMismatch, "triples declare different arrow sets");
    DegreeMap diff;
    for (const auto& [a, d] : r1.q) diff[a] = d - r2.q.at(a);
    LiftReport lr = is_liftable(presentation_diagram(c), c, diff);
    EquivReport rep;
    rep.equivalent = lr.liftable;
    rep.witness = lr.witness;
    rep.witness_degree = lr.witness_degree;
    return rep;
}

const char* chirality_name(Chirality c) {
    switch (c) {
    case Chirality::Left: return "left";
    case Chirality::Right: return "right";
    case Chirality::Neutral: return "neutral";
    case Chirality::Mixed: return "mixed";
    }
    return "?";
}

ChiralityReport chirality(const ChargeTriple& r, const CategoryPresentation& c) {
    ChiralityReport rep;
    for (const auto& a : c.arrows) {
        int s = sgn(r.q.at(a.id));
        rep.arrows[a.id] = s > 0 ? Chirality::Left : s < 0 ? Chirality::Right : Chirality::Neutral;
    }
    auto entries = maslov_indices(c, r);
    for (const auto& o : c.objects) {
        bool nonneg = true, nonpos = true;
        for (const auto& e : entries) {
            bool involved = false;
            for (const auto& x : e.loop.objects) involved = involved || x == o;
            if (!involved) continue;
            if (sgn(e.index) < 0) nonneg = false;
            if (sgn(e.index) > 0) nonpos = false;
        }
        rep.objects[o] = nonneg ? Chirality::Left : nonpos ? Chirality::Right : Chirality::Mixed;
    }
    return rep;
}

}  // namespace cstab
