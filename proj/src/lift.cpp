#include "cyclic_stab/lift.hpp"

#include <deque>

#include "cyclic_stab/error.hpp"

namespace cstab {

std::string lifted_str(const LiftedObject& x) { return "(" + x.obj + "," + rat_str(x.level) + ")"; }

bool LiftedCategory::in_window(const LiftedObject& x) const {
    auto it = triple.phi.find(x.obj);
    if (it == triple.phi.end()) return false;
    Rat gap = x.level - it->second;
    return is_even_integer(gap) && abs(gap) <= window;
}

std::vector<std::string> LiftedCategory::hom(const LiftedObject& a, const LiftedObject& b) const {
    std::vector<std::string> out;
    Rat gap = b.level - a.level;
    for (const auto& f : base.arrows)
        if (f.src == a.obj && f.dst == b.obj && triple.q.at(f.id) == gap) out.push_back(f.id);
    return out;
}

LiftedObject LiftedCategory::shift(const LiftedObject& x) const {
    return {base.shift.at(x.obj), x.level + 1};
}

LiftedObject LiftedCategory::canonical(const std::string& obj) const { return {obj, triple.phi.at(obj)}; }

LiftedCategory build_z_lift(const CategoryPresentation& c, const ChargeTriple& r, int window) {
    TripleReport rep = validate_triple(r, c);
    if (!rep.pass()) {
        for (const auto* cr : {&rep.c1, &rep.c2, &rep.c3, &rep.shift_degree})
            if (!cr->pass) throw Error(Errc::InvalidTriple, cr->violations.front());
    }
    for (const auto& e : maslov_indices(c, r))
        if (sgn(e.index) != 0)
            throw Error(Errc::MaslovObstruction, "basic loop " + path_str(e.loop.witness) +
                                                     " has Maslov index " + rat_str(e.index));
    LiftedCategory l;
    l.base = c;
    l.triple = r;
    l.window = window;
    for (const auto& o : c.objects)
        for (int k = -window / 2; k <= window / 2; ++k) l.objects.push_back({o, r.phi.at(o) + 2 * k});
    // lifted cone of each triangle: (A,l) -> (B,l+q f) -> (C, ...) -> (A[1], l+1)
    for (const auto& t : c.triangles) {
        Rat total = r.q.at(t.f) + r.q.at(t.g) + r.q.at(t.h);
        if (total != 1)
            throw Error(Errc::MaslovObstruction, "lifted triangle of " + t.f + " does not close");
        for (const auto& x : l.objects)
            if (x.obj == c.arrow(t.f).src) ++l.lifted_triangles;
    }
    return l;
}

std::map<Rat, size_t> lifted_hom_dims(const LiftedCategory& l, const std::string& a,
                                      const std::string& b) {
    std::map<Rat, size_t> dims;
    LiftedObject x = l.canonical(a);
    for (int k = -l.window / 2 - 1; k <= l.window / 2 + 1; ++k) {
        LiftedObject y{b, l.triple.phi.at(b) + 2 * k};
        size_t n = l.hom(x, y).size();
        if (n) dims[y.level - x.level] = n;
    }
    return dims;
}

LiftedObject Relabeling::apply(const LiftedObject& x) const { return {x.obj, x.level + offset.at(x.obj)}; }

Relabeling connection_equiv(const LiftedCategory& l1, const LiftedCategory& l2,
                            const std::string& base_object) {
    const CategoryPresentation& c = l1.base;
    EquivReport eq = deformation_equivalent(l1.triple, l2.triple, c);
    if (!eq.equivalent)
        throw Error(Errc::NotDeformationEquivalent,
                    "loop " + path_str(*eq.witness) + " changes degree by " + rat_str(eq.witness_degree));
    if (!is_connective(c)) throw Error(Errc::NotConnective, "base category is not connective");
    if (!c.has_object(base_object)) throw Error(Errc::IdMismatch, "unknown object " + base_object);
    Relabeling h;
    h.base_object = base_object;
    h.offset[base_object] = l2.triple.phi.at(base_object) - l1.triple.phi.at(base_object);
    std::deque<std::string> queue{base_object};
    while (!queue.empty()) {
        std::string x = queue.front();
        queue.pop_front();
        for (const auto& a : c.arrows) {
            Rat dq = l2.triple.q.at(a.id) - l1.triple.q.at(a.id);
            if (a.src == x && !h.offset.count(a.dst)) {
                h.offset[a.dst] = h.offset[x] + dq;
                queue.push_back(a.dst);
            } else if (a.dst == x && !h.offset.count(a.src)) {
                h.offset[a.src] = h.offset[x] - dq;
                queue.push_back(a.src);
            }
        }
    }
    for (const auto& o : c.objects) {
        if (h.offset.at(c.shift.at(o)) != h.offset.at(o)) h.commutes_with_shift = false;
        Rat gap = h.offset.at(o) - (l2.triple.phi.at(o) - l1.triple.phi.at(o));
        if (!is_even_integer(gap)) h.projection_compatible = false;
    }
    for (const auto& a : c.arrows)
        if (l2.triple.q.at(a.id) - l1.triple.q.at(a.id) != h.offset.at(a.dst) - h.offset.at(a.src))
            h.projection_compatible = false;
    return h;
}

namespace {

// Phase of a lifted object whose base object is semistable somewhere in the data.
std::optional<Rat> phase_of(const BridgelandData& s, const LiftedObject& x) {
    for (const auto& [y, ph] : s.phase)
        if (y.obj == x.obj && is_even_integer(Rat(y.level - x.level))) return ph + (x.level - y.level);
    return std::nullopt;
}

}  // namespace

BridgelandReport check_bridgeland(const LiftedCategory& l, const BridgelandData& s) {
    BridgelandReport rep;
    for (const auto& [x, ph] : s.phase) {
        if (!l.triple.phi.count(x.obj)) {
            rep.a.fail(lifted_str(x) + ": unknown object");
            continue;
        }
        Complex z = l.triple.charge(x.obj);
        if (z.is_zero() || !phase_matches(z, ph))
            rep.a.fail(lifted_str(x) + ": charge does not have phase " + rat_str(ph));
        LiftedObject y = l.shift(x);
        if (l.in_window(y)) {
            auto it = s.phase.find(y);
            if (it == s.phase.end()) rep.b.fail(lifted_str(y) + " missing from P(phi+1)");
            else if (it->second != ph + 1)
                rep.b.fail(lifted_str(y) + " has phase " + rat_str(it->second) + ", expected " +
                           rat_str(Rat(ph + 1)));
        }
    }
    for (const auto& [x, px] : s.phase)
        for (const auto& [y, py] : s.phase) {
            if (px <= py) continue;
            for (const auto& f : l.hom(x, y))
                rep.c.fail("arrow " + f + " maps " + lifted_str(x) + " (phase " + rat_str(px) + ") to " +
                           lifted_str(y) + " (phase " + rat_str(py) + ")");
        }
    for (const auto& x : l.objects) {
        if (s.phase.count(x)) continue;
        auto it = s.hn.find(x);
        if (it == s.hn.end() || it->second.empty()) {
            rep.d.fail(lifted_str(x) + ": no HN chain");
            continue;
        }
        Complex sum{0, 0};
        std::optional<Rat> prev;
        for (const auto& f : it->second) {
            auto ph = phase_of(s, f);
            if (!ph) {
                rep.d.fail(lifted_str(x) + ": factor " + lifted_str(f) + " is not semistable");
                continue;
            }
            if (prev && !(*ph < *prev))
                rep.d.fail(lifted_str(x) + ": factor phases not strictly decreasing");
            prev = ph;
            sum = sum + l.triple.charge(f.obj);
        }
        if (!(sum == l.triple.charge(x.obj)))
            rep.d.fail(lifted_str(x) + ": factor charges do not add up");
    }
    return rep;
}

BridgelandData shift_levels(const BridgelandData& s, const Rat& by) {
    BridgelandData t;
    t.window = s.window;
    for (const auto& [x, ph] : s.phase) t.phase[{x.obj, x.level + by}] = ph + by;
    for (const auto& [x, fs] : s.hn) {
        std::vector<LiftedObject> out;
        for (const auto& f : fs) out.push_back({f.obj, f.level + by});
        t.hn[{x.obj, x.level + by}] = out;
    }
    return t;
}

}  // namespace cstab
