#include "cyclic_stab/deform.hpp"

#include <cmath>
#include <sstream>

#include "cyclic_stab/error.hpp"

namespace cstab {

namespace {

Complex charge_at(const ChargeTriple& r, const ChargeSample& z, const std::string& obj) {
    Complex out{0, 0};
    const auto& v = r.v.at(obj);
    for (size_t i = 0; i < v.size(); ++i) out = out + Rat(v[i]) * z.at(i);
    return out;
}

double arg_step(const Complex& a, const Complex& b) {
    // arg(conj(a) b)
    Rat re = a.re * b.re + a.im * b.im, im = a.re * b.im - a.im * b.re;
    return std::atan2(im.get_d(), re.get_d());
}

}  // namespace

std::string event_line(const DeformEvent& e) {
    return std::to_string(e.sample) + ", " + e.object + ", " + e.event;
}

DeformResult deform_along_path(const StabilityCondition& s, const CategoryPresentation& c,
                               const ChargePath& samples) {
    const ChargeTriple& r = s.triple;
    ChargePath path{r.Z};
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].size() != r.Z.size())
            throw Error(Errc::DimensionMismatch, "sample " + std::to_string(i) + " has the wrong rank");
        if (i == 0 && samples[0] == r.Z) continue;
        path.push_back(samples[i]);
    }
    for (const auto& o : c.objects)
        if (r.charge(o).is_zero()) throw Error(Errc::ChargeVanished, o + " has zero charge at the start");

    DeformResult out;
    std::map<std::string, double> turn;  // accumulated argument / pi
    std::set<std::string> semistable;
    for (const auto& [o, ph] : s.slicing) semistable.insert(o);
    for (size_t k = 1; k < path.size(); ++k) {
        std::set<std::string> nonzero;
        for (const auto& o : c.objects) {
            Complex a = charge_at(r, path[k - 1], o), b = charge_at(r, path[k], o);
            if (b.is_zero())
                throw Error(Errc::ChargeVanished, o + " at sample " + std::to_string(k));
            if (sgn(Rat(a.re * b.re + a.im * b.im)) <= 0)
                throw Error(Errc::StepTooLarge, o + " turns by at least pi/2 at sample " + std::to_string(k));
            turn[o] += arg_step(a, b) / M_PI;
            nonzero.insert(o);
        }
        if (k + 1 == path.size()) break;  // endpoint handled exactly below
        std::map<std::string, double> q;
        for (const auto& a : c.arrows)
            q[a.id] = r.q.at(a.id).get_d() + turn[a.dst] - turn[a.src];
        auto now = semistable_approx(c, nonzero, q);
        for (const auto& o : c.objects) {
            bool was = semistable.count(o), is = now.count(o);
            if (was && !is) out.events.push_back({k, o, "destabilized"});
            if (!was && is) out.events.push_back({k, o, "stabilized"});
        }
        semistable = now;
    }

    ChargeTriple t = r;
    t.Z = path.back();
    for (const auto& o : c.objects) {
        Complex z = t.charge(o);
        auto p = exact_phase(z);
        double target = r.phi.at(o).get_d() + turn[o];
        if (!p) throw Error(Errc::InexactEndpoint, o + " has no exact phase at the endpoint");
        // unique p + 2m close to the tracked value
        long m = std::lround((target - p->get_d()) / 2.0);
        Rat unwrapped = *p + 2 * m;
        if (std::fabs(unwrapped.get_d() - target) > 1e-6)
            throw Error(Errc::InexactEndpoint, o + " endpoint phase is not exact");
        out.unwrapped[o] = unwrapped - r.phi.at(o);
        t.phi[o] = *p;
    }
    for (const auto& a : c.arrows)
        t.q[a.id] = r.q.at(a.id) + out.unwrapped.at(a.dst) - out.unwrapped.at(a.src);
    out.end = complete_stability(t, c);
    for (const auto& o : c.objects) {
        bool was = semistable.count(o), is = out.end.slicing.count(o);
        if (was && !is) out.events.push_back({path.size() - 1, o, "destabilized"});
        if (!was && is) out.events.push_back({path.size() - 1, o, "stabilized"});
    }
    return out;
}

MonodromyResult monodromy_word(const StabilityCondition& s, const CategoryPresentation& c,
                               const std::vector<ChargePath>& loops) {
    MonodromyResult res;
    StabilityCondition cur = s;
    for (const auto& o : c.objects) res.composite.offset[o] = 0;
    for (size_t i = 0; i < loops.size(); ++i) {
        const ChargePath& l = loops[i];
        if (l.empty() || !(l.front() == s.triple.Z) || !(l.back() == s.triple.Z))
            throw Error(Errc::LoopNotClosed, "loop " + std::to_string(i + 1) + " is not closed at the base charge");
        DeformResult d = deform_along_path(cur, c, l);
        MonodromyStep step;
        for (const auto& o : c.objects) {
            Rat off = d.unwrapped.at(o);
            step.offset[o] = off;
            res.composite.offset[o] += off;
        }
        step.base_identity = d.end.triple.q == cur.triple.q;
        res.loops.push_back(step);
        cur = d.end;
    }
    res.composite.base_identity = cur.triple.q == s.triple.q && cur.triple.phi == s.triple.phi;
    std::optional<Rat> u;
    bool uniform = true;
    for (const auto& [o, off] : res.composite.offset) {
        if (u && *u != off) uniform = false;
        u = off;
    }
    if (uniform && u) res.lifted_offset = u;
    res.end = cur;
    return res;
}

}  // namespace cstab
