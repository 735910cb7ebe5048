#include "cyclic_stab/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "cyclic_stab/an_catalog.hpp"
#include "cyclic_stab/error.hpp"

namespace cstab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::DocumentError, what); }

Rat rat_of(const json& j) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception&) {
            bad("not a rational: " + j.get<std::string>());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    bad("expected a rational string, got " + j.dump());
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
    return j.at(key);
}

std::string str_of(const json& j) {
    if (!j.is_string()) bad("expected a string, got " + j.dump());
    return j.get<std::string>();
}

json complex_json(const Complex& z) { return json::array({rat_str(z.re), rat_str(z.im)}); }

Complex complex_of(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("expected [re, im], got " + j.dump());
    return {rat_of(j[0]), rat_of(j[1])};
}

template <class F>
auto guarded(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

}  // namespace

json to_json(const CategoryPresentation& c) {
    json j;
    j["source"] = c.source;
    j["bound"] = c.bound;
    j["rcharge_scale"] = rat_str(c.rcharge_scale);
    j["objects"] = c.objects;
    json shift = json::object();
    for (const auto& o : c.objects) shift[o] = c.shift.at(o);
    j["shift"] = shift;
    json arrows = json::array();
    for (const auto& a : c.arrows)
        arrows.push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}, {"degree", rat_str(a.degree)},
                          {"label", a.label}});
    j["arrows"] = arrows;
    json ash = json::object();
    for (const auto& [a, b] : c.arrow_shift) ash[a] = b;
    j["arrow_shift"] = ash;
    json tris = json::array();
    for (const auto& t : c.triangles) tris.push_back({t.f, t.g, t.h});
    j["triangles"] = tris;
    json disp = json::object();
    for (const auto& [o, d] : c.display) disp[o] = d;
    j["display"] = disp;
    j["notes"] = c.notes;
    return j;
}

CategoryPresentation presentation_from_json(const json& j, bool attach) {
    CategoryPresentation c = guarded([&] {
        CategoryPresentation c;
        c.source = str_of(field(j, "source"));
        c.bound = field(j, "bound").get<int>();
        c.rcharge_scale = rat_of(field(j, "rcharge_scale"));
        for (const auto& o : field(j, "objects")) c.objects.push_back(str_of(o));
        for (const auto& [k, v] : field(j, "shift").items()) c.shift[k] = str_of(v);
        for (const auto& a : field(j, "arrows"))
            c.arrows.push_back({str_of(field(a, "id")), str_of(field(a, "src")), str_of(field(a, "dst")),
                                rat_of(field(a, "degree")), str_of(field(a, "label"))});
        for (const auto& [k, v] : field(j, "arrow_shift").items()) c.arrow_shift[k] = str_of(v);
        for (const auto& t : field(j, "triangles")) {
            if (!t.is_array() || t.size() != 3) bad("triangle must list three arrows");
            c.triangles.push_back({str_of(t[0]), str_of(t[1]), str_of(t[2])});
        }
        if (j.contains("display"))
            for (const auto& [k, v] : j.at("display").items()) c.display[k] = str_of(v);
        if (j.contains("notes"))
            for (const auto& n : j.at("notes")) c.notes.push_back(str_of(n));
        return c;
    });
    c.reindex();
    try {
        validate_presentation(c);
    } catch (const Error& e) {
        bad(std::string("invalid presentation: ") + e.what());
    }
    static const std::regex an(R"(an-zd:(\d+),(\d+))");
    std::smatch m;
    if (attach && std::regex_match(c.source, m, an)) {
        auto cat = build_an_catalog(std::stoi(m[1]), std::stoi(m[2]), c.bound, c.rcharge_scale);
        if (!presentations_equal(cat->presentation, c))
            bad("presentation does not match its source " + c.source);
        CategoryPresentation out = attach_oracles(cat);
        out.notes = c.notes;
        return out;
    }
    return c;
}

json to_json(const ChargeTriple& r) {
    json j;
    j["lattice_rank"] = r.lattice_rank;
    json v = json::object();
    for (const auto& [o, vec] : r.v) v[o] = vec;
    j["v"] = v;
    json z = json::array();
    for (const auto& c : r.Z) z.push_back(complex_json(c));
    j["Z"] = z;
    json phi = json::object();
    for (const auto& [o, p] : r.phi) phi[o] = rat_str(p);
    j["phi"] = phi;
    json q = json::object();
    for (const auto& [a, d] : r.q) q[a] = rat_str(d);
    j["q"] = q;
    return j;
}

ChargeTriple triple_from_json(const json& j) {
    return guarded([&] {
        ChargeTriple r;
        r.lattice_rank = field(j, "lattice_rank").get<int>();
        for (const auto& [o, vec] : field(j, "v").items()) {
            r.v[o] = vec.get<std::vector<long>>();
            if (r.v[o].size() != static_cast<size_t>(r.lattice_rank)) bad("class of " + o + " has the wrong rank");
        }
        for (const auto& z : field(j, "Z")) r.Z.push_back(complex_of(z));
        if (r.Z.size() != static_cast<size_t>(r.lattice_rank)) bad("Z has the wrong rank");
        for (const auto& [o, p] : field(j, "phi").items()) r.phi[o] = rat_of(p);
        for (const auto& [a, d] : field(j, "q").items()) r.q[a] = rat_of(d);
        return r;
    });
}

json to_json(const HNCertificate& h) {
    json j;
    json fs = json::array();
    for (const auto& f : h.factors) fs.push_back({{"summands", f.summands}, {"phase", rat_str(f.phase)}});
    j["factors"] = fs;
    j["filtration"] = h.filtration;
    json tris = json::array();
    for (const auto& t : h.triangles) tris.push_back({t.f, t.g, t.h});
    j["triangles"] = tris;
    json gaps = json::array();
    for (const auto& g : h.gaps) gaps.push_back(rat_str(g));
    j["gaps"] = gaps;
    return j;
}

HNCertificate certificate_from_json(const json& j, const CategoryPresentation& c) {
    HNCertificate h = guarded([&] {
        HNCertificate h;
        for (const auto& f : field(j, "factors")) {
            HNFactor x;
            for (const auto& s : field(f, "summands")) x.summands.push_back(str_of(s));
            x.phase = rat_of(field(f, "phase"));
            h.factors.push_back(x);
        }
        for (const auto& e : field(j, "filtration")) h.filtration.push_back(str_of(e));
        for (const auto& t : field(j, "triangles")) {
            if (!t.is_array() || t.size() != 3) bad("triangle must list three arrows");
            h.triangles.push_back({str_of(t[0]), str_of(t[1]), str_of(t[2])});
        }
        for (const auto& g : field(j, "gaps")) h.gaps.push_back(rat_of(g));
        return h;
    });
    if (h.filtration.empty()) bad("empty filtration");
    h.object = h.filtration.back();
    for (const auto& t : h.triangles)
        for (const auto* a : {&t.f, &t.g, &t.h})
            if (!c.has_arrow(*a)) bad("certificate names unknown arrow " + *a);
    if (h.triangles.size() + 1 == h.filtration.size()) h.diagram = hn_diagram(h.filtration, h.triangles, c);
    return h;
}

json to_json(const StabilityCondition& s) {
    json j;
    j["triple"] = to_json(s.triple);
    json sl = json::object();
    for (const auto& [o, p] : s.slicing) sl[o] = rat_str(p);
    j["slicing"] = sl;
    json hn = json::object();
    for (const auto& [o, h] : s.hn_table) hn[o] = to_json(h);
    j["hn"] = hn;
    return j;
}

StabilityCondition stability_from_json(const json& j, const CategoryPresentation& c) {
    StabilityCondition s;
    s.triple = triple_from_json(field(j, "triple"));
    guarded([&] {
        for (const auto& [o, p] : field(j, "slicing").items()) s.slicing[o] = rat_of(p);
        return 0;
    });
    for (const auto& [o, h] : field(j, "hn").items()) {
        s.hn_table[o] = certificate_from_json(h, c);
        if (s.hn_table[o].object != o) bad("certificate for " + o + " ends at " + s.hn_table[o].object);
    }
    return s;
}

json path_to_json(const ChargePath& p) {
    json samples = json::array();
    for (const auto& s : p) {
        json row = json::array();
        for (const auto& z : s) row.push_back(complex_json(z));
        samples.push_back(row);
    }
    return {{"samples", samples}};
}

ChargePath path_from_json(const json& j) {
    ChargePath p;
    for (const auto& row : field(j, "samples")) {
        if (!row.is_array()) bad("sample must be a list of charges");
        ChargeSample s;
        for (const auto& z : row) s.push_back(complex_of(z));
        p.push_back(s);
    }
    return p;
}

json loops_to_json(const std::vector<ChargePath>& loops) {
    json arr = json::array();
    for (const auto& l : loops) arr.push_back(path_to_json(l));
    return {{"loops", arr}};
}

std::vector<ChargePath> loops_from_json(const json& j) {
    std::vector<ChargePath> out;
    for (const auto& l : field(j, "loops")) out.push_back(path_from_json(l));
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        bad(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) bad("write failed for " + path);
}

}  // namespace cstab
