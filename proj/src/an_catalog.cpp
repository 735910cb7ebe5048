#include "cyclic_stab/an_catalog.hpp"

#include "cyclic_stab/error.hpp"

namespace cstab {

std::string an_object_id(int a, int j) { return "M" + std::to_string(a) + "_" + std::to_string(j); }

std::string an_display_name(int a, int j) {
    return "M_" + std::to_string(a) + "^" + std::to_string(j + 1);
}

int an_twist_offset(int n, int a) { return 2 * a <= n + 1 ? 0 : n + 1 - a; }

const HomComplex& AnCatalog::hom(const std::string& a, const std::string& b) const {
    auto it = homs.find({a, b});
    if (it == homs.end()) throw Error(Errc::IdMismatch, "no hom complex " + a + " -> " + b);
    return *it->second;
}

std::optional<RatVec> AnCatalog::arrow_coords(const std::string& a, const std::string& b,
                                              const HomElement& f) const {
    const HomComplex& h = hom(a, b);
    auto c = h.decompose(f);
    if (!c) return std::nullopt;
    const auto& ids = arrow_ids.at({a, b});
    std::vector<RatVec> cols;
    for (const auto& id : ids) cols.push_back(*h.decompose(reps.at(id)));
    if (ids.empty()) return RatVec{};
    return mat_solve(RationalMatrix::from_columns(c->size(), cols), *c);
}

std::optional<LinComb> AnCatalog::compose_path(const std::vector<std::string>& path) const {
    if (path.empty()) return std::nullopt;
    HomElement acc = reps.at(path[0]);
    std::string src = presentation.arrow(path[0]).src;
    for (size_t k = 1; k < path.size(); ++k) {
        const Arrow& a = presentation.arrow(path[k]);
        if (a.src != presentation.arrow(path[k - 1]).dst) throw Error(Errc::BrokenChain, "composite path");
        acc = compose(reps.at(path[k]), acc);
    }
    std::string dst = presentation.arrow(path.back()).dst;
    auto c = arrow_coords(src, dst, acc);
    if (!c) return std::nullopt;
    LinComb out;
    const auto& ids = arrow_ids.at({src, dst});
    for (size_t i = 0; i < ids.size(); ++i)
        if (sgn((*c)[i]) != 0) out.push_back({ids[i], (*c)[i]});
    return out;
}

std::vector<size_t> AnCatalog::fingerprint(const MatrixFactorization& x) const {
    std::vector<size_t> fp;
    for (const auto& id : ids) {
        HomComplex h(x, objects.at(id), opts);
        fp.push_back(h.dim(0));
        fp.push_back(h.dim(1));
    }
    return fp;
}

std::optional<std::string> AnCatalog::match(const MatrixFactorization& x, HomElement* u,
                                            HomElement* v) const {
    auto fp = fingerprint(x);
    for (const auto& id : ids) {
        if (fingerprints.at(id) != fp) continue;
        auto iso = find_isomorphism(x, objects.at(id), opts);
        if (!iso) continue;
        if (u) *u = iso->first;
        if (v) *v = iso->second;
        return id;
    }
    return std::nullopt;
}

namespace {

// Index of the unique nonzero coordinate, if exactly one.
std::optional<size_t> single(const std::optional<RatVec>& c) {
    if (!c) return std::nullopt;
    std::optional<size_t> k;
    for (size_t i = 0; i < c->size(); ++i)
        if (sgn((*c)[i]) != 0) {
            if (k) return std::nullopt;
            k = i;
        }
    return k;
}

}  // namespace

std::optional<Triangle> AnCatalog::cone_triangle(const std::string& f, std::string* why) const {
    const Arrow& arr = presentation.arrow(f);
    ConeData cd = cone(reps.at(f));
    if (is_contractible(cd.cone, opts)) return std::nullopt;
    HomElement u, v;
    auto m = match(cd.cone, &u, &v);
    if (!m) {
        if (why) *why = "cone of " + f + " is not a single catalog object; skipped";
        return std::nullopt;
    }
    auto kg = single(arrow_coords(arr.dst, *m, compose(u, cd.incl)));
    std::string sa = presentation.shift.at(arr.src);
    HomElement h = compose(shift_iso.at(arr.src).first, compose(cd.proj, v));
    auto kh = single(arrow_coords(*m, sa, h));
    if (!kg || !kh) {
        if (why) *why = "triangle maps of " + f + " are not single arrows; skipped";
        return std::nullopt;
    }
    return Triangle{f, arrow_ids.at({arr.dst, *m})[*kg], arrow_ids.at({*m, sa})[*kh]};
}

bool AnCatalog::verify_triangle(const Triangle& t) const {
    if (!presentation.has_arrow(t.f)) return false;
    auto u = cone_triangle(t.f);
    return u && *u == t;
}

std::shared_ptr<const AnCatalog> build_an_catalog(int n, int d, int bound, const Rat& rcharge_scale) {
    if (n < 1 || d < 1) throw Error(Errc::UnknownExample, "A_n needs n >= 1 and d >= 1");
    if ((n + 1) % d != 0) throw Error(Errc::UnknownExample, "group order must divide n+1");
    if (bound < n + 2) throw Error(Errc::DimensionMismatch, "truncation bound must exceed n+1");
    auto cat = std::make_shared<AnCatalog>();
    cat->n = n;
    cat->d = d;
    cat->ring = Ring{{"x"}, bound};
    cat->opts.rcharge_scale = rcharge_scale;
    CategoryPresentation& c = cat->presentation;
    c.source = "an-zd:" + std::to_string(n) + "," + std::to_string(d);
    c.bound = bound;
    c.rcharge_scale = rcharge_scale;

    for (int a = 1; a <= n; ++a)
        for (int j = 0; j < d; ++j) {
            Weights w;
            w.d = d;
            Rat w0 = frac(ratio(j + an_twist_offset(n, a), d));
            w.w0 = {w0};
            w.w1 = {frac(Rat(w0 + ratio(a, d)))};
            std::string id = an_object_id(a, j);
            cat->ids.push_back(id);
            cat->objects.emplace(id, rank_one_mf(cat->ring, a, n + 1 - a, w));
            c.objects.push_back(id);
            c.display[id] = an_display_name(a, j);
        }
    for (const auto& a : cat->ids)
        for (const auto& b : cat->ids)
            cat->homs[{a, b}] =
                std::make_shared<HomComplex>(cat->objects.at(a), cat->objects.at(b), cat->opts);
    for (const auto& a : cat->ids) {
        std::vector<size_t> fp;
        for (const auto& b : cat->ids) {
            fp.push_back(cat->homs.at({a, b})->dim(0));
            fp.push_back(cat->homs.at({a, b})->dim(1));
        }
        cat->fingerprints[a] = fp;
    }
    for (size_t i = 0; i < cat->ids.size(); ++i)
        for (size_t k = 0; k < i; ++k)
            if (cat->fingerprints.at(cat->ids[i]) == cat->fingerprints.at(cat->ids[k]))
                c.notes.push_back("fingerprint collision " + cat->ids[i] + " " + cat->ids[k]);

    // arrows: even cohomology basis, with the identity substituted on endomorphisms
    for (const auto& a : cat->ids)
        for (const auto& b : cat->ids) {
            const HomComplex& h = *cat->homs.at({a, b});
            std::vector<HomElement> reps = h.basis(0);
            std::optional<size_t> id_slot;
            if (a == b) {
                auto ci = h.decompose(identity_map(cat->objects.at(a)));
                for (size_t k = 0; ci && k < ci->size(); ++k)
                    if (sgn((*ci)[k]) != 0) {
                        reps[k] = identity_map(cat->objects.at(a));
                        id_slot = k;
                        break;
                    }
            }
            auto& ids = cat->arrow_ids[{a, b}];
            for (size_t k = 0; k < reps.size(); ++k) {
                std::string id = a + ">" + b + "#" + std::to_string(k);
                Arrow arr{id, a, b, reps[k].rcharge.value_or(Rat(0)),
                          id_slot && *id_slot == k ? "id" : "hom"};
                c.arrows.push_back(arr);
                ids.push_back(id);
                cat->reps.emplace(id, reps[k]);
            }
        }
    c.reindex();

    // shift permutation via literal shift and catalog matching
    for (const auto& a : cat->ids) {
        HomElement u, v;
        auto m = cat->match(shift(cat->objects.at(a)), &u, &v);
        if (!m) throw Error(Errc::Inconsistent, "shift of " + a + " is not in the catalog");
        c.shift[a] = *m;
        cat->shift_iso.emplace(a, std::make_pair(u, v));
    }
    for (const auto& arr : c.arrows) {
        const HomElement& f = cat->reps.at(arr.id);
        const auto& isa = cat->shift_iso.at(arr.src);
        const auto& isb = cat->shift_iso.at(arr.dst);
        HomElement g = compose(isb.first, compose(shift_map(f), isa.second));
        std::string sa = c.shift.at(arr.src), sb = c.shift.at(arr.dst);
        auto k = single(cat->arrow_coords(sa, sb, g));
        if (k) c.arrow_shift[arr.id] = cat->arrow_ids.at({sa, sb})[*k];
        else c.notes.push_back("shift of arrow " + arr.id + " is not a single arrow");
    }

    // distinguished triangles from cones of single arrows
    for (const auto& arr : c.arrows) {
        if (arr.label == "id") continue;
        std::string why;
        auto t = cat->cone_triangle(arr.id, &why);
        if (t) c.triangles.push_back(*t);
        else if (!why.empty()) c.notes.push_back(why);
    }
    validate_presentation(c);
    return cat;
}

CategoryPresentation attach_oracles(const std::shared_ptr<const AnCatalog>& cat) {
    CategoryPresentation c = cat->presentation;
    c.compose = [cat](const std::vector<std::string>& path) { return cat->compose_path(path); };
    c.distinguished = [cat](const Triangle& t) { return cat->verify_triangle(t); };
    c.reindex();
    return c;
}

CategoryPresentation build_an_equivariant(int n, int d, int bound, const Rat& rcharge_scale) {
    return attach_oracles(build_an_catalog(n, d, bound, rcharge_scale));
}

}  // namespace cstab
