#include "cyclic_stab/catgraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "cyclic_stab/error.hpp"

namespace cstab {

void CategoryPresentation::reindex() {
    arrow_index_.clear();
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (!arrow_index_.emplace(arrows[i].id, i).second)
            throw Error(Errc::IdMismatch, "duplicate arrow id " + arrows[i].id);
    }
}

const Arrow& CategoryPresentation::arrow(const std::string& id) const {
    if (arrow_index_.size() != arrows.size()) const_cast<CategoryPresentation*>(this)->reindex();
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw Error(Errc::IdMismatch, "unknown arrow " + id);
    return arrows[it->second];
}

bool CategoryPresentation::has_arrow(const std::string& id) const {
    if (arrow_index_.size() != arrows.size()) const_cast<CategoryPresentation*>(this)->reindex();
    return arrow_index_.count(id) > 0;
}

bool CategoryPresentation::has_object(const std::string& id) const {
    return std::find(objects.begin(), objects.end(), id) != objects.end();
}

std::string CategoryPresentation::name(const std::string& obj) const {
    auto it = display.find(obj);
    return it == display.end() ? obj : it->second;
}

DegreeMap CategoryPresentation::degrees() const {
    DegreeMap q;
    for (const auto& a : arrows) q[a.id] = a.degree;
    return q;
}

std::vector<const Arrow*> CategoryPresentation::arrows_between(const std::string& a,
                                                               const std::string& b) const {
    std::vector<const Arrow*> out;
    for (const auto& x : arrows)
        if (x.src == a && x.dst == b) out.push_back(&x);
    return out;
}

std::optional<Triangle> CategoryPresentation::triangle_starting(const std::string& f,
                                                                const std::string& g) const {
    for (const auto& t : triangles)
        if (t.f == f && t.g == g) return t;
    return std::nullopt;
}

void validate_presentation(const CategoryPresentation& c) {
    std::set<std::string> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size()) throw Error(Errc::IdMismatch, "duplicate object id");
    for (const auto& o : c.objects) {
        auto it = c.shift.find(o);
        if (it == c.shift.end() || !objs.count(it->second))
            throw Error(Errc::IdMismatch, "shift undefined on " + o);
        if (c.shift.at(it->second) != o)
            throw Error(Errc::Inconsistent, "shift is not an involution at " + o);
    }
    if (c.shift.size() != c.objects.size()) throw Error(Errc::IdMismatch, "shift has extra keys");
    std::set<std::string> ids;
    for (const auto& a : c.arrows) {
        if (!ids.insert(a.id).second) throw Error(Errc::IdMismatch, "duplicate arrow id " + a.id);
        if (!objs.count(a.src) || !objs.count(a.dst))
            throw Error(Errc::IdMismatch, "arrow " + a.id + " has unknown endpoint");
        if (a.label == "id" && (a.src != a.dst || sgn(a.degree) != 0))
            throw Error(Errc::Inconsistent, "identity arrow " + a.id + " must be a degree-0 loop");
    }
    for (const auto& [f, g] : c.arrow_shift) {
        const Arrow& a = c.arrow(f);
        const Arrow& b = c.arrow(g);
        if (b.src != c.shift.at(a.src) || b.dst != c.shift.at(a.dst))
            throw Error(Errc::Inconsistent, "arrow shift of " + f + " has wrong endpoints");
        if (a.degree != b.degree)
            throw Error(Errc::Inconsistent, "arrow shift of " + f + " changes the degree");
    }
    for (const auto& t : c.triangles) {
        const Arrow& f = c.arrow(t.f);
        const Arrow& g = c.arrow(t.g);
        const Arrow& h = c.arrow(t.h);
        if (f.dst != g.src || g.dst != h.src || h.dst != c.shift.at(f.src))
            throw Error(Errc::Inconsistent, "triangle " + t.f + "," + t.g + "," + t.h + " does not chain");
    }
}

bool presentations_equal(const CategoryPresentation& a, const CategoryPresentation& b) {
    return a.objects == b.objects && a.shift == b.shift && a.arrows == b.arrows &&
           a.arrow_shift == b.arrow_shift && a.triangles == b.triangles && a.display == b.display &&
           a.notes == b.notes && a.source == b.source && a.bound == b.bound &&
           a.rcharge_scale == b.rcharge_scale;
}

// ---------------------------------------------------------------- paths

std::string path_end(const ConnectingPath& p, const CategoryPresentation& c) {
    std::string cur = p.start;
    for (const auto& s : p.steps) {
        const Arrow& a = c.arrow(s.arrow);
        const std::string& from = s.forward ? a.src : a.dst;
        if (from != cur) throw Error(Errc::BrokenChain, "step " + s.arrow + " does not start at " + cur);
        cur = s.forward ? a.dst : a.src;
    }
    return cur;
}

ConnectingPath reverse(const ConnectingPath& p, const CategoryPresentation& c) {
    ConnectingPath r{path_end(p, c), {}};
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) r.steps.push_back({it->arrow, !it->forward});
    return r;
}

Rat path_degree(const ConnectingPath& p, const CategoryPresentation& c, const DegreeMap& q) {
    path_end(p, c);
    Rat total = 0;
    for (const auto& s : p.steps) {
        auto it = q.find(s.arrow);
        if (it == q.end()) throw Error(Errc::IdMismatch, "no degree for arrow " + s.arrow);
        total += s.forward ? it->second : Rat(-it->second);
    }
    return total;
}

Rat path_degree(const ConnectingPath& p, const CategoryPresentation& c) {
    return path_degree(p, c, c.degrees());
}

std::string path_str(const ConnectingPath& p) {
    std::string s = p.start;
    for (const auto& st : p.steps) s += (st.forward ? " -" : " <-") + st.arrow + (st.forward ? "->" : "-");
    return s;
}

// ---------------------------------------------------------------- diagrams

const DiagramNode& Diagram::node(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return n;
    throw Error(Errc::IdMismatch, "unknown diagram node " + id);
}

bool Diagram::has_node(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return true;
    return false;
}

const DiagramEdge& Diagram::edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return e;
    throw Error(Errc::IdMismatch, "unknown diagram edge " + id);
}

void validate_diagram(const Diagram& d, const CategoryPresentation& c) {
    for (const auto& e : d.edges) {
        const DiagramNode& s = d.node(e.src);
        const DiagramNode& t = d.node(e.dst);
        for (const auto& b : e.blocks) {
            if (b.src >= s.summands.size() || b.dst >= t.summands.size())
                throw Error(Errc::IdMismatch, "block index out of range in edge " + e.id);
            const Arrow& a = c.arrow(b.arrow);
            if (a.src != s.summands[b.src] || a.dst != t.summands[b.dst])
                throw Error(Errc::IdMismatch, "block " + b.arrow + " of edge " + e.id +
                                                  " does not match the declared summands");
        }
    }
}

namespace {

struct SummandGraph {
    struct E {
        size_t u, v;
        std::string arrow;
    };
    std::vector<std::string> obj;
    std::map<std::pair<std::string, size_t>, size_t> vid;
    std::vector<E> edges;
};

SummandGraph summand_graph(const Diagram& d) {
    SummandGraph g;
    for (const auto& n : d.nodes)
        for (size_t i = 0; i < n.summands.size(); ++i) {
            g.vid[{n.id, i}] = g.obj.size();
            g.obj.push_back(n.summands[i]);
        }
    for (const auto& e : d.edges)
        for (const auto& b : e.blocks) {
            auto su = g.vid.find({e.src, b.src});
            auto sv = g.vid.find({e.dst, b.dst});
            if (su == g.vid.end() || sv == g.vid.end())
                throw Error(Errc::IdMismatch, "edge " + e.id + " references a missing summand");
            g.edges.push_back({su->second, sv->second, b.arrow});
        }
    return g;
}

struct Forest {
    std::vector<long> parent_edge;  // -1 for roots
    std::vector<size_t> parent, depth, comp;
    std::vector<bool> tree_edge;
};

Forest spanning_forest(const SummandGraph& g, unsigned seed) {
    size_t n = g.obj.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t k = 0; k < g.edges.size(); ++k) {
        adj[g.edges[k].u].push_back(k);
        if (g.edges[k].v != g.edges[k].u) adj[g.edges[k].v].push_back(k);
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
    }
    Forest f;
    f.parent_edge.assign(n, -1);
    f.parent.assign(n, 0);
    f.depth.assign(n, 0);
    f.comp.assign(n, SIZE_MAX);
    f.tree_edge.assign(g.edges.size(), false);
    size_t ncomp = 0;
    for (size_t root : order) {
        if (f.comp[root] != SIZE_MAX) continue;
        f.comp[root] = ncomp;
        f.parent[root] = root;
        std::deque<size_t> q{root};
        while (!q.empty()) {
            size_t x = q.front();
            q.pop_front();
            for (size_t k : adj[x]) {
                size_t y = g.edges[k].u == x ? g.edges[k].v : g.edges[k].u;
                if (f.comp[y] != SIZE_MAX) continue;
                f.comp[y] = ncomp;
                f.parent[y] = x;
                f.parent_edge[y] = static_cast<long>(k);
                f.depth[y] = f.depth[x] + 1;
                f.tree_edge[k] = true;
                q.push_back(y);
            }
        }
        ++ncomp;
    }
    return f;
}

}  // namespace

std::vector<ConnectingPath> cycle_basis(const Diagram& d, const CategoryPresentation& c,
                                        unsigned forest) {
    validate_diagram(d, c);
    SummandGraph g = summand_graph(d);
    Forest f = spanning_forest(g, forest);
    std::vector<size_t> extra;
    for (size_t k = 0; k < g.edges.size(); ++k)
        if (!f.tree_edge[k]) extra.push_back(k);
    std::vector<ConnectingPath> loops;
    auto up_step = [&](size_t x) {  // traverse parent edge from x to its parent
        const auto& e = g.edges[static_cast<size_t>(f.parent_edge[x])];
        return Step{e.arrow, e.u == x};
    };
    for (size_t k : extra) {
        const auto& e = g.edges[k];
        ConnectingPath p{g.obj[e.u], {{e.arrow, true}}};
        size_t a = e.v, b = e.u;
        std::vector<Step> down;  // from lca to u, collected in reverse
        while (f.depth[a] > f.depth[b]) {
            p.steps.push_back(up_step(a));
            a = f.parent[a];
        }
        while (f.depth[b] > f.depth[a]) {
            Step s = up_step(b);
            down.push_back({s.arrow, !s.forward});
            b = f.parent[b];
        }
        while (a != b) {
            p.steps.push_back(up_step(a));
            a = f.parent[a];
            Step s = up_step(b);
            down.push_back({s.arrow, !s.forward});
            b = f.parent[b];
        }
        for (auto it = down.rbegin(); it != down.rend(); ++it) p.steps.push_back(*it);
        loops.push_back(std::move(p));
    }
    return loops;
}

LiftReport is_liftable(const Diagram& d, const CategoryPresentation& c, const DegreeMap& q,
                       unsigned forest) {
    LiftReport r;
    for (const auto& loop : cycle_basis(d, c, forest)) {
        Rat deg = path_degree(loop, c, q);
        if (sgn(deg) != 0) {
            r.liftable = false;
            r.witness = loop;
            r.witness_degree = deg;
            return r;
        }
    }
    return r;
}

LiftReport is_liftable(const Diagram& d, const CategoryPresentation& c, unsigned forest) {
    return is_liftable(d, c, c.degrees(), forest);
}

bool diagram_connective(const Diagram& d) {
    SummandGraph g = summand_graph(d);
    if (g.obj.empty()) return true;
    Forest f = spanning_forest(g, 0);
    for (size_t v = 0; v < g.obj.size(); ++v)
        if (f.comp[v] != 0) return false;
    return true;
}

PartialMatrix degree_matrix(const std::string& edge, const Diagram& d, const CategoryPresentation& c,
                            const DegreeMap& q) {
    LiftReport lr = is_liftable(d, c, q);
    if (!lr.liftable)
        throw Error(Errc::NotLiftable, "loop " + path_str(*lr.witness) + " has degree " +
                                           rat_str(lr.witness_degree));
    SummandGraph g = summand_graph(d);
    Forest f = spanning_forest(g, 0);
    // potentials along the forest, processed in BFS depth order
    std::vector<size_t> order(g.obj.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return f.depth[a] < f.depth[b]; });
    std::vector<Rat> psi(g.obj.size());
    for (size_t v : order) {
        if (f.parent_edge[v] < 0) continue;
        const auto& e = g.edges[static_cast<size_t>(f.parent_edge[v])];
        Rat qa = q.at(e.arrow);
        psi[v] = e.v == v ? Rat(psi[e.u] + qa) : Rat(psi[e.v] - qa);
    }
    const DiagramEdge& de = d.edge(edge);
    const DiagramNode& s = d.node(de.src);
    const DiagramNode& t = d.node(de.dst);
    PartialMatrix m(t.summands.size(), std::vector<std::optional<Rat>>(s.summands.size()));
    for (size_t j = 0; j < t.summands.size(); ++j)
        for (size_t i = 0; i < s.summands.size(); ++i) {
            size_t a = g.vid.at({de.src, i}), b = g.vid.at({de.dst, j});
            if (f.comp[a] == f.comp[b]) m[j][i] = psi[b] - psi[a];
        }
    return m;
}

RMatrix r_matrix(const std::string& edge, const Diagram& d, const CategoryPresentation& c,
                 const DegreeMap& q) {
    RMatrix r;
    r.q = degree_matrix(edge, d, c, q);
    for (const auto& row : r.q)
        for (const auto& e : row)
            if (!e) throw Error(Errc::NotConnective, "edge " + edge + " has a disconnected summand pair");
    const double two_pi = 2 * std::acos(-1.0);
    for (const auto& row : r.q) {
        std::vector<std::complex<double>> out;
        for (const auto& e : row) out.push_back(std::polar(1.0, two_pi * e->get_d()));
        r.entries.push_back(out);
    }
    r.rank_one = true;
    for (size_t j = 1; j < r.q.size() && r.rank_one; ++j)
        for (size_t k = 1; k < r.q[j].size(); ++k)
            if (frac(Rat(*r.q[j][k] - *r.q[0][k])) != frac(Rat(*r.q[j][0] - *r.q[0][0]))) {
                r.rank_one = false;
                break;
            }
    return r;
}

bool is_connective(const CategoryPresentation& c) {
    if (c.objects.empty()) return true;
    std::map<std::string, std::string> parent;
    for (const auto& o : c.objects) parent[o] = o;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        if (parent[x] == x) return x;
        return parent[x] = find(parent[x]);
    };
    for (const auto& a : c.arrows) parent[find(a.src)] = find(a.dst);
    std::string r = find(c.objects[0]);
    for (const auto& o : c.objects)
        if (find(o) != r) return false;
    return true;
}

GlueResult glue(const Diagram& d1, const Diagram& d2, const Diagram& common,
                const CategoryPresentation& c, const DegreeMap& q) {
    auto contains = [](const Diagram& big, const Diagram& small) {
        for (const auto& n : small.nodes) {
            if (!big.has_node(n.id) || big.node(n.id).summands != n.summands) return false;
        }
        for (const auto& e : small.edges) {
            bool found = false;
            for (const auto& f : big.edges) {
                if (f.id != e.id) continue;
                found = f.src == e.src && f.dst == e.dst && f.blocks.size() == e.blocks.size();
                for (size_t k = 0; found && k < e.blocks.size(); ++k)
                    found = f.blocks[k].src == e.blocks[k].src && f.blocks[k].dst == e.blocks[k].dst &&
                            f.blocks[k].arrow == e.blocks[k].arrow;
            }
            if (!found) return false;
        }
        return true;
    };
    if (!contains(d1, common) || !contains(d2, common))
        throw Error(Errc::NotSubdiagram, "common diagram is not contained in both sides");
    GlueResult r;
    r.diagram = d1;
    for (const auto& n : d2.nodes) {
        if (r.diagram.has_node(n.id)) {
            if (r.diagram.node(n.id).summands != n.summands)
                throw Error(Errc::NotSubdiagram, "node " + n.id + " differs between the two sides");
            continue;
        }
        r.diagram.nodes.push_back(n);
    }
    std::set<std::string> have;
    for (const auto& e : d1.edges) have.insert(e.id);
    for (const auto& e : d2.edges) {
        if (have.count(e.id)) {
            Diagram probe;
            probe.edges = {e};
            if (!contains(d1, probe))
                throw Error(Errc::NotSubdiagram, "edge " + e.id + " differs between the two sides");
            continue;
        }
        r.diagram.edges.push_back(e);
    }
    r.predicted_liftable =
        is_liftable(d1, c, q).liftable && is_liftable(d2, c, q).liftable && diagram_connective(common);
    r.verified = is_liftable(r.diagram, c, q);
    return r;
}

}  // namespace cstab
