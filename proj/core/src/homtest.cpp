#include "sethom/homtest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace sethom {

std::string rel_tag_name(RelTag t) {
    switch (t) {
        case RelTag::Edge: return "E";
        case RelTag::Order: return "order";
        case RelTag::C: return "C";
        case RelTag::D: return "D";
        case RelTag::R: return "R";
    }
    throw std::invalid_argument("unknown relation tag");
}

bool StructuredSet::has(RelTag t) const {
    switch (t) {
        case RelTag::Edge: return true;
        case RelTag::Order: return order.has_value();
        case RelTag::C: return c.has_value();
        case RelTag::D: return d.has_value();
        case RelTag::R: return r.has_value();
    }
    return false;
}

StructuredSet StructuredSet::induced(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("induced: repeated vertex");
    if (!vertices.empty() && (vertices.front() < 0 || vertices.back() >= size()))
        throw std::invalid_argument("induced: vertex out of range");

    int m = static_cast<int>(vertices.size());
    KHypergraph sub(m, hyper.arity());
    if (m >= hyper.arity()) {
        for (const auto& e : hyper.edges()) {
            std::vector<int> local;
            for (int v : e) {
                auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
                if (it == vertices.end() || *it != v) break;
                local.push_back(static_cast<int>(it - vertices.begin()));
            }
            if (static_cast<int>(local.size()) == hyper.arity()) sub.add_edge(local);
        }
    }
    StructuredSet out(std::move(sub));

    if (order) {
        std::vector<std::pair<int, int>> by_rank;
        for (int i = 0; i < m; ++i) by_rank.emplace_back(order->rank_of(vertices[i]), i);
        std::sort(by_rank.begin(), by_rank.end());
        std::vector<int> rank(m);
        for (int pos = 0; pos < m; ++pos) rank[by_rank[pos].second] = pos;
        out.order = FinOrder(rank);
    }
    if (c) {
        const TernaryRel& base = *c;
        out.c = TernaryRel(m, [&base, &vertices](int x, int y, int z) {
            return base.holds(vertices[x], vertices[y], vertices[z]);
        });
    }
    if (d) {
        const QuaternaryRel& base = *d;
        out.d = QuaternaryRel(m, [&base, &vertices](int x, int y, int z, int w) {
            return base.holds(vertices[x], vertices[y], vertices[z], vertices[w]);
        });
    }
    if (r) {
        const TernaryRel& base = *r;
        out.r = TernaryRel(m, [&base, &vertices](int x, int y, int z) {
            return base.holds(vertices[x], vertices[y], vertices[z]);
        });
    }
    return out;
}

StructuredSet structured_from_family(Family f, const Carrier& carrier) {
    switch (f) {
        case Family::M3: {
            const auto* t = std::get_if<LeafTree>(&carrier);
            if (!t) throw std::invalid_argument("M3 needs a rooted tree carrier");
            StructuredSet s(derive_edges_m3(*t));
            auto [c, ord] = c_of_leaves(*t);
            s.c = std::move(c);
            s.order = std::move(ord);
            return s;
        }
        case Family::M4: {
            const auto* t = std::get_if<LeafTree>(&carrier);
            if (!t) throw std::invalid_argument("M4 needs a rooted tree carrier");
            StructuredSet s(derive_edges_m4(*t));
            s.c = c_of_leaves(*t).first;
            return s;
        }
        case Family::M6: {
            const auto* t = std::get_if<UnrootedLeafTree>(&carrier);
            if (!t) throw std::invalid_argument("M6 needs an unrooted tree carrier");
            StructuredSet s(derive_edges_m6(*t));
            s.d = d_of_leaves(*t);
            return s;
        }
        case Family::N4: {
            const auto* t = std::get_if<UnrootedLeafTree>(&carrier);
            if (!t) throw std::invalid_argument("N4 needs an unrooted tree carrier");
            StructuredSet s(derive_edges_n4(*t));
            s.d = d_of_leaves(*t);
            return s;
        }
        case Family::N3: {
            const auto* cfg = std::get_if<CircleConfig>(&carrier);
            if (!cfg) throw std::invalid_argument("N3 needs a circle carrier");
            StructuredSet s(derive_edges_n3(*cfg));
            s.r = r_of_circle(*cfg);
            return s;
        }
    }
    throw std::invalid_argument("unknown family");
}

RespectSet family_respect(Family f) {
    switch (f) {
        case Family::M3: return {RelTag::C, RelTag::Order};
        case Family::M4: return {RelTag::C};
        case Family::M6: return {RelTag::D};
        case Family::N4: return {RelTag::D};
        case Family::N3: return {RelTag::R};
    }
    throw std::invalid_argument("unknown family");
}

namespace {

std::vector<long long> vertex_signature(const StructuredSet& s, const RespectSet& respect, int v) {
    std::vector<long long> sig;
    int n = s.size();
    if (respect.count(RelTag::Edge)) {
        long long deg = 0;
        for (const auto& e : s.hyper.edges())
            if (std::binary_search(e.begin(), e.end(), v)) ++deg;
        sig.push_back(deg);
    }
    if (respect.count(RelTag::Order)) sig.push_back(s.order->rank_of(v));
    if (respect.count(RelTag::C)) {
        long long apex = 0, flank = 0;
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (s.c->holds(v, y, z)) ++apex;
                if (s.c->holds(y, v, z)) ++flank;
            }
        sig.push_back(apex);
        sig.push_back(flank);
    }
    if (respect.count(RelTag::D)) {
        long long lead = 0;
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (s.d->holds(v, y, z, w)) ++lead;
        sig.push_back(lead);
    }
    if (respect.count(RelTag::R)) {
        long long apex = 0, flank = 0;
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (s.r->holds(v, y, z)) ++apex;
                if (s.r->holds(y, v, z)) ++flank;
            }
        sig.push_back(apex);
        sig.push_back(flank);
    }
    return sig;
}

struct IsoSearch {
    const StructuredSet& a;
    const StructuredSet& b;
    const RespectSet& respect;
    int n;
    std::vector<int> map;
    std::vector<bool> used;
    std::vector<std::vector<long long>> sig_a, sig_b;
    std::vector<int> mapped;

    IsoSearch(const StructuredSet& sa, const StructuredSet& sb, const RespectSet& rs)
        : a(sa), b(sb), respect(rs), n(sa.size()), map(n, -1), used(n, false) {
        sig_a.reserve(n);
        sig_b.reserve(n);
        for (int v = 0; v < n; ++v) {
            sig_a.push_back(vertex_signature(a, respect, v));
            sig_b.push_back(vertex_signature(b, respect, v));
        }
    }

    // Partial check confined to tuples inside the mapped set that involve
    // the newest vertex; earlier tuples were checked when mapped.
    bool consistent(int v) const {
        if (respect.count(RelTag::Order)) {
            for (int y : mapped)
                if (y != v && a.order->less(v, y) != b.order->less(map[v], map[y])) return false;
        }
        if (respect.count(RelTag::Edge)) {
            int k = a.hyper.arity();
            if (static_cast<int>(mapped.size()) >= k) {
                std::vector<int> others;
                for (int y : mapped)
                    if (y != v) others.push_back(y);
                std::vector<int> pick(k - 1);
                std::function<bool(int, int)> choose = [&](int start, int depth) {
                    if (depth == k - 1) {
                        std::vector<int> ea(pick.begin(), pick.end());
                        ea.push_back(v);
                        std::vector<int> eb;
                        for (int x : ea) eb.push_back(map[x]);
                        return a.hyper.has_edge(ea) == b.hyper.has_edge(eb);
                    }
                    for (int i = start; i < static_cast<int>(others.size()); ++i) {
                        pick[depth] = others[i];
                        if (!choose(i + 1, depth + 1)) return false;
                    }
                    return true;
                };
                if (!choose(0, 0)) return false;
            }
        }
        if (respect.count(RelTag::C)) {
            for (int x : mapped)
                for (int y : mapped)
                    for (int z : mapped) {
                        if (x != v && y != v && z != v) continue;
                        if (a.c->holds(x, y, z) != b.c->holds(map[x], map[y], map[z])) return false;
                    }
        }
        if (respect.count(RelTag::R)) {
            for (int x : mapped)
                for (int y : mapped)
                    for (int z : mapped) {
                        if (x != v && y != v && z != v) continue;
                        if (a.r->holds(x, y, z) != b.r->holds(map[x], map[y], map[z])) return false;
                    }
        }
        if (respect.count(RelTag::D)) {
            for (int x : mapped)
                for (int y : mapped)
                    for (int z : mapped)
                        for (int w : mapped) {
                            if (x != v && y != v && z != v && w != v) continue;
                            if (a.d->holds(x, y, z, w) !=
                                b.d->holds(map[x], map[y], map[z], map[w]))
                                return false;
                        }
        }
        return true;
    }

    bool verify(const std::vector<int>& f) const {
        if (respect.count(RelTag::Edge)) {
            for (const auto& e : a.hyper.edges()) {
                std::vector<int> img;
                for (int x : e) img.push_back(f[x]);
                if (!b.hyper.has_edge(img)) return false;
            }
            if (a.hyper.edge_count() != b.hyper.edge_count()) return false;
        }
        if (respect.count(RelTag::Order)) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (a.order->less(x, y) != b.order->less(f[x], f[y])) return false;
        }
        if (respect.count(RelTag::C)) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (a.c->holds(x, y, z) != b.c->holds(f[x], f[y], f[z])) return false;
        }
        if (respect.count(RelTag::R)) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (a.r->holds(x, y, z) != b.r->holds(f[x], f[y], f[z])) return false;
        }
        if (respect.count(RelTag::D)) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int w = 0; w < n; ++w)
                            if (a.d->holds(x, y, z, w) != b.d->holds(f[x], f[y], f[z], f[w]))
                                return false;
        }
        return true;
    }

    // Visits bijections in lexicographic image order; on_found returning
    // true stops the walk.
    bool dfs(int v, const std::function<bool(const std::vector<int>&)>& on_found) {
        if (v == n) {
            if (!verify(map)) throw std::runtime_error("isomorphism failed re-verification");
            return on_found(map);
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            map[v] = w;
            used[w] = true;
            mapped.push_back(v);
            bool stop = consistent(v) && dfs(v + 1, on_found);
            mapped.pop_back();
            used[w] = false;
            map[v] = -1;
            if (stop) return true;
        }
        return false;
    }
};

void check_respect(const StructuredSet& a, const StructuredSet& b, const RespectSet& respect) {
    for (RelTag t : respect) {
        if (!a.has(t) || !b.has(t))
            throw std::invalid_argument("respected relation " + rel_tag_name(t) + " is missing");
    }
    if (respect.count(RelTag::Edge) && a.hyper.arity() != b.hyper.arity())
        throw std::invalid_argument("edge arity mismatch");
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const StructuredSet& a, const StructuredSet& b,
                                                 const RespectSet& respect) {
    check_respect(a, b, respect);
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch search(a, b, respect);
    std::optional<std::vector<int>> found;
    search.dfs(0, [&found](const std::vector<int>& f) {
        found = f;
        return true;
    });
    return found;
}

PermGroup automorphism_group(const StructuredSet& s, const RespectSet& respect) {
    check_respect(s, s, respect);
    if (s.size() > 10) throw std::invalid_argument("automorphism search capped at 10 vertices");
    int n = s.size();
    std::vector<Permutation> gens = {Permutation::identity(n)};
    PermGroup g = close_group(gens);
    IsoSearch search(s, s, respect);
    search.dfs(0, [&](const std::vector<int>& f) {
        Permutation p(f);
        if (!g.contains(p)) {
            gens.push_back(p);
            g = close_group(gens);
        }
        return false;
    });
    return g;
}

nlohmann::json HomCertificate::to_json() const {
    return {{"u", u}, {"v", v}, {"iso", iso}};
}

nlohmann::json HomReport::to_json() const {
    nlohmann::json set_at = nlohmann::json::object();
    nlohmann::json hom_at = nlohmann::json::object();
    for (std::size_t t = 1; t < set_homogeneous_at.size(); ++t) {
        set_at[std::to_string(t)] = static_cast<bool>(set_homogeneous_at[t]);
        hom_at[std::to_string(t)] = static_cast<bool>(homogeneous_at[t]);
    }
    nlohmann::json j{{"set_homogeneous", set_homogeneous},
                     {"homogeneous", homogeneous},
                     {"set_homogeneous_at", set_at},
                     {"homogeneous_at", hom_at}};
    j["set_certificate"] = set_certificate ? set_certificate->to_json() : nlohmann::json();
    j["extension_certificate"] =
        extension_certificate ? extension_certificate->to_json() : nlohmann::json();
    return j;
}

HomReport homogeneity_report(const KHypergraph& h) {
    StructuredSet s(h);
    return homogeneity_report(h, automorphism_group(s, {RelTag::Edge}));
}

HomReport homogeneity_report(const KHypergraph& h, const PermGroup& g) {
    int n = h.vertex_count();
    if (n > 8) throw std::invalid_argument("homogeneity report capped at 8 vertices");
    if (g.degree() != n) throw std::invalid_argument("group degree does not match vertex count");
    for (const auto& gen : g.generators()) {
        for (const auto& e : h.edges())
            if (!h.has_edge(gen.apply_subset(e)))
                throw std::invalid_argument("supplied group does not preserve the edge set");
    }

    StructuredSet whole(h);
    HomReport rep;
    rep.set_homogeneous_at.assign(n + 1, true);
    rep.homogeneous_at.assign(n + 1, true);

    for (int t = 1; t <= n; ++t) {
        auto orbits = orbits_on_subsets(g, t);

        // Two isomorphic representatives in different orbits defeat
        // set-homogeneity at this size.
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            for (std::size_t j = i + 1; j < orbits.size(); ++j) {
                const auto& ri = orbits[i].front();
                const auto& rj = orbits[j].front();
                auto iso =
                    find_isomorphism(whole.induced(ri), whole.induced(rj), {RelTag::Edge});
                if (!iso) continue;
                rep.set_homogeneous_at[t] = false;
                if (!rep.set_certificate) {
                    HomCertificate cert;
                    cert.u = ri;
                    cert.v = rj;
                    for (int p : *iso) cert.iso.push_back(rj[p]);
                    rep.set_certificate = cert;
                }
            }
        }

        // Every isomorphism out of an orbit representative must agree with
        // some group element on the representative.
        for (const auto& orbit : orbits) {
            const auto& u = orbit.front();
            std::set<std::vector<int>> restrictions;
            for (const auto& el : g.elements()) {
                std::vector<int> im;
                im.reserve(u.size());
                for (int x : u) im.push_back(el.apply(x));
                restrictions.insert(std::move(im));
            }
            StructuredSet su = whole.induced(u);
            bool done = false;
            for_each_subset(n, t, [&](const std::vector<int>& v) {
                if (done) return;
                StructuredSet sv = whole.induced(v);
                RespectSet edge_only = {RelTag::Edge};
                IsoSearch enumerate(su, sv, edge_only);
                enumerate.dfs(0, [&](const std::vector<int>& f) {
                    std::vector<int> img;
                    img.reserve(f.size());
                    for (int p : f) img.push_back(v[p]);
                    if (!restrictions.count(img)) {
                        rep.homogeneous_at[t] = false;
                        if (!rep.extension_certificate) {
                            HomCertificate cert;
                            cert.u = u;
                            cert.v = v;
                            cert.iso = img;
                            rep.extension_certificate = cert;
                        }
                        done = true;
                        return true;
                    }
                    return false;
                });
            });
        }
    }

    rep.set_homogeneous = true;
    rep.homogeneous = true;
    for (int t = 1; t <= n; ++t) {
        if (!rep.set_homogeneous_at[t]) rep.set_homogeneous = false;
        if (!rep.homogeneous_at[t]) rep.homogeneous = false;
    }
    return rep;
}

std::vector<std::vector<int>> induced_embeddings(const KHypergraph& a, const KHypergraph& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("edge arity mismatch");
    int na = a.vertex_count();
    int nb = b.vertex_count();
    std::vector<std::vector<int>> out;
    if (na > nb) return out;

    std::vector<int> map(na, -1);
    std::vector<bool> used(nb, false);
    int k = a.arity();

    // Edge agreement over the k-subsets of the mapped prefix ending at v.
    auto consistent = [&](int v) {
        if (v + 1 < k) return true;
        std::vector<int> pick(k - 1);
        std::function<bool(int, int)> choose = [&](int start, int depth) {
            if (depth == k - 1) {
                std::vector<int> ea(pick.begin(), pick.end());
                ea.push_back(v);
                std::vector<int> eb;
                for (int x : ea) eb.push_back(map[x]);
                return a.has_edge(ea) == b.has_edge(eb);
            }
            for (int i = start; i <= v - 1 - (k - 2 - depth); ++i) {
                pick[depth] = i;
                if (!choose(i + 1, depth + 1)) return false;
            }
            return true;
        };
        return choose(0, 0);
    };

    std::function<void(int)> dfs = [&](int v) {
        if (v == na) {
            out.push_back(map);
            return;
        }
        for (int w = 0; w < nb; ++w) {
            if (used[w]) continue;
            map[v] = w;
            used[w] = true;
            if (consistent(v)) dfs(v + 1);
            used[w] = false;
            map[v] = -1;
        }
    };
    dfs(0);
    return out;
}

nlohmann::json TapInstance::to_json() const {
    nlohmann::json j{{"holds", holds},
                     {"instances_checked", instances_checked},
                     {"instances_skipped", instances_skipped}};
    if (failure) {
        j["failure"] = {{"a", failure->a},
                        {"b1", failure->b1},
                        {"b2", failure->b2},
                        {"f1", failure->f1},
                        {"f2", failure->f2}};
    } else {
        j["failure"] = nlohmann::json();
    }
    return j;
}

namespace {

struct TapContext {
    const std::vector<KHypergraph>& cls;
    std::vector<std::vector<Permutation>> auts;
    std::vector<std::vector<std::vector<std::vector<int>>>> embs;

    explicit TapContext(const std::vector<KHypergraph>& structures) : cls(structures) {
        int m = static_cast<int>(cls.size());
        auts.reserve(m);
        for (const auto& s : cls)
            auts.push_back(automorphism_group(StructuredSet(s), {RelTag::Edge}).elements());
        embs.assign(m, std::vector<std::vector<std::vector<int>>>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) embs[i][j] = induced_embeddings(cls[i], cls[j]);
    }
};

bool tap_witness_in(const TapContext& ctx, int a, int b1, int b2, const std::vector<int>& f1,
                    const std::vector<int>& f2) {
    int na = ctx.cls[a].vertex_count();
    for (const auto& h : ctx.auts[a]) {
        std::vector<int> phi(na);
        for (int x = 0; x < na; ++x) phi[x] = f2[h.apply(x)];
        for (std::size_t di = 0; di < ctx.cls.size(); ++di) {
            for (const auto& g1 : ctx.embs[b1][di]) {
                for (const auto& g2 : ctx.embs[b2][di]) {
                    bool ok = true;
                    for (int x = 0; x < na && ok; ++x)
                        if (g1[f1[x]] != g2[phi[x]]) ok = false;
                    if (ok) return true;
                }
            }
        }
    }
    return false;
}

// Lexicographically least member of the double coset Aut(B) . f . Aut(A).
std::vector<int> double_coset_key(const std::vector<int>& f,
                                  const std::vector<Permutation>& aut_a,
                                  const std::vector<Permutation>& aut_b) {
    std::vector<int> best = f;
    int na = static_cast<int>(f.size());
    std::vector<int> cand(na);
    for (const auto& da : aut_a) {
        for (const auto& db : aut_b) {
            for (int x = 0; x < na; ++x) cand[x] = db.apply(f[da.apply(x)]);
            if (cand < best) best = cand;
        }
    }
    return best;
}

std::vector<std::vector<int>> embedding_representatives(const TapContext& ctx, int a, int b) {
    std::set<std::vector<int>> keys;
    std::vector<std::vector<int>> reps;
    for (const auto& f : ctx.embs[a][b]) {
        auto key = double_coset_key(f, ctx.auts[a], ctx.auts[b]);
        if (keys.insert(key).second) reps.push_back(key);
    }
    return reps;
}

}  // namespace

bool tap_witness_exists(const std::vector<KHypergraph>& structures, int a, int b1, int b2,
                        const std::vector<int>& f1, const std::vector<int>& f2) {
    TapContext ctx(structures);
    return tap_witness_in(ctx, a, b1, b2, f1, f2);
}

TapInstance check_tap(const std::vector<KHypergraph>& structures) {
    if (structures.empty()) throw std::invalid_argument("empty class");
    int k = structures.front().arity();
    int max_n = 0;
    for (const auto& s : structures) {
        if (s.arity() != k) throw std::invalid_argument("mixed edge arities in class");
        if (s.vertex_count() > 5) throw std::invalid_argument("class member above 5 vertices");
        max_n = std::max(max_n, s.vertex_count());
    }

    TapContext ctx(structures);
    int m = static_cast<int>(structures.size());
    TapInstance result;
    result.holds = true;

    for (int a = 0; a < m; ++a) {
        int na = structures[a].vertex_count();
        for (int b1 = 0; b1 < m; ++b1) {
            auto reps1 = embedding_representatives(ctx, a, b1);
            if (reps1.empty()) continue;
            for (int b2 = b1; b2 < m; ++b2) {
                auto reps2 = embedding_representatives(ctx, a, b2);
                if (reps2.empty()) continue;
                int amalgam = structures[b1].vertex_count() + structures[b2].vertex_count() - na;
                for (std::size_t i1 = 0; i1 < reps1.size(); ++i1) {
                    std::size_t start = (b1 == b2) ? i1 : 0;
                    for (std::size_t i2 = start; i2 < reps2.size(); ++i2) {
                        if (amalgam > max_n) {
                            ++result.instances_skipped;
                            continue;
                        }
                        ++result.instances_checked;
                        if (tap_witness_in(ctx, a, b1, b2, reps1[i1], reps2[i2])) continue;
                        result.holds = false;
                        if (!result.failure) {
                            TapInstance::Failure fail;
                            fail.a = a;
                            fail.b1 = b1;
                            fail.b2 = b2;
                            fail.f1 = reps1[i1];
                            fail.f2 = reps2[i2];
                            result.failure = fail;
                        }
                    }
                }
            }
        }
    }
    return result;
}

nlohmann::json KeyLemmaReport::to_json() const {
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : violations) {
        viols.push_back({{"trial", v.trial},
                         {"u", v.u},
                         {"v", v.v},
                         {"edge_iso", v.edge_iso},
                         {"structure_iso", v.structure_iso}});
    }
    return {{"family", family_name(family)}, {"core_sizes", core_sizes},
            {"trials", trials},              {"pairs_checked", pairs_checked},
            {"edge_isomorphic_pairs", edge_isomorphic_pairs},
            {"violations", viols}};
}

namespace {

std::vector<int> sample_subset(int n, int size, std::mt19937_64& rng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

Carrier trial_carrier(Family family, int leaves, std::uint64_t seed) {
    switch (family) {
        case Family::M3: return random_rooted_fragment(leaves, 2, seed);
        case Family::M4: return random_rooted_fragment(leaves, 2, seed);
        case Family::M6: return random_unrooted_fragment(leaves, 3, seed);
        case Family::N4: return random_unrooted_fragment(leaves, 4, seed);
        case Family::N3: return build_circle_config(leaves, 997, seed);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace

KeyLemmaReport key_lemma_trial(Family family, const std::vector<int>& core_sizes, int trials,
                               std::uint64_t seed) {
    constexpr int kLeaves = 12;
    for (int s : core_sizes) {
        if (s < 1 || s > 7) throw std::invalid_argument("core sizes must lie in [1,7]");
    }
    if (trials < 0) throw std::invalid_argument("negative trial count");

    KeyLemmaReport report;
    report.family = family;
    report.core_sizes = core_sizes;
    report.trials = trials;
    RespectSet structural = family_respect(family);

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        Carrier carrier = trial_carrier(family, kLeaves, rng());
        StructuredSet ambient = structured_from_family(family, carrier);
        for (int s : core_sizes) {
            std::vector<int> u = sample_subset(kLeaves, s, rng);
            std::vector<int> v = sample_subset(kLeaves, s, rng);
            StructuredSet su = ambient.induced(u);
            StructuredSet sv = ambient.induced(v);
            bool edge_iso = find_isomorphism(su, sv, {RelTag::Edge}).has_value();
            bool structure_iso = find_isomorphism(su, sv, structural).has_value();
            ++report.pairs_checked;
            if (edge_iso) ++report.edge_isomorphic_pairs;
            if (edge_iso != structure_iso)
                report.violations.push_back({trial, u, v, edge_iso, structure_iso});
        }
    }
    return report;
}

}  // namespace sethom
