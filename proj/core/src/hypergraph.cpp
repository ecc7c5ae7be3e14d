#include "sethom/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sethom {

KHypergraph::KHypergraph(int n, int k) : n_(n), k_(k) {
    if (n < 0) throw std::invalid_argument("KHypergraph: negative vertex count");
    if (k < 1) throw std::invalid_argument("KHypergraph: arity must be positive");
}

std::vector<int> KHypergraph::checked_edge(std::vector<int> vertices) const {
    if (static_cast<int>(vertices.size()) != k_) {
        throw std::invalid_argument("KHypergraph: edge arity mismatch");
    }
    std::sort(vertices.begin(), vertices.end());
    for (int i = 0; i < k_; ++i) {
        if (vertices[i] < 0 || vertices[i] >= n_) {
            throw std::invalid_argument("KHypergraph: vertex out of range");
        }
        if (i > 0 && vertices[i] == vertices[i - 1]) {
            throw std::invalid_argument("KHypergraph: repeated vertex in edge");
        }
    }
    return vertices;
}

void KHypergraph::add_edge(std::vector<int> vertices) {
    edges_.insert(checked_edge(std::move(vertices)));
}

bool KHypergraph::has_edge(std::vector<int> vertices) const {
    return edges_.count(checked_edge(std::move(vertices))) > 0;
}

nlohmann::json KHypergraph::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_) edges.push_back(e);
    return {{"n", n_}, {"k", k_}, {"edges", edges}};
}

KHypergraph KHypergraph::from_json(const nlohmann::json& j) {
    KHypergraph h(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& e : j.at("edges")) h.add_edge(e.get<std::vector<int>>());
    return h;
}

int family_arity(Family f) {
    switch (f) {
        case Family::M3:
        case Family::N3:
            return 3;
        case Family::M4:
        case Family::N4:
            return 4;
        case Family::M6:
            return 6;
    }
    throw std::invalid_argument("family_arity: unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::M3: return "M3";
        case Family::N3: return "N3";
        case Family::M4: return "M4";
        case Family::N4: return "N4";
        case Family::M6: return "M6";
    }
    throw std::invalid_argument("family_name: unknown family");
}

Family parse_family(const std::string& name) {
    if (name == "M3") return Family::M3;
    if (name == "N3") return Family::N3;
    if (name == "M4") return Family::M4;
    if (name == "N4") return Family::N4;
    if (name == "M6") return Family::M6;
    throw std::invalid_argument("parse_family: unknown family " + name);
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

KHypergraph derive_edges_m3(const LeafTree& t) {
    if (!t.is_binary()) throw std::invalid_argument("derive_edges_m3: tree must be binary");
    const int n = t.leaf_count();
    const auto [c, order] = c_of_leaves(t);
    KHypergraph h(n, 3);
    for_each_subset(n, 3, [&](const std::vector<int>& s) {
        const int x = s[0], y = s[1], z = s[2];
        const bool edge =
            (order.less(x, y) && order.less(x, z) && c.holds(x, y, z)) ||
            (order.less(y, x) && order.less(y, z) && c.holds(y, x, z)) ||
            (order.less(z, x) && order.less(z, y) && c.holds(z, x, y));
        if (edge) h.add_edge(s);
    });
    return h;
}

KHypergraph derive_edges_n3(const CircleConfig& cfg) {
    const int n = cfg.size();
    KHypergraph h(n, 3);
    const Rational half(1, 2);
    for_each_subset(n, 3, [&](const std::vector<int>& s) {
        std::vector<Rational> p = {cfg.position(s[0]), cfg.position(s[1]), cfg.position(s[2])};
        std::sort(p.begin(), p.end());
        // The triple fits in an open half circle exactly when one of the
        // three circular gaps exceeds 1/2. Antipodal pairs are excluded by
        // the config, so no gap equals 1/2 exactly.
        const bool edge = half < circle_distance(p[1], p[0]) ||
                          half < circle_distance(p[2], p[1]) ||
                          half < circle_distance(p[0], p[2]);
        if (edge) h.add_edge(s);
    });
    return h;
}

KHypergraph derive_edges_m4(const LeafTree& t) {
    const int n = t.leaf_count();
    const auto [c, order] = c_of_leaves(t);
    auto cherry_pair = [&c](int x1, int x2, int y1, int y2) {
        return c.holds(x1, y1, y2) && c.holds(x2, y1, y2) && c.holds(y1, x1, x2) &&
               c.holds(y2, x1, x2);
    };
    KHypergraph h(n, 4);
    for_each_subset(n, 4, [&](const std::vector<int>& s) {
        const int a = s[0], b = s[1], cc = s[2], d = s[3];
        if (cherry_pair(a, b, cc, d) || cherry_pair(a, cc, b, d) || cherry_pair(a, d, b, cc)) {
            h.add_edge(s);
        }
    });
    return h;
}

KHypergraph derive_edges_n4(const UnrootedLeafTree& t) {
    if (t.internal_degree_bound() > 4) {
        throw std::invalid_argument("derive_edges_n4: internal degree above 4");
    }
    const int n = t.leaf_count();
    const QuaternaryRel d = d_of_leaves(t);
    KHypergraph h(n, 4);
    for_each_subset(n, 4, [&](const std::vector<int>& s) {
        const int a = s[0], b = s[1], c = s[2], w = s[3];
        if (d.holds(a, b, c, w) || d.holds(a, c, b, w) || d.holds(a, w, b, c)) h.add_edge(s);
    });
    return h;
}

KHypergraph derive_edges_m6(const UnrootedLeafTree& t) {
    for (int v = t.leaf_count(); v < t.node_count(); ++v) {
        if (t.degree(v) != 3) {
            throw std::invalid_argument("derive_edges_m6: internal degree must be 3");
        }
    }
    const int n = t.leaf_count();
    KHypergraph h(n, 6);
    for_each_subset(n, 6, [&](const std::vector<int>& s) {
        if (induced_topology(t, s).kind == Topology::Kind::Caterpillar) h.add_edge(s);
    });
    return h;
}

KHypergraph derive_edges(Family f, const Carrier& carrier) {
    switch (f) {
        case Family::M3:
            if (const auto* t = std::get_if<LeafTree>(&carrier)) return derive_edges_m3(*t);
            throw std::invalid_argument("derive_edges: M3 needs a rooted tree");
        case Family::N3:
            if (const auto* c = std::get_if<CircleConfig>(&carrier)) return derive_edges_n3(*c);
            throw std::invalid_argument("derive_edges: N3 needs a circle configuration");
        case Family::M4:
            if (const auto* t = std::get_if<LeafTree>(&carrier)) return derive_edges_m4(*t);
            throw std::invalid_argument("derive_edges: M4 needs a rooted tree");
        case Family::N4:
            if (const auto* u = std::get_if<UnrootedLeafTree>(&carrier)) {
                return derive_edges_n4(*u);
            }
            throw std::invalid_argument("derive_edges: N4 needs an unrooted tree");
        case Family::M6:
            if (const auto* u = std::get_if<UnrootedLeafTree>(&carrier)) {
                return derive_edges_m6(*u);
            }
            throw std::invalid_argument("derive_edges: M6 needs an unrooted tree");
    }
    throw std::invalid_argument("derive_edges: unknown family");
}

KHypergraph complement(const KHypergraph& h) {
    KHypergraph out(h.vertex_count(), h.arity());
    for_each_subset(h.vertex_count(), h.arity(), [&](const std::vector<int>& s) {
        if (!h.edges().count(s)) out.add_edge(s);
    });
    return out;
}

std::map<int, long long> edge_distribution(const KHypergraph& h, int m) {
    if (m < h.arity() || m > h.vertex_count()) {
        throw std::invalid_argument("edge_distribution: subset size out of range");
    }
    std::map<int, long long> tally;
    for_each_subset(h.vertex_count(), m, [&](const std::vector<int>& s) {
        int count = 0;
        for (const auto& e : h.edges()) {
            if (std::includes(s.begin(), s.end(), e.begin(), e.end())) ++count;
        }
        ++tally[count];
    });
    return tally;
}

}  // namespace sethom
