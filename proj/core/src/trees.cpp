#include "sethom/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace sethom {

namespace {

// Small deterministic uniform draw; the tiny modulo bias is irrelevant for
// shape sampling and keeps results identical across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
    return rng() % k;
}

struct ShapeNode {
    bool leaf = true;
    std::vector<ShapeNode> parts;
};

ShapeNode parse_shape(const std::string& text, size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) throw std::invalid_argument("LeafTree: truncated specification");
    if (text[i] == '(') {
        ++i;
        ShapeNode node;
        node.leaf = false;
        while (true) {
            node.parts.push_back(parse_shape(text, i));
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= text.size()) throw std::invalid_argument("LeafTree: missing ')'");
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument("LeafTree: unexpected character in specification");
        }
        if (node.parts.size() < 2) {
            throw std::invalid_argument("LeafTree: internal node with fewer than two children");
        }
        return node;
    }
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
    }
    if (i == start) throw std::invalid_argument("LeafTree: empty specification");
    return ShapeNode{};
}

}  // namespace

// ---- LeafTree ----

LeafTree LeafTree::parse(const std::string& text) {
    size_t i = 0;
    const ShapeNode shape = parse_shape(text, i);
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw std::invalid_argument("LeafTree: trailing characters");

    LeafTree t;
    // Pre-order node creation; leaves get labels in left-to-right order.
    auto build = [&t](auto&& self, const ShapeNode& s, int parent, int depth) -> int {
        const int id = static_cast<int>(t.nodes_.size());
        t.nodes_.push_back({parent, {}, -1, depth});
        if (s.leaf) {
            t.nodes_[id].leaf_label = static_cast<int>(t.leaf_node_.size());
            t.leaf_node_.push_back(id);
        } else {
            for (const ShapeNode& part : s.parts) {
                const int child = self(self, part, id, depth + 1);
                t.nodes_[id].children.push_back(child);
            }
        }
        return id;
    };
    t.root_ = build(build, shape, -1, 0);
    return t;
}

int LeafTree::branching() const {
    int most = 0;
    for (const Node& n : nodes_) most = std::max(most, static_cast<int>(n.children.size()));
    return most;
}

int LeafTree::leaf_node(int label) const {
    if (label < 0 || label >= leaf_count()) {
        throw std::invalid_argument("LeafTree: leaf label out of range");
    }
    return leaf_node_[label];
}

int LeafTree::parent(int node) const { return nodes_.at(node).parent; }

const std::vector<int>& LeafTree::children(int node) const { return nodes_.at(node).children; }

int LeafTree::depth(int node) const { return nodes_.at(node).depth; }

bool LeafTree::is_leaf(int node) const { return nodes_.at(node).children.empty(); }

int LeafTree::leaf_label(int node) const { return nodes_.at(node).leaf_label; }

int LeafTree::meet(int leaf_a, int leaf_b) const {
    int a = leaf_node(leaf_a);
    int b = leaf_node(leaf_b);
    while (nodes_[a].depth > nodes_[b].depth) a = nodes_[a].parent;
    while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
    while (a != b) {
        a = nodes_[a].parent;
        b = nodes_[b].parent;
    }
    return a;
}

std::string LeafTree::to_text() const {
    auto render = [this](auto&& self, int node) -> std::string {
        if (is_leaf(node)) return std::to_string(nodes_[node].leaf_label);
        std::string out = "(";
        const auto& kids = nodes_[node].children;
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) out += ",";
            out += self(self, kids[i]);
        }
        out += ")";
        return out;
    };
    return render(render, root_);
}

std::pair<TernaryRel, FinOrder> c_of_leaves(const LeafTree& t) {
    const int n = t.leaf_count();
    // Meets are cheap but the dense constructor queries every triple, so
    // cache meet depths once.
    std::vector<std::vector<int>> meet_depth(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) meet_depth[a][b] = t.depth(t.meet(a, b));
    TernaryRel c(n, [meet_depth](int x, int y, int z) {
        if (y == z) return x != y;
        if (x == y || x == z) return false;
        return meet_depth[y][z] > meet_depth[x][y];
    });
    return {std::move(c), t.planar_order()};
}

// ---- UnrootedLeafTree ----

UnrootedLeafTree UnrootedLeafTree::from_edges(int leaf_count, int node_count,
                                              const std::vector<std::pair<int, int>>& edges) {
    if (leaf_count < 1 || node_count < leaf_count) {
        throw std::invalid_argument("UnrootedLeafTree: bad node counts");
    }
    if (static_cast<int>(edges.size()) != node_count - 1) {
        throw std::invalid_argument("UnrootedLeafTree: edge count must be node count - 1");
    }
    UnrootedLeafTree t;
    t.n_leaves_ = leaf_count;
    t.adj_.assign(node_count, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count || u == v) {
            throw std::invalid_argument("UnrootedLeafTree: edge endpoint out of range");
        }
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    // Connectivity plus the edge count above makes the graph a tree.
    std::vector<bool> seen(node_count, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        ++reached;
        for (int v : t.adj_[u])
            if (!seen[v]) {
                seen[v] = true;
                q.push(v);
            }
    }
    if (reached != node_count) throw std::invalid_argument("UnrootedLeafTree: not connected");
    for (int v = 0; v < node_count; ++v) {
        const int deg = static_cast<int>(t.adj_[v].size());
        if (v < leaf_count && deg != 1) {
            throw std::invalid_argument("UnrootedLeafTree: leaf node with degree != 1");
        }
        if (v >= leaf_count && deg < 3) {
            throw std::invalid_argument("UnrootedLeafTree: internal node with degree < 3");
        }
        std::sort(t.adj_[v].begin(), t.adj_[v].end());
    }
    return t;
}

int UnrootedLeafTree::internal_degree_bound() const {
    int most = 0;
    for (int v = n_leaves_; v < node_count(); ++v) most = std::max(most, degree(v));
    return most;
}

const std::vector<int>& UnrootedLeafTree::neighbors(int node) const { return adj_.at(node); }

std::vector<int> UnrootedLeafTree::path_nodes(int leaf_a, int leaf_b) const {
    if (leaf_a < 0 || leaf_a >= n_leaves_ || leaf_b < 0 || leaf_b >= n_leaves_) {
        throw std::invalid_argument("UnrootedLeafTree: leaf out of range");
    }
    if (leaf_a == leaf_b) return {leaf_a};
    std::vector<int> prev(node_count(), -1);
    std::queue<int> q;
    q.push(leaf_a);
    prev[leaf_a] = leaf_a;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == leaf_b) break;
        for (int v : adj_[u])
            if (prev[v] < 0) {
                prev[v] = u;
                q.push(v);
            }
    }
    std::vector<int> path;
    for (int v = leaf_b; v != leaf_a; v = prev[v]) path.push_back(v);
    path.push_back(leaf_a);
    std::reverse(path.begin(), path.end());
    return path;
}

nlohmann::json UnrootedLeafTree::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) edges.push_back({u, v});
    return {{"leaves", n_leaves_}, {"nodes", node_count()}, {"edges", edges}};
}

UnrootedLeafTree UnrootedLeafTree::from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return from_edges(j.at("leaves").get<int>(), j.at("nodes").get<int>(), edges);
}

QuaternaryRel d_of_leaves(const UnrootedLeafTree& t) {
    const int n = t.leaf_count();
    // Path node sets per leaf pair, as sorted vectors.
    std::vector<std::vector<std::vector<int>>> path(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            path[a][b] = t.path_nodes(a, b);
            std::sort(path[a][b].begin(), path[a][b].end());
        }
    auto disjoint = [](const std::vector<int>& p, const std::vector<int>& q) {
        size_t i = 0, j = 0;
        while (i < p.size() && j < q.size()) {
            if (p[i] == q[j]) return false;
            if (p[i] < q[j])
                ++i;
            else
                ++j;
        }
        return true;
    };
    return QuaternaryRel(n, [path, disjoint](int x, int y, int z, int w) {
        const bool distinct = x != y && x != z && x != w && y != z && y != w && z != w;
        if (!distinct) {
            // Degenerate clause: a collapsed pair not meeting the other pair.
            if (x == z || x == w || y == z || y == w) return false;
            return z == w || x == y;
        }
        return disjoint(path[x][y], path[z][w]);
    });
}

// ---- random fragments ----

namespace {

std::string random_shape(int n, int t, std::mt19937_64& rng) {
    if (n == 1) return "x";
    const int most = std::min(t, n);
    const int parts = 2 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(most - 1)));
    // A random composition of n into `parts` positive parts, via distinct
    // cut points in 1..n-1.
    std::vector<int> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    for (int i = n - 2; i > 0; --i) {
        std::swap(cuts[i], cuts[rand_below(rng, static_cast<std::uint64_t>(i + 1))]);
    }
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::string out = "(";
    int prev = 0;
    for (size_t i = 0; i < cuts.size(); ++i) {
        if (i) out += ",";
        out += random_shape(cuts[i] - prev, t, rng);
        prev = cuts[i];
    }
    out += ")";
    return out;
}

}  // namespace

LeafTree random_rooted_fragment(int n, int t, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_rooted_fragment: need at least one leaf");
    if (t < 2) throw std::invalid_argument("random_rooted_fragment: branching below 2");
    std::mt19937_64 rng(seed);
    return LeafTree::parse(random_shape(n, t, rng));
}

UnrootedLeafTree random_unrooted_fragment(int n, int t, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_unrooted_fragment: need at least 3 leaves");
    if (t < 3) throw std::invalid_argument("random_unrooted_fragment: degree bound below 3");
    std::mt19937_64 rng(seed);
    // Grow from a 3-star by repeated leaf insertion: split a random edge,
    // or (when the degree bound allows) attach to an internal node that
    // still has room.
    std::vector<std::vector<int>> adj(4);
    auto link = [&adj](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    link(0, 1);
    link(0, 2);
    link(0, 3);
    auto is_internal = [&adj](int v) { return adj[v].size() > 1; };
    for (int added = 3; added < n; ++added) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < static_cast<int>(adj.size()); ++u)
            for (int v : adj[u])
                if (u < v) edges.emplace_back(u, v);
        std::vector<int> open_nodes;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (is_internal(v) && static_cast<int>(adj[v].size()) < t) open_nodes.push_back(v);
        const std::uint64_t options = edges.size() + open_nodes.size();
        const std::uint64_t pick = rand_below(rng, options);
        if (pick < edges.size()) {
            const auto [u, v] = edges[pick];
            const int mid = static_cast<int>(adj.size());
            adj.emplace_back();
            const int leaf = static_cast<int>(adj.size());
            adj.emplace_back();
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
            adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
            link(u, mid);
            link(mid, v);
            link(mid, leaf);
        } else {
            const int host = open_nodes[pick - edges.size()];
            const int leaf = static_cast<int>(adj.size());
            adj.emplace_back();
            link(host, leaf);
        }
    }
    // Renumber: leaves first in id order, then internal nodes.
    const int m = static_cast<int>(adj.size());
    std::vector<int> new_id(m, -1);
    int next = 0;
    for (int v = 0; v < m; ++v)
        if (adj[v].size() == 1) new_id[v] = next++;
    for (int v = 0; v < m; ++v)
        if (adj[v].size() > 1) new_id[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(new_id[u], new_id[v]);
    return UnrootedLeafTree::from_edges(n, m, edges);
}

// ---- rationals and circle configurations ----

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

Rational circle_distance(const Rational& a, const Rational& b) {
    long long num = a.num * b.den - b.num * a.den;
    const long long den = a.den * b.den;
    num %= den;
    if (num < 0) num += den;
    return Rational(num, den);
}

namespace {

bool is_half(const Rational& r) { return 2 * r.num == r.den; }

bool below_half(const Rational& r) { return 2 * r.num < r.den; }

}  // namespace

CircleConfig::CircleConfig(std::vector<Rational> positions) : pos_(std::move(positions)) {
    for (const Rational& p : pos_) {
        if (p.num < 0 || !(p < Rational(1, 1))) {
            throw std::invalid_argument("CircleConfig: position outside [0,1)");
        }
    }
    for (size_t i = 0; i < pos_.size(); ++i)
        for (size_t j = i + 1; j < pos_.size(); ++j) {
            const Rational d = circle_distance(pos_[i], pos_[j]);
            if (d.num == 0) throw std::invalid_argument("CircleConfig: duplicate position");
            if (is_half(d)) throw std::invalid_argument("CircleConfig: antipodal pair");
        }
}

const Rational& CircleConfig::position(int i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("CircleConfig: index out of range");
    return pos_[i];
}

Tournament CircleConfig::tournament() const {
    const std::vector<Rational> pos = pos_;
    return Tournament(size(), [pos](int x, int y) {
        if (x == y) return false;
        return below_half(circle_distance(pos[y], pos[x]));
    });
}

TernaryRel CircleConfig::circular_order() const {
    const std::vector<Rational> pos = pos_;
    return TernaryRel(size(), [pos](int x, int y, int z) {
        if (x == y || x == z || y == z) return true;
        return circle_distance(pos[y], pos[x]) < circle_distance(pos[z], pos[x]);
    });
}

nlohmann::json CircleConfig::to_json() const {
    nlohmann::json positions = nlohmann::json::array();
    for (const Rational& p : pos_) positions.push_back(p.to_string());
    return {{"positions", positions}};
}

CircleConfig CircleConfig::from_json(const nlohmann::json& j) {
    std::vector<Rational> pos;
    for (const auto& p : j.at("positions")) pos.push_back(Rational::parse(p.get<std::string>()));
    return CircleConfig(std::move(pos));
}

CircleConfig build_circle_config(int n, long long denom_bound, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("build_circle_config: need at least one point");
    if (denom_bound < 2LL * n) {
        throw std::invalid_argument("build_circle_config: denominator bound below 2n");
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::set<long long> ticks;
        while (static_cast<int>(ticks.size()) < n) {
            ticks.insert(static_cast<long long>(rand_below(rng, denom_bound)));
        }
        bool antipodal = false;
        if (denom_bound % 2 == 0) {
            for (long long k : ticks)
                if (ticks.count((k + denom_bound / 2) % denom_bound) && !antipodal) {
                    antipodal = true;
                }
        }
        if (antipodal) continue;
        std::vector<Rational> pos;
        pos.reserve(n);
        for (long long k : ticks) pos.emplace_back(k, denom_bound);
        return CircleConfig(std::move(pos));
    }
    throw std::runtime_error("build_circle_config: retry budget exhausted");
}

TernaryRel r_of_circle(const CircleConfig& cfg) {
    const Tournament t = cfg.tournament();
    return TernaryRel(cfg.size(), [t](int x, int y, int z) {
        return (t.arc(y, x) && t.arc(y, z) && t.arc(x, z)) ||
               (t.arc(z, x) && t.arc(z, y) && t.arc(x, y));
    });
}

// ---- induced topology ----

std::string Topology::to_string() const {
    auto group_text = [this]() {
        std::string out;
        for (size_t i = 0; i < groups.size(); ++i) {
            if (i) out += "|";
            for (size_t j = 0; j < groups[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(groups[i][j]);
            }
        }
        return out;
    };
    switch (kind) {
        case Kind::Split:
            return "split " + group_text();
        case Kind::Star:
            return "star";
        case Kind::Caterpillar:
            return "caterpillar " + group_text();
        case Kind::Snowflake:
            return "snowflake " + group_text();
        case Kind::Other:
            return "other";
    }
    return "other";
}

Topology induced_topology(const UnrootedLeafTree& t, const std::vector<int>& leaves) {
    if (leaves.size() != 4 && leaves.size() != 6) {
        throw std::invalid_argument("induced_topology: need 4 or 6 leaves");
    }
    std::set<int> chosen(leaves.begin(), leaves.end());
    if (chosen.size() != leaves.size()) {
        throw std::invalid_argument("induced_topology: repeated leaf");
    }
    for (int l : leaves)
        if (l < 0 || l >= t.leaf_count()) {
            throw std::invalid_argument("induced_topology: leaf out of range");
        }

    // Steiner subtree: union of the paths from one chosen leaf to the rest.
    std::set<int> marked;
    for (int l : leaves) {
        const auto path = t.path_nodes(leaves[0], l);
        marked.insert(path.begin(), path.end());
    }
    std::map<int, std::vector<int>> adj;
    for (int u : marked)
        for (int v : t.neighbors(u))
            if (marked.count(v)) adj[u].push_back(v);

    // Suppress degree-2 vertices (chosen leaves all have degree 1).
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [u, nbrs] : adj) {
            if (nbrs.size() != 2 || chosen.count(u)) continue;
            const int a = nbrs[0], b = nbrs[1];
            auto drop = [&adj](int from, int gone) {
                auto& list = adj[from];
                list.erase(std::find(list.begin(), list.end(), gone));
            };
            drop(a, u);
            drop(b, u);
            adj[a].push_back(b);
            adj[b].push_back(a);
            adj.erase(u);
            changed = true;
            break;
        }
    }

    std::vector<int> internal;
    for (const auto& [u, nbrs] : adj)
        if (!chosen.count(u)) internal.push_back(u);

    auto leaf_groups_of = [&](const std::vector<int>& nodes) {
        std::vector<std::vector<int>> groups;
        for (int u : nodes) {
            std::vector<int> g;
            for (int v : adj[u])
                if (chosen.count(v)) g.push_back(v);
            std::sort(g.begin(), g.end());
            groups.push_back(std::move(g));
        }
        return groups;
    };

    Topology topo;
    if (leaves.size() == 4) {
        if (internal.size() == 1) {
            topo.kind = Topology::Kind::Star;
            std::vector<int> all(chosen.begin(), chosen.end());
            topo.groups = {all};
            return topo;
        }
        // Two internal nodes, two leaves each: a resolved split.
        topo.kind = Topology::Kind::Split;
        topo.groups = leaf_groups_of(internal);
        std::sort(topo.groups.begin(), topo.groups.end());
        return topo;
    }

    if (internal.size() != 4) {
        topo.kind = Topology::Kind::Other;
        std::vector<int> all(chosen.begin(), chosen.end());
        topo.groups = {all};
        return topo;
    }
    // Four internal nodes of degree 3: the shape is decided by how they
    // attach to each other, a path or a 3-star.
    std::map<int, std::vector<int>> inner;
    for (int u : internal)
        for (int v : adj[u])
            if (!chosen.count(v)) inner[u].push_back(v);
    int center = -1;
    std::vector<int> ends;
    for (int u : internal) {
        if (inner[u].size() == 3) center = u;
        if (inner[u].size() == 1) ends.push_back(u);
    }
    if (center >= 0) {
        topo.kind = Topology::Kind::Snowflake;
        std::vector<int> petals;
        for (int u : internal)
            if (u != center) petals.push_back(u);
        topo.groups = leaf_groups_of(petals);
        std::sort(topo.groups.begin(), topo.groups.end());
        return topo;
    }
    // Path order: walk from one end.
    std::vector<int> order = {ends[0]};
    std::set<int> used = {ends[0]};
    while (order.size() < 4) {
        for (int v : inner[order.back()])
            if (!used.count(v)) {
                order.push_back(v);
                used.insert(v);
                break;
            }
    }
    auto groups = leaf_groups_of(order);
    std::vector<std::vector<int>> reversed(groups.rbegin(), groups.rend());
    topo.kind = Topology::Kind::Caterpillar;
    topo.groups = std::min(groups, reversed);
    return topo;
}

// ---- conversions between rooted and unrooted ----

namespace {

UnrootedLeafTree unroot_impl(const LeafTree& t, bool add_root_leaf) {
    const int n = t.leaf_count();
    const int extra = add_root_leaf ? 1 : 0;
    const bool suppress_root = !add_root_leaf && t.children(t.root()).size() == 2;

    // Leaves come first in the node numbering, keeping their labels; the
    // optional root leaf takes label n.
    std::vector<int> new_id(t.node_count(), -1);
    for (int label = 0; label < n; ++label) new_id[t.leaf_node(label)] = label;
    int next = n + extra;
    for (int v = 0; v < t.node_count(); ++v) {
        if (t.is_leaf(v)) continue;
        if (suppress_root && v == t.root()) continue;
        new_id[v] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < t.node_count(); ++v) {
        const int p = t.parent(v);
        if (p < 0) continue;
        if (suppress_root && p == t.root()) continue;
        edges.emplace_back(new_id[v], new_id[p]);
    }
    if (suppress_root) {
        const auto& kids = t.children(t.root());
        edges.emplace_back(new_id[kids[0]], new_id[kids[1]]);
    }
    if (add_root_leaf) edges.emplace_back(n, new_id[t.root()]);
    return UnrootedLeafTree::from_edges(n + extra, next, edges);
}

}  // namespace

UnrootedLeafTree unroot(const LeafTree& t) { return unroot_impl(t, false); }

UnrootedLeafTree unroot_with_root_leaf(const LeafTree& t) { return unroot_impl(t, true); }

RerootedTree reroot_at_leaf(const UnrootedLeafTree& u, int leaf) {
    if (leaf < 0 || leaf >= u.leaf_count()) {
        throw std::invalid_argument("reroot_at_leaf: leaf out of range");
    }
    if (u.leaf_count() < 2) throw std::invalid_argument("reroot_at_leaf: nothing left to root");
    const int root = u.neighbors(leaf)[0];

    // Render the rest of the tree as a nested-list specification, ordering
    // children by the smallest original label underneath; the in-order
    // token list is exactly the label mapping.
    std::vector<int> order;
    auto render = [&u, &order, leaf](auto&& self, int node, int from) -> std::pair<int, std::string> {
        if (node < u.leaf_count()) {
            order.push_back(node);
            return {node, std::to_string(node)};
        }
        std::vector<int> saved_order = order;
        struct Piece {
            int smallest;
            std::vector<int> tokens;
            std::string text;
        };
        std::vector<Piece> pieces;
        for (int v : u.neighbors(node)) {
            if (v == from || v == leaf) continue;
            order.clear();
            auto [smallest, text] = self(self, v, node);
            pieces.push_back({smallest, order, text});
        }
        order = std::move(saved_order);
        std::sort(pieces.begin(), pieces.end(),
                  [](const Piece& a, const Piece& b) { return a.smallest < b.smallest; });
        std::string out = "(";
        int best = u.node_count();
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) out += ",";
            out += pieces[i].text;
            best = std::min(best, pieces[i].smallest);
            order.insert(order.end(), pieces[i].tokens.begin(), pieces[i].tokens.end());
        }
        out += ")";
        return {best, out};
    };
    order.clear();
    const auto [smallest, text] = render(render, root, -1);
    (void)smallest;
    RerootedTree out{LeafTree::parse(text), order};
    return out;
}

ClosedTree witness_closure(const LeafTree& t) {
    const int n = t.leaf_count();
    // Rebuild the specification with every leaf replaced by a cherry; the
    // original leaf keeps the left slot, so label i moves to 2i.
    auto render = [&t](auto&& self, int node) -> std::string {
        if (t.is_leaf(node)) {
            return "(" + std::to_string(t.leaf_label(node)) + ",w)";
        }
        std::string out = "(";
        const auto& kids = t.children(node);
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) out += ",";
            out += self(self, kids[i]);
        }
        out += ")";
        return out;
    };
    ClosedTree out{LeafTree::parse(render(render, t.root())), {}};
    out.original_image.resize(n);
    for (int i = 0; i < n; ++i) out.original_image[i] = 2 * i;
    return out;
}

}  // namespace sethom
