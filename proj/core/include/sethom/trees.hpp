#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sethom/relations.hpp"

namespace sethom {

// Rooted planar leaf tree. Leaves carry labels 0..n-1 in left-to-right
// planar order; every internal node has at least two children.
class LeafTree {
public:
    // Builds from nested-list text such as "((0,1),(2,3))" or "((a,b),c)".
    // Leaf tokens are placeholders only: labels are assigned by position.
    // Unary groups and empty specifications are rejected.
    static LeafTree parse(const std::string& text);

    int leaf_count() const { return static_cast<int>(leaf_node_.size()); }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int internal_count() const { return node_count() - leaf_count(); }
    int root() const { return root_; }

    // Largest child count over internal nodes.
    int branching() const;
    bool is_binary() const { return branching() <= 2; }

    int leaf_node(int label) const;
    int parent(int node) const;
    const std::vector<int>& children(int node) const;
    int depth(int node) const;
    bool is_leaf(int node) const;
    int leaf_label(int node) const;

    // Deepest common ancestor of two leaves, as a node index.
    int meet(int leaf_a, int leaf_b) const;

    // The planar order: label i sits at position i by construction.
    FinOrder planar_order() const { return FinOrder::identity(leaf_count()); }

    std::string to_text() const;

private:
    struct Node {
        int parent = -1;
        std::vector<int> children;
        int leaf_label = -1;
        int depth = 0;
    };

    std::vector<Node> nodes_;
    int root_ = 0;
    std::vector<int> leaf_node_;
};

// Unrooted tree with labeled leaves. Nodes are 0..node_count-1 and the
// leaves are exactly nodes 0..leaf_count-1 (label = node id); every
// internal node has degree at least 3.
class UnrootedLeafTree {
public:
    static UnrootedLeafTree from_edges(int leaf_count, int node_count,
                                       const std::vector<std::pair<int, int>>& edges);

    int leaf_count() const { return n_leaves_; }
    int node_count() const { return static_cast<int>(adj_.size()); }

    // Largest internal degree (0 when there are no internal nodes).
    int internal_degree_bound() const;

    const std::vector<int>& neighbors(int node) const;
    int degree(int node) const { return static_cast<int>(neighbors(node).size()); }

    // Nodes on the tree path between two leaves, endpoints included.
    std::vector<int> path_nodes(int leaf_a, int leaf_b) const;

    nlohmann::json to_json() const;
    static UnrootedLeafTree from_json(const nlohmann::json& j);

private:
    int n_leaves_ = 0;
    std::vector<std::vector<int>> adj_;
};

// C(x;y,z) for distinct leaves iff meet(y,z) lies strictly below meet(x,y);
// C(x;y,y) iff x != y. The second component is the planar leaf order.
std::pair<TernaryRel, FinOrder> c_of_leaves(const LeafTree& t);

// D(x,y;z,w) for distinct leaves iff the paths x-y and z-w are
// vertex-disjoint; repeated arguments follow the degenerate clause of D4
// (a pair collapsed to one point not shared with the other pair).
QuaternaryRel d_of_leaves(const UnrootedLeafTree& t);

// Random shapes by recursive splitting (rooted) and random leaf insertion
// (unrooted); deterministic for a fixed seed. Rooted trees have child
// counts in [2,t]; unrooted trees have internal degrees in [3,t].
LeafTree random_rooted_fragment(int n, int t, std::uint64_t seed);
UnrootedLeafTree random_unrooted_fragment(int n, int t, std::uint64_t seed);

// Exact rational in [0,1) with positive denominator, kept reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    static Rational parse(const std::string& text);  // "p/q" or "p"
    std::string to_string() const;

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
};

// Difference (a - b) wrapped into [0,1).
Rational circle_distance(const Rational& a, const Rational& b);

// Distinct points on the unit circle, no two antipodal, as exact rationals.
class CircleConfig {
public:
    explicit CircleConfig(std::vector<Rational> positions);

    int size() const { return static_cast<int>(pos_.size()); }
    const Rational& position(int i) const;
    const std::vector<Rational>& positions() const { return pos_; }

    // arc(x,y) iff the clockwise distance from x to y is below 1/2. The
    // no-antipodal invariant keeps this total and antisymmetric.
    Tournament tournament() const;

    // K(x,y,z) for distinct points iff y comes before z going clockwise
    // from x; any repeated argument makes it hold, matching the relation
    // derived from a linear order.
    TernaryRel circular_order() const;

    nlohmann::json to_json() const;
    static CircleConfig from_json(const nlohmann::json& j);

private:
    std::vector<Rational> pos_;
};

// Samples n distinct positions with denominator denom_bound, rejecting
// antipodal pairs; deterministic per seed, bounded retries.
CircleConfig build_circle_config(int n, long long denom_bound, std::uint64_t seed);

// R(x;y,z) iff (y->x and y->z and x->z) or (z->x and z->y and x->y) in the
// config's tournament: x sits between y and z inside a common half circle.
TernaryRel r_of_circle(const CircleConfig& cfg);

// Shape of the induced subtree on a chosen 4- or 6-subset of leaves after
// suppressing degree-2 vertices.
struct Topology {
    enum class Kind { Split, Star, Caterpillar, Snowflake, Other };

    Kind kind = Kind::Other;
    // Witnessing leaf groups: the two sides of a split; the three cherries
    // of a snowflake; the end-pair, single, single, end-pair sequence of a
    // caterpillar in path order; all leaves in one group otherwise.
    std::vector<std::vector<int>> groups;

    std::string to_string() const;
};

Topology induced_topology(const UnrootedLeafTree& t, const std::vector<int>& leaves);

// Forgets root and planar order; a two-child root is suppressed.
UnrootedLeafTree unroot(const LeafTree& t);

// Same, but with an extra leaf (label n) attached at the root, which keeps
// the root as an internal node of degree >= 3.
UnrootedLeafTree unroot_with_root_leaf(const LeafTree& t);

struct RerootedTree {
    LeafTree tree;
    // original_label[new_label] = leaf label in the unrooted tree.
    std::vector<int> original_label;
};

// Roots the tree at the internal node next to the chosen leaf and drops
// that leaf; children are ordered by smallest original label underneath.
RerootedTree reroot_at_leaf(const UnrootedLeafTree& u, int leaf);

struct ClosedTree {
    LeafTree tree;
    // original_image[old_label] = label of the same leaf in the new tree.
    std::vector<int> original_image;
};

// Gives every leaf a cherry mate by splitting its pendant edge. Downstream
// reconstruction formulas need such a companion next to every point; one
// pass doubles the leaf count and makes every original pair decidable.
ClosedTree witness_closure(const LeafTree& t);

}  // namespace sethom
