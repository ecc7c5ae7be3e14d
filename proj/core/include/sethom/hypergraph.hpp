#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sethom/relations.hpp"
#include "sethom/trees.hpp"

namespace sethom {

// k-uniform hypergraph on vertices {0..n-1}. Edges are k-subsets held as
// sorted vertex vectors, so the set iterates in lexicographic order.
class KHypergraph {
public:
    KHypergraph(int n, int k);

    int vertex_count() const { return n_; }
    int arity() const { return k_; }

    // Accepts the vertices in any order; duplicates or out-of-range
    // vertices are rejected.
    void add_edge(std::vector<int> vertices);
    bool has_edge(std::vector<int> vertices) const;

    const std::set<std::vector<int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const KHypergraph&) const = default;

    nlohmann::json to_json() const;
    static KHypergraph from_json(const nlohmann::json& j);

private:
    std::vector<int> checked_edge(std::vector<int> vertices) const;

    int n_;
    int k_;
    std::set<std::vector<int>> edges_;
};

// The five hypergraph families, tagged by their defining carrier:
//   M3: rooted binary tree with its planar leaf order
//   N3: points on the unit circle
//   M4: rooted tree, leaf order ignored
//   N4: unrooted tree, internal degrees 3 or 4
//   M6: unrooted tree, internal degrees exactly 3
enum class Family { M3, N3, M4, N4, M6 };

int family_arity(Family f);
std::string family_name(Family f);
Family parse_family(const std::string& name);

using Carrier = std::variant<LeafTree, UnrootedLeafTree, CircleConfig>;

// Dispatches on the family tag; throws if the carrier kind does not match.
KHypergraph derive_edges(Family f, const Carrier& carrier);

// A triple is an edge when its planar-order minimum x satisfies C(x;y,z).
KHypergraph derive_edges_m3(const LeafTree& t);

// A triple is an edge when it lies in an open half circle, detected by a
// circular gap exceeding 1/2; equivalently it satisfies R under some
// ordering of the triple.
KHypergraph derive_edges_n3(const CircleConfig& cfg);

// A quartet is an edge when it splits into pairs {x1,x2},{y1,y2} with
// C(x_i;y1,y2) and C(y_i;x1,x2) for i = 1,2.
KHypergraph derive_edges_m4(const LeafTree& t);

// A quartet is an edge when some pairing satisfies D, i.e. the induced
// subtree resolves into a split.
KHypergraph derive_edges_n4(const UnrootedLeafTree& t);

// A sextet is an edge when its induced subtree is a caterpillar.
KHypergraph derive_edges_m6(const UnrootedLeafTree& t);

// Edge set complemented within all k-subsets of the vertex set.
KHypergraph complement(const KHypergraph& h);

// Tally of m-subsets by the number of edges they carry.
std::map<int, long long> edge_distribution(const KHypergraph& h, int m);

// Visits every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace sethom
