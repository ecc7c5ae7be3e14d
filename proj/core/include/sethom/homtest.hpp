#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sethom/groups.hpp"
#include "sethom/hypergraph.hpp"
#include "sethom/relations.hpp"
#include "sethom/trees.hpp"

namespace sethom {

// Relations a structure can carry besides its hypergraph edges.
enum class RelTag { Edge, Order, C, D, R };

std::string rel_tag_name(RelTag t);

using RespectSet = std::set<RelTag>;

// Hypergraph with optional companion relations on the same vertex range.
struct StructuredSet {
    KHypergraph hyper;
    std::optional<FinOrder> order;
    std::optional<TernaryRel> c;
    std::optional<QuaternaryRel> d;
    std::optional<TernaryRel> r;

    explicit StructuredSet(KHypergraph h) : hyper(std::move(h)) {}

    int size() const { return hyper.vertex_count(); }
    bool has(RelTag t) const;

    // Substructure on the given distinct vertices, relabeled 0..m-1 in
    // ascending vertex order; every companion restricts along.
    StructuredSet induced(std::vector<int> vertices) const;
};

// Hypergraph plus the relations its carrier defines: M3 carries C and the
// planar order, M4 carries C, M6 and N4 carry D, N3 carries R.
StructuredSet structured_from_family(Family f, const Carrier& carrier);

// The companion relations compared by key_lemma_trial for each family.
RespectSet family_respect(Family f);

// Bijection a -> b preserving every relation in respect, or nullopt after
// exhaustive search. Candidate images are pruned by per-vertex signatures
// and tried lowest-first, so the returned map is lexicographically least.
// The result is re-verified on all tuples before being returned. Vertex
// count mismatch yields nullopt; a respect tag missing from either side,
// or an arity mismatch under Edge, is an input error.
std::optional<std::vector<int>> find_isomorphism(const StructuredSet& a,
                                                 const StructuredSet& b,
                                                 const RespectSet& respect);

// All vertex permutations preserving the respected relations; exhaustive,
// capped at 10 vertices.
PermGroup automorphism_group(const StructuredSet& s, const RespectSet& respect);

// Isomorphic substructure pair no group element maps onto each other, or an
// isomorphism between substructures that no group element extends. Vertex
// lists are sorted; iso[i] gives the image of u[i].
struct HomCertificate {
    std::vector<int> u;
    std::vector<int> v;
    std::vector<int> iso;

    nlohmann::json to_json() const;
};

struct HomReport {
    bool set_homogeneous = false;
    bool homogeneous = false;
    // Indexed by substructure size t = 1..n; entry 0 is unused and true.
    std::vector<bool> set_homogeneous_at;
    std::vector<bool> homogeneous_at;
    std::optional<HomCertificate> set_certificate;
    std::optional<HomCertificate> extension_certificate;

    nlohmann::json to_json() const;
};

// Exhaustive homogeneity analysis of a hypergraph against its own full
// automorphism group; capped at 8 vertices.
HomReport homogeneity_report(const KHypergraph& h);

// Same analysis against a supplied group acting on the vertices: orbits and
// extensions are taken inside g instead of the full automorphism group.
HomReport homogeneity_report(const KHypergraph& h, const PermGroup& g);

// Injective maps a -> b inducing a on its image (edges and non-edges both
// preserved), in lexicographic image order.
std::vector<std::vector<int>> induced_embeddings(const KHypergraph& a, const KHypergraph& b);

// Result of the twisted-amalgamation check over a finite class, closed
// under substructure, of hypergraphs on at most 5 vertices each. A failing
// instance names class members by index and the two embeddings from member
// a into members b1 and b2.
struct TapInstance {
    bool holds = false;

    struct Failure {
        int a = 0;
        int b1 = 0;
        int b2 = 0;
        std::vector<int> f1;
        std::vector<int> f2;
    };
    std::optional<Failure> failure;

    long long instances_checked = 0;
    // Instances whose free amalgam outgrows the largest class member are
    // outside the class's reach and are not counted against it.
    long long instances_skipped = 0;

    nlohmann::json to_json() const;
};

TapInstance check_tap(const std::vector<KHypergraph>& structures);

// True when some h in Aut(class[a]), target d in the class and embeddings
// g1: class[b1] -> d, g2: class[b2] -> d satisfy g1(f1(x)) = g2(f2(h(x)))
// for every vertex x of class[a]. This is the inner test of check_tap,
// exposed so failing instances can be re-verified independently.
bool tap_witness_exists(const std::vector<KHypergraph>& structures, int a, int b1, int b2,
                        const std::vector<int>& f1, const std::vector<int>& f2);

// Sampled check that two core subsets of a generated fragment are
// edge-isomorphic exactly when their underlying structures are isomorphic.
struct KeyLemmaReport {
    Family family = Family::M3;
    std::vector<int> core_sizes;
    int trials = 0;
    long long pairs_checked = 0;
    long long edge_isomorphic_pairs = 0;

    struct Violation {
        int trial = 0;
        std::vector<int> u;
        std::vector<int> v;
        bool edge_iso = false;
        bool structure_iso = false;
    };
    std::vector<Violation> violations;

    nlohmann::json to_json() const;
};

// Per trial one carrier is generated from the trial seed and, for each core
// size, one subset pair is drawn and compared under {Edge} versus the
// family's structural relations. Violations in either direction are
// recorded with the offending subsets.
KeyLemmaReport key_lemma_trial(Family family, const std::vector<int>& core_sizes, int trials,
                               std::uint64_t seed);

}  // namespace sethom
