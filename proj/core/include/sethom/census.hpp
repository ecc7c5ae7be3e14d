#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sethom/hypergraph.hpp"

namespace sethom {

// One candidate from the orbit-union enumeration. The hypergraph is stored
// in canonical form; source and orbit_mask record the first catalog group
// and orbit union that produced it.
struct CensusEntry {
    int degree = 0;
    std::string source;
    unsigned long long orbit_mask = 0;
    KHypergraph hypergraph;
    bool set_homogeneous = false;
    bool homogeneous = false;
    long long aut_order = 0;

    nlohmann::json to_json() const;
};

// Minimal 2-transitive groups per degree, as named_group keys. A finite
// set-homogeneous hypergraph has 2-transitive automorphism group, and any
// 2-transitive group contains a minimal one, so unions of the catalog
// groups' orbits on 3-subsets exhaust the candidates.
std::vector<std::string> census_catalog(int degree);

// Lexicographically least edge set over all relabelings of {0..n-1}.
KHypergraph canonical_form(const KHypergraph& h);

// Edges exchanged with non-edges.
KHypergraph complement_hypergraph(const KHypergraph& h);

// Every orbit union of every catalog group, classified and deduplicated up
// to isomorphism. Entries are sorted by edge count, then by edge set.
std::vector<CensusEntry> census_orbit_unions(int degree, int arity = 3);

// Fixed-width summary, one row per entry.
std::string census_table(const std::vector<CensusEntry>& entries);

}  // namespace sethom
