#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sethom {

// Outcome of the seven-vertex tournament orientation search. The trace is a
// line-oriented log: one start arc, witness introduction, forced arc,
// branch decision, or contradiction per line, with vertices named 1..7.
struct TournamentSearchResult {
    bool unsat = false;
    std::vector<std::string> trace;
    // Arcs tail -> head of a completed tournament when one exists.
    std::vector<std::pair<int, int>> model;

    std::string trace_text() const;
};

// Searches for a tournament on up to 7 vertices extending the start
// configuration 1 -> {2,3,4}, 2 -> 3 -> 4 -> 2 under two witness rules and
// one global constraint:
//   W1  a scheduled arc u -> v must lie on a directed triangle (a fresh
//       witness w with v -> w -> u is introduced when none exists);
//   W2  once some arc lies on two triangles, scheduled arcs need two;
//   no directed triangle may sit inside any vertex's in-neighbourhood.
// Propagation forces the opposite of any orientation that would complete a
// forbidden pattern, checking the lower orientation of each pair first and
// deferring the conflict scan to propagation fixpoints; remaining free
// pairs are settled by exhaustive branch and prune. With the global
// constraint dropped the search completes the witness configuration to a
// full 21-arc tournament instead.
TournamentSearchResult tournament_forcing_search(bool forbid_in_neighbourhood_cycles = true);

}  // namespace sethom
