#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace sethom {

// Column label of the realization tables: T(m) with m in {1..k}, or S(a,b)
// with a,b in {1..k+1} and |a-b| >= 2.
struct Label {
    enum class Kind { T, S };

    Kind kind = Kind::T;
    int a = 0;
    int b = 0;

    static Label s(int a, int b);
    static Label t(int m);

    // "S13", "T2"; indices are single digits throughout the supported range.
    std::string text() const;
    static Label parse(const std::string& text);

    auto operator<=>(const Label&) const = default;
};

bool label_valid(const Label& label, int k);

// Labels forced by condition P^i_J on an ordered (k+1)-set with exactly i
// edges meeting in the positions indexed by J: S(a,b) when a is outside J,
// b inside, |a-b| >= 2; T(m) when exactly one of m, m+1 lies in J.
std::set<Label> realized_labels(int i, const std::vector<int>& J, int k);

// One condition per edge count i in {1..k}: a concrete index set, or star
// for "no (k+1)-set with i edges", which forces nothing.
struct CaseAssignment {
    std::vector<std::optional<std::vector<int>>> choices;

    nlohmann::json to_json() const;
};

struct RealizationRow {
    int i = 0;
    std::vector<int> J;
    std::set<Label> marked;
};

struct RealizationTable {
    int k = 0;
    std::vector<Label> columns;
    std::vector<RealizationRow> rows;

    // Cells are "0" for marked and empty otherwise; include_t drops the T
    // columns, matching the arity-3 table as printed.
    std::string to_csv(bool include_t = true) const;
    nlohmann::json to_json() const;
};

// All rows (i, J) in lexicographic order with their realized labels;
// columns are T1..Tk then the S pairs ordered by the smaller index.
RealizationTable realization_table(int k);

// Exhaustive scan of all assignments; keeps those whose union of realized
// labels covers required. Output preserves the enumeration order: concrete
// index sets lexicographically, star last, nested by i.
std::vector<CaseAssignment> solve_cover(int k, const std::set<Label>& required);

}  // namespace sethom
