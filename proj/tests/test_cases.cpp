#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "sethom/cases.hpp"

using namespace sethom;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(SETHOM_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Abstract ordered (k+1)-set realizing P^i_J: the edges are exactly the
// k-subsets omitting position m for each m outside J. The S/T definitions
// are then scanned literally over that edge list.
std::set<Label> brute_force_labels(int i, const std::vector<int>& J, int k) {
    std::set<int> inside(J.begin(), J.end());
    std::set<int> omitted_is_edge;
    for (int m = 1; m <= k + 1; ++m) {
        if (!inside.count(m)) omitted_is_edge.insert(m);
    }
    REQUIRE(static_cast<int>(omitted_is_edge.size()) == i);

    std::set<Label> out;
    for (int a = 1; a <= k + 1; ++a) {
        for (int b = 1; b <= k + 1; ++b) {
            if (std::abs(a - b) < 2) continue;
            if (omitted_is_edge.count(a) && !omitted_is_edge.count(b)) {
                out.insert(Label::s(a, b));
            }
        }
    }
    for (int m = 1; m <= k; ++m) {
        if (omitted_is_edge.count(m) != omitted_is_edge.count(m + 1)) out.insert(Label::t(m));
    }
    return out;
}

std::set<Label> all_s_labels(int k) {
    std::set<Label> out;
    for (int a = 1; a <= k + 1; ++a)
        for (int b = 1; b <= k + 1; ++b)
            if (std::abs(a - b) >= 2) out.insert(Label::s(a, b));
    return out;
}

Label reverse_label(const Label& label, int k) {
    if (label.kind == Label::Kind::T) return Label::t(k + 1 - label.a);
    return Label::s(k + 2 - label.a, k + 2 - label.b);
}

}  // namespace

TEST_CASE("labels parse, print and validate", "[cases]") {
    REQUIRE(Label::s(1, 3).text() == "S13");
    REQUIRE(Label::t(2).text() == "T2");
    REQUIRE(Label::parse("S42") == Label::s(4, 2));
    REQUIRE(Label::parse("T4") == Label::t(4));
    REQUIRE_THROWS_AS(Label::parse("S12"), std::invalid_argument);
    REQUIRE_THROWS_AS(Label::parse("X13"), std::invalid_argument);
    REQUIRE(label_valid(Label::s(1, 4), 3));
    REQUIRE_FALSE(label_valid(Label::s(1, 5), 3));
    REQUIRE_FALSE(label_valid(Label::t(4), 3));
    REQUIRE(label_valid(Label::t(4), 4));
}

TEST_CASE("realized_labels matches the worked rows", "[cases]") {
    REQUIRE(realized_labels(1, {1, 2, 3, 4}, 4) ==
            std::set<Label>{Label::t(4), Label::s(5, 1), Label::s(5, 2), Label::s(5, 3)});
    REQUIRE(realized_labels(2, {1, 2}, 3) ==
            std::set<Label>{Label::t(2), Label::s(3, 1), Label::s(4, 1), Label::s(4, 2)});
    REQUIRE(realized_labels(3, {4}, 3) ==
            std::set<Label>{Label::t(3), Label::s(1, 4), Label::s(2, 4)});

    REQUIRE_THROWS_AS(realized_labels(0, {1, 2, 3, 4}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(realized_labels(2, {1}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(realized_labels(2, {1, 5}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(realized_labels(2, {1, 1}, 3), std::invalid_argument);
}

TEST_CASE("realized_labels agrees with the abstract-set scan", "[cases]") {
    for (int k = 3; k <= 5; ++k) {
        const auto table = realization_table(k);
        for (const auto& row : table.rows) {
            INFO("k=" << k << " i=" << row.i);
            REQUIRE(row.marked == brute_force_labels(row.i, row.J, k));
        }
    }
}

TEST_CASE("realization tables reproduce the embedded fixtures", "[cases]") {
    SECTION("arity three") {
        const auto table = realization_table(3);
        REQUIRE(table.rows.size() == 14);
        REQUIRE(table.to_csv(false) == read_fixture("table1.csv"));

        // Row P1_234 marks exactly S13 and S14 among the S columns.
        const auto& row = table.rows[3];
        REQUIRE(row.i == 1);
        REQUIRE(row.J == std::vector<int>{2, 3, 4});
        std::set<Label> s_marked;
        for (const auto& label : row.marked)
            if (label.kind == Label::Kind::S) s_marked.insert(label);
        REQUIRE(s_marked == std::set<Label>{Label::s(1, 3), Label::s(1, 4)});
    }
    SECTION("arity four") {
        const auto table = realization_table(4);
        REQUIRE(table.rows.size() == 30);
        REQUIRE(table.to_csv(true) == read_fixture("table2.csv"));

        for (const auto& row : table.rows) {
            if (row.i == 2 && row.J == std::vector<int>{1, 3, 5}) {
                REQUIRE(row.marked ==
                        std::set<Label>{Label::t(1), Label::t(2), Label::t(3), Label::t(4),
                                        Label::s(4, 1), Label::s(2, 5)});
            }
        }
    }
    SECTION("serialization shape") {
        const auto j = realization_table(3).to_json();
        REQUIRE(j.at("k") == 3);
        REQUIRE(j.at("rows").size() == 14);
        REQUIRE(j.at("columns").size() == 9);
    }
}

TEST_CASE("cover solving reproduces the two case splits and the impossibility", "[cases]") {
    SECTION("arity three with all six separation labels") {
        const auto solutions = solve_cover(3, all_s_labels(3));
        REQUIRE(solutions.size() == 2);

        const auto& first = solutions[0];
        REQUIRE(first.choices[0] == std::vector<int>{1, 2, 3});
        REQUIRE(first.choices[1] == std::vector<int>{3, 4});
        REQUIRE(first.choices[2] == std::vector<int>{1});

        const auto& second = solutions[1];
        REQUIRE(second.choices[0] == std::vector<int>{2, 3, 4});
        REQUIRE(second.choices[1] == std::vector<int>{1, 2});
        REQUIRE(second.choices[2] == std::vector<int>{4});
    }
    SECTION("arity four with all separation and threshold labels is impossible") {
        auto required = all_s_labels(4);
        for (int m = 1; m <= 4; ++m) required.insert(Label::t(m));
        REQUIRE(solve_cover(4, required).empty());
    }
    SECTION("empty requirement accepts every assignment") {
        const auto all3 = solve_cover(3, {});
        REQUIRE(all3.size() == 175);
        // The final assignment in enumeration order is all-star.
        for (const auto& choice : all3.back().choices) REQUIRE_FALSE(choice.has_value());
        REQUIRE(solve_cover(4, {}).size() == 4356);
    }
    SECTION("invalid labels rejected") {
        REQUIRE_THROWS_AS(solve_cover(3, {Label::t(4)}), std::invalid_argument);
    }
    SECTION("assignment serialization") {
        const auto solutions = solve_cover(3, all_s_labels(3));
        const auto j = solutions[0].to_json();
        REQUIRE(j.size() == 3);
        REQUIRE(j[0].at("J") == std::vector<int>{1, 2, 3});
        const auto all3 = solve_cover(3, {});
        REQUIRE(all3.back().to_json()[2].at("star") == true);
    }
}

TEST_CASE("index reversal is a symmetry of the tables and the solver", "[cases]") {
    for (int k = 3; k <= 5; ++k) {
        const auto table = realization_table(k);
        for (const auto& row : table.rows) {
            std::vector<int> reversed;
            for (int m : row.J) reversed.push_back(k + 2 - m);
            std::sort(reversed.begin(), reversed.end());
            std::set<Label> expected;
            for (const auto& label : row.marked) expected.insert(reverse_label(label, k));
            REQUIRE(realized_labels(row.i, reversed, k) == expected);
        }
    }

    // The two arity-3 cover solutions are swapped by the reversal.
    const auto solutions = solve_cover(3, all_s_labels(3));
    for (std::size_t idx : {0u, 1u}) {
        const auto& from = solutions[idx];
        const auto& to = solutions[1 - idx];
        for (int i = 0; i < 3; ++i) {
            std::vector<int> reversed;
            for (int m : *from.choices[i]) reversed.push_back(5 - m);
            std::sort(reversed.begin(), reversed.end());
            REQUIRE(reversed == *to.choices[i]);
        }
    }
}
