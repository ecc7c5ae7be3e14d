#include "sethom/cases.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace sethom {

Label Label::s(int a, int b) {
    if (std::abs(a - b) < 2) throw std::invalid_argument("Label: S indices must differ by 2");
    return Label{Kind::S, a, b};
}

Label Label::t(int m) { return Label{Kind::T, m, 0}; }

std::string Label::text() const {
    if (kind == Kind::T) return "T" + std::to_string(a);
    return "S" + std::to_string(a) + std::to_string(b);
}

Label Label::parse(const std::string& text) {
    if (text.size() == 2 && text[0] == 'T' && std::isdigit(text[1])) {
        return Label::t(text[1] - '0');
    }
    if (text.size() == 3 && text[0] == 'S' && std::isdigit(text[1]) && std::isdigit(text[2])) {
        return Label::s(text[1] - '0', text[2] - '0');
    }
    throw std::invalid_argument("Label: cannot parse " + text);
}

bool label_valid(const Label& label, int k) {
    if (label.kind == Label::Kind::T) return label.a >= 1 && label.a <= k;
    return label.a >= 1 && label.a <= k + 1 && label.b >= 1 && label.b <= k + 1 &&
           std::abs(label.a - label.b) >= 2;
}

std::set<Label> realized_labels(int i, const std::vector<int>& J, int k) {
    if (k < 2) throw std::invalid_argument("realized_labels: arity too small");
    if (i < 1 || i > k) throw std::invalid_argument("realized_labels: edge count out of range");
    if (static_cast<int>(J.size()) != k + 1 - i) {
        throw std::invalid_argument("realized_labels: index set size mismatch");
    }
    std::set<int> inside(J.begin(), J.end());
    if (inside.size() != J.size()) {
        throw std::invalid_argument("realized_labels: repeated index");
    }
    for (int m : J) {
        if (m < 1 || m > k + 1) throw std::invalid_argument("realized_labels: index out of range");
    }

    std::set<Label> out;
    for (int a = 1; a <= k + 1; ++a) {
        if (inside.count(a)) continue;
        for (int b : inside) {
            if (std::abs(a - b) >= 2) out.insert(Label::s(a, b));
        }
    }
    for (int m = 1; m <= k; ++m) {
        if (inside.count(m) != inside.count(m + 1)) out.insert(Label::t(m));
    }
    return out;
}

nlohmann::json CaseAssignment::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t idx = 0; idx < choices.size(); ++idx) {
        nlohmann::json entry = {{"i", static_cast<int>(idx) + 1}};
        if (choices[idx]) {
            entry["J"] = *choices[idx];
        } else {
            entry["star"] = true;
        }
        out.push_back(entry);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> index_sets(int k, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(size);
    for (int v = 0; v < size; ++v) current[v] = v + 1;
    if (size == 0) return {{}};
    while (true) {
        out.push_back(current);
        int pos = size - 1;
        while (pos >= 0 && current[pos] == k + 1 - (size - 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int q = pos + 1; q < size; ++q) current[q] = current[q - 1] + 1;
    }
    return out;
}

}  // namespace

RealizationTable realization_table(int k) {
    if (k < 2) throw std::invalid_argument("realization_table: arity too small");
    RealizationTable table;
    table.k = k;
    for (int m = 1; m <= k; ++m) table.columns.push_back(Label::t(m));
    for (int a = 1; a <= k + 1; ++a) {
        for (int b = a + 2; b <= k + 1; ++b) {
            table.columns.push_back(Label::s(a, b));
            table.columns.push_back(Label::s(b, a));
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (const auto& J : index_sets(k, k + 1 - i)) {
            table.rows.push_back({i, J, realized_labels(i, J, k)});
        }
    }
    return table;
}

std::string RealizationTable::to_csv(bool include_t) const {
    std::string out;
    for (const auto& column : columns) {
        if (!include_t && column.kind == Label::Kind::T) continue;
        out += ",";
        out += column.text();
    }
    out += "\n";
    for (const auto& row : rows) {
        out += "P" + std::to_string(row.i) + "_";
        for (int m : row.J) out += std::to_string(m);
        for (const auto& column : columns) {
            if (!include_t && column.kind == Label::Kind::T) continue;
            out += row.marked.count(column) ? ",0" : ",";
        }
        out += "\n";
    }
    return out;
}

nlohmann::json RealizationTable::to_json() const {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : columns) cols.push_back(c.text());
    nlohmann::json out_rows = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json marked = nlohmann::json::array();
        for (const auto& label : row.marked) marked.push_back(label.text());
        out_rows.push_back({{"i", row.i}, {"J", row.J}, {"marked", marked}});
    }
    return {{"k", k}, {"columns", cols}, {"rows", out_rows}};
}

std::vector<CaseAssignment> solve_cover(int k, const std::set<Label>& required) {
    for (const auto& label : required) {
        if (!label_valid(label, k)) {
            throw std::invalid_argument("solve_cover: label out of range: " + label.text());
        }
    }

    // Options per i: concrete index sets in lexicographic order, then star.
    std::vector<std::vector<std::optional<std::vector<int>>>> options(k);
    for (int i = 1; i <= k; ++i) {
        for (auto& J : index_sets(k, k + 1 - i)) options[i - 1].emplace_back(std::move(J));
        options[i - 1].push_back(std::nullopt);
    }

    std::vector<CaseAssignment> found;
    CaseAssignment current;
    current.choices.resize(k);
    auto recurse = [&](auto&& self, int idx, std::set<Label> have) -> void {
        if (idx == k) {
            if (std::includes(have.begin(), have.end(), required.begin(), required.end())) {
                found.push_back(current);
            }
            return;
        }
        for (const auto& option : options[idx]) {
            current.choices[idx] = option;
            std::set<Label> next = have;
            if (option) {
                const auto labels = realized_labels(idx + 1, *option, k);
                next.insert(labels.begin(), labels.end());
            }
            self(self, idx + 1, std::move(next));
        }
    };
    recurse(recurse, 0, {});
    return found;
}

}  // namespace sethom
