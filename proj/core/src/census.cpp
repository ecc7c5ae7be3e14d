#include "sethom/census.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sethom/groups.hpp"
#include "sethom/homtest.hpp"

namespace sethom {

nlohmann::json CensusEntry::to_json() const {
    return nlohmann::json{{"degree", degree},
                          {"source", source},
                          {"orbit_mask", orbit_mask},
                          {"hypergraph", hypergraph.to_json()},
                          {"set_homogeneous", set_homogeneous},
                          {"homogeneous", homogeneous},
                          {"aut_order", aut_order}};
}

std::vector<std::string> census_catalog(int degree) {
    switch (degree) {
        case 3: return {"sym(3)"};
        case 4: return {"alt(4)"};
        case 5: return {"agl1(5)"};
        case 6: return {"psl2(5)"};
        case 7: return {"agl1(7)", "psl3(2)"};
        case 8: return {"agl1(8)", "psl2(7)"};
        default: throw std::invalid_argument("degree outside catalog");
    }
}

KHypergraph canonical_form(const KHypergraph& h) {
    const int n = h.vertex_count();
    const int k = h.arity();
    if (n > 8) throw std::invalid_argument("canonical form capped at 8 vertices");
    // Null and complete hypergraphs are fixed by every relabeling.
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total = total * static_cast<std::size_t>(n - i) / (i + 1);
    if (h.edge_count() == 0 || h.edge_count() == total) return h;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    bool have_best = false;
    do {
        std::vector<std::vector<int>> mapped;
        mapped.reserve(h.edge_count());
        for (const auto& e : h.edges()) {
            std::vector<int> img(k);
            for (int i = 0; i < k; ++i) img[i] = perm[e[i]];
            std::sort(img.begin(), img.end());
            mapped.push_back(std::move(img));
        }
        std::sort(mapped.begin(), mapped.end());
        if (!have_best || mapped < best) {
            best = std::move(mapped);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    KHypergraph out(n, k);
    for (auto& e : best) out.add_edge(std::move(e));
    return out;
}

KHypergraph complement_hypergraph(const KHypergraph& h) {
    const int n = h.vertex_count();
    const int k = h.arity();
    KHypergraph out(n, k);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            if (!h.has_edge(pick)) out.add_edge(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<CensusEntry> census_orbit_unions(int degree, int arity) {
    if (arity != 3) throw std::invalid_argument("census covers arity 3 only");
    const std::vector<std::string> catalog = census_catalog(degree);

    std::map<std::set<std::vector<int>>, CensusEntry> seen;
    for (const std::string& name : catalog) {
        PermGroup g = named_group(name);
        auto orbits = orbits_on_subsets(g, arity);
        if (orbits.size() > 16) throw std::runtime_error("orbit union explosion");
        const unsigned long long masks = 1ull << orbits.size();
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            KHypergraph h(degree, arity);
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                if (!(mask >> i & 1)) continue;
                for (const auto& e : orbits[i]) h.add_edge(e);
            }
            KHypergraph canon = canonical_form(h);
            if (seen.count(canon.edges())) continue;

            PermGroup aut = automorphism_group(StructuredSet(canon), {RelTag::Edge});
            HomReport report = homogeneity_report(canon, aut);
            CensusEntry entry{degree,
                              name,
                              mask,
                              canon,
                              report.set_homogeneous,
                              report.homogeneous,
                              static_cast<long long>(aut.order())};
            seen.emplace(entry.hypergraph.edges(), std::move(entry));
        }
    }

    std::vector<CensusEntry> entries;
    entries.reserve(seen.size());
    for (auto& [edges, entry] : seen) entries.push_back(std::move(entry));
    std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.hypergraph.edge_count() != b.hypergraph.edge_count())
            return a.hypergraph.edge_count() < b.hypergraph.edge_count();
        return a.hypergraph.edges() < b.hypergraph.edges();
    });
    return entries;
}

std::string census_table(const std::vector<CensusEntry>& entries) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "degree" << std::setw(7) << "edges" << std::setw(7)
        << "|Aut|" << std::setw(9) << "set-hom" << std::setw(5) << "hom" << std::setw(10)
        << "source" << "mask\n";
    for (const CensusEntry& e : entries) {
        out << std::left << std::setw(7) << e.degree << std::setw(7)
            << e.hypergraph.edge_count() << std::setw(7) << e.aut_order << std::setw(9)
            << (e.set_homogeneous ? "yes" : "no") << std::setw(5) << (e.homogeneous ? "yes" : "no")
            << std::setw(10) << e.source << e.orbit_mask << "\n";
    }
    return out.str();
}

}  // namespace sethom
