#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace sethom {

// Bijection on {0..n-1}, applied on the right: apply(x) is the image of x.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(image_.size()); }
    int apply(int x) const;

    // Composition in application order: then(h) maps x to h(this(x)).
    Permutation then(const Permutation& h) const;
    Permutation inverse() const;

    // Image of a vertex set, returned sorted.
    std::vector<int> apply_subset(const std::vector<int>& s) const;

    const std::vector<int>& image() const { return image_; }
    auto operator<=>(const Permutation&) const = default;

    nlohmann::json to_json() const;
    static Permutation from_json(const nlohmann::json& j);

private:
    std::vector<int> image_;
};

// Finite permutation group with its full element set materialized.
class PermGroup {
public:
    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    // Sorted lexicographically by image array; always contains the identity.
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const Permutation& p) const;

    nlohmann::json to_json() const;

private:
    friend PermGroup close_group(std::vector<Permutation> generators, std::size_t bound);

    PermGroup() = default;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
};

// Breadth-first closure of the generators. Throws if the generators have
// mixed degrees, the list is empty, or the element count exceeds bound.
PermGroup close_group(std::vector<Permutation> generators, std::size_t bound = 1000000);

// Hardcoded catalog: sym(n), alt(n), cyclic(m), dihedral(m), agl1(5),
// agl1(7), agl1(8), psl2(5) on 6 points, psl2(7) on 8 points, psl3(2) on
// the 7 nonzero vectors of F_2^3.
PermGroup named_group(const std::string& name);

// Partition of all k-subsets into orbits; orbits ordered by their least
// subset, subsets within an orbit in lexicographic order.
std::vector<std::vector<std::vector<int>>> orbits_on_subsets(const PermGroup& g, int k);

struct ActionProfile {
    // Largest t with a single orbit on ordered t-tuples of distinct points.
    int transitivity = 0;
    // The k <= 5 with a single orbit on k-subsets.
    std::vector<int> homogeneous;
    bool primitive = false;
    bool two_primitive = false;
    bool three_primitive = false;
    // Orbit counts on k-subsets for k <= 6.
    std::map<int, long long> subset_orbits;

    nlohmann::json to_json() const;
};

// Degree is capped at 12; everything is computed from the element list.
ActionProfile classify_action(const PermGroup& g);

}  // namespace sethom
