#include "sethom/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sethom/hypergraph.hpp"

namespace sethom {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= degree() || seen[v]) {
            throw std::invalid_argument("Permutation: image is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    std::vector<int> image(degree);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

int Permutation::apply(int x) const {
    if (x < 0 || x >= degree()) throw std::invalid_argument("Permutation: point out of range");
    return image_[x];
}

Permutation Permutation::then(const Permutation& h) const {
    if (h.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> image(image_.size());
    for (int x = 0; x < degree(); ++x) image[x] = h.image_[image_[x]];
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> image(image_.size());
    for (int x = 0; x < degree(); ++x) image[image_[x]] = x;
    return Permutation(std::move(image));
}

std::vector<int> Permutation::apply_subset(const std::vector<int>& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(apply(v));
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json Permutation::to_json() const { return image_; }

Permutation Permutation::from_json(const nlohmann::json& j) {
    return Permutation(j.get<std::vector<int>>());
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

nlohmann::json PermGroup::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : gens_) gens.push_back(g.to_json());
    return {{"degree", degree_}, {"generators", gens}};
}

PermGroup close_group(std::vector<Permutation> generators, std::size_t bound) {
    if (generators.empty()) {
        throw std::invalid_argument("close_group: need at least one generator");
    }
    const int degree = generators.front().degree();
    for (const auto& g : generators) {
        if (g.degree() != degree) throw std::invalid_argument("close_group: degree mismatch");
    }

    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    seen.insert(Permutation::identity(degree));
    queue.push_back(Permutation::identity(degree));
    while (!queue.empty()) {
        const Permutation current = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation next = current.then(g);
            if (seen.insert(next).second) {
                if (seen.size() > bound) {
                    throw std::runtime_error("close_group: element budget exceeded");
                }
                queue.push_back(std::move(next));
            }
        }
    }

    PermGroup out;
    out.degree_ = degree;
    out.gens_ = std::move(generators);
    out.elements_.assign(seen.begin(), seen.end());
    return out;
}

namespace {

Permutation cycle_permutation(int degree, const std::vector<int>& cycle) {
    std::vector<int> image(degree);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(image));
}

Permutation from_map(int degree, const std::function<int(int)>& f) {
    std::vector<int> image(degree);
    for (int x = 0; x < degree; ++x) image[x] = f(x);
    return Permutation(std::move(image));
}

std::vector<int> full_cycle(int degree) {
    std::vector<int> c(degree);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

std::vector<Permutation> sym_generators(int n) {
    if (n < 1) throw std::invalid_argument("named_group: sym degree must be positive");
    if (n == 1) return {Permutation::identity(1)};
    if (n == 2) return {cycle_permutation(2, {0, 1})};
    return {cycle_permutation(n, {0, 1}), cycle_permutation(n, full_cycle(n))};
}

std::vector<Permutation> alt_generators(int n) {
    if (n < 1) throw std::invalid_argument("named_group: alt degree must be positive");
    if (n <= 2) return {Permutation::identity(n)};
    if (n == 3) return {cycle_permutation(3, {0, 1, 2})};
    if (n % 2 == 1) return {cycle_permutation(n, {0, 1, 2}), cycle_permutation(n, full_cycle(n))};
    std::vector<int> tail(n - 1);
    std::iota(tail.begin(), tail.end(), 1);
    return {cycle_permutation(n, {0, 1, 2}), cycle_permutation(n, tail)};
}

// Affine maps over F_q for prime q: x+1 together with multiplication by a
// primitive root.
std::vector<Permutation> agl1_prime_generators(int q, int root) {
    return {from_map(q, [q](int x) { return (x + 1) % q; }),
            from_map(q, [q, root](int x) { return (root * x) % q; })};
}

// F_8 as bit vectors b2 b1 b0 over F_2[t]/(t^3+t+1): translation by 1 is a
// bit flip, multiplication by t shifts with feedback on the low bits.
std::vector<Permutation> agl1_8_generators() {
    auto mul_t = [](int v) {
        const int b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
        return (b1 << 2) | ((b0 ^ b2) << 1) | b2;
    };
    return {from_map(8, [](int x) { return x ^ 1; }), from_map(8, mul_t)};
}

// Projective line over F_q with the point q standing for infinity:
// z -> z+1 and z -> -1/z.
std::vector<Permutation> psl2_generators(int q) {
    auto inv = [q](int z) {
        for (int u = 1; u < q; ++u)
            if ((z * u) % q == 1) return u;
        throw std::logic_error("psl2: no inverse");
    };
    auto neg_recip = [q, inv](int z) {
        if (z == q) return 0;
        if (z == 0) return q;
        return (q - inv(z)) % q;
    };
    return {from_map(q + 1, [q](int z) { return z == q ? q : (z + 1) % q; }),
            from_map(q + 1, neg_recip)};
}

// GL(3,2) on the 7 nonzero vectors of F_2^3, labelled v-1. Basis
// permutations plus one transvection generate the whole group.
std::vector<Permutation> psl3_2_generators() {
    auto on_vectors = [](const std::function<int(int)>& f) {
        return from_map(7, [f](int x) { return f(x + 1) - 1; });
    };
    auto rotate = [](int v) { return ((v << 1) | (v >> 2)) & 7; };
    auto swap01 = [](int v) { return (v & 4) | ((v & 1) << 1) | ((v >> 1) & 1); };
    auto transvect = [](int v) { return v ^ ((v >> 1) & 1); };
    return {on_vectors(rotate), on_vectors(swap01), on_vectors(transvect)};
}

std::vector<Permutation> dihedral_generators(int m) {
    if (m < 3) throw std::invalid_argument("named_group: dihedral degree must be at least 3");
    return {cycle_permutation(m, full_cycle(m)),
            from_map(m, [m](int x) { return (m - x) % m; })};
}

}  // namespace

PermGroup named_group(const std::string& name) {
    const auto open = name.find('(');
    const auto close = name.find(')');
    if (open == std::string::npos || close != name.size() - 1 || close <= open + 1) {
        throw std::invalid_argument("named_group: expected name(arg): " + name);
    }
    const std::string kind = name.substr(0, open);
    int arg = 0;
    try {
        arg = std::stoi(name.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("named_group: bad argument in " + name);
    }

    if (kind == "sym") return close_group(sym_generators(arg));
    if (kind == "alt") return close_group(alt_generators(arg));
    if (kind == "cyclic") {
        if (arg < 1) throw std::invalid_argument("named_group: cyclic degree must be positive");
        if (arg == 1) return close_group({Permutation::identity(1)});
        return close_group({cycle_permutation(arg, full_cycle(arg))});
    }
    if (kind == "dihedral") return close_group(dihedral_generators(arg));
    if (kind == "agl1") {
        if (arg == 5) return close_group(agl1_prime_generators(5, 2));
        if (arg == 7) return close_group(agl1_prime_generators(7, 3));
        if (arg == 8) return close_group(agl1_8_generators());
        throw std::invalid_argument("named_group: agl1 supports 5, 7, 8");
    }
    if (kind == "psl2") {
        if (arg == 5 || arg == 7) return close_group(psl2_generators(arg));
        throw std::invalid_argument("named_group: psl2 supports 5, 7");
    }
    if (kind == "psl3") {
        if (arg == 2) return close_group(psl3_2_generators());
        throw std::invalid_argument("named_group: psl3 supports 2");
    }
    throw std::invalid_argument("named_group: unknown name " + name);
}

std::vector<std::vector<std::vector<int>>> orbits_on_subsets(const PermGroup& g, int k) {
    if (k < 1 || k > g.degree()) {
        throw std::invalid_argument("orbits_on_subsets: subset size out of range");
    }
    std::set<std::vector<int>> pending;
    for_each_subset(g.degree(), k, [&](const std::vector<int>& s) { pending.insert(s); });

    std::vector<std::vector<std::vector<int>>> orbits;
    while (!pending.empty()) {
        std::set<std::vector<int>> orbit;
        std::deque<std::vector<int>> queue;
        const std::vector<int> start = *pending.begin();
        orbit.insert(start);
        queue.push_back(start);
        while (!queue.empty()) {
            const std::vector<int> current = queue.front();
            queue.pop_front();
            for (const auto& gen : g.generators()) {
                std::vector<int> next = gen.apply_subset(current);
                if (orbit.insert(next).second) queue.push_back(std::move(next));
            }
        }
        for (const auto& s : orbit) pending.erase(s);
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

namespace {

// Orbit of domain.front() under a subgroup given by its full element list.
bool transitive_on(const std::vector<Permutation>& elements, const std::vector<int>& domain) {
    if (domain.empty()) return false;
    std::set<int> orbit;
    for (const auto& g : elements) orbit.insert(g.apply(domain.front()));
    return orbit.size() == domain.size();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Size of the smallest block containing {a,b} for the action restricted to
// domain; the congruence is closed by propagating merged pairs through
// every element.
std::size_t minimal_block_size(const std::vector<Permutation>& elements,
                               const std::vector<int>& domain, int degree, int a, int b) {
    UnionFind uf(degree);
    std::deque<std::pair<int, int>> queue;
    uf.merge(a, b);
    queue.emplace_back(a, b);
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        for (const auto& g : elements) {
            const int rx = uf.find(g.apply(x));
            const int ry = uf.find(g.apply(y));
            if (rx != ry) {
                uf.merge(rx, ry);
                queue.emplace_back(rx, ry);
            }
        }
    }
    std::size_t size = 0;
    const int root = uf.find(a);
    for (int v : domain)
        if (uf.find(v) == root) ++size;
    return size;
}

bool primitive_on(const std::vector<Permutation>& elements, const std::vector<int>& domain,
                  int degree) {
    if (!transitive_on(elements, domain)) return false;
    if (domain.size() <= 2) return true;
    const int a = domain.front();
    for (int b : domain) {
        if (b == a) continue;
        if (minimal_block_size(elements, domain, degree, a, b) < domain.size()) return false;
    }
    return true;
}

std::vector<Permutation> fixing(const std::vector<Permutation>& elements, int point) {
    std::vector<Permutation> out;
    for (const auto& g : elements)
        if (g.apply(point) == point) out.push_back(g);
    return out;
}

}  // namespace

ActionProfile classify_action(const PermGroup& g) {
    if (g.degree() > 12) throw std::invalid_argument("classify_action: degree above 12");
    if (g.degree() < 1) throw std::invalid_argument("classify_action: empty domain");

    ActionProfile profile;
    const int n = g.degree();

    // Stabilizer chain on base points 0, 1, ...: transitivity degree is the
    // number of levels whose action on the remaining points is transitive.
    std::vector<int> domain(n);
    std::iota(domain.begin(), domain.end(), 0);
    std::vector<Permutation> level = g.elements();
    std::vector<std::vector<Permutation>> stabilizers;
    std::vector<std::vector<int>> rests;
    while (!domain.empty() && transitive_on(level, domain)) {
        ++profile.transitivity;
        const int base = domain.front();
        domain.erase(domain.begin());
        level = fixing(level, base);
        stabilizers.push_back(level);
        rests.push_back(domain);
    }

    for (int k = 1; k <= std::min(6, n); ++k) {
        const auto orbits = orbits_on_subsets(g, k);
        profile.subset_orbits[k] = static_cast<long long>(orbits.size());
        if (k <= 5 && orbits.size() == 1) profile.homogeneous.push_back(k);
    }

    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    profile.primitive = primitive_on(g.elements(), full, n);
    profile.two_primitive =
        profile.transitivity >= 1 && primitive_on(stabilizers[0], rests[0], n);
    profile.three_primitive =
        profile.transitivity >= 2 && primitive_on(stabilizers[1], rests[1], n);
    return profile;
}

nlohmann::json ActionProfile::to_json() const {
    nlohmann::json orbits = nlohmann::json::object();
    for (const auto& [k, count] : subset_orbits) orbits[std::to_string(k)] = count;
    return {{"transitivity", transitivity},
            {"homogeneous", homogeneous},
            {"primitive", primitive},
            {"two_primitive", two_primitive},
            {"three_primitive", three_primitive},
            {"subset_orbits", orbits}};
}

}  // namespace sethom
