#include "sethom/relations.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace sethom {

namespace {

// Dense bitset storage applies up to this vertex count; larger relations
// stay lazy behind their predicate.
constexpr int kDenseLimit = 16;

void require_range(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + " vertex out of range");
    }
}

}  // namespace

// ---- FinOrder ----

FinOrder::FinOrder(std::vector<int> rank) : rank_(std::move(rank)) {
    const int n = static_cast<int>(rank_.size());
    std::vector<bool> seen(n, false);
    for (int r : rank_) {
        if (r < 0 || r >= n || seen[r]) {
            throw std::invalid_argument("FinOrder: rank is not a bijection");
        }
        seen[r] = true;
    }
}

FinOrder FinOrder::identity(int n) {
    if (n < 0) throw std::invalid_argument("FinOrder: negative size");
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    return FinOrder(std::move(rank));
}

int FinOrder::rank_of(int v) const {
    require_range(v, size(), "FinOrder");
    return rank_[v];
}

std::vector<int> FinOrder::sorted() const {
    std::vector<int> out(size());
    for (int v = 0; v < size(); ++v) out[rank_[v]] = v;
    return out;
}

nlohmann::json FinOrder::to_json() const {
    return {{"n", size()}, {"rank", rank_}};
}

// ---- TernaryRel ----

TernaryRel::TernaryRel(int n, std::function<bool(int, int, int)> pred) : n_(n) {
    if (n < 0) throw std::invalid_argument("TernaryRel: negative size");
    if (!pred) throw std::invalid_argument("TernaryRel: empty predicate");
    if (n_ <= kDenseLimit) {
        bits_.assign(static_cast<size_t>(n_) * n_ * n_, false);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    bits_[(static_cast<size_t>(x) * n_ + y) * n_ + z] = pred(x, y, z);
    } else {
        pred_ = std::move(pred);
    }
}

bool TernaryRel::holds(int x, int y, int z) const {
    require_range(x, n_, "TernaryRel");
    require_range(y, n_, "TernaryRel");
    require_range(z, n_, "TernaryRel");
    if (!bits_.empty() || n_ <= kDenseLimit) {
        return bits_[(static_cast<size_t>(x) * n_ + y) * n_ + z];
    }
    return pred_(x, y, z);
}

nlohmann::json TernaryRel::to_json() const {
    nlohmann::json tuples = nlohmann::json::array();
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                if (holds(x, y, z)) tuples.push_back({x, y, z});
    return {{"n", n_}, {"arity", 3}, {"tuples", tuples}};
}

TernaryRel TernaryRel::from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    if (j.at("arity").get<int>() != 3) {
        throw std::invalid_argument("TernaryRel: arity mismatch");
    }
    auto held = std::make_shared<std::vector<std::array<int, 3>>>();
    for (const auto& t : j.at("tuples")) {
        held->push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    }
    return TernaryRel(n, [held](int x, int y, int z) {
        return std::find(held->begin(), held->end(), std::array<int, 3>{x, y, z}) != held->end();
    });
}

// ---- QuaternaryRel ----

QuaternaryRel::QuaternaryRel(int n, std::function<bool(int, int, int, int)> pred) : n_(n) {
    if (n < 0) throw std::invalid_argument("QuaternaryRel: negative size");
    if (!pred) throw std::invalid_argument("QuaternaryRel: empty predicate");
    if (n_ <= kDenseLimit) {
        bits_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, false);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    for (int w = 0; w < n_; ++w)
                        bits_[((static_cast<size_t>(x) * n_ + y) * n_ + z) * n_ + w] =
                            pred(x, y, z, w);
    } else {
        pred_ = std::move(pred);
    }
}

bool QuaternaryRel::holds(int x, int y, int z, int w) const {
    require_range(x, n_, "QuaternaryRel");
    require_range(y, n_, "QuaternaryRel");
    require_range(z, n_, "QuaternaryRel");
    require_range(w, n_, "QuaternaryRel");
    if (!bits_.empty() || n_ <= kDenseLimit) {
        return bits_[((static_cast<size_t>(x) * n_ + y) * n_ + z) * n_ + w];
    }
    return pred_(x, y, z, w);
}

nlohmann::json QuaternaryRel::to_json() const {
    nlohmann::json tuples = nlohmann::json::array();
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                for (int w = 0; w < n_; ++w)
                    if (holds(x, y, z, w)) tuples.push_back({x, y, z, w});
    return {{"n", n_}, {"arity", 4}, {"tuples", tuples}};
}

QuaternaryRel QuaternaryRel::from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    if (j.at("arity").get<int>() != 4) {
        throw std::invalid_argument("QuaternaryRel: arity mismatch");
    }
    auto held = std::make_shared<std::vector<std::array<int, 4>>>();
    for (const auto& t : j.at("tuples")) {
        held->push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(),
                         t.at(3).get<int>()});
    }
    return QuaternaryRel(n, [held](int x, int y, int z, int w) {
        return std::find(held->begin(), held->end(), std::array<int, 4>{x, y, z, w}) !=
               held->end();
    });
}

// ---- Tournament ----

Tournament::Tournament(int n, std::function<bool(int, int)> arc) : n_(n) {
    if (n < 0) throw std::invalid_argument("Tournament: negative size");
    if (!arc) throw std::invalid_argument("Tournament: empty predicate");
    arc_.assign(static_cast<size_t>(n_) * n_, false);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) arc_[static_cast<size_t>(x) * n_ + y] = arc(x, y);
    for (int x = 0; x < n_; ++x) {
        if (arc_[static_cast<size_t>(x) * n_ + x]) {
            throw std::invalid_argument("Tournament: arc on a single vertex");
        }
        for (int y = x + 1; y < n_; ++y) {
            const bool xy = arc_[static_cast<size_t>(x) * n_ + y];
            const bool yx = arc_[static_cast<size_t>(y) * n_ + x];
            if (xy == yx) {
                throw std::invalid_argument("Tournament: arcs must be antisymmetric and total");
            }
        }
    }
}

bool Tournament::arc(int x, int y) const {
    require_range(x, n_, "Tournament");
    require_range(y, n_, "Tournament");
    return arc_[static_cast<size_t>(x) * n_ + y];
}

std::vector<int> Tournament::dominated(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (arc(x, y)) out.push_back(y);
    return out;
}

std::vector<int> Tournament::dominators(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (arc(y, x)) out.push_back(y);
    return out;
}

nlohmann::json Tournament::to_json() const {
    nlohmann::json arcs = nlohmann::json::array();
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (arc(x, y)) arcs.push_back({x, y});
    return {{"n", n_}, {"arcs", arcs}};
}

// ---- axiom names ----

std::string axiom_name(CAxiom a) {
    return "C" + std::to_string(static_cast<int>(a) + 1);
}

std::string axiom_name(DAxiom a) {
    return "D" + std::to_string(static_cast<int>(a) + 1);
}

std::optional<CAxiom> parse_c_axiom(const std::string& s) {
    for (int i = 0; i < 8; ++i) {
        if (s == "C" + std::to_string(i + 1)) return static_cast<CAxiom>(i);
    }
    return std::nullopt;
}

std::optional<DAxiom> parse_d_axiom(const std::string& s) {
    for (int i = 0; i < 6; ++i) {
        if (s == "D" + std::to_string(i + 1)) return static_cast<DAxiom>(i);
    }
    return std::nullopt;
}

nlohmann::json AxiomReport::to_json() const {
    nlohmann::json j;
    j["axiom"] = axiom;
    j["status"] = status;
    j["coverage"] = coverage ? nlohmann::json(*coverage) : nlohmann::json(nullptr);
    j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
    return j;
}

// ---- axiom checkers ----

namespace {

AxiomReport pass_report(const std::string& name) {
    return {name, "pass", std::nullopt, std::nullopt};
}

AxiomReport fail_report(const std::string& name, std::vector<int> tuple) {
    return {name, "fail", std::nullopt, std::move(tuple)};
}

// Vacuously covered when there is no antecedent instance.
AxiomReport coverage_report(const std::string& name, long hits, long total) {
    const double ratio = total == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(total);
    return {name, "witnessed-coverage", ratio, std::nullopt};
}

AxiomReport check_one_c(const TernaryRel& c, CAxiom which,
                        const std::optional<FinOrder>& order) {
    const int n = c.size();
    const std::string name = axiom_name(which);
    switch (which) {
        case CAxiom::C1:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (c.holds(x, y, z) && !c.holds(x, z, y))
                            return fail_report(name, {x, y, z});
            return pass_report(name);
        case CAxiom::C2:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (c.holds(x, y, z) && c.holds(y, x, z))
                            return fail_report(name, {x, y, z});
            return pass_report(name);
        case CAxiom::C3:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        if (!c.holds(x, y, z)) continue;
                        for (int w = 0; w < n; ++w)
                            if (!c.holds(x, w, z) && !c.holds(w, y, z))
                                return fail_report(name, {x, y, z, w});
                    }
            return pass_report(name);
        case CAxiom::C4:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && !c.holds(x, y, y)) return fail_report(name, {x, y});
            return pass_report(name);
        case CAxiom::C5: {
            long hits = 0, total = 0;
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    ++total;
                    for (int x = 0; x < n; ++x)
                        if (c.holds(x, y, z)) {
                            ++hits;
                            break;
                        }
                }
            return coverage_report(name, hits, total);
        }
        case CAxiom::C6: {
            long hits = 0, total = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    ++total;
                    for (int z = 0; z < n; ++z)
                        if (z != y && c.holds(x, y, z)) {
                            ++hits;
                            break;
                        }
                }
            return coverage_report(name, hits, total);
        }
        case CAxiom::C7: {
            long hits = 0, total = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        if (!c.holds(x, y, z)) continue;
                        ++total;
                        for (int w = 0; w < n; ++w)
                            if (c.holds(w, y, z) && c.holds(x, y, w)) {
                                ++hits;
                                break;
                            }
                    }
            return coverage_report(name, hits, total);
        }
        case CAxiom::C8: {
            if (!order) throw std::invalid_argument("check_c_axioms: C8 needs an order");
            if (order->size() != n) {
                throw std::invalid_argument("check_c_axioms: order size mismatch");
            }
            long hits = 0, total = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        if (!c.holds(x, y, z)) continue;
                        ++total;
                        const int lo = order->less(y, z) ? y : z;
                        const int hi = order->less(y, z) ? z : y;
                        bool below = false, above = false;
                        for (int w = 0; w < n; ++w) {
                            if (!c.holds(w, y, z) || !c.holds(x, y, w)) continue;
                            if (order->less(w, lo)) below = true;
                            if (order->less(hi, w)) above = true;
                        }
                        if (below && above) ++hits;
                    }
            return coverage_report(name, hits, total);
        }
    }
    throw std::logic_error("unreachable");
}

AxiomReport check_one_d(const QuaternaryRel& d, DAxiom which) {
    const int n = d.size();
    const std::string name = axiom_name(which);
    switch (which) {
        case DAxiom::D1:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int w = 0; w < n; ++w)
                            if (d.holds(x, y, z, w) &&
                                !(d.holds(y, x, z, w) && d.holds(x, y, w, z) &&
                                  d.holds(z, w, x, y)))
                                return fail_report(name, {x, y, z, w});
            return pass_report(name);
        case DAxiom::D2:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int w = 0; w < n; ++w)
                            if (d.holds(x, y, z, w) && d.holds(x, z, y, w))
                                return fail_report(name, {x, y, z, w});
            return pass_report(name);
        case DAxiom::D3:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int w = 0; w < n; ++w) {
                            if (!d.holds(x, y, z, w)) continue;
                            for (int u = 0; u < n; ++u)
                                if (!d.holds(u, y, z, w) && !d.holds(x, y, z, u))
                                    return fail_report(name, {x, y, z, w, u});
                        }
            return pass_report(name);
        case DAxiom::D4:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (x != z && y != z && !d.holds(x, y, z, z))
                            return fail_report(name, {x, y, z});
            return pass_report(name);
        case DAxiom::D5: {
            long hits = 0, total = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        if (x == y || x == z || y == z) continue;
                        ++total;
                        for (int w = 0; w < n; ++w)
                            if (w != z && d.holds(x, y, z, w)) {
                                ++hits;
                                break;
                            }
                    }
            return coverage_report(name, hits, total);
        }
        case DAxiom::D6: {
            long hits = 0, total = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int w = 0; w < n; ++w) {
                            if (!d.holds(x, y, z, w)) continue;
                            ++total;
                            for (int u = 0; u < n; ++u)
                                if (d.holds(u, y, z, w) && d.holds(x, u, z, w) &&
                                    d.holds(x, y, u, w) && d.holds(x, y, z, u)) {
                                    ++hits;
                                    break;
                                }
                        }
            return coverage_report(name, hits, total);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<AxiomReport> check_c_axioms(const TernaryRel& rel,
                                        const std::vector<CAxiom>& which,
                                        const std::optional<FinOrder>& order) {
    std::vector<AxiomReport> out;
    out.reserve(which.size());
    for (CAxiom a : which) out.push_back(check_one_c(rel, a, order));
    return out;
}

std::vector<AxiomReport> check_d_axioms(const QuaternaryRel& rel,
                                        const std::vector<DAxiom>& which) {
    std::vector<AxiomReport> out;
    out.reserve(which.size());
    for (DAxiom a : which) out.push_back(check_one_d(rel, a));
    return out;
}

// ---- order-derived relations ----

TernaryRel derive_betweenness(const FinOrder& ord) {
    if (ord.size() < 1) throw std::invalid_argument("derive_betweenness: empty order");
    return TernaryRel(ord.size(), [ord](int x, int y, int z) {
        return (ord.leq(y, x) && ord.leq(x, z)) || (ord.leq(z, x) && ord.leq(x, y));
    });
}

TernaryRel derive_circular(const FinOrder& ord) {
    if (ord.size() < 1) throw std::invalid_argument("derive_circular: empty order");
    return TernaryRel(ord.size(), [ord](int x, int y, int z) {
        return (ord.leq(x, y) && ord.leq(y, z)) || (ord.leq(y, z) && ord.leq(z, x)) ||
               (ord.leq(z, x) && ord.leq(x, y));
    });
}

QuaternaryRel derive_separation(const FinOrder& ord) {
    if (ord.size() < 1) throw std::invalid_argument("derive_separation: empty order");
    const TernaryRel k = derive_circular(ord);
    return QuaternaryRel(ord.size(), [k](int x, int y, int z, int w) {
        return (k.holds(x, y, z) && k.holds(x, w, y)) || (k.holds(x, z, y) && k.holds(x, y, w));
    });
}

std::variant<TernaryRel, QuaternaryRel> derive_order_relations(const FinOrder& ord,
                                                               OrderDerivedKind kind) {
    switch (kind) {
        case OrderDerivedKind::Betweenness:
            return derive_betweenness(ord);
        case OrderDerivedKind::Circular:
            return derive_circular(ord);
        case OrderDerivedKind::Separation:
            return derive_separation(ord);
    }
    throw std::logic_error("unreachable");
}

// ---- conversions between C and D ----

namespace {

void require_c14(const TernaryRel& c, const char* caller) {
    const auto reports =
        check_c_axioms(c, {CAxiom::C1, CAxiom::C2, CAxiom::C3, CAxiom::C4});
    for (const auto& r : reports) {
        if (!r.passed()) {
            throw std::invalid_argument(std::string(caller) + ": input fails " + r.axiom);
        }
    }
}

void require_d14(const QuaternaryRel& d, const char* caller) {
    const auto reports =
        check_d_axioms(d, {DAxiom::D1, DAxiom::D2, DAxiom::D3, DAxiom::D4});
    for (const auto& r : reports) {
        if (!r.passed()) {
            throw std::invalid_argument(std::string(caller) + ": input fails " + r.axiom);
        }
    }
}

}  // namespace

QuaternaryRel d_from_c(const TernaryRel& c) {
    require_c14(c, "d_from_c");
    return QuaternaryRel(c.size(), [c](int x, int y, int z, int w) {
        return (c.holds(x, z, w) && c.holds(y, z, w)) ||
               (c.holds(z, x, y) && c.holds(w, x, y));
    });
}

TernaryRel c_from_d(const QuaternaryRel& d, int a) {
    if (a < 0 || a >= d.size()) throw std::invalid_argument("c_from_d: vertex out of range");
    require_d14(d, "c_from_d");
    // Remaining vertices keep their ascending order under the relabeling.
    std::vector<int> old_label;
    for (int v = 0; v < d.size(); ++v)
        if (v != a) old_label.push_back(v);
    return TernaryRel(d.size() - 1, [d, a, old_label](int x, int y, int z) {
        return d.holds(a, old_label[x], old_label[y], old_label[z]);
    });
}

}  // namespace sethom
