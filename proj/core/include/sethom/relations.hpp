#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace sethom {

// Strict total order on {0..n-1}. rank maps each vertex to its position,
// so less(a,b) holds iff rank[a] < rank[b].
class FinOrder {
public:
    // rank must be a bijection from {0..n-1} onto {0..n-1}.
    explicit FinOrder(std::vector<int> rank);

    static FinOrder identity(int n);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank_of(int v) const;
    bool less(int a, int b) const { return rank_of(a) < rank_of(b); }
    bool leq(int a, int b) const { return rank_of(a) <= rank_of(b); }

    // Vertices listed smallest-first.
    std::vector<int> sorted() const;

    nlohmann::json to_json() const;

private:
    std::vector<int> rank_;
};

// Ternary relation on {0..n-1}, defined on every ordered triple including
// repeated arguments. Stored as a dense bitset up to n=16; evaluated through
// the defining predicate above that.
class TernaryRel {
public:
    TernaryRel(int n, std::function<bool(int, int, int)> pred);

    int size() const { return n_; }
    bool holds(int x, int y, int z) const;

    // {"n":., "arity":3, "tuples":[[x,y,z],...]} listing held tuples.
    nlohmann::json to_json() const;
    static TernaryRel from_json(const nlohmann::json& j);

private:
    int n_ = 0;
    std::vector<bool> bits_;
    std::function<bool(int, int, int)> pred_;
};

// Quaternary relation on {0..n-1}, same storage policy as TernaryRel.
class QuaternaryRel {
public:
    QuaternaryRel(int n, std::function<bool(int, int, int, int)> pred);

    int size() const { return n_; }
    bool holds(int x, int y, int z, int w) const;

    nlohmann::json to_json() const;
    static QuaternaryRel from_json(const nlohmann::json& j);

private:
    int n_ = 0;
    std::vector<bool> bits_;
    std::function<bool(int, int, int, int)> pred_;
};

// Tournament on {0..n-1}: arc(x,x) never holds, and exactly one of
// arc(x,y), arc(y,x) holds for distinct x,y. The constructor verifies both.
class Tournament {
public:
    Tournament(int n, std::function<bool(int, int)> arc);

    int size() const { return n_; }
    bool arc(int x, int y) const;

    std::vector<int> dominated(int x) const;   // x -> y
    std::vector<int> dominators(int x) const;  // y -> x

    nlohmann::json to_json() const;

private:
    int n_ = 0;
    std::vector<bool> arc_;
};

enum class CAxiom { C1, C2, C3, C4, C5, C6, C7, C8 };
enum class DAxiom { D1, D2, D3, D4, D5, D6 };

std::string axiom_name(CAxiom a);
std::string axiom_name(DAxiom a);
std::optional<CAxiom> parse_c_axiom(const std::string& s);
std::optional<DAxiom> parse_d_axiom(const std::string& s);

// Universal axioms report "pass" or "fail" (with a counterexample tuple);
// existential axioms report "witnessed-coverage": the fraction of antecedent
// instances that have a witness inside the finite structure.
struct AxiomReport {
    std::string axiom;
    std::string status;  // "pass" | "fail" | "witnessed-coverage"
    std::optional<double> coverage;
    std::optional<std::vector<int>> witness;

    bool passed() const { return status == "pass"; }
    nlohmann::json to_json() const;
};

// C1: C(x;y,z) -> C(x;z,y)
// C2: C(x;y,z) -> not C(y;x,z)
// C3: C(x;y,z) -> C(x;w,z) or C(w;y,z)
// C4: x != y -> C(x;y,y)
// C5: exists x C(x;y,z)
// C6: x != y -> exists z (y != z and C(x;y,z))
// C7: C(x;y,z) -> exists w (C(w;y,z) and C(x;y,w))
// C8: C(x;y,z) -> exists w1,w2 below/above Min/Max of {y,z} in the given
//     order, each cutting the x-branch as in C7. Requesting C8 without an
//     order is an input error.
std::vector<AxiomReport> check_c_axioms(const TernaryRel& rel,
                                        const std::vector<CAxiom>& which,
                                        const std::optional<FinOrder>& order = std::nullopt);

// D1: D(x,y;z,w) -> D(y,x;z,w) and D(x,y;w,z) and D(z,w;x,y)
// D2: D(x,y;z,w) -> not D(x,z;y,w)
// D3: D(x,y;z,w) -> D(u,y;z,w) or D(x,y;z,u)
// D4: (x != z and y != z) -> D(x,y;z,z)
// D5: x,y,z distinct -> exists w (w != z and D(x,y;z,w))
// D6: D(x,y;z,w) -> exists u (D(u,y;z,w) and D(x,u;z,w) and D(x,y;u,w)
//     and D(x,y;z,u))
std::vector<AxiomReport> check_d_axioms(const QuaternaryRel& rel,
                                        const std::vector<DAxiom>& which);

// B(x;y,z) iff (y <= x <= z) or (z <= x <= y).
TernaryRel derive_betweenness(const FinOrder& ord);
// K(x,y,z) iff (x <= y <= z) or (y <= z <= x) or (z <= x <= y).
TernaryRel derive_circular(const FinOrder& ord);
// S(x,y;z,w) iff (K(x,y,z) and K(x,w,y)) or (K(x,z,y) and K(x,y,w)),
// K the circular order derived from the same linear order.
QuaternaryRel derive_separation(const FinOrder& ord);

enum class OrderDerivedKind { Betweenness, Circular, Separation };
std::variant<TernaryRel, QuaternaryRel> derive_order_relations(const FinOrder& ord,
                                                               OrderDerivedKind kind);

// D(x,y;z,w) iff (C(x;z,w) and C(y;z,w)) or (C(z;x,y) and C(w;x,y)),
// evaluated verbatim on every tuple; the degenerate values forced on C by
// C1-C4 make the repeated-argument clauses of D come out right. Rejects an
// input failing C1-C4.
QuaternaryRel d_from_c(const TernaryRel& c);

// C_a(x;y,z) iff D(a,x;y,z), on the remaining n-1 points relabeled in
// ascending vertex order. Rejects an input failing D1-D4.
TernaryRel c_from_d(const QuaternaryRel& d, int a);

}  // namespace sethom
