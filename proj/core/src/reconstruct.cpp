#include "sethom/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace sethom {

std::string truth_name(Truth t) {
    switch (t) {
        case Truth::False: return "false";
        case Truth::True: return "true";
        case Truth::Unknown: return "unknown";
    }
    throw std::invalid_argument("unknown truth value");
}

PartialRelation::PartialRelation(int n, int arity) : n_(n), arity_(arity) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (arity < 2 || arity > 4) throw std::invalid_argument("arity must be 2, 3, or 4");
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) cells *= static_cast<std::size_t>(n);
    vals_.assign(cells, Truth::Unknown);
}

std::size_t PartialRelation::offset(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("tuple length does not match arity");
    std::size_t off = 0;
    for (int v : tuple) {
        if (v < 0 || v >= n_) throw std::invalid_argument("tuple entry out of range");
        off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    return off;
}

Truth PartialRelation::at(const std::vector<int>& tuple) const {
    return vals_[offset(tuple)];
}

void PartialRelation::set(const std::vector<int>& tuple, Truth value) {
    vals_[offset(tuple)] = value;
}

long long PartialRelation::count(Truth value) const {
    return std::count(vals_.begin(), vals_.end(), value);
}

nlohmann::json PartialRelation::to_json() const {
    nlohmann::json lists = {{"true", nlohmann::json::array()},
                            {"false", nlohmann::json::array()},
                            {"unknown", nlohmann::json::array()}};
    std::vector<int> tuple(arity_, 0);
    for (std::size_t off = 0; off < vals_.size(); ++off) {
        std::size_t rem = off;
        for (int pos = arity_ - 1; pos >= 0; --pos) {
            tuple[pos] = static_cast<int>(rem % static_cast<std::size_t>(n_));
            rem /= static_cast<std::size_t>(n_);
        }
        lists[truth_name(vals_[off])].push_back(tuple);
    }
    return nlohmann::json{{"n", n_},
                          {"arity", arity_},
                          {"true", lists["true"]},
                          {"false", lists["false"]},
                          {"unknown", lists["unknown"]}};
}

AmbientCore make_ambient_core(Family f, const Carrier& carrier, std::vector<int> core) {
    KHypergraph ambient = derive_edges(f, carrier);
    std::sort(core.begin(), core.end());
    if (std::adjacent_find(core.begin(), core.end()) != core.end())
        throw std::invalid_argument("core vertices must be distinct");
    for (int v : core) {
        if (v < 0 || v >= ambient.vertex_count())
            throw std::invalid_argument("core vertex out of range");
    }
    return AmbientCore{f, carrier, std::move(ambient), std::move(core)};
}

namespace {

// Number of edges induced on a small vertex set (arity-sized subsets).
int edge_count_in(const KHypergraph& h, const std::vector<int>& verts) {
    int k = h.arity();
    int m = static_cast<int>(verts.size());
    int count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            if (h.has_edge(pick)) ++count;
            return;
        }
        for (int i = start; i < m; ++i) {
            pick.push_back(verts[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

// A 4-set {u,v,y,z} whose only edges are uvz and yvz certifies y < z.
bool order_witness(const KHypergraph& h, int y, int z) {
    int n = h.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (u == y || u == z) continue;
        for (int v = 0; v < n; ++v) {
            if (v == y || v == z || v == u) continue;
            if (!h.has_edge({u, v, z})) continue;
            if (!h.has_edge({y, v, z})) continue;
            if (edge_count_in(h, {u, v, y, z}) == 2) return true;
        }
    }
    return false;
}

}  // namespace

PartialRelation recover_order_m3(const AmbientCore& ac) {
    if (ac.family != Family::M3)
        throw std::invalid_argument("leaf order recovery applies to M3 only");
    int m = static_cast<int>(ac.core.size());
    PartialRelation rel(m, 2);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) {
                rel.set({i, j}, Truth::False);
            } else if (order_witness(ac.ambient, ac.core[i], ac.core[j])) {
                rel.set({i, j}, Truth::True);
            } else if (order_witness(ac.ambient, ac.core[j], ac.core[i])) {
                rel.set({i, j}, Truth::False);
            }
        }
    }
    return rel;
}

namespace {

Truth c_from_order_and_edges(const KHypergraph& h, int x, int y, int z,
                             Truth oxy, Truth oxz) {
    bool edge = h.has_edge({x, y, z});
    // Positions of x relative to {y,z} still consistent with the decided
    // order facts; the formula gives edge, false, and not-edge in turn.
    bool below = oxy != Truth::False && oxz != Truth::False;
    bool above = oxy != Truth::True && oxz != Truth::True;
    bool mid = (oxy != Truth::False && oxz != Truth::True) ||
               (oxy != Truth::True && oxz != Truth::False);
    bool can_true = (below && edge) || (above && !edge);
    bool can_false = (below && !edge) || mid || (above && edge);
    if (can_true && !can_false) return Truth::True;
    if (can_false && !can_true) return Truth::False;
    return Truth::Unknown;
}

// A 5-set {x,y,z,u,v} whose only edge is yuvz certifies C(x;y,z) in M4.
bool c4_witness(const KHypergraph& h, int x, int y, int z) {
    int n = h.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (u == x || u == y || u == z) continue;
        for (int v = u + 1; v < n; ++v) {
            if (v == x || v == y || v == z) continue;
            if (!h.has_edge({y, u, v, z})) continue;
            if (edge_count_in(h, {x, y, z, u, v}) == 1) return true;
        }
    }
    return false;
}

}  // namespace

PartialRelation recover_c(Family f, const AmbientCore& ac,
                          const std::optional<PartialRelation>& order) {
    if (f != ac.family) throw std::invalid_argument("family does not match the ambient");
    int m = static_cast<int>(ac.core.size());
    if (f == Family::M3) {
        if (!order) throw std::invalid_argument("M3 recovery needs the recovered leaf order");
        if (order->size() != m || order->arity() != 2)
            throw std::invalid_argument("order relation does not fit the core");
    } else if (f == Family::M4) {
        if (order) throw std::invalid_argument("M4 recovery does not take an order");
    } else {
        throw std::invalid_argument("C recovery applies to M3 and M4");
    }
    PartialRelation rel(m, 3);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                if (j == k) {
                    rel.set({i, j, k}, i == j ? Truth::False : Truth::True);
                    continue;
                }
                if (i == j || i == k) {
                    rel.set({i, j, k}, Truth::False);
                    continue;
                }
                int x = ac.core[i], y = ac.core[j], z = ac.core[k];
                if (f == Family::M3) {
                    rel.set({i, j, k},
                            c_from_order_and_edges(ac.ambient, x, y, z,
                                                   order->at({i, j}), order->at({i, k})));
                } else if (c4_witness(ac.ambient, x, y, z)) {
                    rel.set({i, j, k}, Truth::True);
                }
            }
        }
    }
    return rel;
}

PartialRelation recover_r_n3(const AmbientCore& ac) {
    if (ac.family != Family::N3)
        throw std::invalid_argument("R recovery applies to N3 only");
    const KHypergraph& h = ac.ambient;
    int n = h.vertex_count();
    int m = static_cast<int>(ac.core.size());
    PartialRelation rel(m, 3);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            for (int c = 0; c < m; ++c) {
                if (a == b || a == c || b == c) {
                    rel.set({a, b, c}, Truth::False);
                    continue;
                }
                int y = ac.core[a], x = ac.core[b], z = ac.core[c];
                if (!h.has_edge({x, y, z})) {
                    rel.set({a, b, c}, Truth::False);
                    continue;
                }
                bool has_u = false, has_v = false;
                for (int u = 0; u < n && !(has_u && has_v); ++u) {
                    if (u == x || u == y || u == z) continue;
                    if (!has_u && h.has_edge({u, x, y}) && !h.has_edge({u, x, z}))
                        has_u = true;
                    if (!has_v && h.has_edge({u, y, z}) && !h.has_edge({u, x, z}))
                        has_v = true;
                }
                if (has_u && has_v) rel.set({a, b, c}, Truth::True);
            }
        }
    }
    return rel;
}

PartialRelation recover_d_n4(const AmbientCore& ac) {
    if (ac.family != Family::N4)
        throw std::invalid_argument("D recovery applies to N4 only");
    const KHypergraph& h = ac.ambient;
    int n = h.vertex_count();
    int m = static_cast<int>(ac.core.size());
    PartialRelation rel(m, 4);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            for (int c = 0; c < m; ++c) {
                for (int d = 0; d < m; ++d) {
                    if (a == c || a == d || b == c || b == d) {
                        rel.set({a, b, c, d}, Truth::False);
                        continue;
                    }
                    if (a == b || c == d) {
                        // Collapsed pair disjoint from the other pair.
                        rel.set({a, b, c, d}, Truth::True);
                        continue;
                    }
                    int x = ac.core[a], y = ac.core[b], z = ac.core[c], w = ac.core[d];
                    for (int u = 0; u < n; ++u) {
                        if (u == x || u == y || u == z || u == w) continue;
                        if (h.has_edge({x, y, u, z})) continue;
                        if (h.has_edge({x, y, u, w})) continue;
                        if (edge_count_in(h, {x, y, z, w, u}) == 3) {
                            rel.set({a, b, c, d}, Truth::True);
                            break;
                        }
                    }
                }
            }
        }
    }
    return rel;
}

nlohmann::json ValidationReport::to_json() const {
    return nlohmann::json{{"agree", agree}, {"disagree", disagree}, {"unknown", unknown}};
}

namespace {

void tally(ValidationReport& report, Truth recovered, bool truth) {
    if (recovered == Truth::Unknown) {
        ++report.unknown;
    } else if ((recovered == Truth::True) == truth) {
        ++report.agree;
    } else {
        ++report.disagree;
    }
}

}  // namespace

ValidationReport validate_recovery(const AmbientCore& ac, const PartialRelation& rel) {
    int m = static_cast<int>(ac.core.size());
    if (rel.size() != m) throw std::invalid_argument("relation does not fit the core");
    ValidationReport report;
    if (rel.arity() == 2) {
        if (ac.family != Family::M3)
            throw std::invalid_argument("no order ground truth for this family");
        FinOrder order = c_of_leaves(std::get<LeafTree>(ac.carrier)).second;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                tally(report, rel.at({i, j}), order.less(ac.core[i], ac.core[j]));
        return report;
    }
    if (rel.arity() == 3) {
        TernaryRel truth = [&]() {
            if (ac.family == Family::M3 || ac.family == Family::M4)
                return c_of_leaves(std::get<LeafTree>(ac.carrier)).first;
            if (ac.family == Family::N3)
                return r_of_circle(std::get<CircleConfig>(ac.carrier));
            throw std::invalid_argument("no ternary ground truth for this family");
        }();
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    tally(report, rel.at({a, b, c}),
                          truth.holds(ac.core[a], ac.core[b], ac.core[c]));
        return report;
    }
    if (ac.family != Family::N4 && ac.family != Family::M6)
        throw std::invalid_argument("no quaternary ground truth for this family");
    QuaternaryRel truth = d_of_leaves(std::get<UnrootedLeafTree>(ac.carrier));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d)
                    tally(report, rel.at({a, b, c, d}),
                          truth.holds(ac.core[a], ac.core[b], ac.core[c], ac.core[d]));
    return report;
}

}  // namespace sethom
