#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sethom/hypergraph.hpp"
#include "sethom/trees.hpp"

namespace sethom {

enum class Truth : unsigned char { False, True, Unknown };

std::string truth_name(Truth t);

// Three-valued relation over a small vertex range. Unknown marks tuples the
// recovery formulas could not certify either way from the given ambient.
class PartialRelation {
public:
    PartialRelation(int n, int arity);

    int size() const { return n_; }
    int arity() const { return arity_; }

    Truth at(const std::vector<int>& tuple) const;
    void set(const std::vector<int>& tuple, Truth value);
    long long count(Truth value) const;

    nlohmann::json to_json() const;

private:
    std::size_t offset(const std::vector<int>& tuple) const;

    int n_;
    int arity_;
    std::vector<Truth> vals_;
};

// A derived hypergraph with the carrier it came from, plus a core of
// vertices under study. Recovery formulas read only the hypergraph and the
// core; the carrier is ground truth reserved for validation.
struct AmbientCore {
    Family family;
    Carrier carrier;
    KHypergraph ambient;
    std::vector<int> core;
};

AmbientCore make_ambient_core(Family f, const Carrier& carrier, std::vector<int> core);

// Binary relation on core positions: (i,j) true means core[i] < core[j] in
// the recovered leaf order. A pair is decided by a 4-set {u,v,y,z} whose
// only edges are uvz and yvz (true), or the mirrored pattern (false).
PartialRelation recover_order_m3(const AmbientCore& ac);

// Ternary C on core positions. The M3 formula branches on the position of
// x relative to {y,z} under the supplied recovered order and consults the
// edge set; the M4 formula looks for a 5-set whose only edge is yuvz.
PartialRelation recover_c(Family f, const AmbientCore& ac,
                          const std::optional<PartialRelation>& order = std::nullopt);

// Ternary R on core positions: on core edges, R(y;x,z) is certified by
// witnesses u,v with uxy, vyz edges and uxz, vxz non-edges.
PartialRelation recover_r_n3(const AmbientCore& ac);

// Quaternary D on core positions: D(x,y;z,w) is certified by a fifth point
// u making xyuz and xyuw the only non-edges of the 5-set.
PartialRelation recover_d_n4(const AmbientCore& ac);

// Tuple-by-tuple comparison of a recovered relation against the carrier
// ground truth on the core. Only decided tuples can agree or disagree.
struct ValidationReport {
    long long agree = 0;
    long long disagree = 0;
    long long unknown = 0;

    nlohmann::json to_json() const;
};

ValidationReport validate_recovery(const AmbientCore& ac, const PartialRelation& rel);

}  // namespace sethom
