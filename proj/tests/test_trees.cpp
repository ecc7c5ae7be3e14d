#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "sethom/relations.hpp"
#include "sethom/trees.hpp"

using namespace sethom;

namespace {

const std::vector<CAxiom> kC14 = {CAxiom::C1, CAxiom::C2, CAxiom::C3, CAxiom::C4};
const std::vector<DAxiom> kD14 = {DAxiom::D1, DAxiom::D2, DAxiom::D3, DAxiom::D4};

bool all_pass(const std::vector<AxiomReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const AxiomReport& r) { return r.passed(); });
}

// Quartet tree with cherries {0,1} and {2,3}: internal nodes 4 and 5.
UnrootedLeafTree cherry_quartet() {
    return UnrootedLeafTree::from_edges(4, 6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
}

// Four leaves around one degree-4 center.
UnrootedLeafTree star_quartet() {
    return UnrootedLeafTree::from_edges(4, 5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

// Six leaves on an internal path: pairs at the ends, singles in the middle.
UnrootedLeafTree caterpillar_sextet() {
    return UnrootedLeafTree::from_edges(
        6, 10, {{0, 6}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 9}, {6, 7}, {7, 8}, {8, 9}});
}

// Three cherries around a central internal node.
UnrootedLeafTree snowflake_sextet() {
    return UnrootedLeafTree::from_edges(
        6, 10, {{6, 7}, {6, 8}, {6, 9}, {0, 7}, {1, 7}, {2, 8}, {3, 8}, {4, 9}, {5, 9}});
}

}  // namespace

TEST_CASE("LeafTree parsing and shape accounting", "[trees]") {
    const auto t = LeafTree::parse("((a,b),(c,d))");
    REQUIRE(t.leaf_count() == 4);
    REQUIRE(t.internal_count() == 3);
    REQUIRE(t.is_binary());
    REQUIRE(t.to_text() == "((0,1),(2,3))");

    const auto caterpillar = LeafTree::parse("(a,(b,(c,d)))");
    REQUIRE(caterpillar.leaf_count() == 4);
    REQUIRE(caterpillar.internal_count() == 3);
    REQUIRE(caterpillar.to_text() == "(0,(1,(2,3)))");

    const auto single = LeafTree::parse("x");
    REQUIRE(single.leaf_count() == 1);
    REQUIRE(single.internal_count() == 0);

    REQUIRE_THROWS_AS(LeafTree::parse("((a),(b))"), std::invalid_argument);
    REQUIRE_THROWS_AS(LeafTree::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(LeafTree::parse("((a,b)"), std::invalid_argument);
}

TEST_CASE("c_of_leaves on a right caterpillar", "[trees]") {
    const auto t = LeafTree::parse("(0,(1,(2,3)))");
    const auto [c, order] = c_of_leaves(t);

    REQUIRE(c.holds(0, 2, 3));
    REQUIRE_FALSE(c.holds(2, 0, 1));
    REQUIRE(order.less(0, 3));

    SECTION("repeated arguments") {
        REQUIRE(c.holds(0, 1, 1));
        REQUIRE_FALSE(c.holds(0, 0, 1));
        REQUIRE_FALSE(c.holds(1, 0, 1));
    }
    SECTION("axioms") {
        REQUIRE(all_pass(check_c_axioms(c, kC14)));
    }
}

TEST_CASE("tree-derived C passes axioms and compatibility on random fragments", "[trees]") {
    for (std::uint64_t seed : {0, 1, 2, 3, 4}) {
        const auto t = random_rooted_fragment(10, 2, seed);
        const auto [c, order] = c_of_leaves(t);
        REQUIRE(all_pass(check_c_axioms(c, kC14)));
        for (int x = 0; x < 10; ++x)
            for (int y = x + 1; y < 10; ++y)
                for (int z = y + 1; z < 10; ++z) {
                    REQUIRE((c.holds(x, y, z) || c.holds(z, x, y)));
                }
    }
    for (std::uint64_t seed : {5, 6}) {
        const auto t = random_rooted_fragment(9, 3, seed);
        const auto [c, order] = c_of_leaves(t);
        REQUIRE(all_pass(check_c_axioms(c, kC14)));
    }
}

TEST_CASE("d_of_leaves on small unrooted trees", "[trees]") {
    SECTION("cherry quartet") {
        const auto d = d_of_leaves(cherry_quartet());
        REQUIRE(d.holds(0, 1, 2, 3));
        REQUIRE_FALSE(d.holds(0, 2, 1, 3));
        REQUIRE_FALSE(d.holds(0, 3, 1, 2));
        REQUIRE(all_pass(check_d_axioms(d, kD14)));
    }
    SECTION("degree-4 star quartet has no resolved pairing") {
        const auto d = d_of_leaves(star_quartet());
        REQUIRE_FALSE(d.holds(0, 1, 2, 3));
        REQUIRE_FALSE(d.holds(0, 2, 1, 3));
        REQUIRE_FALSE(d.holds(0, 3, 1, 2));
        REQUIRE(all_pass(check_d_axioms(d, kD14)));
    }
    SECTION("random 10-leaf tree passes D1-D4") {
        const auto u = random_unrooted_fragment(10, 3, 11);
        REQUIRE(all_pass(check_d_axioms(d_of_leaves(u), kD14)));
    }
}

TEST_CASE("random fragments are deterministic and respect bounds", "[trees]") {
    SECTION("rooted determinism and binary node count") {
        const auto a = random_rooted_fragment(8, 2, 7);
        const auto b = random_rooted_fragment(8, 2, 7);
        REQUIRE(a.to_text() == b.to_text());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            REQUIRE(random_rooted_fragment(8, 2, seed).internal_count() == 7);
        }
    }
    SECTION("unrooted degree-3 fragments are strictly 3-regular inside") {
        const auto u = random_unrooted_fragment(12, 3, 3);
        for (int v = u.leaf_count(); v < u.node_count(); ++v) REQUIRE(u.degree(v) == 3);
        const auto again = random_unrooted_fragment(12, 3, 3);
        REQUIRE(u.to_json() == again.to_json());
    }
    SECTION("unrooted degree-4 fragments stay within bound") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const auto u = random_unrooted_fragment(10, 4, seed);
            for (int v = u.leaf_count(); v < u.node_count(); ++v) {
                REQUIRE(u.degree(v) >= 3);
                REQUIRE(u.degree(v) <= 4);
            }
        }
    }
    SECTION("bad bounds rejected") {
        REQUIRE_THROWS_AS(random_rooted_fragment(4, 1, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(random_unrooted_fragment(4, 2, 0), std::invalid_argument);
    }
}

TEST_CASE("circle configurations and their tournaments", "[trees]") {
    SECTION("three points in a half circle give a 3-cycle") {
        const CircleConfig cfg({Rational(0, 1), Rational(3, 10), Rational(6, 10)});
        const auto t = cfg.tournament();
        REQUIRE(t.arc(0, 1));
        REQUIRE(t.arc(1, 2));
        REQUIRE(t.arc(2, 0));
    }
    SECTION("three close points order linearly") {
        const CircleConfig cfg({Rational(0, 1), Rational(1, 10), Rational(2, 10)});
        const auto t = cfg.tournament();
        REQUIRE(t.arc(0, 1));
        REQUIRE(t.arc(1, 2));
        REQUIRE(t.arc(0, 2));
    }
    SECTION("antipodal and duplicate positions rejected") {
        REQUIRE_THROWS_AS(CircleConfig({Rational(1, 10), Rational(6, 10)}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(CircleConfig({Rational(1, 10), Rational(2, 20)}),
                          std::invalid_argument);
    }
    SECTION("generated configs are deterministic local orders") {
        const auto cfg = build_circle_config(10, 40, 5);
        REQUIRE(cfg.to_json() == build_circle_config(10, 40, 5).to_json());
        const auto t = cfg.tournament();
        // Local order: both neighbourhoods of every point are transitive.
        for (int x = 0; x < t.size(); ++x) {
            for (const auto& side : {t.dominated(x), t.dominators(x)}) {
                for (int a : side)
                    for (int b : side)
                        for (int c : side) {
                            if (a == b || a == c || b == c) continue;
                            if (t.arc(a, b) && t.arc(b, c)) REQUIRE(t.arc(a, c));
                        }
            }
        }
    }
    SECTION("serialization round trip") {
        const auto cfg = build_circle_config(6, 24, 9);
        const auto back = CircleConfig::from_json(cfg.to_json());
        REQUIRE(back.to_json() == cfg.to_json());
    }
}

TEST_CASE("induced topology classification", "[trees]") {
    SECTION("quartet split and star") {
        const auto split = induced_topology(cherry_quartet(), {0, 1, 2, 3});
        REQUIRE(split.kind == Topology::Kind::Split);
        REQUIRE(split.groups == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

        const auto star = induced_topology(star_quartet(), {0, 1, 2, 3});
        REQUIRE(star.kind == Topology::Kind::Star);
    }
    SECTION("caterpillar and snowflake sextets") {
        const auto cat = induced_topology(caterpillar_sextet(), {0, 1, 2, 3, 4, 5});
        REQUIRE(cat.kind == Topology::Kind::Caterpillar);
        REQUIRE(cat.groups == std::vector<std::vector<int>>{{0, 1}, {2}, {3}, {4, 5}});

        const auto snow = induced_topology(snowflake_sextet(), {0, 1, 2, 3, 4, 5});
        REQUIRE(snow.kind == Topology::Kind::Snowflake);
        REQUIRE(snow.groups == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    }
    SECTION("subset size checked") {
        REQUIRE_THROWS_AS(induced_topology(cherry_quartet(), {0, 1, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(induced_topology(cherry_quartet(), {0, 1, 2, 2}),
                          std::invalid_argument);
    }
    SECTION("degree-3 trees never give star quartets or other sextets") {
        const auto u = random_unrooted_fragment(8, 3, 21);
        std::vector<int> idx(u.leaf_count());
        std::iota(idx.begin(), idx.end(), 0);
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c)
                    for (int d = c + 1; d < 8; ++d) {
                        const auto topo = induced_topology(u, {a, b, c, d});
                        REQUIRE(topo.kind == Topology::Kind::Split);
                    }
        for (int drop1 = 0; drop1 < 8; ++drop1)
            for (int drop2 = drop1 + 1; drop2 < 8; ++drop2) {
                std::vector<int> six;
                for (int v = 0; v < 8; ++v)
                    if (v != drop1 && v != drop2) six.push_back(v);
                const auto topo = induced_topology(u, six);
                REQUIRE((topo.kind == Topology::Kind::Caterpillar ||
                         topo.kind == Topology::Kind::Snowflake));
            }
    }
}

TEST_CASE("rooted and unrooted views agree through the relations", "[trees]") {
    SECTION("d_from_c matches path disjointness") {
        for (std::uint64_t seed : {0, 1, 2}) {
            const auto t = random_rooted_fragment(10, 2, seed);
            const auto [c, order] = c_of_leaves(t);
            const auto via_c = d_from_c(c);
            const auto direct = d_of_leaves(unroot(t));
            for (int x = 0; x < 10; ++x)
                for (int y = 0; y < 10; ++y)
                    for (int z = 0; z < 10; ++z)
                        for (int w = 0; w < 10; ++w)
                            REQUIRE(via_c.holds(x, y, z, w) == direct.holds(x, y, z, w));
        }
    }
    SECTION("c_from_d re-roots the tree at a leaf") {
        for (std::uint64_t seed : {3, 4}) {
            const auto u = random_unrooted_fragment(9, 3, seed);
            const auto d = d_of_leaves(u);
            for (int a : {0, 4, 8}) {
                const auto cd = c_from_d(d, a);
                const auto rr = reroot_at_leaf(u, a);
                const auto [cr, order] = c_of_leaves(rr.tree);
                // c_from_d numbers the remaining leaves in ascending order.
                std::vector<int> kept;
                for (int v = 0; v < 9; ++v)
                    if (v != a) kept.push_back(v);
                auto cd_label = [&kept](int orig) {
                    return static_cast<int>(
                        std::find(kept.begin(), kept.end(), orig) - kept.begin());
                };
                const int m = rr.tree.leaf_count();
                REQUIRE(m == 8);
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y)
                        for (int z = 0; z < m; ++z) {
                            const int ox = rr.original_label[x];
                            const int oy = rr.original_label[y];
                            const int oz = rr.original_label[z];
                            REQUIRE(cr.holds(x, y, z) ==
                                    cd.holds(cd_label(ox), cd_label(oy), cd_label(oz)));
                        }
            }
        }
    }
    SECTION("root leaf extension keeps internal degrees at 3 for binary trees") {
        const auto t = random_rooted_fragment(8, 2, 9);
        const auto u = unroot_with_root_leaf(t);
        REQUIRE(u.leaf_count() == 9);
        for (int v = u.leaf_count(); v < u.node_count(); ++v) REQUIRE(u.degree(v) == 3);
        REQUIRE(all_pass(check_d_axioms(d_of_leaves(u), kD14)));
    }
}

TEST_CASE("witness closure doubles every leaf into a cherry", "[trees]") {
    const auto t = LeafTree::parse("(0,(1,(2,3)))");
    const auto closed = witness_closure(t);
    REQUIRE(closed.tree.leaf_count() == 8);
    REQUIRE(closed.tree.to_text() == "((0,1),((2,3),((4,5),(6,7))))");
    REQUIRE(closed.original_image == std::vector<int>{0, 2, 4, 6});

    const auto [c, order] = c_of_leaves(closed.tree);
    REQUIRE(all_pass(check_c_axioms(c, kC14)));
}
