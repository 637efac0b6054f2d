#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "navtest/bench.hpp"
#include "navtest/errors.hpp"
#include "navtest/navgraph.hpp"

#include "support/fixtures.hpp"

using namespace navtest;

namespace {

Multidigraph two_cycle() {
    return Multidigraph({"home", "a"},
                        {Edge{"E1", "home", "a"}, Edge{"E2", "a", "home"}}, "home");
}

std::size_t reset_count(const Multidigraph& g) {
    std::size_t n = 0;
    for (const Edge& e : g.edges())
        if (e.kind == EdgeKind::reset) ++n;
    return n;
}

} // namespace

TEST_CASE("construction validates the invariants") {
    CHECK_THROWS_AS(Multidigraph({"a"}, {}, "home"), Error);
    CHECK_THROWS_AS(Multidigraph({"h", "h"}, {}, "h"), Error);
    CHECK_THROWS_AS(Multidigraph({"h"}, {Edge{"E1", "h", "x"}}, "h"), Error);

    SUBCASE("duplicate edge id is a hard error") {
        CHECK_THROWS_AS(
            Multidigraph({"h", "a"}, {Edge{"E1", "h", "a"}, Edge{"E1", "a", "h"}}, "h"), Error);
    }
    SUBCASE("negative weights are rejected everywhere") {
        try {
            Multidigraph({"h", "a"}, {Edge{"E1", "h", "a", Cost(-1)}}, "h");
            FAIL("expected NegativeWeight");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::negative_weight);
        }
    }
    SUBCASE("identifiers are case-sensitive") {
        Multidigraph g({"h", "a", "A"}, {Edge{"E1", "h", "a"}, Edge{"e1", "h", "A"}}, "h");
        CHECK(g.edge("E1").to == "a");
        CHECK(g.edge("e1").to == "A");
    }
}

TEST_CASE("is_strongly_connected") {
    CHECK(is_strongly_connected(two_cycle()));
    Multidigraph leaf({"home", "a"}, {Edge{"E1", "home", "a"}}, "home");
    CHECK_FALSE(is_strongly_connected(leaf));
}

TEST_CASE("make_strongly_connected adds one reset per leaf") {
    Multidigraph g = load_graph_fixture(testsupport::read_fixture("example_nav.graph"));
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 8);
    CHECK_FALSE(is_strongly_connected(g));

    Multidigraph strong = make_strongly_connected(g);
    CHECK(strong.edge_count() == 12); // four leaf pages
    CHECK(reset_count(strong) == 4);
    CHECK(is_strongly_connected(strong));
    for (const Edge& e : strong.edges())
        if (e.kind == EdgeKind::reset) {
            CHECK(e.to == strong.home());
            CHECK(e.weight == Cost(0));
        }
}

TEST_CASE("augmentation edge cases") {
    SUBCASE("single vertex gains a self reset") {
        Multidigraph g({"home"}, {}, "home");
        Multidigraph strong = make_strongly_connected(g);
        REQUIRE(strong.edge_count() == 1);
        CHECK(strong.edges()[0].kind == EdgeKind::reset);
        CHECK(strong.edges()[0].from == "home");
        CHECK(strong.edges()[0].to == "home");
        CHECK(is_strongly_connected(strong));
    }
    SUBCASE("already strong graph is unchanged") {
        Multidigraph strong = make_strongly_connected(two_cycle());
        CHECK(strong == two_cycle());
    }
    SUBCASE("unreachable vertex is reported by name") {
        Multidigraph g({"home", "lost"}, {}, "home");
        try {
            make_strongly_connected(g);
            FAIL("expected NotReachableFromHome");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_reachable_from_home);
            CHECK(std::string(e.what()).find("lost") != std::string::npos);
        }
    }
    SUBCASE("non-leaf vertex that cannot reach home is reported") {
        // b has an out-edge (so no reset is added) but no way back
        Multidigraph g({"home", "b", "c"},
                       {Edge{"E1", "home", "b"}, Edge{"E2", "b", "c"}, Edge{"E3", "c", "b"}},
                       "home");
        try {
            make_strongly_connected(g);
            FAIL("expected NotStronglyConnectedAfterAugmentation");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_strongly_connected_after_augmentation);
        }
    }
}

TEST_CASE("augmentation is idempotent and only adds resets to home") {
    SplitMix64 rng(20240815);
    for (int trial = 0; trial < 60; ++trial) {
        int links = 1 + static_cast<int>(rng.below(12));
        Multidigraph g = random_multidigraph(links, rng);
        Multidigraph once = make_strongly_connected(g);
        Multidigraph twice = make_strongly_connected(once);
        CHECK(once == twice);
        CHECK(is_strongly_connected(once));
        // only new edges are resets, pointing home
        REQUIRE(once.edge_count() >= g.edge_count());
        for (std::size_t i = g.edge_count(); i < once.edge_count(); ++i) {
            CHECK(once.edges()[i].kind == EdgeKind::reset);
            CHECK(once.edges()[i].to == once.home());
        }
    }
}

TEST_CASE("path construction and costing") {
    Multidigraph g = two_cycle();
    Path p = make_path(g, {"E1", "E2"});
    CHECK(p.cost == Cost(2));

    CHECK(path_set_cost({}) == Cost(0));
    CHECK(path_set_cost({make_path(g, {"E1"})}) == Cost(1));
    CHECK(path_set_cost({p, make_path(g, {"E1"})}) == Cost(3));

    SUBCASE("non-incident edges rejected") {
        try {
            make_path(g, {"E1", "E1"});
            FAIL("expected NotAWalk");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_a_walk);
        }
    }
    SUBCASE("must start at home") {
        try {
            make_path(g, {"E2"});
            FAIL("expected DoesNotStartAtHome");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::does_not_start_at_home);
        }
    }
}

TEST_CASE("coverage predicate") {
    Multidigraph g = load_graph_fixture(testsupport::read_fixture("example_nav.graph"));
    std::vector<Path> all = {make_path(g, {"E0"}), make_path(g, {"E1", "E2", "E6"}),
                             make_path(g, {"E1", "E3", "E4", "E5"}), make_path(g, {"E1", "E7"})};
    CHECK(covers_all_real_edges(g, all));
    all.pop_back();
    CHECK_FALSE(covers_all_real_edges(g, all));
}

TEST_CASE("fixture parsing diagnostics") {
    CHECK_THROWS_AS(load_graph_fixture("E1 home"), Error);
    CHECK_THROWS_AS(load_graph_fixture("# only comments\n"), Error);
    CHECK_THROWS_AS(load_graph_fixture("E1 home a 1 extra"), Error);
    Multidigraph g = load_graph_fixture("# demo\nE1 home a 1 # trailing comment\nE2 a home 1/2\n");
    CHECK(g.home() == "home");
    CHECK(g.edge("E2").weight == Cost(1, 2));
}
