#include <doctest.h>

#include <algorithm>
#include <set>

#include "hkface/complex.hpp"
#include "test_support.hpp"

using namespace hkface;

namespace {

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& lists) {
    std::set<std::set<int>> out;
    for (const auto& l : lists) out.insert(std::set<int>(l.begin(), l.end()));
    return out;
}

// The counterexample complex: pendant edge {1,2} plus the hollow triangle
// on {2,3,4}.
SimplicialComplex counterexample() {
    return SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("build_complex validation and antichain reduction") {
    SUBCASE("counterexample complex") {
        auto c = counterexample();
        CHECK(c.dimension_d() == 2);
        CHECK(c.facet_masks().size() == 4);
    }
    SUBCASE("non-maximal faces are dropped") {
        SimplicialComplex c(3, {{1, 2, 3}, {1, 2}});
        CHECK(c.facet_masks().size() == 1);
        CHECK(c.facets()[0] == std::vector<int>{1, 2, 3});
    }
    SUBCASE("uncovered vertex is a hard error") {
        CHECK_THROWS_AS(SimplicialComplex(3, {{1, 2}}), ValidationError);
    }
    SUBCASE("vertex out of range") {
        CHECK_THROWS_AS(SimplicialComplex(3, {{1, 4}, {2, 3}}), ValidationError);
        CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}, {2, 3}}), ValidationError);
    }
    SUBCASE("empty inputs") {
        CHECK_THROWS_AS(SimplicialComplex(3, {}), ValidationError);
        CHECK_THROWS_AS(SimplicialComplex(3, {{1, 2, 3}, {}}), ValidationError);
    }
    SUBCASE("duplicate facets collapse") {
        SimplicialComplex c(2, {{1, 2}, {2, 1}});
        CHECK(c.facet_masks().size() == 1);
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), ValidationError);                   // loop
    CHECK_THROWS_AS(Graph(3, {{1, 2}}), ValidationError);                   // vertex 3 uncovered
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), ValidationError);                   // out of range
    CHECK(Graph(2, {{1, 2}, {2, 1}}).edges().size() == 1);                  // dedupe
}

TEST_CASE("minimal vertex covers") {
    SUBCASE("triangle") {
        Graph g(3, {{1, 2}, {2, 3}, {1, 3}});
        CHECK(as_sets(minimal_vertex_covers(g)) ==
              std::set<std::set<int>>{{1, 2}, {1, 3}, {2, 3}});
    }
    SUBCASE("five-cycle") {
        Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
        CHECK(as_sets(minimal_vertex_covers(g)) ==
              std::set<std::set<int>>{{1, 2, 4}, {1, 3, 5}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}});
    }
    SUBCASE("single edge") {
        Graph g(2, {{1, 2}});
        CHECK(as_sets(minimal_vertex_covers(g)) == std::set<std::set<int>>{{1}, {2}});
    }
}

TEST_CASE("edge ideal complex") {
    SUBCASE("five-cycle: facets are the maximal independent sets") {
        Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
        auto c = edge_ideal_complex(g);
        CHECK(as_sets(c.facets()) ==
              std::set<std::set<int>>{{3, 5}, {2, 4}, {2, 5}, {1, 4}, {1, 3}});
        // components are exactly the minimal covers
        CHECK(as_sets(face_ideal_decomposition(c).components()) == as_sets(minimal_vertex_covers(g)));
    }
    SUBCASE("K_{2,2}: one facet per side") {
        Graph g(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        auto c = edge_ideal_complex(g);
        CHECK(as_sets(c.facets()) == std::set<std::set<int>>{{1, 2}, {3, 4}});
    }
    SUBCASE("single edge") {
        auto c = edge_ideal_complex(Graph(2, {{1, 2}}));
        CHECK(as_sets(c.facets()) == std::set<std::set<int>>{{1}, {2}});
    }
}

TEST_CASE("complement duality between covers and facets") {
    auto rng = hkface::testing::make_rng(11);
    std::uniform_int_distribution<int> nv(2, 7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = nv(rng);
        std::vector<std::pair<int, int>> edges;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (std::uniform_int_distribution<int>(0, 1)(rng)) edges.emplace_back(a, b);
        // ensure coverage
        std::vector<bool> cov(static_cast<size_t>(n) + 1, false);
        for (auto [a, b] : edges) cov[static_cast<size_t>(a)] = cov[static_cast<size_t>(b)] = true;
        for (int u = 1; u <= n; ++u)
            if (!cov[static_cast<size_t>(u)]) edges.emplace_back(u, u == 1 ? 2 : 1);

        Graph g(n, edges);
        auto covers = minimal_vertex_covers(g);
        auto c = edge_ideal_complex(g);
        std::set<std::set<int>> complements;
        for (const auto& cover : covers) {
            std::set<int> comp;
            for (int u = 1; u <= n; ++u)
                if (std::find(cover.begin(), cover.end(), u) == cover.end()) comp.insert(u);
            complements.insert(comp);
        }
        CHECK(complements == as_sets(c.facets()));
    }
}

TEST_CASE("named families") {
    SUBCASE("path(3)") {
        auto c = named_family(Family::path, {3});
        CHECK(as_sets(c.facets()) == std::set<std::set<int>>{{1, 2}, {2, 3}});
        CHECK(as_sets(face_ideal_decomposition(c).components()) == std::set<std::set<int>>{{3}, {1}});
    }
    SUBCASE("cycle(4)") {
        auto c = named_family(Family::cycle, {4});
        CHECK(c.facet_masks().size() == 4);
        CHECK(c.dimension_d() == 2);
    }
    SUBCASE("complete_graph(3)") {
        auto c = named_family(Family::complete_graph, {3});
        CHECK(as_sets(c.facets()) == std::set<std::set<int>>{{1}, {2}, {3}});
    }
    SUBCASE("simplex") {
        auto c = named_family(Family::simplex, {4});
        CHECK(c.facet_masks().size() == 1);
        CHECK(c.dimension_d() == 4);
        // zero-ideal component
        auto comps = face_ideal_decomposition(c).prime_components;
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == 0);
    }
    SUBCASE("parameter minimums") {
        CHECK_THROWS_AS(named_family(Family::path, {2}), ValidationError);
        CHECK_THROWS_AS(named_family(Family::cycle, {2}), ValidationError);
        CHECK_THROWS_AS(named_family(Family::complete_graph, {1}), ValidationError);
        CHECK_THROWS_AS(named_family(Family::complete_bipartite, {0, 2}), ValidationError);
        CHECK_THROWS_AS(named_family(Family::simplex, {0}), ValidationError);
        CHECK_THROWS_AS(named_family("frobnitz", {1}), ValidationError);
    }
}

TEST_CASE("face ideal decomposition of the counterexample complex") {
    auto comps = as_sets(face_ideal_decomposition(counterexample()).components());
    CHECK(comps == std::set<std::set<int>>{{3, 4}, {1, 3}, {1, 4}, {1, 2}});
}

TEST_CASE("f-vectors") {
    SUBCASE("path family") {
        for (long r = 3; r <= 8; ++r) {
            auto f = named_family(Family::path, {r}).f_vector();
            REQUIRE(f.size() == 3);
            CHECK(f[0] == 1);
            CHECK(f[1] == r);
            CHECK(f[2] == r - 1);
        }
    }
    SUBCASE("counterexample complex") {
        auto f = counterexample().f_vector();
        CHECK(f == std::vector<Integer>{1, 4, 4});
    }
    SUBCASE("simplex(2)") {
        auto f = named_family(Family::simplex, {2}).f_vector();
        CHECK(f == std::vector<Integer>{1, 2, 1});
    }
}

TEST_CASE("f-vector against direct subset enumeration") {
    auto rng = hkface::testing::make_rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 9)(rng);
        std::vector<std::vector<int>> facets;
        int nf = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < nf; ++i) {
            std::vector<int> f;
            for (int u = 1; u <= n; ++u)
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) f.push_back(u);
            if (f.empty()) f.push_back(1);
            facets.push_back(f);
        }
        std::vector<int> all;
        for (int u = 1; u <= n; ++u) all.push_back(u);
        facets.push_back(all);  // guarantee coverage; reduction keeps the antichain
        SimplicialComplex c(n, facets);

        // oracle: walk all 2^n subsets
        std::vector<Integer> expect(static_cast<size_t>(c.dimension_d()) + 1, Integer(0));
        for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
            if (c.is_face(s)) expect[static_cast<size_t>(popcount(s))] += 1;
        CHECK(c.f_vector() == expect);
    }
}

TEST_CASE("h-vectors") {
    SUBCASE("counterexample: 1 + 2z + z^2") {
        auto hv = counterexample().h_vector();
        CHECK(hv.h == std::vector<Integer>{1, 2, 1});
        CHECK(hv.s == 2);
    }
    SUBCASE("path(3): expand (1-z)^2 + 3z(1-z) + 2z^2") {
        auto hv = named_family(Family::path, {3}).h_vector();
        CHECK(hv.h == std::vector<Integer>{1, 1});
        CHECK(hv.s == 1);
    }
    SUBCASE("cycle(n): expand (1-z)^2 + nz(1-z) + nz^2") {
        for (long n = 3; n <= 8; ++n) {
            auto hv = named_family(Family::cycle, {n}).h_vector();
            CHECK(hv.h == std::vector<Integer>{1, n - 2, 1});
            CHECK(hv.s == 2);
        }
    }
    SUBCASE("nonpure edge-ideal example has a negative entry") {
        SimplicialComplex c(4, {{2, 3, 4}, {1, 2}});
        auto hv = c.h_vector();
        CHECK(hv.h == std::vector<Integer>{1, 1, -1});
        CHECK(hv.s == 2);
    }
}

TEST_CASE("h-polynomial at z=1 counts top-dimensional facets") {
    auto rng = hkface::testing::make_rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        std::vector<std::vector<int>> facets;
        int nf = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int i = 0; i < nf; ++i) {
            std::vector<int> f;
            for (int u = 1; u <= n; ++u)
                if (std::uniform_int_distribution<int>(0, 1)(rng)) f.push_back(u);
            if (f.empty()) f.push_back(1);
            facets.push_back(f);
        }
        for (int u = 1; u <= n; ++u) facets.push_back({u});  // cover every vertex
        SimplicialComplex c(n, facets);

        Integer h_at_1(0);
        for (const auto& hi : c.h_vector().h) h_at_1 += hi;
        Integer top(0);
        for (VertexSet f : c.facet_masks())
            if (popcount(f) == c.dimension_d()) top += 1;
        CHECK(h_at_1 == top);
    }
}

TEST_CASE("exponent vectors") {
    ExponentVector ones(3);
    CHECK(ones.all_ones());
    CHECK(ones.product() == 1);
    ExponentVector v({2, 1, 3});
    CHECK_FALSE(v.all_ones());
    CHECK(v.product() == 6);
    CHECK(v.product_over(0b101) == 6);  // vertices 1 and 3
    CHECK(v.product_over(0) == 1);
    CHECK_THROWS_AS(ExponentVector({1, 0}), ValidationError);
    CHECK_THROWS_AS(ExponentVector(std::vector<long>{}), ValidationError);
}
