#include <catch2/catch_amalgamated.hpp>

#include "whittle/simplicial_map.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace whittle;
using namespace fixtures;

namespace {

// the running example: circle = triangle boundary on 0,1,2 mapping onto
// the segment {10,11} by 0|->10, 1|->11, 2|->11
SimplicialMap circle_to_segment()
{
    return SimplicialMap(boundary_simplex(2), close_downward({{10, 11}}),
                         {{0, 10}, {1, 11}, {2, 11}});
}

} // namespace

TEST_CASE("validate")
{
    SECTION("circle onto segment is simplicial") { CHECK(circle_to_segment().validates()); }
    SECTION("edge to two disconnected vertices is not")
    {
        SimplicialMap f(close_downward({{0, 1}}), close_downward({{10}, {11}}),
                        {{0, 10}, {1, 11}});
        auto bad = f.first_violation();
        REQUIRE(bad.has_value());
        CHECK(*bad == Simplex{0, 1});
    }
    SECTION("identity validates")
    {
        CHECK(identity_map(triangle_with_tail()).validates());
    }
}

TEST_CASE("fiber subcomplex")
{
    auto f = circle_to_segment();
    SECTION("fiber over the whole segment is the whole circle")
    {
        CHECK(fiber_subcomplex(f, {10, 11}) == boundary_simplex(2));
    }
    SECTION("fiber over the doubled vertex is an edge")
    {
        CHECK(fiber_subcomplex(f, {11}) == close_downward({{1, 2}}));
    }
    SECTION("fiber over the embedded vertex is a point")
    {
        CHECK(fiber_subcomplex(f, {10}) == close_downward({{0}}));
    }
    SECTION("simplex must lie in the target")
    {
        CHECK_THROWS_AS(fiber_subcomplex(f, {10, 12}), NotASimplex);
    }
}

TEST_CASE("fiber properties on random maps")
{
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        auto src = random_complex(rng, 9);
        auto f = random_map(rng, src, 6);
        auto targets = f.target().simplices_by_dim();
        std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
        for (int rep = 0; rep < 6; ++rep) {
            const Simplex& s1 = targets[pick(rng)];
            const Simplex& s2 = targets[pick(rng)];
            auto f1 = fiber_subcomplex(f, s1);
            auto f2 = fiber_subcomplex(f, s2);
            Simplex meet = simplex_intersection(s1, s2);
            if (!meet.empty())
                CHECK(intersect(f1, f2) == fiber_subcomplex(f, meet));
            else
                CHECK(intersect(f1, f2).empty());
            // monotone in the simplex
            if (is_subset(s1, s2))
                CHECK(f1.is_subcomplex_of(f2));
        }
        // fibers over maximal simplices cover the source
        SimplicialComplex un;
        for (const auto& m : f.target().maximal_simplices()) {
            auto fib = fiber_subcomplex(f, m);
            for (const auto& s : fib.simplices())
                un.insert_raw(s);
        }
        CHECK(un == f.source());
    }
}

TEST_CASE("compose")
{
    auto f = circle_to_segment();
    SECTION("identity laws")
    {
        auto idt = identity_map(f.target());
        auto ids = identity_map(f.source());
        auto left = compose(idt, f);
        auto right = compose(f, ids);
        CHECK(left.vertex_map() == f.vertex_map());
        CHECK(right.vertex_map() == f.vertex_map());
    }
    SECTION("collapse to a point")
    {
        SimplicialMap to_point(f.target(), close_downward({{77}}), {{10, 77}, {11, 77}});
        auto g = compose(to_point, f);
        CHECK(g.validates());
        for (auto [v, w] : g.vertex_map())
            CHECK(w == 77);
    }
    SECTION("mismatched complexes are rejected")
    {
        CHECK_THROWS_AS(compose(f, f), CompositionMismatch);
    }
    SECTION("associativity and validation on random chains")
    {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 15; ++trial) {
            auto z = random_complex(rng, 6);
            auto g = random_map(rng, z, 5);
            auto f2 = random_map(rng, g.target(), 4);
            auto h = random_map(rng, f2.target(), 3);
            CHECK(compose(h, compose(f2, g)).vertex_map() ==
                  compose(compose(h, f2), g).vertex_map());
            CHECK(compose(f2, g).validates());
        }
    }
}

TEST_CASE("restrict")
{
    auto f = circle_to_segment();
    SECTION("restriction to the whole target is f")
    {
        auto r = restrict(f, f.target());
        CHECK(r.source() == f.source());
        CHECK(r.vertex_map() == f.vertex_map());
    }
    SECTION("restriction over a vertex is the fiber map")
    {
        auto r = restrict(f, close_downward({{11}}));
        CHECK(r.source() == close_downward({{1, 2}}));
        CHECK(r.target() == close_downward({{11}}));
    }
    SECTION("restriction to the empty complex is the empty map")
    {
        auto r = restrict(f, SimplicialComplex());
        CHECK(r.source().empty());
    }
    SECTION("non-subcomplexes are rejected")
    {
        CHECK_THROWS_AS(restrict(f, close_downward({{10, 12}})), NotASubcomplex);
    }
}

TEST_CASE("last vertex map")
{
    for (const auto& k : {full_simplex(2), boundary_simplex(3), triangle_with_tail()}) {
        auto [sd, f] = last_vertex_map(k);
        CHECK(f.validates());
        CHECK(f.source() == sd.complex);
        CHECK(f.target() == k);
    }
}
