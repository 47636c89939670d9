#include <catch2/catch_amalgamated.hpp>

#include "whittle/chain_complex.hpp"
#include "whittle/complex.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace whittle;
using namespace fixtures;

TEST_CASE("close_downward")
{
    SECTION("single triangle has 7 simplices")
    {
        auto k = close_downward({{0, 1, 2}});
        CHECK(k.size() == 7);
        CHECK(k.contains({0, 1, 2}));
        CHECK(k.contains({0, 2}));
        CHECK(k.contains({1}));
    }
    SECTION("boundary of a triangle has 6 simplices")
    {
        auto k = close_downward({{0, 1}, {1, 2}, {0, 2}});
        CHECK(k.size() == 6);
        CHECK_FALSE(k.contains({0, 1, 2}));
    }
    SECTION("triangle plus pendant edge: triangle closure plus cd and d")
    {
        auto k = triangle_with_tail();
        CHECK(k.size() == 9); // 7 from the triangle, plus {2,3} and {3}
        CHECK(k.contains({2, 3}));
        CHECK(k.contains({3}));
    }
    SECTION("empty simplex is rejected")
    {
        CHECK_THROWS_AS(close_downward({Simplex{}}), InvalidSimplex);
    }
    SECTION("idempotent")
    {
        auto k = triangle_with_tail();
        auto closed_again = close_downward(k.maximal_simplices());
        CHECK(k == closed_again);
    }
}

TEST_CASE("closed_star")
{
    SECTION("star of the hub vertex is the whole complex")
    {
        auto k = triangle_with_tail();
        CHECK(closed_star(k, {2}) == k);
    }
    SECTION("star of a vertex of the triangle boundary")
    {
        auto k = boundary_simplex(2);
        CHECK(closed_star(k, {0}) == close_downward({{0, 1}, {0, 2}}));
    }
    SECTION("star of an edge of the full simplex is everything")
    {
        auto k = full_simplex(3);
        CHECK(closed_star(k, {0, 1}) == k);
    }
    SECTION("missing simplex is rejected")
    {
        auto k = boundary_simplex(2);
        CHECK_THROWS_AS(closed_star(k, {0, 1, 2}), NotASimplex);
    }
}

TEST_CASE("intersect")
{
    auto d3 = full_simplex(3);
    SECTION("stars in a full simplex obey the star law on the nose")
    {
        CHECK(intersect(closed_star(d3, {0}), closed_star(d3, {1})) == closed_star(d3, {0, 1}));
    }
    SECTION("idempotent") { CHECK(intersect(d3, d3) == d3); }
    SECTION("commutative and associative on random complexes")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            auto a = random_complex(rng, 6);
            auto b = random_complex(rng, 6);
            auto c = random_complex(rng, 6);
            CHECK(intersect(a, b) == intersect(b, a));
            CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
            CHECK(intersect(a, a) == a);
        }
    }
}

TEST_CASE("star-intersection law on coface sets")
{
    // For cofaces the law is exact: the common cofaces of sigma_1..sigma_k
    // are the cofaces of their union, and there are none unless the union
    // is a simplex.
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_complex(rng, 9);
        auto all = k.simplices_by_dim();
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int rep = 0; rep < 12; ++rep) {
            const Simplex& s1 = all[pick(rng)];
            const Simplex& s2 = all[pick(rng)];
            auto st1 = star_cofaces(k, s1);
            auto st2 = star_cofaces(k, s2);
            std::set<Simplex> meet;
            for (const auto& t : st1)
                if (st2.count(t))
                    meet.insert(t);
            Simplex u = simplex_union(s1, s2);
            if (k.contains(u))
                CHECK(meet == star_cofaces(k, u));
            else
                CHECK(meet.empty());
        }
    }
}

TEST_CASE("closed star cover")
{
    SECTION("full triangle: every vertex star is everything")
    {
        auto cover = closed_star_cover(full_simplex(2));
        REQUIRE(cover.pieces.size() == 3);
        for (const auto& p : cover.pieces)
            CHECK(p == full_simplex(2));
    }
    SECTION("triangle boundary: stars are paths of two edges")
    {
        auto cover = closed_star_cover(boundary_simplex(2));
        REQUIRE(cover.pieces.size() == 3);
        for (const auto& p : cover.pieces) {
            CHECK(p.simplices_of_dim(1).size() == 2);
            CHECK(p.simplices_of_dim(0).size() == 3);
        }
    }
    SECTION("pendant vertex star")
    {
        auto cover = closed_star_cover(triangle_with_tail());
        // centers are vertices 0,1,2,3 in order; star(3) = closure{23}
        CHECK(cover.pieces[3] == close_downward({{2, 3}}));
    }
}

TEST_CASE("nerve")
{
    SECTION("single piece gives a point")
    {
        ClosedCover cover;
        cover.ambient = full_simplex(2);
        cover.pieces = {full_simplex(2)};
        CHECK(nerve(cover) == close_downward({{0}}));
    }
    SECTION("closed edge cover of the triangle boundary")
    {
        auto k = boundary_simplex(2);
        ClosedCover cover;
        cover.ambient = k;
        cover.pieces = {close_downward({{0, 1}}), close_downward({{0, 2}}),
                        close_downward({{1, 2}})};
        auto nv = nerve(cover);
        // pairwise intersections are single vertices, the triple is empty
        CHECK(nv == close_downward({{0, 1}, {0, 2}, {1, 2}}));
    }
    SECTION("open-star nerve of a vertex cover reproduces the complex")
    {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            auto k = random_complex(rng, 8);
            std::vector<Simplex> centers;
            std::map<int, int> newid;
            for (int v : k.vertices()) {
                newid[v] = static_cast<int>(centers.size());
                centers.push_back({v});
            }
            auto nv = star_nerve(k, centers);
            SimplicialComplex relabeled;
            for (const auto& s : k.simplices()) {
                Simplex r;
                for (int v : s)
                    r.push_back(newid[v]);
                relabeled.insert_raw(make_simplex(r));
            }
            CHECK(nv == relabeled);
        }
    }
    SECTION("open-star nerve of vertex cover of the triangle boundary is the boundary")
    {
        auto k = boundary_simplex(2);
        auto nv = star_nerve(k, {{0}, {1}, {2}});
        CHECK(nv == boundary_simplex(2));
    }
}

TEST_CASE("nerve homology matches the complex for vertex star covers")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 15; ++trial) {
        auto k = random_complex(rng, 8);
        std::vector<Simplex> centers;
        for (int v : k.vertices())
            centers.push_back({v});
        auto nv = star_nerve(k, centers);
        CHECK(homology(chain_complex(k)) == homology(chain_complex(nv)));
    }
}

TEST_CASE("barycentric subdivision")
{
    SECTION("edge becomes a path with 3 vertices and 2 edges")
    {
        auto sd = barycentric_subdivision(close_downward({{0, 1}}));
        CHECK(sd.complex.simplices_of_dim(0).size() == 3);
        CHECK(sd.complex.simplices_of_dim(1).size() == 2);
        CHECK(sd.complex.dimension() == 1);
    }
    SECTION("point stays a point")
    {
        auto sd = barycentric_subdivision(point());
        CHECK(sd.complex == close_downward({{0}}));
        CHECK(sd.vertex_to_simplex == std::vector<Simplex>{{0}});
    }
    SECTION("Euler characteristic is preserved")
    {
        for (const auto& k :
             {boundary_simplex(3), full_simplex(2), triangle_with_tail(), boundary_simplex(2)}) {
            auto sd = barycentric_subdivision(k);
            CHECK(euler_characteristic(sd.complex) == euler_characteristic(k));
        }
        CHECK(euler_characteristic(boundary_simplex(3)) == 2);
    }
}

TEST_CASE("euler characteristic")
{
    CHECK(euler_characteristic(point()) == 1);
    CHECK(euler_characteristic(boundary_simplex(2)) == 0);
    CHECK(euler_characteristic(boundary_simplex(3)) == 2); // 4 - 6 + 4
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(point()));
    CHECK(is_connected(triangle_with_tail()));
    CHECK_FALSE(is_connected(close_downward({{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(SimplicialComplex()));
}
