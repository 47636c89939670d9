#include <catch2/catch_amalgamated.hpp>

#include "whittle/torsion.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace whittle;
using namespace fixtures;

namespace {

GroupRingElement classic_unit() // t + t^4 - 1 at n = 5
{
    return GroupRingElement(5, {Int(-1), Int(1), Int(0), Int(0), Int(1)});
}

// two-term complex Zpi --(*u)--> Zpi sitting in the given degrees
ChainComplexZG two_term(const GroupRingElement& u, int upper_degree)
{
    const int n = u.modulus();
    GroupRingMatrix d(n, 1, 1);
    d(0, 0) = u;
    return ChainComplexZG(n, upper_degree - 1, {{"e"}, {"f"}},
                          {GroupRingMatrix(n, 0, 1), d});
}

// the Fig.-1 elementary expansion: closure{ac, bc} included into the full
// triangle (sigma = ab, tau = abc glued on)
SimplicialMap wedge_into_triangle()
{
    auto small = close_downward({{0, 2}, {1, 2}});
    auto big = full_simplex(2);
    return SimplicialMap(small, big, {{0, 0}, {1, 1}, {2, 2}});
}

} // namespace

TEST_CASE("twisted induced chain map and cone")
{
    SECTION("cone of the identity is acyclic for any labeling")
    {
        auto circle = boundary_simplex(2);
        for (int n : {1, 5}) {
            auto w = n == 1 ? CyclicCoverLabeling(circle, 1, {})
                            : labeling_from_tree(circle, n, {{{1, 2}, 1}});
            auto cone = mapping_cone_zg(identity_map(circle), w);
            CHECK_FALSE(acyclicity_witness(cone).has_value());
        }
    }
    SECTION("cone of an elementary expansion inclusion is acyclic at n = 1")
    {
        auto f = wedge_into_triangle();
        auto cone = mapping_cone_zg(f, CyclicCoverLabeling(f.target(), 1, {}));
        CHECK_FALSE(acyclicity_witness(cone).has_value());
    }
    SECTION("cone of circle -> point has homology in degree 2")
    {
        auto circle = boundary_simplex(2);
        SimplicialMap f(circle, point(), {{0, 0}, {1, 0}, {2, 0}});
        auto cone = mapping_cone_zg(f, CyclicCoverLabeling(point(), 1, {}));
        auto witness = acyclicity_witness(cone);
        REQUIRE(witness.has_value());
        CHECK(witness->first == 2);
        CHECK(witness->second == HomologyGroup{1, {}});
    }
    SECTION("disconnected complexes are rejected")
    {
        auto two_points = close_downward({{0}, {1}});
        SimplicialMap f(two_points, two_points, {{0, 0}, {1, 1}});
        CHECK_THROWS_AS(mapping_cone_zg(f, CyclicCoverLabeling(two_points, 1, {})),
                        NotConnected);
    }
    SECTION("the twist realigns lifts on a nontrivially labeled identity")
    {
        auto circle = boundary_simplex(2);
        auto w = labeling_from_tree(circle, 5, {{{1, 2}, 2}});
        auto phi = twisted_induced_chain_map(identity_map(circle), w);
        CHECK(phi.component(0)(0, 0) == GroupRingElement::one(5));
        CHECK(phi.component(1)(2, 2) == GroupRingElement::one(5));
    }
}

TEST_CASE("based acyclic complexes")
{
    SECTION("the two-term unit complex is based acyclic")
    {
        BasedAcyclicComplex c(two_term(classic_unit(), 1));
        CHECK(c.odd_rank() == 1);
        CHECK(c.even_rank() == 1);
    }
    SECTION("a non-unit boundary is rejected")
    {
        GroupRingElement not_unit(2, {Int(1), Int(1)}); // 1 + t at n = 2
        CHECK_THROWS_AS(BasedAcyclicComplex(two_term(not_unit, 1)), Error);
    }
    SECTION("cones accepted by the pipeline have equal odd and even ranks")
    {
        auto f = wedge_into_triangle();
        auto cone = mapping_cone_zg(f, CyclicCoverLabeling(f.target(), 1, {}));
        BasedAcyclicComplex c(std::move(cone));
        CHECK(c.odd_rank() == c.even_rank());
    }
}

TEST_CASE("chain contraction")
{
    SECTION("two-term unit complex: delta is multiplication by the inverse")
    {
        BasedAcyclicComplex c(two_term(classic_unit(), 1));
        auto contraction = chain_contraction_rational(c);
        // 5 has divisors 1 and 5; in both factors delta_0 must be the image
        // of t^2 + t^3 - 1 (the inverse of the boundary)
        auto vinv = *inverse(classic_unit());
        REQUIRE(contraction.factors.size() == 2);
        for (std::size_t i = 0; i < contraction.factors.size(); ++i) {
            const auto& fc = contraction.factors[i];
            const auto& delta0 = contraction.contractions[i].delta[0];
            CHECK(delta0(0, 0) == fc.field->project(vinv));
        }
    }
    SECTION("identity holds on the cone of an expansion inclusion")
    {
        auto f = wedge_into_triangle();
        auto cone = mapping_cone_zg(f, CyclicCoverLabeling(f.target(), 1, {}));
        // construction asserts d*delta + delta*d = id; reaching here is the test
        CHECK_NOTHROW(chain_contraction_rational(BasedAcyclicComplex(std::move(cone))));
    }
}

TEST_CASE("torsion of based acyclic complexes")
{
    auto u = classic_unit();
    SECTION("two-term unit complex in degrees (1,0) gives the class of u")
    {
        auto cls = torsion_of_based_acyclic(BasedAcyclicComplex(two_term(u, 1)));
        CHECK(wh_equal(cls.representative(), u));
        CHECK_FALSE(cls.is_trivial());
    }
    SECTION("shifted to degrees (2,1) gives u or its inverse")
    {
        auto cls = torsion_of_based_acyclic(BasedAcyclicComplex(two_term(u, 2)));
        auto uinv = *inverse(u);
        CHECK((wh_equal(cls.representative(), u) || wh_equal(cls.representative(), uinv)));
        // parity convention: the odd-to-even map here is the contraction
        CHECK(wh_equal(cls.representative(), uinv));
    }
    SECTION("monomial boundary blocks give the trivial class")
    {
        const int n = 5;
        GroupRingMatrix d(n, 2, 2);
        d(0, 0) = GroupRingElement::monomial(n, 2);
        d(1, 1) = GroupRingElement::monomial(n, 3, -1);
        ChainComplexZG c(n, 0, {{"a", "b"}, {"p", "q"}}, {GroupRingMatrix(n, 0, 2), d});
        auto cls = torsion_of_based_acyclic(BasedAcyclicComplex(std::move(c)));
        CHECK(cls.is_trivial());
    }
}

TEST_CASE("whitehead torsion of simplicial maps")
{
    SECTION("identity maps have trivial torsion for several moduli")
    {
        auto circle = boundary_simplex(2);
        for (int n : {1, 2, 3, 5, 6}) {
            auto w = n == 1 ? CyclicCoverLabeling(circle, 1, {})
                            : labeling_from_tree(circle, n, {{{1, 2}, 1}});
            auto cls = whitehead_torsion(identity_map(circle), w);
            CHECK(cls.is_trivial());
        }
        CHECK(whitehead_torsion(identity_map(full_simplex(2)), 4).is_trivial());
    }
    SECTION("expansion inclusions have trivial torsion at n = 1")
    {
        CHECK(whitehead_torsion(wedge_into_triangle(), 1).is_trivial());
        // a 1-dimensional expansion: point into an edge
        SimplicialMap g(point(), close_downward({{0, 1}}), {{0, 0}});
        CHECK(whitehead_torsion(g, 1).is_trivial());
    }
    SECTION("circle to point is not a pi-homology equivalence")
    {
        auto circle = boundary_simplex(2);
        SimplicialMap f(circle, point(), {{0, 0}, {1, 0}, {2, 0}});
        try {
            whitehead_torsion(f, 1);
            FAIL("expected NotAPiHomologyEquivalence");
        } catch (const NotAPiHomologyEquivalence& e) {
            CHECK(e.witness_degree == 2);
        }
    }
    SECTION("n = 1 sanity: accepted maps always give the trivial class")
    {
        auto [sd, f] = last_vertex_map(full_simplex(2));
        CHECK(whitehead_torsion(f, 1).is_trivial());
    }
}

TEST_CASE("contraction independence of the torsion class")
{
    auto u = classic_unit();
    std::vector<BasedAcyclicComplex> instances;
    instances.emplace_back(two_term(u, 1));
    instances.emplace_back(two_term(u, 2));
    {
        auto f = wedge_into_triangle();
        instances.emplace_back(mapping_cone_zg(f, CyclicCoverLabeling(f.target(), 1, {})));
        auto circle = boundary_simplex(2);
        auto w = labeling_from_tree(circle, 5, {{{1, 2}, 1}});
        instances.emplace_back(mapping_cone_zg(identity_map(circle), w));
    }
    for (const auto& c : instances) {
        auto base = torsion_of_based_acyclic(c);
        for (unsigned long long seed = 1; seed <= 10; ++seed) {
            ContractionPerturbation p{seed, 2};
            auto again = torsion_of_based_acyclic(c, &p);
            CHECK(base == again);
        }
    }
}

TEST_CASE("composition formula for torsion on expansion chains")
{
    // closure{ac,bc} -> triangle -> triangle+tail, all inclusions, with a
    // (necessarily trivial-holonomy) labeling on the final target
    auto mid = full_simplex(2);
    auto g = wedge_into_triangle();                        // Z -> Y
    SimplicialMap f(mid, triangle_with_tail(), {{0, 0}, {1, 1}, {2, 2}}); // Y -> X
    auto fg = compose(f, g);
    for (int n : {1, 3}) {
        CyclicCoverLabeling w(f.target(), n, {});
        auto t_fg = whitehead_torsion(fg, w);
        auto t_f = whitehead_torsion(f, w);
        auto t_g = whitehead_torsion(g, pullback_labeling(f, w));
        CHECK(wh_equal(t_fg.representative(),
                       t_f.representative() * t_g.representative()));
    }
}
