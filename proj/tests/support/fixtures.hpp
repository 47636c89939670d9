#pragma once

#include "whittle/complex.hpp"
#include "whittle/cyclic_cover.hpp"
#include "whittle/simplicial_map.hpp"

#include <random>

// Shared fixtures and seeded generators for the test suite.
namespace fixtures {

using namespace whittle;

// Equality of homology lists that treats degrees absent from the shorter
// list as trivial (both lists anchored at the same lowest degree).
inline bool same_homology(const std::vector<HomologyGroup>& a,
                          const std::vector<HomologyGroup>& b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        HomologyGroup ga = i < a.size() ? a[i] : HomologyGroup{};
        HomologyGroup gb = i < b.size() ? b[i] : HomologyGroup{};
        if (!(ga == gb))
            return false;
    }
    return true;
}

// full simplex on vertices 0..n
inline SimplicialComplex full_simplex(int n)
{
    Simplex top;
    for (int v = 0; v <= n; ++v)
        top.push_back(v);
    return close_downward({top});
}

// boundary of the full simplex on vertices 0..n
inline SimplicialComplex boundary_simplex(int n)
{
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int v = 0; v <= n; ++v)
            if (v != skip)
                f.push_back(v);
        facets.push_back(f);
    }
    return close_downward(facets);
}

inline SimplicialComplex point() { return close_downward({{0}}); }

// the minimal 6-vertex triangulation of the projective plane
inline SimplicialComplex rp2_six_vertices()
{
    return close_downward({{1, 2, 3},
                           {1, 2, 4},
                           {1, 3, 5},
                           {1, 4, 6},
                           {1, 5, 6},
                           {2, 3, 6},
                           {2, 4, 5},
                           {2, 5, 6},
                           {3, 4, 5},
                           {3, 4, 6}});
}

// triangle closure plus a pendant edge: closure{abc, cd} with a,b,c,d = 0..3
inline SimplicialComplex triangle_with_tail()
{
    return close_downward({{0, 1, 2}, {2, 3}});
}

// Random nonempty complex on at most max_vertices vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices)
{
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> count(1, std::max(1, n));
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::uniform_int_distribution<int> card(1, std::min(n, 4));
    std::vector<Simplex> maximal;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        std::set<int> verts;
        const int c = card(rng);
        while (static_cast<int>(verts.size()) < c)
            verts.insert(vert(rng));
        maximal.push_back(Simplex(verts.begin(), verts.end()));
    }
    return close_downward(maximal);
}

// Random simplicial map out of `source` built by pushing its maximal
// simplices through a random vertex assignment; the target is the image
// closure plus a few extra random simplices so it is not always onto.
inline SimplicialMap random_map(std::mt19937_64& rng, const SimplicialComplex& source,
                                int target_vertices, bool pad_target = true)
{
    std::uniform_int_distribution<int> tv(0, target_vertices - 1);
    std::map<int, int> vm;
    for (int v : source.vertices())
        vm[v] = tv(rng);
    std::vector<Simplex> target_maximal;
    for (const auto& s : source.simplices()) {
        Simplex img;
        for (int v : s)
            img.push_back(vm[v]);
        target_maximal.push_back(make_simplex(img));
    }
    if (pad_target) {
        std::uniform_int_distribution<int> extra(0, 2);
        std::uniform_int_distribution<int> card(1, 3);
        const int e = extra(rng);
        for (int i = 0; i < e; ++i) {
            std::set<int> verts;
            const int c = card(rng);
            while (static_cast<int>(verts.size()) < c)
                verts.insert(tv(rng));
            target_maximal.push_back(Simplex(verts.begin(), verts.end()));
        }
    }
    SimplicialComplex target = close_downward(target_maximal);
    return SimplicialMap(source, target, std::move(vm));
}

// Random valid cyclic labeling on K: a random coboundary (always a valid
// cocycle), plus, when K is connected, an attempt to add non-tree holonomy
// through the tree construction.
inline CyclicCoverLabeling random_labeling(std::mt19937_64& rng, const SimplicialComplex& k,
                                           int n)
{
    std::uniform_int_distribution<int> val(0, n - 1);
    std::map<int, int> potential;
    for (int v : k.vertices())
        potential[v] = val(rng);
    std::map<std::pair<int, int>, int> omega;
    for (const auto& s : k.simplices())
        if (s.size() == 2)
            omega[{s[0], s[1]}] = ((potential[s[1]] - potential[s[0]]) % n + n) % n;
    if (is_connected(k) && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        std::map<std::pair<int, int>, int> gen;
        for (const auto& s : k.simplices())
            if (s.size() == 2 && std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                gen[{s[0], s[1]}] = val(rng);
        try {
            auto tree = labeling_from_tree(k, n, gen);
            for (auto& [e, g] : omega)
                g = (g + tree.omega(e.first, e.second)) % n;
        } catch (const NotACocycle&) {
            // keep the plain coboundary
        }
    }
    return CyclicCoverLabeling(k, n, omega);
}

} // namespace fixtures
