#pragma once

#include "whittle/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace whittle {

/// A simplex is a strictly increasing sequence of integer vertex ids.
using Simplex = std::vector<int>;

inline Simplex make_simplex(std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

inline bool is_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_intersection(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Face with vertex at position i removed.
inline Simplex face_dropping(const Simplex& s, std::size_t i)
{
    Simplex out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            out.push_back(s[j]);
    return out;
}

inline std::string simplex_to_string(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
    return out;
}

/// Finite abstract simplicial complex: a downward-closed set of simplices
/// stored canonically (each simplex once, vertices sorted). Immutable in
/// spirit; all operations return new values.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }

    const std::set<Simplex>& simplices() const { return simplices_; }

    std::set<int> vertices() const
    {
        std::set<int> out;
        for (const auto& s : simplices_)
            out.insert(s.begin(), s.end());
        return out;
    }

    int dimension() const
    {
        int d = -1;
        for (const auto& s : simplices_)
            d = std::max(d, dim(s));
        return d;
    }

    /// Simplices of one dimension, in lexicographic order.
    std::vector<Simplex> simplices_of_dim(int d) const
    {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (dim(s) == d)
                out.push_back(s);
        return out;
    }

    /// All simplices ordered by (dimension, lexicographic).
    std::vector<Simplex> simplices_by_dim() const
    {
        std::vector<Simplex> out(simplices_.begin(), simplices_.end());
        std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    /// Simplices not properly contained in any other simplex, sorted
    /// lexicographically (the SCX writer order).
    std::vector<Simplex> maximal_simplices() const
    {
        std::vector<Simplex> out;
        for (const auto& s : simplices_) {
            bool maximal = true;
            for (const auto& t : simplices_)
                if (t.size() > s.size() && is_subset(s, t)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_subcomplex_of(const SimplicialComplex& k) const
    {
        for (const auto& s : simplices_)
            if (!k.contains(s))
                return false;
        return true;
    }

    bool operator==(const SimplicialComplex& o) const { return simplices_ == o.simplices_; }

    /// Used by the builders below; keeps downward closure by inserting all
    /// nonempty subsets of s.
    void insert_closed(const Simplex& s)
    {
        if (s.empty())
            throw InvalidSimplex("empty simplex");
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i))
                    face.push_back(s[i]);
            simplices_.insert(std::move(face));
        }
    }

    /// Inserts a single simplex without closing downward; caller is
    /// responsible for the complex property (used by collapse moves).
    void insert_raw(const Simplex& s) { simplices_.insert(s); }
    void erase_raw(const Simplex& s) { simplices_.erase(s); }

  private:
    std::set<Simplex> simplices_;
};

/// Smallest downward-closed complex containing the given simplices.
inline SimplicialComplex close_downward(const std::vector<Simplex>& maximal)
{
    SimplicialComplex k;
    for (const auto& s : maximal) {
        if (s.empty())
            throw InvalidSimplex("close_downward: empty simplex in input");
        Simplex canon = s;
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        k.insert_closed(canon);
    }
    return k;
}

/// Closed star: all simplices tau with sigma ∪ tau in K. Downward closed;
/// equals the set of cofaces of sigma together with their faces.
inline SimplicialComplex closed_star(const SimplicialComplex& k, const Simplex& sigma)
{
    if (!k.contains(sigma))
        throw NotASimplex("closed_star: " + simplex_to_string(sigma) + " not in complex");
    SimplicialComplex out;
    for (const auto& tau : k.simplices())
        if (k.contains(simplex_union(sigma, tau)))
            out.insert_raw(tau);
    return out;
}

/// Cofaces of sigma in K (sigma included). Not a subcomplex: this is the
/// combinatorial open star, the object for which the star-intersection
/// law holds on the nose.
inline std::set<Simplex> star_cofaces(const SimplicialComplex& k, const Simplex& sigma)
{
    if (!k.contains(sigma))
        throw NotASimplex("star_cofaces: " + simplex_to_string(sigma) + " not in complex");
    std::set<Simplex> out;
    for (const auto& tau : k.simplices())
        if (is_subset(sigma, tau))
            out.insert(tau);
    return out;
}

inline SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b)
{
    SimplicialComplex out;
    for (const auto& s : a.simplices())
        if (b.contains(s))
            out.insert_raw(s);
    return out;
}

/// Ordered list of closed subcomplexes covering an ambient complex. When
/// produced by closed_star_cover the center simplex of each piece is kept.
struct ClosedCover {
    SimplicialComplex ambient;
    std::vector<SimplicialComplex> pieces;
    std::vector<Simplex> centers; // empty when not a star cover

    void validate() const
    {
        SimplicialComplex un;
        for (const auto& p : pieces)
            for (const auto& s : p.simplices())
                un.insert_raw(s);
        if (!(un == ambient))
            throw NotACover("cover pieces do not union to the ambient complex");
    }
};

enum class StarCoverKind { vertices, all_simplices };

/// Cover of K by closed stars of all vertices (or of all simplices).
inline ClosedCover closed_star_cover(const SimplicialComplex& k,
                                     StarCoverKind kind = StarCoverKind::vertices)
{
    ClosedCover cover;
    cover.ambient = k;
    std::vector<Simplex> centers;
    if (kind == StarCoverKind::vertices) {
        for (int v : k.vertices())
            centers.push_back({v});
    } else {
        auto all = k.simplices_by_dim();
        centers.assign(all.begin(), all.end());
    }
    for (const auto& c : centers) {
        cover.pieces.push_back(closed_star(k, c));
        cover.centers.push_back(c);
    }
    cover.validate();
    return cover;
}

/// Nerve of a cover: a simplex J on piece indices iff the pieces indexed
/// by J have nonempty common intersection. Built by cardinality so only
/// subsets whose proper faces are present get tested.
inline SimplicialComplex nerve(const ClosedCover& cover)
{
    const int m = static_cast<int>(cover.pieces.size());
    SimplicialComplex out;
    std::vector<std::pair<Simplex, SimplicialComplex>> frontier;
    for (int j = 0; j < m; ++j)
        if (!cover.pieces[j].empty()) {
            out.insert_raw({j});
            frontier.push_back({{j}, cover.pieces[j]});
        }
    while (!frontier.empty()) {
        std::vector<std::pair<Simplex, SimplicialComplex>> next;
        for (const auto& [face, inter] : frontier) {
            for (int j = face.back() + 1; j < m; ++j) {
                SimplicialComplex cut = intersect(inter, cover.pieces[j]);
                if (cut.empty())
                    continue;
                Simplex bigger = face;
                bigger.push_back(j);
                out.insert_raw(bigger);
                next.push_back({std::move(bigger), std::move(cut)});
            }
        }
        frontier = std::move(next);
    }
    return out; // downward closed by construction (faces added level by level)
}

/// Nerve of the open-star cover with the given centers: J is a simplex
/// iff the union of the centers indexed by J is a simplex of K. For the
/// vertex-star cover this reproduces K itself up to relabeling, which is
/// the combinatorial face of the nerve theorem.
inline SimplicialComplex star_nerve(const SimplicialComplex& k, const std::vector<Simplex>& centers)
{
    const int m = static_cast<int>(centers.size());
    SimplicialComplex out;
    std::vector<std::pair<Simplex, Simplex>> frontier; // (nerve face, union of centers)
    for (int j = 0; j < m; ++j)
        if (k.contains(centers[j])) {
            out.insert_raw({j});
            frontier.push_back({{j}, centers[j]});
        }
    while (!frontier.empty()) {
        std::vector<std::pair<Simplex, Simplex>> next;
        for (const auto& [face, uni] : frontier) {
            for (int j = face.back() + 1; j < m; ++j) {
                Simplex u = simplex_union(uni, centers[j]);
                if (!k.contains(u))
                    continue;
                Simplex bigger = face;
                bigger.push_back(j);
                out.insert_raw(bigger);
                next.push_back({std::move(bigger), std::move(u)});
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// Barycentric subdivision together with the dictionary from new vertex
/// ids back to the simplices of K they subdivide.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> vertex_to_simplex; // index = new vertex id
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& k)
{
    Subdivision sd;
    sd.vertex_to_simplex = k.simplices_by_dim();
    std::map<Simplex, int> id_of;
    for (std::size_t i = 0; i < sd.vertex_to_simplex.size(); ++i)
        id_of[sd.vertex_to_simplex[i]] = static_cast<int>(i);

    // Chains sigma_0 ⊊ sigma_1 ⊊ ... in the face poset, grown by DFS from
    // each simplex downward; every chain is a simplex of sd(K).
    std::vector<Simplex> chain;
    auto emit = [&](const std::vector<int>& ids) {
        Simplex s(ids);
        std::sort(s.begin(), s.end());
        sd.complex.insert_raw(s);
    };
    // Iterative: for each top simplex enumerate all chains ending at it.
    // Complexes here are small, so recursion over proper faces is fine.
    std::vector<int> ids;
    auto grow = [&](auto&& self, const Simplex& top) -> void {
        ids.push_back(id_of[top]);
        emit(ids);
        const std::size_t n = top.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i))
                    face.push_back(top[i]);
            self(self, face);
        }
        ids.pop_back();
    };
    for (const auto& s : k.simplices())
        grow(grow, s);
    return sd;
}

inline long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0;
    for (const auto& s : k.simplices())
        chi += (dim(s) % 2 == 0) ? 1 : -1;
    return chi;
}

/// Connectivity of the 1-skeleton (empty complex is not connected).
inline bool is_connected(const SimplicialComplex& k)
{
    auto verts = k.vertices();
    if (verts.empty())
        return false;
    std::map<int, int> parent;
    for (int v : verts)
        parent[v] = v;
    auto root = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& s : k.simplices())
        if (s.size() == 2)
            parent[root(s[0])] = root(s[1]);
    int r = root(*verts.begin());
    for (int v : verts)
        if (root(v) != r)
            return false;
    return true;
}

} // namespace whittle
