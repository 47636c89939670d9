#pragma once

#include "whittle/chain_complex.hpp"
#include "whittle/complex.hpp"
#include "whittle/errors.hpp"

#include <map>
#include <optional>
#include <utility>

namespace whittle {

/// Simplicial map stored by vertex images; simplex images are computed on
/// demand.
class SimplicialMap {
  public:
    SimplicialMap() = default;

    SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                  std::map<int, int> vertex_map)
        : source_(std::move(source)), target_(std::move(target)),
          vertex_map_(std::move(vertex_map))
    {
        for (int v : source_.vertices())
            if (!vertex_map_.count(v))
                throw Error("simplicial map: vertex " + std::to_string(v) + " has no image");
    }

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    const std::map<int, int>& vertex_map() const { return vertex_map_; }

    int apply_vertex(int v) const { return vertex_map_.at(v); }

    /// Image vertex set of a simplex (sorted, deduplicated).
    Simplex apply(const Simplex& s) const
    {
        Simplex out;
        out.reserve(s.size());
        for (int v : s)
            out.push_back(vertex_map_.at(v));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// First simplex whose image is not a target simplex, if any.
    std::optional<Simplex> first_violation() const
    {
        for (const auto& s : source_.simplices())
            if (!target_.contains(apply(s)))
                return s;
        return std::nullopt;
    }

    bool validates() const { return !first_violation().has_value(); }

  private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::map<int, int> vertex_map_;
};

inline SimplicialMap identity_map(const SimplicialComplex& k)
{
    std::map<int, int> vm;
    for (int v : k.vertices())
        vm[v] = v;
    return SimplicialMap(k, k, std::move(vm));
}

/// Subcomplex {tau in source : f(tau) ⊆ sigma}; equals the point-set
/// preimage of the closed simplex |sigma|. For a point x in the open cell
/// of tau, the barycentric image f(x) has support exactly f(tau), so
/// x lies in f^{-1}(|sigma|) iff f(tau) ⊆ sigma; no subdivision needed.
inline SimplicialComplex fiber_subcomplex(const SimplicialMap& f, const Simplex& sigma)
{
    if (!f.target().contains(sigma))
        throw NotASimplex("fiber_subcomplex: " + simplex_to_string(sigma) + " not in target");
    SimplicialComplex out;
    for (const auto& tau : f.source().simplices())
        if (is_subset(f.apply(tau), sigma))
            out.insert_raw(tau);
    return out;
}

/// Vertex-wise composition f∘g for g: Z -> Y and f: Y -> X.
inline SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!(g.target() == f.source()))
        throw CompositionMismatch("compose: target of inner map differs from source of outer");
    std::map<int, int> vm;
    for (const auto& [v, w] : g.vertex_map())
        vm[v] = f.apply_vertex(w);
    return SimplicialMap(g.source(), f.target(), std::move(vm));
}

/// Restriction of f over a subcomplex A of the target: the map
/// f^{-1}(A) -> A, where f^{-1}(A) is the union of the fibers over the
/// simplices of A.
inline SimplicialMap restrict(const SimplicialMap& f, const SimplicialComplex& a)
{
    if (!a.is_subcomplex_of(f.target()))
        throw NotASubcomplex("restrict: not a subcomplex of the target");
    SimplicialComplex pre;
    for (const auto& tau : f.source().simplices())
        if (a.contains(f.apply(tau)))
            pre.insert_raw(tau);
    std::map<int, int> vm;
    for (const auto& s : pre.simplices())
        if (s.size() == 1)
            vm[s[0]] = f.apply_vertex(s[0]);
    return SimplicialMap(std::move(pre), a, std::move(vm));
}

namespace detail {

/// Sign of the permutation sorting the image vertices of an injective
/// vertex list, computed by counting inversions.
inline int sorting_sign(const std::vector<int>& images)
{
    int inv = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace detail

/// Chain map on unreduced simplicial chains: a simplex on which f is
/// injective goes to its image with the sorting-permutation sign, a
/// degenerate one to zero.
inline ChainMapZ induced_chain_map(const SimplicialMap& f)
{
    if (auto bad = f.first_violation())
        throw Error("induced_chain_map: map does not validate at " + simplex_to_string(*bad));
    ChainMapZ out;
    out.source = chain_complex(f.source());
    out.target = chain_complex(f.target());
    out.lowest = 0;

    const int top = std::max(0, f.source().dimension());
    for (int d = 0; d <= top; ++d) {
        auto src_d = f.source().simplices_of_dim(d);
        auto tgt_d = f.target().simplices_of_dim(d);
        std::map<Simplex, std::size_t> index;
        for (std::size_t i = 0; i < tgt_d.size(); ++i)
            index[tgt_d[i]] = i;
        IntegerMatrix m(tgt_d.size(), src_d.size());
        for (std::size_t j = 0; j < src_d.size(); ++j) {
            std::vector<int> images;
            images.reserve(src_d[j].size());
            for (int v : src_d[j])
                images.push_back(f.apply_vertex(v));
            Simplex image = make_simplex(images);
            if (image.size() != src_d[j].size())
                continue; // degenerate
            m(index[image], j) = detail::sorting_sign(images);
        }
        out.components.push_back(std::move(m));
    }
    out.check();
    return out;
}

/// The last-vertex map sd(K) -> K: the barycenter of a simplex goes to its
/// largest vertex. Always simplicial, always locally acyclic.
inline std::pair<Subdivision, SimplicialMap> last_vertex_map(const SimplicialComplex& k)
{
    Subdivision sd = barycentric_subdivision(k);
    std::map<int, int> vm;
    for (std::size_t i = 0; i < sd.vertex_to_simplex.size(); ++i)
        vm[static_cast<int>(i)] = sd.vertex_to_simplex[i].back();
    SimplicialMap f(sd.complex, k, std::move(vm));
    return {std::move(sd), std::move(f)};
}

} // namespace whittle
