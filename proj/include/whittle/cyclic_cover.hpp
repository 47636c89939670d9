#pragma once

#include "whittle/chain_complex.hpp"
#include "whittle/complex.hpp"
#include "whittle/errors.hpp"
#include "whittle/group_ring.hpp"
#include "whittle/simplicial_map.hpp"

#include <deque>
#include <map>
#include <optional>
#include <utility>

namespace whittle {

/// Z/n-valued edge cocycle on a complex, encoding a homomorphism
/// pi_1 -> Z/n and hence an n-fold cyclic cover. Values are stored on
/// sorted edges; antisymmetry is structural.
class CyclicCoverLabeling {
  public:
    CyclicCoverLabeling() = default;

    /// Keys may be given in either orientation; reversed keys are negated.
    /// Edges of K not mentioned get 0.
    CyclicCoverLabeling(SimplicialComplex complex, int n,
                        const std::map<std::pair<int, int>, int>& omega)
        : complex_(std::move(complex)), n_(n)
    {
        if (n < 1)
            throw InvalidLabeling("labeling: modulus must be >= 1");
        for (const auto& s : complex_.simplices())
            if (s.size() == 2)
                omega_[{s[0], s[1]}] = 0;
        for (const auto& [e, g] : omega) {
            auto [u, v] = e;
            if (u == v)
                throw InvalidLabeling("labeling: degenerate edge");
            const bool flip = u > v;
            std::pair<int, int> key = flip ? std::make_pair(v, u) : e;
            auto it = omega_.find(key);
            if (it == omega_.end())
                throw InvalidLabeling("labeling: " + simplex_to_string({key.first, key.second}) +
                                      " is not an edge of the complex");
            int val = ((g % n_) + n_) % n_;
            it->second = flip ? (n_ - val) % n_ : val;
        }
    }

    const SimplicialComplex& complex() const { return complex_; }
    int modulus() const { return n_; }

    /// omega(u, v) for any orientation of an edge of the complex; 0 on
    /// loops (u == v).
    int omega(int u, int v) const
    {
        if (u == v)
            return 0;
        if (u < v)
            return omega_.at({u, v});
        return (n_ - omega_.at({v, u})) % n_;
    }

    /// First 2-simplex violating the cocycle identity
    /// omega(v0,v1) + omega(v1,v2) = omega(v0,v2), if any.
    std::optional<Simplex> first_violation() const
    {
        for (const auto& s : complex_.simplices())
            if (s.size() == 3)
                if ((omega(s[0], s[1]) + omega(s[1], s[2])) % n_ != omega(s[0], s[2]))
                    return s;
        return std::nullopt;
    }

    bool validates() const { return !first_violation().has_value(); }

  private:
    SimplicialComplex complex_;
    int n_ = 1;
    std::map<std::pair<int, int>, int> omega_;
};

/// Chain complex of finitely generated free Z[Z/n]-modules; d^2 = 0 is
/// checked in the group ring on construction.
class ChainComplexZG {
  public:
    ChainComplexZG() = default;

    ChainComplexZG(int modulus, int lowest, std::vector<std::vector<std::string>> basis,
                   std::vector<GroupRingMatrix> boundary)
        : n_(modulus), lowest_(lowest), basis_(std::move(basis)), boundary_(std::move(boundary))
    {
        if (basis_.size() != boundary_.size())
            throw NotAComplex("ZG chain complex: degree count mismatch");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t below = k == 0 ? 0 : basis_[k - 1].size();
            if (boundary_[k].cols() != basis_[k].size() || boundary_[k].rows() != below)
                throw NotAComplex("ZG chain complex: boundary shape mismatch");
        }
        for (std::size_t k = 2; k <= basis_.size(); ++k)
            if (!(boundary_[k - 2] * boundary_[k - 1]).is_zero())
                throw NotAComplex("ZG chain complex: d^2 != 0");
    }

    int modulus() const { return n_; }
    int lowest() const { return lowest_; }
    int highest() const { return lowest_ + static_cast<int>(basis_.size()) - 1; }
    bool trivial() const { return basis_.empty(); }

    std::size_t rank(int degree) const
    {
        if (degree < lowest_ || degree > highest())
            return 0;
        return basis_[degree - lowest_].size();
    }

    const std::vector<std::string>& basis(int degree) const
    {
        static const std::vector<std::string> none;
        if (degree < lowest_ || degree > highest())
            return none;
        return basis_[degree - lowest_];
    }

    GroupRingMatrix boundary(int degree) const
    {
        if (degree < lowest_ || degree > highest())
            return GroupRingMatrix(n_, rank(degree - 1), rank(degree));
        return boundary_[degree - lowest_];
    }

    long long euler_characteristic() const
    {
        long long chi = 0;
        for (int i = lowest_; i <= highest(); ++i)
            chi += (((i % 2) + 2) % 2 == 0) ? static_cast<long long>(rank(i))
                                            : -static_cast<long long>(rank(i));
        return chi;
    }

  private:
    int n_ = 1;
    int lowest_ = 0;
    std::vector<std::vector<std::string>> basis_;
    std::vector<GroupRingMatrix> boundary_;
};

/// Twisted simplicial chain complex of the labeled complex: one free
/// Z[Z/n] generator per simplex (each simplex lifted by the lift of its
/// minimal vertex). On a sorted simplex [v0,...,vk] the face dropping v0
/// carries +t^{omega(v0,v1)}; the face dropping v_i (i >= 1) carries
/// (-1)^i. d^2 = 0 is then exactly the cocycle identity.
///
/// The reduced flag appends an augmentation generator in degree -1 with
/// every vertex mapping to 1; that is only a chain complex when each edge
/// label vanishes mod n (always true for n = 1, where the construction
/// coincides with the reduced integral complex).
inline ChainComplexZG twisted_chain_complex(const CyclicCoverLabeling& w, bool reduced = false)
{
    if (auto bad = w.first_violation())
        throw InvalidLabeling("twisted_chain_complex: cocycle identity fails at " +
                              simplex_to_string(*bad));
    const SimplicialComplex& k = w.complex();
    const int n = w.modulus();
    const int top = k.dimension();
    if (top < 0) {
        if (!reduced)
            return ChainComplexZG();
        return ChainComplexZG(n, -1, {{"*"}}, {GroupRingMatrix(n, 0, 1)});
    }
    if (reduced && n > 1) {
        for (const auto& s : k.simplices())
            if (s.size() == 2 && w.omega(s[0], s[1]) != 0)
                throw InvalidLabeling("twisted_chain_complex: reduced form needs an "
                                      "edge-trivial labeling when n > 1");
    }

    std::vector<std::vector<Simplex>> by_dim(top + 1);
    for (int d = 0; d <= top; ++d)
        by_dim[d] = k.simplices_of_dim(d);
    std::map<Simplex, std::size_t> index;
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i)
            index[by_dim[d][i]] = i;

    std::vector<std::vector<std::string>> basis;
    std::vector<GroupRingMatrix> boundary;
    const int lo = reduced ? -1 : 0;
    if (reduced)
        basis.push_back({"*"});
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> labels;
        for (const auto& s : by_dim[d])
            labels.push_back(simplex_to_string(s));
        basis.push_back(std::move(labels));
    }
    if (reduced)
        boundary.push_back(GroupRingMatrix(n, 0, 1));
    {
        GroupRingMatrix d0(n, reduced ? 1 : 0, by_dim[0].size());
        if (reduced)
            for (std::size_t j = 0; j < by_dim[0].size(); ++j)
                d0(0, j) = GroupRingElement::one(n);
        boundary.push_back(std::move(d0));
    }
    for (int d = 1; d <= top; ++d) {
        GroupRingMatrix m(n, by_dim[d - 1].size(), by_dim[d].size());
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const Simplex& s = by_dim[d][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = face_dropping(s, i);
                GroupRingElement coeff =
                    i == 0 ? GroupRingElement::monomial(n, w.omega(s[0], s[1]))
                           : GroupRingElement::monomial(n, 0, (i % 2 == 0) ? 1 : -1);
                m(index[f], j) = m(index[f], j) + coeff;
            }
        }
        boundary.push_back(std::move(m));
    }
    return ChainComplexZG(n, lo, std::move(basis), std::move(boundary));
}

/// Pullback labeling along a simplicial map: omega'(u,v) =
/// omega(f(u), f(v)), zero on edges f collapses.
inline CyclicCoverLabeling pullback_labeling(const SimplicialMap& f,
                                             const CyclicCoverLabeling& w)
{
    if (auto bad = f.first_violation())
        throw Error("pullback_labeling: map does not validate at " + simplex_to_string(*bad));
    if (!(f.target() == w.complex()))
        throw Error("pullback_labeling: labeling does not live on the target");
    std::map<std::pair<int, int>, int> omega;
    for (const auto& s : f.source().simplices())
        if (s.size() == 2)
            omega[{s[0], s[1]}] = w.omega(f.apply_vertex(s[0]), f.apply_vertex(s[1]));
    return CyclicCoverLabeling(f.source(), w.modulus(), omega);
}

/// Forgets the deck action: each Z[Z/n] entry becomes its n x n circulant
/// block, so ranks multiply by n and the homology of the result is the
/// underlying abelian group of the Z[Z/n]-homology.
inline ChainComplexZ integral_expansion(const ChainComplexZG& c)
{
    const int n = c.modulus();
    if (c.trivial())
        return ChainComplexZ();
    std::vector<std::vector<std::string>> basis;
    std::vector<IntegerMatrix> boundary;
    for (int i = c.lowest(); i <= c.highest(); ++i) {
        std::vector<std::string> labels;
        for (const auto& l : c.basis(i))
            for (int s = 0; s < n; ++s)
                labels.push_back(n == 1 ? l : l + "@t^" + std::to_string(s));
        basis.push_back(std::move(labels));
        GroupRingMatrix d = c.boundary(i);
        IntegerMatrix m(d.rows() * n, d.cols() * n);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t col = 0; col < d.cols(); ++col) {
                const GroupRingElement& e = d(r, col);
                if (e.is_zero())
                    continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        m(r * n + a, col * n + b) = e.coeff(((a - b) % n + n) % n);
            }
        boundary.push_back(std::move(m));
    }
    return ChainComplexZ(c.lowest(), std::move(basis), std::move(boundary));
}

/// Builds the gauge-fixed cocycle that vanishes on a BFS spanning tree of
/// the 1-skeleton and takes the prescribed values on the remaining edges.
/// Exists iff the prescribed holonomies respect every 2-simplex relation.
inline CyclicCoverLabeling labeling_from_tree(const SimplicialComplex& k, int n,
                                              const std::map<std::pair<int, int>, int>& values)
{
    if (!is_connected(k))
        throw NotConnected("labeling_from_tree: complex is not connected");
    // deterministic BFS tree: smallest root, neighbours in sorted order
    std::set<std::pair<int, int>> tree;
    {
        std::map<int, std::vector<int>> adj;
        for (const auto& s : k.simplices())
            if (s.size() == 2) {
                adj[s[0]].push_back(s[1]);
                adj[s[1]].push_back(s[0]);
            }
        for (auto& [v, nb] : adj)
            std::sort(nb.begin(), nb.end());
        std::set<int> seen;
        std::deque<int> queue;
        int root = *k.vertices().begin();
        seen.insert(root);
        queue.push_back(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (!seen.count(w)) {
                    seen.insert(w);
                    tree.insert({std::min(v, w), std::max(v, w)});
                    queue.push_back(w);
                }
        }
    }
    std::map<std::pair<int, int>, int> omega;
    for (const auto& [e, g] : values) {
        auto key = e.first < e.second ? e : std::make_pair(e.second, e.first);
        int val = ((g % n) + n) % n;
        if (tree.count(key)) {
            if (val != 0)
                throw NotACocycle("labeling_from_tree: nonzero value on a tree edge " +
                                  simplex_to_string({key.first, key.second}));
            continue;
        }
        omega[e] = g;
    }
    CyclicCoverLabeling w(k, n, omega);
    if (auto bad = w.first_violation())
        throw NotACocycle("labeling_from_tree: cocycle condition unsatisfiable at " +
                          simplex_to_string(*bad));
    return w;
}

} // namespace whittle
