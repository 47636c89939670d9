#pragma once

#include "whittle/complex.hpp"
#include "whittle/errors.hpp"
#include "whittle/simplicial_map.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace whittle {

/// Ordered elementary collapse moves (free face, coface).
struct CollapseSequence {
    std::vector<std::pair<Simplex, Simplex>> moves;

    std::size_t size() const { return moves.size(); }

    /// One line per move: "0 1 ; 0 1 2".
    std::string to_string() const
    {
        std::string out;
        for (const auto& [sigma, tau] : moves) {
            std::string line;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                line += (i ? " " : "") + std::to_string(sigma[i]);
            line += " ; ";
            for (std::size_t i = 0; i < tau.size(); ++i)
                line += (i ? " " : "") + std::to_string(tau[i]);
            out += line + "\n";
        }
        return out;
    }
};

/// All free pairs (sigma, tau): sigma has exactly one strict coface tau,
/// of dimension dim sigma + 1. Ordered by the greedy tie-break: highest
/// dimension of tau first, then lexicographically least sigma.
inline std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& k)
{
    std::vector<std::pair<Simplex, Simplex>> out;
    for (const auto& sigma : k.simplices()) {
        const Simplex* unique_coface = nullptr;
        int count = 0;
        for (const auto& tau : k.simplices()) {
            if (tau.size() > sigma.size() && is_subset(sigma, tau)) {
                ++count;
                if (count > 1)
                    break;
                unique_coface = &tau;
            }
        }
        if (count == 1 && unique_coface->size() == sigma.size() + 1)
            out.push_back({sigma, *unique_coface});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size())
            return a.second.size() > b.second.size();
        return a.first < b.first;
    });
    return out;
}

/// Remove the free pair (sigma, tau); the result is again a complex.
inline SimplicialComplex collapse_step(const SimplicialComplex& k, const Simplex& sigma,
                                       const Simplex& tau)
{
    if (!k.contains(sigma) || !k.contains(tau) || tau.size() != sigma.size() + 1 ||
        !is_subset(sigma, tau))
        throw IllegalMove("collapse_step: not a face/coface pair of the complex");
    int cofaces = 0;
    for (const auto& t : k.simplices())
        if (t.size() > sigma.size() && is_subset(sigma, t))
            ++cofaces;
    if (cofaces != 1)
        throw IllegalMove("collapse_step: " + simplex_to_string(sigma) + " is not free");
    SimplicialComplex out = k;
    out.erase_raw(sigma);
    out.erase_raw(tau);
    return out;
}

/// Repeated first-free-pair collapsing under the tie-break rule; stops
/// when no free pair remains. Deterministic.
inline std::pair<SimplicialComplex, CollapseSequence> greedy_collapse(const SimplicialComplex& k)
{
    SimplicialComplex cur = k;
    CollapseSequence seq;
    for (;;) {
        auto pairs = free_faces(cur);
        if (pairs.empty())
            break;
        const auto& [sigma, tau] = pairs.front();
        cur.erase_raw(sigma);
        cur.erase_raw(tau);
        seq.moves.push_back(pairs.front());
    }
    return {std::move(cur), std::move(seq)};
}

struct CollapsibilityResult {
    enum class Verdict { yes, no, budget_exhausted } verdict;
    CollapseSequence certificate; // nonempty reduction to a point when yes

    bool collapsible() const { return verdict == Verdict::yes; }
};

namespace detail {

inline std::string complex_key(const SimplicialComplex& k)
{
    std::string key;
    for (const auto& s : k.simplices()) {
        for (int v : s)
            key += std::to_string(v) + ",";
        key += ";";
    }
    return key;
}

struct CollapseSearch {
    long long budget;
    long long expanded = 0;
    bool out_of_budget = false;
    std::set<std::string> refuted;

    bool dfs(SimplicialComplex& cur, std::vector<std::pair<Simplex, Simplex>>& trail)
    {
        if (cur.size() == 1)
            return true;
        if (++expanded > budget) {
            out_of_budget = true;
            return false;
        }
        std::string key = complex_key(cur);
        if (refuted.count(key))
            return false;
        for (const auto& [sigma, tau] : free_faces(cur)) {
            cur.erase_raw(sigma);
            cur.erase_raw(tau);
            trail.push_back({sigma, tau});
            if (dfs(cur, trail))
                return true;
            trail.pop_back();
            cur.insert_raw(sigma);
            cur.insert_raw(tau);
            if (out_of_budget)
                return false;
        }
        refuted.insert(std::move(key));
        return false;
    }
};

} // namespace detail

/// Exhaustive backtracking search for a collapse to a single vertex.
/// "no" is returned only on a full refutation; running out of node budget
/// gives the third verdict.
inline CollapsibilityResult is_collapsible(const SimplicialComplex& k, long long node_budget)
{
    if (node_budget < 1)
        throw Error("is_collapsible: budget must be >= 1");
    CollapsibilityResult out{CollapsibilityResult::Verdict::no, {}};
    detail::CollapseSearch search{node_budget};
    SimplicialComplex cur = k;
    std::vector<std::pair<Simplex, Simplex>> trail;
    if (search.dfs(cur, trail)) {
        out.verdict = CollapsibilityResult::Verdict::yes;
        out.certificate.moves = std::move(trail);
    } else if (search.out_of_budget) {
        out.verdict = CollapsibilityResult::Verdict::budget_exhausted;
    }
    return out;
}

/// Elementary expansion: glue the pair (sigma, tau = sigma ∪ {apex}) onto
/// K, the inverse of a legal collapse; returns the expanded complex and
/// the inclusion of K into it.
inline std::pair<SimplicialComplex, SimplicialMap>
expansion_inclusion(const SimplicialComplex& k, const Simplex& sigma_in, int apex)
{
    Simplex sigma = sigma_in;
    std::sort(sigma.begin(), sigma.end());
    if (sigma.empty())
        throw IllegalMove("expansion_inclusion: empty free face");
    if (std::binary_search(sigma.begin(), sigma.end(), apex))
        throw IllegalMove("expansion_inclusion: apex already a vertex of the free face");
    Simplex tau = simplex_union(sigma, {apex});
    if (k.contains(sigma) || k.contains(tau))
        throw IllegalMove("expansion_inclusion: pair already present");
    // every proper face of tau except sigma must already be there
    const std::size_t m = tau.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i))
                face.push_back(tau[i]);
        if (face == sigma)
            continue;
        if (!k.contains(face))
            throw IllegalMove("expansion_inclusion: missing face " + simplex_to_string(face));
    }
    SimplicialComplex big = k;
    big.insert_raw(sigma);
    big.insert_raw(tau);
    std::map<int, int> vm;
    for (int v : k.vertices())
        vm[v] = v;
    return {big, SimplicialMap(k, big, std::move(vm))};
}

} // namespace whittle
