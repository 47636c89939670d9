#pragma once

#include "whittle/chain_complex.hpp"
#include "whittle/complex.hpp"
#include "whittle/errors.hpp"
#include "whittle/simplicial_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace whittle {

/// One row of the local torsion profile: the fiber over a target simplex
/// and the homology of the cone of C(fiber) -> C(closed simplex).
struct ProfileEntry {
    Simplex sigma;
    std::size_t fiber_size = 0;
    std::vector<HomologyGroup> fiber_reduced; // indexed from degree -1
    std::vector<HomologyGroup> cone_homology; // indexed from cone lowest degree
    int cone_lowest = 0;
    bool trivial = false; // all cone homology vanishes

    bool fiber_acyclic() const
    {
        for (const auto& h : fiber_reduced)
            if (!h.trivial())
                return false;
        return true;
    }
};

/// The desk-scale torsion cosheaf of a simplicial map: per target simplex,
/// the homology measuring failure of fiber -> closed simplex to be a
/// homology isomorphism.
struct LocalTorsionProfile {
    SimplicialMap map;
    std::vector<ProfileEntry> entries; // ordered by (dimension, lex) of sigma

    /// Table with one row per simplex: simplex, fiber size, fiber reduced
    /// homology, cone homology, verdict.
    std::string to_table() const
    {
        std::string out = "simplex | fiber size | fiber H~ | cone H | verdict\n";
        for (const auto& e : entries) {
            std::string fh, ch;
            for (std::size_t i = 0; i < e.fiber_reduced.size(); ++i) {
                if (!e.fiber_reduced[i].trivial()) {
                    if (!fh.empty())
                        fh += ", ";
                    fh += "H~" + std::to_string(static_cast<int>(i) - 1) + "=" +
                          e.fiber_reduced[i].to_string();
                }
            }
            if (fh.empty())
                fh = "0";
            for (std::size_t i = 0; i < e.cone_homology.size(); ++i) {
                if (!e.cone_homology[i].trivial()) {
                    if (!ch.empty())
                        ch += ", ";
                    ch += "H" + std::to_string(e.cone_lowest + static_cast<int>(i)) + "=" +
                          e.cone_homology[i].to_string();
                }
            }
            if (ch.empty())
                ch = "0";
            out += simplex_to_string(e.sigma) + " | " + std::to_string(e.fiber_size) + " | " +
                   fh + " | " + ch + " | " + (e.trivial ? "ok" : "NONTRIVIAL") + "\n";
        }
        return out;
    }
};

/// Per-simplex fiber homology and cone homology for every simplex of the
/// target, cone built with the block boundary at integral coefficients.
inline LocalTorsionProfile local_profile(const SimplicialMap& f)
{
    if (auto bad = f.first_violation())
        throw Error("local_profile: map does not validate at " + simplex_to_string(*bad));
    LocalTorsionProfile out;
    out.map = f;
    for (const auto& sigma : f.target().simplices_by_dim()) {
        ProfileEntry entry;
        entry.sigma = sigma;
        SimplicialComplex fiber = fiber_subcomplex(f, sigma);
        entry.fiber_size = fiber.size();
        entry.fiber_reduced = homology(chain_complex(fiber, true));

        SimplicialComplex closed = close_downward({sigma});
        std::map<int, int> vm;
        for (int v : fiber.vertices())
            vm[v] = f.apply_vertex(v);
        SimplicialMap to_simplex(fiber, closed, std::move(vm));
        ChainComplexZ cone = mapping_cone(induced_chain_map(to_simplex));
        entry.cone_lowest = cone.lowest();
        entry.cone_homology = homology(cone);
        entry.trivial = true;
        for (const auto& h : entry.cone_homology)
            if (!h.trivial())
                entry.trivial = false;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

/// Verdict of the fiber-wise acyclicity criterion, with the first
/// offending simplex and its fiber homology on failure. Empty fibers fail
/// (their reduced degree -1 homology is Z).
struct LocalAcyclicityVerdict {
    bool locally_acyclic = false;
    std::optional<Simplex> witness;
    std::vector<HomologyGroup> witness_fiber_homology; // from degree -1
};

inline LocalAcyclicityVerdict is_locally_acyclic(const SimplicialMap& f)
{
    if (auto bad = f.first_violation())
        throw Error("is_locally_acyclic: map does not validate at " + simplex_to_string(*bad));
    LocalAcyclicityVerdict v;
    for (const auto& sigma : f.target().simplices_by_dim()) {
        SimplicialComplex fiber = fiber_subcomplex(f, sigma);
        auto reduced = homology(chain_complex(fiber, true));
        bool acyclic = true;
        for (const auto& h : reduced)
            if (!h.trivial())
                acyclic = false;
        if (!acyclic) {
            v.locally_acyclic = false;
            v.witness = sigma;
            v.witness_fiber_homology = std::move(reduced);
            return v;
        }
    }
    v.locally_acyclic = true;
    return v;
}

namespace detail {

// Basis inclusion of cone(f over small) into cone(f over big) in one
// degree; small fiber/piece simplices land on their positions in the big
// cone basis.
inline IntegerMatrix cone_inclusion(int degree, const SimplicialComplex& small_fiber,
                                    const SimplicialComplex& small_piece,
                                    const SimplicialComplex& big_fiber,
                                    const SimplicialComplex& big_piece)
{
    auto sf = small_fiber.simplices_of_dim(degree - 1);
    auto sp = small_piece.simplices_of_dim(degree);
    auto bf = big_fiber.simplices_of_dim(degree - 1);
    auto bp = big_piece.simplices_of_dim(degree);
    std::map<Simplex, std::size_t> bf_index, bp_index;
    for (std::size_t i = 0; i < bf.size(); ++i)
        bf_index[bf[i]] = i;
    for (std::size_t i = 0; i < bp.size(); ++i)
        bp_index[bp[i]] = i;
    IntegerMatrix m(bf.size() + bp.size(), sf.size() + sp.size());
    for (std::size_t j = 0; j < sf.size(); ++j)
        m(bf_index.at(sf[j]), j) = 1;
    for (std::size_t j = 0; j < sp.size(); ++j)
        m(bf.size() + bp_index.at(sp[j]), sf.size() + j) = 1;
    return m;
}

// Exactness of A --m1--> B --m2--> C at every spot, decided by the
// homology of the three-term complex (so over Z, not just ranks).
inline bool three_term_exact(const IntegerMatrix& m1, const IntegerMatrix& m2)
{
    ChainComplexZ c(0,
                    {std::vector<std::string>(m2.rows(), "c"),
                     std::vector<std::string>(m1.rows(), "b"),
                     std::vector<std::string>(m1.cols(), "a")},
                    {IntegerMatrix(0, m2.rows()), m2, m1});
    for (const auto& h : homology(c))
        if (!h.trivial())
            return false;
    return true;
}

} // namespace detail

/// Degree-wise result of a Mayer-Vietoris-style exactness check.
struct DegreeVerdict {
    int degree;
    bool exact;
};

/// Report of the two-piece sum formula check: the short exact sequence
/// 0 -> C(cone f01) -> C(cone f0) ⊕ C(cone f1) -> C(cone f) -> 0 and the
/// Euler identity chi(cone f) = chi(cone f0) + chi(cone f1) - chi(cone f01).
struct SumFormulaReport {
    std::vector<DegreeVerdict> degrees;
    bool all_exact = false;
    long long chi_cone = 0, chi_cone0 = 0, chi_cone1 = 0, chi_cone01 = 0;
    bool euler_identity = false;

    bool passed() const { return all_exact && euler_identity; }
};

inline SumFormulaReport check_sum_formula(const SimplicialMap& f, const SimplicialComplex& x0,
                                          const SimplicialComplex& x1)
{
    if (!x0.is_subcomplex_of(f.target()) || !x1.is_subcomplex_of(f.target()))
        throw NotACover("check_sum_formula: pieces are not subcomplexes of the target");
    SimplicialComplex un;
    for (const auto& s : x0.simplices())
        un.insert_raw(s);
    for (const auto& s : x1.simplices())
        un.insert_raw(s);
    if (!(un == f.target()))
        throw NotACover("check_sum_formula: pieces do not cover the target");

    SimplicialComplex x01 = intersect(x0, x1);
    SimplicialMap f0 = restrict(f, x0);
    SimplicialMap f1 = restrict(f, x1);
    SimplicialMap f01 = restrict(f, x01);

    ChainComplexZ cone = mapping_cone(induced_chain_map(f));
    ChainComplexZ cone0 = mapping_cone(induced_chain_map(f0));
    ChainComplexZ cone1 = mapping_cone(induced_chain_map(f1));
    ChainComplexZ cone01 = mapping_cone(induced_chain_map(f01));

    SumFormulaReport report;
    report.chi_cone = cone.euler_characteristic();
    report.chi_cone0 = cone0.euler_characteristic();
    report.chi_cone1 = cone1.euler_characteristic();
    report.chi_cone01 = cone01.euler_characteristic();
    report.euler_identity =
        report.chi_cone == report.chi_cone0 + report.chi_cone1 - report.chi_cone01;

    // alpha = (incl, -incl) into the direct sum, beta = incl + incl
    const int lo = cone.lowest();
    const int hi = cone.highest();
    report.all_exact = true;
    for (int i = lo; i <= hi; ++i) {
        IntegerMatrix i0 =
            detail::cone_inclusion(i, f01.source(), x01, f0.source(), x0);
        IntegerMatrix i1 =
            detail::cone_inclusion(i, f01.source(), x01, f1.source(), x1);
        IntegerMatrix k0 = detail::cone_inclusion(i, f0.source(), x0, f.source(), f.target());
        IntegerMatrix k1 = detail::cone_inclusion(i, f1.source(), x1, f.source(), f.target());
        // alpha: stack i0 over -i1; beta: [k0 | k1]
        IntegerMatrix alpha(i0.rows() + i1.rows(), i0.cols());
        for (std::size_t r = 0; r < i0.rows(); ++r)
            for (std::size_t c = 0; c < i0.cols(); ++c)
                alpha(r, c) = i0(r, c);
        for (std::size_t r = 0; r < i1.rows(); ++r)
            for (std::size_t c = 0; c < i1.cols(); ++c)
                alpha(i0.rows() + r, c) = -i1(r, c);
        IntegerMatrix beta(k0.rows(), k0.cols() + k1.cols());
        for (std::size_t r = 0; r < k0.rows(); ++r) {
            for (std::size_t c = 0; c < k0.cols(); ++c)
                beta(r, c) = k0(r, c);
            for (std::size_t c = 0; c < k1.cols(); ++c)
                beta(r, k0.cols() + c) = k1(r, c);
        }
        bool exact = detail::three_term_exact(alpha, beta);
        report.degrees.push_back({i, exact});
        if (!exact)
            report.all_exact = false;
    }
    return report;
}

/// Report of the composition formula check for Z --g--> Y --f--> X: the
/// chain-level fiber sequence (cone g pushed along f) -> cone(fg) ->
/// cone(f), realized by the strict basis-split sequence
/// 0 -> cone(fg) -> cone(mu) -> (cone g)[1] -> 0 together with the
/// homology identification H(cone mu) = H(cone f), plus the Euler identity
/// chi(cone fg) = chi(cone f) + chi(cone g).
struct CompositionReport {
    std::vector<DegreeVerdict> degrees; // exactness of the strict sequence
    bool all_exact = false;
    bool homology_matches = false; // H(cone mu) == H(cone f) degree-wise
    long long chi_fg = 0, chi_f = 0, chi_g = 0;
    bool euler_identity = false;

    bool passed() const { return all_exact && homology_matches && euler_identity; }
};

inline CompositionReport check_composition_formula(const SimplicialMap& g,
                                                   const SimplicialMap& f)
{
    if (!(g.target() == f.source()))
        throw CompositionMismatch("check_composition_formula: maps are not composable");
    SimplicialMap fg = compose(f, g);

    ChainMapZ phi_g = induced_chain_map(g);
    ChainMapZ phi_f = induced_chain_map(f);
    ChainMapZ phi_fg = induced_chain_map(fg);
    ChainComplexZ cone_g = mapping_cone(phi_g);
    ChainComplexZ cone_f = mapping_cone(phi_f);
    ChainComplexZ cone_fg = mapping_cone(phi_fg);

    CompositionReport report;
    report.chi_fg = cone_fg.euler_characteristic();
    report.chi_f = cone_f.euler_characteristic();
    report.chi_g = cone_g.euler_characteristic();
    report.euler_identity = report.chi_fg == report.chi_f + report.chi_g;

    // mu: cone(g) -> cone(fg), (z, y) |-> (z, f_* y)
    ChainMapZ mu;
    mu.source = cone_g;
    mu.target = cone_fg;
    mu.lowest = std::min(cone_g.lowest(), cone_fg.lowest());
    const int mu_hi = std::max(cone_g.highest(), cone_fg.highest());
    for (int i = mu.lowest; i <= mu_hi; ++i) {
        const std::size_t zr = phi_g.source.rank(i - 1); // Z part of both cones
        IntegerMatrix m(cone_fg.rank(i), cone_g.rank(i));
        for (std::size_t r = 0; r < zr; ++r)
            m(r, r) = 1;
        IntegerMatrix fy = phi_f.component(i);
        for (std::size_t r = 0; r < fy.rows(); ++r)
            for (std::size_t c = 0; c < fy.cols(); ++c)
                m(zr + r, zr + c) = fy(r, c);
        mu.components.push_back(std::move(m));
    }
    ChainComplexZ cone_mu = mapping_cone(mu); // checks mu is a chain map

    // homology comparison with cone(f)
    report.homology_matches = true;
    {
        auto hm = homology(cone_mu);
        auto hf = homology(cone_f);
        const int lo = std::min(cone_mu.lowest(), cone_f.lowest());
        const int hi = std::max(cone_mu.highest(), cone_f.highest());
        for (int i = lo; i <= hi; ++i) {
            HomologyGroup a = (cone_mu.trivial() || i < cone_mu.lowest() || i > cone_mu.highest())
                                  ? HomologyGroup{}
                                  : hm[i - cone_mu.lowest()];
            HomologyGroup b = (cone_f.trivial() || i < cone_f.lowest() || i > cone_f.highest())
                                  ? HomologyGroup{}
                                  : hf[i - cone_f.lowest()];
            if (!(a == b))
                report.homology_matches = false;
        }
    }

    // strict basis-split sequence 0 -> cone(fg) -> cone(mu) -> cone(g)[1] -> 0
    report.all_exact = true;
    for (int i = cone_mu.lowest(); i <= cone_mu.highest(); ++i) {
        const std::size_t shifted = cone_g.rank(i - 1);
        IntegerMatrix iota(cone_mu.rank(i), cone_fg.rank(i));
        for (std::size_t r = 0; r < cone_fg.rank(i); ++r)
            iota(shifted + r, r) = 1;
        IntegerMatrix pi(shifted, cone_mu.rank(i));
        for (std::size_t r = 0; r < shifted; ++r)
            pi(r, r) = 1;
        bool exact = detail::three_term_exact(iota, pi);
        report.degrees.push_back({i, exact});
        if (!exact)
            report.all_exact = false;
    }
    return report;
}

} // namespace whittle
