#pragma once

#include "whittle/chain_complex.hpp"
#include "whittle/cyclic_cover.hpp"
#include "whittle/cyclotomic.hpp"
#include "whittle/errors.hpp"
#include "whittle/group_ring.hpp"
#include "whittle/simplicial_map.hpp"

#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace whittle {

/// Chain map between two Z[Z/n] chain complexes.
struct ChainMapZG {
    ChainComplexZG source;
    ChainComplexZG target;
    std::vector<GroupRingMatrix> components; // component(i): source_i -> target_i
    int lowest = 0;

    GroupRingMatrix component(int degree) const
    {
        if (degree < lowest || degree >= lowest + static_cast<int>(components.size()))
            return GroupRingMatrix(source.modulus(), target.rank(degree), source.rank(degree));
        return components[degree - lowest];
    }

    void check() const
    {
        const int lo = std::min(source.lowest(), target.lowest());
        const int hi = std::max(source.highest(), target.highest());
        for (int i = lo; i <= hi; ++i)
            if (!(target.boundary(i) * component(i) == component(i - 1) * source.boundary(i)))
                throw NotAChainMap("twisted chain map does not commute in degree " +
                                   std::to_string(i));
    }
};

/// Twisted chain map induced by f with target labeling w: a simplex tau
/// with f injective on its vertices goes to sort(f(tau)) with the sorting
/// sign and the deck twist t^{w(f(min tau), min f(tau))} that realigns the
/// chosen lifts; degenerate simplices go to zero.
inline ChainMapZG twisted_induced_chain_map(const SimplicialMap& f, const CyclicCoverLabeling& w)
{
    if (auto bad = f.first_violation())
        throw Error("twisted_induced_chain_map: map does not validate at " +
                    simplex_to_string(*bad));
    const int n = w.modulus();
    ChainMapZG out;
    out.source = twisted_chain_complex(pullback_labeling(f, w));
    out.target = twisted_chain_complex(w);
    out.lowest = 0;

    const int top = std::max(0, f.source().dimension());
    for (int d = 0; d <= top; ++d) {
        auto src_d = f.source().simplices_of_dim(d);
        auto tgt_d = f.target().simplices_of_dim(d);
        std::map<Simplex, std::size_t> index;
        for (std::size_t i = 0; i < tgt_d.size(); ++i)
            index[tgt_d[i]] = i;
        GroupRingMatrix m(n, tgt_d.size(), src_d.size());
        for (std::size_t j = 0; j < src_d.size(); ++j) {
            std::vector<int> images;
            images.reserve(src_d[j].size());
            for (int v : src_d[j])
                images.push_back(f.apply_vertex(v));
            Simplex image = make_simplex(images);
            if (image.size() != src_d[j].size())
                continue;
            const int sign = detail::sorting_sign(images);
            const int twist = w.omega(images.front(), image.front());
            m(index[image], j) = GroupRingElement::monomial(n, twist, sign);
        }
        out.components.push_back(std::move(m));
    }
    out.check();
    return out;
}

/// Mapping cone over Z[Z/n]: cone_i = source_{i-1} ⊕ target_i with block
/// boundary [[-d', 0], [f, d'']].
inline ChainComplexZG mapping_cone_zg(const ChainMapZG& f)
{
    f.check();
    const ChainComplexZG& src = f.source;
    const ChainComplexZG& tgt = f.target;
    const int n = src.modulus();
    const int lo = std::min(src.lowest() + 1, tgt.lowest());
    const int hi = std::max(src.highest() + 1, tgt.highest());
    if (hi < lo)
        return ChainComplexZG();

    std::vector<std::vector<std::string>> basis;
    std::vector<GroupRingMatrix> boundary;
    for (int i = lo; i <= hi; ++i) {
        std::vector<std::string> labels;
        for (const auto& l : src.basis(i - 1))
            labels.push_back("s[" + l + "]");
        for (const auto& l : tgt.basis(i))
            labels.push_back("t[" + l + "]");
        basis.push_back(std::move(labels));
    }
    for (int i = lo; i <= hi; ++i) {
        const std::size_t rows = src.rank(i - 2) + tgt.rank(i - 1);
        const std::size_t cols = src.rank(i - 1) + tgt.rank(i);
        GroupRingMatrix m(n, i == lo ? 0 : rows, cols);
        if (i > lo) {
            GroupRingMatrix ds = src.boundary(i - 1);
            GroupRingMatrix ft = f.component(i - 1);
            GroupRingMatrix dt = tgt.boundary(i);
            const std::size_t r0 = src.rank(i - 2);
            for (std::size_t r = 0; r < ds.rows(); ++r)
                for (std::size_t c = 0; c < ds.cols(); ++c)
                    m(r, c) = -ds(r, c);
            for (std::size_t r = 0; r < ft.rows(); ++r)
                for (std::size_t c = 0; c < ft.cols(); ++c)
                    m(r0 + r, c) = ft(r, c);
            for (std::size_t r = 0; r < dt.rows(); ++r)
                for (std::size_t c = 0; c < dt.cols(); ++c)
                    m(r0 + r, src.rank(i - 1) + c) = dt(r, c);
        }
        boundary.push_back(std::move(m));
    }
    return ChainComplexZG(n, lo, std::move(basis), std::move(boundary));
}

/// Mapping cone of the twisted chain map of f (labeling on the target,
/// pulled back to the source). Both complexes must be connected.
inline ChainComplexZG mapping_cone_zg(const SimplicialMap& f, const CyclicCoverLabeling& w)
{
    if (auto bad = f.first_violation())
        throw Error("mapping_cone_zg: map does not validate at " + simplex_to_string(*bad));
    if (auto bad = w.first_violation())
        throw InvalidLabeling("mapping_cone_zg: labeling fails the cocycle identity at " +
                              simplex_to_string(*bad));
    if (!is_connected(f.source()))
        throw NotConnected("mapping_cone_zg: source is not connected");
    if (!is_connected(f.target()))
        throw NotConnected("mapping_cone_zg: target is not connected");
    return mapping_cone_zg(twisted_induced_chain_map(f, w));
}

/// First degree with nonvanishing homology of the integral expansion, if
/// any; nullopt means the complex is acyclic over Z[Z/n].
inline std::optional<std::pair<int, HomologyGroup>> acyclicity_witness(const ChainComplexZG& c)
{
    if (c.trivial())
        return std::nullopt;
    ChainComplexZ e = integral_expansion(c);
    auto h = homology(e);
    for (int i = e.lowest(); i <= e.highest(); ++i)
        if (!h[i - e.lowest()].trivial())
            return std::make_pair(i, h[i - e.lowest()]);
    return std::nullopt;
}

/// A Z[Z/n] chain complex with distinguished basis whose integral
/// expansion is acyclic; the input type of the torsion determinant.
class BasedAcyclicComplex {
  public:
    explicit BasedAcyclicComplex(ChainComplexZG complex) : c_(std::move(complex))
    {
        if (auto w = acyclicity_witness(c_))
            throw Error("based acyclic complex: homology survives in degree " +
                        std::to_string(w->first) + " (" + w->second.to_string() + ")");
        if (c_.euler_characteristic() != 0)
            throw InternalInconsistency(
                "based acyclic complex: odd and even ranks differ despite acyclicity");
    }

    const ChainComplexZG& complex() const { return c_; }

    /// Total rank of the odd (resp. even) degrees; equal by acyclicity.
    std::size_t odd_rank() const { return parity_rank(1); }
    std::size_t even_rank() const { return parity_rank(0); }

  private:
    std::size_t parity_rank(int par) const
    {
        std::size_t r = 0;
        for (int i = c_.lowest(); i <= c_.highest(); ++i)
            if (((i % 2) + 2) % 2 == par)
                r += c_.rank(i);
        return r;
    }

    ChainComplexZG c_;
};

namespace detail {

// The complex tensored down to one cyclotomic factor Q[x]/Phi_d.
struct FactorComplex {
    std::shared_ptr<CyclotomicField> field;
    int lowest = 0;
    std::vector<std::size_t> ranks;
    std::vector<FieldMatrix> boundary; // boundary[k]: lowest+k -> lowest+k-1

    int highest() const { return lowest + static_cast<int>(ranks.size()) - 1; }

    std::size_t rank(int degree) const
    {
        if (degree < lowest || degree > highest())
            return 0;
        return ranks[degree - lowest];
    }

    FieldMatrix d(int degree) const
    {
        if (degree < lowest || degree > highest())
            return FieldMatrix(field.get(), rank(degree - 1), rank(degree));
        return boundary[degree - lowest];
    }
};

inline FactorComplex project_complex(const ChainComplexZG& c, int conductor)
{
    FactorComplex out;
    out.field = std::make_shared<CyclotomicField>(conductor);
    out.lowest = c.lowest();
    for (int i = c.lowest(); i <= c.highest(); ++i) {
        out.ranks.push_back(c.rank(i));
        GroupRingMatrix b = c.boundary(i);
        FieldMatrix m(out.field.get(), b.rows(), b.cols());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t col = 0; col < b.cols(); ++col)
                if (!b(r, col).is_zero())
                    m(r, col) = out.field->project(b(r, col));
        out.boundary.push_back(std::move(m));
    }
    return out;
}

// Greedy independent columns, left to right: returns the pivot column
// indices; their count is the rank.
inline std::vector<std::size_t> pivot_columns(const FieldMatrix& m)
{
    const CyclotomicField* F = m.field();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && a(p, col).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(r, p);
        pivots.push_back(col);
        RationalPoly inv = F->inv(a(r, col));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero())
                continue;
            RationalPoly factor = F->mul(a(i, col), inv);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) = a(i, j) - F->mul(factor, a(r, j));
        }
        ++r;
    }
    return pivots;
}

// Contraction of an exact factor complex: delta[k] maps degree lowest+k to
// lowest+k+1, built from a choice of pivot-column complements, so that
// d delta + delta d = id exactly. Throws InternalInconsistency if the
// factor complex is not exact.
struct FactorContraction {
    std::vector<FieldMatrix> delta;

    FieldMatrix h(const FactorComplex& c, int degree) const
    {
        if (degree < c.lowest || degree > c.highest())
            return FieldMatrix(c.field.get(), c.rank(degree + 1), c.rank(degree));
        return delta[degree - c.lowest];
    }
};

inline void assert_contraction(const FactorComplex& c, const FactorContraction& h)
{
    for (int i = c.lowest; i <= c.highest(); ++i) {
        FieldMatrix lhs = c.d(i + 1) * h.h(c, i) + h.h(c, i - 1) * c.d(i);
        if (!(lhs == FieldMatrix::identity(c.field.get(), c.rank(i))))
            throw InternalInconsistency(
                "chain contraction identity d*delta + delta*d = id fails in degree " +
                std::to_string(i));
    }
}

inline FactorContraction build_contraction(const FactorComplex& c)
{
    std::vector<std::vector<std::size_t>> pivots;
    for (int i = c.lowest; i <= c.highest(); ++i)
        pivots.push_back(pivot_columns(c.d(i)));
    // exactness: rank d_i + rank d_{i+1} = dim C_i
    for (int i = c.lowest; i <= c.highest(); ++i) {
        const std::size_t ri = pivots[i - c.lowest].size();
        const std::size_t ri1 = i + 1 > c.highest() ? 0 : pivots[i + 1 - c.lowest].size();
        if (ri + ri1 != c.rank(i))
            throw InternalInconsistency("factor complex is not exact in degree " +
                                        std::to_string(i));
    }
    FactorContraction out;
    for (int i = c.lowest; i <= c.highest(); ++i) {
        const std::size_t dim = c.rank(i);
        const std::vector<std::size_t>& s_here = pivots[i - c.lowest];
        const std::vector<std::size_t> s_above =
            i + 1 > c.highest() ? std::vector<std::size_t>{} : pivots[i + 1 - c.lowest];
        FieldMatrix delta(c.field.get(), c.rank(i + 1), dim);
        if (dim > 0 && !s_above.empty()) {
            // B = [ d_{i+1} restricted to pivot columns | identity columns ]
            FieldMatrix b(c.field.get(), dim, dim);
            FieldMatrix d_up = c.d(i + 1);
            for (std::size_t col = 0; col < s_above.size(); ++col)
                for (std::size_t r = 0; r < dim; ++r)
                    b(r, col) = d_up(r, s_above[col]);
            for (std::size_t col = 0; col < s_here.size(); ++col)
                b(s_here[col], s_above.size() + col) = RationalPoly::constant(1);
            FieldMatrix binv = b.inverted();
            // delta = scatter into the chosen preimage coordinates
            for (std::size_t r = 0; r < s_above.size(); ++r)
                for (std::size_t col = 0; col < dim; ++col)
                    delta(s_above[r], col) = binv(r, col);
        }
        out.delta.push_back(std::move(delta));
    }
    assert_contraction(c, out);
    return out;
}

// (d + delta) restricted to odd total degree, landing in even total degree.
inline FieldMatrix odd_to_even(const FactorComplex& c, const FactorContraction& h)
{
    std::vector<int> odd, even;
    for (int i = c.lowest; i <= c.highest(); ++i)
        (((i % 2) + 2) % 2 == 0 ? even : odd).push_back(i);
    std::map<int, std::size_t> row_offset, col_offset;
    std::size_t rows = 0, cols = 0;
    for (int e : even) {
        row_offset[e] = rows;
        rows += c.rank(e);
    }
    for (int o : odd) {
        col_offset[o] = cols;
        cols += c.rank(o);
    }
    FieldMatrix m(c.field.get(), rows, cols);
    auto place = [&](const FieldMatrix& block, int target_degree, int source_degree) {
        if (!row_offset.count(target_degree))
            return;
        const std::size_t r0 = row_offset[target_degree];
        const std::size_t c0 = col_offset[source_degree];
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t col = 0; col < block.cols(); ++col)
                if (!block(r, col).is_zero())
                    m(r0 + r, c0 + col) = block(r, col);
    };
    for (int o : odd) {
        place(c.d(o), o - 1, o);
        place(h.h(c, o), o + 1, o);
    }
    return m;
}

} // namespace detail

/// Optional perturbation of the chain contraction: delta is replaced by
/// delta + d*eta - eta*d for a seeded random degree +2 map eta, which is
/// again a contraction; the torsion class must not change.
struct ContractionPerturbation {
    unsigned long long seed = 0;
    int magnitude = 2;
};

/// Whitehead torsion of a based acyclic Z[Z/n] complex: the class of
/// det(d + delta : C_odd -> C_even), computed exactly per cyclotomic
/// factor of Q[Z/n] and recombined by the Chinese remainder theorem. The
/// recombined determinant must come out integral and a unit of Z[Z/n].
inline WhiteheadClass torsion_of_based_acyclic(const BasedAcyclicComplex& c,
                                               const ContractionPerturbation* perturb = nullptr)
{
    const int n = c.complex().modulus();
    std::vector<std::pair<int, RationalPoly>> dets;
    for (int d : divisors(n)) {
        detail::FactorComplex fc = detail::project_complex(c.complex(), d);
        detail::FactorContraction h = detail::build_contraction(fc);
        if (perturb) {
            std::mt19937_64 rng(perturb->seed + static_cast<unsigned long long>(d) * 7919);
            std::uniform_int_distribution<int> entry(-perturb->magnitude, perturb->magnitude);
            // eta[k]: degree k -> degree k+2, random integer entries
            std::vector<FieldMatrix> eta;
            for (int i = fc.lowest; i <= fc.highest(); ++i) {
                FieldMatrix e(fc.field.get(), fc.rank(i + 2), fc.rank(i));
                for (std::size_t r = 0; r < e.rows(); ++r)
                    for (std::size_t col = 0; col < e.cols(); ++col)
                        e(r, col) = RationalPoly::constant(entry(rng));
                eta.push_back(std::move(e));
            }
            auto eta_at = [&](int degree) -> FieldMatrix {
                if (degree < fc.lowest || degree > fc.highest())
                    return FieldMatrix(fc.field.get(), fc.rank(degree + 2), fc.rank(degree));
                return eta[degree - fc.lowest];
            };
            detail::FactorContraction perturbed;
            for (int i = fc.lowest; i <= fc.highest(); ++i) {
                FieldMatrix dl = h.h(fc, i) + fc.d(i + 2) * eta_at(i) - eta_at(i - 1) * fc.d(i);
                perturbed.delta.push_back(std::move(dl));
            }
            detail::assert_contraction(fc, perturbed);
            h = std::move(perturbed);
        }
        RationalPoly det = detail::odd_to_even(fc, h).determinant();
        if (det.is_zero())
            throw InternalInconsistency("torsion determinant vanished on factor " +
                                        std::to_string(d));
        dets.emplace_back(d, std::move(det));
    }
    RationalPoly combined = crt_combine(n, dets);
    GroupRingElement rep = to_group_ring(n, combined);
    if (!is_unit(rep))
        throw InternalInconsistency("recombined torsion determinant is not a unit: " +
                                    rep.to_string());
    return WhiteheadClass(std::move(rep));
}

/// Rational chain contraction data for one cyclotomic factor, exposed for
/// inspection: the factor complexes and their contractions. The identity
/// d*delta + delta*d = id is asserted on construction.
struct RationalContraction {
    std::vector<detail::FactorComplex> factors;
    std::vector<detail::FactorContraction> contractions;
};

inline RationalContraction chain_contraction_rational(const BasedAcyclicComplex& c)
{
    RationalContraction out;
    for (int d : divisors(c.complex().modulus())) {
        out.factors.push_back(detail::project_complex(c.complex(), d));
        out.contractions.push_back(detail::build_contraction(out.factors.back()));
    }
    return out;
}

/// Whitehead torsion of a simplicial map against a cyclic labeling of its
/// target. The mapping cone must be acyclic over Z[Z/n] (f a Z[Z/n]
/// homology equivalence); otherwise NotAPiHomologyEquivalence reports the
/// first degree where cone homology survives.
inline WhiteheadClass whitehead_torsion(const SimplicialMap& f, const CyclicCoverLabeling& w,
                                        const ContractionPerturbation* perturb = nullptr)
{
    ChainComplexZG cone = mapping_cone_zg(f, w);
    if (auto witness = acyclicity_witness(cone))
        throw NotAPiHomologyEquivalence("mapping cone has homology " +
                                            witness->second.to_string() + " in degree " +
                                            std::to_string(witness->first),
                                        witness->first);
    return torsion_of_based_acyclic(BasedAcyclicComplex(std::move(cone)), perturb);
}

/// Torsion with the zero labeling mod n on the target (n = 1 gives the
/// trivial-pi pipeline).
inline WhiteheadClass whitehead_torsion(const SimplicialMap& f, int n = 1)
{
    return whitehead_torsion(f, CyclicCoverLabeling(f.target(), n, {}));
}

} // namespace whittle
