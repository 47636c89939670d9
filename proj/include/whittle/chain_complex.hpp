#pragma once

#include "whittle/complex.hpp"
#include "whittle/errors.hpp"
#include "whittle/smith.hpp"

#include <string>
#include <vector>

namespace whittle {

/// Bounded chain complex of finitely generated free Z-modules. Degrees run
/// lowest() .. highest(); boundary(i) maps degree i to degree i-1 (the
/// matrix for the lowest degree has zero rows).
class ChainComplexZ {
  public:
    ChainComplexZ() = default;

    /// basis[k] labels the generators in degree lowest+k; boundary[k] is
    /// the matrix of d from degree lowest+k to degree lowest+k-1.
    ChainComplexZ(int lowest, std::vector<std::vector<std::string>> basis,
                  std::vector<IntegerMatrix> boundary)
        : lowest_(lowest), basis_(std::move(basis)), boundary_(std::move(boundary))
    {
        check_shapes();
        check_d_squared();
    }

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

    /// d : degree -> degree-1; a zero matrix of the right shape outside
    /// the support range.
    IntegerMatrix boundary(int degree) const
    {
        if (degree < lowest_ || degree > highest())
            return IntegerMatrix(rank(degree - 1), rank(degree));
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
    void check_shapes() const
    {
        if (basis_.size() != boundary_.size())
            throw NotAComplex("chain complex: degree count mismatch");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t below = k == 0 ? 0 : basis_[k - 1].size();
            if (boundary_[k].cols() != basis_[k].size() || boundary_[k].rows() != below)
                throw NotAComplex("chain complex: boundary shape mismatch");
        }
    }

    void check_d_squared() const
    {
        for (std::size_t k = 2; k <= basis_.size(); ++k)
            if (!(boundary_[k - 2] * boundary_[k - 1]).is_zero())
                throw NotAComplex("chain complex: d^2 != 0");
    }

    int lowest_ = 0;
    std::vector<std::vector<std::string>> basis_;
    std::vector<IntegerMatrix> boundary_;
};

/// H_i = Z^betti ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ...
struct HomologyGroup {
    long long betti = 0;
    std::vector<Int> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const
    {
        return betti == o.betti && torsion == o.torsion;
    }

    std::string to_string() const
    {
        if (trivial())
            return "0";
        std::string s;
        if (betti == 1)
            s = "Z";
        else if (betti > 1)
            s = "Z^" + std::to_string(betti);
        for (const auto& t : torsion) {
            if (!s.empty())
                s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

/// Simplicial chain complex of K with the alternating-sign boundary on
/// sorted vertex lists. With reduced set, an augmentation generator in
/// degree -1 receives every vertex.
inline ChainComplexZ chain_complex(const SimplicialComplex& k, bool reduced = false)
{
    const int top = k.dimension();
    const int lo = reduced ? -1 : 0;
    if (top < 0) {
        // Empty complex: reduced version is a single Z in degree -1.
        if (!reduced)
            return ChainComplexZ();
        return ChainComplexZ(-1, {{"*"}}, {IntegerMatrix(0, 1)});
    }

    std::vector<std::vector<Simplex>> by_dim(top + 1);
    for (int d = 0; d <= top; ++d)
        by_dim[d] = k.simplices_of_dim(d);

    std::vector<std::vector<std::string>> basis;
    std::vector<IntegerMatrix> boundary;
    if (reduced)
        basis.push_back({"*"});
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> labels;
        labels.reserve(by_dim[d].size());
        for (const auto& s : by_dim[d])
            labels.push_back(simplex_to_string(s));
        basis.push_back(std::move(labels));
    }

    // index of each simplex within its dimension
    std::map<Simplex, std::size_t> index;
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i)
            index[by_dim[d][i]] = i;

    if (reduced)
        boundary.push_back(IntegerMatrix(0, 1));
    {
        // degree 0: zero map, or augmentation when reduced
        IntegerMatrix d0(reduced ? 1 : 0, by_dim[0].size());
        if (reduced)
            for (std::size_t j = 0; j < by_dim[0].size(); ++j)
                d0(0, j) = 1;
        boundary.push_back(std::move(d0));
    }
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix m(by_dim[d - 1].size(), by_dim[d].size());
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const Simplex& s = by_dim[d][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = face_dropping(s, i);
                m(index[f], j) += (i % 2 == 0) ? 1 : -1;
            }
        }
        boundary.push_back(std::move(m));
    }
    return ChainComplexZ(lo, std::move(basis), std::move(boundary));
}

/// Homology in every degree lowest..highest via Smith normal form:
/// betti_i = nullity(d_i) - rank(d_{i+1}); torsion = invariant factors of
/// d_{i+1} above 1.
inline std::vector<HomologyGroup> homology(const ChainComplexZ& c)
{
    std::vector<HomologyGroup> out;
    if (c.trivial())
        return out;
    std::vector<SmithForm> snf;
    for (int i = c.lowest(); i <= c.highest() + 1; ++i)
        snf.push_back(smith_normal_form(c.boundary(i)));
    for (int i = c.lowest(); i <= c.highest(); ++i) {
        const std::size_t k = i - c.lowest();
        HomologyGroup h;
        h.betti = static_cast<long long>(c.rank(i)) - snf[k].rank() - snf[k + 1].rank();
        h.torsion = snf[k + 1].invariant_factors_above_one();
        out.push_back(std::move(h));
    }
    return out;
}

inline HomologyGroup homology_in_degree(const ChainComplexZ& c, int degree)
{
    if (c.trivial() || degree < c.lowest() || degree > c.highest())
        return HomologyGroup{};
    auto all = homology(c);
    return all[degree - c.lowest()];
}

/// True iff all reduced homology vanishes; the empty complex is not
/// acyclic (its reduced degree -1 homology is Z).
inline bool is_acyclic(const SimplicialComplex& k)
{
    for (const auto& h : homology(chain_complex(k, true)))
        if (!h.trivial())
            return false;
    return true;
}

/// Chain map between two integral chain complexes; matrices indexed by
/// degree of the shared range.
struct ChainMapZ {
    ChainComplexZ source;
    ChainComplexZ target;
    // component(i): source degree i -> target degree i
    std::vector<IntegerMatrix> components;
    int lowest = 0;

    IntegerMatrix component(int degree) const
    {
        if (degree < lowest || degree >= lowest + static_cast<int>(components.size()))
            return IntegerMatrix(target.rank(degree), source.rank(degree));
        return components[degree - lowest];
    }

    void check() const
    {
        const int lo = std::min(source.lowest(), target.lowest());
        const int hi = std::max(source.highest(), target.highest());
        for (int i = lo; i <= hi; ++i) {
            IntegerMatrix lhs = target.boundary(i) * component(i);
            IntegerMatrix rhs = component(i - 1) * source.boundary(i);
            if (!(lhs == rhs))
                throw NotAChainMap("chain map does not commute with boundaries in degree " +
                                   std::to_string(i));
        }
    }
};

/// Degree-wise direct sum; bases concatenated left then right.
inline ChainComplexZ direct_sum(const ChainComplexZ& a, const ChainComplexZ& b)
{
    if (a.trivial())
        return b;
    if (b.trivial())
        return a;
    const int lo = std::min(a.lowest(), b.lowest());
    const int hi = std::max(a.highest(), b.highest());
    std::vector<std::vector<std::string>> basis;
    std::vector<IntegerMatrix> boundary;
    for (int i = lo; i <= hi; ++i) {
        std::vector<std::string> labels = a.basis(i);
        for (const auto& l : b.basis(i))
            labels.push_back(l);
        basis.push_back(std::move(labels));
        IntegerMatrix da = a.boundary(i);
        IntegerMatrix db = b.boundary(i);
        IntegerMatrix m(i == lo ? 0 : da.rows() + db.rows(), da.cols() + db.cols());
        if (i > lo) {
            for (std::size_t r = 0; r < da.rows(); ++r)
                for (std::size_t c = 0; c < da.cols(); ++c)
                    m(r, c) = da(r, c);
            for (std::size_t r = 0; r < db.rows(); ++r)
                for (std::size_t c = 0; c < db.cols(); ++c)
                    m(da.rows() + r, da.cols() + c) = db(r, c);
        }
        boundary.push_back(std::move(m));
    }
    return ChainComplexZ(lo, std::move(basis), std::move(boundary));
}

/// Mapping cone of a chain map: cone_i = source_{i-1} ⊕ target_i with
/// boundary [[-d', 0], [f, d'']]. Basis labels are shifted-source labels
/// first, then target labels.
inline ChainComplexZ mapping_cone(const ChainMapZ& f)
{
    f.check();
    const ChainComplexZ& src = f.source;
    const ChainComplexZ& tgt = f.target;
    const int lo = std::min(src.lowest() + 1, tgt.lowest());
    const int hi = std::max(src.highest() + 1, tgt.highest());
    if (hi < lo)
        return ChainComplexZ();

    std::vector<std::vector<std::string>> basis;
    std::vector<IntegerMatrix> boundary;
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
        IntegerMatrix m(i == lo ? 0 : rows, cols);
        if (i > lo) {
            IntegerMatrix ds = src.boundary(i - 1);
            IntegerMatrix ft = f.component(i - 1);
            IntegerMatrix dt = tgt.boundary(i);
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
    return ChainComplexZ(lo, std::move(basis), std::move(boundary));
}

} // namespace whittle
