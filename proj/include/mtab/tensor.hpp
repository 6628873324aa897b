#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtab/combinatorics.hpp"
#include "mtab/linalg.hpp"
#include "mtab/monoid.hpp"

namespace mtab {

enum class FactorKind { Exterior, Symmetric, DividedPower };

/// One tensor factor Lambda^d(V_n), Sym_d(V_n) or D_d(V_n), with its
/// canonical monomial basis: strictly (Exterior) or weakly (Symmetric,
/// DividedPower) increasing tuples over [n], lexicographically ordered.
struct TensorFactor {
    FactorKind kind = FactorKind::Symmetric;
    int n = 0;
    int degree = 0;
    std::vector<std::vector<int>> labels;
    std::map<std::vector<int>, int> index;

    static TensorFactor make(FactorKind kind, int n, int degree);
    int dim() const { return static_cast<int>(labels.size()); }
    /// Sorts a word into the canonical label. Returns (index, sign) where
    /// sign is the sorting parity for Exterior (0 coefficient on repeats,
    /// signalled by index -1) and +1 for Symmetric/DividedPower.
    std::pair<int, int> normalize(std::vector<int> word) const;
};

/// Substitution data e_j -> sum_i cols[j-1][..] e_i, kept column-sparse.
struct SubstitutionCols {
    int n = 0;
    std::vector<std::vector<std::pair<int, Rat>>> cols;  // 0-based target index

    static SubstitutionCols from_matrix(const RatMatrix& g);
    static SubstitutionCols from_partial(const PartialTransformation& p);
    static SubstitutionCols from_permutation(const std::vector<int>& sigma);
};

/// Tensor product of factors; basis indexed mixed-radix (last factor fastest).
struct MultigradedSpace {
    std::vector<TensorFactor> factors;

    long long dim() const;
    int index_of(const std::vector<int>& factor_label_indices) const;
    std::vector<int> unpack(int index) const;
    /// Content of the full monomial as a weight over [n].
    WeightVector weight_of(int index, int n) const;
    std::string describe() const;
};

/// Applies one substitution to many vectors of a space, caching the induced
/// image of every factor label it meets. DividedPower factors accept only
/// monomial substitutions (at most one term per column, coefficient 1),
/// which covers the permutation actions the library needs there.
struct SubstitutionAction {
    const MultigradedSpace* space;
    SubstitutionCols cols;
    mutable std::vector<std::map<int, std::vector<std::pair<int, Rat>>>> cache;

    SubstitutionAction(const MultigradedSpace& s, SubstitutionCols c);
    SparseVec apply(const SparseVec& v) const;

private:
    const std::vector<std::pair<int, Rat>>& factor_image(int f, int label_idx) const;
};

}  // namespace mtab
