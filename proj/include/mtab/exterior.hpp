#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtab/linalg.hpp"
#include "mtab/tensor.hpp"

namespace mtab {

/// Element of the skew-commuting ring k<y_{m x n}>: terms keyed by sorted
/// variable subsets (y^2 = 0 is structural), products carry merge parity.
struct ExteriorPolynomial {
    int m = 0, n = 0;
    std::map<std::vector<int>, Rat> terms;  // sorted variable-id subsets

    ExteriorPolynomial() = default;
    ExteriorPolynomial(int m, int n) : m(m), n(n) {}
    static ExteriorPolynomial variable(int m, int n, int i, int j);  // 1-based

    int var_id(int i, int j) const { return (i - 1) * n + (j - 1); }
    ExteriorPolynomial& operator+=(const ExteriorPolynomial& o);
    ExteriorPolynomial operator*(const ExteriorPolynomial& o) const;
    ExteriorPolynomial& operator*=(const Rat& c);
    bool is_zero() const { return terms.empty(); }
    int degree() const;
    std::string to_string() const;
    bool operator==(const ExteriorPolynomial& o) const { return terms == o.terms; }

    /// Two-sided substitution y_{i,j} -> sum a_{k,i} b_{l,j} y_{k,l}.
    ExteriorPolynomial acted(const SubstitutionCols& a, const SubstitutionCols& b) const;
};

/// Degree-r subset basis of k<y_{m x n}>, lexicographic on sorted subsets.
struct ExtDegreeBasis {
    int m = 0, n = 0, r = 0;
    std::vector<std::vector<int>> subsets;
    std::map<std::vector<int>, int> index;

    static ExtDegreeBasis make(int m, int n, int r);
    int dim() const { return static_cast<int>(subsets.size()); }
    SparseVec coords(const ExteriorPolynomial& p) const;
};

/// Sign of merging two disjoint sorted subsets (parity of transpositions
/// needed to interleave), 0 if they intersect.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged);

}  // namespace mtab
