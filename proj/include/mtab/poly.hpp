#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtab/linalg.hpp"
#include "mtab/tensor.hpp"

namespace mtab {

/// Monomial in the m x n variable grid x_{i,j}; exponents stored row-major,
/// so the default vector comparison is the lexicographic order with
/// x_{1,1} > x_{1,2} > ... (row-major priority).
struct Monomial {
    std::vector<std::uint8_t> e;

    explicit Monomial(int vars = 0) : e(vars, 0) {}
    int degree() const;
    std::uint32_t support() const;  // bitmask over the grid, vars <= 32
    Monomial operator*(const Monomial& o) const;
    bool operator<(const Monomial& o) const { return e < o.e; }
    bool operator==(const Monomial&) const = default;
};

/// Sparse exact polynomial in the commuting grid k[x_{m x n}].
struct SparsePolynomial {
    int m = 0, n = 0;
    std::map<Monomial, Rat> terms;  // no zero coefficients

    SparsePolynomial() = default;
    SparsePolynomial(int m, int n) : m(m), n(n) {}
    static SparsePolynomial variable(int m, int n, int i, int j);  // 1-based i,j
    static SparsePolynomial constant(int m, int n, const Rat& c);

    int var_id(int i, int j) const { return (i - 1) * n + (j - 1); }
    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial& operator*=(const Rat& c);
    bool is_zero() const { return terms.empty(); }
    int degree() const;
    SparsePolynomial homogeneous_component(int d) const;
    std::string to_string() const;

    /// Image under the two-sided substitution x_{i,j} -> sum_{k,l}
    /// a_{k,i} b_{l,j} x_{k,l} (the left/right module structure on the grid).
    SparsePolynomial acted(const SubstitutionCols& a, const SubstitutionCols& b) const;
};

/// Monomials of k[x_{m x n}]_r in decreasing lexicographic order, with index
/// lookup; the coordinate convention for every degree-r computation.
struct DegreeBasis {
    int m = 0, n = 0, r = 0;
    std::vector<Monomial> mons;
    std::map<Monomial, int> index;

    static DegreeBasis make(int m, int n, int r);
    int dim() const { return static_cast<int>(mons.size()); }
    SparseVec coords(const SparsePolynomial& p) const;  // p must be homogeneous of degree r
};

long long monomial_count(int vars, int degree);  // C(vars + degree - 1, degree)

}  // namespace mtab
