#pragma once

#include <vector>

#include "mtab/characters.hpp"
#include "mtab/poly.hpp"
#include "mtab/report.hpp"

namespace mtab {

/// Quadratic (and for T also linear) generators of J_{m,n}(kind):
/// IS -> same-column and same-row products (squares included),
/// PT -> same-column products, T -> same-column products + column sums.
std::vector<SparsePolynomial> ideal_generators(MonoidKind kind, int m, int n);

struct GradedQuotient {
    long long dim = 0;               // dim (k[x]/J)_r by exact linear algebra
    long long closed_form = 0;       // Lemma-style closed form
    std::vector<Monomial> basis;     // representative monomials of the quotient
};

/// Degree-r quotient dimension with the representative monomial basis; the
/// RREF-computed value, the closed form and the representative count must all
/// agree (std::logic_error otherwise), and the representatives are verified
/// independent modulo the ideal component.
GradedQuotient graded_quotient_dim(MonoidKind kind, int m, int n, int r);

/// Product over rows p of the minor with row indices from S's p-th row and
/// column indices from T's p-th row. S, T must have equal (straight) shape.
SparsePolynomial bitableau_minor(const Tableau& S, const Tableau& T, int m, int n);

/// The unquotiented chain 0 <= M_(r) <= ... <= M_(1^r) = k[x]_r with
/// quotient dims dim L_lambda(V_m) * dim L_lambda(V_n).
Report cauchy_filtration_check(int m, int n, int r);

/// The chain (M_lambda + J)/J: quotient dims against the tensor factor dims
/// (IS: R(m)^{lambda'} x R(n)^{lambda'}; PT: L_lambda(V_m) x R(n)^{lambda'};
/// T: L_lambda(U_m) x R(n)^{lambda'}); with structural=true additionally
/// verifies invariance of every chain subspace under the acting pair's
/// generators and compares quotient traces with products of factor
/// characters on S_m x S_n class representatives.
Report cauchy_quotient_check(MonoidKind kind, int m, int n, int r, bool structural);

/// Membership of the row-replacement sums sum_u (S_{i,j}[u]|T) in J_{m,n}(T),
/// on `samples` seeded random (S, T, cell) triples.
Report replacement_sum_check(int m, int n, const Partition& lambda, int samples,
                        unsigned long long seed);

/// Row-strict fillings of a straight shape (each row strictly increasing,
/// rows independent): sufficient spanning set for bitableau spans.
std::vector<Tableau> row_strict_fillings(const Partition& lambda, int n);

/// dim L_lambda(V_m) in the rows-strict convention (#SST over [m]).
long long schur_dim(const Partition& lambda, int m);
/// dim L_lambda(U_m) = #SST over [m-1].
long long standard_schur_dim(const Partition& lambda, int m);

}  // namespace mtab
