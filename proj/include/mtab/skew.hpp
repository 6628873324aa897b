#pragma once

#include "mtab/cauchy.hpp"
#include "mtab/exterior.hpp"
#include "mtab/report.hpp"

namespace mtab {

/// Generators of J'_{m,n}(kind) in k<y_{m x n}>: same recipe as the
/// commuting case with squares dropped (they vanish structurally).
std::vector<ExteriorPolynomial> skew_ideal_generators(MonoidKind kind, int m, int n);

/// RREF-computed dim of (k<y>/J')_r, cross-checked against the closed forms
/// (same expressions as the commuting case).
long long skew_quotient_dim(MonoidKind kind, int m, int n, int r);

/// <S|T>_p is the sum over all distinct rearrangements of T's p-th row
/// multiset of the products y_{s_1,h_1}...y_{s_k,h_k}; (S|T) multiplies the
/// rows in the exterior ring.
ExteriorPolynomial skew_bitableau(const Tableau& S, const Tableau& T, int m, int n);

/// The chain (M_lambda + J')/J' built from skew bitableaux, quotient dims
/// against IS: R(m)^{lambda'} x R(n)_lambda; PT: L_lambda(V_m) x R(n)_lambda;
/// T: L_lambda(U_m) x R(n)_lambda. Samples the two membership lemmas.
Report skew_cauchy_quotient_check(MonoidKind kind, int m, int n, int r, int samples,
                           unsigned long long seed);

/// The unquotiented skew chain: quotient dims dim L_lambda(V_m) * dim
/// K_lambda(V_n), total binom(mn, r).
Report skew_cauchy_filtration_check(int m, int n, int r);

/// dim K_lambda(V_n) in the rows-strict convention (#cSST over [n]).
long long weyl_dim(const Partition& lambda, int n);

}  // namespace mtab
