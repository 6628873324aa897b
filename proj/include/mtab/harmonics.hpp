#pragma once

#include <cstdint>
#include <vector>

#include "mtab/monoid.hpp"
#include "mtab/poly.hpp"
#include "mtab/report.hpp"

namespace mtab {

/// Finite locus of 0/1 matrices in the n x n grid, from a monoid enumeration.
/// A monomial evaluates to 1 at a point iff its support sits inside the
/// point's support, so evaluation data is pure set containment.
struct PointLocus {
    MonoidKind kind = MonoidKind::IS;
    int n = 0;
    std::vector<PartialTransformation> points;
    std::vector<std::uint32_t> supports;  // cell bitmasks, var id = i*n + j

    static PointLocus from_monoid(MonoidKind kind, int n);
    int size() const { return static_cast<int>(points.size()); }
    /// Exact value of a polynomial at every point.
    RatVec evaluate(const SparsePolynomial& f) const;
};

/// Kernel of the evaluation matrix on monomials of degree <= d, as a
/// subspace of the degree-graded coordinate space (degree 0 block first,
/// each block in decreasing lexicographic monomial order). Intended for
/// desk-size instances; the gr = J verification uses rank bookkeeping
/// instead of materializing these kernels.
Subspace vanishing_ideal_upto(const PointLocus& locus, int d);

/// Degree-d slice of gr(I(Z)): top forms of ideal members of degree d,
/// as a subspace of the degree-d monomial coordinates.
Subspace associated_graded_slice(const PointLocus& locus, int d);

/// Degreewise equality gr(I(Z)) = J_n(kind): per-generator top-form
/// witnesses give the containment J <= gr as ideals, exact rank increments
/// of the deduplicated support-evaluation matrix give dim gr_d, and the
/// degree component of J is materialized by sparse elimination; at n <= 3
/// every RREF row of J_d is additionally reduced against the evaluation
/// data directly. Stops at the first degree with zero quotient (and full
/// J_d); asserts the codimension total equals |Z|.
Report check_gr_equals_J(MonoidKind kind, int n, int dmax);

/// Hilbert function of k[x_{n x n}]/gr(I(Z)) until it vanishes, computed
/// from evaluation-rank increments; cross-checked against the closed forms.
std::vector<long long> hilbert_function(MonoidKind kind, int n);

}  // namespace mtab
