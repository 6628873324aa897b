#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mtab/cache.hpp"
#include "mtab/monoid.hpp"
#include "mtab/schur.hpp"

namespace mtab {

/// Action of one group/monoid element on a fixed basis.
struct ActionMap {
    std::string source;  // element descriptor, e.g. "2,-,1" or "sigma=(2,1,3)"
    RatMatrix matrix;
};

/// A module for a submonoid of PT_n presented as a quotient M/M'' of a
/// rational M_n-module: the ambient LabeledModule plus the coset basis given
/// by its 0/1-weight labels (the distinct-entry tableaux). Action matrices
/// are expressed on those coset representatives.
struct MonoidModule {
    MonoidKind kind = MonoidKind::PT;
    int n = 0;
    int r = 0;
    SkewShape shape;      // the R-module's indexing shape lambda/mu
    bool upper = true;    // R^{lambda/mu} (Schur side) vs R_{lambda/mu} (Weyl side)
    std::shared_ptr<const LabeledModule> base;
    std::vector<int> rep_labels;  // indices of the 0/1-weight labels in base

    int dim() const { return static_cast<int>(rep_labels.size()); }
    /// Span of the non-0/1-weight basis labels, as a subspace of base coords.
    Subspace m_double_prime() const;
    RatMatrix act(const SubstitutionCols& g) const;
    RatMatrix act(const PartialTransformation& p) const { return act(SubstitutionCols::from_partial(p)); }
    RatMatrix act(const std::vector<int>& sigma) const { return act(SubstitutionCols::from_permutation(sigma)); }
    /// Projection of a base-coordinate vector to coset coordinates.
    RatVec project(const RatVec& base_coords) const;
};

/// Small generating set of the monoid (identity excluded where redundant):
/// adjacent transpositions, plus the rank-(n-1) partial identity for IS/PT
/// and the idempotent collapsing n to n-1 for T/PT.
std::vector<PartialTransformation> monoid_generators(MonoidKind kind, int n);

/// G_{M(n)}: quotients M by M''. Verifies, for every generator A of the
/// monoid, that A maps each non-0/1-weight basis vector into the span of
/// non-0/1-weight ambient monomials (the submodule property of M'').
MonoidModule symmetrized_functor(std::shared_ptr<const LabeledModule> base, MonoidKind kind);

/// R(n)^{lambda/mu} (upper: from the Schur module of the conjugate shape) or
/// R(n)_{lambda/mu} (lower: from the Weyl module of the shape itself).
/// Dimension is verified against binom(n,r) * f^{lambda/mu}; r > n yields the
/// zero module.
MonoidModule build_R_module(MonoidKind kind, int n, const SkewShape& shape, bool upper);

std::vector<ActionMap> restrict_to_symmetric_group(const MonoidModule& M);

/// An S_r-module given concretely by one matrix per permutation.
struct SymGroupModule {
    int r = 0;
    int dim = 0;
    std::map<std::vector<int>, RatMatrix> mats;

    const RatMatrix& mat(const std::vector<int>& sigma) const { return mats.at(sigma); }
};

/// The Specht module S^lambda realized as the (1,..,1) weight space of the
/// Schur module of the conjugate shape over V_r.
SymGroupModule specht_module(const Partition& lambda);

/// k I_{n,r} (x)_{S_r} fiber, with its PT_n action: basis = (order-preserving
/// injection, fiber basis vector); A acts through p_A composed with the
/// injection, zero unless the composite is injective and everywhere defined.
struct InducedModule {
    MonoidKind kind = MonoidKind::PT;
    int n = 0;
    int r = 0;
    SymGroupModule fiber;
    std::vector<std::vector<int>> injections;  // sorted r-subsets of [n]

    int dim() const { return static_cast<int>(injections.size()) * fiber.dim; }
    RatMatrix act(const PartialTransformation& A) const;
};

InducedModule induced_module(MonoidKind kind, int n, SymGroupModule fiber);

}  // namespace mtab

#include "mtab/report.hpp"

namespace mtab {

/// F(M) vs the (1,..,1) weight spaces of M (x) Sym_{n-r}(V_n) and
/// M (x) D_{n-r}(V_n): equal dimensions and equal S_n characters, all three
/// computed independently by explicit traces.
Report restriction_weight_space_check(const LabeledModule& M, int n);

/// Trace-by-trace comparison of the induced realization k I_{n,r} (x)_{S_r}
/// S^lambda against R(n)^lambda over every monoid element.
Report induced_trace_check(MonoidKind kind, int n, const Partition& lambda);

}  // namespace mtab
