#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mtab/combinatorics.hpp"
#include "mtab/linalg.hpp"
#include "mtab/monoid.hpp"
#include "mtab/tensor.hpp"

namespace mtab {

/// Ambient codomain of the row-antisymmetrization map for a skew shape:
/// one Symmetric factor per column, of the column's length.
MultigradedSpace sym_ambient(const SkewShape& shape, int n);
/// Ambient codomain of the divided-power expansion map: one Exterior
/// factor per column.
MultigradedSpace ext_ambient(const SkewShape& shape, int n);

/// Image of X_T: antisymmetrize each row over its cells (sum over row
/// permutations with sign), send each column's letters into its Symmetric
/// factor. Zero iff some row of T repeats an entry.
SparseVec d_map(const SkewShape& shape, int n, const Tableau& T);

/// Image of Y_T: expand every row's divided-power monomial into its distinct
/// letter sequences (coefficient 1 each), wedge each column's letters.
SparseVec dprime_map(const SkewShape& shape, int n, const Tableau& T);

/// A module with a labeled basis inside a multigraded ambient space.
/// Basis vectors are weight vectors; the weight strata partition the basis
/// and each stratum carries its own factored solver (built at construction,
/// so a finished module is immutable and safe to share across threads).
struct LabeledModule {
    SkewShape shape;
    int n = 0;
    bool weyl = false;  // false: image of d (Schur), true: image of d' (Weyl)
    MultigradedSpace ambient;
    std::vector<Tableau> labels;      // SST (Schur) or cSST (Weyl), row-word lex
    std::vector<SparseVec> vectors;   // exact ambient coordinates
    std::vector<WeightVector> weights;

    struct Stratum {
        std::vector<int> label_idx;    // labels of this weight
        std::vector<int> amb_support;  // ambient indices spanned, sorted
        std::map<int, int> amb_pos;
        SolvedBasis solver;            // over compressed coordinates
    };
    std::map<WeightVector, Stratum> strata;

    int dim() const { return static_cast<int>(labels.size()); }
    SparseVec image_of(const Tableau& T) const;  // d or d' by module type

    /// Exact coefficients over the labeled basis; nullopt when not in span.
    std::optional<RatVec> express(const SparseVec& ambient_vec) const;

    /// Coefficients over the labels whose weight satisfies `keep`; strata with
    /// weights failing `keep` are dropped (projection along them). Throws if a
    /// kept component falls outside its stratum's span.
    RatVec express_dropping(const SparseVec& ambient_vec,
                            const std::function<bool(const WeightVector&)>& keep) const;

    /// Matrix of the substitution action on the labeled basis: column i holds
    /// the coefficients of g . (basis vector i).
    RatMatrix act(const SubstitutionCols& g) const;
    RatMatrix act(const PartialTransformation& p) const { return act(SubstitutionCols::from_partial(p)); }
    RatMatrix act(const std::vector<int>& sigma) const { return act(SubstitutionCols::from_permutation(sigma)); }
    RatMatrix act(const RatMatrix& g) const { return act(SubstitutionCols::from_matrix(g)); }

    /// Span of the basis vectors whose weight satisfies the predicate, as a
    /// subspace of the module's own coordinate space.
    Subspace weight_component(const std::function<bool(const WeightVector&)>& pred) const;
};

/// Basis-theorem construction: labels are the semistandard (resp.
/// co-semistandard) tableaux and their images are verified independent
/// weight stratum by weight stratum; dependence throws std::logic_error.
std::shared_ptr<const LabeledModule> build_schur_module(const SkewShape& shape, int n);
std::shared_ptr<const LabeledModule> build_weyl_module(const SkewShape& shape, int n);

/// Assembles a module from precomputed image vectors (cache loads); weights
/// and stratum solvers are rebuilt, so independence is still verified.
std::shared_ptr<const LabeledModule> assemble_module(const SkewShape& shape, int n, bool weyl,
                                                     std::vector<Tableau> labels,
                                                     std::vector<SparseVec> vectors);

/// Exact coefficients of the image of an arbitrary tableau over the module's
/// semistandard basis. The straightening law guarantees a solution with the
/// same weight as T; failure means the basis theorem broke and throws.
RatVec straighten(const LabeledModule& module, const Tableau& T);

/// GL branching chain of L_{shape}(V_n) for the split [s] + [s+1..n]:
/// for every partition nu between inner and outer (listed in decreasing
/// lexicographic order) the span M_nu of images of tableaux T with
/// eta(T) >= nu, where eta(T)_i = inner_i + #(entries of row i in [s]).
/// Successive quotient dimensions are checked against
/// dim L_{nu/inner}(V_s) * dim L_{outer/nu}(V_{n-s}).
struct BranchingChain {
    std::vector<Partition> nus;     // decreasing lex, nus.front() = outer
    std::vector<Subspace> chain;    // increasing, in module coordinates
    std::vector<int> quotient_dims; // chain[k] minus its predecessor
};
BranchingChain gl_branching_filtration(const SkewShape& shape, int n, int s);
BranchingChain gl_branching_filtration(const LabeledModule& module, int s);

/// L_lambda(U_m): quotient of L_lambda(V_m) by the row-replacement-sum
/// subspace W_lambda, with the induced S_m action. Coset representatives are
/// the semistandard labels with entries in [m-1].
struct StandardSchurModule {
    Partition lambda;
    int m = 0;
    std::shared_ptr<const LabeledModule> base;
    Subspace W;                    // in base module coordinates
    std::vector<int> rep_labels;   // indices into base->labels
    SolvedBasis projector;         // rows: W basis then rep unit vectors

    int dim() const { return static_cast<int>(rep_labels.size()); }
    RatMatrix act(const std::vector<int>& sigma) const;
    /// Coefficients of a base-module coordinate vector over the coset basis.
    RatVec project(const RatVec& base_coords) const;
};
StandardSchurModule build_standard_schur_module(const Partition& lambda, int m);

}  // namespace mtab
