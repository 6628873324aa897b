#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mtab/report.hpp"
#include "mtab/rmodule.hpp"

namespace mtab {

/// Class function on S_n: one exact value per cycle type.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rat> values;

    Rat inner(const ClassFunction& other) const;
    ClassFunction operator+(const ClassFunction& o) const;
    bool operator==(const ClassFunction&) const = default;
};

/// Irreducible character chi^lambda by the Murnaghan-Nakayama rule.
ClassFunction specht_character(const Partition& lambda);

/// Character from explicit traces: one representative permutation per class.
ClassFunction class_function_of(int n,
                                const std::function<RatMatrix(const std::vector<int>&)>& act);
ClassFunction module_character(const MonoidModule& M);

/// Branching rule for S_n inside the monoid: chi(R(n)^lambda | S_n) equals
/// the sum of chi^{lambda+} over the horizontal-strip extensions, and the
/// same on the Weyl side for R(n)_lambda.
Report verify_branch1(const Partition& lambda, int n);

/// Branching for M(s) x M(n-s) -> M(n): (a) the dimension identity over the
/// intermediate partitions; (b) when structural=true (intended for n <= 3),
/// the chain (M_nu + N)/N inside R(n)^{lambda/mu}: increasing, invariant
/// under every block-embedded pair, quotient dims equal to the factor dims.
Report verify_branch2(MonoidKind kind, const SkewShape& shape, int n, int s, bool structural);

/// Specialization s = n-1: factor set P(lambda,mu), plus lambda itself when
/// r < n.
Report verify_branch3(MonoidKind kind, const SkewShape& shape, int n);

struct NonIsoTable {
    MonoidKind kind;
    int n = 0;
    std::vector<Partition> lambdas;  // all partitions of r <= rmax
    // entry[i][j]: true = proven distinct by some invariant
    std::vector<std::vector<bool>> distinct;
    // pairs allowed to stay undistinguished by Corollary-level theory
    bool consistent = false;
    std::string detail;
};

/// Compares dim, S_n character and traces of a fixed set of non-invertible
/// elements for all pairs; checks consistency: everything except possibly
/// ((r),(n-r)) must come out distinct, and for IS/PT those pairs too.
NonIsoTable nonisomorphism_table(MonoidKind kind, int n, int rmax);

struct IrredResult {
    enum class Status { Irreducible, Reducible, Inconclusive } status;
    std::optional<Subspace> witness;  // proper nonzero invariant subspace
    int rounds_used = 0;
    unsigned long long seed = 0;
    std::string certificate;  // how the Norton round concluded
};

/// Norton-style search over the rationals: spins kernels of monoid-algebra
/// elements in the module and its transpose. `Irreducible` only with a
/// dim-1-kernel certificate; bounded number of rounds, seeded.
IrredResult irreducibility_test(const MonoidModule& M, unsigned long long seed,
                                int max_rounds = 25);

}  // namespace mtab
