#pragma once

#include <string>
#include <vector>

#include "mtab/combinatorics.hpp"
#include "mtab/linalg.hpp"

namespace mtab {

enum class MonoidKind { IS, PT, T, Sym };

MonoidKind monoid_kind_parse(const std::string& s);
std::string monoid_kind_name(MonoidKind k);

/// Partial self-map of [n]. img[j] is the image of j+1 (1-based values),
/// 0 when undefined. The 0/1 matrix realization puts the 1 of column j in
/// row p(j), so matrix_of(a.compose(b)) = matrix_of(a) * matrix_of(b).
struct PartialTransformation {
    int n = 0;
    std::vector<int> img;

    PartialTransformation() = default;
    PartialTransformation(int n, std::vector<int> img);
    static PartialTransformation identity(int n);
    /// From a permutation given as images sigma(1..n).
    static PartialTransformation from_permutation(const std::vector<int>& sigma);

    bool defined(int j) const { return img[j - 1] != 0; }   // j in 1..n
    int operator()(int j) const { return img[j - 1]; }      // 0 = undefined
    bool total() const;
    bool injective() const;   // on its domain
    bool bijective() const { return total() && injective(); }
    bool in_kind(MonoidKind k) const;
    int domain_size() const;
    int image_size() const;

    /// (*this o other): defined at j iff other(j) and this(other(j)) are.
    PartialTransformation compose(const PartialTransformation& other) const;
    RatMatrix matrix() const;

    std::string to_string() const;  // "2,-,1"
    static PartialTransformation parse(const std::string& s);
    bool operator==(const PartialTransformation&) const = default;
};

/// Block-diagonal embedding: acts as a on [s], as b shifted on [s+1..n].
PartialTransformation block_embed(const PartialTransformation& a,
                                  const PartialTransformation& b);

/// Exactly the elements of the monoid, ordered lexicographically on the
/// image sequence with `undefined` sorting last. Supported for 1 <= n <= 6.
std::vector<PartialTransformation> enumerate_monoid(MonoidKind kind, int n);

/// Closed-form cardinalities: sum C(n,r)^2 r!, (n+1)^n, n^n, n!.
long long monoid_cardinality_formula(MonoidKind kind, int n);

/// All permutations of [n] as image vectors, lexicographic.
std::vector<std::vector<int>> all_permutations(int n);

/// Cycle type of a permutation (images 1..n), as a partition of n.
Partition cycle_type(const std::vector<int>& sigma);

/// Canonical representative permutation with the given cycle type:
/// consecutive cycles (1..rho1)(rho1+1..)...
std::vector<int> cycle_type_representative(const Partition& rho, int n);

/// Adjacent transpositions (i i+1), i = 1..n-1; generate S_n (n>=2).
std::vector<std::vector<int>> coxeter_generators(int n);

long long conjugacy_class_size(const Partition& rho);

}  // namespace mtab
