#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mtab/rational.hpp"

namespace mtab {

/// Dense exact rational matrix, row-major.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static RatMatrix identity(int n);
    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;
    bool is_zero() const;
    Rat trace() const;
    std::string to_csv() const;  // exact fractions, debug dump

    RatVec row(int i) const { return RatVec(a.begin() + static_cast<std::size_t>(i) * cols,
                                            a.begin() + static_cast<std::size_t>(i + 1) * cols); }
};

struct RrefResult {
    RatMatrix mat;           // reduced row-echelon form, zero rows dropped
    int rank = 0;
    std::vector<int> pivots; // pivot column per row of `mat`
};

/// Unique reduced row-echelon form (Gauss-Jordan over Q, smallest-bitsize pivot).
RrefResult rref(RatMatrix m);

int rank_of(const RatMatrix& m);

/// Rows form a canonical basis of the right null space {v : m v = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

/// Fraction-free Bareiss determinant. Exact for any rational matrix
/// (denominators are cleared first); used as an independent rank/det oracle.
Rat bareiss_determinant(RatMatrix m);

/// A subspace of Q^ambient held in canonical form: basis rows are the RREF
/// of any spanning set, so equal subspaces compare equal componentwise.
struct Subspace {
    int ambient = 0;
    RatMatrix basis;  // RREF rows
    std::vector<int> pivots;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_spanning(int ambient, const std::vector<RatVec>& rows);

    int dim() const { return basis.rows; }
    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// dim(*this / sub); throws if sub is not contained in *this.
    int quotient_dim(const Subspace& sub) const;
};

/// Exact coefficients of v over `basis` (rows), or nullopt when v is not in
/// the span. NotInSpan is a normal result, not an error.
std::optional<RatVec> express_in_basis(const RatVec& v, const std::vector<RatVec>& basis);

/// Incremental row-space builder: appends rows one at a time, keeping a
/// leading-one echelon set keyed by pivot column. Cheaper than re-running
/// rref when feeding thousands of mostly-sparse rows.
struct RowReducer {
    explicit RowReducer(int ambient) : ambient(ambient) {}
    int ambient;
    std::map<int, RatVec> rows;  // pivot column -> reduced row (leading 1)

    /// Reduces v against the current rows; inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    bool add(RatVec v);
    /// True iff v lies in the current row space.
    bool contains(RatVec v) const;
    int rank() const { return static_cast<int>(rows.size()); }
    Subspace to_subspace() const;  // back-eliminates to canonical RREF
};

/// Sparse vector: sorted (index, coefficient) pairs, no zero coefficients.
struct SparseVec {
    std::vector<std::pair<int, Rat>> t;

    void add_term(int idx, const Rat& c);  // accumulate (keeps order on finalize)
    void finalize();                       // sort, merge, drop zeros
    bool empty() const { return t.empty(); }
    RatVec dense(int ambient) const;
    static SparseVec from_dense(const RatVec& v);
};

/// Sparse analog of RowReducer for wide systems (ideal degree components).
struct SparseReducer {
    std::map<int, SparseVec> rows;  // pivot index -> reduced row (leading 1)

    bool add(SparseVec v);
    bool contains(SparseVec v) const;
    int rank() const { return static_cast<int>(rows.size()); }
    /// Canonical RREF rows (back-eliminated), as sparse vectors in pivot order.
    std::vector<SparseVec> rref_rows() const;
};

/// Solve-many-times helper against a fixed independent basis (rows of B):
/// factored once, each express() is a single reduction pass.
struct SolvedBasis {
    int ambient = 0;
    int k = 0;                 // number of basis rows
    RatMatrix reduced;         // RREF of B
    RatMatrix transform;       // transform * B = reduced
    std::vector<int> pivots;

    SolvedBasis() = default;
    /// Throws std::logic_error if the rows are dependent.
    static SolvedBasis factor(const std::vector<RatVec>& basis_rows, int ambient);
    /// Coefficients x with v = x * B, or nullopt when v is outside the span.
    std::optional<RatVec> express(const RatVec& v) const;
};

}  // namespace mtab
