#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mtab {

/// Partition: weakly decreasing positive parts, trailing zeros stripped.
/// Equality ignores trailing zeros by construction.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;                       // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based, 0 beyond
    Partition conjugate() const;
    bool contains(const Partition& mu) const;  // componentwise
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }  // map key order

    std::string to_string() const;             // "3,1"; empty partition -> "0"
    static Partition parse(const std::string& s);
};

/// Lexicographic comparison as infinite sequences padded with zeros.
bool lex_greater(const Partition& a, const Partition& b);
bool lex_greater_eq(const std::vector<int>& a, const std::vector<int>& b);

/// All partitions of r (length <= max_len if given), in lexicographically
/// decreasing order: r=3 -> (3),(2,1),(1,1,1).
std::vector<Partition> enumerate_partitions(int r, std::optional<int> max_len = std::nullopt);

/// All mu with mu subset lambda (every sub-diagram), grouped by nothing, dedup'd.
std::vector<Partition> subpartitions(const Partition& lambda);

/// HS(lambda, n): partitions lambda+ of n containing lambda with
/// lambda+/lambda a horizontal strip (at most one cell per column).
std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int n);

/// All nu with mu <= nu <= lambda, |nu/mu| <= s and |lambda/nu| <= n-s.
std::vector<Partition> intermediate_partitions(const Partition& lambda, const Partition& mu,
                                               int s, int n);

/// Skew shape lambda/mu with mu inside lambda. Cells are (i,j), 0-based,
/// inner.part(i) <= j < outer.part(i).
struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition{}) {}

    int size() const { return outer.size() - inner.size(); }
    int rows() const { return outer.length(); }
    int row_begin(int i) const { return inner.part(i); }
    int row_end(int i) const { return outer.part(i); }
    int row_len(int i) const { return row_end(i) - row_begin(i); }
    int cols() const { return outer.part(0); }
    int col_len(int j) const;  // number of cells in column j
    SkewShape conjugate() const { return {outer.conjugate(), inner.conjugate()}; }
    std::vector<std::pair<int, int>> cells() const;  // row-reading order
    bool operator==(const SkewShape&) const = default;

    std::string to_string() const;  // "3,1/1", or "3,1" when inner is empty
    static SkewShape parse(const std::string& s);
};

/// Weight alpha = (alpha_1..alpha_n), nonnegative, summing to the degree.
struct WeightVector {
    std::vector<int> coords;

    int total() const;
    bool all01() const;      // membership in Lambda(n,r)'
    bool some_ge2() const;   // membership in Lambda(n,r)''
    /// sigma acts by (sigma a)_i = a_{sigma^-1(i)}; sigma maps 1..n -> 1..n.
    WeightVector permuted(const std::vector<int>& sigma) const;
    bool operator==(const WeightVector&) const = default;
    bool operator<(const WeightVector& o) const { return coords < o.coords; }
};

/// Filling of a skew shape with entries from [n] (entries are 1-based).
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;  // entries[i] has shape.row_len(i) values

    int at(int i, int j) const { return entries[i][j - shape.row_begin(i)]; }
    WeightVector weight(int n) const;
    std::vector<int> row_word() const;  // rows concatenated, top to bottom
    bool is_semistandard() const;       // strict along rows, weak down columns
    bool is_co_semistandard() const;    // weak along rows, strict down columns
    bool has_distinct_entries() const;
    Tableau relabeled(const std::vector<int>& sigma) const;  // entry e -> sigma[e]
    Tableau with_entry(int i, int j, int value) const;       // replace cell (i,j)
    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& o) const { return row_word() < o.row_word(); }
};

enum class TableauKind { All, Semistandard, CoSemistandard, DistinctEntries, StandardDistinct };

TableauKind tableau_kind_parse(const std::string& s);
std::string tableau_kind_name(TableauKind k);

/// All tableaux of the requested class with entries from [n], ordered
/// lexicographically by row-reading word.
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, int n, TableauKind kind);

/// f^{lambda/mu}: the number of semistandard tableaux of the conjugate shape
/// with distinct entries from [r], r = |lambda/mu|. Note the rows-strict-convention
/// twist: "semistandard" is strict along rows, so these counts live on the
/// conjugate shape relative to the common convention; the count itself is
/// conjugation-invariant.
long long count_standard(const SkewShape& shape);

}  // namespace mtab
