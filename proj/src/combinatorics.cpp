#include "mtab/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mtab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c(part(0), 0);
    for (int j = 0; j < part(0); ++j)
        for (int i = 0; i < length(); ++i)
            if (parts[i] > j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts[i] > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> p;
    if (s.empty() || s == "0") return Partition{};
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad partition at position " +
                                        std::to_string(s.find(tok)) + " in '" + s + "'");
        if (v == 0) continue;  // tolerate explicit zeros
        p.push_back(v);
    }
    return Partition(std::move(p));
}

bool lex_greater_eq(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x > y;
    }
    return true;
}

bool lex_greater(const Partition& a, const Partition& b) {
    return a != b && lex_greater_eq(a.parts, b.parts);
}

namespace {
void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int r, std::optional<int> max_len) {
    if (r < 0) throw std::invalid_argument("enumerate_partitions: r must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(r, r, max_len.value_or(r == 0 ? 0 : r), cur, out);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        if (row == lambda.length()) {
            out.push_back(Partition(std::vector<int>(cur)));
            return;
        }
        for (int v = std::min(prev, lambda.parts[row]); v >= 0; --v) {
            if (v > 0) cur.push_back(v);
            rec(row + 1, v);
            if (v > 0) cur.pop_back();
            if (v == 0) break;  // later rows are forced to zero as well
        }
    };
    rec(0, lambda.part(0));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int n) {
    if (lambda.size() > n)
        throw std::invalid_argument("horizontal_strip_extensions: |lambda| > n");
    std::vector<Partition> out;
    for (const Partition& lp : enumerate_partitions(n)) {
        if (!lp.contains(lambda)) continue;
        bool strip = true;
        for (int i = 0; i + 1 <= lp.length(); ++i)
            if (lp.part(i + 1) > lambda.part(i)) { strip = false; break; }
        if (strip) out.push_back(lp);
    }
    return out;
}

std::vector<Partition> intermediate_partitions(const Partition& lambda, const Partition& mu,
                                               int s, int n) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("intermediate_partitions: mu not inside lambda");
    std::vector<Partition> out;
    for (const Partition& nu : subpartitions(lambda)) {
        if (!nu.contains(mu)) continue;
        int up = nu.size() - mu.size();
        int down = lambda.size() - nu.size();
        if (up <= s && down <= n - s) out.push_back(nu);
    }
    return out;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape: inner not inside outer");
}

int SkewShape::col_len(int j) const {
    int c = 0;
    for (int i = 0; i < rows(); ++i)
        if (row_begin(i) <= j && j < row_end(i)) ++c;
    return c;
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> cs;
    for (int i = 0; i < rows(); ++i)
        for (int j = row_begin(i); j < row_end(i); ++j) cs.emplace_back(i, j);
    return cs;
}

std::string SkewShape::to_string() const {
    if (inner.length() == 0) return outer.to_string();
    return outer.to_string() + "/" + inner.to_string();
}

SkewShape SkewShape::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(s));
    return SkewShape(Partition::parse(s.substr(0, slash)), Partition::parse(s.substr(slash + 1)));
}

int WeightVector::total() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool WeightVector::all01() const {
    return std::all_of(coords.begin(), coords.end(), [](int a) { return a == 0 || a == 1; });
}

bool WeightVector::some_ge2() const {
    return std::any_of(coords.begin(), coords.end(), [](int a) { return a >= 2; });
}

WeightVector WeightVector::permuted(const std::vector<int>& sigma) const {
    // (sigma a)_i = a_{sigma^-1(i)}  <=>  result[sigma(j)] = coords[j]
    WeightVector w;
    w.coords.assign(coords.size(), 0);
    for (std::size_t j = 0; j < coords.size(); ++j)
        w.coords[sigma[j] - 1] = coords[j];
    return w;
}

WeightVector Tableau::weight(int n) const {
    WeightVector w;
    w.coords.assign(n, 0);
    for (auto& row : entries)
        for (int e : row) {
            if (e < 1 || e > n) throw std::invalid_argument("tableau entry out of [n]");
            ++w.coords[e - 1];
        }
    return w;
}

std::vector<int> Tableau::row_word() const {
    std::vector<int> w;
    for (auto& row : entries) w.insert(w.end(), row.begin(), row.end());
    return w;
}

bool Tableau::is_semistandard() const {
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) {
            if (j > shape.row_begin(i) && at(i, j - 1) >= at(i, j)) return false;
            if (i > 0 && shape.row_begin(i - 1) <= j && j < shape.row_end(i - 1) &&
                at(i - 1, j) > at(i, j))
                return false;
        }
    return true;
}

bool Tableau::is_co_semistandard() const {
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) {
            if (j > shape.row_begin(i) && at(i, j - 1) > at(i, j)) return false;
            if (i > 0 && shape.row_begin(i - 1) <= j && j < shape.row_end(i - 1) &&
                at(i - 1, j) >= at(i, j))
                return false;
        }
    return true;
}

bool Tableau::has_distinct_entries() const {
    std::set<int> seen;
    for (auto& row : entries)
        for (int e : row)
            if (!seen.insert(e).second) return false;
    return true;
}

Tableau Tableau::relabeled(const std::vector<int>& sigma) const {
    Tableau t = *this;
    for (auto& row : t.entries)
        for (int& e : row) e = sigma[e - 1];
    return t;
}

Tableau Tableau::with_entry(int i, int j, int value) const {
    Tableau t = *this;
    t.entries[i][j - shape.row_begin(i)] = value;
    return t;
}

TableauKind tableau_kind_parse(const std::string& s) {
    if (s == "all") return TableauKind::All;
    if (s == "semistandard") return TableauKind::Semistandard;
    if (s == "co_semistandard") return TableauKind::CoSemistandard;
    if (s == "distinct_entries") return TableauKind::DistinctEntries;
    if (s == "standard_distinct") return TableauKind::StandardDistinct;
    throw std::invalid_argument("unknown tableau kind: " + s);
}

std::string tableau_kind_name(TableauKind k) {
    switch (k) {
        case TableauKind::All: return "all";
        case TableauKind::Semistandard: return "semistandard";
        case TableauKind::CoSemistandard: return "co_semistandard";
        case TableauKind::DistinctEntries: return "distinct_entries";
        case TableauKind::StandardDistinct: return "standard_distinct";
    }
    return "?";
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, int n, TableauKind kind) {
    if (n < 1) throw std::invalid_argument("enumerate_tableaux: n must be >= 1");
    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.entries.resize(shape.rows());
    for (int i = 0; i < shape.rows(); ++i) t.entries[i].assign(shape.row_len(i), 0);
    auto cells = shape.cells();
    std::vector<char> used(n + 1, 0);
    bool strict_row = kind == TableauKind::Semistandard || kind == TableauKind::StandardDistinct;
    bool weak_row = kind == TableauKind::CoSemistandard;
    bool weak_col = kind == TableauKind::Semistandard || kind == TableauKind::StandardDistinct;
    bool strict_col = kind == TableauKind::CoSemistandard;
    bool distinct =
        kind == TableauKind::DistinctEntries || kind == TableauKind::StandardDistinct;

    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[c];
        for (int v = 1; v <= n; ++v) {
            if (distinct && used[v]) continue;
            if (j > shape.row_begin(i)) {
                int left = t.at(i, j - 1);
                if (strict_row && left >= v) continue;
                if (weak_row && left > v) continue;
            }
            if (i > 0 && shape.row_begin(i - 1) <= j && j < shape.row_end(i - 1)) {
                int up = t.at(i - 1, j);
                if (weak_col && up > v) continue;
                if (strict_col && up >= v) continue;
            }
            t.entries[i][j - shape.row_begin(i)] = v;
            if (distinct) used[v] = 1;
            rec(c + 1);
            if (distinct) used[v] = 0;
        }
    };
    rec(0);
    return out;
}

long long count_standard(const SkewShape& shape) {
    int r = shape.size();
    if (r == 0) return 1;
    return static_cast<long long>(
        enumerate_tableaux(shape.conjugate(), r, TableauKind::StandardDistinct).size());
}

}  // namespace mtab
