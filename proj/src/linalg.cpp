#include "mtab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtab {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: size mismatch");
    RatMatrix m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

bool RatMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return q == 0; });
}

Rat RatMatrix::trace() const {
    Rat t = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

std::string RatMatrix::to_csv() const {
    std::string s;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j) s += ',';
            s += rat_str(at(i, j));
        }
        s += '\n';
    }
    return s;
}

RrefResult rref(RatMatrix m) {
    RrefResult res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            std::size_t b = rat_bits(m.at(i, c));
            if (best < 0 || b < best_bits) best = i, best_bits = b;
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j)
            if (m.at(r, j) != 0) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = RatMatrix(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols; ++j) res.mat.at(i, j) = m.at(i, j);
    return res;
}

int rank_of(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int p : r.pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(static_cast<int>(free_cols.size()), m.cols);
    for (int fi = 0; fi < k.rows; ++fi) {
        int f = free_cols[fi];
        k.at(fi, f) = 1;
        for (int i = 0; i < r.rank; ++i) k.at(fi, r.pivots[i]) = -r.mat.at(i, f);
    }
    return k;
}

Rat bareiss_determinant(RatMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: square matrix required");
    int n = m.rows;
    if (n == 0) return Rat(1);
    // Clear denominators row-wise, track the product.
    Rat scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) {
            Int d = m.at(i, j).get_den();
            l = l / gcd(l, d) * d;
        }
        if (l != 1) {
            Rat lr(l);
            for (int j = 0; j < n; ++j) m.at(i, j) *= lr;
            scale /= lr;
        }
    }
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { sw = i; break; }
            if (sw < 0) return Rat(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sw, j));
            sign = -sign;
        }
        Int pk = m.at(k, k).get_num();
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(i, j).get_num() * pk - m.at(i, k).get_num() * m.at(k, j).get_num();
                m.at(i, j) = Rat(v / prev);
            }
        prev = pk;
    }
    Rat det(m.at(n - 1, n - 1));
    if (sign < 0) det = -det;
    return det * scale;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = RatMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = RatMatrix::identity(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots.push_back(i);
    return s;
}

Subspace Subspace::from_spanning(int ambient, const std::vector<RatVec>& rows) {
    RatMatrix m(static_cast<int>(rows.size()), ambient);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != ambient)
            throw std::invalid_argument("from_spanning: row length != ambient");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
    }
    RrefResult r = rref(std::move(m));
    Subspace s;
    s.ambient = ambient;
    s.basis = std::move(r.mat);
    s.pivots = std::move(r.pivots);
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("contains: ambient mismatch");
    RatVec w = v;
    for (int i = 0; i < basis.rows; ++i) {
        const Rat& c = w[pivots[i]];
        if (c == 0) continue;
        Rat f = c;
        for (int j = pivots[i]; j < ambient; ++j)
            if (basis.at(i, j) != 0) w[j] -= f * basis.at(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& q) { return q == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient != other.ambient) throw std::invalid_argument("contains: ambient mismatch");
    for (int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient != o.ambient) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<RatVec> rows;
    rows.reserve(basis.rows + o.basis.rows);
    for (int i = 0; i < basis.rows; ++i) rows.push_back(basis.row(i));
    for (int i = 0; i < o.basis.rows; ++i) rows.push_back(o.basis.row(i));
    return from_spanning(ambient, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient != o.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    // Zassenhaus: kernel of [A; B] pairing. Solve x*A = y*B by stacking.
    int da = basis.rows, db = o.basis.rows;
    if (da == 0 || db == 0) return zero(ambient);
    RatMatrix m(ambient, da + db);  // columns: coefficients; rows: ambient coords
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < ambient; ++j) m.at(j, i) = basis.at(i, j);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < ambient; ++j) m.at(j, da + i) = -o.basis.at(i, j);
    RatMatrix k = kernel_basis(m);  // rows (x | y) with x*A = y*B
    std::vector<RatVec> rows;
    for (int i = 0; i < k.rows; ++i) {
        RatVec v(ambient, Rat(0));
        for (int t = 0; t < da; ++t) {
            if (k.at(i, t) == 0) continue;
            for (int j = 0; j < ambient; ++j)
                if (basis.at(t, j) != 0) v[j] += k.at(i, t) * basis.at(t, j);
        }
        rows.push_back(std::move(v));
    }
    return from_spanning(ambient, rows);
}

int Subspace::quotient_dim(const Subspace& sub) const {
    if (ambient != sub.ambient) throw std::invalid_argument("quotient_dim: ambient mismatch");
    if (!contains(sub)) throw std::invalid_argument("quotient_dim: not a subspace");
    return dim() - sub.dim();
}

std::optional<RatVec> express_in_basis(const RatVec& v, const std::vector<RatVec>& basis) {
    if (basis.empty())
        return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; })
                   ? std::optional<RatVec>(RatVec{})
                   : std::nullopt;
    SolvedBasis sb = SolvedBasis::factor(basis, static_cast<int>(v.size()));
    return sb.express(v);
}

bool RowReducer::add(RatVec v) {
    if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("RowReducer: ambient mismatch");
    for (auto& [p, row] : rows) {
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (int j = p; j < ambient; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    int lead = -1;
    for (int j = 0; j < ambient; ++j)
        if (v[j] != 0) { lead = j; break; }
    if (lead < 0) return false;
    Rat inv = 1 / v[lead];
    for (int j = lead; j < ambient; ++j)
        if (v[j] != 0) v[j] *= inv;
    rows.emplace(lead, std::move(v));
    return true;
}

bool RowReducer::contains(RatVec v) const {
    for (auto& [p, row] : rows) {
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (int j = p; j < ambient; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

Subspace RowReducer::to_subspace() const {
    // Rows are already echelon by pivot; back-eliminate above each pivot.
    std::vector<RatVec> rs;
    std::vector<int> ps;
    for (auto& [p, row] : rows) {
        ps.push_back(p);
        rs.push_back(row);
    }
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t k = i + 1; k < rs.size(); ++k) {
            Rat f = rs[i][ps[k]];
            if (f == 0) continue;
            for (int j = ps[k]; j < ambient; ++j)
                if (rs[k][j] != 0) rs[i][j] -= f * rs[k][j];
        }
    Subspace s;
    s.ambient = ambient;
    s.pivots = std::move(ps);
    s.basis = RatMatrix(static_cast<int>(rs.size()), ambient);
    for (int i = 0; i < s.basis.rows; ++i)
        for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = rs[i][j];
    return s;
}

void SparseVec::add_term(int idx, const Rat& c) {
    if (c != 0) t.emplace_back(idx, c);
}

void SparseVec::finalize() {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rat>> out;
    for (auto& [i, c] : t) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second == 0; }),
              out.end());
    t = std::move(out);
}

RatVec SparseVec::dense(int ambient) const {
    RatVec v(ambient, Rat(0));
    for (auto& [i, c] : t) v[i] = c;
    return v;
}

SparseVec SparseVec::from_dense(const RatVec& v) {
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) s.t.emplace_back(i, v[i]);
    return s;
}

namespace {
// w -= f * row, sparse merge
SparseVec sparse_axpy(const SparseVec& w, const Rat& f, const SparseVec& row) {
    SparseVec out;
    out.t.reserve(w.t.size() + row.t.size());
    std::size_t i = 0, j = 0;
    while (i < w.t.size() || j < row.t.size()) {
        if (j >= row.t.size() || (i < w.t.size() && w.t[i].first < row.t[j].first)) {
            out.t.push_back(w.t[i++]);
        } else if (i >= w.t.size() || row.t[j].first < w.t[i].first) {
            out.t.emplace_back(row.t[j].first, -f * row.t[j].second);
            ++j;
        } else {
            Rat c = w.t[i].second - f * row.t[j].second;
            if (c != 0) out.t.emplace_back(w.t[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return out;
}
}  // namespace

bool SparseReducer::add(SparseVec v) {
    while (!v.t.empty()) {
        int lead = v.t.front().first;
        auto it = rows.find(lead);
        if (it == rows.end()) {
            Rat inv = 1 / v.t.front().second;
            if (inv != 1)
                for (auto& [i, c] : v.t) c *= inv;
            rows.emplace(lead, std::move(v));
            return true;
        }
        v = sparse_axpy(v, v.t.front().second, it->second);
    }
    return false;
}

bool SparseReducer::contains(SparseVec v) const {
    while (!v.t.empty()) {
        auto it = rows.find(v.t.front().first);
        if (it == rows.end()) return false;
        v = sparse_axpy(v, v.t.front().second, it->second);
    }
    return true;
}

std::vector<SparseVec> SparseReducer::rref_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows.size());
    // Reverse pivot order: later pivots are already fully reduced.
    std::vector<const SparseVec*> stack;
    std::map<int, SparseVec> done;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        SparseVec v = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [i, c] : v.t) {
                if (i == it->first) continue;
                auto d = done.find(i);
                if (d != done.end() && c != 0) {
                    v = sparse_axpy(v, c, d->second);
                    changed = true;
                    break;
                }
            }
        }
        done.emplace(it->first, std::move(v));
    }
    for (auto& [p, v] : done) out.push_back(v);
    return out;
}

SolvedBasis SolvedBasis::factor(const std::vector<RatVec>& basis_rows, int ambient) {
    SolvedBasis sb;
    sb.ambient = ambient;
    sb.k = static_cast<int>(basis_rows.size());
    RatMatrix m(sb.k, ambient + sb.k);  // [B | I]
    for (int i = 0; i < sb.k; ++i) {
        for (int j = 0; j < ambient; ++j) m.at(i, j) = basis_rows[i][j];
        m.at(i, ambient + i) = 1;
    }
    // RREF, but only pivot within the first `ambient` columns.
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < ambient && r < sb.k; ++c) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int i = r; i < sb.k; ++i) {
            if (m.at(i, c) == 0) continue;
            std::size_t b = rat_bits(m.at(i, c));
            if (best < 0 || b < best_bits) best = i, best_bits = b;
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = 0; j < m.cols; ++j)
            if (m.at(r, j) != 0) m.at(r, j) *= inv;
        for (int i = 0; i < sb.k; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (r != sb.k) throw std::logic_error("SolvedBasis: dependent basis rows");
    sb.pivots = std::move(pivots);
    sb.reduced = RatMatrix(sb.k, ambient);
    sb.transform = RatMatrix(sb.k, sb.k);
    for (int i = 0; i < sb.k; ++i) {
        for (int j = 0; j < ambient; ++j) sb.reduced.at(i, j) = m.at(i, j);
        for (int j = 0; j < sb.k; ++j) sb.transform.at(i, j) = m.at(i, ambient + j);
    }
    return sb;
}

std::optional<RatVec> SolvedBasis::express(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("express: ambient mismatch");
    RatVec w = v;
    RatVec y(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        const Rat& c = w[pivots[i]];
        if (c == 0) continue;
        y[i] = c;
        Rat f = c;
        for (int j = 0; j < ambient; ++j)
            if (reduced.at(i, j) != 0) w[j] -= f * reduced.at(i, j);
    }
    if (!std::all_of(w.begin(), w.end(), [](const Rat& q) { return q == 0; }))
        return std::nullopt;
    RatVec x(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        if (y[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            if (transform.at(i, j) != 0) x[j] += y[i] * transform.at(i, j);
    }
    return x;
}

}  // namespace mtab
