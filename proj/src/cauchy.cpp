#include "mtab/cauchy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mtab {

using nlohmann::json;

std::vector<SparsePolynomial> ideal_generators(MonoidKind kind, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("ideal_generators: m,n >= 1");
    std::vector<SparsePolynomial> gens;
    auto x = [&](int i, int j) { return SparsePolynomial::variable(m, n, i, j); };
    // same-column products, i <= i' (i = i' allowed: squares)
    if (kind == MonoidKind::IS || kind == MonoidKind::PT || kind == MonoidKind::T) {
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i)
                for (int ip = i; ip <= m; ++ip) gens.push_back(x(i, j) * x(ip, j));
    }
    if (kind == MonoidKind::IS) {
        // same-row products; squares appear again here, matching the
        // definition's index ranges (dedup happens in the span)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                for (int jp = j; jp <= n; ++jp) gens.push_back(x(i, j) * x(i, jp));
    }
    if (kind == MonoidKind::T) {
        for (int j = 1; j <= n; ++j) {
            SparsePolynomial s(m, n);
            for (int i = 1; i <= m; ++i) s += x(i, j);
            gens.push_back(s);
        }
    }
    if (kind == MonoidKind::Sym)
        throw std::invalid_argument("ideal_generators: kinds are IS, PT, T");
    return gens;
}

namespace {

/// Spanning rows of J_r inside the degree-r component: every generator times
/// every monomial of the complementary degree.
void feed_ideal_component(SparseReducer& red, const std::vector<SparsePolynomial>& gens,
                          const DegreeBasis& basis) {
    for (auto& g : gens) {
        int gd = g.degree();
        if (gd > basis.r) continue;
        DegreeBasis lower = DegreeBasis::make(basis.m, basis.n, basis.r - gd);
        for (auto& mono : lower.mons) {
            SparsePolynomial p(basis.m, basis.n);
            p.terms.emplace(mono, Rat(1));
            red.add(basis.coords(p * g));
        }
    }
}

}  // namespace

long long schur_dim(const Partition& lambda, int m) {
    if (m < 1) return lambda.length() == 0 ? 1 : 0;
    return static_cast<long long>(
        enumerate_tableaux(SkewShape(lambda), m, TableauKind::Semistandard).size());
}

long long standard_schur_dim(const Partition& lambda, int m) {
    if (m <= 1) return lambda.length() == 0 ? 1 : 0;
    return static_cast<long long>(
        enumerate_tableaux(SkewShape(lambda), m - 1, TableauKind::Semistandard).size());
}

GradedQuotient graded_quotient_dim(MonoidKind kind, int m, int n, int r) {
    if (r < 0) throw std::invalid_argument("graded_quotient_dim: r >= 0");
    GradedQuotient q;
    DegreeBasis basis = DegreeBasis::make(m, n, r);
    SparseReducer red;
    feed_ideal_component(red, ideal_generators(kind, m, n), basis);
    long long ideal_dim = red.rank();
    q.dim = basis.dim() - ideal_dim;

    switch (kind) {
        case MonoidKind::IS: q.closed_form = binomial(m, r) * binomial(n, r) * factorial(r); break;
        case MonoidKind::PT: {
            long long p = 1;
            for (int t = 0; t < r; ++t) p *= m;
            q.closed_form = binomial(n, r) * p;
            break;
        }
        case MonoidKind::T: {
            long long p = 1;
            for (int t = 0; t < r; ++t) p *= (m - 1);
            q.closed_form = binomial(n, r) * p;
            break;
        }
        default: throw std::invalid_argument("graded_quotient_dim: kinds are IS, PT, T");
    }
    if (q.dim != q.closed_form)
        throw std::logic_error("graded quotient dimension disagrees with the closed form");

    // Representative monomials: IS -> strictly increasing rows, distinct
    // columns; PT -> arbitrary rows, strictly increasing columns;
    // T -> rows from [m-1], strictly increasing columns.
    std::vector<int> rows(r), cols(r);
    std::function<void(int)> rec = [&](int t) {
        if (t == r) {
            Monomial mo(m * n);
            for (int k = 0; k < r; ++k) ++mo.e[(rows[k] - 1) * n + (cols[k] - 1)];
            q.basis.push_back(mo);
            return;
        }
        int row_lo = 1, col_lo = 1;
        if (kind == MonoidKind::IS && t > 0) row_lo = rows[t - 1] + 1;
        if ((kind == MonoidKind::PT || kind == MonoidKind::T) && t > 0) col_lo = cols[t - 1] + 1;
        int row_hi = kind == MonoidKind::T ? m - 1 : m;
        for (int i = row_lo; i <= row_hi; ++i)
            for (int j = col_lo; j <= n; ++j) {
                if (kind == MonoidKind::IS) {
                    bool used = false;
                    for (int k = 0; k < t; ++k)
                        if (cols[k] == j) used = true;
                    if (used) continue;
                }
                rows[t] = i;
                cols[t] = j;
                rec(t + 1);
            }
    };
    if (r == 0) {
        q.basis.push_back(Monomial(m * n));
    } else {
        rec(0);
    }
    std::sort(q.basis.begin(), q.basis.end());
    q.basis.erase(std::unique(q.basis.begin(), q.basis.end()), q.basis.end());
    if (static_cast<long long>(q.basis.size()) != q.dim)
        throw std::logic_error("representative monomial count disagrees with the quotient dim");
    // Independence of the representatives modulo the ideal component.
    SparseReducer full = std::move(red);
    for (auto& mo : q.basis) {
        SparseVec v;
        v.t.emplace_back(basis.index.at(mo), Rat(1));
        if (!full.add(std::move(v)))
            throw std::logic_error("representative monomial dependent modulo the ideal");
    }
    return q;
}

namespace {

std::vector<std::vector<int>> strict_rows(int len, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len);
    std::function<void(int, int)> rec = [&](int t, int lo) {
        if (t == len) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[t] = v;
            rec(t + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

}  // namespace

std::vector<Tableau> row_strict_fillings(const Partition& lambda, int n) {
    SkewShape shape{lambda};
    std::vector<std::vector<std::vector<int>>> per_row;
    for (int i = 0; i < shape.rows(); ++i) per_row.push_back(strict_rows(shape.row_len(i), n));
    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.entries.resize(shape.rows());
    std::function<void(int)> rec = [&](int i) {
        if (i == shape.rows()) {
            out.push_back(t);
            return;
        }
        for (auto& row : per_row[i]) {
            t.entries[i] = row;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

SparsePolynomial bitableau_minor(const Tableau& S, const Tableau& T, int m, int n) {
    if (S.shape != T.shape) throw std::invalid_argument("bitableau_minor: shape mismatch");
    if (S.shape.inner.length() != 0)
        throw std::invalid_argument("bitableau_minor: straight shapes only");
    SparsePolynomial prod = SparsePolynomial::constant(m, n, Rat(1));
    for (int p = 0; p < S.shape.rows(); ++p) {
        int k = S.shape.row_len(p);
        // det over permutations of the column entries
        SparsePolynomial det(m, n);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inv = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b]) ++inv;
            SparsePolynomial term = SparsePolynomial::constant(m, n, Rat(inv % 2 ? -1 : 1));
            for (int u = 0; u < k; ++u)
                term = term * SparsePolynomial::variable(m, n, S.entries[p][u],
                                                         T.entries[p][perm[u]]);
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        prod = prod * det;
    }
    return prod;
}

Report cauchy_filtration_check(int m, int n, int r) {
    Report rep;
    rep.claim = "bitableau chain of k[x]_r with Schur x Schur quotients";
    rep.parameters = {{"m", m}, {"n", n}, {"r", r}};
    DegreeBasis basis = DegreeBasis::make(m, n, r);
    SparseReducer red;
    auto lambdas = enumerate_partitions(r);  // decreasing lexicographic
    json steps = json::array();
    long long prev = 0;
    bool ok = true;
    for (auto& lambda : lambdas) {
        for (auto& S : row_strict_fillings(lambda, m))
            for (auto& T : row_strict_fillings(lambda, n)) {
                SparsePolynomial p = bitableau_minor(S, T, m, n);
                if (!p.is_zero()) red.add(basis.coords(p));
            }
        long long dim = red.rank();
        long long expected = schur_dim(lambda, m) * schur_dim(lambda, n);
        if (dim - prev != expected) ok = false;
        steps.push_back({{"lambda", lambda.to_string()},
                         {"chain_dim", dim},
                         {"quotient_dim", dim - prev},
                         {"expected", expected}});
        prev = dim;
    }
    if (prev != basis.dim()) ok = false;  // M_(1^r) = the whole degree component
    rep.data = {{"steps", steps}, {"total", prev}, {"ambient", basis.dim()}};
    rep.status = ok ? Report::Status::Pass : Report::Status::Fail;
    return rep;
}

namespace {

struct QuotientTracer {
    // coset data for tracing on span(all rows)/span(sub rows)
    SolvedBasis solver;
    int sub_dim = 0;
    std::vector<RatVec> reps;  // coset representative rows

    static QuotientTracer make(const Subspace& sub, const Subspace& whole) {
        QuotientTracer qt;
        qt.sub_dim = sub.dim();
        std::vector<RatVec> rows;
        for (int i = 0; i < sub.dim(); ++i) rows.push_back(sub.basis.row(i));
        // rows of the big space whose pivots are new extend the basis
        std::vector<char> is_sub_pivot(whole.ambient, 0);
        for (int p : sub.pivots) is_sub_pivot[p] = 1;
        for (int i = 0; i < whole.dim(); ++i)
            if (!is_sub_pivot[whole.pivots[i]]) {
                rows.push_back(whole.basis.row(i));
                qt.reps.push_back(whole.basis.row(i));
            }
        qt.solver = SolvedBasis::factor(rows, whole.ambient);
        return qt;
    }

    int q() const { return static_cast<int>(reps.size()); }

    /// Trace of a linear map on the quotient, given its action on ambient
    /// coordinate vectors.
    Rat trace(const std::function<RatVec(const RatVec&)>& apply) const {
        Rat tr = 0;
        for (int i = 0; i < q(); ++i) {
            auto sol = solver.express(apply(reps[i]));
            if (!sol) throw std::logic_error("quotient trace: image left the subspace chain");
            tr += (*sol)[sub_dim + i];
        }
        return tr;
    }
};

}  // namespace

Report cauchy_quotient_check(MonoidKind kind, int m, int n, int r, bool structural) {
    Report rep;
    rep.claim = "graded quotient of k[x] by J has the Cauchy-type chain";
    rep.parameters = {{"kind", monoid_kind_name(kind)},
                      {"m", m},
                      {"n", n},
                      {"r", r},
                      {"structural", structural}};
    DegreeBasis basis = DegreeBasis::make(m, n, r);
    auto gens = ideal_generators(kind, m, n);
    SparseReducer red;
    feed_ideal_component(red, gens, basis);
    long long dimJ = red.rank();

    auto lambdas = enumerate_partitions(r);
    bool ok = true;
    json steps = json::array();
    long long prev = dimJ;
    std::vector<Subspace> chain;  // (M_lambda + J) as subspaces, increasing
    for (auto& lambda : lambdas) {
        for (auto& S : row_strict_fillings(lambda, m))
            for (auto& T : row_strict_fillings(lambda, n)) {
                SparsePolynomial p = bitableau_minor(S, T, m, n);
                if (!p.is_zero()) red.add(basis.coords(p));
            }
        long long dim = red.rank();
        Partition lc = lambda.conjugate();
        long long right = r > n ? 0 : binomial(n, r) * count_standard(SkewShape(lambda));
        // count_standard(lambda) = f^lambda = f^{lambda'}, the factor on the
        // n side is dim R(n)^{lambda'} = binom(n,r) f^{lambda'}.
        long long left = 0;
        switch (kind) {
            case MonoidKind::IS: left = r > m ? 0 : binomial(m, r) * count_standard(SkewShape(lc)); break;
            case MonoidKind::PT: left = schur_dim(lambda, m); break;
            case MonoidKind::T: left = standard_schur_dim(lambda, m); break;
            default: throw std::invalid_argument("cauchy_quotient_check: kinds are IS, PT, T");
        }
        long long expected = left * right;
        if (dim - prev != expected) ok = false;
        steps.push_back({{"lambda", lambda.to_string()},
                         {"quotient_dim", dim - prev},
                         {"expected", expected}});
        prev = dim;
        if (structural) {
            std::vector<SparseVec> rows = red.rref_rows();
            std::vector<RatVec> dense;
            for (auto& v : rows) dense.push_back(v.dense(basis.dim()));
            chain.push_back(Subspace::from_spanning(basis.dim(), dense));
        }
    }
    if (prev - dimJ != graded_quotient_dim(kind, m, n, r).dim) ok = false;
    rep.data["steps"] = steps;
    rep.data["dim_J_r"] = dimJ;

    if (structural && ok) {
        // Invariance of every chain member under the acting pair's
        // generators, J included.
        std::vector<std::pair<SubstitutionCols, SubstitutionCols>> pairs;
        auto add_pair = [&](const SubstitutionCols& a, const SubstitutionCols& b) {
            pairs.emplace_back(a, b);
        };
        std::vector<SubstitutionCols> lefts, rights;
        if (kind == MonoidKind::IS) {
            for (auto& A : monoid_generators(MonoidKind::IS, m))
                lefts.push_back(SubstitutionCols::from_partial(A));
        } else if (kind == MonoidKind::PT) {
            for (auto& s : coxeter_generators(m))
                lefts.push_back(SubstitutionCols::from_permutation(s));
            RatMatrix diag = RatMatrix::identity(m);
            diag.at(0, 0) = 2;
            lefts.push_back(SubstitutionCols::from_matrix(diag));
            if (m >= 2) {
                RatMatrix trans = RatMatrix::identity(m);
                trans.at(0, 1) = 1;
                lefts.push_back(SubstitutionCols::from_matrix(trans));
            }
        } else {
            for (auto& s : coxeter_generators(m))
                lefts.push_back(SubstitutionCols::from_permutation(s));
        }
        for (auto& B : monoid_generators(kind == MonoidKind::IS ? MonoidKind::IS
                                         : kind == MonoidKind::PT ? MonoidKind::PT
                                                                  : MonoidKind::T,
                                         n))
            rights.push_back(SubstitutionCols::from_partial(B));
        for (auto& a : lefts)
            for (auto& b : rights) add_pair(a, b);

        auto act_vec = [&](const SubstitutionCols& a, const SubstitutionCols& b,
                           const RatVec& v) {
            SparsePolynomial p(m, n);
            for (int i = 0; i < basis.dim(); ++i)
                if (v[i] != 0) p.terms.emplace(basis.mons[i], v[i]);
            return basis.coords(p.acted(a, b)).dense(basis.dim());
        };

        bool inv_ok = true;
        // J itself first
        SparseReducer jred;
        feed_ideal_component(jred, gens, basis);
        std::vector<RatVec> jrows;
        for (auto& v : jred.rref_rows()) jrows.push_back(v.dense(basis.dim()));
        Subspace J = Subspace::from_spanning(basis.dim(), jrows);
        std::vector<Subspace> full_chain;
        full_chain.push_back(J);
        for (auto& c : chain) full_chain.push_back(c);
        for (auto& sp : full_chain)
            for (auto& [a, b] : pairs)
                for (int i = 0; i < sp.dim() && inv_ok; ++i)
                    if (!sp.contains(act_vec(a, b, sp.basis.row(i)))) inv_ok = false;
        rep.data["chain_invariant"] = inv_ok;
        ok = ok && inv_ok;

        // Character comparison on S_m x S_n class representatives.
        bool char_ok = true;
        json chars = json::array();
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
            const Partition& lambda = lambdas[k];
            const Subspace& sub = k == 0 ? J : full_chain[k];
            const Subspace& whole = full_chain[k + 1];
            if (whole.dim() == sub.dim()) continue;
            QuotientTracer qt = QuotientTracer::make(sub, whole);
            Partition lc = lambda.conjugate();

            ClassFunction left_chi, right_chi;
            MonoidModule Rn = build_R_module(MonoidKind::Sym, n, SkewShape(lc), true);
            right_chi = module_character(Rn);
            if (kind == MonoidKind::IS) {
                MonoidModule Rm = build_R_module(MonoidKind::Sym, m, SkewShape(lc), true);
                left_chi = module_character(Rm);
            } else if (kind == MonoidKind::PT) {
                auto L = cached_schur_module(SkewShape(lambda), m);
                left_chi = class_function_of(
                    m, [&](const std::vector<int>& s) { return L->act(s); });
            } else {
                StandardSchurModule LU = build_standard_schur_module(lambda, m);
                left_chi = class_function_of(
                    m, [&](const std::vector<int>& s) { return LU.act(s); });
            }
            for (auto& rho_m : enumerate_partitions(m))
                for (auto& rho_n : enumerate_partitions(n)) {
                    auto sa = SubstitutionCols::from_permutation(
                        cycle_type_representative(rho_m, m));
                    auto sb = SubstitutionCols::from_permutation(
                        cycle_type_representative(rho_n, n));
                    Rat tr = qt.trace([&](const RatVec& v) { return act_vec(sa, sb, v); });
                    Rat expect = left_chi.values.at(rho_m) * right_chi.values.at(rho_n);
                    if (tr != expect) char_ok = false;
                }
            chars.push_back({{"lambda", lambda.to_string()}, {"ok", char_ok}});
        }
        rep.data["character_match"] = char_ok;
        ok = ok && char_ok;
    }
    rep.status = ok ? Report::Status::Pass : Report::Status::Fail;
    return rep;
}

Report replacement_sum_check(int m, int n, const Partition& lambda, int samples,
                        unsigned long long seed) {
    Report rep;
    rep.claim = "row replacement sums of bitableaux lie in J(T)";
    rep.parameters = {{"m", m},
                      {"n", n},
                      {"lambda", lambda.to_string()},
                      {"samples", samples},
                      {"seed", seed}};
    int r = lambda.size();
    DegreeBasis basis = DegreeBasis::make(m, n, r);
    SparseReducer red;
    feed_ideal_component(red, ideal_generators(MonoidKind::T, m, n), basis);

    std::mt19937_64 rng(seed);
    SkewShape shape{lambda};
    auto cells = shape.cells();
    std::uniform_int_distribution<int> rm(1, m), rn(1, n),
        rc(0, static_cast<int>(cells.size()) - 1);
    bool ok = true;
    for (int t = 0; t < samples && ok; ++t) {
        Tableau S, T;
        S.shape = T.shape = shape;
        S.entries.resize(shape.rows());
        T.entries.resize(shape.rows());
        for (int i = 0; i < shape.rows(); ++i) {
            S.entries[i].resize(shape.row_len(i));
            T.entries[i].resize(shape.row_len(i));
            for (int j = 0; j < shape.row_len(i); ++j) {
                S.entries[i][j] = rm(rng);
                T.entries[i][j] = rn(rng);
            }
        }
        auto [ci, cj] = cells[rc(rng)];
        SparsePolynomial sum(m, n);
        for (int u = 1; u <= m; ++u)
            sum += bitableau_minor(S.with_entry(ci, cj, u), T, m, n);
        if (!sum.is_zero() && !red.contains(basis.coords(sum))) ok = false;
    }
    rep.status = ok ? Report::Status::Pass : Report::Status::Fail;
    return rep;
}

}  // namespace mtab
