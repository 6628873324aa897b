#include "mtab/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mtab {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) s |= 1u << i;
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(r.e[i] + o.e[i]);
    return r;
}

SparsePolynomial SparsePolynomial::variable(int m, int n, int i, int j) {
    SparsePolynomial p(m, n);
    Monomial mo(m * n);
    mo.e[(i - 1) * n + (j - 1)] = 1;
    p.terms.emplace(std::move(mo), Rat(1));
    return p;
}

SparsePolynomial SparsePolynomial::constant(int m, int n, const Rat& c) {
    SparsePolynomial p(m, n);
    if (c != 0) p.terms.emplace(Monomial(m * n), c);
    return p;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (auto& [mo, c] : o.terms) {
        auto it = terms.find(mo);
        if (it == terms.end()) {
            terms.emplace(mo, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    for (auto& [mo, c] : o.terms) {
        auto it = terms.find(mo);
        if (it == terms.end()) {
            terms.emplace(mo, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r(m, n);
    for (auto& [a, ca] : terms)
        for (auto& [b, cb] : o.terms) {
            Monomial mo = a * b;
            Rat c = ca * cb;
            auto it = r.terms.find(mo);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(mo), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [mo, v] : terms) v *= c;
    return *this;
}

int SparsePolynomial::degree() const {
    int d = 0;
    for (auto& [mo, c] : terms) d = std::max(d, mo.degree());
    return d;
}

SparsePolynomial SparsePolynomial::homogeneous_component(int d) const {
    SparsePolynomial r(m, n);
    for (auto& [mo, c] : terms)
        if (mo.degree() == d) r.terms.emplace(mo, c);
    return r;
}

std::string SparsePolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    // decreasing lexicographic order
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [mo, c] = *it;
        if (!s.empty()) s += " + ";
        std::string factors;
        for (int v = 0; v < static_cast<int>(mo.e.size()); ++v)
            for (int k = 0; k < mo.e[v]; ++k) {
                if (!factors.empty()) factors += "*";
                factors += "x[" + std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) + "]";
            }
        if (factors.empty())
            s += rat_str(c);
        else if (c == 1)
            s += factors;
        else
            s += rat_str(c) + "*" + factors;
    }
    return s;
}

SparsePolynomial SparsePolynomial::acted(const SubstitutionCols& a,
                                         const SubstitutionCols& b) const {
    SparsePolynomial out(m, n);
    for (auto& [mo, c] : terms) {
        SparsePolynomial prod = constant(m, n, c);
        for (int v = 0; v < static_cast<int>(mo.e.size()); ++v) {
            if (!mo.e[v]) continue;
            int i = v / n, j = v % n;
            SparsePolynomial sub(m, n);
            for (auto& [k, ca] : a.cols[i])
                for (auto& [l, cb] : b.cols[j]) {
                    Monomial x(m * n);
                    x.e[k * n + l] = 1;
                    sub.terms[x] += ca * cb;
                }
            for (int t = 0; t < mo.e[v]; ++t) prod = prod * sub;
        }
        out += prod;
    }
    return out;
}

long long monomial_count(int vars, int degree) { return binomial(vars + degree - 1, degree); }

DegreeBasis DegreeBasis::make(int m, int n, int r) {
    DegreeBasis b;
    b.m = m;
    b.n = n;
    b.r = r;
    int vars = m * n;
    Monomial cur(vars);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == vars - 1) {
            cur.e[v] = static_cast<std::uint8_t>(left);
            b.mons.push_back(cur);
            cur.e[v] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {  // larger first-variable exponent first
            cur.e[v] = static_cast<std::uint8_t>(k);
            rec(v + 1, left - k);
        }
        cur.e[v] = 0;
    };
    if (vars == 0) {
        if (r == 0) b.mons.push_back(Monomial(0));
    } else {
        rec(0, r);
    }
    for (int i = 0; i < static_cast<int>(b.mons.size()); ++i) b.index.emplace(b.mons[i], i);
    return b;
}

SparseVec DegreeBasis::coords(const SparsePolynomial& p) const {
    SparseVec v;
    for (auto& [mo, c] : p.terms) {
        auto it = index.find(mo);
        if (it == index.end()) throw std::invalid_argument("coords: monomial of wrong degree");
        v.t.emplace_back(it->second, c);
    }
    v.finalize();
    return v;
}

}  // namespace mtab
