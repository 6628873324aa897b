#include "mtab/exterior.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mtab {

int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
            merged.push_back(a[i++]);
        } else if (i >= a.size() || b[j] < a[i]) {
            // b[j] jumps over the remaining a-elements
            if ((a.size() - i) % 2 == 1) sign = -sign;
            merged.push_back(b[j++]);
        } else {
            return 0;  // common variable: y^2 = 0
        }
    }
    return sign;
}

ExteriorPolynomial ExteriorPolynomial::variable(int m, int n, int i, int j) {
    ExteriorPolynomial p(m, n);
    p.terms.emplace(std::vector<int>{(i - 1) * n + (j - 1)}, Rat(1));
    return p;
}

ExteriorPolynomial& ExteriorPolynomial::operator+=(const ExteriorPolynomial& o) {
    for (auto& [s, c] : o.terms) {
        auto it = terms.find(s);
        if (it == terms.end()) {
            terms.emplace(s, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

ExteriorPolynomial ExteriorPolynomial::operator*(const ExteriorPolynomial& o) const {
    ExteriorPolynomial r(m, n);
    std::vector<int> merged;
    for (auto& [a, ca] : terms)
        for (auto& [b, cb] : o.terms) {
            int sign = merge_sign(a, b, merged);
            if (sign == 0) continue;
            Rat c = ca * cb;
            if (sign < 0) c = -c;
            auto it = r.terms.find(merged);
            if (it == r.terms.end()) {
                r.terms.emplace(merged, std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

ExteriorPolynomial& ExteriorPolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [s, v] : terms) v *= c;
    return *this;
}

int ExteriorPolynomial::degree() const {
    int d = 0;
    for (auto& [s, c] : terms) d = std::max<int>(d, static_cast<int>(s.size()));
    return d;
}

std::string ExteriorPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [s, c] : terms) {
        if (!out.empty()) out += " + ";
        std::string factors;
        for (int v : s) {
            if (!factors.empty()) factors += "*";
            factors += "y[" + std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) + "]";
        }
        if (factors.empty())
            out += rat_str(c);
        else if (c == 1)
            out += factors;
        else
            out += rat_str(c) + "*" + factors;
    }
    return out;
}

ExteriorPolynomial ExteriorPolynomial::acted(const SubstitutionCols& a,
                                             const SubstitutionCols& b) const {
    ExteriorPolynomial out(m, n);
    for (auto& [s, c] : terms) {
        ExteriorPolynomial prod(m, n);
        prod.terms.emplace(std::vector<int>{}, c);
        for (int v : s) {
            int i = v / n, j = v % n;
            ExteriorPolynomial sub(m, n);
            for (auto& [k, ca] : a.cols[i])
                for (auto& [l, cb] : b.cols[j]) sub.terms[{k * n + l}] += ca * cb;
            prod = prod * sub;
        }
        out += prod;
    }
    return out;
}

ExtDegreeBasis ExtDegreeBasis::make(int m, int n, int r) {
    ExtDegreeBasis b;
    b.m = m;
    b.n = n;
    b.r = r;
    int vars = m * n;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int min_v) {
        if (static_cast<int>(cur.size()) == r) {
            b.index.emplace(cur, static_cast<int>(b.subsets.size()));
            b.subsets.push_back(cur);
            return;
        }
        for (int v = min_v; v < vars; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return b;
}

SparseVec ExtDegreeBasis::coords(const ExteriorPolynomial& p) const {
    SparseVec v;
    for (auto& [s, c] : p.terms) {
        auto it = index.find(s);
        if (it == index.end()) throw std::invalid_argument("ext coords: wrong degree");
        v.t.emplace_back(it->second, c);
    }
    v.finalize();
    return v;
}

}  // namespace mtab
