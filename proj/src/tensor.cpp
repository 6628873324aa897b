#include "mtab/tensor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mtab {

TensorFactor TensorFactor::make(FactorKind kind, int n, int degree) {
    TensorFactor f;
    f.kind = kind;
    f.n = n;
    f.degree = degree;
    std::vector<int> cur;
    bool strict = kind == FactorKind::Exterior;
    std::function<void(int)> rec = [&](int min_v) {
        if (static_cast<int>(cur.size()) == degree) {
            f.index.emplace(cur, static_cast<int>(f.labels.size()));
            f.labels.push_back(cur);
            return;
        }
        for (int v = min_v; v <= n; ++v) {
            cur.push_back(v);
            rec(strict ? v + 1 : v);
            cur.pop_back();
        }
    };
    rec(1);
    return f;
}

std::pair<int, int> TensorFactor::normalize(std::vector<int> word) const {
    int sign = 1;
    if (kind == FactorKind::Exterior) {
        // insertion sort with parity
        for (std::size_t i = 1; i < word.size(); ++i)
            for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
                std::swap(word[j - 1], word[j]);
                sign = -sign;
            }
        for (std::size_t i = 1; i < word.size(); ++i)
            if (word[i - 1] == word[i]) return {-1, 0};
    } else {
        std::sort(word.begin(), word.end());
    }
    auto it = index.find(word);
    if (it == index.end()) throw std::logic_error("tensor factor: label not found");
    return {it->second, sign};
}

SubstitutionCols SubstitutionCols::from_matrix(const RatMatrix& g) {
    SubstitutionCols s;
    s.n = g.cols;
    s.cols.resize(g.cols);
    for (int j = 0; j < g.cols; ++j)
        for (int i = 0; i < g.rows; ++i)
            if (g.at(i, j) != 0) s.cols[j].emplace_back(i, g.at(i, j));
    return s;
}

SubstitutionCols SubstitutionCols::from_partial(const PartialTransformation& p) {
    SubstitutionCols s;
    s.n = p.n;
    s.cols.resize(p.n);
    for (int j = 1; j <= p.n; ++j)
        if (p.defined(j)) s.cols[j - 1].emplace_back(p(j) - 1, Rat(1));
    return s;
}

SubstitutionCols SubstitutionCols::from_permutation(const std::vector<int>& sigma) {
    SubstitutionCols s;
    s.n = static_cast<int>(sigma.size());
    s.cols.resize(s.n);
    for (int j = 0; j < s.n; ++j) s.cols[j].emplace_back(sigma[j] - 1, Rat(1));
    return s;
}

long long MultigradedSpace::dim() const {
    long long d = 1;
    for (auto& f : factors) d *= f.dim();
    return d;
}

int MultigradedSpace::index_of(const std::vector<int>& fl) const {
    long long idx = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * factors[f].dim() + fl[f];
    return static_cast<int>(idx);
}

std::vector<int> MultigradedSpace::unpack(int index) const {
    std::vector<int> fl(factors.size(), 0);
    for (std::size_t f = factors.size(); f-- > 0;) {
        fl[f] = index % factors[f].dim();
        index /= factors[f].dim();
    }
    return fl;
}

WeightVector MultigradedSpace::weight_of(int index, int n) const {
    WeightVector w;
    w.coords.assign(n, 0);
    auto fl = unpack(index);
    for (std::size_t f = 0; f < factors.size(); ++f)
        for (int v : factors[f].labels[fl[f]]) ++w.coords[v - 1];
    return w;
}

std::string MultigradedSpace::describe() const {
    std::string s;
    for (auto& f : factors) {
        if (!s.empty()) s += " (x) ";
        switch (f.kind) {
            case FactorKind::Exterior: s += "Ext^"; break;
            case FactorKind::Symmetric: s += "Sym_"; break;
            case FactorKind::DividedPower: s += "D_"; break;
        }
        s += std::to_string(f.degree) + "(V_" + std::to_string(f.n) + ")";
    }
    return s.empty() ? "k" : s;
}

SubstitutionAction::SubstitutionAction(const MultigradedSpace& s, SubstitutionCols c)
    : space(&s), cols(std::move(c)) {
    cache.resize(space->factors.size());
}

const std::vector<std::pair<int, Rat>>& SubstitutionAction::factor_image(int f,
                                                                         int label_idx) const {
    auto& slot = cache[f];
    auto it = slot.find(label_idx);
    if (it != slot.end()) return it->second;

    const TensorFactor& fac = space->factors[f];
    const std::vector<int>& label = fac.labels[label_idx];
    std::map<std::vector<int>, Rat> acc;  // canonical label -> coefficient

    if (fac.kind == FactorKind::DividedPower) {
        // Monomial substitutions only: each letter maps to one letter (or 0).
        std::vector<int> img;
        bool zero = false;
        for (int v : label) {
            auto& col = cols.cols[v - 1];
            if (col.empty()) { zero = true; break; }
            if (col.size() != 1 || col[0].second != 1)
                throw std::logic_error("divided powers support monomial substitutions only");
            img.push_back(col[0].first + 1);
        }
        if (!zero) {
            std::sort(img.begin(), img.end());
            acc.emplace(std::move(img), Rat(1));
        }
    } else {
        // Expand the product of substituted letters.
        std::vector<int> word(label.size(), 0);
        std::function<void(std::size_t, Rat)> rec = [&](std::size_t pos, Rat coeff) {
            if (pos == label.size()) {
                std::vector<int> w = word;
                int sign = 1;
                if (fac.kind == FactorKind::Exterior) {
                    for (std::size_t i = 1; i < w.size(); ++i)
                        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
                            std::swap(w[j - 1], w[j]);
                            sign = -sign;
                        }
                    for (std::size_t i = 1; i < w.size(); ++i)
                        if (w[i - 1] == w[i]) return;
                } else {
                    std::sort(w.begin(), w.end());
                }
                acc[w] += sign > 0 ? coeff : -coeff;
                return;
            }
            for (auto& [i, c] : cols.cols[label[pos] - 1]) {
                word[pos] = i + 1;
                rec(pos + 1, coeff * c);
            }
        };
        rec(0, Rat(1));
    }

    std::vector<std::pair<int, Rat>> out;
    for (auto& [w, c] : acc)
        if (c != 0) out.emplace_back(fac.index.at(w), c);
    return slot.emplace(label_idx, std::move(out)).first->second;
}

SparseVec SubstitutionAction::apply(const SparseVec& v) const {
    std::map<int, Rat> acc;
    int nf = static_cast<int>(space->factors.size());
    for (auto& [idx, coeff] : v.t) {
        auto fl = space->unpack(idx);
        // product over factors of sparse factor images
        std::vector<int> out_fl(nf, 0);
        std::function<void(int, Rat)> rec = [&](int f, Rat c) {
            if (f == nf) {
                acc[space->index_of(out_fl)] += c;
                return;
            }
            for (auto& [li, lc] : factor_image(f, fl[f])) {
                out_fl[f] = li;
                rec(f + 1, c * lc);
            }
        };
        rec(0, coeff);
    }
    SparseVec out;
    for (auto& [i, c] : acc)
        if (c != 0) out.t.emplace_back(i, c);
    return out;
}

}  // namespace mtab
