#include "mtab/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtab {

MonoidKind monoid_kind_parse(const std::string& s) {
    if (s == "is" || s == "IS") return MonoidKind::IS;
    if (s == "pt" || s == "PT") return MonoidKind::PT;
    if (s == "t" || s == "T") return MonoidKind::T;
    if (s == "sym" || s == "Sym" || s == "s") return MonoidKind::Sym;
    throw std::invalid_argument("unknown monoid kind: " + s);
}

std::string monoid_kind_name(MonoidKind k) {
    switch (k) {
        case MonoidKind::IS: return "is";
        case MonoidKind::PT: return "pt";
        case MonoidKind::T: return "t";
        case MonoidKind::Sym: return "sym";
    }
    return "?";
}

PartialTransformation::PartialTransformation(int n, std::vector<int> img)
    : n(n), img(std::move(img)) {
    if (static_cast<int>(this->img.size()) != n)
        throw std::invalid_argument("partial map: image sequence length != n");
    for (int v : this->img)
        if (v < 0 || v > n) throw std::invalid_argument("partial map: image out of range");
}

PartialTransformation PartialTransformation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return {n, im};
}

PartialTransformation PartialTransformation::from_permutation(const std::vector<int>& sigma) {
    return {static_cast<int>(sigma.size()), sigma};
}

bool PartialTransformation::total() const {
    return std::all_of(img.begin(), img.end(), [](int v) { return v != 0; });
}

bool PartialTransformation::injective() const {
    std::vector<char> seen(n + 1, 0);
    for (int v : img) {
        if (v == 0) continue;
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool PartialTransformation::in_kind(MonoidKind k) const {
    switch (k) {
        case MonoidKind::PT: return true;
        case MonoidKind::IS: return injective();
        case MonoidKind::T: return total();
        case MonoidKind::Sym: return bijective();
    }
    return false;
}

int PartialTransformation::domain_size() const {
    return n - static_cast<int>(std::count(img.begin(), img.end(), 0));
}

int PartialTransformation::image_size() const {
    std::vector<char> seen(n + 1, 0);
    int c = 0;
    for (int v : img)
        if (v != 0 && !seen[v]) seen[v] = 1, ++c;
    return c;
}

PartialTransformation PartialTransformation::compose(const PartialTransformation& other) const {
    if (n != other.n) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(n, 0);
    for (int j = 0; j < n; ++j) {
        int mid = other.img[j];
        if (mid != 0) im[j] = img[mid - 1];
    }
    return {n, im};
}

RatMatrix PartialTransformation::matrix() const {
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        if (img[j] != 0) m.at(img[j] - 1, j) = 1;
    return m;
}

std::string PartialTransformation::to_string() const {
    std::string s;
    for (int j = 0; j < n; ++j) {
        if (j) s += ',';
        s += img[j] == 0 ? "-" : std::to_string(img[j]);
    }
    return s;
}

PartialTransformation PartialTransformation::parse(const std::string& s) {
    std::vector<int> im;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "-" || tok.empty())
            im.push_back(0);
        else
            im.push_back(std::stoi(tok));
    }
    return {static_cast<int>(im.size()), im};
}

PartialTransformation block_embed(const PartialTransformation& a,
                                  const PartialTransformation& b) {
    int n = a.n + b.n;
    std::vector<int> im(n, 0);
    for (int j = 0; j < a.n; ++j) im[j] = a.img[j];
    for (int j = 0; j < b.n; ++j) im[a.n + j] = b.img[j] == 0 ? 0 : a.n + b.img[j];
    return {n, im};
}

std::vector<PartialTransformation> enumerate_monoid(MonoidKind kind, int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("enumerate_monoid: n out of supported range");
    std::vector<PartialTransformation> out;
    // Odometer over image values in the order 1 < 2 < ... < n < undefined.
    std::vector<int> digit(n, 0);  // 0..n-1 = images 1..n, n = undefined
    while (true) {
        std::vector<int> im(n);
        for (int j = 0; j < n; ++j) im[j] = digit[j] == n ? 0 : digit[j] + 1;
        PartialTransformation p(n, im);
        if (p.in_kind(kind)) out.push_back(std::move(p));
        int j = n - 1;
        while (j >= 0 && digit[j] == n) digit[j--] = 0;
        if (j < 0) break;
        ++digit[j];
    }
    return out;
}

long long monoid_cardinality_formula(MonoidKind kind, int n) {
    switch (kind) {
        case MonoidKind::IS: {
            long long s = 0;
            for (int r = 0; r <= n; ++r) s += binomial(n, r) * binomial(n, r) * factorial(r);
            return s;
        }
        case MonoidKind::PT: {
            long long s = 1;
            for (int i = 0; i < n; ++i) s *= n + 1;
            return s;
        }
        case MonoidKind::T: {
            long long s = 1;
            for (int i = 0; i < n; ++i) s *= n;
            return s;
        }
        case MonoidKind::Sym: return factorial(n);
    }
    return 0;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition cycle_type(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<char> vis(n + 1, 0);
    std::vector<int> lens;
    for (int i = 1; i <= n; ++i) {
        if (vis[i]) continue;
        int len = 0, j = i;
        while (!vis[j]) {
            vis[j] = 1;
            j = sigma[j - 1];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<int> cycle_type_representative(const Partition& rho, int n) {
    if (rho.size() != n) throw std::invalid_argument("cycle type must be a partition of n");
    std::vector<int> sigma(n);
    int start = 1;
    for (int part : rho.parts) {
        for (int k = 0; k < part; ++k)
            sigma[start - 1 + k] = (k + 1 < part) ? start + k + 1 : start;
        start += part;
    }
    return sigma;
}

std::vector<std::vector<int>> coxeter_generators(int n) {
    std::vector<std::vector<int>> gens;
    for (int i = 1; i < n; ++i) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 1);
        std::swap(s[i - 1], s[i]);
        gens.push_back(std::move(s));
    }
    return gens;
}

long long conjugacy_class_size(const Partition& rho) {
    int n = rho.size();
    std::map<int, int> mult;
    for (int p : rho.parts) ++mult[p];
    long long z = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        z *= factorial(m);
    }
    return factorial(n) / z;
}

}  // namespace mtab
