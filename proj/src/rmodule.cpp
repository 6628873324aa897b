#include "mtab/rmodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mtab/characters.hpp"

namespace mtab {

Subspace MonoidModule::m_double_prime() const {
    std::vector<RatVec> rows;
    for (int i = 0; i < base->dim(); ++i)
        if (base->weights[i].some_ge2()) {
            RatVec u(base->dim(), Rat(0));
            u[i] = 1;
            rows.push_back(std::move(u));
        }
    return Subspace::from_spanning(base->dim(), rows);
}

RatVec MonoidModule::project(const RatVec& base_coords) const {
    RatVec out(rep_labels.size(), Rat(0));
    for (std::size_t k = 0; k < rep_labels.size(); ++k) out[k] = base_coords[rep_labels[k]];
    return out;
}

RatMatrix MonoidModule::act(const SubstitutionCols& g) const {
    SubstitutionAction action(base->ambient, g);
    RatMatrix m(dim(), dim());
    auto keep = [](const WeightVector& w) { return w.all01(); };
    for (int i = 0; i < dim(); ++i) {
        SparseVec img = action.apply(base->vectors[rep_labels[i]]);
        RatVec coeffs = base->express_dropping(img, keep);
        for (int j = 0; j < dim(); ++j) m.at(j, i) = coeffs[rep_labels[j]];
    }
    return m;
}

std::vector<PartialTransformation> monoid_generators(MonoidKind kind, int n) {
    std::vector<PartialTransformation> gens;
    gens.push_back(PartialTransformation::identity(n));
    for (auto& s : coxeter_generators(n)) gens.push_back(PartialTransformation::from_permutation(s));
    if (kind == MonoidKind::IS || kind == MonoidKind::PT) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        im[n - 1] = 0;  // last point undefined
        gens.emplace_back(n, im);
    }
    if ((kind == MonoidKind::T || kind == MonoidKind::PT) && n >= 2) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        im[n - 1] = n - 1;  // collapse n onto n-1
        gens.emplace_back(n, im);
    }
    return gens;
}

MonoidModule symmetrized_functor(std::shared_ptr<const LabeledModule> base, MonoidKind kind) {
    MonoidModule M;
    M.kind = kind;
    M.n = base->n;
    M.r = base->shape.size();
    M.shape = base->shape;
    M.base = std::move(base);
    for (int i = 0; i < M.base->dim(); ++i)
        if (M.base->weights[i].all01()) M.rep_labels.push_back(i);

    // Submodule property of M'': every generator must send each basis vector
    // of non-0/1 weight into the non-0/1-weight part of the ambient space.
    for (auto& A : monoid_generators(kind, M.n)) {
        SubstitutionAction action(M.base->ambient, SubstitutionCols::from_partial(A));
        for (int i = 0; i < M.base->dim(); ++i) {
            if (!M.base->weights[i].some_ge2()) continue;
            SparseVec img = action.apply(M.base->vectors[i]);
            for (auto& [idx, c] : img.t)
                if (!M.base->ambient.weight_of(idx, M.n).some_ge2())
                    throw std::logic_error(
                        "M'' is not stable under the monoid action (internal failure)");
        }
    }
    return M;
}

MonoidModule build_R_module(MonoidKind kind, int n, const SkewShape& shape, bool upper) {
    auto base = upper ? cached_schur_module(shape.conjugate(), n)
                      : cached_weyl_module(shape, n);
    MonoidModule M = symmetrized_functor(base, kind);
    M.shape = shape;
    M.upper = upper;
    M.r = shape.size();
    long long expected = shape.size() > n
                             ? 0
                             : binomial(n, shape.size()) * count_standard(shape);
    if (M.dim() != expected)
        throw std::logic_error("R-module dimension disagrees with binom(n,r)*f^(lambda/mu)");
    return M;
}

std::vector<ActionMap> restrict_to_symmetric_group(const MonoidModule& M) {
    std::vector<ActionMap> out;
    for (auto& s : coxeter_generators(M.n)) {
        ActionMap am;
        am.source = "sigma=" + PartialTransformation::from_permutation(s).to_string();
        am.matrix = M.act(s);
        out.push_back(std::move(am));
    }
    return out;
}

SymGroupModule specht_module(const Partition& lambda) {
    int r = lambda.size();
    SymGroupModule f;
    f.r = r;
    if (r == 0) {
        f.dim = 1;
        f.mats[std::vector<int>{}] = RatMatrix::identity(1);
        return f;
    }
    auto base = cached_schur_module(SkewShape(lambda.conjugate()), r);
    std::vector<int> stratum;  // labels of weight (1,...,1)
    for (int i = 0; i < base->dim(); ++i)
        if (base->weights[i].all01()) stratum.push_back(i);
    f.dim = static_cast<int>(stratum.size());
    for (auto& sigma : all_permutations(r)) {
        RatMatrix m(f.dim, f.dim);
        for (int i = 0; i < f.dim; ++i) {
            Tableau moved = base->labels[stratum[i]].relabeled(sigma);
            RatVec coeffs = base->express_dropping(
                base->image_of(moved), [](const WeightVector& w) { return w.all01(); });
            for (int j = 0; j < f.dim; ++j) m.at(j, i) = coeffs[stratum[j]];
        }
        f.mats.emplace(sigma, std::move(m));
    }
    return f;
}

RatMatrix InducedModule::act(const PartialTransformation& A) const {
    int k = static_cast<int>(injections.size());
    RatMatrix m(dim(), dim());
    std::map<std::vector<int>, int> inj_index;
    for (int h = 0; h < k; ++h) inj_index.emplace(injections[h], h);
    for (int h = 0; h < k; ++h) {
        std::vector<int> img(r, 0);
        bool dead = false;
        for (int t = 0; t < r; ++t) {
            int x = injections[h][t];
            if (!A.defined(x)) { dead = true; break; }
            img[t] = A(x);
        }
        if (!dead) {
            std::vector<int> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            dead = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
            if (!dead) {
                // p_A o h = h' o sigma  with h' order preserving
                int hp = inj_index.at(sorted);
                std::vector<int> sigma(r, 0);
                for (int t = 0; t < r; ++t) {
                    int pos = static_cast<int>(
                        std::lower_bound(sorted.begin(), sorted.end(), img[t]) - sorted.begin());
                    sigma[t] = pos + 1;
                }
                const RatMatrix& fm = fiber.mat(sigma);
                for (int a = 0; a < fiber.dim; ++a)
                    for (int b = 0; b < fiber.dim; ++b)
                        if (fm.at(a, b) != 0)
                            m.at(hp * fiber.dim + a, h * fiber.dim + b) = fm.at(a, b);
            }
        }
    }
    return m;
}

Report restriction_weight_space_check(const LabeledModule& M, int n) {
    using nlohmann::json;
    Report rep;
    int r = M.shape.size();
    rep.claim = "F(M) matches the full weight space of M tensored with the complementary power";
    rep.parameters = {{"shape", M.shape.to_string()},
                      {"side", M.weyl ? "weyl" : "schur"},
                      {"n", n}};
    if (M.n != n || r > n) throw std::invalid_argument("restriction_weight_space_check: need M over V_n, r <= n");

    // F(M): the 0/1-weight labels with the S_n action restricted there.
    std::vector<int> flabels;
    for (int i = 0; i < M.dim(); ++i)
        if (M.weights[i].all01()) flabels.push_back(i);
    auto f_act = [&](const std::vector<int>& sigma) {
        RatMatrix m(static_cast<int>(flabels.size()), static_cast<int>(flabels.size()));
        RatMatrix full = M.act(sigma);
        for (std::size_t i = 0; i < flabels.size(); ++i)
            for (std::size_t j = 0; j < flabels.size(); ++j)
                m.at(static_cast<int>(j), static_cast<int>(i)) =
                    full.at(flabels[j], flabels[i]);
        return m;
    };
    ClassFunction chi_f = class_function_of(n, f_act);
    long long dim_f = static_cast<long long>(flabels.size());

    // Tensor sides: pairs (module label, complementary-power monomial) whose
    // weights sum to (1,...,1). Permutations act diagonally; the monomial
    // factor is a permutation action on weakly increasing words.
    TensorFactor sym = TensorFactor::make(FactorKind::Symmetric, n, n - r);
    auto tensor_character = [&](bool divided) {
        // Basis pairs: (i, w) with weight(i) + content(w) = (1..1)
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < M.dim(); ++i)
            for (int w = 0; w < sym.dim(); ++w) {
                WeightVector total = M.weights[i];
                for (int v : sym.labels[w]) ++total.coords[v - 1];
                if (total.all01()) pairs.emplace_back(i, w);
            }
        std::map<std::pair<int, int>, int> pidx;
        for (int k = 0; k < static_cast<int>(pairs.size()); ++k) pidx.emplace(pairs[k], k);
        auto act = [&](const std::vector<int>& sigma) {
            RatMatrix full = M.act(sigma);
            RatMatrix m(static_cast<int>(pairs.size()), static_cast<int>(pairs.size()));
            for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
                auto [i, w] = pairs[k];
                std::vector<int> img;
                for (int v : sym.labels[w]) img.push_back(sigma[v - 1]);
                std::sort(img.begin(), img.end());
                int w2 = sym.index.at(img);  // same for Sym and divided powers
                for (int j = 0; j < M.dim(); ++j) {
                    if (full.at(j, i) == 0) continue;
                    auto it = pidx.find({j, w2});
                    if (it == pidx.end())
                        throw std::logic_error("restriction check: tensor action left the weight space");
                    m.at(it->second, k) = full.at(j, i);
                }
            }
            return m;
        };
        (void)divided;  // the permutation action coincides on both bases
        return std::pair<long long, ClassFunction>(static_cast<long long>(pairs.size()),
                                                   class_function_of(n, act));
    };
    auto [dim_sym, chi_sym] = tensor_character(false);
    auto [dim_div, chi_div] = tensor_character(true);

    bool ok = dim_f == dim_sym && dim_f == dim_div && chi_f == chi_sym && chi_f == chi_div;
    rep.data = {{"dim_F", dim_f}, {"dim_sym_side", dim_sym}, {"dim_divided_side", dim_div}};
    rep.status = ok ? Report::Status::Pass : Report::Status::Fail;
    return rep;
}

Report induced_trace_check(MonoidKind kind, int n, const Partition& lambda) {
    Report rep;
    rep.claim = "induced module from the Specht fiber matches R(n)^lambda on all traces";
    rep.parameters = {{"kind", monoid_kind_name(kind)},
                      {"n", n},
                      {"lambda", lambda.to_string()}};
    MonoidModule R = build_R_module(kind, n, SkewShape(lambda), true);
    InducedModule I = induced_module(kind, n, specht_module(lambda));
    bool ok = I.dim() == R.dim();
    for (auto& A : enumerate_monoid(kind, n))
        if (ok && I.act(A).trace() != R.act(A).trace()) ok = false;
    rep.data = {{"dim", R.dim()}};
    rep.status = ok ? Report::Status::Pass : Report::Status::Fail;
    return rep;
}

InducedModule induced_module(MonoidKind kind, int n, SymGroupModule fiber) {
    InducedModule I;
    I.kind = kind;
    I.n = n;
    I.r = fiber.r;
    if (I.r > n) throw std::invalid_argument("induced_module: r > n");
    I.fiber = std::move(fiber);
    std::vector<int> comb(I.r);
    std::function<void(int, int)> rec = [&](int pos, int min_v) {
        if (pos == I.r) {
            I.injections.push_back(comb);
            return;
        }
        for (int v = min_v; v <= n; ++v) {
            comb[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return I;
}

}  // namespace mtab
