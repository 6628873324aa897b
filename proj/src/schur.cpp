#include "mtab/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mtab {

namespace {

MultigradedSpace column_ambient(const SkewShape& shape, int n, FactorKind kind) {
    MultigradedSpace space;
    for (int j = 0; j < shape.cols(); ++j)
        space.factors.push_back(TensorFactor::make(kind, n, shape.col_len(j)));
    if (shape.cols() == 0) space.factors.push_back(TensorFactor::make(kind, n, 0));
    return space;
}

void validate_tableau(const SkewShape& shape, int n, const Tableau& T) {
    if (T.shape != shape) throw std::invalid_argument("tableau shape mismatch");
    for (int i = 0; i < shape.rows(); ++i) {
        if (static_cast<int>(T.entries[i].size()) != shape.row_len(i))
            throw std::invalid_argument("tableau row length mismatch");
        for (int e : T.entries[i])
            if (e < 1 || e > n) throw std::invalid_argument("tableau entry out of [n]");
    }
}

int permutation_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

MultigradedSpace sym_ambient(const SkewShape& shape, int n) {
    return column_ambient(shape, n, FactorKind::Symmetric);
}

MultigradedSpace ext_ambient(const SkewShape& shape, int n) {
    return column_ambient(shape, n, FactorKind::Exterior);
}

SparseVec d_map(const SkewShape& shape, int n, const Tableau& T) {
    validate_tableau(shape, n, T);
    MultigradedSpace space = sym_ambient(shape, n);
    int q = shape.rows();

    // All permutations (with parity) of each row's positions.
    std::vector<std::vector<std::pair<std::vector<int>, int>>> row_perms(q);
    for (int i = 0; i < q; ++i) {
        int len = shape.row_len(i);
        std::vector<int> p(len);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> perms;
        std::sort(p.begin(), p.end());
        do perms.emplace_back(p, permutation_parity(p));
        while (std::next_permutation(p.begin(), p.end()));
        row_perms[i] = std::move(perms);
    }

    SparseVec out;
    std::vector<int> choice(q, 0);
    std::vector<std::vector<int>> col_letters(shape.cols() == 0 ? 1 : shape.cols());
    std::function<void(int, int)> rec = [&](int row, int sign) {
        if (row == q) {
            // letters land in their column in increasing row order
            for (auto& c : col_letters) c.clear();
            for (int i = 0; i < q; ++i) {
                const std::vector<int>& perm = row_perms[i][choice[i]].first;
                for (int t = 0; t < shape.row_len(i); ++t)
                    col_letters[shape.row_begin(i) + t].push_back(T.entries[i][perm[t]]);
            }
            std::vector<int> fl(space.factors.size(), 0);
            Rat coeff(sign);
            for (std::size_t j = 0; j < space.factors.size(); ++j) {
                auto [idx, s] = space.factors[j].normalize(
                    j < col_letters.size() ? col_letters[j] : std::vector<int>{});
                fl[j] = idx;
                if (s < 0) coeff = -coeff;
            }
            out.add_term(space.index_of(fl), coeff);
            return;
        }
        for (std::size_t k = 0; k < row_perms[row].size(); ++k) {
            choice[row] = static_cast<int>(k);
            rec(row + 1, sign * row_perms[row][k].second);
        }
    };
    rec(0, 1);
    out.finalize();
    return out;
}

SparseVec dprime_map(const SkewShape& shape, int n, const Tableau& T) {
    validate_tableau(shape, n, T);
    MultigradedSpace space = ext_ambient(shape, n);
    int q = shape.rows();

    // Distinct arrangements of each row's multiset, coefficient 1 each.
    std::vector<std::vector<std::vector<int>>> row_arrs(q);
    for (int i = 0; i < q; ++i) {
        std::vector<int> row = T.entries[i];
        std::sort(row.begin(), row.end());
        do row_arrs[i].push_back(row);
        while (std::next_permutation(row.begin(), row.end()));
    }

    SparseVec out;
    std::vector<int> choice(q, 0);
    std::vector<std::vector<int>> col_letters(shape.cols() == 0 ? 1 : shape.cols());
    std::function<void(int)> rec = [&](int row) {
        if (row == q) {
            for (auto& c : col_letters) c.clear();
            for (int i = 0; i < q; ++i)
                for (int t = 0; t < shape.row_len(i); ++t)
                    col_letters[shape.row_begin(i) + t].push_back(row_arrs[i][choice[i]][t]);
            std::vector<int> fl(space.factors.size(), 0);
            Rat coeff(1);
            bool zero = false;
            for (std::size_t j = 0; j < space.factors.size(); ++j) {
                auto [idx, s] = space.factors[j].normalize(
                    j < col_letters.size() ? col_letters[j] : std::vector<int>{});
                if (idx < 0) { zero = true; break; }
                fl[j] = idx;
                if (s < 0) coeff = -coeff;
            }
            if (!zero) out.add_term(space.index_of(fl), coeff);
            return;
        }
        for (std::size_t k = 0; k < row_arrs[row].size(); ++k) {
            choice[row] = static_cast<int>(k);
            rec(row + 1);
        }
    };
    rec(0);
    out.finalize();
    return out;
}

SparseVec LabeledModule::image_of(const Tableau& T) const {
    return weyl ? dprime_map(shape, n, T) : d_map(shape, n, T);
}

namespace {

std::shared_ptr<const LabeledModule> finish_module(std::shared_ptr<LabeledModule> mod) {
    const SkewShape& shape = mod->shape;
    for (auto& T : mod->labels) mod->weights.push_back(T.weight(mod->n));
    std::map<WeightVector, std::vector<int>> buckets;
    for (int i = 0; i < mod->dim(); ++i) buckets[mod->weights[i]].push_back(i);
    for (auto& [w, idxs] : buckets) {
        LabeledModule::Stratum st;
        st.label_idx = idxs;
        for (int i : idxs)
            for (auto& [amb, c] : mod->vectors[i].t) st.amb_support.push_back(amb);
        std::sort(st.amb_support.begin(), st.amb_support.end());
        st.amb_support.erase(std::unique(st.amb_support.begin(), st.amb_support.end()),
                             st.amb_support.end());
        for (int k = 0; k < static_cast<int>(st.amb_support.size()); ++k)
            st.amb_pos.emplace(st.amb_support[k], k);
        std::vector<RatVec> rows;
        for (int i : idxs) {
            RatVec row(st.amb_support.size(), Rat(0));
            for (auto& [amb, c] : mod->vectors[i].t) row[st.amb_pos.at(amb)] = c;
            rows.push_back(std::move(row));
        }
        try {
            st.solver = SolvedBasis::factor(rows, static_cast<int>(st.amb_support.size()));
        } catch (const std::logic_error&) {
            throw std::logic_error(
                "basis theorem violated: dependent tableau images for shape " +
                shape.to_string() + ", n=" + std::to_string(mod->n) +
                (mod->weyl ? " (Weyl side)" : " (Schur side)"));
        }
        mod->strata.emplace(w, std::move(st));
    }
    return mod;
}

std::shared_ptr<LabeledModule> start_module(const SkewShape& shape, int n, bool weyl) {
    auto mod = std::make_shared<LabeledModule>();
    mod->shape = shape;
    mod->n = n;
    mod->weyl = weyl;
    mod->ambient = weyl ? ext_ambient(shape, n) : sym_ambient(shape, n);
    mod->labels = enumerate_tableaux(
        shape, n, weyl ? TableauKind::CoSemistandard : TableauKind::Semistandard);
    return mod;
}

}  // namespace

std::shared_ptr<const LabeledModule> build_schur_module(const SkewShape& shape, int n) {
    auto mod = start_module(shape, n, false);
    for (auto& T : mod->labels) mod->vectors.push_back(d_map(shape, n, T));
    return finish_module(std::move(mod));
}

std::shared_ptr<const LabeledModule> build_weyl_module(const SkewShape& shape, int n) {
    auto mod = start_module(shape, n, true);
    for (auto& T : mod->labels) mod->vectors.push_back(dprime_map(shape, n, T));
    return finish_module(std::move(mod));
}

std::shared_ptr<const LabeledModule> assemble_module(const SkewShape& shape, int n, bool weyl,
                                                     std::vector<Tableau> labels,
                                                     std::vector<SparseVec> vectors) {
    auto mod = start_module(shape, n, weyl);
    if (labels != mod->labels || labels.size() != vectors.size())
        throw std::invalid_argument("assemble_module: labels do not match enumeration");
    mod->vectors = std::move(vectors);
    return finish_module(std::move(mod));
}

std::optional<RatVec> LabeledModule::express(const SparseVec& ambient_vec) const {
    RatVec coeffs(dim(), Rat(0));
    // Split by weight of the ambient monomials.
    std::map<WeightVector, SparseVec> parts;
    for (auto& [idx, c] : ambient_vec.t)
        parts[ambient.weight_of(idx, n)].t.emplace_back(idx, c);
    for (auto& [w, part] : parts) {
        auto it = strata.find(w);
        if (it == strata.end()) return std::nullopt;
        const Stratum& st = it->second;
        RatVec local(st.amb_support.size(), Rat(0));
        for (auto& [idx, c] : part.t) {
            auto p = st.amb_pos.find(idx);
            if (p == st.amb_pos.end()) return std::nullopt;
            local[p->second] = c;
        }
        auto sol = st.solver.express(local);
        if (!sol) return std::nullopt;
        for (std::size_t k = 0; k < st.label_idx.size(); ++k) coeffs[st.label_idx[k]] = (*sol)[k];
    }
    return coeffs;
}

RatVec LabeledModule::express_dropping(
    const SparseVec& ambient_vec,
    const std::function<bool(const WeightVector&)>& keep) const {
    RatVec coeffs(dim(), Rat(0));
    std::map<WeightVector, SparseVec> parts;
    for (auto& [idx, c] : ambient_vec.t)
        parts[ambient.weight_of(idx, n)].t.emplace_back(idx, c);
    for (auto& [w, part] : parts) {
        if (!keep(w)) continue;
        auto it = strata.find(w);
        if (it == strata.end())
            throw std::logic_error("express_dropping: kept weight has no stratum");
        const Stratum& st = it->second;
        RatVec local(st.amb_support.size(), Rat(0));
        for (auto& [idx, c] : part.t) {
            auto p = st.amb_pos.find(idx);
            if (p == st.amb_pos.end())
                throw std::logic_error("express_dropping: vector outside stratum span");
            local[p->second] = c;
        }
        auto sol = st.solver.express(local);
        if (!sol) throw std::logic_error("express_dropping: vector outside stratum span");
        for (std::size_t k = 0; k < st.label_idx.size(); ++k) coeffs[st.label_idx[k]] = (*sol)[k];
    }
    return coeffs;
}

RatMatrix LabeledModule::act(const SubstitutionCols& g) const {
    SubstitutionAction action(ambient, g);
    RatMatrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        auto img = action.apply(vectors[i]);
        auto coeffs = express(img);
        if (!coeffs)
            throw std::logic_error("module action left the module span (internal failure)");
        for (int j = 0; j < dim(); ++j) m.at(j, i) = (*coeffs)[j];
    }
    return m;
}

Subspace LabeledModule::weight_component(
    const std::function<bool(const WeightVector&)>& pred) const {
    std::vector<RatVec> rows;
    for (int i = 0; i < dim(); ++i)
        if (pred(weights[i])) {
            RatVec u(dim(), Rat(0));
            u[i] = 1;
            rows.push_back(std::move(u));
        }
    return Subspace::from_spanning(dim(), rows);
}

RatVec straighten(const LabeledModule& module, const Tableau& T) {
    auto coeffs = module.express(module.image_of(T));
    if (!coeffs)
        throw std::logic_error("straightening failed: image outside semistandard span "
                               "(this would falsify the basis theorem)");
    // Straightening preserves the weight: contributions only on labels of
    // weight equal to weight(T).
    WeightVector w = T.weight(module.n);
    for (int i = 0; i < module.dim(); ++i)
        if ((*coeffs)[i] != 0 && !(module.weights[i] == w))
            throw std::logic_error("straightening produced a weight-changing coefficient");
    return *coeffs;
}

BranchingChain gl_branching_filtration(const SkewShape& shape, int n, int s) {
    return gl_branching_filtration(*build_schur_module(shape, n), s);
}

BranchingChain gl_branching_filtration(const LabeledModule& module, int s) {
    if (module.weyl) throw std::invalid_argument("gl_branching_filtration: Schur modules only");
    const SkewShape& shape = module.shape;
    const int n = module.n;
    if (s < 1 || s >= n) throw std::invalid_argument("gl_branching_filtration: need 1 <= s < n");
    const LabeledModule* mod = &module;

    // Coordinates of every tableau image, with its eta sequence.
    auto all = enumerate_tableaux(shape, n, TableauKind::All);
    std::vector<std::pair<std::vector<int>, RatVec>> data;  // (eta, coords)
    for (auto& T : all) {
        auto coeffs = mod->express(mod->image_of(T));
        if (!coeffs) throw std::logic_error("branching: tableau image outside module");
        std::vector<int> eta(shape.rows(), 0);
        for (int i = 0; i < shape.rows(); ++i) {
            eta[i] = shape.inner.part(i);
            for (int e : T.entries[i])
                if (e <= s) ++eta[i];
        }
        data.emplace_back(std::move(eta), std::move(*coeffs));
    }

    BranchingChain bc;
    for (auto& nu : subpartitions(shape.outer))
        if (nu.contains(shape.inner)) bc.nus.push_back(nu);
    std::sort(bc.nus.begin(), bc.nus.end(),
              [](const Partition& a, const Partition& b) { return lex_greater(a, b); });

    int prev_dim = 0;
    for (auto& nu : bc.nus) {
        std::vector<RatVec> rows;
        for (auto& [eta, coords] : data)
            if (lex_greater_eq(eta, nu.parts)) rows.push_back(coords);
        Subspace sp = Subspace::from_spanning(mod->dim(), rows);
        if (!bc.chain.empty() && !sp.contains(bc.chain.back()))
            throw std::logic_error("branching chain is not increasing");
        bc.quotient_dims.push_back(sp.dim() - prev_dim);
        prev_dim = sp.dim();
        bc.chain.push_back(std::move(sp));

        // Quotient dimension identity for this step.
        long long left = static_cast<long long>(
            enumerate_tableaux(SkewShape(nu, shape.inner), std::max(s, 1),
                               TableauKind::Semistandard)
                .size());
        long long right = static_cast<long long>(
            enumerate_tableaux(SkewShape(shape.outer, nu), std::max(n - s, 1),
                               TableauKind::Semistandard)
                .size());
        if (bc.quotient_dims.back() != left * right)
            throw std::logic_error("branching quotient dimension mismatch at nu=" +
                                   nu.to_string());
    }
    if (bc.chain.empty() || bc.chain.back().dim() != mod->dim())
        throw std::logic_error("branching chain does not exhaust the module");
    return bc;
}

RatVec StandardSchurModule::project(const RatVec& base_coords) const {
    auto sol = projector.express(base_coords);
    if (!sol) throw std::logic_error("standard module projection failed");
    RatVec out(rep_labels.size(), Rat(0));
    for (std::size_t k = 0; k < rep_labels.size(); ++k) out[k] = (*sol)[W.dim() + k];
    return out;
}

RatMatrix StandardSchurModule::act(const std::vector<int>& sigma) const {
    RatMatrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        Tableau moved = base->labels[rep_labels[i]].relabeled(sigma);
        auto coords = base->express(base->image_of(moved));
        if (!coords) throw std::logic_error("standard module action failed");
        RatVec q = project(*coords);
        for (int j = 0; j < dim(); ++j) m.at(j, i) = q[j];
    }
    return m;
}

StandardSchurModule build_standard_schur_module(const Partition& lambda, int m) {
    StandardSchurModule sm;
    sm.lambda = lambda;
    sm.m = m;
    SkewShape shape(lambda);
    sm.base = build_schur_module(shape, m);

    // W_lambda: replacement sums over every tableau and cell.
    RowReducer red(sm.base->dim());
    auto cells = shape.cells();
    for (auto& T : enumerate_tableaux(shape, m, TableauKind::All))
        for (auto& [i, j] : cells) {
            SparseVec sum;
            for (int u = 1; u <= m; ++u) {
                SparseVec img = sm.base->image_of(T.with_entry(i, j, u));
                for (auto& [idx, c] : img.t) sum.t.emplace_back(idx, c);
            }
            sum.finalize();
            auto coords = sm.base->express(sum);
            if (!coords) throw std::logic_error("W_lambda generator outside module");
            red.add(std::move(*coords));
        }
    sm.W = red.to_subspace();

    for (int i = 0; i < sm.base->dim(); ++i) {
        bool small = true;
        for (int e : sm.base->labels[i].row_word())
            if (e > m - 1) { small = false; break; }
        if (small) sm.rep_labels.push_back(i);
    }
    if (sm.W.dim() + static_cast<int>(sm.rep_labels.size()) != sm.base->dim())
        throw std::logic_error("standard module: coset count mismatch for lambda=" +
                               lambda.to_string() + ", m=" + std::to_string(m));
    std::vector<RatVec> rows;
    for (int i = 0; i < sm.W.dim(); ++i) rows.push_back(sm.W.basis.row(i));
    for (int idx : sm.rep_labels) {
        RatVec u(sm.base->dim(), Rat(0));
        u[idx] = 1;
        rows.push_back(std::move(u));
    }
    sm.projector = SolvedBasis::factor(rows, sm.base->dim());  // throws if dependent
    return sm;
}

}  // namespace mtab
