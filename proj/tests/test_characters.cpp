#include <doctest.h>

#include "mtab/characters.hpp"

using namespace mtab;

TEST_CASE("specht characters: trivial, sign, (2,1)") {
    for (int n = 1; n <= 5; ++n) {
        ClassFunction triv = specht_character(Partition({n}));
        for (auto& [rho, v] : triv.values) CHECK(v == 1);
        ClassFunction sign = specht_character(Partition(std::vector<int>(n, 1)));
        for (auto& [rho, v] : sign.values) {
            int transpositions = 0;
            for (int p : rho.parts) transpositions += p - 1;
            CHECK(v == (transpositions % 2 ? -1 : 1));
        }
    }
    ClassFunction hook = specht_character(Partition({2, 1}));
    CHECK(hook.values.at(Partition({1, 1, 1})) == 2);
    CHECK(hook.values.at(Partition({2, 1})) == 0);
    CHECK(hook.values.at(Partition({3})) == -1);
}

TEST_CASE("orthonormality of irreducible characters up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        auto lambdas = enumerate_partitions(n);
        std::vector<ClassFunction> chis;
        for (auto& l : lambdas) chis.push_back(specht_character(l));
        for (std::size_t i = 0; i < chis.size(); ++i)
            for (std::size_t j = 0; j < chis.size(); ++j)
                CHECK(chis[i].inner(chis[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("Murnaghan-Nakayama agrees with explicit traces for |lambda| <= 4") {
    for (int r = 1; r <= 4; ++r)
        for (auto& lambda : enumerate_partitions(r)) {
            SymGroupModule f = specht_module(lambda);
            ClassFunction chi = specht_character(lambda);
            CHECK(f.dim == count_standard(SkewShape(lambda)));
            for (auto& rho : enumerate_partitions(r))
                CHECK(f.mat(cycle_type_representative(rho, r)).trace() == chi.values.at(rho));
        }
}

TEST_CASE("module characters of permutation-flavored modules") {
    MonoidModule r2 = build_R_module(MonoidKind::IS, 3, SkewShape{Partition({2})}, true);
    ClassFunction chi = module_character(r2);
    CHECK(chi.values.at(Partition({1, 1, 1})) == 3);
    CHECK(chi.values.at(Partition({2, 1})) == 1);
    CHECK(chi.values.at(Partition({3})) == 0);
}

TEST_CASE("first branching rule spot checks") {
    Report a = verify_branch1(Partition({2, 1}), 3);
    CHECK(a.passed());
    CHECK(a.data["factors"].size() == 1);

    Report b = verify_branch1(Partition({2}), 3);
    CHECK(b.passed());
    CHECK(b.data["factors"].size() == 2);
    CHECK(b.data["dim"] == 3);

    Report c = verify_branch1(Partition({1}), 2);
    CHECK(c.passed());
    CHECK(c.data["dim"] == 2);
}

TEST_CASE("second branching rule") {
    Report a = verify_branch2(MonoidKind::IS, SkewShape{Partition({2})}, 3, 1, true);
    CHECK(a.passed());
    CHECK(a.data["lhs_dim"] == 3);

    // lambda = mu: a single factor of dimension 1 when r = 0
    Report b = verify_branch2(MonoidKind::T, SkewShape{Partition({2, 1}), Partition({2, 1})}, 3, 1,
                          true);
    CHECK(b.passed());
    CHECK(b.data["lhs_dim"] == 1);

    Report c =
        verify_branch2(MonoidKind::IS, SkewShape{Partition({2, 1})}, 4, 2, false);
    CHECK(c.passed());
    CHECK(c.data["lhs_dim"] == 8);

    // a strictly skew structural case
    Report d = verify_branch2(MonoidKind::PT, SkewShape{Partition({2, 1}), Partition({1})}, 3, 1,
                          true);
    CHECK(d.passed());
}

TEST_CASE("n-1 branching specialization") {
    Report a = verify_branch3(MonoidKind::IS, SkewShape{Partition({2, 1})}, 3);
    CHECK(a.passed());
    CHECK(a.data["expected_factors"].size() == 2);  // (2) and (1,1)

    Report b = verify_branch3(MonoidKind::IS, SkewShape{Partition({1})}, 2);
    CHECK(b.passed());
    CHECK(b.data["expected_factors"].size() == 2);  // empty and (1)

    Report c = verify_branch3(MonoidKind::T, SkewShape{Partition({1}), Partition({1})}, 3);
    CHECK(c.passed());
    CHECK(c.data["expected_factors"].size() == 1);  // lambda itself
}

TEST_CASE("non-isomorphism tables") {
    NonIsoTable t3 = nonisomorphism_table(MonoidKind::IS, 3, 3);
    CHECK(t3.consistent);
    auto idx = [&](const Partition& p) {
        for (std::size_t i = 0; i < t3.lambdas.size(); ++i)
            if (t3.lambdas[i] == p) return static_cast<int>(i);
        return -1;
    };
    CHECK(t3.distinct[idx(Partition({2}))][idx(Partition({1, 1}))]);
    CHECK(t3.distinct[idx(Partition({1}))][idx(Partition({2}))]);  // the (r),(n-r) pair
    CHECK(t3.distinct[idx(Partition{})][idx(Partition({3}))]);     // zero matrix separates

    CHECK(nonisomorphism_table(MonoidKind::PT, 3, 3).consistent);
    CHECK(nonisomorphism_table(MonoidKind::T, 3, 3).consistent);
}

TEST_CASE("irreducibility certificates and witnesses") {
    MonoidModule good = build_R_module(MonoidKind::IS, 3, SkewShape{Partition({2, 1})}, true);
    IrredResult res = irreducibility_test(good, 42);
    CHECK(res.status == IrredResult::Status::Irreducible);

    // one-dimensional modules are trivially irreducible
    MonoidModule one = build_R_module(MonoidKind::T, 3, SkewShape{Partition({1, 1, 1})}, true);
    CHECK(one.dim() == 1);
    CHECK(irreducibility_test(one, 42).status == IrredResult::Status::Irreducible);

    // Ext^2(V_3) over T_3 is reducible: the alternating sum spans a line
    MonoidModule red = build_R_module(MonoidKind::T, 3, SkewShape{Partition({1, 1})}, true);
    IrredResult rr = irreducibility_test(red, 42);
    CHECK(rr.status == IrredResult::Status::Reducible);
    REQUIRE(rr.witness.has_value());
    CHECK(rr.witness->dim() >= 1);
    CHECK(rr.witness->dim() < red.dim());

    // the witness really is invariant
    for (auto& A : enumerate_monoid(MonoidKind::T, 3)) {
        RatMatrix act = red.act(A);
        for (int i = 0; i < rr.witness->dim(); ++i) {
            RatVec row = rr.witness->basis.row(i);
            RatVec img(red.dim(), Rat(0));
            for (int a = 0; a < red.dim(); ++a)
                for (int b = 0; b < red.dim(); ++b)
                    if (act.at(b, a) != 0 && row[a] != 0) img[b] += act.at(b, a) * row[a];
            CHECK(rr.witness->contains(img));
        }
    }

    // V_3 over T_3 (lambda = (1) is a column) is reducible as well
    MonoidModule v3 = build_R_module(MonoidKind::T, 3, SkewShape{Partition({1})}, true);
    CHECK(irreducibility_test(v3, 42).status == IrredResult::Status::Reducible);
}
