#include <doctest.h>

#include <random>

#include "mtab/cauchy.hpp"

using namespace mtab;

TEST_CASE("ideal generators") {
    auto pt11 = ideal_generators(MonoidKind::PT, 1, 1);
    REQUIRE(pt11.size() == 1);
    CHECK(pt11[0].to_string() == "x[1,1]*x[1,1]");

    auto t21 = ideal_generators(MonoidKind::T, 2, 1);
    REQUIRE(t21.size() == 4);  // three column products and the column sum
    CHECK(t21[3].terms.size() == 2);

    CHECK(ideal_generators(MonoidKind::IS, 2, 2).size() == 12);
}

TEST_CASE("graded quotient dimensions") {
    CHECK(graded_quotient_dim(MonoidKind::IS, 2, 2, 2).dim == 2);
    CHECK(graded_quotient_dim(MonoidKind::PT, 3, 2, 1).dim == 6);
    CHECK(graded_quotient_dim(MonoidKind::T, 2, 2, 1).dim == 2);
    CHECK(graded_quotient_dim(MonoidKind::T, 2, 2, 1).basis.size() == 2);
    // vanishing beyond the alphabet
    CHECK(graded_quotient_dim(MonoidKind::IS, 2, 2, 3).dim == 0);
    CHECK(graded_quotient_dim(MonoidKind::PT, 2, 2, 3).dim == 0);
    // closed forms checked internally for all m,n <= 3
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int r = 0; r <= n + 1; ++r)
                for (auto kind : {MonoidKind::IS, MonoidKind::PT, MonoidKind::T})
                    CHECK_NOTHROW(graded_quotient_dim(kind, m, n, r));
}

TEST_CASE("bitableau minors") {
    SkewShape one{Partition({1})};
    Tableau S1, T1;
    S1.shape = T1.shape = one;
    S1.entries = {{2}};
    T1.entries = {{1}};
    CHECK(bitableau_minor(S1, T1, 2, 2).to_string() == "x[2,1]");

    SkewShape row{Partition({2})};
    Tableau S2, T2;
    S2.shape = T2.shape = row;
    S2.entries = {{1, 2}};
    T2.entries = {{1, 2}};
    SparsePolynomial det = bitableau_minor(S2, T2, 2, 2);
    SparsePolynomial expect =
        SparsePolynomial::variable(2, 2, 1, 1) * SparsePolynomial::variable(2, 2, 2, 2);
    SparsePolynomial cross =
        SparsePolynomial::variable(2, 2, 1, 2) * SparsePolynomial::variable(2, 2, 2, 1);
    cross *= Rat(-1);
    expect += cross;
    expect -= det;
    CHECK(expect.is_zero());

    SkewShape col{Partition({1, 1})};
    Tableau S3, T3;
    S3.shape = T3.shape = col;
    S3.entries = {{1}, {2}};
    T3.entries = {{1}, {1}};
    CHECK(bitableau_minor(S3, T3, 2, 2).to_string() == "x[1,1]*x[2,1]");
}

TEST_CASE("bitableaux with a repeated entry die in J(IS)") {
    DegreeBasis basis = DegreeBasis::make(2, 2, 2);
    SparseReducer red;
    for (auto& g : ideal_generators(MonoidKind::IS, 2, 2))
        red.add(basis.coords(g));
    SkewShape row{Partition({2})};
    Tableau S, T;
    S.shape = T.shape = row;
    S.entries = {{1, 1}};  // repeated row entry: the minor itself vanishes
    T.entries = {{1, 2}};
    CHECK(bitableau_minor(S, T, 2, 2).is_zero());
    // repeated entry across rows of S
    SkewShape col{Partition({1, 1})};
    Tableau S2, T2;
    S2.shape = T2.shape = col;
    S2.entries = {{1}, {1}};
    T2.entries = {{1}, {2}};
    SparsePolynomial p = bitableau_minor(S2, T2, 2, 2);
    CHECK(!p.is_zero());
    CHECK(red.contains(basis.coords(p)));
}

TEST_CASE("sampled repeated-entry membership in J(IS) at m = n = 3") {
    std::mt19937_64 rng(99);
    for (int r = 2; r <= 3; ++r) {
        DegreeBasis basis = DegreeBasis::make(3, 3, r);
        SparseReducer red;
        for (auto& g : ideal_generators(MonoidKind::IS, 3, 3)) {
            DegreeBasis lower = DegreeBasis::make(3, 3, r - 2);
            for (auto& mono : lower.mons) {
                SparsePolynomial mp(3, 3);
                mp.terms.emplace(mono, Rat(1));
                red.add(basis.coords(mp * g));
            }
        }
        std::uniform_int_distribution<int> entry(1, 3);
        for (auto& lambda : enumerate_partitions(r))
            for (int t = 0; t < 20; ++t) {
                SkewShape shape{lambda};
                Tableau S, T;
                S.shape = T.shape = shape;
                S.entries.resize(shape.rows());
                T.entries.resize(shape.rows());
                for (int i = 0; i < shape.rows(); ++i) {
                    S.entries[i].assign(shape.row_len(i), 0);
                    T.entries[i].assign(shape.row_len(i), 0);
                    for (int j = 0; j < shape.row_len(i); ++j) {
                        S.entries[i][j] = entry(rng);
                        T.entries[i][j] = entry(rng);
                    }
                }
                // force a duplicate in S
                auto cells = shape.cells();
                auto [ci, cj] = cells[0];
                auto [di, dj] = cells[1 % cells.size()];
                Tableau S2 = S.with_entry(di, dj, S.at(ci, cj));
                SparsePolynomial p = bitableau_minor(S2, T, 3, 3);
                if (!p.is_zero()) CHECK(red.contains(basis.coords(p)));
            }
    }
}

TEST_CASE("Cauchy filtration of the polynomial ring") {
    Report a = cauchy_filtration_check(2, 2, 2);
    CHECK(a.passed());
    CHECK(a.data["total"] == 10);

    Report b = cauchy_filtration_check(2, 3, 1);
    CHECK(b.passed());
    CHECK(b.data["total"] == 6);

    Report c = cauchy_filtration_check(2, 3, 2);
    CHECK(c.passed());
    CHECK(c.data["total"] == 21);  // 1*3 + 3*6
}

TEST_CASE("theorem m2 chains") {
    Report a = cauchy_quotient_check(MonoidKind::IS, 2, 2, 2, true);
    CHECK(a.passed());

    Report b = cauchy_quotient_check(MonoidKind::T, 3, 2, 1, true);
    CHECK(b.passed());
    bool found = false;
    for (auto& step : b.data["steps"])
        if (step["lambda"] == "1") {
            CHECK(step["quotient_dim"] == 4);
            found = true;
        }
    CHECK(found);

    // r > n: the whole degree component collapses into the ideal
    Report c = cauchy_quotient_check(MonoidKind::PT, 2, 2, 3, false);
    CHECK(c.passed());
    for (auto& step : c.data["steps"]) CHECK(step["quotient_dim"] == 0);

    // r = 0: a single trivial factor
    Report d = cauchy_quotient_check(MonoidKind::IS, 2, 2, 0, true);
    CHECK(d.passed());
    CHECK(graded_quotient_dim(MonoidKind::T, 2, 3, 0).dim == 1);
}

TEST_CASE("replacement sums lie in J(T)") {
    CHECK(replacement_sum_check(2, 2, Partition({1}), 10, 7).passed());
    CHECK(replacement_sum_check(2, 2, Partition({2}), 20, 7).passed());
    CHECK(replacement_sum_check(3, 2, Partition({1, 1}), 20, 7).passed());
}
