#include <doctest.h>

#include "mtab/cauchy.hpp"
#include "mtab/harmonics.hpp"

using namespace mtab;

TEST_CASE("vanishing ideals on small loci") {
    // single point: one evaluation constraint of rank 1
    PointLocus one;
    one.kind = MonoidKind::Sym;
    one.n = 2;
    one.points = {PartialTransformation::identity(2)};
    one.supports = {0b1001};  // cells (1,1) and (2,2)
    Subspace k1 = vanishing_ideal_upto(one, 1);
    CHECK(k1.dim() == 1 + 4 - 1);

    // IS_1 = {0, 1} in one variable: x^2 - x vanishes
    PointLocus is1 = PointLocus::from_monoid(MonoidKind::IS, 1);
    Subspace k2 = vanishing_ideal_upto(is1, 2);
    // coordinates: [1 | x | x^2]
    RatVec xx_minus_x = {Rat(0), Rat(-1), Rat(1)};
    CHECK(k2.contains(xx_minus_x));

    // T_2: column sums are 1 on every point
    PointLocus t2 = PointLocus::from_monoid(MonoidKind::T, 2);
    Subspace k3 = vanishing_ideal_upto(t2, 1);
    // degree-1 block order: x11 > x12 > x21 > x22
    RatVec col1 = {Rat(-1), Rat(1), Rat(0), Rat(1), Rat(0)};
    RatVec col2 = {Rat(-1), Rat(0), Rat(1), Rat(0), Rat(1)};
    CHECK(k3.contains(col1));
    CHECK(k3.contains(col2));
}

TEST_CASE("associated graded slices") {
    PointLocus is1 = PointLocus::from_monoid(MonoidKind::IS, 1);
    Subspace top = associated_graded_slice(is1, 2);
    CHECK(top.dim() == 1);  // span{x^2}

    CHECK(associated_graded_slice(is1, 0).dim() == 0);

    PointLocus t2 = PointLocus::from_monoid(MonoidKind::T, 2);
    Subspace lin = associated_graded_slice(t2, 1);
    CHECK(lin.dim() == 2);
    RatVec c1 = {Rat(1), Rat(0), Rat(1), Rat(0)};  // x11 + x21
    RatVec c2 = {Rat(0), Rat(1), Rat(0), Rat(1)};  // x12 + x22
    CHECK(lin.contains(c1));
    CHECK(lin.contains(c2));
}

TEST_CASE("gr slices match the ideal component explicitly at n = 2") {
    for (MonoidKind kind : {MonoidKind::IS, MonoidKind::PT, MonoidKind::T}) {
        PointLocus locus = PointLocus::from_monoid(kind, 2);
        auto gens = ideal_generators(kind, 2, 2);
        for (int d = 1; d <= 4; ++d) {
            DegreeBasis basis = DegreeBasis::make(2, 2, d);
            SparseReducer red;
            for (auto& g : gens) {
                if (g.degree() > d) continue;
                DegreeBasis lower = DegreeBasis::make(2, 2, d - g.degree());
                for (auto& mono : lower.mons) {
                    SparsePolynomial p(2, 2);
                    p.terms.emplace(mono, Rat(1));
                    red.add(basis.coords(p * g));
                }
            }
            std::vector<RatVec> rows;
            for (auto& v : red.rref_rows()) rows.push_back(v.dense(basis.dim()));
            Subspace J = Subspace::from_spanning(basis.dim(), rows);
            CHECK(J == associated_graded_slice(locus, d));
        }
    }
}

TEST_CASE("gr slices are multiplicatively closed (n = 2)") {
    PointLocus locus = PointLocus::from_monoid(MonoidKind::PT, 2);
    for (int d = 1; d <= 3; ++d) {
        Subspace s = associated_graded_slice(locus, d);
        Subspace next = associated_graded_slice(locus, d + 1);
        DegreeBasis bd = DegreeBasis::make(2, 2, d);
        DegreeBasis bn = DegreeBasis::make(2, 2, d + 1);
        for (int i = 0; i < s.dim(); ++i) {
            SparsePolynomial p(2, 2);
            for (int c = 0; c < bd.dim(); ++c)
                if (s.basis.at(i, c) != 0) p.terms.emplace(bd.mons[c], s.basis.at(i, c));
            for (int v = 1; v <= 2; ++v)
                for (int w = 1; w <= 2; ++w) {
                    SparsePolynomial q = p * SparsePolynomial::variable(2, 2, v, w);
                    CHECK(next.contains(bn.coords(q).dense(bn.dim())));
                }
        }
    }
}

TEST_CASE("gr slices are stable under the acting pair (n = 2)") {
    // acting pairs as in the ideal-stability statements: IS x IS for the rook
    // locus, permutations x T for the full transformation locus
    for (MonoidKind kind : {MonoidKind::IS, MonoidKind::T}) {
        PointLocus locus = PointLocus::from_monoid(kind, 2);
        std::vector<PartialTransformation> lefts, rights;
        rights = enumerate_monoid(kind, 2);
        if (kind == MonoidKind::IS)
            lefts = rights;
        else
            lefts = enumerate_monoid(MonoidKind::Sym, 2);
        for (int d = 1; d <= 2; ++d) {
            Subspace s = associated_graded_slice(locus, d);
            DegreeBasis basis = DegreeBasis::make(2, 2, d);
            for (auto& A : lefts)
                for (auto& B : rights)
                    for (int i = 0; i < s.dim(); ++i) {
                        SparsePolynomial p(2, 2);
                        for (int c = 0; c < basis.dim(); ++c)
                            if (s.basis.at(i, c) != 0)
                                p.terms.emplace(basis.mons[c], s.basis.at(i, c));
                        SparsePolynomial q = p.acted(SubstitutionCols::from_partial(A),
                                                     SubstitutionCols::from_partial(B));
                        CHECK(s.contains(basis.coords(q).dense(basis.dim())));
                    }
        }
    }
}

TEST_CASE("gr equals J for the three monoids at n <= 2") {
    Report is2 = check_gr_equals_J(MonoidKind::IS, 2, 4);
    CHECK(is2.passed());
    CHECK(is2.data["total"] == 7);
    CHECK(is2.data["hilbert"] == nlohmann::json({1, 4, 2}));

    Report t2 = check_gr_equals_J(MonoidKind::T, 2, 4);
    CHECK(t2.passed());
    CHECK(t2.data["total"] == 4);

    Report pt1 = check_gr_equals_J(MonoidKind::PT, 1, 2);
    CHECK(pt1.passed());
    CHECK(pt1.data["total"] == 2);
}

TEST_CASE("hilbert functions") {
    CHECK(hilbert_function(MonoidKind::IS, 2) == std::vector<long long>({1, 4, 2}));
    CHECK(hilbert_function(MonoidKind::PT, 2) == std::vector<long long>({1, 4, 4}));
    CHECK(hilbert_function(MonoidKind::T, 2) == std::vector<long long>({1, 2, 1}));
    CHECK(hilbert_function(MonoidKind::PT, 1) == std::vector<long long>({1, 1}));
    // totals = |Z| are asserted inside; exercise n = 3 for one kind here
    auto h = hilbert_function(MonoidKind::T, 3);
    long long total = 0;
    for (auto q : h) total += q;
    CHECK(total == 27);
}
