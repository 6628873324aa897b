#include <doctest.h>

#include "mtab/combinatorics.hpp"
#include "mtab/rational.hpp"

using namespace mtab;

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition{});

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    auto p5 = enumerate_partitions(5, 2);
    REQUIRE(p5.size() == 3);
    CHECK(p5[0] == Partition({5}));
    CHECK(p5[1] == Partition({4, 1}));
    CHECK(p5[2] == Partition({3, 2}));

    // p(r) sanity
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK(enumerate_partitions(8).size() == 22);
}

TEST_CASE("conjugation is an involution up to r = 8") {
    for (int r = 0; r <= 8; ++r)
        for (auto& p : enumerate_partitions(r)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().size() == p.size());
        }
}

TEST_CASE("partition parsing ignores zeros and rejects junk") {
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(Partition::parse("2,1,0,0") == Partition({2, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK(SkewShape::parse("2,1/1").inner == Partition({1}));
    CHECK(SkewShape::parse("2,1").size() == 3);
}

TEST_CASE("tableau enumeration follows the rows-strict convention") {
    // strict along rows: shape (2), n=3 -> {12, 13, 23}
    auto row2 = enumerate_tableaux(SkewShape(Partition({2})), 3, TableauKind::Semistandard);
    REQUIRE(row2.size() == 3);
    CHECK(row2[0].entries[0] == std::vector<int>{1, 2});
    CHECK(row2[2].entries[0] == std::vector<int>{2, 3});

    // strict down columns for co-semistandard: shape (1,1), n=2
    auto col2 = enumerate_tableaux(SkewShape(Partition({1, 1})), 2, TableauKind::CoSemistandard);
    REQUIRE(col2.size() == 1);
    CHECK(col2[0].entries[0][0] == 1);
    CHECK(col2[0].entries[1][0] == 2);

    // standard (2,1)-distinct over [3]
    auto sd = enumerate_tableaux(SkewShape(Partition({2, 1})), 3, TableauKind::StandardDistinct);
    CHECK(sd.size() == 2);

    // weak columns allow repeats down a column
    auto weak = enumerate_tableaux(SkewShape(Partition({1, 1})), 2, TableauKind::Semistandard);
    CHECK(weak.size() == 3);  // 11, 12, 22 down the column

    // row-reading-word order is lexicographic
    auto all = enumerate_tableaux(SkewShape(Partition({2, 1})), 2, TableauKind::All);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].row_word() < all[i].row_word());
    CHECK(all.size() == 8);
}

TEST_CASE("count_standard") {
    CHECK(count_standard(SkewShape(Partition({2, 1}))) == 2);
    for (int r = 1; r <= 5; ++r) CHECK(count_standard(SkewShape(Partition({r}))) == 1);
    CHECK(count_standard(SkewShape(Partition({2, 2}), Partition({1}))) == 2);
    CHECK(count_standard(SkewShape()) == 1);
    // conjugation invariance of the count
    for (int r = 0; r <= 6; ++r)
        for (auto& l : enumerate_partitions(r))
            for (auto& mu : subpartitions(l))
                CHECK(count_standard(SkewShape(l, mu)) ==
                      count_standard(SkewShape(l.conjugate(), mu.conjugate())));
}

TEST_CASE("standard (lambda,n,r) tableau count is binom(n,r) f") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= n; ++r)
            for (auto& l : enumerate_partitions(r)) {
                long long count = static_cast<long long>(
                    enumerate_tableaux(SkewShape(l), n, TableauKind::StandardDistinct).size());
                CHECK(count == binomial(n, r) * count_standard(SkewShape(l)));
            }
}

TEST_CASE("semistandard counts equal column-strict counts of the conjugate") {
    for (int r = 0; r <= 5; ++r)
        for (auto& l : enumerate_partitions(r))
            for (int n = 1; n <= 4; ++n) {
                auto sst = enumerate_tableaux(SkewShape(l), n, TableauKind::Semistandard);
                // brute force: column-strict fillings of the conjugate shape
                long long brute = 0;
                for (auto& T : enumerate_tableaux(SkewShape(l.conjugate()), n, TableauKind::All)) {
                    bool ok = true;
                    const SkewShape& sh = T.shape;
                    for (int i = 0; i < sh.rows() && ok; ++i)
                        for (int j = sh.row_begin(i); j < sh.row_end(i) && ok; ++j) {
                            if (j > sh.row_begin(i) && T.at(i, j - 1) > T.at(i, j)) ok = false;
                            if (i > 0 && sh.row_begin(i - 1) <= j && j < sh.row_end(i - 1) &&
                                T.at(i - 1, j) >= T.at(i, j))
                                ok = false;
                        }
                    if (ok) ++brute;
                }
                CHECK(static_cast<long long>(sst.size()) == brute);
            }
}

TEST_CASE("horizontal strips") {
    auto hs = horizontal_strip_extensions(Partition({2}), 3);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0] == Partition({3}));
    CHECK(hs[1] == Partition({2, 1}));

    auto fixed = horizontal_strip_extensions(Partition({2, 1}), 3);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == Partition({2, 1}));

    auto one = horizontal_strip_extensions(Partition({1}), 3);
    REQUIRE(one.size() == 2);  // (1,1,1) excluded: two added cells share a column
    CHECK(one[0] == Partition({3}));
    CHECK(one[1] == Partition({2, 1}));
}

TEST_CASE("intermediate partitions") {
    auto i1 = intermediate_partitions(Partition({2}), Partition{}, 1, 3);
    REQUIRE(i1.size() == 2);
    CHECK(i1[0] == Partition{});
    CHECK(i1[1] == Partition({1}));

    auto forced = intermediate_partitions(Partition({2, 1}), Partition({2, 1}), 1, 3);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0] == Partition({2, 1}));

    // both bounds apply: |nu/mu| <= s and |lambda/nu| <= n-s
    auto i2 = intermediate_partitions(Partition({2, 1}), Partition({1}), 2, 3);
    REQUIRE(i2.size() == 3);
    CHECK(i2[0] == Partition({1, 1}));
    CHECK(i2[1] == Partition({2}));
    CHECK(i2[2] == Partition({2, 1}));
}

TEST_CASE("weights") {
    WeightVector w{{1, 0, 2}};
    CHECK(w.total() == 3);
    CHECK(!w.all01());
    CHECK(w.some_ge2());
    // sigma = (1 2): coordinates move with the positions
    WeightVector p = w.permuted({2, 1, 3});
    CHECK(p.coords == std::vector<int>{0, 1, 2});
}

TEST_CASE("branching identity for standard counts") {
    for (int k = 0; k <= 5; ++k)
        for (auto& lambda : enumerate_partitions(k))
            for (auto& mu : subpartitions(lambda)) {
                int r = lambda.size() - mu.size();
                for (int t = 0; t <= r; ++t) {
                    long long sum = 0;
                    for (auto& nu : subpartitions(lambda))
                        if (nu.contains(mu) && nu.size() == mu.size() + t)
                            sum += count_standard(SkewShape(nu, mu)) *
                                   count_standard(SkewShape(lambda, nu));
                    CHECK(sum == count_standard(SkewShape(lambda, mu)));
                }
            }
}
