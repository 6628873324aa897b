#include <doctest.h>

#include <random>

#include "mtab/monoid.hpp"

using namespace mtab;

TEST_CASE("cardinalities match the closed forms") {
    CHECK(enumerate_monoid(MonoidKind::IS, 2).size() == 7);
    CHECK(enumerate_monoid(MonoidKind::PT, 2).size() == 9);
    CHECK(enumerate_monoid(MonoidKind::T, 1).size() == 1);
    for (int n = 1; n <= 4; ++n)
        for (auto kind : {MonoidKind::IS, MonoidKind::PT, MonoidKind::T, MonoidKind::Sym})
            CHECK(static_cast<long long>(enumerate_monoid(kind, n).size()) ==
                  monoid_cardinality_formula(kind, n));
    CHECK_THROWS(enumerate_monoid(MonoidKind::PT, 7));
}

TEST_CASE("composition matches matrix multiplication") {
    std::mt19937_64 rng(13);
    auto pt3 = enumerate_monoid(MonoidKind::PT, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pt3.size()) - 1);
    for (int t = 0; t < 50; ++t) {
        auto &a = pt3[pick(rng)], &b = pt3[pick(rng)];
        CHECK(a.compose(b).matrix() == a.matrix() * b.matrix());
    }
    auto id = PartialTransformation::identity(3);
    for (int t = 0; t < 10; ++t) {
        auto& a = pt3[pick(rng)];
        CHECK(id.compose(a) == a);
        CHECK(a.compose(id) == a);
    }
    // empty domain absorbs
    PartialTransformation empty(2, {0, 0});
    PartialTransformation f(2, {2, 1});
    CHECK(empty.compose(f) == empty);
    CHECK(f.compose(empty) == empty);
    CHECK_THROWS(f.compose(PartialTransformation::identity(3)));
}

TEST_CASE("composition is associative and closed per kind") {
    std::mt19937_64 rng(17);
    for (auto kind : {MonoidKind::IS, MonoidKind::PT, MonoidKind::T}) {
        auto elems = enumerate_monoid(kind, 3);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
        for (int t = 0; t < 40; ++t) {
            auto &a = elems[pick(rng)], &b = elems[pick(rng)], &c = elems[pick(rng)];
            CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
            CHECK(a.compose(b).in_kind(kind));
        }
    }
}

TEST_CASE("matrix realization") {
    CHECK(PartialTransformation::identity(3).matrix() == RatMatrix::identity(3));
    PartialTransformation p(2, {2, 0});
    RatMatrix m = p.matrix();
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 1) == 0);
    // T_2: the four 0/1 matrices with one 1 per column
    for (auto& e : enumerate_monoid(MonoidKind::T, 2)) {
        RatMatrix em = e.matrix();
        for (int j = 0; j < 2; ++j) {
            Rat colsum = em.at(0, j) + em.at(1, j);
            CHECK(colsum == 1);
        }
    }
}

TEST_CASE("element order and text form") {
    auto pt2 = enumerate_monoid(MonoidKind::PT, 2);
    CHECK(pt2.front().to_string() == "1,1");
    CHECK(pt2.back().to_string() == "-,-");
    CHECK(PartialTransformation::parse("2,-,1").to_string() == "2,-,1");
    CHECK(!PartialTransformation::parse("2,-,1").total());
    CHECK(PartialTransformation::parse("2,-,1").injective());
}

TEST_CASE("block embedding") {
    auto id1 = PartialTransformation::identity(1);
    auto id2 = PartialTransformation::identity(2);
    CHECK(block_embed(id1, id2) == PartialTransformation::identity(3));

    PartialTransformation swap2(2, {2, 1});
    auto t1 = PartialTransformation(1, {1});
    CHECK(block_embed(t1, swap2).to_string() == "1,3,2");

    for (auto& a : enumerate_monoid(MonoidKind::PT, 2))
        for (auto& b : enumerate_monoid(MonoidKind::PT, 2)) {
            RatMatrix big = block_embed(a, b).matrix();
            RatMatrix ma = a.matrix(), mb = b.matrix();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    CHECK(big.at(i, j) == ma.at(i, j));
                    CHECK(big.at(2 + i, 2 + j) == mb.at(i, j));
                    CHECK(big.at(i, 2 + j) == 0);
                    CHECK(big.at(2 + i, j) == 0);
                }
        }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type({2, 1, 3}) == Partition({2, 1}));
    CHECK(cycle_type({2, 3, 1}) == Partition({3}));
    auto rep = cycle_type_representative(Partition({2, 1}), 3);
    CHECK(cycle_type(rep) == Partition({2, 1}));
    long long sum = 0;
    for (auto& rho : enumerate_partitions(5)) sum += conjugacy_class_size(rho);
    CHECK(sum == factorial(5));
}
