#include <doctest.h>

#include <random>

#include "growth/errors.hpp"
#include "growth/symgroup.hpp"
#include "oracles.hpp"

using namespace growth;

namespace {

GroupAlgebraElement random_element(int n, std::mt19937_64& rng) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    std::uniform_int_distribution<std::size_t> perm(0, fact - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    GroupAlgebraElement e(n);
    for (int t = 0; t < 4; ++t) e.add_term(Permutation::unrank(n, perm(rng)), coeff(rng));
    return e;
}

}  // namespace

TEST_CASE("composition convention") {
    // (sigma tau)(i) = sigma(tau(i)), pinned on the documented example
    Permutation s = Permutation::one_line({2, 1, 3});
    Permutation t = Permutation::one_line({1, 3, 2});
    CHECK(compose(s, t) == Permutation::one_line({2, 3, 1}));
    CHECK(compose(Permutation::identity(3), t) == t);
    CHECK(compose(s, s.inverse()) == Permutation::identity(3));
    CHECK_THROWS_AS(compose(s, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("sign and rank") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation::one_line({2, 1, 3}).sign() == -1);
    CHECK(Permutation::one_line({2, 3, 1}).sign() == 1);  // 3-cycle
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_permutations(n);
        for (std::size_t r = 0; r < perms.size(); ++r) {
            CHECK(perms[r].rank() == r);
            CHECK(Permutation::unrank(n, r) == perms[r]);
        }
    }
}

TEST_CASE("group algebra product") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        GroupAlgebraElement a = random_element(n, rng);
        GroupAlgebraElement b = random_element(n, rng);
        GroupAlgebraElement c = random_element(n, rng);
        CHECK(ga_multiply(ga_multiply(a, b), c) == ga_multiply(a, ga_multiply(b, c)));
        GroupAlgebraElement unit = GroupAlgebraElement::basis(Permutation::identity(n));
        CHECK(ga_multiply(a, unit) == a);
        CHECK(ga_multiply(unit, a) == a);
        GroupAlgebraElement zero(n);
        CHECK(ga_multiply(a, zero).is_zero());
        // translation permutes coefficients bijectively
        Permutation s = Permutation::unrank(n, 1);
        CHECK(left_translate(s, a).term_count() == a.term_count());
        CHECK(right_translate(a, s).term_count() == a.term_count());
    }
}

TEST_CASE("row symmetrizer and column antisymmetrizer") {
    // single row: the full symmetrizer e_(n)
    GroupAlgebraElement full = row_symmetrizer(YoungTableau::row_filled(Partition({4})));
    CHECK(full.term_count() == 24);
    for (const auto& [p, c] : full.terms()) CHECK(c == 1);
    // single column: trivial row groups
    YoungTableau col = YoungTableau::row_filled(Partition({1, 1, 1}));
    CHECK(row_symmetrizer(col) == GroupAlgebraElement::basis(Permutation::identity(3)));
    // column antisymmetrizer of a single row is the unit
    CHECK(column_antisymmetrizer(YoungTableau::row_filled(Partition({3}))) ==
          GroupAlgebraElement::basis(Permutation::identity(3)));
    // full antisymmetrizer: signs match permutation parity
    GroupAlgebraElement anti = column_antisymmetrizer(col);
    CHECK(anti.term_count() == 6);
    for (const auto& [p, c] : anti.terms()) CHECK(c == p.sign());
    // shape (2,1): rows {1,2},{3} and columns {1,3},{2}
    YoungTableau t21 = YoungTableau::row_filled(Partition({2, 1}));
    GroupAlgebraElement r = row_symmetrizer(t21);
    CHECK(r.coefficient(Permutation::identity(3)) == 1);
    CHECK(r.coefficient(Permutation::one_line({2, 1, 3})) == 1);
    CHECK(r.term_count() == 2);
    GroupAlgebraElement c = column_antisymmetrizer(t21);
    CHECK(c.coefficient(Permutation::identity(3)) == 1);
    CHECK(c.coefficient(Permutation::one_line({3, 2, 1})) == -1);
    CHECK(c.term_count() == 2);
}

TEST_CASE("semi-idempotent: e_T e_T = (n!/f^lambda) e_T") {
    CHECK(ga_multiply(semi_idempotent(YoungTableau::row_filled(Partition({1, 1}))),
                      semi_idempotent(YoungTableau::row_filled(Partition({1, 1}))))
              .coefficient(Permutation::identity(2)) == 2);
    for (int n = 2; n <= 6; ++n)
        for (const Partition& p : partitions_of(n)) {
            GroupAlgebraElement e = semi_idempotent(YoungTableau::row_filled(p));
            CHECK(!e.is_zero());
            BigInt scalar = factorial(static_cast<unsigned>(n)) / dimension(p);
            GroupAlgebraElement scaled = e;
            scaled *= Rational(scalar);
            CHECK(ga_multiply(e, e) == scaled);
        }
}

TEST_CASE("left ideal of e_T realizes the irreducible of dimension f^lambda") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(BigInt(left_ideal_rank(semi_idempotent(YoungTableau::row_filled(p)))) ==
                  dimension(p));
}

TEST_CASE("echelon engine agrees with naive rational elimination") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> dims(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = dims(rng), cols = dims(rng);
        RowEchelon ech(cols);
        std::vector<std::vector<Rational>> naive;
        for (int r = 0; r < rows; ++r) {
            std::vector<std::int64_t> row(static_cast<std::size_t>(cols));
            std::vector<Rational> qrow(static_cast<std::size_t>(cols));
            for (int cidx = 0; cidx < cols; ++cidx) {
                int v = entry(rng);
                row[static_cast<std::size_t>(cidx)] = v;
                qrow[static_cast<std::size_t>(cidx)] = v;
            }
            ech.insert(row);
            naive.push_back(std::move(qrow));
        }
        CHECK(ech.rank() == testing::naive_rank(naive));
    }
}

TEST_CASE("echelon kernel data is consistent") {
    // rows 1 0 1 / 0 1 1: kernel spanned by (1,1,-1)
    RowEchelon ech(3);
    ech.insert({1, 0, 1});
    ech.insert({0, 1, 1});
    ech.finalize();
    CHECK(ech.rank() == 2);
    REQUIRE(ech.free_columns() == std::vector<int>{2});
    CHECK(ech.normalized_entry(0, 2) == Rational(1));
    CHECK(ech.normalized_entry(1, 2) == Rational(1));
    // membership
    CHECK(ech.in_row_space({1, 1, 2}));
    CHECK(!ech.in_row_space({1, 1, 1}));
}

TEST_CASE("echelon back-substitution scales whole rows") {
    // pivot values != 1 force a genuine row rescale during finalize
    RowEchelon ech(3);
    ech.insert({1, 1, 1});
    ech.insert({0, 2, 1});
    ech.finalize();
    CHECK(ech.rank() == 2);
    REQUIRE(ech.free_columns() == std::vector<int>{2});
    // kernel vector (-1/2, -1/2, 1)
    CHECK(ech.normalized_entry(0, 2) == Rational(1, 2));
    CHECK(ech.normalized_entry(1, 2) == Rational(1, 2));
}

TEST_CASE("echelon finalize against random matrices: kernel really vanishes") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> dims(2, 9);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = dims(rng), cols = dims(rng);
        std::vector<std::vector<std::int64_t>> saved;
        RowEchelon ech(cols);
        for (int r = 0; r < rows; ++r) {
            std::vector<std::int64_t> row(static_cast<std::size_t>(cols));
            for (auto& v : row) v = entry(rng);
            saved.push_back(row);
            ech.insert(row);
        }
        ech.finalize();
        // every kernel basis vector annihilates every original row
        for (int f : ech.free_columns()) {
            std::vector<Rational> kv(static_cast<std::size_t>(cols), Rational(0));
            kv[static_cast<std::size_t>(f)] = 1;
            for (int c : ech.pivot_columns()) kv[static_cast<std::size_t>(c)] = -ech.normalized_entry(c, f);
            for (const auto& row : saved) {
                Rational dot = 0;
                for (int j = 0; j < cols; ++j) dot += kv[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("echelon engine survives int64 overflow by widening") {
    RowEchelon ech(2);
    std::int64_t big = (std::int64_t(1) << 62) - 1;
    ech.insert({big, 1});
    ech.insert({1, big});
    CHECK(ech.rank() == 2);
    ech.finalize();
    CHECK(ech.pivot_columns() == std::vector<int>{0, 1});
}
