#include <doctest.h>
#include <cmath>
#include <atomic>
#include <thread>

#include "growth/combinatorics.hpp"
#include "growth/errors.hpp"
#include "oracles.hpp"

using namespace growth;

TEST_CASE("partition invariants and construction") {
    Partition p({3, 1});
    CHECK(p.n() == 4);
    CHECK(p.length() == 2);
    CHECK(p.column_height(1) == 2);
    CHECK(p.column_height(3) == 1);
    CHECK(p.to_string() == "3,1");
    CHECK(Partition{}.n() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    CHECK(conjugate(Partition({2, 2, 2, 2})) == Partition({4, 4}));
    for (int n = 0; n <= 7; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dimension: hook lengths against standard-tableau enumeration") {
    CHECK(dimension(Partition({6})) == 1);
    CHECK(dimension(Partition({2, 1})) == 2);
    CHECK(dimension(Partition({2, 2, 2, 2})) == 14);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(dimension(p) == testing::count_standard_tableaux(p));
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const Partition& p : partitions_of(n)) sum += dimension(p) * dimension(p);
        CHECK(sum == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("branch_down") {
    CHECK(branch_down(Partition({6})) == std::vector<Partition>{Partition({5})});
    CHECK(branch_down(Partition({2, 2})) == std::vector<Partition>{Partition({2, 1})});
    // hooks split into the two shorter hooks
    auto hooks = branch_down(Partition({4, 1, 1}));
    REQUIRE(hooks.size() == 2);
    CHECK(hooks[0] == Partition({3, 1, 1}));
    CHECK(hooks[1] == Partition({4, 1}));
    // total branching degree: sum over corners of f^mu = f^lambda
    for (const Partition& p : partitions_of(6)) {
        BigInt sum = 0;
        for (const Partition& mu : branch_down(p)) sum += dimension(mu);
        CHECK(sum == dimension(p));
    }
}

TEST_CASE("glue_shapes") {
    CHECK(glue_shapes(Partition({2, 2, 2, 2}), Partition({1, 1, 1, 1})) ==
          Partition({3, 3, 3, 3}));
    CHECK(glue_shapes(Partition({2, 2}), Partition({3})) == Partition({5, 2}));
    CHECK_THROWS_AS(glue_shapes(Partition({2, 1}), Partition({1, 1})),
                    GluePreconditionViolated);
    CHECK(glue_shapes(Partition({4, 4, 4, 4}), Partition({3})) == Partition({7, 4, 4, 4}));
    // partwise sums and sizes
    Partition l({2, 2}), m({2, 1});
    Partition g = glue_shapes(l, m);
    CHECK(g.n() == l.n() + m.n());
    for (int i = 0; i < g.length(); ++i) CHECK(g.part(i) == l.part(i) + m.part(i));
}

TEST_CASE("glue_tableaux") {
    YoungTableau col2(std::vector<std::vector<int>>{{1}, {2}});
    YoungTableau cell(std::vector<std::vector<int>>{{1}});
    YoungTableau glued = glue_tableaux(col2, cell);
    CHECK(glued.shape() == Partition({2, 1}));
    CHECK(glued.entry(0, 0) == 1);
    CHECK(glued.entry(0, 1) == 3);
    CHECK(glued.entry(1, 0) == 2);
    // gluing with the empty tableau is the identity
    CHECK(glue_tableaux(col2, YoungTableau{}) == col2);
    // q copies of the height-4 two-column rectangle widen it
    YoungTableau rect = YoungTableau::row_filled(Partition({2, 2, 2, 2}));
    YoungTableau twice = glue_tableaux(rect, rect);
    CHECK(twice.shape() == Partition({4, 4, 4, 4}));
    YoungTableau thrice = glue_tableaux(twice, rect);
    CHECK(thrice.shape() == Partition({6, 6, 6, 6}));
}

TEST_CASE("tableau predicates") {
    CHECK(YoungTableau::row_filled(Partition({3, 2})).is_standard());
    YoungTableau t(std::vector<std::vector<int>>{{2, 1}, {3}});
    CHECK(!t.is_standard());
    CHECK(t.row_of(3) == 1);
    CHECK_THROWS_AS(YoungTableau(std::vector<std::vector<int>>{{1, 1}, {2}}),
                    std::invalid_argument);
}

TEST_CASE("character values: pins and cross-checks") {
    CHECK(character_value(Partition({2, 1}), CycleType({1, 1, 1})) == 2);
    CHECK(character_value(Partition({2, 1}), CycleType({3})) == -1);
    CHECK(character_value(Partition({2, 1}), CycleType({2, 1})) == 0);
    CHECK(character_value(Partition({2, 2}), CycleType({2, 2})) == 2);
    CHECK_THROWS_AS(character_value(Partition({2, 1}), CycleType({2, 2})), SizeMismatch);
    // trivial and sign characters
    for (int n = 2; n <= 7; ++n)
        for (const Partition& c : partitions_of(n)) {
            CHECK(character_value(Partition({n}), c) == 1);
            CHECK(character_value(Partition(std::vector<int>(n, 1)), c) == class_sign(c));
        }
    // degree = dimension
    for (int n = 1; n <= 8; ++n) {
        CycleType id(std::vector<int>(n, 1));
        for (const Partition& p : partitions_of(n))
            CHECK(BigInt(static_cast<long>(character_value(p, id))) == dimension(p));
    }
    // module-action oracle agrees (independent of Murnaghan-Nakayama)
    for (int n = 2; n <= 5; ++n)
        for (const Partition& p : partitions_of(n))
            for (const Partition& c : partitions_of(n))
                CHECK(testing::character_from_module(p, c) ==
                      Rational(static_cast<long>(character_value(p, c))));
}

TEST_CASE("character cache is safe under concurrent use") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok = true;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (int n = 2; n <= 7; ++n)
                for (const Partition& p : partitions_of(n))
                    for (const Partition& c : partitions_of(n)) {
                        long long v = character_value(p, c);
                        if (w == 0 && c == Partition(std::vector<int>(n, 1)) &&
                            BigInt(static_cast<long>(v)) != dimension(p))
                            ok = false;
                    }
        });
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("character orthogonality") {
    for (int n = 2; n <= 7; ++n) {
        auto parts = partitions_of(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                BigInt sum = 0;
                for (const Partition& c : parts)
                    sum += conjugacy_class_size(c) *
                           BigInt(static_cast<long>(character_value(a, c))) *
                           BigInt(static_cast<long>(character_value(b, c)));
                CHECK(sum == (a == b ? factorial(static_cast<unsigned>(n)) : BigInt(0)));
            }
    }
}

TEST_CASE("class sizes partition n!") {
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const Partition& c : partitions_of(n)) sum += conjugacy_class_size(c);
        CHECK(sum == factorial(static_cast<unsigned>(n)));
    }
    CHECK(conjugacy_class_size(CycleType({3, 1})) == 8);
    CHECK(conjugacy_class_size(CycleType({2, 2})) == 3);
}

TEST_CASE("rectangle growth") {
    for (int m : {1, 5, 20}) CHECK(rectangle_growth(1, m) == doctest::Approx(1.0));
    CHECK(rectangle_growth(2, 2) == doctest::Approx(std::pow(14.0, 0.125)).epsilon(1e-12));
    double prev = 0;
    for (int m = 1; m <= 50; ++m) {
        double g = rectangle_growth(2, m);
        CHECK(g > prev);
        CHECK(g < 4.0);
        prev = g;
    }
    CHECK(rectangle_growth(2, 100) > 3.4);
    // regression pin for the m = 100 value
    CHECK(rectangle_growth(2, 100) == doctest::Approx(3.6720319203).epsilon(1e-9));
}

TEST_CASE("dimension grows along the lower-bound gluing chain") {
    // lambda contains the rectangle mu = (m^4); branching makes f monotone
    for (int n = 8; n <= 16; ++n) {
        int m = n / 4;
        Partition mu(std::vector<int>(4, m));
        Partition lambda = mu;
        if (n % 4) lambda = glue_shapes(mu, Partition({n % 4}));
        CHECK(dimension(lambda) >= dimension(mu));
    }
}
