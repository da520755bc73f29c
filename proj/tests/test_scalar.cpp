#include <doctest.h>

#include "sbrep/sampling.hpp"
#include "sbrep/scalar.hpp"
#include "support/test_util.hpp"

using namespace sbrep;
using namespace sbrep::testutil;

TEST_CASE("rational construction stays canonical") {
    Rational q = rational_from_strings("4", "6");
    CHECK(q.get_num() == 2);
    CHECK(q.get_den() == 3);
    CHECK(rational_from_literal("-8/4") == Rational(-2));
    CHECK(rational_from_literal("7") == Rational(7));
    CHECK(thrown_code([] { rational_from_strings("1", "0"); }) == Errc::division_by_zero);
    CHECK(thrown_code([] { rational_from_literal("x"); }) == Errc::parse_error);
}

TEST_CASE("rational_sqrt detects perfect squares") {
    CHECK(*rational_sqrt(Rational(4)) == 2);
    CHECK(*rational_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(-4)).has_value());
    CHECK(*rational_sqrt(Rational(0)) == 0);
}

TEST_CASE("gaussian arithmetic basics") {
    GaussianRational i = GaussianRational::i();
    CHECK((g(1) + i) * (g(1) - i) == g(2));  // conjugate product
    CHECK(i * i == g(-1));
    CHECK((g(3) / g(2)) == g(3, 2));
    CHECK(gi(1, 1).inverse() == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(gi(2, -3).conj() == gi(2, 3));
    CHECK(gi(2, -3).norm() == Rational(13));
    CHECK(thrown_code([] { g(0).inverse(); }) == Errc::division_by_zero);
}

TEST_CASE("gaussian powers, including negative") {
    GaussianRational i = GaussianRational::i();
    CHECK(i.pow(4) == g(1));
    CHECK(gi(1, 1).pow(2) == gi(0, 2));
    CHECK(g(2).pow(-3) == g(1, 8));
    CHECK(gi(1, 1).pow(-1) * gi(1, 1) == g(1));
}

TEST_CASE("gaussian literals") {
    CHECK(gaussian_from_literal("2") == g(2));
    CHECK(gaussian_from_literal("-3/2") == g(-3, 2));
    CHECK(gaussian_from_literal("i") == gi(0, 1));
    CHECK(gaussian_from_literal("-i") == gi(0, -1));
    CHECK(gaussian_from_literal("1+i") == gi(1, 1));
    CHECK(gaussian_from_literal("2-3/4i") == GaussianRational(Rational(2), Rational(-3, 4)));
    CHECK(gaussian_from_literal("1/2 + 1/2i") == GaussianRational(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("field axioms on randomized triples") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = random_pool_value(rng), b = random_pool_value(rng),
                         c = random_pool_value(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == g(1));
        CHECK(a + (-a) == g(0));
    }
}

TEST_CASE("gaussian_sqrt over Q(i)") {
    CHECK(*gaussian_sqrt(g(4)) == g(2));
    CHECK(*gaussian_sqrt(g(-1)) == gi(0, 1));
    CHECK(*gaussian_sqrt(gi(0, 2)) == gi(1, 1));  // (1+i)^2 = 2i
    CHECK(*gaussian_sqrt(g(9, 4)) == g(3, 2));
    CHECK(!gaussian_sqrt(g(2)).has_value());
    CHECK(!gaussian_sqrt(gi(0, 1)).has_value());   // sqrt(i) is not in Q(i)
    CHECK(!gaussian_sqrt(gi(1, 2)).has_value());
    CHECK(*gaussian_sqrt(gi(-3, 4)) == gi(1, 2));  // (1+2i)^2 = -3+4i
}

TEST_CASE("gaussian_sqrt squares back on random squares") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational z = random_pool_value(rng);
        auto root = gaussian_sqrt(z * z);
        REQUIRE(root.has_value());
        CHECK(*root * *root == z * z);
    }
}
