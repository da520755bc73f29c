#include <doctest.h>

#include "sbrep/laurent.hpp"
#include "sbrep/sampling.hpp"
#include "support/test_util.hpp"

using namespace sbrep;
using namespace sbrep::testutil;

namespace {

LaurentPoly random_laurent(Rng& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), exp(-3, 3);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        p += LaurentPoly::monomial(exp(rng), random_pool_value(rng));
    return p;
}

}  // namespace

TEST_CASE("unit inverse: t * t^-1 = 1") {
    CHECK(LaurentPoly::t() * LaurentPoly::t(-1) == LaurentPoly(1));
    CHECK(LaurentPoly::t(5).unit_inverse() == LaurentPoly::t(-5));
    LaurentPoly m = LaurentPoly::monomial(2, gi(0, 1));
    CHECK(m * m.unit_inverse() == LaurentPoly(1));
}

TEST_CASE("difference of squares: (1-t)(1+t) = 1-t^2") {
    LaurentPoly one(1), t = LaurentPoly::t();
    LaurentPoly expect = one - t * t;
    CHECK((one - t) * (one + t) == expect);
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly p = t - t;
    CHECK(p.is_zero());
    CHECK(p.coeffs().empty());
    LaurentPoly q = (LaurentPoly(1) + t) - t;
    CHECK(q.coeffs().size() == 1);
}

TEST_CASE("division restricted to monomials") {
    LaurentPoly t = LaurentPoly::t();
    CHECK((t * t) / t == t);
    CHECK((LaurentPoly(1) - t) / LaurentPoly(2) ==
          LaurentPoly(g(1, 2)) - LaurentPoly::monomial(1, g(1, 2)));
    CHECK(thrown_code([&] { auto r = t / (LaurentPoly(1) + t); (void)r; }) ==
          Errc::non_unit_laurent_divisor);
    CHECK(thrown_code([&] { auto r = t / LaurentPoly(0); (void)r; }) == Errc::division_by_zero);
}

TEST_CASE("evaluation examples") {
    LaurentPoly one(1), t = LaurentPoly::t();
    CHECK((one - t).eval(g(2)) == g(-1));
    CHECK(LaurentPoly::t(-1).eval(g(1, 2)) == g(2));
    // 1 - t^2 at t = i evaluates to 2, since i^2 = -1
    CHECK((one - t * t).eval(gi(0, 1)) == g(2));
}

TEST_CASE("evaluation at zero") {
    LaurentPoly t = LaurentPoly::t();
    CHECK((LaurentPoly(3) + t).eval(g(0)) == g(3));
    CHECK(thrown_code([&] { LaurentPoly::t(-1).eval(g(0)); }) == Errc::eval_at_zero);
}

TEST_CASE("eval is a ring homomorphism on random pairs") {
    Rng rng(23);
    const GaussianRational points[] = {g(2), g(1, 2), gi(0, 1), gi(1, 1)};
    for (int trial = 0; trial < 150; ++trial) {
        LaurentPoly p = random_laurent(rng), q = random_laurent(rng);
        const GaussianRational& t0 = points[trial % 4];
        CHECK((p * q).eval(t0) == p.eval(t0) * q.eval(t0));
        CHECK((p + q).eval(t0) == p.eval(t0) + q.eval(t0));
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}
