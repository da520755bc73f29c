#include <doctest.h>

#include "sbrep/matrix.hpp"
#include "sbrep/sampling.hpp"
#include "support/test_util.hpp"

using namespace sbrep;
using namespace sbrep::testutil;

namespace {

LaurentMatrix burau_block() {
    LaurentPoly t = LaurentPoly::t();
    return make_matrix<LaurentPoly>(2,
                                    {LaurentPoly(1) - t, t, LaurentPoly(1), LaurentPoly(0)});
}

}  // namespace

TEST_CASE("identity multiplication") {
    Rng rng(3);
    auto m = random_invertible(rng, 3);
    CHECK(GaussianMatrix::identity(3) * m == m);
    CHECK(m * GaussianMatrix::identity(3) == m);
}

TEST_CASE("standard block squared is t times identity") {
    LaurentPoly t = LaurentPoly::t();
    LaurentMatrix b =
        make_matrix<LaurentPoly>(2, {LaurentPoly(0), t, LaurentPoly(1), LaurentPoly(0)});
    LaurentMatrix sq = b * b;
    CHECK(sq == t * LaurentMatrix::identity(2));
}

TEST_CASE("braid relation for the dim-2 canonical form at (1,-1)") {
    GaussianMatrix s1 = gmat2(g(1), g(1), g(0), g(-1));
    GaussianMatrix s2 = gmat2(g(-1), g(0), g(1), g(1));
    GaussianMatrix lhs = s1 * s2 * s1;
    GaussianMatrix rhs = s2 * s1 * s2;
    GaussianMatrix expect = gmat2(g(0), g(-1), g(-1), g(0));
    CHECK(lhs == expect);
    CHECK(rhs == expect);
}

TEST_CASE("size mismatch is rejected") {
    GaussianMatrix a(2), b(3);
    CHECK(thrown_code([&] { auto r = a * b; (void)r; }) == Errc::size_mismatch);
    CHECK(thrown_code([&] { auto r = a + b; (void)r; }) == Errc::size_mismatch);
}

TEST_CASE("Burau block inverse over the Laurent ring") {
    LaurentMatrix b = burau_block();
    CHECK(b.det() == -LaurentPoly::t());  // a unit
    LaurentMatrix inv = b.inverse();
    LaurentPoly tinv = LaurentPoly::t(-1);
    LaurentMatrix expect = make_matrix<LaurentPoly>(
        2, {LaurentPoly(0), LaurentPoly(1), tinv, (LaurentPoly::t() - LaurentPoly(1)) * tinv});
    CHECK(inv == expect);
    CHECK(b * inv == LaurentMatrix::identity(2));
}

TEST_CASE("diagonal inverse") {
    GaussianMatrix d = gmat2(g(3), g(0), g(0), gi(0, 1));
    GaussianMatrix expect = gmat2(g(1, 3), g(0), g(0), gi(0, -1));
    CHECK(d.inverse() == expect);
}

TEST_CASE("singular matrix is rejected") {
    GaussianMatrix s = gmat2(g(1), g(1), g(1), g(1));
    CHECK(thrown_code([&] { s.inverse(); }) == Errc::singular_matrix);
}

TEST_CASE("non-unit Laurent determinant is rejected on inversion") {
    LaurentPoly t = LaurentPoly::t();
    // det = 1 - t, nonzero but not a monomial
    LaurentMatrix m = make_matrix<LaurentPoly>(
        2, {LaurentPoly(1), t, LaurentPoly(0), LaurentPoly(1) - t});
    CHECK(thrown_code([&] { m.inverse(); }) == Errc::non_unit_determinant);
}

TEST_CASE("inverse round trip on random invertibles") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + trial % 3;
        auto a = random_invertible(rng, m);
        CHECK(a * a.inverse() == GaussianMatrix::identity(m));
        CHECK(a.inverse() * a == GaussianMatrix::identity(m));
    }
}

TEST_CASE("determinant agrees with elimination-free small cases") {
    CHECK(gmat2(g(2), g(3), g(1), g(4)).det() == g(5));
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_invertible(rng, 3);
        auto b = random_invertible(rng, 3);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("block_embed places the block and keeps identity elsewhere") {
    GaussianMatrix swap = gmat2(g(0), g(1), g(1), g(0));
    GaussianMatrix p = block_embed(swap, 1, 3);
    CHECK(p == make_matrix<GaussianRational>(
                   3, {g(0), g(1), g(0), g(1), g(0), g(0), g(0), g(0), g(1)}));

    // Burau sigma_2 at n = 4: block in rows/cols 2,3
    LaurentMatrix s2 = block_embed(burau_block(), 2, 4);
    LaurentPoly t = LaurentPoly::t(), one(1), zero(0);
    LaurentMatrix expect = make_matrix<LaurentPoly>(4, {one, zero, zero, zero,
                                                        zero, one - t, t, zero,
                                                        zero, one, zero, zero,
                                                        zero, zero, zero, one});
    CHECK(s2 == expect);
    CHECK(thrown_code([&] { block_embed(swap, 3, 3); }) == Errc::position_out_of_range);
}

TEST_CASE("block_embed differs from identity only inside the block rows") {
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        auto block = random_invertible(rng, 2);
        int m = 4;
        std::uniform_int_distribution<int> posd(1, m - 1);
        int pos = posd(rng);
        auto e = block_embed(block, pos, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                bool inside = i >= pos - 1 && i <= pos && j >= pos - 1 && j <= pos;
                if (inside) continue;
                CHECK(e(i, j) == (i == j ? g(1) : g(0)));
            }
    }
}

TEST_CASE("laurent matrix evaluation") {
    LaurentMatrix b = burau_block();
    GaussianMatrix at2 = eval_matrix(b, g(2));
    CHECK(at2 == gmat2(g(-1), g(2), g(1), g(0)));
}
