#include <doctest.h>

#include "sbrep/catalog.hpp"
#include "sbrep/irreducibility.hpp"
#include "sbrep/sampling.hpp"
#include "sbrep/sweep.hpp"
#include "support/test_util.hpp"

using namespace sbrep;
using namespace sbrep::testutil;

namespace {

const LaurentPoly kT = LaurentPoly::t();
const LaurentPoly kOne = LaurentPoly(1);
const LaurentPoly kZero = LaurentPoly(0);

}  // namespace

TEST_CASE("burau at n = 2 is the displayed block") {
    auto rep = burau(2);
    CHECK(rep.dim == 2);
    CHECK(rep.images.sigma.size() == 1);
    LaurentMatrix expect = make_matrix<LaurentPoly>(2, {kOne - kT, kT, kOne, kZero});
    CHECK(rep.images.sigma[0] == expect);
    CHECK(thrown_code([] { burau(1); }) == Errc::bad_strand_count);
}

TEST_CASE("burau far commutation holds by block disjointness") {
    auto rep = burau(4);
    const auto& s1 = rep.images.sigma[0];
    const auto& s3 = rep.images.sigma[2];
    CHECK(s1 * s3 == s3 * s1);
}

TEST_CASE("wada with k = 1 is burau entry for entry") {
    for (int n : {2, 3, 4}) {
        auto w = wada(n, 1);
        auto b = burau(n);
        REQUIRE(w.images.sigma.size() == b.images.sigma.size());
        for (std::size_t i = 0; i < w.images.sigma.size(); ++i)
            CHECK(w.images.sigma[i] == b.images.sigma[i]);
    }
}

TEST_CASE("wada block at k = -1") {
    auto rep = wada(2, -1);
    LaurentMatrix expect =
        make_matrix<LaurentPoly>(2, {kOne - LaurentPoly::t(-1), LaurentPoly::t(-1), kOne, kZero});
    CHECK(rep.images.sigma[0] == expect);
    CHECK(thrown_code([] { wada(3, 0); }) == Errc::zero_exponent);
}

TEST_CASE("wada passes the braid presentation for several exponents") {
    for (int k : {-2, -1, 2, 3}) {
        auto rep = wada(3, k);
        CHECK(verify_rep(rep.images, bn_presentation(3)).empty());
    }
}

TEST_CASE("standard representation basics") {
    auto rep = standard_rep(2);
    const auto& s = rep.images.sigma[0];
    CHECK(s * s == kT * LaurentMatrix::identity(2));
    CHECK(s.det() == -kT);
    auto rep3 = standard_rep(3);
    for (const auto& m : rep3.images.sigma) CHECK(m.det() == -kT);
}

TEST_CASE("f_rep displays the 3x3 block and has determinant -t") {
    auto rep = f_rep(2);
    CHECK(rep.dim == 3);
    LaurentMatrix expect = make_matrix<LaurentPoly>(
        3, {kOne, kOne, kZero, kZero, -kT, kZero, kZero, kT, kOne});
    CHECK(rep.images.sigma[0] == expect);
    CHECK(rep.images.sigma[0].det() == -kT);

    auto rep3 = f_rep(3);
    CHECK(rep3.dim == 4);
    CHECK(verify_rep(rep3.images, bn_presentation(3)).empty());
}

TEST_CASE("phi with (1,0,0) reproduces the sigma images") {
    auto mu = burau(3);
    auto rep = phi_extension(mu, g(1), g(0), g(0));
    for (std::size_t i = 0; i < mu.images.sigma.size(); ++i)
        CHECK(rep.images.tau[i] == mu.images.sigma[i]);
}

TEST_CASE("phi with (0,1,0) reproduces the sigma inverses") {
    auto mu = burau(3);
    auto rep = phi_extension(mu, g(0), g(1), g(0));
    for (std::size_t i = 0; i < mu.images.sigma.size(); ++i)
        CHECK(rep.images.tau[i] == mu.images.sigma[i].inverse());
}

TEST_CASE("phi over burau matches the base verdict at t = 2") {
    auto mu = burau(3);
    auto rep = phi_extension(mu, g(1), g(1), g(1));
    CHECK(rep.family == Family::phi);
    CHECK(rep.base_family == Family::burau);
    auto v_phi = burnside_verdict_at(rep, g(2));
    auto v_mu = burnside_verdict_at(mu, g(2));
    CHECK(v_phi.status == v_mu.status);
}

TEST_CASE("sb2 rho4 is the diagonal pair") {
    auto rep = sb2_family(Family::sb2_rho4, {{"w", g(1)}, {"z", g(2)}, {"a", g(3)}, {"d", g(4)}});
    CHECK(rep.images.sigma[0] == gmat2(g(1), g(0), g(0), g(2)));
    CHECK(rep.images.tau[0] == gmat2(g(3), g(0), g(0), g(4)));
}

TEST_CASE("sb2 rho3 pairs a scalar sigma with any invertible tau") {
    auto rep = sb2_family(Family::sb2_rho3,
                          {{"w", g(2)}, {"a", g(0)}, {"b", g(1)}, {"c", g(1)}, {"d", g(0)}});
    CHECK(rep.images.sigma[0] == g(2) * GaussianMatrix::identity(2));
    CHECK(rep.images.tau[0] == gmat2(g(0), g(1), g(1), g(0)));
    CHECK(rep.images.sigma[0] * rep.images.tau[0] == rep.images.tau[0] * rep.images.sigma[0]);
}

TEST_CASE("sb2 rho1 derives the bottom row of tau") {
    auto rep = sb2_family(Family::sb2_rho1, {{"w", g(1)},
                                             {"x", g(1)},
                                             {"y", g(0)},
                                             {"z", g(1)},
                                             {"a", g(1)},
                                             {"b", g(2)}});
    CHECK(rep.images.tau[0] == gmat2(g(1), g(2), g(0), g(1)));
    const auto& s = rep.images.sigma[0];
    const auto& t = rep.images.tau[0];
    CHECK(s * t == t * s);
}

TEST_CASE("sb2 family constraints are enforced by name") {
    auto code = thrown_code([] {
        sb2_family(Family::sb2_rho1,
                   {{"w", g(1)}, {"x", g(0)}, {"y", g(1)}, {"z", g(1)}, {"a", g(1)}, {"b", g(1)}});
    });
    CHECK(code == Errc::constraint_violation);
    CHECK(thrown_code([] {
              sb2_family(Family::sb2_rho3,
                         {{"w", g(0)}, {"a", g(1)}, {"b", g(0)}, {"c", g(0)}, {"d", g(1)}});
          }) == Errc::constraint_violation);
    CHECK(thrown_code([] {
              sb2_family(Family::sb2_rho4, {{"w", g(1)}, {"z", g(1)}, {"a", g(0)}, {"d", g(1)}});
          }) == Errc::constraint_violation);
    CHECK(thrown_code([] {
              // tau determinant vanishes: a^2x - abw + abz = 1 - 2 + 2 = 1 = b^2y
              sb2_family(Family::sb2_rho1, {{"w", g(2)},
                                            {"x", g(1)},
                                            {"y", g(1)},
                                            {"z", g(2)},
                                            {"a", g(1)},
                                            {"b", g(1)}});
          }) == Errc::constraint_violation);
}

TEST_CASE("classifier: diagonal pair lands in rho4") {
    auto cls = sb2_classify(gmat2(g(1), g(0), g(0), g(2)), gmat2(g(3), g(0), g(0), g(4)));
    CHECK(cls.tag == Family::sb2_rho4);
    CHECK(cls.conjugator == GaussianMatrix::identity(2));
}

TEST_CASE("classifier: scalar sigma lands in rho3") {
    auto cls = sb2_classify(g(2) * GaussianMatrix::identity(2), gmat2(g(0), g(1), g(1), g(0)));
    CHECK(cls.tag == Family::sb2_rho3);
    CHECK(param(cls.params, "w") == g(2));
}

TEST_CASE("classifier: upper triangular pair lands in rho1") {
    auto cls = sb2_classify(gmat2(g(1), g(1), g(0), g(1)), gmat2(g(1), g(2), g(0), g(1)));
    CHECK(cls.tag == Family::sb2_rho1);
    CHECK(param(cls.params, "w") == g(1));
    CHECK(param(cls.params, "x") == g(1));
    CHECK(param(cls.params, "y") == g(0));
    CHECK(param(cls.params, "z") == g(1));
    CHECK(param(cls.params, "a") == g(1));
    CHECK(param(cls.params, "b") == g(2));
}

TEST_CASE("classifier rejects non-commuting and singular inputs") {
    CHECK(thrown_code([] {
              sb2_classify(gmat2(g(1), g(1), g(0), g(1)), gmat2(g(1), g(0), g(1), g(1)));
          }) == Errc::not_commuting);
    CHECK(thrown_code([] {
              sb2_classify(gmat2(g(1), g(1), g(1), g(1)), gmat2(g(1), g(0), g(0), g(1)));
          }) == Errc::not_invertible);
}

TEST_CASE("classify(construct) round trips over the pool") {
    Rng rng(67);
    const Family tags[] = {Family::sb2_rho1, Family::sb2_rho2, Family::sb2_rho3,
                           Family::sb2_rho4};
    int done = 0;
    while (done < 80) {
        Family tag = tags[done % 4];
        Params p;
        for (const auto& name : sweep_param_names(tag)) p[name] = random_pool_value(rng);
        GaussianRep rep;
        try {
            rep = sb2_family(tag, p);
        } catch (const Error&) {
            continue;
        }
        ++done;
        auto cls = sb2_classify(rep.images.sigma[0], rep.images.tau[0]);
        auto rebuilt = sb2_family(cls.tag, cls.params);
        auto pinv = cls.conjugator.inverse();
        CHECK(pinv * rep.images.sigma[0] * cls.conjugator == rebuilt.images.sigma[0]);
        CHECK(pinv * rep.images.tau[0] * cls.conjugator == rebuilt.images.tau[0]);
    }
}

TEST_CASE("tuba-wenzl dim 2") {
    auto rep = tuba_wenzl_dim2(g(1), g(-1));
    CHECK(rep.images.sigma[0] == gmat2(g(1), g(1), g(0), g(-1)));
    CHECK(rep.images.sigma[1] == gmat2(g(-1), g(0), g(1), g(1)));
    CHECK(rep.advisories.empty());

    auto rep11 = tuba_wenzl_dim2(g(1), g(1));
    CHECK(rep11.advisories.empty());  // 1 + 1 - 1 = 1 != 0

    auto repi = tuba_wenzl_dim2(g(1), gi(0, 1));
    CHECK(repi.advisories.empty());  // 1 + (-1) - i = -i != 0

    CHECK(thrown_code([] { tuba_wenzl_dim2(g(0), g(1)); }) == Errc::zero_eigenvalue);
}

TEST_CASE("sb3 dim-2 extension with (a1,b1) = (l1,l1) reproduces sigma") {
    Rng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        GaussianRational l1 = random_pool_value(rng, true), l2 = random_pool_value(rng, true);
        auto rep = sb3_ext_dim2(l1, l2, l1, l1);
        CHECK(rep.images.tau[0] == rep.images.sigma[0]);
        CHECK(rep.images.tau[1] == rep.images.sigma[1]);
    }
}

TEST_CASE("sb3 dim-2 extension at (1,-1,1,1)") {
    auto rep = sb3_ext_dim2(g(1), g(-1), g(1), g(1));
    CHECK(rep.images.tau[0] == gmat2(g(1), g(1), g(0), g(-1)));
    CHECK(rep.images.tau[1] == gmat2(g(-1), g(0), g(1), g(1)));
    CHECK(verify_rep(rep.images, sbn_presentation(3)).empty());
}

TEST_CASE("sb3 dim-2 extension with b1 = 0 gives scalar tau") {
    auto rep = sb3_ext_dim2(g(1), g(-1), g(2), g(0));
    CHECK(rep.images.tau[0] == g(2) * GaussianMatrix::identity(2));
    CHECK(rep.images.tau[1] == g(2) * GaussianMatrix::identity(2));
}

TEST_CASE("sb3 dim-2 extension constraint failures") {
    CHECK(thrown_code([] { sb3_ext_dim2(g(1), g(1), g(0), g(1)); }) == Errc::constraint_violation);
    // derived d1 = a1 - b1 (l1 - l2)/l1 = 0
    CHECK(thrown_code([] { sb3_ext_dim2(g(1), g(-1), g(2), g(1)); }) ==
          Errc::constraint_violation);
}

TEST_CASE("tuba-wenzl dim 3") {
    auto rep = tuba_wenzl_dim3(g(1), g(1), g(1));
    GaussianMatrix expect = make_matrix<GaussianRational>(
        3, {g(1), g(2), g(1), g(0), g(1), g(1), g(0), g(0), g(1)});
    CHECK(rep.images.sigma[0] == expect);
    CHECK(rep.advisories.empty());

    CHECK(!tuba_wenzl_dim3(g(1), g(-1), g(1)).advisories.empty());
    CHECK(!tuba_wenzl_dim3(g(1), g(1), g(-1)).advisories.empty());
}

TEST_CASE("sb3 dim-3 extension: identity-like point") {
    auto rep = sb3_ext_dim3(g(1), g(1), g(1), g(0), g(1), g(0));
    CHECK(rep.images.tau[0] == GaussianMatrix::identity(3));
    CHECK(rep.images.tau[1] == GaussianMatrix::identity(3));
    CHECK(rep.advisories.empty());
}

TEST_CASE("sb3 dim-3 extension reproduces sigma at the diagonal point") {
    for (const auto& l : {g(1), g(2), gi(0, 1)}) {
        auto rep = sb3_ext_dim3(l, l, l, l, l, l);
        CHECK(rep.images.tau[0] == rep.images.sigma[0]);
        CHECK(rep.images.tau[1] == rep.images.sigma[1]);
    }
}

TEST_CASE("sb3 dim-3 extension rejects l2 = -l3") {
    CHECK(thrown_code([] { sb3_ext_dim3(g(1), g(-1), g(1), g(1), g(1), g(1)); }) ==
          Errc::constraint_violation);
}

TEST_CASE("dim-3 solver agrees with the closed formulas") {
    Rng rng(73);
    int done = 0;
    while (done < 25) {
        GaussianRational l1 = random_pool_value(rng, true), l2 = random_pool_value(rng, true),
                         l3 = random_pool_value(rng, true);
        if ((l2 + l3).is_zero()) continue;
        GaussianRational c1 = random_pool_value(rng), e1 = random_pool_value(rng),
                         f1 = random_pool_value(rng);
        auto pub = sb3_dim3_published(l1, l2, l3, c1, e1, f1);
        auto sol = sb3_dim3_solve(l1, l2, l3, c1, e1, f1);
        CHECK(pub.a1 == sol.a1);
        CHECK(pub.b1 == sol.b1);
        CHECK(pub.i1 == sol.i1);
        CHECK(pub.a2 == sol.a2);
        CHECK(pub.d2 == sol.d2);
        CHECK(pub.e2 == sol.e2);
        CHECK(pub.g2 == sol.g2);
        CHECK(pub.h2 == sol.h2);
        CHECK(pub.i2 == sol.i2);
        ++done;
    }
}

TEST_CASE("homogeneous mu families") {
    // mu1 at (a, c) = (1 - t0, 1) has the Burau block evaluated at t0
    GaussianRational t0 = g(2);
    auto m1 = homog_mu(Family::mu1, {{"a", g(1) - t0}, {"c", g(1)}}, 3);
    CHECK(m1.images.sigma[0] ==
          block_embed(eval_matrix(make_matrix<LaurentPoly>(
                                      2, {kOne - kT, kT, kOne, kZero}),
                                  t0),
                      1, 3));

    auto m3 = homog_mu(Family::mu3, {{"b", g(2)}, {"c", g(1)}}, 3);
    CHECK(m3.images.sigma[0] == block_embed(gmat2(g(0), g(2), g(1), g(0)), 1, 3));

    auto m2 = homog_mu(Family::mu2, {{"c", g(1)}, {"d", g(0)}}, 3);
    CHECK(m2.images.sigma[0] == block_embed(gmat2(g(0), g(1), g(1), g(0)), 1, 3));
    CHECK(verify_rep(m2.images, bn_presentation(3)).empty());

    CHECK(thrown_code([] { homog_mu(Family::mu1, {{"a", g(1)}, {"c", g(1)}}, 3); }) ==
          Errc::constraint_violation);
    CHECK(thrown_code([] { homog_mu(Family::mu3, {{"b", g(0)}, {"c", g(1)}}, 3); }) ==
          Errc::constraint_violation);
}

TEST_CASE("homogeneous rho families") {
    auto r3 = homog_rho(Family::local_rho3,
                        {{"b", g(1)}, {"c", g(1)}, {"x", g(0)}, {"y", g(1)}}, 3);
    CHECK(r3.images.sigma[0] == block_embed(gmat2(g(0), g(1), g(1), g(0)), 1, 3));
    CHECK(r3.images.tau[0] == block_embed(gmat2(g(0), g(1), g(1), g(0)), 1, 3));
    CHECK(verify_rep(r3.images, sbn_presentation(3)).empty());

    // t = 1 makes the rho1 tau block the identity
    auto r1 = homog_rho(Family::local_rho1, {{"a", g(2)}, {"c", g(3)}, {"t", g(1)}}, 3);
    for (const auto& m : r1.images.tau) CHECK(m == GaussianMatrix::identity(3));

    // x = 1 makes the rho2 tau block the identity
    auto r2 = homog_rho(Family::local_rho2, {{"c", g(2)}, {"d", g(3)}, {"x", g(1)}}, 3);
    for (const auto& m : r2.images.tau) CHECK(m == GaussianMatrix::identity(3));

    CHECK(thrown_code([] {
              homog_rho(Family::local_rho3,
                        {{"b", g(2)}, {"c", g(1)}, {"x", g(0)}, {"y", g(0)}}, 3);
          }) == Errc::singular_tau);
    CHECK(thrown_code([] {
              homog_rho(Family::local_rho1, {{"a", g(1)}, {"c", g(1)}, {"t", g(2)}}, 3);
          }) == Errc::singular_generator_image);
}

TEST_CASE("homogeneity: all blocks along the diagonal are equal") {
    auto rep = homog_rho(Family::local_rho3,
                         {{"b", g(2)}, {"c", g(1)}, {"x", g(1)}, {"y", g(1)}}, 5);
    for (int idx = 0; idx < 4; ++idx) {
        const auto& s = rep.images.sigma[idx];
        const auto& t = rep.images.tau[idx];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                CHECK(s(idx + a, idx + b) == rep.images.sigma[0](a, b));
                CHECK(t(idx + a, idx + b) == rep.images.tau[0](a, b));
            }
    }
}

TEST_CASE("normalization brings rho1 to the unit-lower-entry form") {
    auto rep = homog_rho(Family::local_rho1, {{"a", g(3)}, {"c", g(2)}, {"t", g(3)}}, 3);
    auto norm = normalize_homog(rep);
    // sigma block becomes [[a, 1-a],[1, 0]]
    CHECK(norm.images.sigma[0] == block_embed(gmat2(g(3), g(-2), g(1), g(0)), 1, 3));
    // tau block becomes [[1-(1-a)(1-t), (1-a)(1-t)],[1-t, t]]
    GaussianRational one_a = g(1) - g(3), one_t = g(1) - g(3);
    CHECK(norm.images.tau[0] ==
          block_embed(gmat2(g(1) - one_a * one_t, one_a * one_t, one_t, g(3)), 1, 3));
}

TEST_CASE("normalization brings rho3 to the [[0,bc],[1,0]] form") {
    GaussianRational b = g(3), c = g(2), x = g(1), y = g(1);
    auto rep = homog_rho(Family::local_rho3, {{"b", b}, {"c", c}, {"x", x}, {"y", y}}, 4);
    auto norm = normalize_homog(rep);
    CHECK(norm.images.sigma[0] == block_embed(gmat2(g(0), b * c, g(1), g(0)), 1, 4));
    CHECK(norm.images.tau[0] == block_embed(gmat2(x, c * y, y / b, x), 1, 4));
}

TEST_CASE("normalization with c = 1 leaves rho1 unchanged") {
    auto rep = homog_rho(Family::local_rho1, {{"a", g(2)}, {"c", g(1)}, {"t", g(3)}}, 3);
    auto norm = normalize_homog(rep);
    CHECK(norm.images.sigma == rep.images.sigma);
    CHECK(norm.images.tau == rep.images.tau);
}

TEST_CASE("normalization preserves the span dimension and the relations") {
    Rng rng(79);
    int done = 0;
    while (done < 12) {
        Params p{{"b", random_pool_value(rng, true)},
                 {"c", random_pool_value(rng, true)},
                 {"x", random_pool_value(rng)},
                 {"y", random_pool_value(rng)}};
        GaussianRep rep;
        try {
            rep = homog_rho(Family::local_rho3, p, 3);
        } catch (const Error&) {
            continue;
        }
        ++done;
        auto norm = normalize_homog(rep);
        CHECK(verify_rep(norm.images, sbn_presentation(3)).empty());
        CHECK(span_closure(norm.all_images()) == span_closure(rep.all_images()));
    }
}

TEST_CASE("every constructor validates its relations at build time") {
    // spot checks that constructed reps re-verify cleanly
    CHECK(verify_rep(burau(5).images, bn_presentation(5)).empty());
    CHECK(verify_rep(f_rep(4).images, bn_presentation(4)).empty());
    auto e3 = sb3_ext_dim3(g(2), g(1), g(1), g(1), g(1), g(1));
    CHECK(verify_rep(e3.images, sbn_presentation(3)).empty());
}
