#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbrep/presentation.hpp"

namespace sbrep {

enum class Family {
    burau,
    wada,
    standard_rep,
    f_rep,
    phi,
    sb2_rho1,
    sb2_rho2,
    sb2_rho3,
    sb2_rho4,
    tw2,
    tw3,
    sb3_ext2,
    sb3_ext3,
    mu1,
    mu2,
    mu3,
    local_rho1,
    local_rho2,
    local_rho3,
    custom,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

using Params = std::map<std::string, GaussianRational>;

GaussianRational param(const Params& p, const std::string& key);

template <class R>
struct Representation {
    Family family = Family::custom;
    int n = 0;
    int dim = 0;
    Params params;
    int wada_k = 0;                    // Wada exponent, when family == wada (or a phi base)
    Family base_family = Family::custom;  // underlying B_n family, when family == phi
    RepImages<R> images;
    std::vector<std::string> advisories;

    bool is_sbn() const { return !images.tau.empty(); }
    std::vector<SquareMatrix<R>> all_images() const {
        std::vector<SquareMatrix<R>> v = images.sigma;
        v.insert(v.end(), images.tau.begin(), images.tau.end());
        return v;
    }
};

using GaussianRep = Representation<GaussianRational>;
using LaurentRep = Representation<LaurentPoly>;

// ---- B_n catalog over the Laurent ring -------------------------------------

LaurentRep burau(int n);
LaurentRep wada(int n, int k);
LaurentRep standard_rep(int n);
LaurentRep f_rep(int n);

// ---- Phi-type extension to SB_n: tau_i = a*mu(s_i) + b*mu(s_i^-1) + c*I ----

template <class R>
Representation<R> phi_extension(const Representation<R>& mu, const GaussianRational& a,
                                const GaussianRational& b, const GaussianRational& c);

// ---- SB_2 families and their classifier ------------------------------------

GaussianRep sb2_family(Family tag, const Params& p);

struct Sb2Classification {
    Family tag = Family::custom;
    Params params;
    SquareMatrix<GaussianRational> conjugator;  // P with P^-1 * input * P = template
};

Sb2Classification sb2_classify(const SquareMatrix<GaussianRational>& s,
                               const SquareMatrix<GaussianRational>& t);

// ---- B_3 / SB_3 in dimensions 2 and 3 --------------------------------------

GaussianRep tuba_wenzl_dim2(const GaussianRational& l1, const GaussianRational& l2);

GaussianRep sb3_ext_dim2(const GaussianRational& l1, const GaussianRational& l2,
                         const GaussianRational& a1, const GaussianRational& b1);

GaussianRep tuba_wenzl_dim3(const GaussianRational& l1, const GaussianRational& l2,
                            const GaussianRational& l3);

// tau entries forced by the relations, as functions of the free entries
// (c1, e1, f1). Computed from the closed formulas; the constructor
// cross-checks them by relation verification with a linear-solver fallback.
struct Sb3Dim3Coefficients {
    GaussianRational a1, b1, i1, a2, d2, e2, g2, h2, i2;
};

Sb3Dim3Coefficients sb3_dim3_published(const GaussianRational& l1, const GaussianRational& l2,
                                       const GaussianRational& l3, const GaussianRational& c1,
                                       const GaussianRational& e1, const GaussianRational& f1);

// Solves the four defining relations as a linear system in all 18 tau
// entries with (tau_1)_{13} = c1, (tau_1)_{22} = e1, (tau_1)_{23} = f1
// pinned. Fails if the system has no unique solution.
Sb3Dim3Coefficients sb3_dim3_solve(const GaussianRational& l1, const GaussianRational& l2,
                                   const GaussianRational& l3, const GaussianRational& c1,
                                   const GaussianRational& e1, const GaussianRational& f1);

GaussianRep sb3_ext_dim3(const GaussianRational& l1, const GaussianRational& l2,
                         const GaussianRational& l3, const GaussianRational& c1,
                         const GaussianRational& e1, const GaussianRational& f1);

// ---- Homogeneous local families --------------------------------------------

SquareMatrix<GaussianRational> homog_block(Family tag, const Params& p, bool tau_block);

GaussianRep homog_mu(Family tag, const Params& p, int n);
GaussianRep homog_rho(Family tag, const Params& p, int n);

// Conjugates a homogeneous local family by the diagonal matrix that brings
// the lower-left block entry to one; for the rho2/mu2 shape the diagonal
// ratio is c/(1-d) so that the all-ones column stays invariant.
GaussianRep normalize_homog(const GaussianRep& rep);

// ---- catalog metadata (CLI list-families) ----------------------------------

struct FamilyInfo {
    Family family;
    std::string group;        // "bn" or "sbn"
    std::string ring;         // "laurent" or "gaussian"
    std::string dim_law;
    std::vector<std::string> param_names;
    std::string constraints;
};

const std::vector<FamilyInfo>& catalog_families();

// ---- shared validation ------------------------------------------------------

template <class R>
void validate_representation(const Representation<R>& rep) {
    const Presentation pres = rep.is_sbn() ? sbn_presentation(rep.n) : bn_presentation(rep.n);
    auto violations = verify_rep(rep.images, pres);
    if (!violations.empty())
        fail(Errc::internal, std::string("constructed ") + family_name(rep.family) +
                                 " violates its defining relations");
}

template <class R>
Representation<R> phi_extension(const Representation<R>& mu, const GaussianRational& a,
                                const GaussianRational& b, const GaussianRational& c) {
    if (mu.is_sbn()) fail(Errc::constraint_violation, "phi extension needs a B_n representation");
    Representation<R> rep;
    rep.family = Family::phi;
    rep.base_family = mu.family;
    rep.n = mu.n;
    rep.dim = mu.dim;
    rep.wada_k = mu.wada_k;
    rep.params = mu.params;
    rep.params["a"] = a;
    rep.params["b"] = b;
    rep.params["c"] = c;
    rep.images.sigma = mu.images.sigma;
    const R ra(a), rb(b), rc(c);
    for (std::size_t i = 0; i < mu.images.sigma.size(); ++i) {
        const auto& s = mu.images.sigma[i];
        SquareMatrix<R> t =
            ra * s + rb * s.inverse() + rc * SquareMatrix<R>::identity(mu.dim);
        if (t.det().is_zero())
            fail(Errc::singular_tau, "tau_" + std::to_string(i + 1) +
                                         " = a*s + b*s^-1 + c*I is singular");
        rep.images.tau.push_back(std::move(t));
    }
    validate_representation(rep);
    return rep;
}

}  // namespace sbrep
