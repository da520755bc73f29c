#include "sbrep/irreducibility.hpp"

#include <algorithm>

namespace sbrep {

namespace {

using G = GaussianRational;
using GMat = SquareMatrix<GaussianRational>;

std::vector<QuadExt> lift(const std::vector<G>& v) {
    std::vector<QuadExt> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

// plain-Gaussian invariance check, cheaper than the quadratic-extension path
bool gaussian_line_invariant(const std::vector<G>& v, const std::vector<GMat>& images) {
    const int m = static_cast<int>(v.size());
    for (const auto& g : images) {
        std::vector<G> w(m, G(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (g(i, j).is_zero() || v[j].is_zero()) continue;
                w[i] += g(i, j) * v[j];
            }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (w[i] * v[j] != w[j] * v[i]) return false;
    }
    return true;
}

bool basis_like(const std::array<QuadExt, 2>& v, int which) {
    return v[1 - which].is_zero() && !v[which].is_zero();
}

}  // namespace

const char* verdict_status_name(VerdictStatus s) {
    return s == VerdictStatus::irreducible ? "irreducible" : "reducible";
}

const char* oracle_name(OracleKind k) {
    switch (k) {
        case OracleKind::burnside: return "burnside";
        case OracleKind::common_eigenvector: return "common_eigenvector";
        case OracleKind::fixed_vector: return "fixed_vector";
        case OracleKind::paper_predicate: return "paper_predicate";
    }
    return "burnside";
}

bool line_is_invariant(const std::vector<QuadExt>& v, const std::vector<GMat>& images) {
    const int m = static_cast<int>(v.size());
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return false;
    for (const auto& g : images) {
        if (g.size() != m) fail(Errc::size_mismatch, "witness dimension mismatch");
        std::vector<QuadExt> w(m, QuadExt(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) w[i] += QuadExt(g(i, j)) * v[j];
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (!(w[i] * v[j] - w[j] * v[i]).is_zero()) return false;
    }
    return true;
}

Verdict burnside_verdict(const GaussianRep& rep) {
    Verdict v;
    v.oracle = OracleKind::burnside;
    int dim = span_closure(rep.all_images());
    v.status = dim == rep.dim * rep.dim ? VerdictStatus::irreducible : VerdictStatus::reducible;
    v.notes.push_back("algebra dimension " + std::to_string(dim) + " of " +
                      std::to_string(rep.dim * rep.dim));
    return v;
}

GaussianRational default_t_sample() { return G(2); }

std::vector<GaussianRational> default_t_samples() {
    return {G(2), G(3), G(Rational(1), Rational(1))};
}

GaussianRep eval_rep(const LaurentRep& rep, const GaussianRational& t0) {
    GaussianRep out;
    out.family = rep.family;
    out.base_family = rep.base_family;
    out.n = rep.n;
    out.dim = rep.dim;
    out.params = rep.params;
    out.wada_k = rep.wada_k;
    out.advisories = rep.advisories;
    out.params["t"] = t0;
    auto eval_all = [&](const std::vector<SquareMatrix<LaurentPoly>>& in,
                        std::vector<GMat>& dst, const char* what) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            GMat m = eval_matrix(in[i], t0);
            if (m.det().is_zero())
                fail(Errc::constraint_violation, std::string(what) + "_" + std::to_string(i + 1) +
                                                     " degenerates at t = " + t0.str());
            dst.push_back(std::move(m));
        }
    };
    eval_all(rep.images.sigma, out.images.sigma, "sigma");
    eval_all(rep.images.tau, out.images.tau, "tau");
    return out;
}

Verdict burnside_verdict_at(const LaurentRep& rep, const GaussianRational& t0) {
    Verdict v = burnside_verdict(eval_rep(rep, t0));
    v.notes.push_back("evaluated at t = " + t0.str());
    return v;
}

Verdict burnside_verdict(const LaurentRep& rep, const std::vector<GaussianRational>& t_samples) {
    Verdict out;
    out.oracle = OracleKind::burnside;
    out.status = VerdictStatus::reducible;
    std::string tested;
    for (const auto& t0 : t_samples) {
        Verdict v = burnside_verdict_at(rep, t0);
        if (!tested.empty()) tested += ", ";
        tested += t0.str();
        if (v.irreducible()) {
            out.status = VerdictStatus::irreducible;
            out.notes.push_back("irreducible at sample point t = " + t0.str() +
                                ", hence irreducible for generic t");
            return out;
        }
    }
    out.notes.push_back("reducible at all tested points t in {" + tested +
                        "}; not a claim for generic t");
    return out;
}

std::optional<std::array<QuadExt, 2>> common_eigenvector_2x2(const GMat& s, const GMat& t) {
    if (s.size() != 2 || t.size() != 2)
        fail(Errc::size_mismatch, "common eigenvector search needs 2x2 matrices");
    if (s.is_scalar()) {
        if (t.is_scalar()) return std::array<QuadExt, 2>{QuadExt(1), QuadExt(0)};
        auto et = eigen_2x2(t);
        std::array<QuadExt, 2> best = et.pairs.front().vec;
        for (const auto& p : et.pairs)
            if (basis_like(p.vec, 0)) return p.vec;
        for (const auto& p : et.pairs)
            if (basis_like(p.vec, 1)) return p.vec;
        return best;
    }
    auto es = eigen_2x2(s);
    std::vector<std::array<QuadExt, 2>> shared;
    for (const auto& p : es.pairs) {
        std::array<QuadExt, 2> w{QuadExt(t(0, 0)) * p.vec[0] + QuadExt(t(0, 1)) * p.vec[1],
                                 QuadExt(t(1, 0)) * p.vec[0] + QuadExt(t(1, 1)) * p.vec[1]};
        if (same_direction(w, p.vec)) shared.push_back(p.vec);
    }
    if (shared.empty()) return std::nullopt;
    std::stable_sort(shared.begin(), shared.end(),
                     [](const std::array<QuadExt, 2>& a, const std::array<QuadExt, 2>& b) {
                         auto score = [](const std::array<QuadExt, 2>& v) {
                             if (basis_like(v, 0)) return 0;
                             if (basis_like(v, 1)) return 1;
                             return 2;
                         };
                         return score(a) < score(b);
                     });
    return shared.front();
}

Verdict common_eigenvector_verdict(const GaussianRep& rep) {
    if (rep.dim != 2) fail(Errc::size_mismatch, "common eigenvector verdict is dimension 2 only");
    Verdict v;
    v.oracle = OracleKind::common_eigenvector;
    auto images = rep.all_images();

    // candidates come from the first non-scalar image, then every image must
    // preserve the direction
    const GMat* pick = nullptr;
    for (const auto& g : images)
        if (!g.is_scalar()) {
            pick = &g;
            break;
        }
    if (pick == nullptr) {
        v.status = VerdictStatus::reducible;
        v.witness = std::vector<QuadExt>{QuadExt(1), QuadExt(0)};
        v.notes.push_back("all images scalar; every line is invariant");
        return v;
    }
    auto cands = eigen_2x2(*pick).pairs;
    std::vector<std::array<QuadExt, 2>> shared;
    for (const auto& p : cands) {
        std::vector<QuadExt> vec{p.vec[0], p.vec[1]};
        if (line_is_invariant(vec, images)) shared.push_back(p.vec);
    }
    if (shared.empty()) {
        v.status = VerdictStatus::irreducible;
        return v;
    }
    std::stable_sort(shared.begin(), shared.end(),
                     [](const std::array<QuadExt, 2>& a, const std::array<QuadExt, 2>& b) {
                         auto score = [](const std::array<QuadExt, 2>& x) {
                             if (basis_like(x, 0)) return 0;
                             if (basis_like(x, 1)) return 1;
                             return 2;
                         };
                         return score(a) < score(b);
                     });
    v.status = VerdictStatus::reducible;
    v.witness = std::vector<QuadExt>{shared.front()[0], shared.front()[1]};
    return v;
}

std::optional<Verdict> invariant_line_witness(const GaussianRep& rep) {
    auto images = rep.all_images();
    const int m = rep.dim;

    auto accept = [&](std::vector<QuadExt> vec, const std::string& note) -> Verdict {
        Verdict v;
        v.oracle = OracleKind::fixed_vector;
        v.status = VerdictStatus::reducible;
        v.witness = std::move(vec);
        v.notes.push_back(note);
        return v;
    };

    // the all-ones column, the witness the normalized local families admit
    std::vector<G> ones(m, G(1));
    if (gaussian_line_invariant(ones, images)) return accept(lift(ones), "all-ones vector");

    for (int j = 0; j < m; ++j) {
        std::vector<G> e(m, G(0));
        e[j] = G(1);
        if (gaussian_line_invariant(e, images))
            return accept(lift(e), "standard basis vector e" + std::to_string(j + 1));
    }

    if (m > 4) return std::nullopt;

    // common fixed space: intersection of ker(g - I)
    {
        Subspace<G> constraints(m);
        for (const auto& g : images) {
            for (int i = 0; i < m; ++i) {
                std::vector<G> row;
                row.reserve(m);
                for (int j = 0; j < m; ++j)
                    row.push_back(i == j ? g(i, j) - G(1) : g(i, j));
                constraints.insert(std::move(row));
            }
        }
        if (constraints.dim() < m) {
            // any kernel vector works; solve for one by completing the
            // constraint row space and finding a vector it annihilates
            // (back-substitution over the echelon basis)
            std::vector<int> pivots;
            for (const auto& row : constraints.basis()) {
                int p = 0;
                while (p < m && row[p].is_zero()) ++p;
                pivots.push_back(p);
            }
            int free_col = 0;
            while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
            std::vector<G> vec(m, G(0));
            vec[free_col] = G(1);
            const auto& rows = constraints.basis();
            for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
                G acc(0);
                for (int j = pivots[r] + 1; j < m; ++j) acc += rows[r][j] * vec[j];
                vec[pivots[r]] = -acc;
            }
            if (gaussian_line_invariant(vec, images))
                return accept(lift(vec), "common fixed vector of all images");
        }
    }

    if (m == 2) {
        Verdict v = common_eigenvector_verdict(rep);
        if (v.status == VerdictStatus::reducible && v.witness) {
            Verdict out = accept(*v.witness, "eigen-direction shared by all images");
            return out;
        }
    }
    return std::nullopt;
}

Verdict sb2_paper_predicate(Family tag, const Params& params) {
    sb2_family(tag, params);  // validates the family constraints
    Verdict v;
    v.oracle = OracleKind::paper_predicate;
    switch (tag) {
        case Family::sb2_rho1:
        case Family::sb2_rho2:
        case Family::sb2_rho4:
            v.status = VerdictStatus::reducible;
            v.notes.push_back("family is always reducible by the closed-form criterion");
            return v;
        case Family::sb2_rho3: {
            G a = param(params, "a"), b = param(params, "b"), c = param(params, "c"),
              d = param(params, "d");
            if (c.is_zero()) {
                v.status = VerdictStatus::reducible;
                v.notes.push_back("c = 0 case of the criterion");
                return v;
            }
            G disc = a * a + G(4) * b * c - G(2) * a * d + d * d;
            QuadExt root = QuadExt::sqrt(disc);
            QuadExt lhs = QuadExt(a - d);
            bool reducible = (lhs == root) || (lhs == -root);
            v.status = reducible ? VerdictStatus::reducible : VerdictStatus::irreducible;
            v.notes.push_back(
                "criterion a - d = +-sqrt(a^2 + 4bc - 2ad + d^2); squaring both sides, "
                "this holds exactly when b*c = 0 (here b*c = " +
                (b * c).str() + ")");
            return v;
        }
        default:
            fail(Errc::unknown_family, "not an SB_2 family");
    }
}

Verdict mu3_predicate(const GaussianRational& b, const GaussianRational& c) {
    if ((b * c).is_zero()) fail(Errc::constraint_violation, "constraint violated: b*c != 0");
    Verdict v;
    v.oracle = OracleKind::paper_predicate;
    v.status = b * c != G(1) ? VerdictStatus::irreducible : VerdictStatus::reducible;
    v.notes.push_back("criterion: irreducible iff b*c != 1 (n >= 3); b*c = " + (b * c).str());
    return v;
}

Verdict rho3_local_predicate(const GaussianRational& b, const GaussianRational& c,
                             const GaussianRational& x, const GaussianRational& y) {
    Params p{{"b", b}, {"c", c}, {"x", x}, {"y", y}};
    homog_block(Family::local_rho3, p, false);
    homog_block(Family::local_rho3, p, true);
    Verdict v;
    v.oracle = OracleKind::paper_predicate;
    bool irr = (b * c != G(1)) || (x + y / b != G(1));
    v.status = irr ? VerdictStatus::irreducible : VerdictStatus::reducible;
    v.notes.push_back("criterion: irreducible iff b*c != 1 or x + y/b != 1; b*c = " +
                      (b * c).str() + ", x + y/b = " + (x + y / b).str());
    return v;
}

Verdict restriction_verdict(const GaussianRep& rep, GeneratorSubset subset) {
    const auto& images =
        subset == GeneratorSubset::sigma_only ? rep.images.sigma : rep.images.tau;
    if (images.empty()) fail(Errc::missing_generator, "selected generator subset is empty");
    Verdict v;
    v.oracle = OracleKind::burnside;
    int dim = span_closure(images);
    v.status = dim == rep.dim * rep.dim ? VerdictStatus::irreducible : VerdictStatus::reducible;
    v.notes.push_back(std::string("restriction to ") +
                      (subset == GeneratorSubset::sigma_only ? "sigma" : "tau") +
                      " generators; algebra dimension " + std::to_string(dim));
    return v;
}

std::optional<std::pair<std::string, Verdict>> paper_predicate_for(const GaussianRep& rep) {
    switch (rep.family) {
        case Family::sb2_rho1:
        case Family::sb2_rho2:
        case Family::sb2_rho3:
        case Family::sb2_rho4:
            return std::make_pair(std::string(family_name(rep.family)) + "_predicate",
                                  sb2_paper_predicate(rep.family, rep.params));
        case Family::mu1:
        case Family::mu2:
        case Family::local_rho1:
        case Family::local_rho2: {
            Verdict v;
            v.oracle = OracleKind::paper_predicate;
            v.status = VerdictStatus::reducible;
            v.notes.push_back("family is always reducible by the closed-form criterion");
            return std::make_pair(std::string(family_name(rep.family)) + "_predicate", v);
        }
        case Family::mu3:
            return std::make_pair(std::string("mu3_predicate"),
                                  mu3_predicate(param(rep.params, "b"), param(rep.params, "c")));
        case Family::local_rho3:
            return std::make_pair(
                std::string("local_rho3_predicate"),
                rho3_local_predicate(param(rep.params, "b"), param(rep.params, "c"),
                                     param(rep.params, "x"), param(rep.params, "y")));
        default:
            return std::nullopt;
    }
}

std::vector<DiscrepancyRecord> audit(const GaussianRep& rep) {
    auto pred = paper_predicate_for(rep);
    if (!pred) return {};
    Verdict oracle = burnside_verdict(rep);
    if (pred->second.status == oracle.status) return {};
    DiscrepancyRecord rec;
    rec.predicate_name = pred->first;
    rec.predicate_verdict = pred->second.status;
    rec.oracle_verdict = oracle.status;
    rec.params = rep.params;
    rec.notes = pred->second.notes;
    return {std::move(rec)};
}

}  // namespace sbrep
