#include "sbrep/sweep.hpp"

namespace sbrep {

namespace {

using G = GaussianRational;

GaussianRep construct_for_sweep(const SweepConfig& cfg, const Params& p) {
    switch (cfg.family) {
        case Family::sb2_rho1:
        case Family::sb2_rho2:
        case Family::sb2_rho3:
        case Family::sb2_rho4:
            return sb2_family(cfg.family, p);
        case Family::tw2:
            return tuba_wenzl_dim2(param(p, "l1"), param(p, "l2"));
        case Family::tw3:
            return tuba_wenzl_dim3(param(p, "l1"), param(p, "l2"), param(p, "l3"));
        case Family::sb3_ext2:
            return sb3_ext_dim2(param(p, "l1"), param(p, "l2"), param(p, "a1"), param(p, "b1"));
        case Family::sb3_ext3:
            return sb3_ext_dim3(param(p, "l1"), param(p, "l2"), param(p, "l3"), param(p, "c1"),
                                param(p, "e1"), param(p, "f1"));
        case Family::mu1:
        case Family::mu2:
        case Family::mu3:
            return homog_mu(cfg.family, p, cfg.n);
        case Family::local_rho1:
        case Family::local_rho2:
        case Family::local_rho3:
            return homog_rho(cfg.family, p, cfg.n);
        default:
            fail(Errc::unknown_family,
                 std::string("family ") + family_name(cfg.family) + " is not sweepable");
    }
}

LaurentRep base_rep(Family base, int n, int wada_k) {
    switch (base) {
        case Family::burau: return burau(n);
        case Family::wada: return wada(n, wada_k);
        case Family::standard_rep: return standard_rep(n);
        case Family::f_rep: return f_rep(n);
        default:
            fail(Errc::unknown_family, "phi base must be a Laurent-ring catalog family");
    }
}

SweepReport run_phi_sweep(const SweepConfig& cfg) {
    SweepReport report;
    LaurentRep mu = base_rep(cfg.base, cfg.n, cfg.wada_k);
    Verdict mu_verdict = burnside_verdict_at(mu, cfg.t_sample);

    Rng rng(cfg.seed);
    int produced = 0;
    while (produced < cfg.limit) {
        Params p{{"a", random_pool_value(rng)},
                 {"b", random_pool_value(rng)},
                 {"c", random_pool_value(rng)}};
        if (param(p, "a").is_zero() && param(p, "b").is_zero() && param(p, "c").is_zero())
            continue;
        SweepRecord rec;
        rec.params = p;
        try {
            auto phi = phi_extension(mu, param(p, "a"), param(p, "b"), param(p, "c"));
            rec.relations_ok = true;
            rec.burnside = burnside_verdict_at(phi, cfg.t_sample);
            if (rec.burnside.status != mu_verdict.status) {
                DiscrepancyRecord d;
                d.predicate_name = "phi_matches_base";
                d.predicate_verdict = mu_verdict.status;
                d.oracle_verdict = rec.burnside.status;
                d.params = p;
                d.notes.push_back("extension verdict differs from the base representation");
                rec.discrepancies.push_back(std::move(d));
            }
        } catch (const Error& e) {
            report.skipped.push_back({p, e.what()});
            ++produced;  // skipped samples still consume the draw
            continue;
        }
        ++produced;
        report.count_irreducible += rec.burnside.irreducible() ? 1 : 0;
        report.count_reducible += rec.burnside.irreducible() ? 0 : 1;
        report.count_discrepant += rec.discrepancies.empty() ? 0 : 1;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace

std::vector<std::string> sweep_param_names(Family family) {
    switch (family) {
        case Family::sb2_rho1: return {"w", "x", "y", "z", "a", "b"};
        case Family::sb2_rho2: return {"w", "y", "z", "a", "c"};
        case Family::sb2_rho3: return {"w", "a", "b", "c", "d"};
        case Family::sb2_rho4: return {"w", "z", "a", "d"};
        case Family::tw2: return {"l1", "l2"};
        case Family::tw3: return {"l1", "l2", "l3"};
        case Family::sb3_ext2: return {"l1", "l2", "a1", "b1"};
        case Family::sb3_ext3: return {"l1", "l2", "l3", "c1", "e1", "f1"};
        case Family::mu1: return {"a", "c"};
        case Family::mu2: return {"c", "d"};
        case Family::mu3: return {"b", "c"};
        case Family::local_rho1: return {"a", "c", "t"};
        case Family::local_rho2: return {"c", "d", "x"};
        case Family::local_rho3: return {"b", "c", "x", "y"};
        case Family::phi: return {"a", "b", "c"};
        default: return {};
    }
}

std::map<std::string, std::vector<GaussianRational>> default_grid(Family family) {
    auto names = sweep_param_names(family);
    const auto& full = sample_pool();
    // larger parameter counts get a thinner per-axis grid
    std::vector<G> mid{G(1), G(-1), G(2), G(Rational(1, 2)), G::i(), G(Rational(1), Rational(1))};
    std::vector<G> small{G(1), G(-1), G(2), G::i()};
    std::map<std::string, std::vector<G>> grid;
    const std::vector<G>& axis =
        names.size() <= 4 ? full : (names.size() == 5 ? mid : small);
    for (const auto& name : names) grid[name] = axis;
    return grid;
}

void for_each_grid_point(const std::vector<std::string>& names,
                         const std::map<std::string, std::vector<GaussianRational>>& grid,
                         const std::function<void(const Params&)>& fn) {
    Params point;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == names.size()) {
            fn(point);
            return;
        }
        const auto& values = grid.at(names[k]);
        for (const auto& v : values) {
            point[names[k]] = v;
            rec(k + 1);
        }
    };
    rec(0);
}

SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.family == Family::phi) return run_phi_sweep(cfg);

    SweepReport report;
    auto names = sweep_param_names(cfg.family);
    if (names.empty())
        fail(Errc::unknown_family,
             std::string("family ") + family_name(cfg.family) + " is not sweepable");
    auto grid = default_grid(cfg.family);
    for (const auto& [k, v] : cfg.grid) grid[k] = v;

    for_each_grid_point(names, grid, [&](const Params& p) {
        SweepRecord rec;
        rec.params = p;
        GaussianRep rep;
        try {
            rep = construct_for_sweep(cfg, p);
        } catch (const Error& e) {
            report.skipped.push_back({p, e.what()});
            return;
        }
        rec.relations_ok = true;
        rec.burnside = burnside_verdict(rep);
        if (auto pred = paper_predicate_for(rep)) {
            rec.predicate = pred->second;
            if (pred->second.status != rec.burnside.status) {
                DiscrepancyRecord d;
                d.predicate_name = pred->first;
                d.predicate_verdict = pred->second.status;
                d.oracle_verdict = rec.burnside.status;
                d.params = p;
                d.notes = pred->second.notes;
                rec.discrepancies.push_back(std::move(d));
            }
        }
        if (auto wit = invariant_line_witness(rep)) rec.witness = *wit;
        report.count_irreducible += rec.burnside.irreducible() ? 1 : 0;
        report.count_reducible += rec.burnside.irreducible() ? 0 : 1;
        report.count_discrepant += rec.discrepancies.empty() ? 0 : 1;
        report.records.push_back(std::move(rec));
    });
    return report;
}

}  // namespace sbrep
