#pragma once

#include <functional>
#include <optional>

#include "sbrep/irreducibility.hpp"
#include "sbrep/sampling.hpp"

namespace sbrep {

struct SweepConfig {
    Family family = Family::custom;
    int n = 3;
    Family base = Family::custom;  // phi: underlying B_n family
    int wada_k = 2;                // phi over wada
    unsigned long seed = 0;
    int limit = 12;                // phi: number of (a,b,c) samples
    GaussianRational t_sample = GaussianRational(2);
    // per-parameter value grids; empty means the family default
    std::map<std::string, std::vector<GaussianRational>> grid;
};

struct SweepRecord {
    Params params;
    bool relations_ok = false;
    Verdict burnside;
    std::optional<Verdict> predicate;
    std::optional<Verdict> witness;
    std::vector<DiscrepancyRecord> discrepancies;
};

struct SweepSkipped {
    Params params;
    std::string constraint;
};

struct SweepReport {
    std::vector<SweepRecord> records;
    std::vector<SweepSkipped> skipped;
    int count_irreducible = 0;
    int count_reducible = 0;
    int count_discrepant = 0;
};

// Canonical parameter order of a family's sweep grid.
std::vector<std::string> sweep_param_names(Family family);

// Family default: the full sample pool per parameter, shrunk for families
// with many parameters to keep grids at desk scale.
std::map<std::string, std::vector<GaussianRational>> default_grid(Family family);

// Runs the family constructor at every grid point, records verdicts and
// predicate discrepancies, and logs filtered points with the violated
// constraint. Grid order is deterministic, so reports are reproducible.
SweepReport run_sweep(const SweepConfig& config);

// Iterates a cartesian grid; callback gets the named parameter values.
void for_each_grid_point(const std::vector<std::string>& names,
                         const std::map<std::string, std::vector<GaussianRational>>& grid,
                         const std::function<void(const Params&)>& fn);

}  // namespace sbrep
