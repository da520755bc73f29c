#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbrep/catalog.hpp"
#include "sbrep/echelon.hpp"
#include "sbrep/eigen2.hpp"

namespace sbrep {

enum class VerdictStatus { irreducible, reducible };
enum class OracleKind { burnside, common_eigenvector, fixed_vector, paper_predicate };

const char* verdict_status_name(VerdictStatus s);
const char* oracle_name(OracleKind k);

struct Verdict {
    VerdictStatus status = VerdictStatus::reducible;
    OracleKind oracle = OracleKind::burnside;
    std::optional<std::vector<QuadExt>> witness;
    std::vector<std::string> notes;

    bool irreducible() const { return status == VerdictStatus::irreducible; }
};

// Every image maps the line spanned by v into itself (checked exactly).
bool line_is_invariant(const std::vector<QuadExt>& v,
                       const std::vector<SquareMatrix<GaussianRational>>& images);

// Span-closure criterion: the representation is irreducible over C iff the
// unital algebra generated by its images has dimension dim^2. The algebra
// dimension is invariant under extending the ground field, so deciding over
// Q(i) decides over C.
Verdict burnside_verdict(const GaussianRep& rep);

GaussianRational default_t_sample();
std::vector<GaussianRational> default_t_samples();

// Evaluates a Laurent-ring representation at t = t0 first. Fails if the
// sample point degenerates any generator image.
GaussianRep eval_rep(const LaurentRep& rep, const GaussianRational& t0);
Verdict burnside_verdict_at(const LaurentRep& rep, const GaussianRational& t0);

// Multi-point policy: irreducible at any sample point implies generic
// irreducibility (specialization can only shrink the algebra); reducible at
// all samples is reported as reducible at the tested points only.
Verdict burnside_verdict(const LaurentRep& rep,
                         const std::vector<GaussianRational>& t_samples = default_t_samples());

// Shared eigen-direction of two 2x2 matrices, over the quadratic extension.
// Scalar matrices accept every direction. Candidates are ordered so the
// standard basis vectors come first.
std::optional<std::array<QuadExt, 2>> common_eigenvector_2x2(
    const SquareMatrix<GaussianRational>& s, const SquareMatrix<GaussianRational>& t);

// Dimension-2 reducibility via common eigen-directions of all images.
Verdict common_eigenvector_verdict(const GaussianRep& rep);

// Bounded invariant-line search: the all-ones vector first, then standard
// basis vectors, then (dim <= 4) the common fixed space of all images, then
// (dim = 2) eigen-direction filtering. Absence of a witness is not a proof
// of irreducibility; burnside_verdict is the decision procedure.
std::optional<Verdict> invariant_line_witness(const GaussianRep& rep);

// Closed-form verdicts transcribed from the source classification.
Verdict sb2_paper_predicate(Family tag, const Params& params);
Verdict mu3_predicate(const GaussianRational& b, const GaussianRational& c);
Verdict rho3_local_predicate(const GaussianRational& b, const GaussianRational& c,
                             const GaussianRational& x, const GaussianRational& y);

enum class GeneratorSubset { sigma_only, tau_only };

// Burnside verdict computed on one generator family only. If the restriction
// already spans dim^2, the full representation is irreducible.
Verdict restriction_verdict(const GaussianRep& rep, GeneratorSubset subset);

struct DiscrepancyRecord {
    std::string predicate_name;
    VerdictStatus predicate_verdict;
    VerdictStatus oracle_verdict;
    Params params;
    std::vector<std::string> notes;
};

// The closed-form verdict applicable to this family, if any, with a name
// identifying the predicate in audit reports.
std::optional<std::pair<std::string, Verdict>> paper_predicate_for(const GaussianRep& rep);

// Runs every closed-form predicate applicable to the family against the
// span-closure oracle and reports disagreements.
std::vector<DiscrepancyRecord> audit(const GaussianRep& rep);

}  // namespace sbrep
