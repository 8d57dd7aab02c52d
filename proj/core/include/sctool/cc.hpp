#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sctool/rational.hpp"
#include "sctool/types.hpp"

namespace sctool {

// ==== misrepresentation models ====

// Position-based: a voter's misrepresentation for the candidate she ranks at
// position p is scores[p-1].  scores[0] must be 0 and the vector nondecreasing.
struct PositionalModel {
  std::vector<Rational> scores;
};

// Borda misrepresentation: 0, 1, ..., m-1 by position.
PositionalModel borda_model(int m);

// Approval: 0 for approved candidates, 1 otherwise.  Each voter's approved
// set must be a top segment of her ranking or the model is rejected.
struct ApprovalModel {
  std::vector<std::vector<int>> approved;  // per stored voter, candidate indices
};

// Fully explicit matrix r[voter][candidate]; entries must be nonnegative and
// nondecreasing along each voter's ranking.
struct MatrixModel {
  std::vector<std::vector<Rational>> r;
};

using MisrepModel = std::variant<PositionalModel, ApprovalModel, MatrixModel>;

struct ModelViolation {
  int voter = 0;  // 0 for model-level defects (dimensions, scores[0] != 0, ...)
  int a = -1, b = -1;  // offending candidates where applicable
  std::string what;
};

std::vector<ModelViolation> validate_model(const MisrepModel& model,
                                           const Profile& p);

// Misrepresentation of candidate c for stored voter `voter` (1-based).
Rational misrep(const MisrepModel& model, const Profile& p, int voter, int c);

// ==== assignments ====

enum class Mode { Utilitarian, Egalitarian };

struct Assignment {
  std::vector<int> rep;  // rep[i-1] = candidate assigned to voter i
};

std::vector<int> committee_of(const Assignment& w);  // distinct, ascending

// Utilitarian: multiplicity-weighted sum of misrepresentations.
// Egalitarian: plain maximum (multiplicities cannot raise a max).
Rational assignment_cost(const Profile& p, const Assignment& w,
                         const MisrepModel& model, Mode mode);

// Every voter gets her least-misrepresenting committee member, ties going to
// the candidate she ranks higher.  Optimal for both aggregation modes.
Assignment best_assignment_for_committee(const Profile& p,
                                         const std::vector<int>& committee,
                                         const MisrepModel& model);

// ==== optimal committees ====

struct CCResult {
  int k = 0;
  Mode mode = Mode::Utilitarian;
  Rational phi;
  std::vector<int> committee;  // assigned candidates only, ascending
  Assignment assignment;       // over the expanded voter list
};

// Exact Chamberlin-Courant winner for a profile single-crossing on t
// (NotSingleCrossingError otherwise), via dynamic programming over the
// terminal subtrees of t.  1 <= k <= m.  Profiles with multiplicities are
// expanded first; the tree lives on the expanded voter list.
CCResult cc_optimal(const Profile& p, const Tree& t, int k,
                    const MisrepModel& model, Mode mode);

// Same, but the committee may only use the given candidates.  The unrestricted
// call is cc_optimal(p, t, k, model, mode) == cc_optimal_restricted(..., all).
CCResult cc_optimal_restricted(const Profile& p, const Tree& t, int k,
                               const MisrepModel& model, Mode mode,
                               const std::vector<int>& allowed);

// Same, rooting the dynamic program at a chosen leaf instead of the
// smallest-index one.  phi must not depend on this choice.
CCResult cc_optimal_anchored(const Profile& p, const Tree& t, int k,
                             const MisrepModel& model, Mode mode, int anchor);

}  // namespace sctool
