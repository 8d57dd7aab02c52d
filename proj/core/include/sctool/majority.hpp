#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "sctool/types.hpp"

namespace sctool {

// ==== pairwise margins ====

// margin[a][b] = (weight preferring a over b) - (weight preferring b over a).
struct MarginMatrix {
  std::vector<std::vector<long long>> margin;
  long long total_weight = 0;

  long long at(int a, int b) const { return margin[a][b]; }
  int candidate_count() const { return static_cast<int>(margin.size()); }
};

MarginMatrix majority_margins(const Profile& p);

// ==== majority relation ====

// rel[a][b]: +1 when a strictly beats b, -1 when it loses, 0 on a tie.
// `transitive` covers the strict part only: a>b and b>c must imply a>c.
struct MajorityRelation {
  std::vector<std::vector<int>> rel;
  bool transitive = false;

  bool strictly_prefers(int a, int b) const { return rel[a][b] > 0; }
  int candidate_count() const { return static_cast<int>(rel.size()); }
};

MajorityRelation strict_majority(const MarginMatrix& mm);

// Smallest-index voter whose order coincides with the strict majority
// relation; nullopt when no voter matches.  Throws EvenElectorateError when
// the total weight is even (majority ties would make the question vacuous).
std::optional<int> representative_voter(const Profile& p);

// ==== sampled Condorcet-domain check ====

struct CondorcetCounterexample {
  std::vector<long long> weights;  // multiplicity drawn for each class
  std::array<int, 3> cycle{};      // candidates a,b,c with a>b, b>c, not a>c
};

struct CondorcetSampleReport {
  long long trials = 0;
  long long failures = 0;
  std::optional<CondorcetCounterexample> counterexample;  // first failure
};

// Draws `trials` random weight vectors over the classes of `d` (nonnegative,
// odd total, entries <= max_weight) and counts strict-majority transitivity
// failures.  Trial one always tests the uniform one-per-class electorate
// (bumped to odd total if needed); the remaining draws come from `seed`.
CondorcetSampleReport sample_condorcet_check(const ReducedProfile& d,
                                             long long trials,
                                             long long max_weight,
                                             std::uint64_t seed);

}  // namespace sctool
