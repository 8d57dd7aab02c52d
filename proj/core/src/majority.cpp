#include "sctool/majority.hpp"

#include <random>

namespace sctool {

namespace {

MarginMatrix margins_of(const std::vector<LinearOrder>& orders,
                        const std::vector<long long>& weights, int m) {
  MarginMatrix mm;
  mm.margin.assign(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < orders.size(); ++i) {
    mm.total_weight += weights[i];
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const long long d = orders[i].prefers(a, b) ? weights[i] : -weights[i];
        mm.margin[a][b] += d;
        mm.margin[b][a] -= d;
      }
  }
  return mm;
}

bool strict_part_transitive(const MarginMatrix& mm) {
  const int m = mm.candidate_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        if (mm.at(a, b) > 0 && mm.at(b, c) > 0 && mm.at(a, c) <= 0) return false;
      }
  return true;
}

// First strict cycle a>b>c without a>c, in candidate-index order.
std::array<int, 3> first_cycle(const MarginMatrix& mm) {
  const int m = mm.candidate_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        if (mm.at(a, b) > 0 && mm.at(b, c) > 0 && mm.at(a, c) <= 0)
          return {a, b, c};
      }
  return {-1, -1, -1};
}

}  // namespace

MarginMatrix majority_margins(const Profile& p) {
  return margins_of(p.voters(), p.multiplicities(), p.candidate_count());
}

MajorityRelation strict_majority(const MarginMatrix& mm) {
  const int m = mm.candidate_count();
  MajorityRelation rel;
  rel.rel.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      rel.rel[a][b] = mm.at(a, b) > 0 ? 1 : (mm.at(a, b) < 0 ? -1 : 0);
    }
  rel.transitive = strict_part_transitive(mm);
  return rel;
}

std::optional<int> representative_voter(const Profile& p) {
  if (p.total_weight() % 2 == 0) throw EvenElectorateError();
  const MarginMatrix mm = majority_margins(p);
  const int m = p.candidate_count();
  for (int i = 1; i <= p.voter_count(); ++i) {
    bool match = true;
    for (int a = 0; a < m && match; ++a)
      for (int b = a + 1; b < m && match; ++b)
        // Odd weight: every margin is nonzero, so matching the strict
        // relation pins the voter's order exactly.
        if (p.voter(i).prefers(a, b) != (mm.at(a, b) > 0)) match = false;
    if (match) return i;
  }
  return std::nullopt;
}

CondorcetSampleReport sample_condorcet_check(const ReducedProfile& d,
                                             long long trials,
                                             long long max_weight,
                                             std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  const int k = d.class_count();
  const int m = static_cast<int>(d.candidates.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(0, max_weight);

  CondorcetSampleReport report;
  report.trials = trials;
  std::vector<long long> w(k, 1);
  for (long long trial = 0; trial < trials; ++trial) {
    if (trial == 0) {
      // The uniform electorate first: one voter per class, bumped to odd.
      std::fill(w.begin(), w.end(), 1);
      if (k % 2 == 0) w[0] = 2;
    } else {
      long long total;
      do {
        total = 0;
        for (auto& wi : w) total += (wi = dist(rng));
      } while (total % 2 == 0);
    }
    const MarginMatrix mm = margins_of(d.classes, w, m);
    if (!strict_part_transitive(mm)) {
      ++report.failures;
      if (!report.counterexample)
        report.counterexample = CondorcetCounterexample{w, first_cycle(mm)};
    }
  }
  return report;
}

}  // namespace sctool
