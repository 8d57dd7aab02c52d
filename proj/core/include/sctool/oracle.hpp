#pragma once

#include <cstdint>
#include <optional>

#include "sctool/cc.hpp"
#include "sctool/types.hpp"

namespace sctool {

// Brute-force reference implementations.  These deliberately avoid the cut
// and dynamic-programming machinery they are used to certify; keep it that
// way when touching them.

// Decode a Pruefer sequence (length n-2, entries in 1..n) into its tree.
Tree tree_from_pruefer(const std::vector<int>& seq, int n);

// All labeled trees on n vertices in Pruefer-sequence order (1 <= n <= 8;
// there are n^(n-2) of them, so n = 8 already means 262144 trees).
class TreeIterator {
 public:
  explicit TreeIterator(int n);
  std::optional<Tree> next();
  static long long count(int n);

 private:
  int n_;
  bool done_ = false;
  std::vector<int> seq_;  // current Pruefer sequence, entries 1..n
};

// ==== exhaustive recognition ====

struct ExhaustiveRecognition {
  int classes = 0;
  std::vector<Tree> passing;  // trees (on classes) the reduced profile crosses on
  std::vector<Tree> minimal;  // passing trees with no collapsible edge
};

// Reduces p, then tests every labeled tree on its classes directly against
// the definition (each pair either unanimous or crossed by exactly one edge).
// Requires <= 8 classes.
ExhaustiveRecognition recognize_exhaustive(const Profile& p);

// ==== brute-force Chamberlin-Courant ====

// Enumerates all k-subsets of candidates with their best assignments.
// Guarded to C(m,k) <= 1e6 committees; reports the lexicographically
// smallest optimal committee.
CCResult cc_brute_force(const Profile& p, int k, const MisrepModel& model,
                        Mode mode);

// ==== classical single-crossing ====

// Searches voter orderings (with pruning) for one on which every pair of
// candidates crosses at most once; n <= 8.  Returns the first ordering found
// in lexicographic order, as 1-based voter indices.
std::optional<std::vector<int>> classical_sc_check(const Profile& p);

}  // namespace sctool
