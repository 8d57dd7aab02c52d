#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sctool {

// ==== errors ====

// Raised by the text parsers; `line` is 1-based, 0 for file-level problems.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(msg), line(line_) {}
};

// representative_voter requires an odd total voter weight.
struct EvenElectorateError : std::runtime_error {
  EvenElectorateError() : std::runtime_error("total voter weight is even") {}
};

// potential_leaves and friends require pairwise distinct voter orders.
struct NotReducedError : std::runtime_error {
  int voter_a, voter_b;  // two voters sharing an order
  NotReducedError(int a, int b)
      : std::runtime_error("profile is not reduced: voters " +
                           std::to_string(a) + " and " + std::to_string(b) +
                           " have identical orders"),
        voter_a(a),
        voter_b(b) {}
};

// cc_optimal requires the profile to be single-crossing on the given tree.
struct NotSingleCrossingError : std::runtime_error {
  NotSingleCrossingError()
      : std::runtime_error("profile is not single-crossing on the tree") {}
};

// ==== linear orders ====

// A strict ranking of candidates 0..m-1, best first.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<int> best_first);

  int candidate_count() const { return static_cast<int>(ranking_.size()); }
  int at(int rank) const { return ranking_[rank]; }    // 0-based rank
  int position(int c) const { return pos_[c]; }        // 1-based position
  bool prefers(int a, int b) const { return pos_[a] < pos_[b]; }
  const std::vector<int>& ranking() const { return ranking_; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<int> ranking_;  // ranking_[rank] = candidate
  std::vector<int> pos_;      // pos_[candidate] = 1-based position
};

// ==== profiles ====

// Voters are 1-indexed throughout; candidates are referred to by 0-based
// index into candidates() and surfaced by name in all output.  A voter line
// may carry a multiplicity; algorithms that pair a profile with a tree work
// on the expanded voter list.
class Profile {
 public:
  Profile(std::vector<std::string> candidates, std::vector<LinearOrder> voters,
          std::vector<long long> multiplicities = {});

  int candidate_count() const { return static_cast<int>(candidates_.size()); }
  int voter_count() const { return static_cast<int>(voters_.size()); }
  long long total_weight() const { return total_weight_; }

  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::string& candidate_name(int c) const { return candidates_[c]; }
  int candidate_index(std::string_view name) const;  // -1 when unknown

  const LinearOrder& voter(int i) const { return voters_[i - 1]; }
  long long multiplicity(int i) const { return multiplicities_[i - 1]; }
  const std::vector<LinearOrder>& voters() const { return voters_; }
  const std::vector<long long>& multiplicities() const { return multiplicities_; }

  bool is_flat() const;       // every multiplicity is 1
  Profile expanded() const;   // each voter repeated multiplicity times

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.candidates_ == b.candidates_ && a.voters_ == b.voters_ &&
           a.multiplicities_ == b.multiplicities_;
  }

 private:
  std::vector<std::string> candidates_;
  std::vector<LinearOrder> voters_;
  std::vector<long long> multiplicities_;
  long long total_weight_ = 0;
};

// ==== reduction ====

// Distinct-order classes in first-appearance order.  Counts aggregate voter
// multiplicities; class indices are 1-based like voter indices.
struct ReducedProfile {
  std::vector<std::string> candidates;
  std::vector<LinearOrder> classes;
  std::vector<long long> counts;   // per class
  std::vector<int> class_of;       // class_of[i-1] = class of stored voter i
  std::vector<int> first_voter;    // first stored voter of each class

  int class_count() const { return static_cast<int>(classes.size()); }
  // One flat voter per class; the working profile for peeling.
  Profile class_profile() const;
};

ReducedProfile reduce_profile(const Profile& p);

// ==== trees ====

// An undirected tree on vertices 1..n.  Edges are normalized (u < v) and
// sorted; the constructor validates shape and connectivity.
class Tree {
 public:
  Tree(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<int> leaves() const;  // degree <= 1, ascending
  bool is_path() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // adj_[0] unused
};

}  // namespace sctool
