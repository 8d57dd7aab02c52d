#include "sctool/types.hpp"

#include <algorithm>
#include <map>

namespace sctool {

// ==== LinearOrder ====

LinearOrder::LinearOrder(std::vector<int> best_first)
    : ranking_(std::move(best_first)) {
  const int m = static_cast<int>(ranking_.size());
  if (m == 0) throw std::invalid_argument("empty ranking");
  pos_.assign(m, 0);
  for (int rank = 0; rank < m; ++rank) {
    const int c = ranking_[rank];
    if (c < 0 || c >= m)
      throw std::invalid_argument("ranking entry out of range");
    if (pos_[c] != 0) throw std::invalid_argument("ranking repeats a candidate");
    pos_[c] = rank + 1;
  }
}

// ==== Profile ====

Profile::Profile(std::vector<std::string> candidates,
                 std::vector<LinearOrder> voters,
                 std::vector<long long> multiplicities)
    : candidates_(std::move(candidates)),
      voters_(std::move(voters)),
      multiplicities_(std::move(multiplicities)) {
  if (candidates_.empty()) throw std::invalid_argument("profile without candidates");
  if (voters_.empty()) throw std::invalid_argument("profile without voters");
  for (size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i].empty())
      throw std::invalid_argument("empty candidate name");
    for (size_t j = i + 1; j < candidates_.size(); ++j)
      if (candidates_[i] == candidates_[j])
        throw std::invalid_argument("duplicate candidate name: " + candidates_[i]);
  }
  for (const LinearOrder& v : voters_)
    if (v.candidate_count() != candidate_count())
      throw std::invalid_argument("voter ranks a different candidate set");
  if (multiplicities_.empty()) {
    multiplicities_.assign(voters_.size(), 1);
  } else if (multiplicities_.size() != voters_.size()) {
    throw std::invalid_argument("one multiplicity per voter required");
  }
  for (long long k : multiplicities_) {
    if (k < 1) throw std::invalid_argument("multiplicity must be positive");
    total_weight_ += k;
  }
}

int Profile::candidate_index(std::string_view name) const {
  for (size_t i = 0; i < candidates_.size(); ++i)
    if (candidates_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Profile::is_flat() const {
  return std::all_of(multiplicities_.begin(), multiplicities_.end(),
                     [](long long k) { return k == 1; });
}

Profile Profile::expanded() const {
  if (is_flat()) return *this;
  std::vector<LinearOrder> out;
  out.reserve(static_cast<size_t>(total_weight_));
  for (size_t i = 0; i < voters_.size(); ++i)
    for (long long k = 0; k < multiplicities_[i]; ++k) out.push_back(voters_[i]);
  return Profile(candidates_, std::move(out));
}

// ==== reduction ====

ReducedProfile reduce_profile(const Profile& p) {
  ReducedProfile out;
  out.candidates = p.candidates();
  std::map<std::vector<int>, int> seen;  // ranking -> class index (1-based)
  out.class_of.reserve(p.voter_count());
  for (int i = 1; i <= p.voter_count(); ++i) {
    const LinearOrder& v = p.voter(i);
    auto [it, inserted] = seen.try_emplace(v.ranking(), out.class_count() + 1);
    if (inserted) {
      out.classes.push_back(v);
      out.counts.push_back(0);
      out.first_voter.push_back(i);
    }
    out.class_of.push_back(it->second);
    out.counts[it->second - 1] += p.multiplicity(i);
  }
  return out;
}

Profile ReducedProfile::class_profile() const {
  return Profile(candidates, classes);
}

// ==== Tree ====

Tree::Tree(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n_ - 1)
    throw std::invalid_argument("tree on " + std::to_string(n_) +
                                " vertices needs exactly " +
                                std::to_string(n_ - 1) + " edges");
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.assign(n_ + 1, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  // connectivity
  std::vector<char> reached(n_ + 1, 0);
  std::vector<int> queue{1};
  reached[1] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : adj_[queue[head]])
      if (!reached[w]) {
        reached[w] = 1;
        queue.push_back(w);
      }
  if (static_cast<int>(queue.size()) != n_)
    throw std::invalid_argument("edges do not form a connected tree");
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (degree(v) <= 1) out.push_back(v);
  return out;
}

bool Tree::is_path() const {
  for (int v = 1; v <= n_; ++v)
    if (degree(v) > 2) return false;
  return true;
}

}  // namespace sctool
