#include "sctool/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctool {

Tree tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("sequence length must be n-2");
  std::vector<int> degree(n + 1, 1);
  for (int s : seq) {
    if (s < 1 || s > n) throw std::invalid_argument("sequence entry out of range");
    ++degree[s];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    for (int v = 1; v <= n; ++v)
      if (degree[v] == 1) {
        edges.emplace_back(v, s);
        --degree[v];
        --degree[s];
        break;
      }
  }
  int first = 0;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) {
      if (first == 0)
        first = v;
      else
        edges.emplace_back(first, v);
    }
  return Tree(n, edges);
}

TreeIterator::TreeIterator(int n) : n_(n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("tree enumeration is limited to 1..8 vertices");
  if (n >= 3) seq_.assign(n - 2, 1);
}

std::optional<Tree> TreeIterator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    return Tree(1, {});
  }
  if (n_ == 2) {
    done_ = true;
    return Tree(2, {{1, 2}});
  }
  Tree t = tree_from_pruefer(seq_, n_);
  int i = static_cast<int>(seq_.size()) - 1;
  while (i >= 0 && seq_[i] == n_) seq_[i--] = 1;
  if (i < 0)
    done_ = true;
  else
    ++seq_[i];
  return t;
}

long long TreeIterator::count(int n) {
  if (n <= 2) return 1;
  long long total = 1;
  for (int i = 0; i < n - 2; ++i) total *= n;
  return total;
}

// ==== exhaustive recognition ====

namespace {

// Number of tree edges with endpoints on opposite sides of the split induced
// by the pair {a, b}.  Zero means the pair is unanimous; one means deleting
// that edge separates the two camps, each side staying connected.
int crossing_edges(const Tree& t, const std::vector<char>& prefers_a) {
  int crossings = 0;
  for (const auto& [u, v] : t.edges())
    if (prefers_a[u] != prefers_a[v]) ++crossings;
  return crossings;
}

bool tree_fits(const Profile& p, const Tree& t) {
  const int m = p.candidate_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<char> prefers_a(t.vertex_count() + 1, 0);
      bool any_a = false, any_b = false;
      for (int i = 1; i <= p.voter_count(); ++i) {
        prefers_a[i] = p.voter(i).prefers(a, b);
        (prefers_a[i] ? any_a : any_b) = true;
      }
      if (!any_a || !any_b) continue;
      if (crossing_edges(t, prefers_a) != 1) return false;
    }
  return true;
}

bool every_edge_used(const Profile& p, const Tree& t) {
  const int m = p.candidate_count();
  std::vector<char> used(t.edges().size(), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<char> prefers_a(t.vertex_count() + 1, 0);
      for (int i = 1; i <= p.voter_count(); ++i)
        prefers_a[i] = p.voter(i).prefers(a, b);
      for (size_t e = 0; e < t.edges().size(); ++e)
        if (prefers_a[t.edges()[e].first] != prefers_a[t.edges()[e].second])
          used[e] = 1;
    }
  return std::find(used.begin(), used.end(), 0) == used.end();
}

}  // namespace

ExhaustiveRecognition recognize_exhaustive(const Profile& p) {
  const ReducedProfile reduced = reduce_profile(p);
  if (reduced.class_count() > 8)
    throw std::invalid_argument("exhaustive recognition is limited to 8 classes");
  ExhaustiveRecognition out;
  out.classes = reduced.class_count();
  const Profile cp = reduced.class_profile();
  TreeIterator it(out.classes);
  while (auto t = it.next()) {
    if (!tree_fits(cp, *t)) continue;
    out.passing.push_back(*t);
    if (every_edge_used(cp, *t)) out.minimal.push_back(*t);
  }
  return out;
}

// ==== brute-force Chamberlin-Courant ====

namespace {

// Same tie rule as best_assignment_for_committee: cheapest candidate, then
// the one the voter ranks higher.
int favorite_in(const Profile& p, const MisrepModel& model, int voter,
                const std::vector<int>& committee, Rational* cost) {
  int best = -1;
  Rational best_cost;
  for (int c : committee) {
    const Rational r = misrep(model, p, voter, c);
    if (best < 0 || r < best_cost ||
        (r == best_cost &&
         p.voter(voter).position(c) < p.voter(voter).position(best))) {
      best = c;
      best_cost = r;
    }
  }
  *cost = best_cost;
  return best;
}

}  // namespace

CCResult cc_brute_force(const Profile& p, int k, const MisrepModel& model,
                        Mode mode) {
  const int m = p.candidate_count();
  if (k < 1 || k > m) throw std::invalid_argument("committee size out of range");
  {
    long long subsets = 1;
    for (int i = 0; i < k; ++i) {
      subsets = subsets * (m - i) / (i + 1);
      if (subsets > 1000000)
        throw std::invalid_argument("too many committees to enumerate");
    }
  }

  std::vector<int> committee(k);
  for (int i = 0; i < k; ++i) committee[i] = i;

  std::optional<Rational> best_cost;
  std::vector<int> best_reps;  // per stored voter
  for (;;) {
    Rational cost = 0;
    std::vector<int> reps(p.voter_count());
    for (int i = 1; i <= p.voter_count(); ++i) {
      Rational r;
      reps[i - 1] = favorite_in(p, model, i, committee, &r);
      if (mode == Mode::Utilitarian)
        cost += r * Rational(p.multiplicity(i));
      else if (r > cost)
        cost = r;
    }
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best_reps = reps;
    }
    // next k-subset in lexicographic order
    int i = k - 1;
    while (i >= 0 && committee[i] == m - k + i) --i;
    if (i < 0) break;
    ++committee[i];
    for (int j = i + 1; j < k; ++j) committee[j] = committee[j - 1] + 1;
  }

  CCResult result;
  result.k = k;
  result.mode = mode;
  result.phi = *best_cost;
  for (int i = 1; i <= p.voter_count(); ++i)
    for (long long r = 0; r < p.multiplicity(i); ++r)
      result.assignment.rep.push_back(best_reps[i - 1]);
  result.committee = committee_of(result.assignment);
  return result;
}

// ==== classical single-crossing ====

namespace {

struct ClassicalSearch {
  const Profile& p;
  std::vector<int> pairs_a, pairs_b;
  std::vector<int> order;       // prefix of voter indices
  std::vector<char> taken;
  std::vector<char> last_pref;  // per pair, preference of order.back()
  std::vector<char> flipped;    // per pair, whether one crossing happened

  bool extend() {
    const int n = p.voter_count();
    if (static_cast<int>(order.size()) == n) return true;
    for (int v = 1; v <= n; ++v) {
      if (taken[v]) continue;
      std::vector<int> flips;
      bool ok = true;
      for (size_t q = 0; q < pairs_a.size() && ok; ++q) {
        const char pref = p.voter(v).prefers(pairs_a[q], pairs_b[q]);
        if (order.empty() || pref == last_pref[q]) continue;
        if (flipped[q])
          ok = false;  // second crossing for this pair
        else
          flips.push_back(static_cast<int>(q));
      }
      if (!ok) continue;
      std::vector<char> saved_pref = last_pref;
      for (size_t q = 0; q < pairs_a.size(); ++q)
        last_pref[q] = p.voter(v).prefers(pairs_a[q], pairs_b[q]);
      for (int q : flips) flipped[q] = 1;
      taken[v] = 1;
      order.push_back(v);
      if (extend()) return true;
      order.pop_back();
      taken[v] = 0;
      for (int q : flips) flipped[q] = 0;
      last_pref = saved_pref;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> classical_sc_check(const Profile& p) {
  if (p.voter_count() > 8)
    throw std::invalid_argument("classical check is limited to 8 voters");
  ClassicalSearch search{p, {}, {}, {}, {}, {}, {}};
  const int m = p.candidate_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      search.pairs_a.push_back(a);
      search.pairs_b.push_back(b);
    }
  search.taken.assign(p.voter_count() + 1, 0);
  search.last_pref.assign(search.pairs_a.size(), 0);
  search.flipped.assign(search.pairs_a.size(), 0);
  if (search.extend()) return search.order;
  return std::nullopt;
}

}  // namespace sctool
