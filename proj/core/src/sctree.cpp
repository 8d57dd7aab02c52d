#include "sctool/sctree.hpp"

#include <algorithm>
#include <cassert>

namespace sctool {

namespace {

// Expanded voter list as pointers into the stored orders; voter i with
// multiplicity k occupies k consecutive expanded slots.
std::vector<const LinearOrder*> expanded_view(const Profile& p) {
  std::vector<const LinearOrder*> view;
  view.reserve(static_cast<size_t>(p.total_weight()));
  for (int i = 1; i <= p.voter_count(); ++i)
    for (long long r = 0; r < p.multiplicity(i); ++r) view.push_back(&p.voter(i));
  return view;
}

// Connected in t when restricted to the marked vertices?  On failure returns
// the lexicographically smallest pair of marked vertices in different
// components.
bool connected_within(const Tree& t, const std::vector<char>& marked,
                      const std::vector<int>& members, int* bad_u, int* bad_v) {
  if (members.size() <= 1) return true;
  std::vector<char> reached(t.vertex_count() + 1, 0);
  std::vector<int> queue{members[0]};
  reached[members[0]] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : t.neighbors(queue[head]))
      if (marked[w] && !reached[w]) {
        reached[w] = 1;
        queue.push_back(w);
      }
  for (int v : members)
    if (!reached[v]) {
      *bad_u = members[0];  // members ascending: smallest vertex of the side
      *bad_v = v;           // smallest one outside its component
      return false;
    }
  return true;
}

std::vector<const LinearOrder*> view_checked(const Profile& p, const Tree& t) {
  if (p.total_weight() != t.vertex_count())
    throw std::invalid_argument(
        "tree vertex count must equal the total voter weight");
  return expanded_view(p);
}

std::variant<Cut, NoCutWitness> find_cut_on_view(
    const std::vector<const LinearOrder*>& view, const Tree& t, int a, int b) {
  const int n = t.vertex_count();
  std::vector<char> in_a(n + 1, 0);
  std::vector<int> side_a, side_b;
  for (int v = 1; v <= n; ++v) {
    if (view[v - 1]->prefers(a, b)) {
      in_a[v] = 1;
      side_a.push_back(v);
    } else {
      side_b.push_back(v);
    }
  }
  if (side_b.empty()) return Cut{a, b, Unanimous::PreferA};
  if (side_a.empty()) return Cut{a, b, Unanimous::PreferB};

  int bad_u = 0, bad_v = 0;
  std::vector<char> in_b(n + 1, 0);
  for (int v : side_b) in_b[v] = 1;
  if (!connected_within(t, in_a, side_a, &bad_u, &bad_v))
    return NoCutWitness{a, b, 'a', bad_u, bad_v};
  if (!connected_within(t, in_b, side_b, &bad_u, &bad_v))
    return NoCutWitness{a, b, 'b', bad_u, bad_v};

  // Both sides connected: exactly one tree edge crosses between them.
  for (const auto& [x, y] : t.edges())
    if (in_a[x] != in_a[y]) {
      const int u = in_a[x] ? x : y;
      const int v = in_a[x] ? y : x;
      return Cut{a, b, CutEdge{u, v, side_a, side_b}};
    }
  throw std::logic_error("connected split without a crossing edge");
}

}  // namespace

std::variant<Cut, NoCutWitness> find_cut(const Profile& p, const Tree& t,
                                         int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= p.candidate_count() ||
      b >= p.candidate_count())
    throw std::invalid_argument("find_cut needs two distinct candidates");
  if (a > b) std::swap(a, b);
  return find_cut_on_view(view_checked(p, t), t, a, b);
}

const Cut& CutTable::at(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const Cut& c : cuts)
    if (c.a == a && c.b == b) return c;
  throw std::out_of_range("no such candidate pair in the cut table");
}

std::variant<CutTable, NoCutWitness> verify_single_crossing(const Profile& p,
                                                            const Tree& t) {
  const auto view = view_checked(p, t);
  const int m = p.candidate_count();
  CutTable table;
  table.cuts.reserve(static_cast<size_t>(m) * (m - 1) / 2);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto r = find_cut_on_view(view, t, a, b);
      if (auto* witness = std::get_if<NoCutWitness>(&r)) return *witness;
      table.cuts.push_back(std::move(std::get<Cut>(r)));
    }
  return table;
}

std::vector<std::pair<int, int>> collapsible_edges(const Tree& t,
                                                   const CutTable& ct) {
  std::vector<std::pair<int, int>> used;
  for (const Cut& c : ct.cuts)
    if (const CutEdge* e = c.edge())
      used.emplace_back(std::min(e->u, e->v), std::max(e->u, e->v));
  std::sort(used.begin(), used.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& e : t.edges())
    if (!std::binary_search(used.begin(), used.end(), e)) out.push_back(e);
  return out;
}

// ==== potential leaves ====

namespace {

// Potential leaves of a flat list of pairwise distinct orders; voter ids are
// 1-based positions in `orders`.
std::vector<PotentialLeaf> scan_potential_leaves(
    const std::vector<const LinearOrder*>& orders) {
  const int n = static_cast<int>(orders.size());
  const int m = orders[0]->candidate_count();

  // unique_holder[a][b] = the only voter preferring a over b, if exactly one.
  std::vector<std::vector<int>> unique_holder(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int count_a = 0, last_a = 0, last_b = 0;
      for (int i = 1; i <= n; ++i) {
        if (orders[i - 1]->prefers(a, b)) {
          ++count_a;
          last_a = i;
        } else {
          last_b = i;
        }
      }
      if (count_a == 1) unique_holder[a][b] = last_a;
      if (count_a == n - 1) unique_holder[b][a] = last_b;
    }

  std::vector<PotentialLeaf> out;
  for (int i = 1; i <= n; ++i) {
    PotentialLeaf pl;
    pl.voter = i;
    // in_s[a][b]: {a,b} is one of i's unique pairs (either direction)
    std::vector<std::vector<char>> in_s(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b && unique_holder[a][b] == i) {
          pl.unique_pairs.emplace_back(a, b);
          in_s[a][b] = in_s[b][a] = 1;
        }
    if (pl.unique_pairs.empty()) continue;
    for (int k = 1; k <= n && pl.witness == 0; ++k) {
      if (k == i) continue;
      bool agrees = true;
      for (int a = 0; a < m && agrees; ++a)
        for (int b = a + 1; b < m && agrees; ++b)
          if (!in_s[a][b] &&
              orders[i - 1]->prefers(a, b) != orders[k - 1]->prefers(a, b))
            agrees = false;
      if (agrees) pl.witness = k;
    }
    if (pl.witness != 0) out.push_back(std::move(pl));
  }
  return out;
}

}  // namespace

std::vector<PotentialLeaf> potential_leaves(const Profile& p) {
  if (p.voter_count() < 2)
    throw std::invalid_argument("potential leaves need at least two voters");
  for (int i = 1; i <= p.voter_count(); ++i)
    for (int j = i + 1; j <= p.voter_count(); ++j)
      if (p.voter(i) == p.voter(j)) throw NotReducedError(i, j);
  std::vector<const LinearOrder*> orders;
  orders.reserve(p.voter_count());
  for (int i = 1; i <= p.voter_count(); ++i) orders.push_back(&p.voter(i));
  return scan_potential_leaves(orders);
}

// ==== recognition ====

namespace {

// Expanded voter ids (1..total weight) grouped by class, ascending.
std::vector<std::vector<int>> expanded_ids_by_class(const Profile& p,
                                                    const ReducedProfile& rp) {
  std::vector<std::vector<int>> ids(rp.class_count());
  int next = 1;
  for (int i = 1; i <= p.voter_count(); ++i)
    for (long long r = 0; r < p.multiplicity(i); ++r)
      ids[rp.class_of[i - 1] - 1].push_back(next++);
  return ids;
}

}  // namespace

std::variant<RecognitionResult, NotSingleCrossing> recognize(const Profile& p) {
  ReducedProfile rp = reduce_profile(p);
  const int kclasses = rp.class_count();

  std::vector<int> alive(kclasses);
  for (int c = 0; c < kclasses; ++c) alive[c] = c + 1;
  std::vector<std::pair<int, int>> peel;

  while (alive.size() > 1) {
    std::vector<const LinearOrder*> orders;
    orders.reserve(alive.size());
    for (int c : alive) orders.push_back(&rp.classes[c - 1]);
    const auto pls = scan_potential_leaves(orders);
    if (pls.empty()) return NotSingleCrossing{alive};
    // Positions are relative to `alive`, which stays sorted, so the first
    // potential leaf is the smallest-index class.
    const int leaf = alive[pls.front().voter - 1];
    const int attach = alive[pls.front().witness - 1];
    peel.emplace_back(leaf, attach);
    alive.erase(std::find(alive.begin(), alive.end(), leaf));
  }

  std::vector<std::pair<int, int>> reduced_edges;
  for (auto it = peel.rbegin(); it != peel.rend(); ++it)
    reduced_edges.emplace_back(it->first, it->second);
  Tree reduced_tree(kclasses, std::move(reduced_edges));

  // Clones hang off their class vertex as a path; the class is represented
  // by its first expanded voter.
  const auto ids = expanded_ids_by_class(p, rp);
  std::vector<std::pair<int, int>> full_edges;
  for (const auto& [cu, cv] : reduced_tree.edges())
    full_edges.emplace_back(ids[cu - 1][0], ids[cv - 1][0]);
  for (const auto& chain : ids)
    for (size_t j = 1; j < chain.size(); ++j)
      full_edges.emplace_back(chain[j - 1], chain[j]);
  Tree full_tree(static_cast<int>(p.total_weight()), std::move(full_edges));

  auto verified = verify_single_crossing(p, full_tree);
  auto* table = std::get_if<CutTable>(&verified);
  if (table == nullptr)
    throw std::logic_error("peeling succeeded but verification failed");

  return RecognitionResult{std::move(rp), std::move(reduced_tree),
                           std::move(full_tree), std::move(*table),
                           std::move(peel)};
}

// ==== generation ====

GeneratedProfile generate_profile(const Tree& t) {
  const int n = t.vertex_count();
  if (n < 2)
    throw std::invalid_argument("witness generation needs at least two vertices");

  // Breadth-first order from vertex 1; every vertex joins after its parent.
  std::vector<int> bfs{1}, parent(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  seen[1] = 1;
  for (size_t head = 0; head < bfs.size(); ++head)
    for (int w : t.neighbors(bfs[head]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = bfs[head];
        bfs.push_back(w);
      }

  std::vector<int> cand_of(n + 1, -1);  // vertex -> candidate index
  for (int j = 0; j < n; ++j) cand_of[bfs[j]] = j;

  std::vector<std::vector<int>> ord(n + 1);
  ord[bfs[0]] = {0, 1};
  ord[bfs[1]] = {1, 0};
  for (int j = 2; j < n; ++j) {
    const int v = bfs[j];
    const int u = parent[v];
    const int cu = cand_of[u];
    const int cv = j;
    // The new voter copies its neighbor but lifts the new candidate just
    // above the neighbor's own; everyone already present slots it just below.
    std::vector<int> fresh = ord[u];
    fresh.insert(std::find(fresh.begin(), fresh.end(), cu), cv);
    for (int w = 0; w < j; ++w) {
      auto& o = ord[bfs[w]];
      o.insert(std::next(std::find(o.begin(), o.end(), cu)), cv);
    }
    ord[v] = std::move(fresh);
  }

  std::vector<std::string> names(n);
  for (int j = 0; j < n; ++j) names[j] = "a" + std::to_string(bfs[j]);
  std::vector<LinearOrder> voters;
  voters.reserve(n);
  for (int v = 1; v <= n; ++v) voters.emplace_back(std::move(ord[v]));

  GeneratedProfile out{Profile(std::move(names), std::move(voters)), {}};
  out.vertex_candidate.assign(cand_of.begin() + 1, cand_of.end());
  return out;
}

// ==== hereditary check ====

std::variant<LineOrdering, NonLineWitness> hereditary_check(
    const Profile& p, const RecognitionResult& rec) {
  const Tree& rt = rec.reduced_tree;
  const int kclasses = rt.vertex_count();
  if (!rt.is_path()) {
    int center = 0;
    for (int v = 1; v <= kclasses && center == 0; ++v)
      if (rt.degree(v) >= 3) center = v;
    const auto& nb = rt.neighbors(center);
    return NonLineWitness{center,
                          {rec.reduced.first_voter[nb[0] - 1],
                           rec.reduced.first_voter[nb[1] - 1],
                           rec.reduced.first_voter[nb[2] - 1]}};
  }

  std::vector<int> walk;
  if (kclasses == 1) {
    walk = {1};
  } else {
    int start = 0;
    for (int v = 1; v <= kclasses && start == 0; ++v)
      if (rt.degree(v) == 1) start = v;
    walk.push_back(start);
    int prev = 0, cur = start;
    while (static_cast<int>(walk.size()) < kclasses) {
      for (int w : rt.neighbors(cur))
        if (w != prev) {
          walk.push_back(w);
          prev = cur;
          cur = w;
          break;
        }
    }
  }

  const auto ids = expanded_ids_by_class(p, rec.reduced);
  LineOrdering line;
  line.voters.reserve(static_cast<size_t>(p.total_weight()));
  for (int c : walk)
    line.voters.insert(line.voters.end(), ids[c - 1].begin(), ids[c - 1].end());
  return line;
}

}  // namespace sctool
