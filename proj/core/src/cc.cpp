#include "sctool/cc.hpp"

#include <algorithm>
#include <stdexcept>

#include "sctool/sctree.hpp"

namespace sctool {

// ==== models ====

PositionalModel borda_model(int m) {
  PositionalModel model;
  model.scores.reserve(m);
  for (int i = 0; i < m; ++i) model.scores.emplace_back(i);
  return model;
}

namespace {

void validate_matrix_rows(const std::vector<std::vector<Rational>>& r,
                          const Profile& p,
                          std::vector<ModelViolation>& out) {
  const int n = p.voter_count();
  const int m = p.candidate_count();
  if (static_cast<int>(r.size()) != n) {
    out.push_back({0, -1, -1, "matrix needs one row per voter"});
    return;
  }
  for (int i = 1; i <= n; ++i) {
    const auto& row = r[i - 1];
    if (static_cast<int>(row.size()) != m) {
      out.push_back({i, -1, -1, "row needs one entry per candidate"});
      continue;
    }
    for (int c = 0; c < m; ++c)
      if (row[c].negative())
        out.push_back({i, c, -1, "negative misrepresentation"});
    // Nondecreasing along the voter's ranking.
    for (int rank = 0; rank + 1 < m; ++rank) {
      const int hi = p.voter(i).at(rank), lo = p.voter(i).at(rank + 1);
      if (row[hi] > row[lo])
        out.push_back({i, hi, lo,
                       "misrepresentation decreases down the ranking"});
    }
  }
}

}  // namespace

std::vector<ModelViolation> validate_model(const MisrepModel& model,
                                           const Profile& p) {
  std::vector<ModelViolation> out;
  const int m = p.candidate_count();
  if (const auto* pos = std::get_if<PositionalModel>(&model)) {
    if (static_cast<int>(pos->scores.size()) != m) {
      out.push_back({0, -1, -1, "score vector needs one entry per candidate"});
      return out;
    }
    if (!pos->scores[0].zero())
      out.push_back({0, -1, -1, "top position must cost 0"});
    for (int i = 0; i < m; ++i)
      if (pos->scores[i].negative())
        out.push_back({0, i, -1, "negative score"});
    for (int i = 0; i + 1 < m; ++i)
      if (pos->scores[i] > pos->scores[i + 1])
        out.push_back({0, i, i + 1, "scores must be nondecreasing"});
  } else if (const auto* app = std::get_if<ApprovalModel>(&model)) {
    if (static_cast<int>(app->approved.size()) != p.voter_count()) {
      out.push_back({0, -1, -1, "approval needs one set per voter"});
      return out;
    }
    for (int i = 1; i <= p.voter_count(); ++i) {
      const auto& set = app->approved[i - 1];
      std::vector<char> is_approved(m, 0);
      for (int c : set) {
        if (c < 0 || c >= m) {
          out.push_back({i, c, -1, "approved candidate out of range"});
          continue;
        }
        if (is_approved[c])
          out.push_back({i, c, -1, "candidate approved twice"});
        is_approved[c] = 1;
      }
      // The approved set must be a top segment of the ranking, or the
      // derived matrix would increase and then drop again.
      for (size_t rank = 0; rank < set.size(); ++rank) {
        const int c = p.voter(i).at(static_cast<int>(rank));
        if (!is_approved[c]) {
          out.push_back({i, c, -1,
                         "approved set is not a top segment of the ranking"});
          break;
        }
      }
    }
  } else {
    validate_matrix_rows(std::get<MatrixModel>(model).r, p, out);
  }
  return out;
}

Rational misrep(const MisrepModel& model, const Profile& p, int voter, int c) {
  if (const auto* pos = std::get_if<PositionalModel>(&model))
    return pos->scores.at(p.voter(voter).position(c) - 1);
  if (const auto* app = std::get_if<ApprovalModel>(&model)) {
    const auto& set = app->approved.at(voter - 1);
    return std::find(set.begin(), set.end(), c) != set.end() ? 0 : 1;
  }
  return std::get<MatrixModel>(model).r.at(voter - 1).at(c);
}

// ==== assignments ====

std::vector<int> committee_of(const Assignment& w) {
  std::vector<int> out = w.rep;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational assignment_cost(const Profile& p, const Assignment& w,
                         const MisrepModel& model, Mode mode) {
  if (static_cast<int>(w.rep.size()) != p.voter_count())
    throw std::invalid_argument("assignment needs one candidate per voter");
  Rational total = 0;
  for (int i = 1; i <= p.voter_count(); ++i) {
    const Rational r = misrep(model, p, i, w.rep[i - 1]);
    if (mode == Mode::Utilitarian)
      total += r * Rational(p.multiplicity(i));
    else if (r > total)
      total = r;
  }
  return total;
}

Assignment best_assignment_for_committee(const Profile& p,
                                         const std::vector<int>& committee,
                                         const MisrepModel& model) {
  if (committee.empty())
    throw std::invalid_argument("committee must not be empty");
  Assignment w;
  w.rep.reserve(p.voter_count());
  for (int i = 1; i <= p.voter_count(); ++i) {
    int best = -1;
    Rational best_cost;
    for (int c : committee) {
      const Rational r = misrep(model, p, i, c);
      if (best < 0 || r < best_cost ||
          (r == best_cost &&
           p.voter(i).position(c) < p.voter(i).position(best))) {
        best = c;
        best_cost = r;
      }
    }
    w.rep.push_back(best);
  }
  return w;
}

// ==== optimal committees ====

namespace {

struct ExpandedInstance {
  Profile profile;
  MisrepModel model;
};

// Voter-indexed model rows follow the voters they describe when a profile
// with multiplicities is expanded.
ExpandedInstance expand_instance(const Profile& p, const MisrepModel& model) {
  if (p.is_flat()) return {p, model};
  Profile pe = p.expanded();
  if (const auto* app = std::get_if<ApprovalModel>(&model)) {
    ApprovalModel out;
    for (int i = 1; i <= p.voter_count(); ++i)
      for (long long r = 0; r < p.multiplicity(i); ++r)
        out.approved.push_back(app->approved.at(i - 1));
    return {std::move(pe), std::move(out)};
  }
  if (const auto* mat = std::get_if<MatrixModel>(&model)) {
    MatrixModel out;
    for (int i = 1; i <= p.voter_count(); ++i)
      for (long long r = 0; r < p.multiplicity(i); ++r)
        out.r.push_back(mat->r.at(i - 1));
    return {std::move(pe), std::move(out)};
  }
  return {std::move(pe), model};
}

using Cell = std::optional<Rational>;
using Table = std::vector<std::vector<Cell>>;  // [candidate][parts used]

Cell combine(const Cell& a, const Cell& b, Mode mode) {
  if (!a || !b) return std::nullopt;
  return mode == Mode::Utilitarian ? *a + *b : std::max(*a, *b);
}

void take_min(Cell& into, const Cell& candidate) {
  if (candidate && (!into || *candidate < *into)) into = candidate;
}

struct CcDp {
  const Profile& p;
  const MisrepModel& model;
  const Tree& t;
  Mode mode;
  int tcap;                        // part-budget columns per table
  std::vector<int> allowed;       // candidate indices the committee may use
  std::vector<int> post, parent;  // rooted at the anchor
  std::vector<std::vector<int>> children;
  std::vector<Table> final_table;            // per vertex, after all merges
  std::vector<std::vector<Table>> snapshots; // per vertex, before each merge
  std::vector<int> color;                    // reconstruction output

  Cell best_over_allowed(const Table& table, int budget) const {
    Cell best;
    for (int c : allowed) take_min(best, table[c][budget]);
    return best;
  }

  Table merged(const Table& prev, const Table& child) const {
    const int m = p.candidate_count();
    std::vector<Cell> child_best(tcap);
    for (int t2 = 0; t2 < tcap; ++t2)
      child_best[t2] = best_over_allowed(child, t2);
    Table out(m, std::vector<Cell>(tcap));
    for (int c : allowed)
      for (int budget = 0; budget < tcap; ++budget) {
        Cell& cell = out[c][budget];
        for (int t1 = 0; t1 <= budget; ++t1) {
          // keep the edge: the child joins this part
          take_min(cell, combine(prev[c][t1], child[c][budget - t1], mode));
          // cut the edge: the child's subtree finishes its own parts
          if (t1 < budget)
            take_min(cell,
                     combine(prev[c][t1], child_best[budget - 1 - t1], mode));
        }
      }
    return out;
  }

  void run(int anchor) {
    const int n = t.vertex_count();
    parent.assign(n + 1, 0);
    children.assign(n + 1, {});
    post.clear();
    std::vector<int> stack{anchor}, order;
    std::vector<char> seen(n + 1, 0);
    seen[anchor] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : t.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          children[v].push_back(w);
          stack.push_back(w);
        }
    }
    post.assign(order.rbegin(), order.rend());

    const int m = p.candidate_count();
    final_table.assign(n + 1, {});
    snapshots.assign(n + 1, {});
    for (int v : post) {
      Table table(m, std::vector<Cell>(tcap));
      for (int c : allowed)
        for (int budget = 0; budget < tcap; ++budget)
          table[c][budget] = misrep(model, p, v, c);
      for (int u : children[v]) {
        snapshots[v].push_back(table);
        table = merged(table, final_table[u]);
      }
      final_table[v] = std::move(table);
    }
  }

  void assign(int v, int c, int budget) {
    color[v] = c;
    for (int i = static_cast<int>(children[v].size()) - 1; i >= 0; --i) {
      const int u = children[v][i];
      const Table& prev = snapshots[v][i];
      const Table& after =
          i + 1 < static_cast<int>(children[v].size()) ? snapshots[v][i + 1]
                                                       : final_table[v];
      const Cell target = after[c][budget];
      bool placed = false;
      for (int t1 = 0; t1 <= budget && !placed; ++t1) {
        if (combine(prev[c][t1], final_table[u][c][budget - t1], mode) ==
            target) {
          assign(u, c, budget - t1);
          budget = t1;
          placed = true;
        }
      }
      for (int t1 = 0; t1 < budget && !placed; ++t1) {
        const int t2 = budget - 1 - t1;
        const Cell child_best = best_over_allowed(final_table[u], t2);
        if (combine(prev[c][t1], child_best, mode) == target) {
          for (int cu : allowed)
            if (final_table[u][cu][t2] == child_best) {
              assign(u, cu, t2);
              break;
            }
          budget = t1;
          placed = true;
        }
      }
      if (!placed) throw std::logic_error("committee reconstruction failed");
    }
  }
};

CCResult cc_optimal_impl(const Profile& p, const Tree& t, int k,
                         const MisrepModel& model, Mode mode,
                         std::vector<int> allowed,
                         std::optional<int> anchor_choice) {
  if (k < 1 || k > p.candidate_count())
    throw std::invalid_argument("committee size out of range");
  {
    const auto violations = validate_model(model, p);
    if (!violations.empty())
      throw std::invalid_argument("invalid misrepresentation model: " +
                                  violations.front().what);
  }
  auto [pe, me] = expand_instance(p, model);
  if (std::holds_alternative<NoCutWitness>(verify_single_crossing(pe, t)))
    throw NotSingleCrossingError();

  if (allowed.empty()) {
    allowed.resize(pe.candidate_count());
    for (int c = 0; c < pe.candidate_count(); ++c) allowed[c] = c;
  } else {
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    for (int c : allowed)
      if (c < 0 || c >= pe.candidate_count())
        throw std::invalid_argument("allowed candidate out of range");
  }

  int anchor;
  if (anchor_choice) {
    anchor = *anchor_choice;
    if (anchor < 1 || anchor > t.vertex_count() || t.degree(anchor) > 1)
      throw std::invalid_argument("anchor must be a leaf of the tree");
  } else {
    anchor = t.leaves().front();
  }

  CcDp dp{pe,
          me,
          t,
          mode,
          std::min<int>(k, t.vertex_count()),
          std::move(allowed),
          {},
          {},
          {},
          {},
          {},
          {}};
  dp.run(anchor);

  const int budget = dp.tcap - 1;
  Cell phi;
  int top = -1;
  for (int c : dp.allowed)
    if (dp.final_table[anchor][c][budget] &&
        (!phi || *dp.final_table[anchor][c][budget] < *phi)) {
      phi = dp.final_table[anchor][c][budget];
      top = c;
    }
  if (!phi) throw std::logic_error("dynamic program left no feasible state");

  dp.color.assign(t.vertex_count() + 1, -1);
  dp.assign(anchor, top, budget);

  CCResult result;
  result.k = k;
  result.mode = mode;
  result.phi = *phi;
  result.assignment.rep.assign(dp.color.begin() + 1, dp.color.end());
  result.committee = committee_of(result.assignment);
  if (static_cast<int>(result.committee.size()) > k ||
      assignment_cost(pe, result.assignment, me, mode) != result.phi)
    throw std::logic_error("reconstructed assignment does not match its cost");
  return result;
}

}  // namespace

CCResult cc_optimal(const Profile& p, const Tree& t, int k,
                    const MisrepModel& model, Mode mode) {
  return cc_optimal_impl(p, t, k, model, mode, {}, std::nullopt);
}

CCResult cc_optimal_restricted(const Profile& p, const Tree& t, int k,
                               const MisrepModel& model, Mode mode,
                               const std::vector<int>& allowed) {
  if (allowed.empty())
    throw std::invalid_argument("restriction must allow some candidate");
  return cc_optimal_impl(p, t, k, model, mode, allowed, std::nullopt);
}

CCResult cc_optimal_anchored(const Profile& p, const Tree& t, int k,
                             const MisrepModel& model, Mode mode, int anchor) {
  return cc_optimal_impl(p, t, k, model, mode, {}, anchor);
}

}  // namespace sctool
