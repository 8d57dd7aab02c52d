#include "sctool/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sctool {

namespace {

using json = nlohmann::ordered_json;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Content lines only: blank lines and lines whose first non-blank character
// is '#' are dropped here.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream stream{std::string(text.substr(start, end - start))};
    std::vector<std::string> tokens;
    for (std::string tok; stream >> tok;) tokens.push_back(tok);
    if (!tokens.empty() && tokens.front()[0] != '#')
      out.push_back({number, std::move(tokens)});
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

bool parse_multiplicity(const std::string& tok, long long* k) {
  if (tok.size() < 2 || tok.back() != '*') return false;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size() - 1;
  if (!std::all_of(first, last, [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  return std::from_chars(first, last, *k).ec == std::errc() &&
         std::from_chars(first, last, *k).ptr == last;
}

std::optional<int> parse_int(const std::string& tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "no candidate line found");

  const std::vector<std::string>& names = lines.front().tokens;
  std::set<std::string_view> seen;
  for (const std::string& name : names) {
    long long k;
    if (parse_multiplicity(name, &k))
      throw ParseError(lines.front().number,
                       "candidate name '" + name +
                           "' would be read as a multiplicity prefix");
    if (!seen.insert(name).second)
      throw ParseError(lines.front().number,
                       "duplicate candidate '" + name + "'");
  }

  std::vector<LinearOrder> voters;
  std::vector<long long> multiplicities;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    size_t first = 0;
    long long mult = 1;
    if (parse_multiplicity(line.tokens[0], &mult)) {
      if (mult < 1)
        throw ParseError(line.number, "multiplicity must be positive");
      first = 1;
    }
    if (line.tokens.size() - first != names.size())
      throw ParseError(line.number,
                       "expected " + std::to_string(names.size()) +
                           " candidates, got " +
                           std::to_string(line.tokens.size() - first));
    std::vector<int> ranking;
    std::vector<char> used(names.size(), 0);
    for (size_t ti = first; ti < line.tokens.size(); ++ti) {
      const std::string& tok = line.tokens[ti];
      const auto it = std::find(names.begin(), names.end(), tok);
      if (it == names.end())
        throw ParseError(line.number, "unknown candidate '" + tok + "'");
      const int c = static_cast<int>(it - names.begin());
      if (used[c])
        throw ParseError(line.number, "candidate '" + tok + "' listed twice");
      used[c] = 1;
      ranking.push_back(c);
    }
    voters.emplace_back(std::move(ranking));
    multiplicities.push_back(mult);
  }

  try {
    return Profile(names, std::move(voters), std::move(multiplicities));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

namespace {

std::vector<std::pair<int, int>> parse_edges(const std::vector<Line>& lines,
                                             int max_vertex) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const Line& line : lines) {
    if (line.tokens.size() != 2)
      throw ParseError(line.number, "expected an edge 'u v'");
    const auto u = parse_int(line.tokens[0]);
    const auto v = parse_int(line.tokens[1]);
    if (!u || !v) throw ParseError(line.number, "edge endpoints must be integers");
    if (*u < 1 || *v < 1 || (max_vertex > 0 && (*u > max_vertex || *v > max_vertex)))
      throw ParseError(line.number, "vertex out of range");
    if (*u == *v) throw ParseError(line.number, "self-loop");
    const auto norm = std::minmax(*u, *v);
    if (!seen.insert({norm.first, norm.second}).second)
      throw ParseError(line.number, "duplicate edge");
    edges.emplace_back(*u, *v);
  }
  return edges;
}

}  // namespace

Tree parse_tree(std::string_view text, int vertex_count) {
  const auto edges = parse_edges(content_lines(text), vertex_count);
  try {
    return Tree(vertex_count, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Tree parse_tree_auto(std::string_view text) {
  const auto edges = parse_edges(content_lines(text), 0);
  if (edges.empty()) throw ParseError(0, "tree file has no edges");
  int n = 0;
  for (const auto& [u, v] : edges) n = std::max({n, u, v});
  try {
    return Tree(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string emit_profile(const Profile& p) {
  std::string out;
  for (int c = 0; c < p.candidate_count(); ++c) {
    if (c) out += ' ';
    out += p.candidate_name(c);
  }
  out += '\n';
  for (int i = 1; i <= p.voter_count(); ++i) {
    if (p.multiplicity(i) > 1)
      out += std::to_string(p.multiplicity(i)) + "* ";
    for (int rank = 0; rank < p.candidate_count(); ++rank) {
      if (rank) out += ' ';
      out += p.candidate_name(p.voter(i).at(rank));
    }
    out += '\n';
  }
  return out;
}

std::string emit_tree(const Tree& t) {
  std::string out;
  for (const auto& [u, v] : t.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ==== JSON ====

namespace {

json order_names(const LinearOrder& order, const std::vector<std::string>& names) {
  json out = json::array();
  for (int c : order.ranking()) out.push_back(names[c]);
  return out;
}

json profile_obj(const Profile& p) {
  json out;
  out["candidates"] = p.candidates();
  json voters = json::array();
  for (int i = 1; i <= p.voter_count(); ++i)
    for (long long r = 0; r < p.multiplicity(i); ++r)
      voters.push_back(order_names(p.voter(i), p.candidates()));
  out["voters"] = std::move(voters);
  return out;
}

json tree_obj(const Tree& t) {
  json out;
  out["n"] = t.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back(json::array({u, v}));
  out["edges"] = std::move(edges);
  return out;
}

json cut_obj(const Cut& cut, const std::vector<std::string>& names) {
  json out;
  out["a"] = names[cut.a];
  out["b"] = names[cut.b];
  if (const CutEdge* e = cut.edge())
    out["cut"] = {{"edge", json::array({e->u, e->v})}};
  else
    out["cut"] = {{"virtual", std::get<Unanimous>(cut.kind) == Unanimous::PreferA
                                  ? "a"
                                  : "b"}};
  return out;
}

json cut_table_obj(const CutTable& ct, const std::vector<std::string>& names) {
  json pairs = json::array();
  for (const Cut& cut : ct.cuts) pairs.push_back(cut_obj(cut, names));
  json out;
  out["pairs"] = std::move(pairs);
  return out;
}

}  // namespace

std::string profile_json(const Profile& p) { return profile_obj(p).dump(); }

std::string tree_json(const Tree& t) { return tree_obj(t).dump(); }

std::string cut_table_json(const CutTable& ct, const Profile& p) {
  return cut_table_obj(ct, p.candidates()).dump();
}

std::string no_cut_witness_json(const NoCutWitness& w, const Profile& p) {
  json out;
  out["single_crossing"] = false;
  out["a"] = p.candidate_name(w.a);
  out["b"] = p.candidate_name(w.b);
  out["disconnected_side"] = std::string(1, w.side);
  out["vertices"] = json::array({w.u, w.v});
  return out.dump();
}

std::string recognition_json(const RecognitionResult& rec) {
  json out;
  out["single_crossing"] = true;
  json classes = json::array();
  for (int k = 0; k < rec.reduced.class_count(); ++k) {
    json cls;
    cls["order"] = order_names(rec.reduced.classes[k], rec.reduced.candidates);
    cls["count"] = rec.reduced.counts[k];
    cls["first_voter"] = rec.reduced.first_voter[k];
    classes.push_back(std::move(cls));
  }
  out["classes"] = std::move(classes);
  out["reduced_tree"] = tree_obj(rec.reduced_tree);
  out["full_tree"] = tree_obj(rec.full_tree);
  out["cut_table"] = cut_table_obj(rec.cut_table, rec.reduced.candidates);
  json peel = json::array();
  for (const auto& [leaf, attach] : rec.peel_order)
    peel.push_back(json::array({leaf, attach}));
  out["peel_order"] = std::move(peel);
  return out.dump();
}

std::string not_single_crossing_json(const NotSingleCrossing& ns,
                                     const Profile& p) {
  (void)p;
  json out;
  out["single_crossing"] = false;
  out["stuck_classes"] = ns.stuck_classes;
  return out.dump();
}

std::string generated_json(const GeneratedProfile& g) {
  json out;
  out["profile"] = profile_obj(g.profile);
  json vc = json::array();
  for (int c : g.vertex_candidate) vc.push_back(g.profile.candidate_name(c));
  out["vertex_candidate"] = std::move(vc);
  return out.dump();
}

std::string line_ordering_json(const LineOrdering& l) {
  json out;
  out["line"] = l.voters;
  return out.dump();
}

std::string non_line_witness_json(const NonLineWitness& w) {
  json out;
  out["center_class"] = w.center;
  out["voters"] = json::array({w.voters[0], w.voters[1], w.voters[2]});
  return out.dump();
}

std::string majority_json(const Profile& p, const MarginMatrix& mm,
                          const MajorityRelation& rel,
                          const std::optional<int>& representative,
                          std::string_view representative_status) {
  json out;
  out["candidates"] = p.candidates();
  out["total_weight"] = mm.total_weight;
  json margins = json::array();
  for (const auto& row : mm.margin) margins.push_back(row);
  out["margins"] = std::move(margins);
  json relation = json::array();
  for (const auto& row : rel.rel) relation.push_back(row);
  out["relation"] = std::move(relation);
  out["transitive"] = rel.transitive;
  out["representative_status"] = std::string(representative_status);
  if (representative)
    out["representative_voter"] = *representative;
  else
    out["representative_voter"] = nullptr;
  return out.dump();
}

std::string condorcet_report_json(const CondorcetSampleReport& report,
                                  const ReducedProfile& d) {
  json out;
  out["trials"] = report.trials;
  out["failures"] = report.failures;
  if (report.counterexample) {
    json ce;
    ce["weights"] = report.counterexample->weights;
    json cycle = json::array();
    for (int c : report.counterexample->cycle) cycle.push_back(d.candidates[c]);
    ce["cycle"] = std::move(cycle);
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  return out.dump();
}

std::string cc_result_json(const CCResult& r, const Profile& p) {
  json out;
  out["k"] = r.k;
  out["mode"] = r.mode == Mode::Utilitarian ? "utilitarian" : "egalitarian";
  out["phi"] = r.phi.str();
  json committee = json::array();
  for (int c : r.committee) committee.push_back(p.candidate_name(c));
  out["committee"] = std::move(committee);
  json assignment;
  for (size_t i = 0; i < r.assignment.rep.size(); ++i)
    assignment[std::to_string(i + 1)] = p.candidate_name(r.assignment.rep[i]);
  out["assignment"] = std::move(assignment);
  return out.dump();
}

std::string exhaustive_json(const ExhaustiveRecognition& ex) {
  json out;
  out["classes"] = ex.classes;
  json passing = json::array();
  for (const Tree& t : ex.passing) passing.push_back(tree_obj(t));
  out["passing"] = std::move(passing);
  json minimal = json::array();
  for (const Tree& t : ex.minimal) minimal.push_back(tree_obj(t));
  out["minimal"] = std::move(minimal);
  return out.dump();
}

std::string classical_json(const std::optional<std::vector<int>>& ordering) {
  json out;
  out["single_crossing"] = ordering.has_value();
  if (ordering)
    out["ordering"] = *ordering;
  else
    out["ordering"] = nullptr;
  return out.dump();
}

}  // namespace sctool
