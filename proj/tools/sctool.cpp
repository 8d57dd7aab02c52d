#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sctool/io.hpp"
#include "sctool/oracle.hpp"

using namespace sctool;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Profile load_profile(const std::string& path) {
  try {
    return parse_profile(slurp(path));
  } catch (const ParseError& e) {
    if (e.line > 0)
      std::cerr << path << ":" << e.line << ": " << e.what() << "\n";
    else
      std::cerr << path << ": " << e.what() << "\n";
    std::exit(2);
  }
}

Tree load_tree(const std::string& path, int vertex_count) {
  try {
    const std::string text = slurp(path);
    return vertex_count > 0 ? parse_tree(text, vertex_count)
                            : parse_tree_auto(text);
  } catch (const ParseError& e) {
    if (e.line > 0)
      std::cerr << path << ":" << e.line << ": " << e.what() << "\n";
    else
      std::cerr << path << ": " << e.what() << "\n";
    std::exit(2);
  }
}

int tree_size_for(const Profile& p, const std::string& tree_path) {
  if (p.total_weight() > 1000000) {
    std::cerr << tree_path << ": profile weight too large for a voter tree\n";
    std::exit(2);
  }
  return static_cast<int>(p.total_weight());
}

std::string describe_cut(const Cut& cut, const Profile& p) {
  std::string line = p.candidate_name(cut.a) + " vs " + p.candidate_name(cut.b);
  if (const CutEdge* e = cut.edge())
    line += ": edge (" + std::to_string(e->u) + "," + std::to_string(e->v) + ")";
  else
    line += std::get<Unanimous>(cut.kind) == Unanimous::PreferA
                ? ": unanimous for " + p.candidate_name(cut.a)
                : ": unanimous for " + p.candidate_name(cut.b);
  return line;
}

void print_tree(const Tree& t, const std::string& label) {
  std::cout << label << ":";
  for (const auto& [u, v] : t.edges())
    std::cout << " (" << u << "," << v << ")";
  if (t.edges().empty()) std::cout << " single vertex";
  std::cout << "\n";
}

// ---- misrep spec ----

std::vector<int> parse_approval_line(const std::string& line, const Profile& p,
                                     const std::string& path, int lineno) {
  std::vector<int> out;
  std::istringstream stream(line);
  std::string tok;
  while (stream >> tok) {
    if (tok == "-") continue;
    const int c = p.candidate_index(tok);
    if (c < 0) {
      std::cerr << path << ":" << lineno << ": unknown candidate '" << tok
                << "'\n";
      std::exit(2);
    }
    out.push_back(c);
  }
  return out;
}

MisrepModel load_misrep(const std::string& spec, const Profile& p) {
  if (spec == "borda") return borda_model(p.candidate_count());
  if (spec.rfind("positional:", 0) == 0) {
    PositionalModel model;
    std::string body = spec.substr(11);
    size_t start = 0;
    while (start <= body.size()) {
      size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      const auto r = Rational::parse(body.substr(start, comma - start));
      if (!r) {
        std::cerr << "--misrep: bad rational in positional spec\n";
        std::exit(2);
      }
      model.scores.push_back(*r);
      start = comma + 1;
      if (comma == body.size()) break;
    }
    return model;
  }
  if (spec.rfind("approval:", 0) == 0) {
    const std::string path = spec.substr(9);
    const std::string text = slurp(path);
    ApprovalModel model;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      model.approved.push_back(parse_approval_line(line, p, path, lineno));
    }
    return model;
  }
  if (spec.rfind("matrix:", 0) == 0) {
    const std::string path = spec.substr(7);
    const std::string text = slurp(path);
    MatrixModel model;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::vector<Rational> row;
      std::istringstream cells(line);
      std::string tok;
      while (cells >> tok) {
        const auto r = Rational::parse(tok);
        if (!r) {
          std::cerr << path << ":" << lineno << ": bad rational '" << tok
                    << "'\n";
          std::exit(2);
        }
        row.push_back(*r);
      }
      model.r.push_back(std::move(row));
    }
    return model;
  }
  std::cerr << "--misrep: expected borda | positional:<list> | approval:<file> "
               "| matrix:<file>\n";
  std::exit(2);
}

MisrepModel checked_misrep(const std::string& spec, const Profile& p) {
  MisrepModel model = load_misrep(spec, p);
  const auto violations = validate_model(model, p);
  if (!violations.empty()) {
    const ModelViolation& v = violations.front();
    std::cerr << "--misrep: " << v.what;
    if (v.voter > 0) std::cerr << " (voter " << v.voter << ")";
    std::cerr << "\n";
    std::exit(2);
  }
  return model;
}

// ---- subcommand bodies ----

int run_verify(const std::string& profile_path, const std::string& tree_path,
               bool json) {
  const Profile p = load_profile(profile_path);
  const Tree t = load_tree(tree_path, tree_size_for(p, tree_path));
  const auto result = verify_single_crossing(p, t);
  if (const auto* table = std::get_if<CutTable>(&result)) {
    if (json) {
      std::cout << cut_table_json(*table, p) << "\n";
    } else {
      std::cout << "single-crossing on the given tree\n";
      for (const Cut& cut : table->cuts)
        std::cout << "  " << describe_cut(cut, p) << "\n";
    }
    return 0;
  }
  const NoCutWitness& w = std::get<NoCutWitness>(result);
  if (json) {
    std::cout << no_cut_witness_json(w, p) << "\n";
  } else {
    const std::string x = p.candidate_name(w.side == 'a' ? w.a : w.b);
    const std::string y = p.candidate_name(w.side == 'a' ? w.b : w.a);
    std::cout << "not single-crossing: voters " << w.u << " and " << w.v
              << " both prefer " << x << " over " << y
              << " but no edge separates that camp\n";
  }
  return 1;
}

int run_recognize(const std::string& profile_path, bool json) {
  const Profile p = load_profile(profile_path);
  const auto result = recognize(p);
  if (const auto* rec = std::get_if<RecognitionResult>(&result)) {
    if (json) {
      std::cout << recognition_json(*rec) << "\n";
    } else {
      std::cout << "single-crossing; " << rec->reduced.class_count()
                << " distinct orders\n";
      print_tree(rec->reduced_tree, "minimal tree (classes)");
      print_tree(rec->full_tree, "tree (all voters)");
      std::cout << "peel order:";
      for (const auto& [leaf, attach] : rec->peel_order)
        std::cout << " " << leaf << "->" << attach;
      std::cout << "\n";
    }
    return 0;
  }
  const NotSingleCrossing& ns = std::get<NotSingleCrossing>(result);
  if (json) {
    std::cout << not_single_crossing_json(ns, p) << "\n";
  } else {
    std::cout << "not single-crossing: no potential leaf among classes";
    for (int c : ns.stuck_classes) std::cout << " " << c;
    std::cout << "\n";
  }
  return 1;
}

int run_generate(const std::string& tree_path, bool json) {
  const Tree t = load_tree(tree_path, 0);
  const GeneratedProfile g = generate_profile(t);
  if (json) {
    std::cout << generated_json(g) << "\n";
  } else {
    std::cout << emit_profile(g.profile);
    for (int v = 1; v <= t.vertex_count(); ++v)
      std::cout << "# vertex " << v << ": "
                << g.profile.candidate_name(g.vertex_candidate[v - 1]) << "\n";
  }
  return 0;
}

int run_majority(const std::string& profile_path, bool json) {
  const Profile p = load_profile(profile_path);
  const MarginMatrix mm = majority_margins(p);
  const MajorityRelation rel = strict_majority(mm);
  std::optional<int> representative;
  std::string status;
  if (mm.total_weight % 2 == 0) {
    status = "even_electorate";
  } else {
    representative = representative_voter(p);
    status = representative ? "found" : "none";
  }
  if (json) {
    std::cout << majority_json(p, mm, rel, representative, status) << "\n";
  } else {
    std::cout << "total weight " << mm.total_weight << "\n";
    for (int a = 0; a < p.candidate_count(); ++a)
      for (int b = a + 1; b < p.candidate_count(); ++b) {
        const long long margin = mm.at(a, b);
        if (margin > 0)
          std::cout << "  " << p.candidate_name(a) << " beats "
                    << p.candidate_name(b) << " by " << margin << "\n";
        else if (margin < 0)
          std::cout << "  " << p.candidate_name(b) << " beats "
                    << p.candidate_name(a) << " by " << -margin << "\n";
        else
          std::cout << "  " << p.candidate_name(a) << " ties "
                    << p.candidate_name(b) << "\n";
      }
    std::cout << (rel.transitive ? "strict majority relation is transitive\n"
                                 : "strict majority relation is NOT transitive\n");
    if (status == "even_electorate")
      std::cout << "representative voter: skipped (even total weight)\n";
    else if (representative)
      std::cout << "representative voter: " << *representative << "\n";
    else
      std::cout << "representative voter: none\n";
  }
  const bool negative = !rel.transitive || status == "none";
  return negative ? 1 : 0;
}

int run_cc(const std::string& profile_path, const std::string& tree_path, int k,
           const std::string& rule, const std::string& misrep_spec, bool json) {
  const Profile p = load_profile(profile_path);
  const Tree t = load_tree(tree_path, tree_size_for(p, tree_path));
  const MisrepModel model = checked_misrep(misrep_spec, p);
  const Mode mode = rule == "egalitarian" ? Mode::Egalitarian : Mode::Utilitarian;
  try {
    const CCResult r = cc_optimal(p, t, k, model, mode);
    if (json) {
      std::cout << cc_result_json(r, p) << "\n";
    } else {
      std::cout << "phi = " << r.phi.str() << "\n";
      std::cout << "committee:";
      for (int c : r.committee) std::cout << " " << p.candidate_name(c);
      std::cout << "\n";
      for (size_t i = 0; i < r.assignment.rep.size(); ++i)
        std::cout << "  voter " << i + 1 << " -> "
                  << p.candidate_name(r.assignment.rep[i]) << "\n";
    }
    return 0;
  } catch (const NotSingleCrossingError&) {
    const auto check = verify_single_crossing(p, t);
    const NoCutWitness& w = std::get<NoCutWitness>(check);
    if (json)
      std::cout << no_cut_witness_json(w, p) << "\n";
    else
      std::cout << "not single-crossing on the given tree; no committee "
                   "computed\n";
    return 1;
  }
}

int run_check_domain(const std::string& profile_path, long long trials,
                     std::uint64_t seed, bool json) {
  const Profile p = load_profile(profile_path);
  const ReducedProfile d = reduce_profile(p);
  const CondorcetSampleReport report = sample_condorcet_check(d, trials, 10, seed);
  if (json) {
    std::cout << condorcet_report_json(report, d) << "\n";
  } else {
    std::cout << report.trials << " trials, " << report.failures
              << " transitivity failures\n";
    if (report.counterexample) {
      std::cout << "first counterexample: weights";
      for (long long w : report.counterexample->weights) std::cout << " " << w;
      const auto& cyc = report.counterexample->cycle;
      std::cout << "; cycle " << d.candidates[cyc[0]] << " > "
                << d.candidates[cyc[1]] << " > " << d.candidates[cyc[2]]
                << " but not " << d.candidates[cyc[0]] << " > "
                << d.candidates[cyc[2]] << "\n";
    }
  }
  return report.failures == 0 ? 0 : 1;
}

int run_oracle_recognize(const std::string& profile_path, bool json) {
  const Profile p = load_profile(profile_path);
  ExhaustiveRecognition ex;
  try {
    ex = recognize_exhaustive(p);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (json) {
    std::cout << exhaustive_json(ex) << "\n";
  } else {
    std::cout << ex.classes << " classes, " << ex.passing.size()
              << " passing trees, " << ex.minimal.size() << " minimal\n";
    for (const Tree& t : ex.minimal) print_tree(t, "minimal");
  }
  return ex.passing.empty() ? 1 : 0;
}

int run_oracle_cc(const std::string& profile_path, int k,
                  const std::string& rule, const std::string& misrep_spec,
                  bool json) {
  const Profile p = load_profile(profile_path);
  const MisrepModel model = checked_misrep(misrep_spec, p);
  const Mode mode = rule == "egalitarian" ? Mode::Egalitarian : Mode::Utilitarian;
  try {
    const CCResult r = cc_brute_force(p, k, model, mode);
    if (json) {
      std::cout << cc_result_json(r, p) << "\n";
    } else {
      std::cout << "phi = " << r.phi.str() << "\n";
      std::cout << "committee:";
      for (int c : r.committee) std::cout << " " << p.candidate_name(c);
      std::cout << "\n";
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int run_oracle_classical(const std::string& profile_path, bool json) {
  const Profile p = load_profile(profile_path);
  std::optional<std::vector<int>> ordering;
  try {
    ordering = classical_sc_check(p);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (json) {
    std::cout << classical_json(ordering) << "\n";
  } else if (ordering) {
    std::cout << "single-crossing along voters";
    for (int v : *ordering) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "no single-crossing voter ordering exists\n";
  }
  return ordering ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-crossing-on-trees toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string profile_path, tree_path;
  std::string rule = "utilitarian", misrep_spec = "borda";
  int k = 0;
  long long trials = 1000;
  std::uint64_t seed = 0;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "check a profile against a tree");
  verify->add_option("profile", profile_path)->required();
  verify->add_option("tree", tree_path)->required();
  add_format(verify);

  CLI::App* recognize_cmd = app.add_subcommand("recognize", "find the minimal tree");
  recognize_cmd->add_option("profile", profile_path)->required();
  add_format(recognize_cmd);

  CLI::App* generate = app.add_subcommand("generate", "witness profile for a tree");
  generate->add_option("tree", tree_path)->required();
  add_format(generate);

  CLI::App* majority = app.add_subcommand("majority", "margins and representative voter");
  majority->add_option("profile", profile_path)->required();
  add_format(majority);

  CLI::App* cc = app.add_subcommand("cc", "optimal committee");
  cc->add_option("profile", profile_path)->required();
  cc->add_option("tree", tree_path)->required();
  cc->add_option("-k", k)->required();
  cc->add_option("--rule", rule)->check(CLI::IsMember({"utilitarian", "egalitarian"}));
  cc->add_option("--misrep", misrep_spec);
  add_format(cc);

  CLI::App* domain = app.add_subcommand("check-domain", "sampled Condorcet check");
  domain->add_option("profile", profile_path)->required();
  domain->add_option("--trials", trials)->check(CLI::PositiveNumber);
  domain->add_option("--seed", seed)->required();
  add_format(domain);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force counterparts");
  oracle->require_subcommand(1);
  CLI::App* orec = oracle->add_subcommand("recognize", "try every labeled tree");
  orec->add_option("profile", profile_path)->required();
  add_format(orec);
  CLI::App* occ = oracle->add_subcommand("cc", "enumerate all committees");
  occ->add_option("profile", profile_path)->required();
  occ->add_option("-k", k)->required();
  occ->add_option("--rule", rule)->check(CLI::IsMember({"utilitarian", "egalitarian"}));
  occ->add_option("--misrep", misrep_spec);
  add_format(occ);
  CLI::App* ocl = oracle->add_subcommand("classical", "search for a voter line");
  ocl->add_option("profile", profile_path)->required();
  add_format(ocl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  try {
    if (*verify) return run_verify(profile_path, tree_path, json);
    if (*recognize_cmd) return run_recognize(profile_path, json);
    if (*generate) return run_generate(tree_path, json);
    if (*majority) return run_majority(profile_path, json);
    if (*cc) return run_cc(profile_path, tree_path, k, rule, misrep_spec, json);
    if (*domain) return run_check_domain(profile_path, trials, seed, json);
    if (*oracle) {
      if (*orec) return run_oracle_recognize(profile_path, json);
      if (*occ) return run_oracle_cc(profile_path, k, rule, misrep_spec, json);
      if (*ocl) return run_oracle_classical(profile_path, json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
