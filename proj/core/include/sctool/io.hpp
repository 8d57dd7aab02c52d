#pragma once

#include <string>
#include <string_view>

#include "sctool/cc.hpp"
#include "sctool/majority.hpp"
#include "sctool/oracle.hpp"
#include "sctool/sctree.hpp"
#include "sctool/types.hpp"

namespace sctool {

// ==== text formats ====
//
// Profile files: the first non-comment line names the candidates; every
// following line is one voter, all candidates best first, optionally prefixed
// with "K*" for multiplicity K.  Lines whose first non-blank character is '#'
// are comments; blank lines are skipped.
//
// Tree files: one edge "u v" per line, same comment rules.  The vertex count
// comes from the accompanying profile (total voter weight).

Profile parse_profile(std::string_view text);
Tree parse_tree(std::string_view text, int vertex_count);
// Vertex count inferred as the largest endpoint; used where no profile
// accompanies the tree (the generate subcommand).
Tree parse_tree_auto(std::string_view text);

// Canonical emission; parse(emit(x)) == x.
std::string emit_profile(const Profile& p);
std::string emit_tree(const Tree& t);

// ==== JSON emission ====
//
// Compact single-line JSON with fixed key order; identical inputs yield
// byte-identical output.  Shapes are documented in the README.

std::string profile_json(const Profile& p);  // voters expanded
std::string tree_json(const Tree& t);

std::string cut_table_json(const CutTable& ct, const Profile& p);
std::string no_cut_witness_json(const NoCutWitness& w, const Profile& p);

std::string recognition_json(const RecognitionResult& rec);
std::string not_single_crossing_json(const NotSingleCrossing& ns,
                                     const Profile& p);
std::string generated_json(const GeneratedProfile& g);
std::string line_ordering_json(const LineOrdering& l);
std::string non_line_witness_json(const NonLineWitness& w);

std::string majority_json(const Profile& p, const MarginMatrix& mm,
                          const MajorityRelation& rel,
                          const std::optional<int>& representative,
                          std::string_view representative_status);
std::string condorcet_report_json(const CondorcetSampleReport& report,
                                  const ReducedProfile& d);

std::string cc_result_json(const CCResult& r, const Profile& p);

std::string exhaustive_json(const ExhaustiveRecognition& ex);
std::string classical_json(const std::optional<std::vector<int>>& ordering);

}  // namespace sctool
