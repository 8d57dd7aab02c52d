#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "sctool/types.hpp"

namespace sctool {

// ==== cuts ====

// The edge witnessing a pair's cut.  u sits on the side preferring a (the
// smaller-indexed candidate of the pair), v on the side preferring b.
struct CutEdge {
  int u = 0, v = 0;
  std::vector<int> side_a, side_b;  // voter vertices, ascending
};

enum class Unanimous { PreferA, PreferB };  // virtual cut: nobody crosses

struct Cut {
  int a = 0, b = 0;  // candidate pair, a < b
  std::variant<CutEdge, Unanimous> kind;

  bool is_virtual() const { return std::holds_alternative<Unanimous>(kind); }
  const CutEdge* edge() const { return std::get_if<CutEdge>(&kind); }
};

// A pair with no cut: `side` ('a' or 'b') names the preference class whose
// voters are disconnected, u < v two of them in different components.
struct NoCutWitness {
  int a = 0, b = 0;
  char side = 'a';
  int u = 0, v = 0;
};

std::variant<Cut, NoCutWitness> find_cut(const Profile& p, const Tree& t,
                                         int a, int b);

// ==== verification ====

struct CutTable {
  std::vector<Cut> cuts;  // all pairs a < b in lexicographic pair order
  const Cut& at(int a, int b) const;
};

// Checks every candidate pair; returns the table of cuts, or the witness of
// the first failing pair.  The tree is on the expanded voter list.
std::variant<CutTable, NoCutWitness> verify_single_crossing(const Profile& p,
                                                            const Tree& t);

// Edges that are no pair's cut edge; removing nothing from these keeps the
// profile single-crossing, so a minimal tree has none.
std::vector<std::pair<int, int>> collapsible_edges(const Tree& t,
                                                   const CutTable& ct);

// ==== recognition ====

struct PotentialLeaf {
  int voter = 0;  // 1-based index into the (reduced) profile
  std::vector<std::pair<int, int>> unique_pairs;  // (a,b): only this voter has a over b
  int witness = 0;  // smallest k != voter agreeing on all other pairs
};

// Requires pairwise distinct orders (NotReducedError otherwise) and n >= 2.
std::vector<PotentialLeaf> potential_leaves(const Profile& p);

struct RecognitionResult {
  ReducedProfile reduced;
  Tree reduced_tree;  // the minimal tree, on distinct-order classes
  Tree full_tree;     // on the expanded voter list; clones hang off their class
  CutTable cut_table; // for full_tree against the expanded profile
  std::vector<std::pair<int, int>> peel_order;  // (class peeled, attachment class)
};

struct NotSingleCrossing {
  std::vector<int> stuck_classes;  // classes alive when no potential leaf was left
};

std::variant<RecognitionResult, NotSingleCrossing> recognize(const Profile& p);

// ==== witness-profile generation ====

struct GeneratedProfile {
  Profile profile;                    // voter i sits at tree vertex i
  std::vector<int> vertex_candidate;  // vertex_candidate[v-1] = candidate of vertex v
};

// Builds a reduced profile with one candidate per vertex that is
// single-crossing exactly on t, and minimally so.  Requires n >= 2.
GeneratedProfile generate_profile(const Tree& t);

// ==== hereditary check ====

struct LineOrdering {
  std::vector<int> voters;  // expanded voter ids; a classical single-crossing order
};

// Three voters around a degree->=3 vertex of the minimal tree; no tree at all
// admits this 3-voter subprofile, so some subprofile fails recognition.
struct NonLineWitness {
  int center = 0;              // class index of the branching vertex
  std::array<int, 3> voters{}; // first stored voter of three of its neighbor classes
};

// Precondition: rec = recognize(p) succeeded.
std::variant<LineOrdering, NonLineWitness> hereditary_check(
    const Profile& p, const RecognitionResult& rec);

}  // namespace sctool
