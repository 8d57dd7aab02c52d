#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "sctool/oracle.hpp"
#include "sctool/sctree.hpp"

using namespace sctool;

TEST_CASE("pruefer decoding") {
  CHECK(tree_from_pruefer({2, 2}, 4) == star_tree());
  CHECK(tree_from_pruefer({}, 2) == Tree(2, {{1, 2}}));
  CHECK(tree_from_pruefer({1}, 3) == Tree(3, {{1, 2}, {1, 3}}));
  CHECK(tree_from_pruefer({2, 3}, 4) == Tree(4, {{1, 2}, {2, 3}, {3, 4}}));

  CHECK_THROWS_AS(tree_from_pruefer({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer({1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer({0, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer({5, 1}, 4), std::invalid_argument);
}

TEST_CASE("tree enumeration") {
  CHECK(TreeIterator::count(1) == 1);
  CHECK(TreeIterator::count(2) == 1);
  CHECK(TreeIterator::count(3) == 3);
  CHECK(TreeIterator::count(4) == 16);
  CHECK(TreeIterator::count(5) == 125);
  CHECK(TreeIterator::count(8) == 262144);

  TreeIterator first3(3);
  CHECK(*first3.next() == Tree(3, {{1, 2}, {1, 3}}));

  for (int n : {1, 2, 3, 4, 5}) {
    TreeIterator it(n);
    std::set<std::vector<std::pair<int, int>>> seen;
    while (auto t = it.next()) {
      CHECK(t->vertex_count() == n);
      seen.insert(t->edges());
    }
    CHECK(static_cast<long long>(seen.size()) == TreeIterator::count(n));
  }

  CHECK_THROWS_AS(TreeIterator(0), std::invalid_argument);
  CHECK_THROWS_AS(TreeIterator(9), std::invalid_argument);
}

TEST_CASE("exhaustive recognition agrees with the fixtures") {
  const ExhaustiveRecognition star = recognize_exhaustive(smallstar());
  CHECK(star.classes == 4);
  REQUIRE(star.passing.size() == 1);
  CHECK(star.passing[0] == star_tree());
  REQUIRE(star.minimal.size() == 1);
  CHECK(star.minimal[0] == star_tree());

  const ExhaustiveRecognition none = recognize_exhaustive(latin4());
  CHECK(none.classes == 4);
  CHECK(none.passing.empty());
  CHECK(none.minimal.empty());

  const ExhaustiveRecognition one = recognize_exhaustive(unanimous4());
  CHECK(one.classes == 1);
  REQUIRE(one.passing.size() == 1);
  CHECK(one.passing[0] == Tree(1, {}));
  CHECK(one.minimal.size() == 1);
}

TEST_CASE("exhaustive recognition pins generated paths") {
  const GeneratedProfile g = generate_profile(Tree(3, {{1, 2}, {2, 3}}));
  const ExhaustiveRecognition r = recognize_exhaustive(g.profile);
  CHECK(r.classes == 3);
  REQUIRE(r.passing.size() == 1);
  CHECK(r.passing[0] == Tree(3, {{1, 2}, {2, 3}}));
  CHECK(r.minimal == r.passing);

  const GeneratedProfile big = generate_profile(
      Tree(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}}));
  CHECK_THROWS_AS(recognize_exhaustive(big.profile), std::invalid_argument);
}

TEST_CASE("exhaustive recognition matches the peeling recognizer") {
  const std::vector<Tree> trees = {
      Tree(4, {{1, 2}, {2, 3}, {3, 4}}),
      star_tree(),
      Tree(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}}),
      Tree(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}),
  };
  for (const Tree& t : trees) {
    const GeneratedProfile g = generate_profile(t);
    const ExhaustiveRecognition ex = recognize_exhaustive(g.profile);
    REQUIRE(ex.minimal.size() == 1);
    CHECK(ex.minimal[0] == t);
    const auto rec = recognize(g.profile);
    CHECK(std::get<RecognitionResult>(rec).reduced_tree == ex.minimal[0]);
  }
}

TEST_CASE("brute-force committees match the dynamic program") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  for (int k = 1; k <= 4; ++k)
    for (Mode mode : {Mode::Utilitarian, Mode::Egalitarian}) {
      const CCResult fast = cc_optimal(p, t, k, borda, mode);
      const CCResult slow = cc_brute_force(p, k, borda, mode);
      CHECK(fast.phi == slow.phi);
      CHECK(assignment_cost(p.expanded(), slow.assignment, borda, mode) ==
            slow.phi);
    }

  const CCResult k2 = cc_brute_force(p, 2, borda, Mode::Utilitarian);
  CHECK(k2.committee == std::vector<int>{0, 2});
  CHECK(k2.assignment.rep == std::vector<int>{0, 0, 0, 2});

  // ties go to the lexicographically first committee
  const CCResult egal2 = cc_brute_force(p, 2, borda, Mode::Egalitarian);
  CHECK(egal2.phi == Rational(1));
  CHECK(egal2.committee == std::vector<int>{0, 1});
}

TEST_CASE("brute force expands multiplicities") {
  const Profile w = flat({"x", "y"}, {{0, 1}, {1, 0}}, {3, 2});
  const CCResult r = cc_brute_force(w, 1, borda_model(2), Mode::Utilitarian);
  CHECK(r.phi == Rational(2));
  CHECK(r.committee == std::vector<int>{0});
  CHECK(r.assignment.rep == std::vector<int>{0, 0, 0, 0, 0});

  const CCResult flat_r =
      cc_brute_force(w.expanded(), 1, borda_model(2), Mode::Utilitarian);
  CHECK(flat_r.phi == r.phi);
}

TEST_CASE("brute force guards its blowup") {
  std::vector<std::string> names;
  std::vector<int> order;
  for (int c = 0; c < 30; ++c) {
    names.push_back("c" + std::to_string(c));
    order.push_back(c);
  }
  const Profile wide(names, {LinearOrder(order)});
  CHECK_THROWS_AS(cc_brute_force(wide, 15, borda_model(30), Mode::Utilitarian),
                  std::invalid_argument);
  CHECK_THROWS_AS(cc_brute_force(wide, 0, borda_model(30), Mode::Utilitarian),
                  std::invalid_argument);
}

TEST_CASE("classical single-crossing search") {
  CHECK(classical_sc_check(unanimous4()) == std::vector<int>{1, 2, 3, 4});
  CHECK(!classical_sc_check(smallstar()).has_value());
  CHECK(!classical_sc_check(latin4()).has_value());

  const GeneratedProfile path =
      generate_profile(Tree(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(classical_sc_check(path.profile) == std::vector<int>{1, 2, 3, 4});

  // a scrambled line comes back in crossing order
  const Profile shuffled = flat(
      path.profile.candidates(),
      {path.profile.voter(3).ranking(), path.profile.voter(1).ranking(),
       path.profile.voter(4).ranking(), path.profile.voter(2).ranking()});
  const auto order = classical_sc_check(shuffled);
  REQUIRE(order.has_value());
  CHECK(*order == std::vector<int>{2, 4, 1, 3});

  const GeneratedProfile nine = generate_profile(
      Tree(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}}));
  CHECK_THROWS_AS(classical_sc_check(nine.profile), std::invalid_argument);
}
