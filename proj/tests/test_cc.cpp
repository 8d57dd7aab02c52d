#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "sctool/cc.hpp"
#include "sctool/sctree.hpp"

using namespace sctool;

namespace {

bool mentions(const std::vector<ModelViolation>& vs, const std::string& needle) {
  return std::any_of(vs.begin(), vs.end(), [&](const ModelViolation& v) {
    return v.what.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("borda model") {
  const PositionalModel m = borda_model(4);
  REQUIRE(m.scores.size() == 4);
  CHECK(m.scores[0] == Rational(0));
  CHECK(m.scores[3] == Rational(3));

  const Profile p = smallstar();
  CHECK(validate_model(m, p).empty());
  CHECK(misrep(m, p, 1, 0) == Rational(0));  // voter 1 tops a
  CHECK(misrep(m, p, 2, 2) == Rational(1));  // voter 2 ranks c second
  CHECK(misrep(m, p, 3, 1) == Rational(3));  // voter 3 bottoms b
}

TEST_CASE("positional model validation") {
  const Profile p = smallstar();
  CHECK(!validate_model(PositionalModel{{0, 1, 2}}, p).empty());  // wrong size

  const auto top = validate_model(PositionalModel{{1, 1, 2, 3}}, p);
  CHECK(mentions(top, "top position"));
  CHECK(top.front().voter == 0);

  CHECK(mentions(validate_model(PositionalModel{{0, 2, 1, 3}}, p),
                 "nondecreasing"));
  CHECK(mentions(validate_model(
                     PositionalModel{{0, Rational(-1), 1, 2}}, p),
                 "negative"));
  CHECK(validate_model(PositionalModel{{0, 0, 0, 0}}, p).empty());
  CHECK(validate_model(
            PositionalModel{{0, Rational(1, 2), Rational(1, 2), 2}}, p)
            .empty());
}

TEST_CASE("approval model validation and misrep") {
  const Profile p = smallstar();
  // top segments: v1 {a,b}, v2 {a}, v3 {d,a,c}, v4 {c}
  const ApprovalModel ok{{{0, 1}, {0}, {3, 0, 2}, {2}}};
  CHECK(validate_model(ok, p).empty());
  CHECK(misrep(ok, p, 1, 0) == Rational(0));
  CHECK(misrep(ok, p, 1, 2) == Rational(1));
  CHECK(misrep(ok, p, 3, 2) == Rational(0));

  CHECK(!validate_model(ApprovalModel{{{0}, {0}, {3}}}, p).empty());  // count
  const auto seg = validate_model(ApprovalModel{{{0, 2}, {0}, {3}, {2}}}, p);
  CHECK(mentions(seg, "top segment"));
  CHECK(seg.front().voter == 1);
  CHECK(mentions(validate_model(ApprovalModel{{{0, 9}, {0}, {3}, {2}}}, p),
                 "out of range"));
  CHECK(mentions(validate_model(ApprovalModel{{{0, 0, 1}, {0}, {3}, {2}}}, p),
                 "twice"));
  // empty sets are fine: everyone costs 1
  const ApprovalModel none{{{}, {}, {}, {}}};
  CHECK(validate_model(none, p).empty());
  CHECK(misrep(none, p, 1, 0) == Rational(1));
}

TEST_CASE("matrix model validation") {
  const Profile p = flat({"x", "y"}, {{0, 1}, {1, 0}});
  const MatrixModel ok{{{0, 5}, {Rational(1, 2), 0}}};
  CHECK(validate_model(ok, p).empty());
  CHECK(misrep(ok, p, 2, 0) == Rational(1, 2));

  CHECK(mentions(validate_model(MatrixModel{{{0, 5}}}, p), "row per voter"));
  CHECK(mentions(validate_model(MatrixModel{{{0}, {1, 0}}}, p),
                 "entry per candidate"));
  CHECK(mentions(validate_model(MatrixModel{{{0, Rational(-2)}, {1, 0}}}, p),
                 "negative"));
  const auto mono = validate_model(MatrixModel{{{3, 1}, {1, 0}}}, p);
  REQUIRE(mentions(mono, "decreases"));
  const auto it = std::find_if(mono.begin(), mono.end(), [](const auto& v) {
    return v.what.find("decreases") != std::string::npos;
  });
  CHECK(it->voter == 1);
  CHECK(it->a == 0);  // x over y for voter 1, but r[x] > r[y]
  CHECK(it->b == 1);
}

TEST_CASE("assignment costs and committees") {
  const Profile p = smallstar();
  const PositionalModel borda = borda_model(4);
  const Assignment all_a{{0, 0, 0, 0}};
  CHECK(assignment_cost(p, all_a, borda, Mode::Utilitarian) == Rational(3));
  CHECK(assignment_cost(p, all_a, borda, Mode::Egalitarian) == Rational(2));
  CHECK(committee_of(all_a) == std::vector<int>{0});
  CHECK(committee_of(Assignment{{2, 0, 3, 0}}) == std::vector<int>{0, 2, 3});

  CHECK_THROWS_AS(assignment_cost(p, Assignment{{0, 0}}, borda,
                                  Mode::Utilitarian),
                  std::invalid_argument);

  // multiplicities weight the sum but not the max
  const Profile w = flat({"x", "y"}, {{0, 1}, {1, 0}}, {3, 2});
  const PositionalModel b2 = borda_model(2);
  const Assignment all_x{{0, 0}};
  CHECK(assignment_cost(w, all_x, b2, Mode::Utilitarian) == Rational(2));
  CHECK(assignment_cost(w, all_x, b2, Mode::Egalitarian) == Rational(1));
}

TEST_CASE("best assignment for a committee") {
  const Profile p = smallstar();
  const PositionalModel borda = borda_model(4);
  const Assignment w = best_assignment_for_committee(p, {0, 2}, borda);
  CHECK(w.rep == std::vector<int>{0, 0, 0, 2});
  CHECK(assignment_cost(p, w, borda, Mode::Utilitarian) == Rational(1));

  // ties go to the candidate ranked higher
  const Profile one = flat({"x", "y", "z"}, {{0, 1, 2}});
  const PositionalModel flat_tail{{0, 1, 1}};
  CHECK(best_assignment_for_committee(one, {1, 2}, flat_tail).rep ==
        std::vector<int>{1});
}

TEST_CASE("cc_optimal on the star fixture, borda utilitarian") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  const CCResult k1 = cc_optimal(p, t, 1, borda, Mode::Utilitarian);
  CHECK(k1.phi == Rational(3));
  CHECK(k1.committee == std::vector<int>{0});
  CHECK(k1.assignment.rep == std::vector<int>{0, 0, 0, 0});

  const CCResult k2 = cc_optimal(p, t, 2, borda, Mode::Utilitarian);
  CHECK(k2.phi == Rational(1));
  CHECK(k2.committee == std::vector<int>{0, 2});
  CHECK(k2.assignment.rep == std::vector<int>{0, 0, 0, 2});

  const CCResult k3 = cc_optimal(p, t, 3, borda, Mode::Utilitarian);
  CHECK(k3.phi == Rational(0));
  CHECK(k3.committee == std::vector<int>{0, 2, 3});
  CHECK(k3.assignment.rep == std::vector<int>{0, 0, 3, 2});

  const CCResult k4 = cc_optimal(p, t, 4, borda, Mode::Utilitarian);
  CHECK(k4.phi == Rational(0));
  CHECK(k4.committee == std::vector<int>{0, 2, 3});  // b goes unused

  CHECK(k1.phi >= k2.phi);
  CHECK(k2.phi >= k3.phi);
  CHECK(k3.phi >= k4.phi);
}

TEST_CASE("cc_optimal egalitarian") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  const CCResult k2 = cc_optimal(p, t, 2, borda, Mode::Egalitarian);
  CHECK(k2.mode == Mode::Egalitarian);
  CHECK(k2.phi == Rational(1));
  CHECK(k2.committee == std::vector<int>{0, 2});
  CHECK(k2.assignment.rep == std::vector<int>{0, 0, 0, 2});

  CHECK(cc_optimal(p, t, 3, borda, Mode::Egalitarian).phi == Rational(0));
  CHECK(cc_optimal(p, t, 1, borda, Mode::Egalitarian).phi == Rational(2));
}

TEST_CASE("cc_optimal validates its inputs") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  CHECK_THROWS_AS(cc_optimal(p, t, 0, borda, Mode::Utilitarian),
                  std::invalid_argument);
  CHECK_THROWS_AS(cc_optimal(p, t, 5, borda, Mode::Utilitarian),
                  std::invalid_argument);
  CHECK_THROWS_AS(cc_optimal(p, t, 2, PositionalModel{{0, 1}},
                             Mode::Utilitarian),
                  std::invalid_argument);
  CHECK_THROWS_AS(cc_optimal(latin4(), t, 2, borda, Mode::Utilitarian),
                  NotSingleCrossingError);
}

TEST_CASE("restricted committees") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  const CCResult ab =
      cc_optimal_restricted(p, t, 2, borda, Mode::Utilitarian, {0, 1});
  CHECK(ab.phi == Rational(2));
  CHECK(ab.committee == std::vector<int>{0, 1});
  CHECK(ab.assignment.rep == std::vector<int>{0, 0, 0, 1});

  // restricting to the winners reproduces the unrestricted optimum
  const CCResult full = cc_optimal(p, t, 2, borda, Mode::Utilitarian);
  const CCResult same =
      cc_optimal_restricted(p, t, 2, borda, Mode::Utilitarian, {0, 2});
  CHECK(same.phi == full.phi);

  // duplicates collapse; an empty restriction is rejected
  CHECK(cc_optimal_restricted(p, t, 2, borda, Mode::Utilitarian, {2, 0, 2, 0})
            .phi == full.phi);
  CHECK_THROWS_AS(cc_optimal_restricted(p, t, 2, borda, Mode::Utilitarian, {}),
                  std::invalid_argument);

  CHECK_THROWS_AS(
      cc_optimal_restricted(p, t, 2, borda, Mode::Utilitarian, {0, 7}),
      std::invalid_argument);
}

TEST_CASE("anchor choice never moves phi") {
  const Profile p = smallstar();
  const Tree t = star_tree();
  const PositionalModel borda = borda_model(4);

  for (int k = 1; k <= 4; ++k) {
    const Rational phi = cc_optimal(p, t, k, borda, Mode::Utilitarian).phi;
    for (int anchor : t.leaves()) {
      const CCResult r =
          cc_optimal_anchored(p, t, k, borda, Mode::Utilitarian, anchor);
      CHECK(r.phi == phi);
      CHECK(assignment_cost(p, r.assignment, borda, Mode::Utilitarian) == phi);
    }
  }
  CHECK_THROWS_AS(cc_optimal_anchored(p, t, 2, borda, Mode::Utilitarian, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(cc_optimal_anchored(p, t, 2, borda, Mode::Utilitarian, 9),
                  std::invalid_argument);
}

TEST_CASE("multiplicities expand before the dynamic program") {
  const Profile w = flat({"a", "b", "c", "d"},
                         {{0, 1, 2, 3}, {0, 2, 1, 3}, {3, 0, 2, 1}, {2, 1, 0, 3}},
                         {1, 3, 1, 1});
  const auto rec = std::get<RecognitionResult>(recognize(w));
  const PositionalModel borda = borda_model(4);

  const CCResult r = cc_optimal(w, rec.full_tree, 2, borda, Mode::Utilitarian);
  CHECK(r.phi == Rational(1));
  CHECK(r.committee == std::vector<int>{0, 2});
  CHECK(r.assignment.rep.size() == 6);  // expanded voter list
  CHECK(r.assignment.rep == std::vector<int>{0, 0, 0, 0, 0, 2});

  const CCResult flat_r = cc_optimal(w.expanded(), rec.full_tree, 2, borda,
                                     Mode::Utilitarian);
  CHECK(flat_r.phi == r.phi);
  CHECK(flat_r.assignment.rep == r.assignment.rep);
}

TEST_CASE("cc_optimal under approval and matrix models") {
  const Profile p = smallstar();
  const Tree t = star_tree();

  const ApprovalModel tops{{{0}, {0}, {3}, {2}}};
  const CCResult a2 = cc_optimal(p, t, 2, tops, Mode::Utilitarian);
  CHECK(a2.phi == Rational(1));
  const CCResult a3 = cc_optimal(p, t, 3, tops, Mode::Utilitarian);
  CHECK(a3.phi == Rational(0));
  CHECK(a3.committee == std::vector<int>{0, 2, 3});

  // a matrix spelling borda costs agrees with the positional model
  std::vector<std::vector<Rational>> r(4, std::vector<Rational>(4));
  for (int i = 1; i <= 4; ++i)
    for (int c = 0; c < 4; ++c)
      r[i - 1][c] = Rational(p.voter(i).position(c) - 1);
  const CCResult m2 = cc_optimal(p, t, 2, MatrixModel{r}, Mode::Utilitarian);
  CHECK(m2.phi == Rational(1));
  CHECK(m2.committee == std::vector<int>{0, 2});

  // fractional entries stay exact
  std::vector<std::vector<Rational>> half = r;
  for (auto& row : half)
    for (auto& x : row) x = x * Rational(1, 3);
  const CCResult h2 = cc_optimal(p, t, 2, MatrixModel{half}, Mode::Utilitarian);
  CHECK(h2.phi == Rational(1, 3));
}
