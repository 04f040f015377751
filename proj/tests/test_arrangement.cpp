#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "zonotopal/chambers.hpp"
#include "zonotopal/tutte.hpp"

#include "instances.hpp"
#include "oracles.hpp"

using namespace zonotopal;

namespace {
const VectorList x3(2, {{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("rank of selected sublists") {
  REQUIRE(rank(x3, {0, 1}) == 2);
  REQUIRE(rank(x3, {}) == 0);
  REQUIRE(rank(testutil::ones(4), {1, 3}) == 1);
  REQUIRE_THROWS_AS(rank(x3, {7}), PreconditionError);
  REQUIRE_THROWS_AS(VectorList(2, {{0, 0}}), PreconditionError);
}

TEST_CASE("basis enumeration on the documented cases") {
  REQUIRE(enumerate_bases(x3) == std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});
  const auto singletons = enumerate_bases(testutil::ones(4));
  REQUIRE(singletons == std::vector<IndexSet>{{0}, {1}, {2}, {3}});
  const VectorList parallel(2, {{1, 0}, {2, 0}, {0, 1}});
  REQUIRE(enumerate_bases(parallel) == std::vector<IndexSet>{{0, 2}, {1, 2}});
  REQUIRE_THROWS_AS(enumerate_bases(VectorList(2, {{1, 0}, {2, 0}})), PreconditionError);
}

TEST_CASE("rational subspaces are canonical and maximal") {
  const auto subspaces = rational_subspaces(x3);
  REQUIRE(subspaces[0].size() == 1);
  REQUIRE(subspaces[0][0].indices.empty());
  REQUIRE(subspaces[1].size() == 3);
  REQUIRE(subspaces[1][0].indices == IndexSet{0});
  REQUIRE(subspaces[1][1].indices == IndexSet{1});
  REQUIRE(subspaces[1][2].indices == IndexSet{2});
  REQUIRE(subspaces[2].size() == 1);
  REQUIRE(subspaces[2][0].indices == IndexSet{0, 1, 2});

  const auto ones_subspaces = rational_subspaces(testutil::ones(4));
  REQUIRE(ones_subspaces[0].size() == 1);
  REQUIRE(ones_subspaces[1].size() == 1);
  REQUIRE(ones_subspaces[1][0].indices == IndexSet{0, 1, 2, 3});

  const auto parallel = rational_subspaces(VectorList(2, {{1, 0}, {2, 0}, {0, 1}}));
  REQUIRE(parallel[1].size() == 2);
  REQUIRE(parallel[1][0].indices == IndexSet{0, 1});
  REQUIRE(parallel[1][1].indices == IndexSet{2});

  for (const auto& x : testutil::family()) {
    const auto all = rational_subspaces(x);
    std::set<std::vector<IntRow>> seen;
    for (const auto& level : all)
      for (const auto& r : level) REQUIRE(seen.insert(r.basis).second);
  }
}

TEST_CASE("cocircuits are complements of hyperplanes") {
  const auto cocs = cocircuits(x3);
  REQUIRE(cocs.size() == 3);
  REQUIRE(cocs[0].complement_indices == IndexSet{1, 2});
  REQUIRE(cocs[1].complement_indices == IndexSet{0, 2});
  REQUIRE(cocs[2].complement_indices == IndexSet{0, 1});

  REQUIRE(cocircuits(testutil::ones(4)).size() == 1);
  REQUIRE(cocircuits(testutil::ones(4))[0].complement_indices == IndexSet{0, 1, 2, 3});

  const auto axes = cocircuits(VectorList(2, {{1, 0}, {0, 1}}));
  REQUIRE(axes[0].complement_indices == IndexSet{1});
  REQUIRE(axes[1].complement_indices == IndexSet{0});

  // Removing a cocircuit drops the rank of the remainder to s-1.
  for (const auto& x : testutil::family())
    for (const auto& c : cocircuits(x))
      REQUIRE(rank(x, complement(x, c.complement_indices)) == x.dim - 1);
}

TEST_CASE("Tutte polynomial via activities") {
  const TutteResult t = tutte(x3);
  REQUIRE(t.poly.coeff == std::vector<std::vector<long long>>{{0, 1}, {1, 0}, {1, 0}});

  const TutteResult free2 = tutte(VectorList(2, {{1, 0}, {0, 1}}));
  REQUIRE(free2.poly.eval(1, 1) == 1);
  REQUIRE(free2.poly.coeff == std::vector<std::vector<long long>>{{0}, {0}, {1}});

  const int k = 3;
  const TutteResult u = tutte(testutil::ones(k + 1));
  std::vector<std::vector<long long>> expected{{0, 1, 1, 1}, {1, 0, 0, 0}};
  REQUIRE(u.poly.coeff == expected);  // x + y + y^2 + y^3

  for (const auto& x : testutil::family()) {
    const TutteResult r = tutte(x);
    REQUIRE(r.poly.eval(1, 1) == static_cast<long long>(enumerate_bases(x).size()));
    REQUIRE(r.poly.eval(2, 1) == testutil::oracle_independent_count(x));
  }
}

TEST_CASE("chamber enumeration with exact witnesses") {
  const auto half_lines = chambers(VectorList(1, {{1}}));
  REQUIRE(half_lines.size() == 2);
  REQUIRE(half_lines[0].signs == std::vector<int>{1});
  REQUIRE(half_lines[1].signs == std::vector<int>{-1});

  REQUIRE(chambers(x3).size() == 6);
  REQUIRE(chambers(testutil::ones(5)).size() == 2);

  for (const auto& x : testutil::family()) {
    const auto cells = chambers(x);
    for (const auto& cell : cells)
      for (int i = 0; i < x.size(); ++i) {
        const Rational p = dot(x.vectors[i], cell.witness);
        REQUIRE(p != 0);
        REQUIRE((p > 0 ? +1 : -1) == cell.signs[i]);
      }
    std::set<std::vector<int>> unique;
    for (const auto& cell : cells) REQUIRE(unique.insert(cell.signs).second);
    REQUIRE(cells.size() == testutil::oracle_chamber_count(x));
  }
}

TEST_CASE("face split and face construction") {
  const RegularFace all_plus = face_from_signs(x3, {1, 1, 1});
  const FaceSplit full = face_split(x3, all_plus);
  REQUIRE(full.positive == IndexSet{0, 1, 2});
  REQUIRE(full.negative.empty());

  const VectorList axes(2, {{1, 0}, {0, 1}});
  const RegularFace mixed = face_from_witness(axes, {Rational(1), Rational(-1)});
  const FaceSplit ab = face_split(axes, mixed);
  REQUIRE(ab.positive == IndexSet{0});
  REQUIRE(ab.negative == IndexSet{1});

  const RegularFace phi = face_from_witness(x3, {Rational(2), Rational(-1)});
  const FaceSplit split = face_split(x3, phi);
  REQUIRE(split.positive == IndexSet{0, 2});
  REQUIRE(split.negative == IndexSet{1});

  REQUIRE_THROWS_AS(face_from_witness(x3, {Rational(1), Rational(-1)}), PreconditionError);
  REQUIRE_THROWS_AS(face_from_signs(x3, {1, 1, -1}), PreconditionError);
}
