#include <catch2/catch_amalgamated.hpp>

#include "zonotopal/ideals.hpp"
#include "zonotopal/tutte.hpp"

#include "instances.hpp"

using namespace zonotopal;

namespace {
const VectorList x3(2, {{1, 0}, {0, 1}, {1, 1}});

MultiPoly lin(std::initializer_list<std::int64_t> a) {
  return MultiPoly::linear_form(IntRow(a));
}
}  // namespace

TEST_CASE("products of linear forms") {
  const VectorList axes(2, {{1, 0}, {0, 1}});
  REQUIRE(d_poly(axes, {0, 1}) == lin({1, 0}) * lin({0, 1}));
  REQUIRE(d_poly(axes, {}) == MultiPoly::constant(2, 1));
  REQUIRE(d_poly(x3, {1, 2}) == lin({0, 1}) * lin({1, 1}));
  REQUIRE_THROWS_AS(d_poly(axes, {5}), PreconditionError);
}

TEST_CASE("ideal generators for the three specification kinds") {
  const auto full = generators(x3, IdealSpec::cocircuit_full());
  REQUIRE(full == std::vector<MultiPoly>{lin({0, 1}) * lin({1, 1}), lin({1, 0}) * lin({1, 1}),
                                         lin({1, 0}) * lin({0, 1})});

  const auto level0 = generators(x3, IdealSpec::level(0));
  REQUIRE(level0 == std::vector<MultiPoly>{lin({1, 0}) * lin({0, 1}) * lin({1, 1})});

  const int k = 4;
  const auto ones_gens = generators(testutil::ones(k + 1), IdealSpec::cocircuit_full());
  REQUIRE(ones_gens.size() == 1);
  REQUIRE(ones_gens[0] == MultiPoly::monomial(1, {k + 1}));

  REQUIRE_THROWS_AS(generators(x3, IdealSpec::level(2)), PreconditionError);
  REQUIRE_THROWS_AS(generators(VectorList(2, {{1, 0}}), IdealSpec::cocircuit_full()),
                    PreconditionError);
}

TEST_CASE("Hilbert functions of the documented quotients") {
  const GradedDims full = hilbert(x3, IdealSpec::cocircuit_full());
  REQUIRE(full.dims == std::vector<long long>{1, 2, 0, 0});
  REQUIRE(full.total() == 3);

  const GradedDims ones = hilbert(testutil::ones(4), IdealSpec::cocircuit_full());
  REQUIRE(ones.dims == std::vector<long long>{1, 1, 1, 1, 0});
  REQUIRE_FALSE(ones.truncated);

  const VectorList axes(2, {{1, 0}, {0, 1}});
  const RationalSubspace x_axis = span_subspace(axes, {0});
  const GradedDims ray = hilbert(axes, IdealSpec::subspace_set({x_axis}), 5);
  REQUIRE(ray.dims == std::vector<long long>{1, 1, 1, 1, 1, 1});
  REQUIRE(ray.truncated);

  for (const auto& x : testutil::family()) {
    const GradedDims h = hilbert(x, IdealSpec::cocircuit_full());
    REQUIRE_FALSE(h.truncated);
    REQUIRE(h.total() == static_cast<long long>(enumerate_bases(x).size()));
  }
}

TEST_CASE("Betti tables of open strata") {
  const auto subspaces = rational_subspaces(x3);
  const BettiTable fin = betti_open_stratum(x3, subspaces[1], x3.size());
  REQUIRE(fin.at(0) == 1);
  REQUIRE(fin.at(2) == 2);
  REQUIRE(fin.at(4) == 0);
  REQUIRE_FALSE(fin.truncated);

  const BettiTable whole = betti_open_stratum(x3, {}, 3);
  REQUIRE(whole.truncated);
  REQUIRE(whole.at(0) == 1);
  REQUIRE(whole.at(2) == 2);
  REQUIRE(whole.at(4) == 3);
  REQUIRE(whole.at(6) == 4);

  const VectorList axes(2, {{1, 0}, {0, 1}});
  const BettiTable origin = betti_open_stratum(axes, {RationalSubspace{}}, 4);
  REQUIRE(origin.truncated);
  REQUIRE(origin.at(0) == 1);
  REQUIRE(origin.at(2) == 2);
  REQUIRE(origin.at(4) == 2);
  REQUIRE(origin.at(6) == 2);

  for (const auto& x : testutil::family()) {
    const auto all = rational_subspaces(x);
    const BettiTable table = betti_open_stratum(x, all[x.dim - 1], x.size());
    for (const auto& [h, dim] : table.entries) REQUIRE(h % 2 == 0);
  }
}

TEST_CASE("admissibility is enforced and closures repair it") {
  const auto subspaces = rational_subspaces(x3);
  const RationalSubspace line = subspaces[1][0];
  REQUIRE_FALSE(is_admissible(x3, {line}));
  const auto closed = downward_closure(x3, {line});
  REQUIRE(closed.size() == 2);
  REQUIRE(is_admissible(x3, closed));
  REQUIRE_THROWS_AS(verify_lamain(x3, {line}, line, 3), PreconditionError);
}

TEST_CASE("intersection formula on the documented cases") {
  const auto subspaces = rational_subspaces(x3);
  std::vector<RationalSubspace> q{subspaces[0][0]};
  q.insert(q.end(), subspaces[1].begin(), subspaces[1].end());
  const LamainReport holds = verify_lamain(x3, q, subspaces[1][0], x3.size());
  REQUIRE(holds.holds);
  for (const auto& line : holds.per_degree) REQUIRE(line.contained);

  const LamainReport origin_only =
      verify_lamain(x3, {subspaces[0][0]}, subspaces[0][0], x3.size());
  REQUIRE(origin_only.holds);
  for (const auto& line : origin_only.per_degree) {
    REQUIRE(line.intersection_dim == 0);
    REQUIRE(line.boundary_dim == 0);
  }

  const VectorList parallel(2, {{1, 0}, {2, 0}, {0, 1}});
  const auto psub = rational_subspaces(parallel);
  std::vector<RationalSubspace> pq{psub[0][0]};
  pq.insert(pq.end(), psub[1].begin(), psub[1].end());
  REQUIRE(verify_lamain(parallel, pq, psub[1][0], parallel.size()).holds);

  REQUIRE_THROWS_AS(verify_lamain(x3, q, subspaces[0][0], 3), PreconditionError);
}

TEST_CASE("adding a subspace to Q shrinks the quotient degreewise") {
  for (const auto& x : testutil::family()) {
    if (x.dim < 2) continue;
    const auto subspaces = rational_subspaces(x);
    std::vector<RationalSubspace> q{subspaces[0][0]};
    GradedDims previous = hilbert(x, IdealSpec::subspace_set(q), x.size());
    for (const auto& line : subspaces[1]) {
      q.push_back(line);
      const GradedDims next = hilbert(x, IdealSpec::subspace_set(q), x.size());
      for (std::size_t d = 0; d < next.dims.size(); ++d)
        REQUIRE(next.dims[d] <= previous.dims[d]);
      previous = next;
    }
  }
}
