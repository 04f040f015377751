#include <catch2/catch_amalgamated.hpp>

#include "zonotopal/dmspace.hpp"
#include "zonotopal/tutte.hpp"

#include "instances.hpp"

using namespace zonotopal;

namespace {
const VectorList x3(2, {{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("solution-space bases on the documented cases") {
  const int k = 4;
  const DSpaceBasis ones = dspace_basis(testutil::ones(k + 1));
  REQUIRE(ones.by_degree.size() == static_cast<std::size_t>(k + 1));
  for (int d = 0; d <= k; ++d) {
    REQUIRE(ones.by_degree[d].size() == 1);
    REQUIRE(ones.by_degree[d][0] == MultiPoly::monomial(1, {d}));  // monic powers
  }

  const DSpaceBasis axes = dspace_basis(VectorList(2, {{1, 0}, {0, 1}}));
  REQUIRE(axes.by_degree.size() == 1);
  REQUIRE(axes.by_degree[0].size() == 1);

  const DSpaceBasis three = dspace_basis(x3);
  REQUIRE(three.dims().dims == std::vector<long long>{1, 2});
  REQUIRE(three.by_degree[1][0] == MultiPoly::monomial(2, {1, 0}));
  REQUIRE(three.by_degree[1][1] == MultiPoly::monomial(2, {0, 1}));

  const DSpaceBasis parallel = dspace_basis(VectorList(2, {{1, 0}, {2, 0}, {0, 1}}));
  REQUIRE(parallel.dims().dims == std::vector<long long>{1, 1});
  REQUIRE(parallel.by_degree[1][0] == MultiPoly::monomial(2, {1, 0}));  // span{1, x}

  REQUIRE_THROWS_AS(dspace_basis(VectorList(2, {{1, 0}, {2, 0}})), PreconditionError);
}

TEST_CASE("solution-space dimensions match the quotient and the basis count") {
  for (const auto& x : testutil::family()) {
    const GradedDims d = dspace_dims(x);
    const GradedDims h = hilbert(x, IdealSpec::cocircuit_full());
    REQUIRE(h.same_dims([&] {
      GradedDims padded = d;
      padded.dims.resize(h.dims.size(), 0);
      return padded;
    }()));
    REQUIRE(d.total() == tutte(x).poly.eval(1, 1));
  }
}

TEST_CASE("duality pairing matrices") {
  const QMatrix constants = duality_pairing_matrix(x3, 0);
  REQUIRE(constants.rows() == 1);
  REQUIRE(constants.at(0, 0) == 1);

  const QMatrix linear = duality_pairing_matrix(x3, 1);
  REQUIRE(linear.rows() == 2);
  REQUIRE(linear.at(0, 0) == 1);
  REQUIRE(linear.at(0, 1) == 0);
  REQUIRE(linear.at(1, 0) == 0);
  REQUIRE(linear.at(1, 1) == 1);

  REQUIRE_THROWS_AS(duality_pairing_matrix(x3, 2), PreconditionError);

  for (const auto& x : testutil::family())
    for (int d = 0; d <= x.size() - x.dim; ++d)
      REQUIRE(is_square_nonsingular(duality_pairing_matrix(x, d)));
}

TEST_CASE("annihilator checks") {
  REQUIRE(annihilator_check(x3, 2));
  REQUIRE(annihilator_check(x3, 0));
  REQUIRE(annihilator_check(testutil::ones(4), 1));
  REQUIRE_THROWS_AS(annihilator_check(x3, 5), PreconditionError);
  for (const auto& x : testutil::family())
    for (int k = 0; k <= x.dim; ++k) REQUIRE(annihilator_check(x, k));
}

TEST_CASE("derivative along a deleted element lands in the smaller space") {
  // d_{e1+e2} maps the x3 solution space onto that of the two axes.
  const DSpaceBasis big = dspace_basis(x3);
  const IntRow diag{1, 1};
  for (const auto& layer : big.by_degree)
    for (const auto& f : layer) {
      const MultiPoly image = directional_derivative(f, diag);
      REQUIRE((image.is_zero() || image.degree() == 0));  // lands in D of the axes
    }
}
