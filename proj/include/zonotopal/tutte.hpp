#pragma once

#include <vector>

#include "zonotopal/vectorlist.hpp"

namespace zonotopal {

struct TuttePoly {
  // coeff[i][j] is the coefficient of x^i y^j; all entries nonnegative.
  std::vector<std::vector<long long>> coeff;

  void bump(int i, int j) {
    if (static_cast<int>(coeff.size()) <= i) coeff.resize(i + 1);
    std::size_t width = static_cast<std::size_t>(j) + 1;
    for (const auto& row : coeff) width = std::max(width, row.size());
    for (auto& row : coeff) row.resize(width, 0);
    ++coeff[i][j];
  }

  long long eval(long long xv, long long yv) const {
    long long out = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      long long xp = 1;
      for (std::size_t k = 0; k < i; ++k) xp *= xv;
      for (std::size_t j = 0; j < coeff[i].size(); ++j) {
        long long yp = 1;
        for (std::size_t k = 0; k < j; ++k) yp *= yv;
        out += coeff[i][j] * xp * yp;
      }
    }
    return out;
  }
};

struct BasisActivity {
  IndexSet basis;
  int internal = 0;
  int external = 0;
};

struct TutteResult {
  TuttePoly poly;
  std::vector<BasisActivity> activities;
};

// Tutte polynomial by the activity sum over bases, under the given list
// order: T(x,y) = sum_B x^{i(B)} y^{e(B)}. An element e outside B is
// externally active when it is minimal in the unique dependency it forms
// with B; b in B is internally active when it is minimal among the elements
// that can replace it.
inline TutteResult tutte(const VectorList& x) {
  require_spanning(x);
  const int s = x.dim;
  TutteResult out;
  for (const IndexSet& basis : enumerate_bases(x)) {
    // Columns are the basis vectors; solving expresses outside vectors in it.
    QMatrix cols(s, s);
    for (int r = 0; r < s; ++r)
      for (int j = 0; j < s; ++j) cols.at(r, j) = x.vectors[basis[j]][r];

    int external = 0;
    for (int e = 0; e < x.size(); ++e) {
      if (std::binary_search(basis.begin(), basis.end(), e)) continue;
      auto c = cols.solve(to_rational_row(x.vectors[e]));
      if (!c) throw InternalError("basis does not span");
      bool minimal = true;
      for (int j = 0; j < s; ++j)
        if ((*c)[j] != 0 && basis[j] < e) minimal = false;
      if (minimal) ++external;
    }

    int internal = 0;
    for (int j = 0; j < s; ++j) {
      const int b = basis[j];
      IndexSet rest;
      for (int k = 0; k < s; ++k)
        if (k != j) rest.push_back(basis[k]);
      const std::vector<IntRow> rest_basis = reduced_integer_basis(x.select(rest));
      int min_replacement = -1;
      for (int i = 0; i < x.size(); ++i) {
        if (!in_span(rest_basis, x.vectors[i])) {
          min_replacement = i;
          break;
        }
      }
      if (min_replacement == b) ++internal;
    }

    out.poly.bump(internal, external);
    out.activities.push_back(BasisActivity{basis, internal, external});
  }
  return out;
}

}  // namespace zonotopal
