#pragma once

#include <map>
#include <string>
#include <vector>

#include "zonotopal/dmspace.hpp"
#include "zonotopal/tutte.hpp"

namespace zonotopal {

// X ∩ r rewritten in intrinsic coordinates of r (per-vector cleared to
// primitive integers; rescaling individual vectors changes none of the
// dimension invariants computed from the list).
inline VectorList restrict_to_subspace(const VectorList& x, const RationalSubspace& r) {
  if (r.dimension == 0) throw PreconditionError("restriction to the zero subspace");
  QMatrix cols(x.dim, r.dimension);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < r.dimension; ++j) cols.at(i, j) = r.basis[j][i];
  std::vector<IntRow> restricted;
  for (int i : r.indices) {
    auto coords = cols.solve(to_rational_row(x.vectors[i]));
    if (!coords) throw InternalError("list vector not in the span of its subspace");
    restricted.push_back(scale_to_integers(*coords));
  }
  return VectorList(r.dimension, std::move(restricted));
}

// dim D(X ∩ r); the zero subspace contributes the constants.
inline long long restricted_d_dimension(const VectorList& x, const RationalSubspace& r) {
  if (r.dimension == 0) return 1;
  return dspace_basis(restrict_to_subspace(x, r)).total();
}

inline GradedDims restricted_d_dims(const VectorList& x, const RationalSubspace& r) {
  if (r.dimension == 0) {
    GradedDims out;
    out.dims = {1};
    return out;
  }
  return dspace_dims(restrict_to_subspace(x, r));
}

// Dimensions of the filtration G(X) = G(X)_0 ⊇ ... ⊇ G(X)_s = D(X), realized
// through the per-subspace solution spaces.
struct FiltrationReport {
  struct SubspaceEntry {
    RationalSubspace subspace;
    long long d_dim;
  };
  struct Level {
    int i;
    long long dim_g;  // dim G(X)_i
    std::vector<SubspaceEntry> subspaces;  // S_X(i) with dim D(X ∩ r)
  };
  std::vector<Level> levels;  // i = 0..s
  long long total = 0;        // dim G(X)
};

inline FiltrationReport filtration_report(const VectorList& x) {
  require_spanning(x);
  const auto subspaces = rational_subspaces(x);
  FiltrationReport out;
  out.levels.resize(x.dim + 1);
  for (int k = 0; k <= x.dim; ++k) {
    out.levels[k].i = k;
    for (const auto& r : subspaces[k])
      out.levels[k].subspaces.push_back(
          FiltrationReport::SubspaceEntry{r, restricted_d_dimension(x, r)});
  }
  for (int i = x.dim; i >= 0; --i) {
    long long dim = i < x.dim ? out.levels[i + 1].dim_g : 0;
    for (const auto& e : out.levels[i].subspaces) dim += e.d_dim;
    out.levels[i].dim_g = dim;
  }
  out.total = out.levels[0].dim_g;
  if (out.total != tutte(x).poly.eval(2, 1))
    throw InternalError("filtration total differs from the independent-sublist count");
  return out;
}

inline long long count_independent_sublists_with_min_rank(const VectorList& x, int min_rank) {
  long long count = 0;
  const int m = x.size();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    IndexSet subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (static_cast<int>(subset.size()) < min_rank) continue;
    if (rank(x, subset) == static_cast<int>(subset.size())) ++count;
  }
  return count;
}

// dim G_i = dim G_{i+1} + sum over S_X(i) of dim D(X ∩ r), with the left side
// recomputed independently by counting independent sublists of rank >= i.
inline bool exact_sequence_check(const VectorList& x, int i) {
  require_spanning(x);
  if (i < 0 || i >= x.dim) throw PreconditionError("filtration level out of range");
  const FiltrationReport report = filtration_report(x);
  long long rhs = report.levels[i + 1].dim_g;
  for (const auto& e : report.levels[i].subspaces) rhs += e.d_dim;
  return count_independent_sublists_with_min_rank(x, i) == rhs;
}

// Graded dimension table for a stratum; the grading convention in force is
// carried in the metadata fields rather than left implicit.
struct CompactSupportTable {
  int stratum = 0;
  std::map<int, long long> entries;
  bool truncated = false;
  int max_degree = 0;      // entries are complete up to this key
  int grading_offset = 0;  // 4m - 2s
  std::string grading_note;
};

// Compact-support equivariant Betti numbers of the finite-stabilizer stratum:
// the solution space regraded by h = (4m - 2s) - 2d. Supported on even h in
// [2m, 4m - 2s], total d(X).
inline CompactSupportTable compact_support_betti_fin(const VectorList& x, int max_h) {
  require_spanning(x);
  const GradedDims dims = dspace_dims(x);
  const int offset = 4 * x.size() - 2 * x.dim;
  CompactSupportTable out;
  out.stratum = x.dim;
  out.max_degree = max_h;
  out.grading_offset = offset;
  out.grading_note =
      "entry at cohomological degree h is the solution-space dimension in polynomial degree "
      "(offset - h)/2";
  for (int d = 0; d < static_cast<int>(dims.dims.size()); ++d) {
    if (dims.dims[d] == 0) continue;
    const int h = offset - 2 * d;
    if (h <= max_h)
      out.entries[h] = dims.dims[d];
    else
      out.truncated = true;
  }
  return out;
}

inline CompactSupportTable compact_support_betti_fin(const VectorList& x) {
  return compact_support_betti_fin(x, 4 * x.size() - 2 * x.dim);
}

// Doubled-degree dimension series of the module attached to stratum i: the
// sum over rational subspaces r of dimension j >= i of the solution-space
// series of X ∩ r (degrees doubled) times a polynomial ring on s - j
// generators of degree 2. The offset relating this grading to the
// compact-support one is a reporting convention fixed at the finite stratum
// and recorded in the metadata.
inline CompactSupportTable stratum_betti_series(const VectorList& x, int i, int max_degree) {
  require_spanning(x);
  if (i < 0 || i > x.dim) throw PreconditionError("stratum level out of range");
  const auto subspaces = rational_subspaces(x);
  CompactSupportTable out;
  out.stratum = i;
  out.max_degree = max_degree;
  out.grading_offset = 4 * x.size() - 2 * x.dim;
  out.grading_note =
      "entries at doubled polynomial degree 2d; at the finite stratum the compact-support "
      "degree is offset - 2d (convention, recorded not derived)";
  for (int j = i; j <= x.dim; ++j) {
    const int free_vars = x.dim - j;
    for (const auto& r : subspaces[j]) {
      const GradedDims dd = restricted_d_dims(x, r);
      for (int d = 0; d < static_cast<int>(dd.dims.size()); ++d) {
        if (dd.dims[d] == 0) continue;
        for (int e = 0; 2 * (d + e) <= max_degree; ++e) {
          // Series of a polynomial ring on free_vars generators of degree 2.
          if (free_vars == 0 && e > 0) break;
          const long long mult =
              free_vars == 0
                  ? 1
                  : static_cast<long long>(binomial(e + free_vars - 1, free_vars - 1));
          out.entries[2 * (d + e)] += dd.dims[d] * mult;
        }
        if (free_vars > 0) out.truncated = true;
      }
    }
  }
  return out;
}

}  // namespace zonotopal
