#pragma once

#include <map>
#include <string>
#include <vector>

#include "zonotopal/algebra.hpp"
#include "zonotopal/vectorlist.hpp"

namespace zonotopal {

// d_Y: the product of the linear forms <a_i, .> over the index set; the empty
// set gives 1.
inline MultiPoly d_poly(const VectorList& x, const IndexSet& indices) {
  MultiPoly out = MultiPoly::constant(x.dim, 1);
  for (int i : indices) {
    if (i < 0 || i >= x.size()) throw PreconditionError("d_poly: index out of range");
    out = out * MultiPoly::linear_form(x.vectors[i]);
  }
  return out;
}

// Which ideal to build: I_X (cocircuit generators), I_k (complements of all
// k-dimensional rational subspaces), or I_Q for an explicit set Q.
struct IdealSpec {
  enum class Kind { CocircuitFull, LevelK, SubspaceSet };
  Kind kind = Kind::CocircuitFull;
  int k = -1;
  std::vector<RationalSubspace> subspaces;

  static IdealSpec cocircuit_full() { return IdealSpec{Kind::CocircuitFull, -1, {}}; }
  static IdealSpec level(int k) { return IdealSpec{Kind::LevelK, k, {}}; }
  static IdealSpec subspace_set(std::vector<RationalSubspace> q) {
    return IdealSpec{Kind::SubspaceSet, -1, std::move(q)};
  }
};

inline void validate_subspace(const VectorList& x, const RationalSubspace& r) {
  if (r.dimension == 0) {
    if (!r.indices.empty() || !r.basis.empty())
      throw PreconditionError("zero subspace must have empty index set and basis");
    return;
  }
  const RationalSubspace canonical = span_subspace(x, r.indices);
  if (!(canonical == r))
    throw PreconditionError("subspace is not a canonical rational subspace of the list");
}

inline std::vector<MultiPoly> generators(const VectorList& x, const IdealSpec& spec) {
  require_spanning(x);
  std::vector<MultiPoly> out;
  switch (spec.kind) {
    case IdealSpec::Kind::CocircuitFull:
      for (const auto& c : cocircuits(x)) out.push_back(d_poly(x, c.complement_indices));
      break;
    case IdealSpec::Kind::LevelK: {
      if (spec.k < 0 || spec.k > x.dim - 1)
        throw PreconditionError("level k must satisfy 0 <= k <= s-1");
      const auto subspaces = rational_subspaces(x);
      for (const auto& r : subspaces[spec.k])
        out.push_back(d_poly(x, complement(x, r.indices)));
      break;
    }
    case IdealSpec::Kind::SubspaceSet:
      for (const auto& r : spec.subspaces) {
        validate_subspace(x, r);
        out.push_back(d_poly(x, complement(x, r.indices)));
      }
      break;
  }
  return out;
}

inline int default_max_degree(const VectorList& x) { return x.size(); }

// Hilbert function of S/I for the requested ideal.
inline GradedDims hilbert(const VectorList& x, const IdealSpec& spec, int max_degree) {
  return graded_ideal_dims(x.dim, generators(x, spec), max_degree);
}

inline GradedDims hilbert(const VectorList& x, const IdealSpec& spec) {
  return hilbert(x, spec, default_max_degree(x));
}

// Graded dimensions of the equivariant cohomology of an open stratum; a
// polynomial-degree-d class sits in cohomological degree 2d, every odd degree
// vanishes.
struct BettiTable {
  std::map<int, long long> entries;  // cohomological degree -> dimension
  bool truncated = false;
  int max_h = 0;  // entries are complete for h <= max_h

  long long at(int h) const {
    auto it = entries.find(h);
    if (it != entries.end()) return it->second;
    if (h > max_h && truncated) throw PreconditionError("BettiTable: degree beyond truncation");
    return 0;
  }
};

inline BettiTable betti_open_stratum(const VectorList& x,
                                     const std::vector<RationalSubspace>& q, int max_degree) {
  require_spanning(x);
  const GradedDims dims = hilbert(x, IdealSpec::subspace_set(q), max_degree);
  BettiTable out;
  out.truncated = dims.truncated;
  out.max_h = 2 * max_degree;
  for (int d = 0; d < static_cast<int>(dims.dims.size()); ++d)
    if (dims.dims[d] != 0) out.entries[2 * d] = dims.dims[d];
  return out;
}

// Q is admissible when it is downward closed in the poset of rational
// subspaces.
inline bool is_admissible(const VectorList& x, const std::vector<RationalSubspace>& q) {
  const auto all = rational_subspaces(x);
  for (const auto& s : q) {
    validate_subspace(x, s);
    for (int k = 0; k < s.dimension; ++k)
      for (const auto& t : all[k]) {
        if (!subspace_contains(s, t)) continue;
        bool found = false;
        for (const auto& member : q)
          if (member == t) found = true;
        if (!found) return false;
      }
  }
  return true;
}

// Adds to Q every rational subspace contained in one of its members.
inline std::vector<RationalSubspace> downward_closure(const VectorList& x,
                                                      const std::vector<RationalSubspace>& q) {
  const auto all = rational_subspaces(x);
  std::vector<RationalSubspace> out;
  auto push_unique = [&out](const RationalSubspace& r) {
    for (const auto& member : out)
      if (member == r) return;
    out.push_back(r);
  };
  for (const auto& s : q) {
    validate_subspace(x, s);
    push_unique(s);
    for (int k = 0; k < s.dimension; ++k)
      for (const auto& t : all[k])
        if (subspace_contains(s, t)) push_unique(t);
  }
  return out;
}

// Degreewise certification of the intersection formula
//   I_s ∩ I_{Q\{s}} = sum of I_t over rational t ⊂ s of dimension k-1
// for an admissible Q with s of maximal dimension k. The left side is never
// formed symbolically: its graded dimension comes from
// dim A + dim B - dim(A+B), and containment of the right side in both A and B
// is certified by stacked-matrix ranks.
struct LamainReport {
  bool holds = true;
  struct DegreeLine {
    int degree;
    long long intersection_dim;  // dim (I_s ∩ I_{Q\{s}})_d
    long long boundary_dim;      // dim (sum I_t)_d
    bool contained;              // right side inside both intersectands
  };
  std::vector<DegreeLine> per_degree;
};

inline LamainReport verify_lamain(const VectorList& x, const std::vector<RationalSubspace>& q,
                                  const RationalSubspace& s, int max_degree) {
  require_spanning(x);
  if (!is_admissible(x, q)) throw PreconditionError("Q is not admissible");
  bool member = false;
  int max_dim = 0;
  for (const auto& t : q) {
    if (t == s) member = true;
    max_dim = std::max(max_dim, t.dimension);
  }
  if (!member) throw PreconditionError("s is not a member of Q");
  if (s.dimension != max_dim) throw PreconditionError("s is not of maximal dimension in Q");

  const int k = s.dimension;
  std::vector<MultiPoly> gens_s{d_poly(x, complement(x, s.indices))};
  std::vector<MultiPoly> gens_rest;
  for (const auto& t : q)
    if (!(t == s)) gens_rest.push_back(d_poly(x, complement(x, t.indices)));
  std::vector<MultiPoly> gens_sum = gens_s;
  gens_sum.insert(gens_sum.end(), gens_rest.begin(), gens_rest.end());

  std::vector<MultiPoly> gens_boundary;
  const auto all_subspaces = rational_subspaces(x);
  if (k >= 1)
    for (const auto& t : all_subspaces[k - 1])
      if (subspace_contains(s, t)) gens_boundary.push_back(d_poly(x, complement(x, t.indices)));

  LamainReport report;
  for (int d = 0; d <= max_degree; ++d) {
    const long long r_s = static_cast<long long>(ideal_graded_piece(x.dim, gens_s, d).rank());
    const long long r_rest =
        static_cast<long long>(ideal_graded_piece(x.dim, gens_rest, d).rank());
    const long long r_sum = static_cast<long long>(ideal_graded_piece(x.dim, gens_sum, d).rank());
    const long long r_boundary =
        static_cast<long long>(ideal_graded_piece(x.dim, gens_boundary, d).rank());

    auto stacked_rank = [&](const std::vector<MultiPoly>& base) {
      std::vector<MultiPoly> stacked = base;
      stacked.insert(stacked.end(), gens_boundary.begin(), gens_boundary.end());
      return static_cast<long long>(ideal_graded_piece(x.dim, stacked, d).rank());
    };
    const bool contained = stacked_rank(gens_s) == r_s && stacked_rank(gens_rest) == r_rest;

    const long long intersection = r_s + r_rest - r_sum;
    report.per_degree.push_back(
        LamainReport::DegreeLine{d, intersection, r_boundary, contained});
    if (intersection != r_boundary || !contained) report.holds = false;
  }
  return report;
}

}  // namespace zonotopal
