#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "zonotopal/matrix.hpp"

namespace zonotopal {

using IndexSet = std::vector<int>;  // sorted, 0-based

// The input list X: ordered nonzero integer vectors in Z^s, duplicates
// allowed. It is a list, not a set; multiplicity matters everywhere.
struct VectorList {
  int dim = 0;
  std::vector<IntRow> vectors;

  VectorList() = default;
  VectorList(int s, std::vector<IntRow> vecs) : dim(s), vectors(std::move(vecs)) {
    for (const auto& v : vectors) {
      if (static_cast<int>(v.size()) != dim)
        throw PreconditionError("vector length differs from ambient dimension");
      if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
        throw PreconditionError("zero vector in list");
    }
  }

  int size() const { return static_cast<int>(vectors.size()); }

  std::vector<IntRow> select(const IndexSet& indices) const {
    std::vector<IntRow> out;
    out.reserve(indices.size());
    for (int i : indices) {
      if (i < 0 || i >= size()) throw PreconditionError("index out of range");
      out.push_back(vectors[i]);
    }
    return out;
  }

  VectorList sublist(const IndexSet& indices) const { return VectorList(dim, select(indices)); }

  VectorList remove(int index) const {
    IndexSet keep;
    for (int i = 0; i < size(); ++i)
      if (i != index) keep.push_back(i);
    return sublist(keep);
  }
};

inline IndexSet all_indices(const VectorList& x) {
  IndexSet out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = i;
  return out;
}

inline IndexSet complement(const VectorList& x, const IndexSet& indices) {
  std::vector<bool> in(x.size(), false);
  for (int i : indices) in[i] = true;
  IndexSet out;
  for (int i = 0; i < x.size(); ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

inline int rank(const VectorList& x, const IndexSet& subset) {
  return static_cast<int>(matrix_from_int_rows(x.select(subset)).rank());
}

inline int rank(const VectorList& x) { return rank(x, all_indices(x)); }

inline bool spans(const VectorList& x) { return rank(x) == x.dim; }

inline void require_spanning(const VectorList& x) {
  if (!spans(x)) throw PreconditionError("list does not span the ambient space");
}

// All s-subsets of indices whose vectors are independent, in lexicographic
// order; the count is d(X).
inline std::vector<IndexSet> enumerate_bases(const VectorList& x) {
  require_spanning(x);
  std::vector<IndexSet> out;
  const int m = x.size(), s = x.dim;
  IndexSet subset(s);
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == s) {
      if (rank(x, subset) == s) out.push_back(subset);
      return;
    }
    for (int i = next; i <= m - (s - pos); ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (s <= m) rec(rec, 0, 0);
  return out;
}

// A subspace spanned by part of X, canonicalized by the maximal index set of
// list members it contains and by the reduced integer row basis of its span.
struct RationalSubspace {
  IndexSet indices;                // all i with a_i in the subspace
  int dimension = 0;
  std::vector<IntRow> basis;       // RREF over Q, rows cleared to primitive integers

  bool operator==(const RationalSubspace& o) const {
    return indices == o.indices && dimension == o.dimension && basis == o.basis;
  }
};

inline std::vector<IntRow> reduced_integer_basis(const std::vector<IntRow>& spanning) {
  QMatrix m = matrix_from_int_rows(spanning);
  m.reduce();
  std::vector<IntRow> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(clear_denominators(m.row(i)));
  return out;
}

inline bool in_span(const std::vector<IntRow>& basis, const IntRow& v) {
  std::vector<IntRow> stacked = basis;
  stacked.push_back(v);
  return matrix_from_int_rows(stacked).rank() == basis.size();
}

// The canonical rational subspace spanned by the given sublist.
inline RationalSubspace span_subspace(const VectorList& x, const IndexSet& generators) {
  RationalSubspace out;
  out.basis = reduced_integer_basis(x.select(generators));
  out.dimension = static_cast<int>(out.basis.size());
  for (int i = 0; i < x.size(); ++i)
    if (out.dimension > 0 && in_span(out.basis, x.vectors[i])) out.indices.push_back(i);
  return out;
}

inline bool subspace_contains(const RationalSubspace& outer, const RationalSubspace& inner) {
  if (inner.dimension > outer.dimension) return false;
  std::vector<IntRow> stacked = outer.basis;
  stacked.insert(stacked.end(), inner.basis.begin(), inner.basis.end());
  return matrix_from_int_rows(stacked).rank() == static_cast<std::size_t>(outer.dimension);
}

// For each k = 0..s, every distinct subspace spanned by a sublist of rank k.
// k = 0 is the zero subspace (empty index set since all list vectors are
// nonzero). Entries are sorted by index set.
inline std::vector<std::vector<RationalSubspace>> rational_subspaces(const VectorList& x) {
  std::vector<std::vector<RationalSubspace>> out(x.dim + 1);
  out[0].push_back(RationalSubspace{});
  for (int k = 1; k <= x.dim; ++k) {
    std::map<std::vector<IntRow>, RationalSubspace> seen;
    IndexSet subset(k);
    auto rec = [&](auto&& self, int pos, int next) -> void {
      if (pos == k) {
        if (rank(x, subset) != k) return;
        RationalSubspace r = span_subspace(x, subset);
        seen.emplace(r.basis, std::move(r));
        return;
      }
      for (int i = next; i <= x.size() - (k - pos); ++i) {
        subset[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    if (k <= x.size()) rec(rec, 0, 0);
    for (auto& [key, r] : seen) out[k].push_back(std::move(r));
    std::sort(out[k].begin(), out[k].end(),
              [](const RationalSubspace& a, const RationalSubspace& b) {
                return a.indices < b.indices;
              });
  }
  return out;
}

// The sublist X \ H for a rational hyperplane H; removing it drops the rank.
struct Cocircuit {
  RationalSubspace hyperplane;
  IndexSet complement_indices;
};

inline std::vector<Cocircuit> cocircuits(const VectorList& x) {
  require_spanning(x);
  std::vector<Cocircuit> out;
  const auto subspaces = rational_subspaces(x);
  for (const auto& h : subspaces[x.dim - 1])
    out.push_back(Cocircuit{h, complement(x, h.indices)});
  return out;
}

}  // namespace zonotopal
