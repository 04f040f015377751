#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "zonotopal/multipoly.hpp"

namespace zonotopal {

// d/dt p(x + t a) at t = 0.
inline MultiPoly directional_derivative(const MultiPoly& p, const IntRow& a) {
  if (static_cast<int>(a.size()) != p.nvars())
    throw PreconditionError("directional_derivative: dimension mismatch");
  MultiPoly out(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    if (a[i] == 0) continue;
    out += p.partial(i) * Rational(a[i]);
  }
  return out;
}

// The composite operator prod_{a in Y} d_a; an empty list is the identity.
inline MultiPoly product_operator(const MultiPoly& p, const std::vector<IntRow>& list) {
  MultiPoly out = p;
  for (const auto& a : list) {
    out = directional_derivative(out, a);
    if (out.is_zero()) break;
  }
  return out;
}

// Dimension per polynomial degree. `truncated` records that the sequence was
// cut at a degree bound while still nonzero; when false, every omitted higher
// degree is zero.
struct GradedDims {
  std::vector<long long> dims;
  bool truncated = false;

  long long at(int d) const {
    if (d < 0) return 0;
    if (d < static_cast<int>(dims.size())) return dims[d];
    if (truncated) throw PreconditionError("GradedDims: degree beyond truncation bound");
    return 0;
  }

  int top_degree() const {  // largest degree with nonzero entry, -1 if none
    for (int d = static_cast<int>(dims.size()); d-- > 0;)
      if (dims[d] != 0) return d;
    return -1;
  }

  long long total() const {
    if (truncated) throw PreconditionError("GradedDims: total of a truncated sequence");
    long long t = 0;
    for (long long v : dims) t += v;
    return t;
  }

  bool same_dims(const GradedDims& o) const {
    const int n = static_cast<int>(std::max(dims.size(), o.dims.size()));
    if (truncated != o.truncated) return false;
    for (int d = 0; d < n; ++d) {
      const long long a = d < static_cast<int>(dims.size()) ? dims[d] : 0;
      const long long b = d < static_cast<int>(o.dims.size()) ? o.dims[d] : 0;
      if (a != b) return false;
    }
    return true;
  }
};

using LinearOperator = std::function<MultiPoly(const MultiPoly&)>;

// Basis, in reduced echelon form with respect to the grlex monomial order, of
// the space of homogeneous degree-d polynomials killed by all the operators.
inline std::vector<MultiPoly> graded_kernel(int nvars,
                                            const std::vector<LinearOperator>& operators,
                                            int degree) {
  const std::vector<Exponents> mons = monomials_of_degree(nvars, degree);
  std::vector<QRow> constraints;
  for (const auto& op : operators) {
    std::vector<MultiPoly> img;
    img.reserve(mons.size());
    std::map<Exponents, std::size_t, GrlexGreater> target;
    for (const auto& m : mons) {
      img.push_back(op(MultiPoly::monomial(nvars, m)));
      for (const auto& [e, c] : img.back().terms()) target.emplace(e, 0);
    }
    std::size_t base = constraints.size();
    for (auto& [e, idx] : target) idx = base++;
    constraints.resize(base, QRow(mons.size(), Rational(0)));
    for (std::size_t j = 0; j < mons.size(); ++j)
      for (const auto& [e, c] : img[j].terms()) constraints[target.at(e)][j] = c;
  }
  QMatrix m = QMatrix::from_rows(std::move(constraints));
  if (m.rows() == 0) m = QMatrix(0, mons.size());
  std::vector<MultiPoly> basis;
  for (const QRow& v : m.nullspace()) {
    MultiPoly p(nvars);
    for (std::size_t j = 0; j < mons.size(); ++j) p.add_term(mons[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

// The degree-d slice of the ideal generated by homogeneous polynomials,
// reduced; pivot columns are the leading monomials the ideal occupies.
struct IdealPiece {
  std::vector<Exponents> monomials;  // grlex-descending degree-d basis
  QMatrix reduced;                   // RREF of the spanning rows {m*g}
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }

  std::vector<Exponents> standard_monomials() const {
    std::vector<bool> is_pivot(monomials.size(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Exponents> out;
    for (std::size_t j = 0; j < monomials.size(); ++j)
      if (!is_pivot[j]) out.push_back(monomials[j]);
    return out;
  }
};

inline IdealPiece ideal_graded_piece(int nvars, const std::vector<MultiPoly>& generators,
                                     int degree) {
  IdealPiece out;
  out.monomials = monomials_of_degree(nvars, degree);
  std::vector<QRow> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) throw PreconditionError("ideal generator is zero");
    if (!g.is_homogeneous()) throw PreconditionError("ideal generator is not homogeneous");
    if (g.nvars() != nvars) throw PreconditionError("ideal generator arity mismatch");
    const int e = g.degree();
    if (e > degree) continue;
    for (const auto& m : monomials_of_degree(nvars, degree - e))
      rows.push_back((MultiPoly::monomial(nvars, m) * g).coefficient_row(out.monomials));
  }
  out.reduced = QMatrix::from_rows(std::move(rows));
  if (out.reduced.rows() == 0) out.reduced = QMatrix(0, out.monomials.size());
  out.pivots = out.reduced.reduce();
  return out;
}

// Hilbert function of S/<generators> up to maxDegree, by per-degree ranks.
inline GradedDims graded_ideal_dims(int nvars, const std::vector<MultiPoly>& generators,
                                    int max_degree) {
  GradedDims out;
  out.dims.resize(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    const IdealPiece piece = ideal_graded_piece(nvars, generators, d);
    out.dims[d] =
        static_cast<long long>(piece.monomials.size()) - static_cast<long long>(piece.rank());
  }
  out.truncated = out.dims[max_degree] != 0;
  return out;
}

// Exact integral over [t0, t1] of the unique degree <= degree_bound polynomial
// through the samples. The sampled function must itself be polynomial of that
// degree on the interval; the node count pins it down.
inline Rational interpolate_and_integrate(
    const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound,
    const Rational& t0, const Rational& t1) {
  if (static_cast<int>(samples.size()) != degree_bound + 1)
    throw PreconditionError("interpolate_and_integrate: need degree+1 samples");
  std::vector<Rational> nodes, values;
  nodes.reserve(samples.size());
  values.reserve(samples.size());
  for (const auto& [t, v] : samples) {
    nodes.push_back(t);
    values.push_back(v);
  }
  return UniPoly::interpolate(nodes, values).integrate(t0, t1);
}

}  // namespace zonotopal
