#pragma once

#include <vector>

#include "zonotopal/algebra.hpp"
#include "zonotopal/ideals.hpp"
#include "zonotopal/vectorlist.hpp"

namespace zonotopal {

inline std::vector<LinearOperator> cocircuit_operators(const VectorList& x) {
  std::vector<LinearOperator> ops;
  for (const auto& c : cocircuits(x)) {
    std::vector<IntRow> vecs = x.select(c.complement_indices);
    ops.push_back([vecs](const MultiPoly& p) { return product_operator(p, vecs); });
  }
  return ops;
}

// Homogeneous basis of the space of polynomials killed by every cocircuit
// operator; graded because the cocircuit ideal is homogeneous.
struct DSpaceBasis {
  std::vector<std::vector<MultiPoly>> by_degree;  // index = polynomial degree

  GradedDims dims() const {
    GradedDims out;
    for (const auto& layer : by_degree) out.dims.push_back(static_cast<long long>(layer.size()));
    return out;
  }

  long long total() const {
    long long t = 0;
    for (const auto& layer : by_degree) t += static_cast<long long>(layer.size());
    return t;
  }
};

inline DSpaceBasis dspace_basis(const VectorList& x) {
  require_spanning(x);
  const int top = x.size() - x.dim;
  const std::vector<LinearOperator> ops = cocircuit_operators(x);
  DSpaceBasis out;
  for (int d = 0; d <= top; ++d) out.by_degree.push_back(graded_kernel(x.dim, ops, d));
  if (!graded_kernel(x.dim, ops, top + 1).empty())
    throw InternalError("cocircuit kernel does not vanish above degree m - s");
  const long long bases = static_cast<long long>(enumerate_bases(x).size());
  if (out.total() != bases)
    throw InternalError("dimension of the solution space differs from the basis count");
  return out;
}

inline GradedDims dspace_dims(const VectorList& x) { return dspace_basis(x).dims(); }

// Matrix of the pairing <p, f> = (p(d) f)(0) in degree d, rows indexed by the
// standard monomials of (S/I_X)_d, columns by the solution-space basis. The
// caller checks nonsingularity.
inline QMatrix duality_pairing_matrix(const VectorList& x, int degree) {
  require_spanning(x);
  const int top = x.size() - x.dim;
  if (degree < 0 || degree > top)
    throw PreconditionError("duality pairing degree outside graded range");
  const std::vector<Exponents> standard =
      ideal_graded_piece(x.dim, generators(x, IdealSpec::cocircuit_full()), degree)
          .standard_monomials();
  const std::vector<MultiPoly> basis = dspace_basis(x).by_degree[degree];
  QMatrix out(standard.size(), basis.size());
  for (std::size_t i = 0; i < standard.size(); ++i) {
    Rational fact = 1;
    for (int e : standard[i]) fact *= Rational(factorial(e));
    for (std::size_t j = 0; j < basis.size(); ++j)
      out.at(i, j) = fact * basis[j].coefficient(standard[i]);
  }
  return out;
}

inline bool is_square_nonsingular(const QMatrix& m) {
  return m.rows() == m.cols() && m.rank() == m.rows();
}

// For every rational subspace t of dimension < k, the operator d_{X\t} must
// kill the whole solution space (X\t contains a cocircuit).
inline bool annihilator_check(const VectorList& x, int k) {
  require_spanning(x);
  if (k < 0 || k > x.dim) throw PreconditionError("stratum level out of range");
  const DSpaceBasis basis = dspace_basis(x);
  const auto subspaces = rational_subspaces(x);
  for (int j = 0; j < k; ++j)
    for (const auto& t : subspaces[j]) {
      const std::vector<IntRow> vecs = x.select(complement(x, t.indices));
      for (const auto& layer : basis.by_degree)
        for (const auto& f : layer)
          if (!product_operator(f, vecs).is_zero()) return false;
    }
  return true;
}

}  // namespace zonotopal
