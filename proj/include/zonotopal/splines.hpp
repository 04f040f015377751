#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "zonotopal/algebra.hpp"
#include "zonotopal/chambers.hpp"
#include "zonotopal/vectorlist.hpp"

namespace zonotopal {

// The distinct hyperplanes spanned by rank-(s-1) sublists, i.e. the
// hyperplanes of the rational subspaces of dimension s-1, each given by a
// primitive integer normal with positive leading entry. Every breakpoint of
// the evaluation recursion lies on one of these.
inline std::vector<IntRow> wall_hyperplanes(const VectorList& x) {
  require_spanning(x);
  std::vector<IntRow> out;
  const auto subspaces = rational_subspaces(x);
  for (const auto& h : subspaces[x.dim - 1]) {
    QMatrix basis(h.basis.size(), x.dim);
    for (std::size_t i = 0; i < h.basis.size(); ++i)
      for (int j = 0; j < x.dim; ++j) basis.at(i, j) = h.basis[i][j];
    const std::vector<QRow> kernel = basis.nullspace();
    if (kernel.size() != 1) throw InternalError("hyperplane normal is not one-dimensional");
    IntRow normal = clear_denominators(kernel.front());
    for (const auto& v : normal) {
      if (v == 0) continue;
      if (v < 0)
        for (auto& w : normal) w = -w;
      break;
    }
    out.push_back(std::move(normal));
  }
  return out;
}

// Exact evaluation of the density of the truncated power of a spanning list
// whose cone is acute (the positivity witness certifies that). Values are
// defined only at points off every wall hyperplane; wall points are refused.
//
// The recursion integrates along the last removable list element:
//   T_Z(x) = integral over t >= 0 of T_{Z\a}(x - t a).
// The integrand is polynomial between consecutive crossings of the walls of
// the reduced list, so each piece is pinned down by interpolation at |Z|-s
// interior rational nodes and integrated exactly.
class SplineEvaluator {
 public:
  SplineEvaluator(VectorList list, QRow positive_witness)
      : dim_(list.dim), witness_(std::move(positive_witness)) {
    require_spanning(list);
    for (const auto& a : list.vectors)
      if (dot(a, witness_) <= 0)
        throw PreconditionError("witness is not strictly positive on the list");
    chain_.push_back(std::move(list));
    while (chain_.back().size() > dim_) {
      const VectorList& z = chain_.back();
      int drop = -1;
      for (int i = z.size() - 1; i >= 0; --i) {
        if (spans(z.remove(i))) {
          drop = i;
          break;
        }
      }
      if (drop < 0) throw InternalError("spanning list longer than a basis has no removable element");
      peeled_.push_back(z.vectors[drop]);
      chain_.push_back(z.remove(drop));
    }
    for (const auto& z : chain_) walls_.push_back(wall_hyperplanes(z));
    const VectorList& base = chain_.back();
    QMatrix cols(dim_, dim_);
    for (int r = 0; r < dim_; ++r)
      for (int j = 0; j < dim_; ++j) cols.at(r, j) = base.vectors[j][r];
    auto inv = cols.inverse();
    if (!inv) throw InternalError("base sublist of the peel chain is not a basis");
    base_inverse_ = std::move(*inv);
    base_density_ = Rational(1) / boost::multiprecision::abs(cols.determinant());
  }

  int dim() const { return dim_; }
  const QRow& witness() const { return witness_; }

  Rational eval(const QRow& point) const {
    if (static_cast<int>(point.size()) != dim_)
      throw PreconditionError("evaluation point dimension mismatch");
    for (const auto& n : walls_.front())
      if (dot(n, point) == 0)
        throw NonGenericPointError("point lies on a wall hyperplane of the list");
    return eval_level(0, point);
  }

 private:
  Rational eval_level(std::size_t level, const QRow& x) const {
    if (level + 1 == chain_.size()) {
      const QRow coords = base_inverse_.apply(x);
      for (const auto& c : coords) {
        if (c == 0) throw NonGenericPointError("point lies on a wall of the base cone");
        if (c < 0) return 0;
      }
      return base_density_;
    }
    const IntRow& a = peeled_[level];
    const Rational pa = dot(a, witness_);
    const Rational exit = dot_q(witness_, x) / pa;
    if (exit <= 0) return 0;

    std::vector<Rational> cuts{Rational(0), exit};
    for (const auto& n : walls_[level + 1]) {
      const Rational na = dot(n, to_rational_row(a));
      if (na == 0) continue;
      const Rational t = dot(n, x) / na;
      if (t > 0 && t < exit) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int nodes = chain_[level].size() - dim_;
    Rational total = 0;
    for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
      const Rational lo = cuts[seg], hi = cuts[seg + 1];
      std::vector<std::pair<Rational, Rational>> samples;
      samples.reserve(nodes);
      for (int j = 0; j < nodes; ++j) {
        const Rational t = lo + (hi - lo) * Rational(j + 1, nodes + 1);
        QRow shifted = x;
        for (int i = 0; i < dim_; ++i) shifted[i] -= t * Rational(a[i]);
        samples.emplace_back(t, eval_level(level + 1, shifted));
      }
      total += interpolate_and_integrate(samples, nodes - 1, lo, hi);
    }
    return total;
  }

  static Rational dot_q(const QRow& a, const QRow& b) {
    Rational out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
  }

  int dim_;
  QRow witness_;
  std::vector<VectorList> chain_;
  std::vector<IntRow> peeled_;
  std::vector<std::vector<IntRow>> walls_;
  QMatrix base_inverse_;
  Rational base_density_;
};

inline SplineEvaluator make_evaluator(const VectorList& x) {
  auto phi = acute_witness(x);
  if (!phi)
    throw PreconditionError("cone is not acute: no functional is positive on the whole list");
  return SplineEvaluator(x, std::move(*phi));
}

inline Rational eval_T(const VectorList& x, const QRow& point) {
  return make_evaluator(x).eval(point);
}

// T_X^F = (-1)^{|B|} T_{(A,-B)} for the face split X = A u B.
inline VectorList flip_negative_part(const VectorList& x, const RegularFace& face) {
  if (static_cast<int>(face.signs.size()) != x.size())
    throw PreconditionError("face sign vector length mismatch");
  std::vector<IntRow> flipped = x.vectors;
  for (int i = 0; i < x.size(); ++i)
    if (face.signs[i] < 0)
      for (auto& v : flipped[i]) v = -v;
  return VectorList(x.dim, std::move(flipped));
}

inline Rational eval_TF(const VectorList& x, const RegularFace& face, const QRow& point) {
  for (int i = 0; i < x.size(); ++i) {
    const Rational p = dot(x.vectors[i], face.witness);
    if ((face.signs[i] > 0 && p <= 0) || (face.signs[i] < 0 && p >= 0))
      throw PreconditionError("face witness does not match its sign vector");
  }
  const VectorList flipped = flip_negative_part(x, face);
  SplineEvaluator eval(flipped, face.witness);
  Rational value = eval.eval(point);
  const std::size_t negatives = face_split(x, face).negative.size();
  return negatives % 2 == 0 ? value : -value;
}

// The exact polynomial the truncated power restricts to on the chamber of the
// witness (zero outside the support cone). Homogeneous of degree m - s.
struct SplinePiece {
  QRow chamber_witness;
  MultiPoly polynomial;
};

inline SplinePiece local_piece_with(const SplineEvaluator& eval, const VectorList& x,
                                    const QRow& witness) {
  const std::vector<IntRow> walls = wall_hyperplanes(x);
  std::vector<int> signs;
  for (const auto& n : walls) {
    const Rational p = dot(n, witness);
    if (p == 0) throw NonGenericPointError("chamber witness lies on a wall hyperplane");
    signs.push_back(p > 0 ? +1 : -1);
  }

  const int s = x.dim;
  const int degree = x.size() - s;
  const std::vector<Exponents> mons = monomials_of_degree(s, degree);
  const std::size_t n = mons.size();

  // Deterministic perturbation schedule: points w + eta*(1, alpha) with alpha
  // running over the principal lattice |alpha| <= degree in the remaining
  // coordinates; the restriction of homogeneous degree-d polynomials to an
  // affine coordinate slice is a bijection, and the principal lattice is
  // unisolvent on the slice, so the system is nonsingular for generic eta.
  // The axis rotates across retries.
  for (int axis = 0; axis < s; ++axis) {
    std::vector<IntRow> dirs;
    for (int d = 0; d <= degree && dirs.size() < n; ++d)
      for (const Exponents& alpha : monomials_of_degree(s - 1, d)) {
        if (dirs.size() == n) break;
        IntRow u(s, 0);
        u[axis] = 1;
        for (int i = 0, j = 0; i < s; ++i)
          if (i != axis) u[i] = alpha[j++];
        dirs.push_back(std::move(u));
      }
    IntRow holdout_dir(s, 0);
    holdout_dir[axis] = 2;
    holdout_dir[(axis + 1) % s] += 1;
    dirs.push_back(std::move(holdout_dir));

    for (int shrink = 2; shrink < 48; ++shrink) {
      const Rational eta(1, Int(1) << shrink);
      std::vector<QRow> points;
      bool in_chamber = true;
      for (const auto& u : dirs) {
        QRow p = witness;
        for (int i = 0; i < s; ++i) p[i] += eta * Rational(u[i]);
        for (std::size_t wi = 0; wi < walls.size() && in_chamber; ++wi) {
          const Rational v = dot(walls[wi], p);
          if (v == 0 || (v > 0 ? +1 : -1) != signs[wi]) in_chamber = false;
        }
        if (!in_chamber) break;
        points.push_back(std::move(p));
      }
      if (!in_chamber) continue;

      QMatrix system(n, n);
      QRow values(n);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j)
          system.at(k, j) = MultiPoly::monomial(s, mons[j]).eval(points[k]);
        values[k] = eval.eval(points[k]);
      }
      if (system.rank() != n) continue;  // retry with a different schedule
      auto coeffs = system.solve(values);
      if (!coeffs) continue;

      MultiPoly poly(s);
      for (std::size_t j = 0; j < n; ++j) poly.add_term(mons[j], (*coeffs)[j]);
      if (poly.eval(points[n]) != eval.eval(points[n]))
        throw InternalError("holdout sample disagrees with the interpolated chamber polynomial");
      return SplinePiece{witness, std::move(poly)};
    }
  }
  throw InternalError("no perturbation schedule produced an invertible interpolation system");
}

inline SplinePiece local_piece(const VectorList& x, const QRow& witness) {
  return local_piece_with(make_evaluator(x), x, witness);
}

// One interior witness per open region of the wall arrangement, reused as the
// deterministic probe set for the deletion identity.
inline std::vector<QRow> chamber_probe_points(const VectorList& x) {
  const std::vector<IntRow> walls = wall_hyperplanes(x);
  std::vector<QRow> out;
  for (const auto& cell : chambers(VectorList(x.dim, walls))) out.push_back(cell.witness);
  return out;
}

// d_a T_X = T_{X\a}, checked chamber by chamber on local pieces. Returns
// nothing when X minus the element no longer spans (the identity then leaves
// pointwise scope).
inline std::optional<bool> verify_deletion(const VectorList& x, int index) {
  if (index < 0 || index >= x.size()) throw PreconditionError("deletion index out of range");
  const VectorList reduced = x.remove(index);
  if (!spans(reduced)) return std::nullopt;
  const SplineEvaluator eval_full = make_evaluator(x);
  const SplineEvaluator eval_reduced(reduced, eval_full.witness());
  for (const QRow& w : chamber_probe_points(x)) {
    const MultiPoly derived =
        directional_derivative(local_piece_with(eval_full, x, w).polynomial, x.vectors[index]);
    const MultiPoly expected = local_piece_with(eval_reduced, reduced, w).polynomial;
    if (!(derived == expected)) return false;
  }
  return true;
}

}  // namespace zonotopal
