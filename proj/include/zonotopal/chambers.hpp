#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zonotopal/vectorlist.hpp"

namespace zonotopal {

// Fourier-Motzkin feasibility for strict homogeneous systems c . phi > 0.
// Returns an exact rational interior point, or nothing. Dimensions in scope
// are tiny, so the doubling of constraints per eliminated variable is fine.
inline std::optional<QRow> strict_feasible(const std::vector<QRow>& constraints, int nvars) {
  for (const auto& c : constraints)
    if (static_cast<int>(c.size()) != nvars) throw PreconditionError("constraint arity mismatch");

  if (nvars == 0) return constraints.empty() ? std::optional<QRow>(QRow{}) : std::nullopt;

  std::vector<QRow> lower, upper, rest;  // x_n > l.x', x_n < u.x'
  for (const auto& c : constraints) {
    bool zero = true;
    for (const auto& v : c)
      if (v != 0) zero = false;
    if (zero) return std::nullopt;  // 0 > 0
    const Rational lead = c[nvars - 1];
    QRow head(c.begin(), c.end() - 1);
    if (lead == 0) {
      rest.push_back(std::move(head));
    } else {
      QRow bound(nvars - 1);
      for (int i = 0; i < nvars - 1; ++i) bound[i] = -head[i] / lead;
      (lead > 0 ? lower : upper).push_back(std::move(bound));
    }
  }

  std::vector<QRow> reduced = rest;
  for (const auto& l : lower)
    for (const auto& u : upper) {
      QRow diff(nvars - 1);
      for (int i = 0; i < nvars - 1; ++i) diff[i] = u[i] - l[i];
      reduced.push_back(std::move(diff));
    }

  auto inner = strict_feasible(reduced, nvars - 1);
  if (!inner) return std::nullopt;

  std::optional<Rational> lo, hi;
  for (const auto& l : lower) {
    Rational v = 0;
    for (int i = 0; i < nvars - 1; ++i) v += l[i] * (*inner)[i];
    if (!lo || v > *lo) lo = v;
  }
  for (const auto& u : upper) {
    Rational v = 0;
    for (int i = 0; i < nvars - 1; ++i) v += u[i] * (*inner)[i];
    if (!hi || v < *hi) hi = v;
  }
  Rational last;
  if (lo && hi)
    last = (*lo + *hi) / 2;
  else if (lo)
    last = *lo + 1;
  else if (hi)
    last = *hi - 1;
  else
    last = 0;

  QRow witness = *inner;
  witness.push_back(last);
  return witness;
}

// A chamber of the arrangement of the hyperplanes a^perp, recorded by its
// sign vector together with a rational interior witness.
struct RegularFace {
  std::vector<int> signs;  // entries +1 / -1, one per list element
  QRow witness;
};

inline std::string signs_string(const std::vector<int>& signs) {
  std::string out;
  for (int s : signs) out += s > 0 ? '+' : '-';
  return out;
}

inline std::optional<QRow> sign_witness(const VectorList& x, const std::vector<int>& signs) {
  std::vector<QRow> constraints;
  constraints.reserve(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    QRow c = to_rational_row(x.vectors[i]);
    if (signs[i] < 0)
      for (auto& v : c) v = -v;
    constraints.push_back(std::move(c));
  }
  return strict_feasible(constraints, x.dim);
}

// All realizable sign vectors, by inserting the hyperplanes one at a time and
// keeping one exact witness per cell. Deterministic: cells in creation order,
// the + side tried before the - side.
inline std::vector<RegularFace> chambers(const VectorList& x) {
  std::vector<RegularFace> cells;
  cells.push_back(RegularFace{{}, QRow(x.dim, Rational(0))});
  for (int i = 0; i < x.size(); ++i) {
    std::vector<RegularFace> next;
    for (const auto& cell : cells) {
      const Rational pairing = dot(x.vectors[i], cell.witness);
      for (int tau : {+1, -1}) {
        std::vector<int> signs = cell.signs;
        signs.push_back(tau);
        if ((tau > 0 && pairing > 0) || (tau < 0 && pairing < 0)) {
          next.push_back(RegularFace{std::move(signs), cell.witness});
          continue;
        }
        VectorList prefix(x.dim, std::vector<IntRow>(x.vectors.begin(), x.vectors.begin() + i + 1));
        if (auto w = sign_witness(prefix, signs))
          next.push_back(RegularFace{std::move(signs), std::move(*w)});
      }
    }
    cells = std::move(next);
  }
  return cells;
}

struct FaceSplit {
  IndexSet positive;  // A
  IndexSet negative;  // B
};

inline FaceSplit face_split(const VectorList& x, const RegularFace& face) {
  if (static_cast<int>(face.signs.size()) != x.size())
    throw PreconditionError("face sign vector length mismatch");
  FaceSplit out;
  for (int i = 0; i < x.size(); ++i)
    (face.signs[i] > 0 ? out.positive : out.negative).push_back(i);
  return out;
}

inline RegularFace face_from_witness(const VectorList& x, const QRow& phi) {
  if (static_cast<int>(phi.size()) != x.dim)
    throw PreconditionError("witness dimension mismatch");
  RegularFace out;
  out.witness = phi;
  for (const auto& a : x.vectors) {
    const Rational p = dot(a, phi);
    if (p == 0) throw PreconditionError("witness lies on a hyperplane of the arrangement");
    out.signs.push_back(p > 0 ? +1 : -1);
  }
  return out;
}

inline RegularFace face_from_signs(const VectorList& x, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != x.size())
    throw PreconditionError("sign vector length mismatch");
  for (int s : signs)
    if (s != 1 && s != -1) throw PreconditionError("signs must be +1 or -1");
  auto w = sign_witness(x, signs);
  if (!w) throw PreconditionError("sign vector is not realizable for this list");
  return RegularFace{signs, std::move(*w)};
}

// A functional positive on all of X; exists iff the cone C(X) is acute.
inline std::optional<QRow> acute_witness(const VectorList& x) {
  return sign_witness(x, std::vector<int>(x.size(), +1));
}

}  // namespace zonotopal
