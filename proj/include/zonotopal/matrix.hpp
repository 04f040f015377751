#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zonotopal/errors.hpp"
#include "zonotopal/rational.hpp"

namespace zonotopal {

using QRow = std::vector<Rational>;
using IntRow = std::vector<std::int64_t>;

// Dense matrix over Q with plain Gauss-Jordan elimination. All the graded
// pieces handled in this library are tiny, so per-degree dense reduction is
// the whole linear-algebra story.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, QRow(cols)) {}

  static QMatrix from_rows(std::vector<QRow> rows) {
    QMatrix m;
    if (!rows.empty()) m.cols_ = rows.front().size();
    m.data_ = std::move(rows);
    for (const auto& r : m.data_)
      if (r.size() != m.cols_) throw PreconditionError("ragged matrix rows");
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const QRow& row(std::size_t i) const { return data_[i]; }

  void append_row(QRow r) {
    if (data_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw PreconditionError("row length mismatch");
    data_.push_back(std::move(r));
  }

  // Reduced row echelon form in place; returns the pivot columns in
  // increasing order. Zero rows are dropped.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < data_.size(); ++c) {
      std::size_t sel = r;
      while (sel < data_.size() && data_[sel][c] == 0) ++sel;
      if (sel == data_.size()) continue;
      std::swap(data_[r], data_[sel]);
      const Rational inv = Rational(1) / data_[r][c];
      for (std::size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i == r || data_[i][c] == 0) continue;
        const Rational f = data_[i][c];
        for (std::size_t j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    data_.resize(r);
    return pivots;
  }

  std::size_t rank() const {
    QMatrix copy = *this;
    return copy.reduce().size();
  }

  // Basis of the right kernel, itself in reduced echelon form with respect
  // to the column order (each basis row leads with coefficient 1 at a column
  // not used by any other row).
  std::vector<QRow> nullspace() const {
    QMatrix copy = *this;
    const std::vector<std::size_t> pivots = copy.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<QRow> raw;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      QRow v(cols_, Rational(0));
      v[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy.at(i, f);
      raw.push_back(std::move(v));
    }
    QMatrix basis = QMatrix::from_rows(std::move(raw));
    basis.reduce();
    return basis.data_;
  }

  Rational determinant() const {
    if (rows() != cols_) throw PreconditionError("determinant of non-square matrix");
    QMatrix a = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t sel = c;
      while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
      if (sel == a.rows()) return 0;
      if (sel != c) {
        std::swap(a.data_[sel], a.data_[c]);
        det = -det;
      }
      det *= a.at(c, c);
      for (std::size_t i = c + 1; i < a.rows(); ++i) {
        if (a.at(i, c) == 0) continue;
        const Rational f = a.at(i, c) / a.at(c, c);
        for (std::size_t j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(c, j);
      }
    }
    return det;
  }

  std::optional<QMatrix> inverse() const {
    if (rows() != cols_) throw PreconditionError("inverse of non-square matrix");
    const std::size_t n = rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = data_[i][j];
      aug.at(i, n + i) = 1;
    }
    if (aug.reduce().size() != n) return std::nullopt;
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
  }

  QRow apply(const QRow& x) const {
    if (x.size() != cols_) throw PreconditionError("apply: dimension mismatch");
    QRow out(rows(), Rational(0));
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += data_[i][j] * x[j];
    return out;
  }

  // One solution of A x = b, if any.
  std::optional<QRow> solve(const QRow& b) const {
    if (b.size() != rows()) throw PreconditionError("rhs length mismatch");
    QMatrix aug(rows(), cols_ + 1);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = data_[i][j];
      aug.at(i, cols_) = b[i];
    }
    const std::vector<std::size_t> pivots = aug.reduce();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    QRow x(cols_, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<QRow> data_;
};

inline QRow to_rational_row(const IntRow& v) {
  QRow out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

inline QMatrix matrix_from_int_rows(const std::vector<IntRow>& rows) {
  std::vector<QRow> qrows;
  qrows.reserve(rows.size());
  for (const auto& r : rows) qrows.push_back(to_rational_row(r));
  return QMatrix::from_rows(std::move(qrows));
}

// Scales a rational row to the primitive integer row with the same line and
// the same orientation (leading nonzero entry keeps its sign).
inline IntRow clear_denominators(const QRow& row) {
  Int l = 1;
  for (const auto& q : row) l = boost::multiprecision::lcm(l, denom(q));
  std::vector<Int> scaled(row.size());
  Int g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    scaled[i] = numer(row[i]) * (l / denom(row[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  if (g == 0) g = 1;
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Int e = scaled[i] / g;
    out[i] = static_cast<std::int64_t>(e);
  }
  return out;
}

// Multiplies by the lcm of the denominators only; integer entries stay as
// they are.
inline IntRow scale_to_integers(const QRow& row) {
  Int l = 1;
  for (const auto& q : row) l = boost::multiprecision::lcm(l, denom(q));
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i)
    out[i] = static_cast<std::int64_t>(Int(numer(row[i]) * (l / denom(row[i]))));
  return out;
}

inline Rational dot(const IntRow& a, const QRow& x) {
  if (a.size() != x.size()) throw PreconditionError("dot: dimension mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += Rational(a[i]) * x[i];
  return out;
}

inline Rational dot(const QRow& a, const QRow& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

inline std::int64_t dot(const IntRow& a, const IntRow& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  std::int64_t out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

}  // namespace zonotopal
