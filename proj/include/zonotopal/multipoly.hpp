#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "zonotopal/matrix.hpp"
#include "zonotopal/rational.hpp"

namespace zonotopal {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector first. This is the one monomial
// order used everywhere (term storage, echelon forms, reported bases).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// All exponent vectors of the given total degree, grlex-descending.
inline std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

// Sparse multivariate polynomial over Q. Zero coefficients are never stored;
// the zero polynomial has an empty term map.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c = 1) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
  }

  // The linear polynomial <a, x>.
  static MultiPoly linear_form(const IntRow& a) {
    MultiPoly p(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Exponents e(a.size(), 0);
      e[i] = 1;
      p.add_term(e, Rational(a[i]));
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {  // -1 for the zero polynomial
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw PreconditionError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  MultiPoly partial(int var) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  Rational eval(const QRow& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw PreconditionError("eval arity mismatch");
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      out += t;
    }
    return out;
  }

  // Coefficient row over an explicit monomial list (used for per-degree
  // linear algebra).
  QRow coefficient_row(const std::vector<Exponents>& basis) const {
    QRow out(basis.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] = coefficient(basis[j]);
    return out;
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
  }

  int nvars_;
  TermMap terms_;
};

inline std::string var_name(int i, int nvars) {
  static const char* few[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return few[i];
  return "x" + std::to_string(i + 1);
}

inline std::string pretty_rational(const Rational& q) {
  return denom(q) == 1 ? numer(q).str() : to_string(q);
}

inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i, p.nvars());
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += pretty_rational(a);
    } else {
      if (a != 1) out += pretty_rational(a) + "*";
      out += mono;
    }
  }
  return out;
}

// Univariate polynomial with rational coefficients, ascending powers.
// Holds restrictions of spline integrands to rays, and Lagrange interpolants.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // Unique interpolant of degree <= nodes.size()-1 through (nodes[i], values[i]).
  static UniPoly interpolate(const std::vector<Rational>& nodes,
                             const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw PreconditionError("interpolate: size mismatch");
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (nodes[i] == nodes[j]) throw PreconditionError("interpolate: duplicate node");
    QMatrix vand(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational p = 1;
      for (std::size_t j = 0; j < n; ++j) {
        vand.at(i, j) = p;
        p *= nodes[i];
      }
    }
    auto sol = vand.solve(values);
    if (!sol) throw InternalError("interpolate: singular Vandermonde with distinct nodes");
    return UniPoly(std::move(*sol));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational eval(const Rational& t) const {
    Rational out = 0;
    for (std::size_t i = c_.size(); i-- > 0;) out = out * t + c_[i];
    return out;
  }

  Rational integrate(const Rational& t0, const Rational& t1) const {
    Rational out = 0;
    Rational p0 = t0, p1 = t1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out += c_[i] * (p1 - p0) / Rational(static_cast<int>(i) + 1);
      p0 *= t0;
      p1 *= t1;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Restriction t -> p(base + t * dir).
inline UniPoly restrict_to_line(const MultiPoly& p, const QRow& base, const IntRow& dir) {
  const int n = p.nvars();
  if (static_cast<int>(base.size()) != n || static_cast<int>(dir.size()) != n)
    throw PreconditionError("restrict_to_line: dimension mismatch");
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<Rational> acc(1, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    std::vector<Rational> term(1, c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, {base[i], Rational(dir[i])});
    if (term.size() > acc.size()) acc.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
  }
  return UniPoly(std::move(acc));
}

}  // namespace zonotopal
