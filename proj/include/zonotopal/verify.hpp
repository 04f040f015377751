#pragma once

#include <string>
#include <vector>

#include "zonotopal/gspaces.hpp"
#include "zonotopal/splines.hpp"

namespace zonotopal {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string dims_to_string(const GradedDims& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.dims.size(); ++i)
    out += (i ? "," : "") + std::to_string(d.dims[i]);
  out += d.truncated ? ",...)" : ")";
  return out;
}

inline long long brute_independent_count(const VectorList& x) {
  return count_independent_sublists_with_min_rank(x, 0);
}

// Rank of the span of a family of degree-d homogeneous polynomials.
inline std::size_t span_rank(int nvars, const std::vector<MultiPoly>& polys, int degree) {
  const std::vector<Exponents> mons = monomials_of_degree(nvars, degree);
  std::vector<QRow> rows;
  for (const auto& p : polys) rows.push_back(p.coefficient_row(mons));
  if (rows.empty()) return 0;
  return QMatrix::from_rows(std::move(rows)).rank();
}

}  // namespace detail

// --- Tutte / Hilbert statistics -------------------------------------------

inline std::vector<CheckResult> verify_tutte_suite(const VectorList& x) {
  std::vector<CheckResult> out;
  const TutteResult t = tutte(x);
  const long long bases = static_cast<long long>(enumerate_bases(x).size());

  out.push_back({"tutte(1,1) equals basis count", t.poly.eval(1, 1) == bases,
                 std::to_string(t.poly.eval(1, 1)) + " vs " + std::to_string(bases)});

  const long long independent = detail::brute_independent_count(x);
  out.push_back({"tutte(2,1) equals independent-sublist count",
                 t.poly.eval(2, 1) == independent,
                 std::to_string(t.poly.eval(2, 1)) + " vs " + std::to_string(independent)});

  // Per-subspace basis counts refine the independent count.
  {
    long long sum = 0;
    const auto subspaces = rational_subspaces(x);
    for (int k = 0; k <= x.dim; ++k)
      for (const auto& r : subspaces[k]) sum += restricted_d_dimension(x, r);
    out.push_back({"sum of per-subspace basis counts equals tutte(2,1)",
                   sum == t.poly.eval(2, 1),
                   std::to_string(sum) + " vs " + std::to_string(t.poly.eval(2, 1))});
  }

  // Hilbert function of S/I_X against the external-activity statistic, with
  // the degree map d = m - s - e(B).
  {
    const GradedDims h = hilbert(x, IdealSpec::cocircuit_full());
    const int top = x.size() - x.dim;
    std::vector<long long> activity(top + 1, 0);
    bool in_range = true;
    for (const auto& a : t.activities) {
      const int d = top - a.external;
      if (d < 0 || d > top) {
        in_range = false;
        break;
      }
      ++activity[d];
    }
    GradedDims act;
    act.dims = activity;
    out.push_back({"Hilbert function equals external-activity statistic",
                   in_range && !h.truncated && h.same_dims(act),
                   detail::dims_to_string(h) + " vs " + detail::dims_to_string(act)});
    out.push_back({"Hilbert total equals basis count",
                   !h.truncated && h.total() == bases,
                   std::to_string(h.truncated ? -1 : h.total()) + " vs " + std::to_string(bases)});
  }
  return out;
}

// --- Graded duality between the quotient and the solution space ------------

inline std::vector<CheckResult> verify_duality_suite(const VectorList& x) {
  std::vector<CheckResult> out;
  const GradedDims h = hilbert(x, IdealSpec::cocircuit_full());
  const DSpaceBasis basis = dspace_basis(x);
  GradedDims d = basis.dims();
  d.dims.resize(h.dims.size(), 0);
  out.push_back({"solution-space dims equal Hilbert function degreewise",
                 !h.truncated && h.same_dims(d),
                 detail::dims_to_string(basis.dims()) + " vs " + detail::dims_to_string(h)});

  bool nonsingular = true;
  std::string which;
  for (int deg = 0; deg <= x.size() - x.dim; ++deg) {
    if (!is_square_nonsingular(duality_pairing_matrix(x, deg))) {
      nonsingular = false;
      which += (which.empty() ? "" : ",") + std::to_string(deg);
    }
  }
  out.push_back({"duality pairing nonsingular in every degree", nonsingular,
                 nonsingular ? "all degrees" : "singular at degree " + which});

  bool annihilated = true;
  for (int k = 0; k <= x.dim; ++k)
    if (!annihilator_check(x, k)) annihilated = false;
  out.push_back({"operators of small-subspace complements annihilate the solution space",
                 annihilated, ""});

  // d_a maps the solution space of X onto that of X\a, degree by degree.
  {
    bool onto = true;
    std::string failures;
    for (int a = 0; a < x.size(); ++a) {
      const VectorList reduced = x.remove(a);
      if (!spans(reduced)) continue;
      const DSpaceBasis rbasis = dspace_basis(reduced);
      for (int deg = 0; deg + 1 < static_cast<int>(basis.by_degree.size()); ++deg) {
        std::vector<MultiPoly> images;
        for (const auto& f : basis.by_degree[deg + 1])
          images.push_back(directional_derivative(f, x.vectors[a]));
        const std::size_t target =
            deg < static_cast<int>(rbasis.by_degree.size()) ? rbasis.by_degree[deg].size() : 0;
        std::vector<MultiPoly> stacked = images;
        if (deg < static_cast<int>(rbasis.by_degree.size()))
          stacked.insert(stacked.end(), rbasis.by_degree[deg].begin(),
                         rbasis.by_degree[deg].end());
        const bool ok = detail::span_rank(x.dim, images, deg) == target &&
                        detail::span_rank(x.dim, stacked, deg) == target;
        if (!ok) {
          onto = false;
          failures += " a=" + std::to_string(a + 1) + ",deg=" + std::to_string(deg);
        }
      }
    }
    out.push_back({"directional derivative maps solution space onto deleted one", onto,
                   failures.empty() ? "" : failures});
  }
  return out;
}

// --- Intersection formula for admissible families ---------------------------

// All downward-closed nonempty families when the subspace poset is small,
// otherwise a deterministic sample (downward closures of singletons, the
// level sets, and everything).
inline std::vector<std::vector<RationalSubspace>> admissible_families(const VectorList& x,
                                                                      std::size_t limit = 12) {
  const auto by_dim = rational_subspaces(x);
  std::vector<RationalSubspace> flat;
  for (const auto& level : by_dim)
    for (const auto& r : level) flat.push_back(r);
  const std::size_t n = flat.size();

  std::vector<std::vector<RationalSubspace>> out;
  if (n <= limit) {
    std::vector<unsigned> required(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && flat[j].dimension < flat[i].dimension &&
            subspace_contains(flat[i], flat[j]))
          required[i] |= 1u << j;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        if ((mask & (1u << i)) && (required[i] & mask) != required[i]) ok = false;
      if (!ok) continue;
      std::vector<RationalSubspace> q;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) q.push_back(flat[i]);
      out.push_back(std::move(q));
    }
    return out;
  }

  auto push_unique = [&out](std::vector<RationalSubspace> q) {
    for (const auto& existing : out)
      if (existing == q) return;
    out.push_back(std::move(q));
  };
  for (const auto& r : flat) push_unique(downward_closure(x, {r}));
  for (int k = 0; k <= x.dim; ++k) {
    std::vector<RationalSubspace> q;
    for (int j = 0; j <= k; ++j) q.insert(q.end(), by_dim[j].begin(), by_dim[j].end());
    if (!q.empty()) push_unique(std::move(q));
  }
  return out;
}

inline std::vector<CheckResult> verify_lamain_suite(const VectorList& x) {
  std::vector<CheckResult> out;
  const int max_degree = default_max_degree(x);
  long long cases = 0, failures = 0;
  std::string detail;
  for (const auto& q : admissible_families(x)) {
    int max_dim = 0;
    for (const auto& r : q) max_dim = std::max(max_dim, r.dimension);
    for (const auto& r : q) {
      if (r.dimension != max_dim) continue;
      ++cases;
      const LamainReport report = verify_lamain(x, q, r, max_degree);
      if (!report.holds) {
        ++failures;
        if (detail.size() < 200)
          detail += " |Q|=" + std::to_string(q.size()) + " dim=" + std::to_string(r.dimension);
      }
    }
  }
  out.push_back({"intersection formula holds for admissible families", failures == 0,
                 std::to_string(cases) + " cases" + (failures ? ", failing:" + detail : "")});
  return out;
}

// --- Filtration and compact-support gradings --------------------------------

inline std::vector<CheckResult> verify_exactseq_suite(const VectorList& x) {
  std::vector<CheckResult> out;
  const FiltrationReport report = filtration_report(x);
  const TutteResult t = tutte(x);

  bool exact = true;
  for (int i = 0; i < x.dim; ++i)
    if (!exact_sequence_check(x, i)) exact = false;
  out.push_back({"filtration sequence dimensions exact at every level", exact, ""});

  out.push_back({"filtration total equals tutte(2,1)", report.total == t.poly.eval(2, 1),
                 std::to_string(report.total) + " vs " + std::to_string(t.poly.eval(2, 1))});

  bool two_way = true;
  for (int i = 0; i <= x.dim; ++i)
    if (count_independent_sublists_with_min_rank(x, i) != report.levels[i].dim_g) two_way = false;
  out.push_back({"filtration dims match independent-sublist counts at every level", two_way, ""});

  out.push_back(
      {"top filtration level is the basis count",
       report.levels[x.dim].dim_g == static_cast<long long>(enumerate_bases(x).size()), ""});

  {
    const CompactSupportTable cs = compact_support_betti_fin(x);
    const int m = x.size(), s = x.dim;
    bool support_ok = true;
    long long total = 0;
    for (const auto& [h, dim] : cs.entries) {
      if (h % 2 != 0 || h < 2 * m || h > 4 * m - 2 * s) support_ok = false;
      total += dim;
    }
    out.push_back({"compact-support table supported on even degrees in [2m, 4m-2s]", support_ok,
                   ""});
    out.push_back({"compact-support total equals basis count",
                   total == static_cast<long long>(enumerate_bases(x).size()), ""});

    const CompactSupportTable series = stratum_betti_series(x, x.dim, 4 * m);
    bool regraded = true;
    for (const auto& [h, dim] : cs.entries) {
      const int doubled = cs.grading_offset - h;
      auto it = series.entries.find(doubled);
      if (it == series.entries.end() || it->second != dim) regraded = false;
    }
    long long series_total = 0;
    for (const auto& [deg, dim] : series.entries) series_total += dim;
    out.push_back({"finite-stratum series matches compact-support table up to the offset",
                   regraded && series_total == total, ""});
  }
  return out;
}

// --- Spline identities -------------------------------------------------------

inline std::vector<CheckResult> verify_spline_suite(const VectorList& x) {
  std::vector<CheckResult> out;
  VectorList list = x;
  std::string note;
  if (!acute_witness(x)) {
    // Pointwise values of the unflipped list are undefined; run the suite on
    // the face variant attached to the first chamber.
    const RegularFace face = chambers(x).front();
    list = flip_negative_part(x, face);
    note = " (via face " + signs_string(face.signs) + ")";
  }
  const SplineEvaluator eval = make_evaluator(list);
  const std::vector<QRow> probes = chamber_probe_points(list);
  const int degree = list.size() - list.dim;

  // Deletions whose remainder still spans; the X-side piece is computed once
  // per chamber and shared across them.
  std::vector<int> applicable;
  std::vector<VectorList> reduced;
  std::vector<SplineEvaluator> reduced_eval;
  for (int a = 0; a < list.size(); ++a) {
    VectorList rest = list.remove(a);
    if (!spans(rest)) continue;
    applicable.push_back(a);
    reduced_eval.emplace_back(rest, eval.witness());
    reduced.push_back(std::move(rest));
  }

  bool holdout_ok = true, homogeneous = true, support_ok = true, shifted = true;
  bool deletion = true;
  for (const QRow& w : probes) {
    SplinePiece piece{w, MultiPoly(list.dim)};
    try {
      piece = local_piece_with(eval, list, w);
    } catch (const InternalError&) {
      holdout_ok = false;
      continue;
    }
    for (const Rational& lambda : {Rational(2), Rational(1, 3)}) {
      QRow scaled = w;
      for (auto& v : scaled) v *= lambda;
      Rational expect = eval.eval(w);
      for (int k = 0; k < degree; ++k) expect *= lambda;
      if (eval.eval(scaled) != expect) homogeneous = false;
    }
    if (dot(eval.witness(), w) < 0 && eval.eval(w) != 0) support_ok = false;
    if (list.size() > list.dim) {
      if (!product_operator(piece.polynomial, list.vectors).is_zero()) shifted = false;
      for (const auto& c : cocircuits(list))
        if (static_cast<int>(c.complement_indices.size()) > degree &&
            !product_operator(piece.polynomial, list.select(c.complement_indices)).is_zero())
          shifted = false;
    }
    for (std::size_t j = 0; j < applicable.size(); ++j) {
      const MultiPoly derived =
          directional_derivative(piece.polynomial, list.vectors[applicable[j]]);
      if (!(derived == local_piece_with(reduced_eval[j], reduced[j], w).polynomial))
        deletion = false;
    }
  }
  out.push_back({"local pieces pass holdout validation on every chamber" + note, holdout_ok,
                 std::to_string(probes.size()) + " chambers"});
  out.push_back({"evaluation homogeneous of degree m-s" + note, homogeneous, ""});
  out.push_back({"evaluation vanishes outside the support half-space" + note, support_ok, ""});
  out.push_back({"cocircuit operators kill local pieces" + note, shifted, ""});
  out.push_back({"derivative along a list element deletes it" + note, deletion,
                 std::to_string(applicable.size()) + " applicable deletions"});
  return out;
}

inline std::vector<CheckResult> verify_all(const VectorList& x) {
  std::vector<CheckResult> out;
  for (auto* suite : {&verify_tutte_suite, &verify_duality_suite, &verify_lamain_suite,
                      &verify_exactseq_suite, &verify_spline_suite}) {
    const auto results = (*suite)(x);
    out.insert(out.end(), results.begin(), results.end());
  }
  return out;
}

}  // namespace zonotopal
