// zono: exact invariants of a list of integer vectors — matroid data, graded
// quotient dimensions, differential-equation solution spaces, truncated-power
// values, filtration bookkeeping — as deterministic JSON reports.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zonotopal/json_io.hpp"
#include "zonotopal/verify.hpp"

namespace {

using namespace zonotopal;

Json conventions() {
  return Json{{"indices", "1-based"},
              {"monomial_order", "graded lexicographic, descending within a degree"},
              {"list_order", "input order preserved"},
              {"degrees", "polynomial degree d sits in cohomological degree 2d"},
              {"rationals", "p/q in lowest terms, q > 0"}};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

QRow parse_point(const std::string& text, int dim) {
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) + " comma-separated rationals");
  QRow out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

// Groups of 1-based indices separated by ';'; each group names the subspace
// spanned by those list elements, "-" names the zero subspace.
std::vector<RationalSubspace> parse_subspace_groups(const VectorList& x,
                                                    const std::string& text) {
  std::vector<RationalSubspace> out;
  for (const auto& group : split(text, ';')) {
    if (group.empty()) throw std::invalid_argument("empty subspace group");
    if (group == "-") {
      out.push_back(RationalSubspace{});
      continue;
    }
    IndexSet indices;
    for (const auto& item : split(group, ',')) {
      try {
        indices.push_back(std::stoi(item) - 1);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad index '" + item + "' in subspace group");
      }
      if (indices.back() < 0 || indices.back() >= x.size())
        throw std::invalid_argument("index out of range in subspace group");
    }
    out.push_back(span_subspace(x, indices));
  }
  return out;
}

std::vector<int> parse_signs(const std::string& text, int m) {
  if (static_cast<int>(text.size()) != m)
    throw std::invalid_argument("face string must have one sign per list element");
  std::vector<int> out;
  for (char c : text) {
    if (c == '+')
      out.push_back(+1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw std::invalid_argument("face string may contain only '+' and '-'");
  }
  return out;
}

Json dims_cohomological(const GradedDims& d) {
  Json out = Json::object();
  for (int i = 0; i < static_cast<int>(d.dims.size()); ++i)
    if (d.dims[i] != 0) out[std::to_string(2 * i)] = d.dims[i];
  return out;
}

Json run_matroid(const VectorList& x) {
  Json bases = Json::array();
  for (const auto& b : enumerate_bases(x)) bases.push_back(json_index_set(b));
  Json cocs = Json::array();
  for (const auto& c : cocircuits(x))
    cocs.push_back(Json{{"hyperplane", json_subspace(c.hyperplane)},
                        {"complement", json_index_set(c.complement_indices)}});
  return Json{{"dimension", x.dim},
              {"length", x.size()},
              {"rank", rank(x)},
              {"bases", bases},
              {"num_bases", bases.size()},
              {"cocircuits", cocs}};
}

Json run_tutte(const VectorList& x) {
  const TutteResult t = tutte(x);
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < t.poly.coeff.size(); ++i)
    for (std::size_t j = 0; j < t.poly.coeff[i].size(); ++j)
      if (t.poly.coeff[i][j] != 0)
        coeffs.push_back(Json{{"x", i}, {"y", j}, {"c", t.poly.coeff[i][j]}});
  Json acts = Json::array();
  for (const auto& a : t.activities)
    acts.push_back(Json{{"basis", json_index_set(a.basis)},
                        {"internal", a.internal},
                        {"external", a.external}});
  return Json{{"coefficients", coeffs},
              {"evaluations", Json{{"t_1_1", t.poly.eval(1, 1)}, {"t_2_1", t.poly.eval(2, 1)}}},
              {"activities", acts}};
}

Json run_subspaces(const VectorList& x) {
  Json by_dim = Json::object();
  const auto subspaces = rational_subspaces(x);
  for (int k = 0; k <= x.dim; ++k) {
    Json level = Json::array();
    for (const auto& r : subspaces[k]) level.push_back(json_subspace(r));
    by_dim[std::to_string(k)] = level;
  }
  return Json{{"by_dimension", by_dim}};
}

Json run_chambers(const VectorList& x) {
  Json faces = Json::array();
  for (const auto& f : chambers(x)) faces.push_back(json_face(f));
  return Json{{"count", faces.size()}, {"chambers", faces}};
}

IdealSpec parse_ideal_spec(const VectorList& x, const std::string& text) {
  if (text == "full") return IdealSpec::cocircuit_full();
  if (text.rfind("level=", 0) == 0) {
    try {
      return IdealSpec::level(std::stoi(text.substr(6)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level in --ideal");
    }
  }
  if (text.rfind("subspaces=", 0) == 0)
    return IdealSpec::subspace_set(parse_subspace_groups(x, text.substr(10)));
  throw std::invalid_argument("--ideal must be 'full', 'level=k' or 'subspaces=<groups>'");
}

Json run_hilbert(const VectorList& x, const std::string& ideal, int max_degree) {
  const IdealSpec spec = parse_ideal_spec(x, ideal);
  if (max_degree < 0) max_degree = default_max_degree(x);
  const GradedDims dims = hilbert(x, spec, max_degree);
  Json gens = Json::array();
  for (const auto& g : generators(x, spec)) gens.push_back(json_poly(g));
  Json out{{"ideal", ideal},
           {"max_degree", max_degree},
           {"generators", gens},
           {"dims", dims.dims},
           {"dims_cohomological", dims_cohomological(dims)},
           {"truncated", dims.truncated}};
  if (!dims.truncated) out["total"] = dims.total();
  return out;
}

Json run_betti(const VectorList& x, const std::string& stratum, int max_degree) {
  if (max_degree < 0) max_degree = default_max_degree(x);
  std::vector<RationalSubspace> q;
  if (stratum.rfind("geq=", 0) == 0) {
    int k = -1;
    try {
      k = std::stoi(stratum.substr(4));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level in --stratum");
    }
    if (k < 0 || k > x.dim) throw std::invalid_argument("--stratum geq=k needs 0 <= k <= s");
    if (k >= 1) {
      const auto subspaces = rational_subspaces(x);
      q = subspaces[k - 1];
    }
  } else if (stratum.rfind("open=", 0) == 0) {
    q = parse_subspace_groups(x, stratum.substr(5));
  } else {
    throw std::invalid_argument("--stratum must be 'geq=k' or 'open=<groups>'");
  }
  const BettiTable betti = betti_open_stratum(x, q, max_degree);
  Json removed = Json::array();
  for (const auto& r : q) removed.push_back(json_subspace(r));
  return Json{{"stratum", stratum},
              {"removed_subspaces", removed},
              {"betti", json_betti(betti)}};
}

Json run_dspace(const VectorList& x, bool with_basis) {
  const DSpaceBasis basis = dspace_basis(x);
  const GradedDims dims = basis.dims();
  Json out{{"dims", dims.dims},
           {"dims_cohomological", dims_cohomological(dims)},
           {"total", basis.total()},
           {"top_degree", x.size() - x.dim}};
  if (with_basis) {
    Json layers = Json::object();
    for (int d = 0; d < static_cast<int>(basis.by_degree.size()); ++d) {
      Json layer = Json::array();
      for (const auto& f : basis.by_degree[d]) layer.push_back(json_poly(f));
      layers[std::to_string(d)] = layer;
    }
    out["basis"] = layers;
  }
  return out;
}

Json run_gdims(const VectorList& x) { return json_filtration(filtration_report(x)); }

Json run_csbetti(const VectorList& x, int stratum, int max_degree) {
  if (stratum < 0 || stratum == x.dim) {
    const CompactSupportTable t = max_degree < 0
                                      ? compact_support_betti_fin(x)
                                      : compact_support_betti_fin(x, max_degree);
    return json_cs_table(t);
  }
  if (max_degree < 0) max_degree = 2 * x.size();
  return json_cs_table(stratum_betti_series(x, stratum, max_degree));
}

Json run_spline_eval(const VectorList& x, const std::string& point, const std::string& face) {
  const QRow p = parse_point(point, x.dim);
  Json out{{"point", json_point(p)}};
  if (face.empty()) {
    out["value"] = json_rational(eval_T(x, p));
  } else {
    const RegularFace f = face_from_signs(x, parse_signs(face, x.size()));
    out["face"] = json_face(f);
    out["value"] = json_rational(eval_TF(x, f, p));
  }
  return out;
}

Json run_spline_piece(const VectorList& x, const std::string& witness) {
  const QRow w = parse_point(witness, x.dim);
  const SplinePiece piece = local_piece(x, w);
  return Json{{"witness", json_point(w)},
              {"degree", x.size() - x.dim},
              {"polynomial", json_poly(piece.polynomial)}};
}

Json run_verify(const VectorList& x, const std::string& suite, bool* all_pass) {
  std::vector<CheckResult> checks;
  if (suite == "lamain")
    checks = verify_lamain_suite(x);
  else if (suite == "duality")
    checks = verify_duality_suite(x);
  else if (suite == "exactseq")
    checks = verify_exactseq_suite(x);
  else if (suite == "tutte")
    checks = verify_tutte_suite(x);
  else if (suite == "spline")
    checks = verify_spline_suite(x);
  else if (suite == "all")
    checks = verify_all(x);
  else
    throw std::invalid_argument("--suite must be lamain|duality|exactseq|tutte|spline|all");
  Json list = Json::array();
  bool pass = true;
  for (const auto& c : checks) {
    list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    pass = pass && c.pass;
  }
  if (all_pass) *all_pass = pass;
  return Json{{"suite", suite}, {"checks", list}, {"all_pass", pass}};
}

// Replays a command from its echoed name and options; shared by the live CLI
// path and the golden-corpus runner so both produce identical reports.
Json run_command(const InputSpec& input, const std::string& command, const Json& options,
                 bool* verify_pass = nullptr) {
  const VectorList x = input.list();
  Json result;
  if (command == "matroid")
    result = run_matroid(x);
  else if (command == "tutte")
    result = run_tutte(x);
  else if (command == "subspaces")
    result = run_subspaces(x);
  else if (command == "chambers")
    result = run_chambers(x);
  else if (command == "hilbert")
    result = run_hilbert(x, options.value("ideal", "full"), options.value("max_degree", -1));
  else if (command == "betti")
    result = run_betti(x, options.at("stratum").get<std::string>(),
                       options.value("max_degree", -1));
  else if (command == "dspace")
    result = run_dspace(x, options.value("basis", false));
  else if (command == "gdims")
    result = run_gdims(x);
  else if (command == "csbetti")
    result = run_csbetti(x, options.value("stratum", -1), options.value("max_degree", -1));
  else if (command == "spline eval")
    result = run_spline_eval(x, options.at("point").get<std::string>(),
                             options.value("face", ""));
  else if (command == "spline piece")
    result = run_spline_piece(x, options.at("witness").get<std::string>());
  else if (command == "verify")
    result = run_verify(x, options.value("suite", "all"), verify_pass);
  else
    throw std::invalid_argument("unknown command '" + command + "'");

  return Json{{"command", command},
              {"options", options},
              {"input", input.to_json()},
              {"conventions", conventions()},
              {"result", result}};
}

InputSpec read_input(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
      j = Json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_input(j);
}

int run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::invalid_argument("corpus directory has no .json cases");

  Json cases = Json::array();
  bool all_pass = true;
  for (const auto& file : files) {
    std::ifstream in(file);
    Json c;
    try {
      c = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("corpus case " + file.filename().string() +
                                  " is not valid JSON: " + e.what());
    }
    const std::string name = c.value("name", file.filename().string());
    const InputSpec input = parse_input(c.at("input"));
    const Json report = run_command(input, c.at("command").get<std::string>(),
                                    c.value("options", Json::object()));
    const bool pass = report == c.at("expected");
    all_pass = all_pass && pass;
    cases.push_back(Json{{"name", name}, {"pass", pass}});
  }
  const Json summary{{"command", "seed-corpus"},
                     {"cases", cases},
                     {"all_pass", all_pass}};
  std::cout << summary.dump(2) << "\n";
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of a list of integer vectors"};
  app.require_subcommand(0, 1);

  std::string input_path = "-";
  std::string corpus_dir;
  app.add_option("--input", input_path, "input JSON file ('-' for stdin)");
  app.add_option("--seed-corpus", corpus_dir, "run the golden-file suite from a directory");

  std::string ideal = "full", stratum_str, point, face, witness, suite = "all";
  int max_degree = -1, cs_stratum = -1;
  bool with_basis = false;

  CLI::App* matroid = app.add_subcommand("matroid", "bases, rank and cocircuits");
  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial with activities");
  CLI::App* subspaces_cmd = app.add_subcommand("subspaces", "rational subspaces by dimension");
  CLI::App* chambers_cmd = app.add_subcommand("chambers", "sign chambers of the dual arrangement");

  CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a quotient");
  hilbert_cmd->add_option("--ideal", ideal, "full | level=k | subspaces=<groups>");
  hilbert_cmd->add_option("--max-degree", max_degree, "degree bound (default: list length)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* betti_cmd = app.add_subcommand("betti", "graded Betti table of an open stratum");
  betti_cmd->add_option("--stratum", stratum_str, "geq=k | open=<groups>")->required();
  betti_cmd->add_option("--max-degree", max_degree, "degree bound (default: list length)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* dspace_cmd = app.add_subcommand("dspace", "solution space of the cocircuit system");
  dspace_cmd->add_flag("--basis", with_basis, "include the homogeneous basis");

  CLI::App* gdims_cmd = app.add_subcommand("gdims", "filtration dimension report");

  CLI::App* csbetti_cmd =
      app.add_subcommand("csbetti", "compact-support graded table of a stratum");
  csbetti_cmd->add_option("--stratum", cs_stratum, "stratum level (default: s)")
      ->check(CLI::NonNegativeNumber);
  csbetti_cmd->add_option("--max-degree", max_degree, "degree bound")
      ->check(CLI::NonNegativeNumber);

  CLI::App* spline_cmd = app.add_subcommand("spline", "truncated-power evaluation");
  spline_cmd->require_subcommand(1);
  CLI::App* spline_eval = spline_cmd->add_subcommand("eval", "value at a rational point");
  spline_eval->add_option("--point", point, "comma-separated rationals")->required();
  spline_eval->add_option("--face", face, "sign string selecting a face variant");
  CLI::App* spline_piece = spline_cmd->add_subcommand("piece", "chamber polynomial");
  spline_piece->add_option("--witness", witness, "comma-separated rationals")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "lamain|duality|exactseq|tutte|spline|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!corpus_dir.empty()) return run_corpus(corpus_dir);
    if (app.get_subcommands().empty()) {
      std::cerr << "error: no command given (see --help)\n";
      return 2;
    }

    std::string command;
    Json options = Json::object();
    if (matroid->parsed()) command = "matroid";
    if (tutte_cmd->parsed()) command = "tutte";
    if (subspaces_cmd->parsed()) command = "subspaces";
    if (chambers_cmd->parsed()) command = "chambers";
    if (hilbert_cmd->parsed()) {
      command = "hilbert";
      options["ideal"] = ideal;
      if (max_degree >= 0) options["max_degree"] = max_degree;
    }
    if (betti_cmd->parsed()) {
      command = "betti";
      options["stratum"] = stratum_str;
      if (max_degree >= 0) options["max_degree"] = max_degree;
    }
    if (dspace_cmd->parsed()) {
      command = "dspace";
      if (with_basis) options["basis"] = true;
    }
    if (gdims_cmd->parsed()) command = "gdims";
    if (csbetti_cmd->parsed()) {
      command = "csbetti";
      if (cs_stratum >= 0) options["stratum"] = cs_stratum;
      if (max_degree >= 0) options["max_degree"] = max_degree;
    }
    if (spline_cmd->parsed()) {
      if (spline_eval->parsed()) {
        command = "spline eval";
        options["point"] = point;
        if (!face.empty()) options["face"] = face;
      } else {
        command = "spline piece";
        options["witness"] = witness;
      }
    }
    if (verify_cmd->parsed()) {
      command = "verify";
      options["suite"] = suite;
    }

    const InputSpec input = read_input(input_path);
    const auto start = std::chrono::steady_clock::now();
    bool verify_pass = true;
    const Json report = run_command(input, command, options, &verify_pass);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << report.dump(2) << "\n";
    // Timing goes to the diagnostic stream: reports are byte-identical across
    // runs by contract.
    std::cerr << "timing_ms=" << elapsed << "\n";
    if (command == "verify" && !verify_pass) return 4;
    return 0;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
}
