#include "foxcolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/euler_graph.hpp"
#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/fox_coloring.hpp"
#include "foxcolor/gauss_code.hpp"
#include "foxcolor/json_io.hpp"
#include "foxcolor/kh_verify.hpp"

namespace foxcolor::cli {

namespace {

using json::Json;

// A usage problem detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// CODE arguments may name a file holding the code.
GaussCode load_code(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return parse_gauss_code(slurp(arg));
  return parse_gauss_code(arg);
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, to_decimal(m(r, c)).size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << std::setw(static_cast<int>(width)) << to_decimal(m(r, c));
    }
    out << '\n';
  }
}

template <typename T>
std::string join(const T& items, const char* sep = " ") {
  std::ostringstream ss;
  bool first = true;
  for (const auto& x : items) {
    ss << (first ? "" : sep) << x;
    first = false;
  }
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool as_json = false;
  std::string code, code2, matrix_file;
  bool all_minors = false, canonical = false, enumerate_all = false, brute = false;
  bool check_axioms = false, from_stdin = false, timing = false, require_prime = false;
  std::uint64_t p = 0;
  std::size_t offset = 0, dihedral = 0;
  std::size_t kmin = 2, kmax = 6, samples = 50, threads = 1;
  std::uint64_t seed = 7;
  std::string checks = "all";
};

int cmd_info(const Options& o, std::ostream& out) {
  const GaussCode code = load_code(o.code);
  const DiagramClass d = classify(code);
  if (o.as_json) {
    out << json::to_json(d, code).dump() << '\n';
    return kExitOk;
  }
  out << "code: " << code.str() << "\nk: " << code.k() << "\nalternating: " << yes_no(d.alternating)
      << "\nreduced: " << yes_no(d.reduced) << "\nisolated chords: "
      << (d.isolated_chords.empty() ? "none" : join(d.isolated_chords)) << "\nsummand split: ";
  if (d.summand_split) {
    out << d.summand_split->first.str() << " # " << d.summand_split->second.str() << '\n';
  } else {
    out << "none\n";
  }
  return kExitOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  IntMatrix m;
  BigInt determinant;
  if (!o.matrix_file.empty()) {
    m = json::matrix_from_json(nlohmann::json::parse(slurp(o.matrix_file)));
    if (!m.is_square() || m.rows() == 0) throw UsageError("--matrix needs a nonempty square matrix");
    determinant = minor_gcd(m);
  } else {
    const GaussCode code = load_code(o.code);
    determinant = diagram_determinant(code);
    if (!code.empty()) m = coloring_matrix(code).entries;
  }
  IntMatrix minors(m.rows(), m.cols());
  if (o.all_minors) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) minors(i, j) = minor(m, i, j);
  }
  if (o.as_json) {
    Json j{{"determinant", to_decimal(determinant)}};
    if (o.all_minors) j["minors"] = json::to_json(minors);
    out << j.dump() << '\n';
  } else if (o.all_minors) {
    out << "minors (entry i,j deletes row i and column j):\n";
    print_matrix(out, minors);
    out << "det = " << to_decimal(determinant) << '\n';
  } else {
    out << to_decimal(determinant) << '\n';
  }
  return kExitOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const GaussCode code = load_code(o.code);
  const ColoringMatrix m = o.canonical ? canonical_alternating_labeling(code) : coloring_matrix(code);
  if (o.as_json) {
    out << json::to_json(m).dump() << '\n';
    return kExitOk;
  }
  out << "rows (crossings): " << join(m.row_labels) << '\n';
  std::vector<std::size_t> cols;
  for (ArcId a : m.col_arcs) cols.push_back(a + 1);
  out << "cols (arcs):      " << join(cols) << '\n';
  print_matrix(out, m.entries);
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out) {
  const GaussCode code = load_code(o.code);
  if (o.enumerate_all && o.p > kFullEnumerationPrimeLimit) {
    throw UsageError("--all enumerates only for p <= " + std::to_string(kFullEnumerationPrimeLimit));
  }
  const ColoringSpace space = coloring_space(code, o.p);
  const auto rep = nontrivial_representative(space);
  const std::optional<bool> het = rep ? std::optional<bool>(is_heterogeneous(*rep)) : std::nullopt;
  std::vector<Coloring> all;
  if (o.enumerate_all) all = enumerate_nontrivial(space);
  if (o.as_json) {
    Json j{{"p", o.p},
           {"dimension", space.dimension()},
           {"colorings", space.coloring_count()},
           {"fundamental", has_fundamental_coloring(space)}};
    j["representative"] = rep ? json::to_json(*rep) : Json(nullptr);
    j["heterogeneous"] = het ? Json(*het) : Json(nullptr);
    if (o.enumerate_all) {
      Json list = Json::array();
      for (const Coloring& c : all) {
        Json item = json::to_json(c);
        item["heterogeneous"] = is_heterogeneous(c);
        list.push_back(std::move(item));
      }
      j["nontrivial"] = std::move(list);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "p: " << o.p << "\ndimension: " << space.dimension() << "\ncolorings: "
      << space.coloring_count() << "\nfundamental: " << yes_no(has_fundamental_coloring(space))
      << "\nrepresentative: " << (rep ? join(rep->values) : "none")
      << "\nheterogeneous: " << (het ? yes_no(*het) : "n/a") << '\n';
  for (const Coloring& c : all) {
    out << "  " << join(c.values) << (is_heterogeneous(c) ? "" : "  (not heterogeneous)") << '\n';
  }
  return kExitOk;
}

void print_kh_text(const KHReport& r, std::ostream& out) {
  out << "code: " << r.gauss_code << "\nk: " << r.k << "\nalternating: " << yes_no(r.alternating)
      << "\nreduced: " << yes_no(r.reduced) << "\ndeterminant: " << to_decimal(r.determinant)
      << (r.determinant_prime ? " (prime)" : "") << '\n';
  if (r.coloring_dimension) out << "coloring dimension: " << *r.coloring_dimension << '\n';
  if (r.representative) out << "representative: " << join(r.representative->values) << '\n';
  if (r.heterogeneous) out << "heterogeneous: " << yes_no(*r.heterogeneous) << '\n';
  if (r.adjugate_columns_nonzero) {
    out << "adjugate columns nonzero: " << yes_no(*r.adjugate_columns_nonzero) << '\n';
  }
  if (r.enumerated_nontrivial) out << "enumerated nontrivial: " << *r.enumerated_nontrivial << '\n';
  for (const auto& f : r.premise_failures) out << "premise failure: " << f << '\n';
  for (const auto& f : r.check_failures) out << "CHECK FAILED: " << f << '\n';
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<GaussCode> codes;
  if (o.from_stdin) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      codes.push_back(parse_gauss_code(line));
    }
  } else {
    codes.push_back(load_code(o.code));
  }
  int rc = kExitOk;
  for (const GaussCode& code : codes) {
    const KHReport r = verify_kh(code);
    if (!r.passed()) rc = kExitCheckFailed;
    if (o.as_json) {
      out << json::to_json(r).dump() << '\n';
    } else {
      print_kh_text(r, out);
      if (codes.size() > 1) out << '\n';
    }
  }
  return rc;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const GaussCode code = load_code(o.code);
  const DirectedMultigraph g = build_euler_graph(code);
  const BigInt best = euler_circuit_count_best(g);
  std::optional<BigInt> brute;
  if (o.brute) brute = euler_circuit_count_bruteforce(g);
  const std::set<Label> cut = articulation_vertices(g);
  if (o.as_json) {
    Json j{{"graph", json::to_json(g)}, {"best", to_decimal(best)}};
    j["brute_force"] = brute ? Json(to_decimal(*brute)) : Json(nullptr);
    j["articulation_vertices"] = cut;
    out << j.dump() << '\n';
  } else {
    out << "vertices: " << join(g.vertices) << "\nedges:";
    for (const auto& [t, h] : g.edges) out << ' ' << t << "->" << h;
    out << "\nEuler circuits (BEST): " << to_decimal(best) << '\n';
    if (brute) out << "Euler circuits (brute force): " << to_decimal(*brute) << '\n';
    out << "articulation vertices: " << (cut.empty() ? "none" : join(cut)) << '\n';
  }
  return brute && *brute != best ? kExitCheckFailed : kExitOk;
}

int cmd_mirror(const Options& o, std::ostream& out) {
  const GaussCode m = mirror(load_code(o.code));
  if (o.as_json) {
    out << Json{{"gauss_code", m.str()}}.dump() << '\n';
  } else {
    out << m.str() << '\n';
  }
  return kExitOk;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const GaussCode s = connected_sum(load_code(o.code), load_code(o.code2), o.offset);
  if (o.as_json) {
    out << Json{{"gauss_code", s.str()}, {"k", s.k()}}.dump() << '\n';
  } else {
    out << s.str() << '\n';
  }
  return kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzConfig cfg;
  cfg.k_min = o.kmin;
  cfg.k_max = o.kmax;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  if (const char* env = std::getenv("KH_SEED"); env && *env) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("KH_SEED is not an unsigned integer: ") + env);
    }
  }
  cfg.checks = parse_checks(o.checks);
  cfg.require_prime_det = o.require_prime;
  cfg.threads = o.threads;
  const FuzzReport r = fuzz(cfg);
  if (o.as_json) {
    out << json::to_json(r, o.timing).dump(2) << '\n';
  } else {
    out << "samples: " << r.generated << " generated, " << r.generation_failures.size()
        << " not generated, " << r.prime_determinant << " with prime determinant\n";
    for (const auto& [c, t] : r.tallies) {
      out << "  " << std::left << std::setw(18) << to_string(c) << " passed " << t.passed
          << ", failed " << t.failed << ", n/a " << t.not_applicable << '\n';
    }
    for (const auto& g : r.generation_failures) {
      out << "not generated: k=" << g.k << " sample " << g.sample << ": " << g.detail << '\n';
    }
    for (const auto& f : r.failures) {
      out << "FAILED " << to_string(f.check) << " k=" << f.k << " sample " << f.sample << ": "
          << f.gauss_code << ": " << f.detail << '\n';
    }
    if (o.timing) out << "wall time: " << r.wall_time.count() << " ms\n";
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_quandle(const Options& o, std::ostream& out) {
  const Quandle q = dihedral_quandle(o.dihedral);
  std::vector<AxiomViolation> violations;
  if (o.check_axioms) violations = check_quandle_axioms(q);
  if (o.as_json) {
    Json table = Json::array();
    for (std::size_t a = 0; a < q.order; ++a) {
      table.push_back(std::vector<std::uint32_t>(q.table.begin() + static_cast<std::ptrdiff_t>(a * q.order),
                                                 q.table.begin() + static_cast<std::ptrdiff_t>((a + 1) * q.order)));
    }
    Json j{{"order", q.order}, {"table", table}};
    if (o.check_axioms) {
      Json v = Json::array();
      for (const auto& x : violations) {
        v.push_back(Json{{"axiom", x.axiom}, {"a", x.a}, {"b", x.b}, {"c", x.c}, {"detail", x.detail}});
      }
      j["violations"] = std::move(v);
    }
    out << j.dump() << '\n';
  } else {
    for (std::size_t a = 0; a < q.order; ++a) {
      for (std::size_t b = 0; b < q.order; ++b) {
        out << (b ? " " : "") << std::setw(2) << q.table[a * q.order + b];
      }
      out << '\n';
    }
    if (o.check_axioms) {
      out << (violations.empty() ? "all quandle axioms hold\n" : "");
      for (const auto& x : violations) out << "axiom " << x.axiom << " violated: " << x.detail << '\n';
    }
  }
  return violations.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fox coloring and determinant toolkit for virtual knot Gauss codes", "foxcolor"};
  app.require_subcommand(1);
  Options o;
  const auto json_flag = [&o](CLI::App* sub) { sub->add_flag("--json", o.as_json, "Emit one JSON document"); };

  auto* info = app.add_subcommand("info", "Classify a Gauss code");
  info->add_option("CODE", o.code, "Gauss code or file")->required();
  json_flag(info);

  auto* det_cmd = app.add_subcommand("det", "Diagram determinant (gcd of all minors)");
  auto* det_code = det_cmd->add_option("CODE", o.code, "Gauss code or file");
  auto* det_matrix = det_cmd->add_option("--matrix", o.matrix_file, "JSON array-of-arrays matrix file");
  det_code->excludes(det_matrix);
  det_cmd->add_flag("--all-minors", o.all_minors, "Print every signed (k-1)x(k-1) minor");
  json_flag(det_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Coloring matrix");
  matrix_cmd->add_option("CODE", o.code, "Gauss code or file")->required();
  matrix_cmd->add_flag("--canonical", o.canonical, "Column i is the arc over crossing i");
  json_flag(matrix_cmd);

  auto* color = app.add_subcommand("color", "Fox p-coloring space");
  color->add_option("CODE", o.code, "Gauss code or file")->required();
  color->add_option("-p", o.p, "Prime modulus")->required();
  color->add_flag("--all", o.enumerate_all, "Enumerate every nontrivial coloring (p <= 13)");
  json_flag(color);

  auto* verify = app.add_subcommand("verify", "Check the heterogeneity theorem on one code");
  auto* verify_code = verify->add_option("CODE", o.code, "Gauss code or file");
  auto* verify_stdin = verify->add_flag("--stdin", o.from_stdin, "Read one code per line from stdin");
  verify_code->excludes(verify_stdin);
  json_flag(verify);

  auto* euler = app.add_subcommand("euler", "Euler graph and circuit count");
  euler->add_option("CODE", o.code, "Gauss code or file")->required();
  euler->add_flag("--brute", o.brute, "Also count by exhaustive enumeration");
  json_flag(euler);

  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror image");
  mirror_cmd->add_option("CODE", o.code, "Gauss code or file")->required();
  json_flag(mirror_cmd);

  auto* sum = app.add_subcommand("sum", "Connected sum");
  sum->add_option("CODE1", o.code, "First summand")->required();
  sum->add_option("CODE2", o.code2, "Second summand")->required();
  sum->add_option("--offset", o.offset, "Start the second summand at this cyclic position");
  json_flag(sum);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized verification campaign");
  fuzz_cmd->add_option("--kmin", o.kmin, "Smallest crossing count")->capture_default_str();
  fuzz_cmd->add_option("--kmax", o.kmax, "Largest crossing count")->capture_default_str();
  fuzz_cmd->add_option("--samples", o.samples, "Samples per crossing count")->capture_default_str();
  fuzz_cmd->add_option("--seed", o.seed, "Corpus seed (KH_SEED overrides)")->capture_default_str();
  fuzz_cmd->add_option("--checks", o.checks,
                       "Comma list of kh,lemma22,prop23_lower,euler,adjugate,mirror_transpose or all")
      ->capture_default_str();
  fuzz_cmd->add_flag("--require-prime", o.require_prime, "Redraw samples until the determinant is prime");
  fuzz_cmd->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  fuzz_cmd->add_flag("--timing", o.timing, "Report wall time (breaks byte-identical output)");
  json_flag(fuzz_cmd);

  auto* quandle = app.add_subcommand("quandle", "Dihedral quandle table");
  quandle->add_option("--dihedral", o.dihedral, "Order n")->required()->check(CLI::PositiveNumber);
  quandle->add_flag("--check", o.check_axioms, "Verify the three quandle axioms");
  json_flag(quandle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (det_cmd->parsed()) {
      if (o.matrix_file.empty() && det_code->count() == 0) throw UsageError("det needs CODE or --matrix");
      return cmd_det(o, out);
    }
    if (matrix_cmd->parsed()) return cmd_matrix(o, out);
    if (color->parsed()) return cmd_color(o, out);
    if (verify->parsed()) {
      if (!o.from_stdin && verify_code->count() == 0) throw UsageError("verify needs CODE or --stdin");
      return cmd_verify(o, in, out);
    }
    if (euler->parsed()) return cmd_euler(o, out);
    if (mirror_cmd->parsed()) return cmd_mirror(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (fuzz_cmd->parsed()) return cmd_fuzz(o, out);
    if (quandle->parsed()) return cmd_quandle(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace foxcolor::cli
