#include "foxcolor/json_io.hpp"

#include "foxcolor/error.hpp"

namespace foxcolor::json {

Json integer(const BigInt& v) {
  static const BigInt kLimit = BigInt(1) << 53;
  if (v < kLimit && v > -kLimit) return static_cast<long long>(v);
  return to_decimal(v);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ColoringMatrix& m) {
  Json cols = Json::array();
  for (ArcId a : m.col_arcs) cols.push_back(a + 1);
  return Json{{"rows", m.row_labels}, {"cols", cols}, {"entries", to_json(m.entries)}};
}

Json to_json(const Coloring& c) { return Json{{"p", c.n}, {"arcs", c.values}}; }

Json to_json(const DirectedMultigraph& g) {
  Json edges = Json::array();
  for (const auto& [tail, head] : g.edges) edges.push_back(Json::array({tail, head}));
  return Json{{"vertices", g.vertices}, {"edges", edges}};
}

Json to_json(const DiagramClass& d, const GaussCode& code) {
  Json out{{"gauss_code", code.str()},
           {"k", code.k()},
           {"alternating", d.alternating},
           {"reduced", d.reduced},
           {"isolated_chords", d.isolated_chords}};
  if (d.summand_split) {
    out["summand_split"] = Json::array({d.summand_split->first.str(), d.summand_split->second.str()});
  } else {
    out["summand_split"] = nullptr;
  }
  return out;
}

Json to_json(const KHReport& r) {
  Json out{{"gauss_code", r.gauss_code},
           {"k", r.k},
           {"alternating", r.alternating},
           {"reduced", r.reduced},
           {"determinant", to_decimal(r.determinant)},
           {"determinant_prime", r.determinant_prime}};
  out["coloring_dimension"] = r.coloring_dimension ? Json(*r.coloring_dimension) : Json(nullptr);
  out["representative"] = r.representative ? to_json(*r.representative) : Json(nullptr);
  out["heterogeneous"] = r.heterogeneous ? Json(*r.heterogeneous) : Json(nullptr);
  out["adjugate_columns_nonzero"] =
      r.adjugate_columns_nonzero ? Json(*r.adjugate_columns_nonzero) : Json(nullptr);
  out["enumerated_nontrivial"] =
      r.enumerated_nontrivial ? Json(*r.enumerated_nontrivial) : Json(nullptr);
  out["premise_failures"] = r.premise_failures;
  out["check_failures"] = r.check_failures;
  return out;
}

Json to_json(const Lemma22Report& r) {
  return Json{{"cofactors_equal", r.cofactors_equal},
              {"common_cofactor", to_decimal(r.common_cofactor)},
              {"det_plus_ones", to_decimal(r.det_plus_ones)},
              {"identity_holds", r.identity_holds},
              {"matches_determinant", r.matches_determinant},
              {"fast_path_agrees", r.fast_path_agrees},
              {"violations", r.violations}};
}

Json to_json(const FuzzReport& r, bool include_timing) {
  Json checks = Json::array();
  for (Check c : r.config.checks) checks.push_back(to_string(c));
  Json config{{"k_min", r.config.k_min},
              {"k_max", r.config.k_max},
              {"samples", r.config.samples},
              {"seed", r.config.seed},
              {"require_prime_det", r.config.require_prime_det},
              {"checks", checks}};
  Json tallies = Json::object();
  for (const auto& [c, t] : r.tallies) {
    tallies[std::string(to_string(c))] =
        Json{{"passed", t.passed}, {"failed", t.failed}, {"not_applicable", t.not_applicable}};
  }
  Json failures = Json::array();
  for (const FuzzFailure& f : r.failures) {
    failures.push_back(Json{{"k", f.k},
                            {"sample", f.sample},
                            {"gauss_code", f.gauss_code},
                            {"check", to_string(f.check)},
                            {"detail", f.detail}});
  }
  Json gen = Json::array();
  for (const GenerationFailure& g : r.generation_failures) {
    gen.push_back(Json{{"k", g.k}, {"sample", g.sample}, {"detail", g.detail}});
  }
  Json out{{"config", config},
           {"generated", r.generated},
           {"prime_determinant", r.prime_determinant},
           {"checks", tallies},
           {"failures", failures},
           {"generation_failures", gen},
           {"passed", r.passed()}};
  if (include_timing) out["wall_time_ms"] = r.wall_time.count();
  return out;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidConfig, "matrix must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidConfig, "matrix row must be an array");
    std::vector<BigInt> values;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        values.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        try {
          values.emplace_back(v.get<std::string>());
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidConfig, "bad integer string " + v.dump());
        }
      } else {
        throw Error(ErrorKind::InvalidConfig, "matrix entry " + v.dump() + " is not an integer");
      }
    }
    rows.push_back(std::move(values));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace foxcolor::json
