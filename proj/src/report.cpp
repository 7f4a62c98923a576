// SPDX-License-Identifier: Apache-2.0

#include "gradalg/report.hpp"

#include <numeric>

#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/grading_solver.hpp"
#include "gradalg/oracle.hpp"
#include "gradalg/parser.hpp"
#include "report_schema.hpp"
#include "gradalg/signature.hpp"

namespace gradalg::report {

namespace {

const char* const kGeneratorCaveat =
    "grading non-existence proven only for generator-homogeneous gradings: only weight vectors "
    "making every given generator homogeneous are searched";

Json presentation_json(const PresentedAlgebra& alg) {
  Json rels = Json::array();
  for (const auto& r : alg.relations()) rels.push_back(r.to_string());
  return Json{{"field", alg.field().name()},
              {"vars", alg.ring()->vars()},
              {"weights", alg.weights() ? Json(*alg.weights()) : Json(nullptr)},
              {"relations", rels}};
}

Json action_json(std::span<const std::int64_t> w) {
  const ActionClass a = classify_action(w);
  return Json{{"weights", std::vector<std::int64_t>(w.begin(), w.end())},
              {"kind", to_string(a.kind)},
              {"effective", a.effective},
              {"good", a.good},
              {"gcd", gcd_of_weights(w)}};
}

Json scalars_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json base_report(const std::string& command, Json input) {
  return Json{{"command", command}, {"input", std::move(input)}};
}

Json finish(Json report, std::vector<std::string> caveats) {
  report["caveats"] = std::move(caveats);
  validate(report);
  return report;
}

// ---------------------------------------------------------------------------
// Minimal JSON Schema checker: type, enum, required, properties,
// additionalProperties, items, minimum, oneOf, and local $ref.

const nlohmann::json& schema_root() {
  static const nlohmann::json root = nlohmann::json::parse(detail::kReportSchema);
  return root;
}

bool type_matches(const Json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

std::string check(const Json& v, const nlohmann::json& schema, const std::string& path) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
    return check(v, schema_root()["definitions"][ref.substr(prefix.size())], path);
  }
  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const auto& alt : schema["oneOf"]) matches += check(v, alt, path).empty() ? 1 : 0;
    if (matches != 1) return path + ": matches " + std::to_string(matches) + " oneOf branches";
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(v, t);
    } else {
      ok = type_matches(v, schema["type"]);
    }
    if (!ok) return path + ": expected type " + schema["type"].dump() + ", got " + v.dump();
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || Json(e) == v;
    if (!ok) return path + ": value " + v.dump() + " not in enum";
  }
  if (schema.contains("minimum") && v.is_number_integer() &&
      v.get<std::int64_t>() < schema["minimum"].get<std::int64_t>()) {
    return path + ": below minimum";
  }
  if (v.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!v.contains(key.get<std::string>())) return path + ": missing key " + key.dump();
      }
    }
    for (const auto& [key, value] : v.items()) {
      const std::string sub = path + "." + key;
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (auto err = check(value, schema["properties"][key], sub); !err.empty()) return err;
      } else if (schema.contains("additionalProperties")) {
        const auto& extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) return sub + ": unexpected key";
        } else if (auto err = check(value, extra, sub); !err.empty()) {
          return err;
        }
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (auto err = check(v[k], schema["items"], path + "[" + std::to_string(k) + "]");
          !err.empty()) {
        return err;
      }
    }
  }
  return {};
}

}  // namespace

std::string schema_violation(const Json& report) { return check(report, schema_root(), "$"); }

void validate(const Json& report) {
  if (auto err = schema_violation(report); !err.empty()) {
    throw InvariantError("report violates schema: " + err);
  }
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

Json grading(const PresentedAlgebra& alg) {
  const HomogeneitySystem sys = homogeneity_system(alg);
  const GradingCone cone = solve_grading_cone(sys);
  Json equations = Json::array();
  for (const auto& eq : sys.equations) equations.push_back(format_equation(sys, eq));
  Json basis = Json::array();
  for (const auto& v : cone.basis) basis.push_back(scalars_json(v));

  Json g{{"equations", equations},
         {"dimension", cone.dimension},
         {"basis", basis},
         {"has_positive", cone.has_positive},
         {"sample_positive", nullptr},
         {"sample_action", nullptr},
         {"certificate", nullptr},
         {"input_weights", nullptr}};
  if (cone.sample_positive) {
    g["sample_positive"] = *cone.sample_positive;
    g["sample_action"] = action_json(*cone.sample_positive);
  }
  if (cone.certificate) {
    const auto& cert = *cone.certificate;
    std::string identity;
    for (std::size_t i = 0; i < cert.lambda.size(); ++i) {
      if (cert.lambda[i].is_zero()) continue;
      if (!identity.empty()) identity += " + ";
      if (!cert.lambda[i].is_one()) identity += cert.lambda[i].to_string() + "*";
      identity += "w_" + sys.var_names[i];
    }
    identity += " = 0 on every grading";
    g["certificate"] = Json{{"lambda", scalars_json(cert.lambda)},
                            {"equation_multipliers", scalars_json(cert.y)},
                            {"forced_variable", sys.var_names[cert.forced_variable]},
                            {"identity", identity},
                            {"verified", verify_certificate(sys, cert)}};
  }
  if (alg.weights()) {
    g["input_weights"] = Json{{"in_cone", contains_weight(cone, *alg.weights())},
                              {"action", action_json(*alg.weights())}};
  }
  Json report = base_report("grading", Json{{"presentation", presentation_json(alg)}});
  report["grading"] = std::move(g);
  std::vector<std::string> caveats{kGeneratorCaveat};
  if (!cone.has_positive) {
    caveats.emplace_back(
        "no positive grading exists for this presentation; this does not by itself show that "
        "the abstract algebra admits no positive grading");
  }
  return finish(std::move(report), std::move(caveats));
}

Json signature(const PresentedAlgebra& alg, std::int64_t bound) {
  const SignatureSequence seq = compute_signature_sequence(alg, bound);
  Json elements = Json::array();
  for (const auto& h : seq.elements) elements.push_back(h.to_string());
  std::vector<std::int64_t> gcds;
  std::int64_t g = 0;
  for (std::int64_t d : seq.degrees) gcds.push_back(g = std::gcd(g, d));
  Json report = base_report("signature",
                            Json{{"presentation", presentation_json(alg)}, {"bound", bound}});
  report["signature"] = Json{{"elements", elements},
                             {"degrees", seq.degrees},
                             {"degree_gcds", gcds},
                             {"complete_up_to", seq.complete_up_to},
                             {"complete", seq.complete}};
  std::vector<std::string> caveats{
      "degrees are scanned only up to complete_up_to; complete means every variable lies in the "
      "subalgebra generated by the elements"};
  if (!seq.complete) caveats.emplace_back("sequence is not complete up to the bound");
  return finish(std::move(report), std::move(caveats));
}

Json hilbert(const PresentedAlgebra& alg, std::int64_t upto) {
  if (upto < 0) throw InputError("--upto must be non-negative", "--upto");
  const auto series = hilbert_series_dims(alg, upto);
  Json dims = Json::object();
  bool agrees = true;
  for (std::int64_t d = 0; d <= upto; ++d) {
    const std::int64_t dim = hilbert_dim(alg, d);
    agrees = agrees && dim == series[static_cast<std::size_t>(d)];
    dims[std::to_string(d)] = dim;
  }
  if (!agrees) throw InvariantError("graded-piece enumeration disagrees with the Hilbert series");
  Json report =
      base_report("hilbert", Json{{"presentation", presentation_json(alg)}, {"upto", upto}});
  report["hilbert"] = Json{{"dims", dims}, {"series_agrees", agrees}};
  return finish(std::move(report), {});
}

Json tangent(const PresentedAlgebra& alg, const std::vector<Scalar>& point) {
  const JacobianReport j = jacobian_tangent_dim(alg, point);
  Json rows = Json::array();
  for (const auto& row : j.matrix) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(p.evaluate(point).to_string());
    rows.push_back(r);
  }
  Json report = base_report(
      "tangent", Json{{"presentation", presentation_json(alg)}, {"point", scalars_json(point)}});
  report["tangent"] =
      Json{{"point", scalars_json(point)}, {"jacobian", rows}, {"rank", j.rank}, {"dim", j.tangent_dim}};
  return finish(std::move(report), {"only k-rational points are supported"});
}

Json bk(const BkData& data) {
  const BkValidation v = validate_bk(data);
  Json input{{"field", data.field.name()},
             {"a", data.a},
             {"b", data.b},
             {"c", data.c},
             {"lambda", scalars_json(data.lambdas)}};
  Json cls{{"valid", v.valid}, {"reasons", v.reasons}, {"N", nullptr},          {"weights", nullptr},
           {"presentation", nullptr}, {"min_generators", nullptr}, {"action", nullptr}};
  std::vector<std::string> caveats;
  if (v.valid) {
    const CanonicalGrading g = canonical_grading(data);
    cls["N"] = g.N;
    cls["weights"] = g.weights;
    cls["presentation"] = presentation_json(bk_algebra(data));
    cls["action"] = action_json(g.weights);
    try {
      cls["min_generators"] = min_generators(data);
    } catch (const InputError& e) {
      caveats.emplace_back(std::string("min_generators unavailable: ") + e.what());
    }
    caveats.emplace_back(
        "two valid data sets give isomorphic algebras only if they are identical");
  }
  Json report = base_report("bk", Json{{"bk", input}});
  report["classification"] = std::move(cls);
  return finish(std::move(report), std::move(caveats));
}

Json irreducible(const PresentedAlgebra& alg, const std::string& element, std::int64_t bound) {
  Polynomial f(alg.ring());
  try {
    f = parse_polynomial(element, alg.ring());
  } catch (const InputError& e) {
    throw InputError(e.what(), "--elem, " + e.location());
  }
  if (alg.rewrite_system()) f = alg.reduce(f);
  const IrreducibilityVerdict verdict = irreducible_bruteforce(alg, f, bound);
  Json report = base_report("irreducible", Json{{"presentation", presentation_json(alg)},
                                                {"element", f.to_string()},
                                                {"bound", bound}});
  report["irreducible"] =
      Json{{"verdict", verdict.irreducible ? "irreducible" : "factored"},
           {"u", verdict.u ? Json(verdict.u->to_string()) : Json(nullptr)},
           {"v", verdict.v ? Json(verdict.v->to_string()) : Json(nullptr)},
           {"search_dimension", verdict.search_dimension},
           {"candidates", verdict.candidates}};
  return finish(std::move(report),
                {"factors are searched exhaustively; units are the nonzero constants of a "
                 "positively graded domain, so the verdict assumes the algebra is a domain"});
}

}  // namespace gradalg::report
