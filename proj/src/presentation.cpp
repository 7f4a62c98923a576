// SPDX-License-Identifier: Apache-2.0

#include "gradalg/presentation.hpp"

#include <sstream>

#include "gradalg/errors.hpp"
#include "gradalg/parser.hpp"

namespace gradalg {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string line_loc(std::size_t line) { return "line " + std::to_string(line); }

}  // namespace

PresentedAlgebra parse_presentation(std::string_view text) {
  std::optional<FieldSpec> field;
  std::optional<std::vector<std::string>> vars;
  std::optional<WeightVector> weights;
  std::size_t weights_line = 0;
  std::size_t vars_line = 0;
  std::vector<std::pair<std::size_t, std::string>> rel_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string_view raw = text.substr(pos, end - pos);
    raw = raw.substr(0, std::min(raw.find('#'), raw.size()));  // comments run to end of line
    const std::string line = trim(raw);
    pos = end + 1;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InputError("expected 'key: value', got '" + line + "'", line_loc(line_no));
    }
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    try {
      if (key == "field") {
        if (field) throw InputError("duplicate 'field' line");
        field = FieldSpec::parse(value);
      } else if (key == "vars") {
        if (vars) throw InputError("duplicate 'vars' line");
        vars = split_words(value);
        if (vars->empty()) throw InputError("'vars' is empty");
        vars_line = line_no;
      } else if (key == "weights") {
        if (weights) throw InputError("duplicate 'weights' line");
        weights.emplace();
        for (const auto& w : split_words(value)) {
          std::size_t used = 0;
          long long x = 0;
          try {
            x = std::stoll(w, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != w.size() || used == 0) throw InputError("malformed weight '" + w + "'");
          weights->push_back(x);
        }
        weights_line = line_no;
      } else if (key == "rel") {
        rel_lines.emplace_back(line_no, value);
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      if (!e.location().empty()) throw;
      throw InputError(e.what(), line_loc(line_no));
    }
  }
  if (!field) throw InputError("missing 'field' line", "line 1");
  if (!vars) throw InputError("missing 'vars' line", "line 1");

  RingPtr ring;
  try {
    ring = make_ring(*field, *vars);
  } catch (const InputError& e) {
    throw InputError(e.what(), line_loc(vars_line));
  }
  std::vector<Polynomial> relations;
  for (const auto& [ln, src] : rel_lines) {
    try {
      relations.push_back(parse_polynomial(src, ring));
    } catch (const InputError& e) {
      throw InputError(e.what(), line_loc(ln) + (e.location().empty() ? "" : ", " + e.location()));
    }
  }
  if (weights && weights->size() == vars->size()) {
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (!homogeneity(relations[i], *weights).is_homogeneous()) {
        throw InputError("relation is not homogeneous under the given weights",
                         line_loc(rel_lines[i].first));
      }
    }
  }
  try {
    return PresentedAlgebra(ring, std::move(relations), std::move(weights));
  } catch (const InputError& e) {
    throw InputError(e.what(), weights_line ? line_loc(weights_line) : std::string("relations"));
  }
}

std::string print_presentation(const PresentedAlgebra& alg) {
  std::string out = "field: " + alg.field().name() + "\nvars:";
  for (const auto& v : alg.ring()->vars()) out += " " + v;
  out += "\n";
  if (alg.weights()) {
    out += "weights:";
    for (auto w : *alg.weights()) out += " " + std::to_string(w);
    out += "\n";
  }
  for (const auto& rel : alg.relations()) out += "rel: " + rel.to_string() + "\n";
  return out;
}

}  // namespace gradalg
