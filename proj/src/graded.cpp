// SPDX-License-Identifier: Apache-2.0

#include "gradalg/graded.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gradalg/errors.hpp"

namespace gradalg {

std::int64_t weighted_degree(const Exponents& exps,
                             std::span<const std::int64_t> weights) {
  if (exps.size() != weights.size()) {
    throw InputError("weight vector has " + std::to_string(weights.size()) +
                     " entries, expected " + std::to_string(exps.size()));
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * weights[i];
  return d;
}

Homogeneity homogeneity(const Polynomial& p, std::span<const std::int64_t> weights) {
  if (p.is_zero()) return {Homogeneity::Kind::ZeroPolynomial};
  const std::int64_t d = weighted_degree(p.terms().begin()->first, weights);
  for (const auto& [e, c] : p.terms()) {
    if (weighted_degree(e, weights) != d) return {Homogeneity::Kind::NotHomogeneous};
  }
  return {Homogeneity::Kind::Homogeneous, d};
}

std::vector<std::pair<std::int64_t, Polynomial>> homogeneous_components(
    const Polynomial& p, std::span<const std::int64_t> weights) {
  std::map<std::int64_t, Polynomial> parts;
  for (const auto& [e, c] : p.terms()) {
    auto it = parts.try_emplace(weighted_degree(e, weights), p.ring()).first;
    it->second.add_term(e, c);
  }
  return {parts.begin(), parts.end()};
}

// ---------------------------------------------------------------------------
// Rewrite systems

namespace {

// Rule var^e -> replacement read off `rel`, if var occurs in exactly one term
// of rel and that term is a pure power.
std::optional<RewriteRule> rule_from_relation(const Polynomial& rel, std::size_t var) {
  const Exponents* power = nullptr;
  Scalar lead;
  for (const auto& [e, c] : rel.terms()) {
    if (e[var] == 0) continue;
    if (power) return std::nullopt;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) return std::nullopt;
    }
    power = &e;
    lead = c;
  }
  if (!power) return std::nullopt;
  const int exponent = (*power)[var];
  Polynomial repl = rel;
  repl.add_term(*power, -lead);
  repl *= -lead.inverse();
  return RewriteRule{var, exponent, std::move(repl)};
}

bool acyclic(const std::vector<RewriteRule>& rules, std::size_t num_vars) {
  std::vector<int> rule_of(num_vars, -1);
  for (std::size_t k = 0; k < rules.size(); ++k) rule_of[rules[k].var] = static_cast<int>(k);
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(rules.size(), 0);
  auto visit = [&](auto&& self, std::size_t k) -> bool {
    if (state[k] == 1) return false;
    if (state[k] == 2) return true;
    state[k] = 1;
    for (std::size_t v = 0; v < num_vars; ++v) {
      if (rule_of[v] >= 0 && rules[k].replacement.uses_variable(v) &&
          !self(self, static_cast<std::size_t>(rule_of[v]))) {
        return false;
      }
    }
    state[k] = 2;
    return true;
  };
  for (std::size_t k = 0; k < rules.size(); ++k) {
    if (!visit(visit, k)) return false;
  }
  return true;
}

}  // namespace

RewriteSystem::RewriteSystem(RingPtr ring, std::vector<RewriteRule> rules)
    : ring_(std::move(ring)), rules_(std::move(rules)), caps_(ring_->num_vars(), 0) {
  for (const auto& r : rules_) {
    if (r.var >= ring_->num_vars()) throw InputError("rewrite rule variable out of range");
    if (r.exponent < 1) throw InputError("rewrite rule exponent must be positive");
    if (caps_[r.var] != 0) {
      throw InputError("variable '" + ring_->vars()[r.var] + "' has two rewrite rules");
    }
    if (!same_ring(r.replacement.ring(), ring_)) {
      throw InputError("rewrite rule replacement lives in a different ring");
    }
    if (r.replacement.uses_variable(r.var)) {
      throw InputError("rewrite rule for '" + ring_->vars()[r.var] +
                       "' has a replacement involving the same variable");
    }
    caps_[r.var] = r.exponent;
  }
  if (!acyclic(rules_, ring_->num_vars())) {
    throw InputError("rewrite rules are cyclic");
  }
}

std::optional<RewriteSystem> RewriteSystem::detect(const RingPtr& ring,
                                                   std::span<const Polynomial> relations) {
  std::vector<RewriteRule> rules;
  std::vector<bool> taken(ring->num_vars(), false);
  for (const auto& rel : relations) {
    bool found = false;
    for (std::size_t v = ring->num_vars(); v-- > 0;) {
      if (taken[v]) continue;
      auto rule = rule_from_relation(rel, v);
      if (!rule) continue;
      rules.push_back(std::move(*rule));
      if (!acyclic(rules, ring->num_vars())) {
        rules.pop_back();
        continue;
      }
      taken[v] = true;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return RewriteSystem(ring, std::move(rules));
}

std::optional<int> RewriteSystem::cap(std::size_t var) const {
  if (caps_.at(var) == 0) return std::nullopt;
  return caps_[var];
}

bool RewriteSystem::is_normal(const Exponents& exps) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (caps_[i] != 0 && exps[i] >= caps_[i]) return false;
  }
  return true;
}

bool RewriteSystem::is_normal(const Polynomial& p) const {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return is_normal(t.first); });
}

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs) {
  if (!same_ring(p.ring(), rs.ring())) {
    throw InputError("polynomial and rewrite system live in different rings");
  }
  // Powers of each replacement, built on demand.
  std::vector<std::vector<Polynomial>> powers(rs.rules().size());
  auto replacement_pow = [&](std::size_t k, int q) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(p.ring(), 1));
    while (static_cast<int>(cache.size()) <= q) {
      cache.push_back(cache.back() * rs.rules()[k].replacement);
    }
    return cache[static_cast<std::size_t>(q)];
  };

  Polynomial done(p.ring());
  Polynomial work = p;
  while (!work.is_zero()) {
    Polynomial next(p.ring());
    for (const auto& [e, c] : work.terms()) {
      std::size_t k = 0;
      for (; k < rs.rules().size(); ++k) {
        if (e[rs.rules()[k].var] >= rs.rules()[k].exponent) break;
      }
      if (k == rs.rules().size()) {
        done.add_term(e, c);
        continue;
      }
      const RewriteRule& rule = rs.rules()[k];
      Exponents rest = e;
      const int q = e[rule.var] / rule.exponent;
      rest[rule.var] = e[rule.var] % rule.exponent;
      next += Polynomial::monomial(p.ring(), std::move(rest), c) * replacement_pow(k, q);
    }
    work = std::move(next);
  }
  return done;
}

// ---------------------------------------------------------------------------
// Presented algebras

PresentedAlgebra::PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations,
                                   std::optional<WeightVector> weights)
    : ring_(std::move(ring)), relations_(std::move(relations)), weights_(std::move(weights)) {
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    if (!same_ring(relations_[k].ring(), ring_)) {
      throw InputError("relation " + std::to_string(k + 1) + " lives in a different ring");
    }
    if (relations_[k].is_zero()) {
      throw InputError("relation " + std::to_string(k + 1) + " is zero");
    }
  }
  if (weights_) {
    if (weights_->size() != ring_->num_vars()) {
      throw InputError("weights has " + std::to_string(weights_->size()) +
                       " entries but there are " + std::to_string(ring_->num_vars()) +
                       " variables");
    }
    if (std::all_of(weights_->begin(), weights_->end(), [](auto w) { return w == 0; })) {
      throw InputError("weights are all zero");
    }
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      if (!homogeneity(relations_[k], *weights_).is_homogeneous()) {
        throw InputError("relation " + std::to_string(k + 1) + " (" +
                         relations_[k].to_string() +
                         ") is not homogeneous under the given weights");
      }
    }
  }
  rewrite_ = RewriteSystem::detect(ring_, relations_);
}

bool PresentedAlgebra::has_positive_weights() const {
  return weights_ && std::all_of(weights_->begin(), weights_->end(),
                                 [](auto w) { return w > 0; });
}

PresentedAlgebra PresentedAlgebra::with_weights(std::optional<WeightVector> weights) const {
  return PresentedAlgebra(ring_, relations_, std::move(weights));
}

Polynomial PresentedAlgebra::reduce(const Polynomial& p) const {
  if (rewrite_) return normal_form(p, *rewrite_);
  if (!relations_.empty()) {
    throw InputError("no pure-power normal form is available for this presentation");
  }
  if (!same_ring(p.ring(), ring_)) throw InputError("polynomial lives in a different ring");
  return p;
}

bool operator==(const PresentedAlgebra& lhs, const PresentedAlgebra& rhs) {
  return same_ring(lhs.ring_, rhs.ring_) && lhs.relations_ == rhs.relations_ &&
         lhs.weights_ == rhs.weights_;
}

// ---------------------------------------------------------------------------
// Graded pieces

void require_graded_pieces(const PresentedAlgebra& alg) {
  if (!alg.weights()) throw InputError("graded pieces need a weight vector", "weights");
  if (!alg.has_positive_weights()) {
    throw InputError("graded pieces need all weights positive", "weights");
  }
  if (!alg.relations().empty() && !alg.rewrite_system()) {
    throw InputError(
        "graded pieces are only available for free rings and pure-power "
        "rewrite quotients",
        "rel");
  }
}

namespace {

void enumerate_degree(const PresentedAlgebra& alg, std::size_t var, std::int64_t remaining,
                      Exponents& current, std::vector<Exponents>& out) {
  const auto& w = *alg.weights();
  if (var == w.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  std::int64_t max_e = remaining / w[var];
  if (alg.rewrite_system()) {
    if (auto cap = alg.rewrite_system()->cap(var)) max_e = std::min<std::int64_t>(max_e, *cap - 1);
  }
  for (std::int64_t e = 0; e <= max_e; ++e) {
    current[var] = static_cast<int>(e);
    enumerate_degree(alg, var + 1, remaining - e * w[var], current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponents> graded_piece_basis(const PresentedAlgebra& alg, std::int64_t d) {
  require_graded_pieces(alg);
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents current(alg.num_vars(), 0);
  enumerate_degree(alg, 0, d, current, out);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

std::vector<Exponents> filtration_basis(const PresentedAlgebra& alg, std::int64_t d) {
  std::vector<Exponents> out;
  for (std::int64_t g = 0; g <= d; ++g) {
    auto piece = graded_piece_basis(alg, g);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::int64_t hilbert_dim(const PresentedAlgebra& alg, std::int64_t d) {
  return static_cast<std::int64_t>(graded_piece_basis(alg, d).size());
}

std::int64_t veronese_dim(const PresentedAlgebra& alg, std::int64_t a, std::int64_t j) {
  if (a <= 0) throw InputError("Veronese index must be positive", "a");
  if (j < 0) return 0;
  return hilbert_dim(alg, a * j);
}

std::vector<std::int64_t> hilbert_series_dims(const PresentedAlgebra& alg,
                                              std::int64_t upto) {
  require_graded_pieces(alg);
  if (upto < 0) return {};
  const auto n = static_cast<std::size_t>(upto) + 1;
  std::vector<std::int64_t> s(n, 0);
  s[0] = 1;
  for (std::int64_t w : *alg.weights()) {
    // divide by (1 - t^w)
    for (std::size_t k = static_cast<std::size_t>(w); k < n; ++k) s[k] += s[k - w];
  }
  if (alg.rewrite_system()) {
    for (const auto& rule : alg.rewrite_system()->rules()) {
      const auto m = static_cast<std::size_t>(rule.exponent * (*alg.weights())[rule.var]);
      // multiply by (1 - t^m)
      for (std::size_t k = n; k-- > m;) s[k] -= s[k - m];
    }
  }
  return s;
}

bool is_unit(const Polynomial& p, const PresentedAlgebra& alg) {
  if (!alg.has_positive_weights()) {
    throw InputError("unit test needs a positive grading");
  }
  if (alg.rewrite_system() && !alg.rewrite_system()->is_normal(p)) {
    throw InputError("element is not in normal form");
  }
  return !p.is_zero() && p.is_constant();
}

// ---------------------------------------------------------------------------
// Actions

std::int64_t gcd_of_weights(std::span<const std::int64_t> weights) {
  std::int64_t g = 0;
  for (std::int64_t w : weights) g = std::gcd(g, w < 0 ? -w : w);
  return g;
}

ActionClass classify_action(std::span<const std::int64_t> weights) {
  const bool any_pos = std::any_of(weights.begin(), weights.end(), [](auto w) { return w > 0; });
  const bool any_neg = std::any_of(weights.begin(), weights.end(), [](auto w) { return w < 0; });
  const bool any_zero = std::any_of(weights.begin(), weights.end(), [](auto w) { return w == 0; });
  if (!any_pos && !any_neg) throw InputError("cannot classify the zero weight vector");
  ActionClass out{};
  if (any_pos && any_neg) {
    out.kind = ActionClass::Kind::Hyperbolic;
  } else if (any_zero) {
    out.kind = ActionClass::Kind::Parabolic;
  } else {
    out.kind = ActionClass::Kind::Elliptic;
  }
  out.effective = gcd_of_weights(weights) == 1;
  out.good = out.kind == ActionClass::Kind::Elliptic && out.effective;
  return out;
}

std::string to_string(ActionClass::Kind kind) {
  switch (kind) {
    case ActionClass::Kind::Elliptic: return "elliptic";
    case ActionClass::Kind::Parabolic: return "parabolic";
    case ActionClass::Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

}  // namespace gradalg
