// SPDX-License-Identifier: Apache-2.0

#include "gradalg/constructions.hpp"

#include <numeric>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

Polynomial extend_ring(const Polynomial& p, const RingPtr& bigger) {
  const auto& small_vars = p.ring()->vars();
  const auto& big_vars = bigger->vars();
  if (!(p.field() == bigger->field()) || small_vars.size() > big_vars.size() ||
      !std::equal(small_vars.begin(), small_vars.end(), big_vars.begin())) {
    throw InputError("cannot embed polynomial: variable lists are not nested");
  }
  Polynomial out(bigger);
  for (const auto& [e, c] : p.terms()) {
    Exponents big(big_vars.size(), 0);
    std::copy(e.begin(), e.end(), big.begin());
    out.add_term(big, c);
  }
  return out;
}

namespace {

RingPtr append_vars(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = base->vars();
  for (const auto& name : extra) {
    if (base->index_of(name)) {
      throw InputError("new variable '" + name + "' already exists in the base ring");
    }
    vars.push_back(name);
  }
  return make_ring(base->field(), std::move(vars));
}

std::vector<Polynomial> lift_all(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) out.push_back(extend_ring(p, ring));
  return out;
}

std::int64_t homogeneous_degree(const Polynomial& p, const WeightVector& w,
                                const std::string& what) {
  const Homogeneity h = homogeneity(p, w);
  if (h.kind != Homogeneity::Kind::Homogeneous) {
    throw InputError(what + " (" + p.to_string() + ") is not homogeneous");
  }
  return h.degree;
}

}  // namespace

Construction samuel_extend(const PresentedAlgebra& base, const Polynomial& F, std::int64_t c,
                           const std::string& new_var) {
  if (!base.weights()) throw InputError("cyclic cover needs a graded base");
  if (c < 1) throw InputError("exponent c must be positive", "c");
  if (!same_ring(F.ring(), base.ring())) throw InputError("F lives in a different ring");
  if (F.is_zero()) throw InputError("F must be nonzero");
  const std::int64_t omega = homogeneous_degree(F, *base.weights(), "F");
  if (std::gcd(c, omega) != 1) {
    throw InputError("gcd(c, deg F) = gcd(" + std::to_string(c) + ", " +
                     std::to_string(omega) + ") is not 1");
  }
  RingPtr ring = append_vars(base.ring(), {new_var});
  auto relations = lift_all(base.relations(), ring);
  const std::size_t z = ring->num_vars() - 1;
  relations.push_back(Polynomial::variable(ring, z).pow(static_cast<unsigned>(c)) -
                      extend_ring(F, ring));
  WeightVector w;
  for (std::int64_t wi : *base.weights()) w.push_back(c * wi);
  w.push_back(omega);
  Construction out{PresentedAlgebra(ring, std::move(relations), std::move(w)), {}};
  if (c == 1) out.flags.push_back("c = 1: the new variable equals F (degenerate cover)");
  return out;
}

Construction affine_modification(const PresentedAlgebra& base, const Polynomial& f,
                                 std::span<const Polynomial> ideal_gens,
                                 std::vector<std::string> new_vars) {
  if (f.is_zero()) throw InputError("modification needs a nonzero f");
  if (!same_ring(f.ring(), base.ring())) throw InputError("f lives in a different ring");
  if (new_vars.empty()) {
    for (std::size_t k = 1; k <= ideal_gens.size(); ++k) new_vars.push_back("Z" + std::to_string(k));
  }
  if (new_vars.size() != ideal_gens.size()) {
    throw InputError("got " + std::to_string(new_vars.size()) + " names for " +
                     std::to_string(ideal_gens.size()) + " ideal generators");
  }
  for (const auto& g : ideal_gens) {
    if (!same_ring(g.ring(), base.ring())) throw InputError("ideal generator lives in a different ring");
  }
  std::optional<WeightVector> weights;
  if (base.weights()) {
    const std::int64_t df = homogeneous_degree(f, *base.weights(), "f");
    weights = *base.weights();
    for (std::size_t k = 0; k < ideal_gens.size(); ++k) {
      if (ideal_gens[k].is_zero()) {
        throw InputError("ideal generator " + std::to_string(k + 1) + " is zero");
      }
      const std::int64_t da =
          homogeneous_degree(ideal_gens[k], *base.weights(), "ideal generator " + std::to_string(k + 1));
      weights->push_back(da - df);
    }
  }
  RingPtr ring = append_vars(base.ring(), new_vars);
  auto relations = lift_all(base.relations(), ring);
  const Polynomial f_big = extend_ring(f, ring);
  for (std::size_t k = 0; k < ideal_gens.size(); ++k) {
    const std::size_t z = base.num_vars() + k;
    relations.push_back(f_big * Polynomial::variable(ring, z) - extend_ring(ideal_gens[k], ring));
  }
  Construction out{PresentedAlgebra(ring, std::move(relations), std::move(weights)), {}};
  if (f.is_constant()) out.flags.push_back("f is a unit: the modification is trivial");
  return out;
}

void check_chain_gcd(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw InputError("a and b must have the same length (got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || b[i] < 1) {
      throw InputError("exponents must be positive", "index " + std::to_string(i + 1));
    }
    // gcd(a_i, b_1...b_i) = 1 iff a_i is coprime to each b_k, k <= i
    for (std::size_t k = 0; k <= i; ++k) {
      if (std::gcd(a[i], b[k]) != 1) {
        throw InputError("gcd(a_" + std::to_string(i + 1) + ", b_1...b_" + std::to_string(i + 1) +
                             ") != 1 (shares a factor with b_" + std::to_string(k + 1) + ")",
                         "index " + std::to_string(i + 1));
      }
    }
  }
}

std::vector<Polynomial> prime_chain_ideal(const FieldSpec& field, std::span<const int> a,
                                          std::span<const int> b) {
  check_chain_gcd(a, b);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= a.size(); ++i) vars.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(field, std::move(vars));
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    gens.push_back(Polynomial::variable(ring, i).pow(static_cast<unsigned>(a[i - 1])) +
                   Polynomial::variable(ring, i - 1).pow(static_cast<unsigned>(b[i - 1])));
  }
  return gens;
}

Polynomial bn_p_of_x(const BnData& data, const RingPtr& ring) {
  Polynomial p(ring);
  for (std::size_t k = 0; k < data.p_coeffs.size(); ++k) {
    Exponents e(ring->num_vars(), 0);
    e[0] = static_cast<int>(k);
    p.add_term(e, data.p_coeffs[k]);
  }
  return p;
}

Construction bn_algebra(const BnData& data) {
  check_chain_gcd(data.a, data.b);
  std::vector<std::string> vars{"x"};
  for (std::size_t i = 0; i <= data.n() + 1; ++i) vars.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(data.field, std::move(vars));
  const Polynomial p = bn_p_of_x(data, ring);
  if (p.is_zero()) throw InputError("p(x) must be nonzero", "p");
  auto z = [&](std::size_t i) { return Polynomial::variable(ring, i + 1); };
  std::vector<Polynomial> relations;
  for (std::size_t i = 1; i <= data.n(); ++i) {
    relations.push_back(p * z(i + 1) + z(i).pow(static_cast<unsigned>(data.a[i - 1])) +
                        z(i - 1).pow(static_cast<unsigned>(data.b[i - 1])));
  }
  Construction out{PresentedAlgebra(ring, std::move(relations)), {}};
  if (p.is_constant()) {
    out.flags.push_back("p(x) is a unit: the algebra degenerates to a polynomial ring in two variables over k[x]");
  }
  return out;
}

JacobianReport jacobian_tangent_dim(const PresentedAlgebra& alg, std::span<const Scalar> point) {
  if (point.size() != alg.num_vars()) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(alg.num_vars()), "--at");
  }
  for (const auto& s : point) {
    if (!(s.field() == alg.field())) throw InputError("point coordinate in the wrong field", "--at");
  }
  JacobianReport report;
  report.point.assign(point.begin(), point.end());
  const auto& rels = alg.relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!rels[r].evaluate(point).is_zero()) {
      throw InputError("point is not on the variety: relation " + std::to_string(r + 1) + " (" +
                           rels[r].to_string() + ") does not vanish",
                       "--at");
    }
  }
  Matrix values(alg.field(), rels.size(), alg.num_vars());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < alg.num_vars(); ++v) {
      row.push_back(rels[r].partial_derivative(v));
      values(r, v) = row.back().evaluate(point);
    }
    report.matrix.push_back(std::move(row));
  }
  report.rank = rank(values);
  report.tangent_dim = alg.num_vars() - report.rank;
  return report;
}

}  // namespace gradalg
