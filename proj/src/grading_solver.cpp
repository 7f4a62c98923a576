// SPDX-License-Identifier: Apache-2.0

#include "gradalg/grading_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

HomogeneitySystem homogeneity_system(const PresentedAlgebra& alg) {
  HomogeneitySystem sys;
  sys.var_names = alg.ring()->vars();
  for (std::size_t r = 0; r < alg.relations().size(); ++r) {
    const auto& terms = alg.relations()[r].terms();
    for (auto it = terms.begin(); it != terms.end() && std::next(it) != terms.end(); ++it) {
      HomogeneityEquation eq;
      eq.relation = r;
      eq.lhs = it->first;
      eq.rhs = std::next(it)->first;
      for (std::size_t i = 0; i < eq.lhs.size(); ++i) eq.coeffs.push_back(eq.lhs[i] - eq.rhs[i]);
      sys.equations.push_back(std::move(eq));
    }
  }
  return sys;
}

std::string format_equation(const HomogeneitySystem& sys, const HomogeneityEquation& eq) {
  auto side = [&](const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (e[i] != 1) out += std::to_string(e[i]) + "*";
      out += "w_" + sys.var_names[i];
    }
    return out.empty() ? std::string("0") : out;
  };
  return side(eq.lhs) + " = " + side(eq.rhs);
}

namespace {

const FieldSpec kQ = FieldSpec::rationals();

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
std::vector<mpz_class> primitive_integer(const std::vector<mpq_class>& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) lcm = lcm * q.get_den() / gcd(lcm, q.get_den());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class z = q.get_num() * (lcm / q.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

/// sum_j coef[j] * t_j >= rhs, derived as sum_i mult[i] * (w_i >= 1).
struct Constraint {
  std::vector<mpq_class> coef;
  mpq_class rhs;
  std::vector<mpq_class> mult;
};

/// Normalizes so the first nonzero coefficient has absolute value one;
/// identical directions keep only the tightest right-hand side.
std::vector<Constraint> dedupe(std::vector<Constraint> rows) {
  std::map<std::vector<mpq_class>, Constraint> best;
  std::vector<std::vector<mpq_class>> order;
  for (auto& row : rows) {
    auto nz = std::find_if(row.coef.begin(), row.coef.end(), [](const mpq_class& q) { return q != 0; });
    if (nz != row.coef.end()) {
      const mpq_class s = abs(*nz);
      for (auto& c : row.coef) c /= s;
      row.rhs /= s;
      for (auto& m : row.mult) m /= s;
    }
    auto it = best.find(row.coef);
    if (it == best.end()) {
      order.push_back(row.coef);
      best.emplace(row.coef, std::move(row));
    } else if (row.rhs > it->second.rhs) {
      it->second = std::move(row);
    }
  }
  std::vector<Constraint> out;
  for (const auto& key : order) out.push_back(std::move(best.at(key)));
  return out;
}

InfeasibilityCertificate make_certificate(const HomogeneitySystem& sys,
                                          const std::vector<mpq_class>& mult) {
  std::vector<mpq_class> lam_q(mult);
  const auto lam_z = primitive_integer(lam_q);
  InfeasibilityCertificate cert;
  for (const auto& z : lam_z) cert.lambda.push_back(Scalar::from_integer(kQ, z));
  // Solve A^T y = lambda.
  Matrix at(kQ, sys.num_vars(), sys.equations.size());
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    for (std::size_t i = 0; i < sys.num_vars(); ++i) {
      at(i, e) = Scalar::from_int(kQ, sys.equations[e].coeffs[i]);
    }
  }
  auto y = solve(at, cert.lambda);
  if (!y) throw InvariantError("infeasibility multipliers are not in the equation row space");
  cert.y = std::move(*y);
  for (std::size_t i = 0; i < cert.lambda.size(); ++i) {
    if (!cert.lambda[i].is_zero()) {
      cert.forced_variable = i;
      break;
    }
  }
  return cert;
}

}  // namespace

GradingCone solve_grading_cone(const HomogeneitySystem& sys) {
  const std::size_t n = sys.num_vars();
  GradingCone cone;
  cone.system = sys;

  Matrix a(kQ, sys.equations.size(), n);
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    if (sys.equations[e].coeffs.size() != n) throw InvariantError("equation length mismatch");
    for (std::size_t i = 0; i < n; ++i) a(e, i) = Scalar::from_int(kQ, sys.equations[e].coeffs[i]);
  }
  std::vector<std::vector<mpq_class>> basis_q;
  for (const auto& v : nullspace(a)) {
    std::vector<mpq_class> q;
    for (const auto& s : v) q.push_back(s.rational());
    std::vector<mpq_class> prim;
    for (const auto& z : primitive_integer(q)) prim.emplace_back(z);
    basis_q.push_back(prim);
    std::vector<Scalar> stored;
    for (const auto& x : prim) stored.push_back(Scalar::from_integer(kQ, x.get_num()));
    cone.basis.push_back(std::move(stored));
  }
  cone.dimension = basis_q.size();
  const std::size_t dim = cone.dimension;

  // Constraints w_i = sum_j basis[j][i] t_j >= 1.
  std::vector<Constraint> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Constraint c;
    for (std::size_t j = 0; j < dim; ++j) c.coef.push_back(basis_q[j][i]);
    c.rhs = 1;
    c.mult.assign(n, 0);
    c.mult[i] = 1;
    rows.push_back(std::move(c));
  }

  // stages[k] holds the constraints in t_0..t_{k-1}.
  std::vector<std::vector<Constraint>> stages(dim + 1);
  stages[dim] = dedupe(std::move(rows));
  for (std::size_t k = dim; k-- > 0;) {
    std::vector<Constraint> lower, upper, next;
    for (const auto& row : stages[k + 1]) {
      if (row.coef[k] > 0) {
        lower.push_back(row);
      } else if (row.coef[k] < 0) {
        upper.push_back(row);
      } else {
        Constraint r = row;
        r.coef.pop_back();
        next.push_back(std::move(r));
      }
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // (-up.coef[k]) * lo + lo.coef[k] * up eliminates t_k
        const mpq_class sl = -up.coef[k];
        const mpq_class su = lo.coef[k];
        Constraint r;
        for (std::size_t j = 0; j < k; ++j) r.coef.push_back(sl * lo.coef[j] + su * up.coef[j]);
        r.rhs = sl * lo.rhs + su * up.rhs;
        for (std::size_t i = 0; i < n; ++i) r.mult.push_back(sl * lo.mult[i] + su * up.mult[i]);
        next.push_back(std::move(r));
      }
    }
    stages[k] = dedupe(std::move(next));
  }

  for (const auto& row : stages[0]) {
    if (row.rhs > 0) {
      cone.has_positive = false;
      cone.certificate = make_certificate(sys, row.mult);
      if (!verify_certificate(sys, *cone.certificate)) {
        throw InvariantError("generated infeasibility certificate does not verify");
      }
      return cone;
    }
  }

  // Back-substitute, taking the smallest admissible integer where possible.
  std::vector<mpq_class> t;
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<mpq_class> lo, up;
    for (const auto& row : stages[k + 1]) {
      mpq_class rest = row.rhs;
      for (std::size_t j = 0; j < k; ++j) rest -= row.coef[j] * t[j];
      if (row.coef[k] > 0) {
        const mpq_class bound = rest / row.coef[k];
        if (!lo || bound > *lo) lo = bound;
      } else if (row.coef[k] < 0) {
        const mpq_class bound = rest / row.coef[k];
        if (!up || bound < *up) up = bound;
      }
    }
    mpq_class value = 0;
    if (lo) {
      mpz_class ceil_lo;
      mpz_cdiv_q(ceil_lo.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      value = (!up || mpq_class(ceil_lo) <= *up) ? mpq_class(ceil_lo) : *lo;
    } else if (up) {
      mpz_class floor_up;
      mpz_fdiv_q(floor_up.get_mpz_t(), up->get_num_mpz_t(), up->get_den_mpz_t());
      value = floor_up;
    }
    t.push_back(value);
  }
  std::vector<mpq_class> w(n, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) w[i] += t[j] * basis_q[j][i];
  }
  WeightVector sample;
  for (const auto& z : primitive_integer(w)) {
    if (!z.fits_slong_p()) throw InputError("sample grading does not fit in 64 bits");
    sample.push_back(z.get_si());
  }
  if (!std::all_of(sample.begin(), sample.end(), [](auto x) { return x >= 1; }) ||
      !contains_weight(sys, sample)) {
    throw InvariantError("Fourier-Motzkin back-substitution produced an invalid grading");
  }
  cone.has_positive = true;
  cone.sample_positive = std::move(sample);
  return cone;
}

bool contains_weight(const HomogeneitySystem& sys, std::span<const std::int64_t> w) {
  if (w.size() != sys.num_vars()) {
    throw InputError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                     std::to_string(sys.num_vars()));
  }
  return std::all_of(sys.equations.begin(), sys.equations.end(), [&](const auto& eq) {
    __int128 s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<__int128>(eq.coeffs[i]) * w[i];
    return s == 0;
  });
}

bool contains_weight(const GradingCone& cone, std::span<const std::int64_t> w) {
  return contains_weight(cone.system, w);
}

bool verify_certificate(const HomogeneitySystem& sys, const InfeasibilityCertificate& cert) {
  if (cert.lambda.size() != sys.num_vars() || cert.y.size() != sys.equations.size()) return false;
  mpq_class total = 0;
  for (const auto& l : cert.lambda) {
    if (l.rational() < 0) return false;
    total += l.rational();
  }
  if (total <= 0) return false;
  for (std::size_t i = 0; i < sys.num_vars(); ++i) {
    mpq_class combo = 0;
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
      combo += cert.y[e].rational() * sys.equations[e].coeffs[i];
    }
    if (combo != cert.lambda[i].rational()) return false;
  }
  return cert.forced_variable < cert.lambda.size() && !cert.lambda[cert.forced_variable].is_zero();
}

WeightVector primitive_normalize(std::span<const std::int64_t> w) {
  const std::int64_t g = gcd_of_weights(w);
  if (g == 0) throw InputError("cannot normalize the zero weight vector");
  WeightVector out;
  for (std::int64_t x : w) out.push_back(x / g);
  return out;
}

}  // namespace gradalg
