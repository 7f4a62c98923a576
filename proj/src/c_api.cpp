// SPDX-License-Identifier: Apache-2.0

#include "gradalg/gradalg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gradalg/bk.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/parser.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/report.hpp"
#include "gradalg/signature.hpp"

struct gradalg_ring {
  gradalg::PresentedAlgebra algebra;
};

namespace {

using namespace gradalg;

thread_local std::string last_message;
thread_local std::string last_location;

gradalg_status fail(gradalg_status status, std::string message, std::string location) {
  last_message = std::move(message);
  last_location = std::move(location);
  return status;
}

template <class Fn>
gradalg_status guarded(Fn&& fn) {
  try {
    fn();
    last_message.clear();
    last_location.clear();
    return GRADALG_OK;
  } catch (const InputError& e) {
    return fail(GRADALG_ERR_INPUT, e.what(), e.location());
  } catch (const InvariantError& e) {
    return fail(GRADALG_ERR_INTERNAL, e.what(), {});
  } catch (const std::exception& e) {
    return fail(GRADALG_ERR_INTERNAL, e.what(), {});
  } catch (...) {
    return fail(GRADALG_ERR_INTERNAL, "unknown exception", {});
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " is null", what);
}

std::vector<Scalar> parse_point(const FieldSpec& field, const std::string& text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      out.push_back(Scalar::parse(field, item));
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " at coordinate " + std::to_string(out.size() + 1),
                       "--at");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

BkData make_bk(const char* field, int64_t a, int64_t b, const int64_t* c,
               const char* const* lambdas, size_t n) {
  require(field, "field");
  if (n > 0) {
    require(c, "c");
    require(lambdas, "lambda");
  }
  BkData data;
  data.field = FieldSpec::parse(field);
  data.a = a;
  data.b = b;
  for (size_t i = 0; i < n; ++i) {
    data.c.push_back(c[i]);
    require(lambdas[i], "lambda");
    try {
      data.lambdas.push_back(Scalar::parse(data.field, lambdas[i]));
    } catch (const InputError& e) {
      throw InputError(e.what(), "--lambda");
    }
  }
  return data;
}

void emit_construction(Construction&& built, gradalg_ring** out, char** flags) {
  if (flags) {
    *flags = nullptr;
    if (!built.flags.empty()) {
      std::string joined;
      for (const auto& f : built.flags) joined += f + "\n";
      *flags = copy_out(joined);
    }
  }
  *out = new gradalg_ring{std::move(built.algebra)};
}

Polynomial parse_in(const gradalg_ring* ring, const char* text, const char* what) {
  require(text, what);
  try {
    return parse_polynomial(text, ring->algebra.ring());
  } catch (const InputError& e) {
    throw InputError(e.what(), std::string(what) + ", " + e.location());
  }
}

}  // namespace

extern "C" {

const char* gradalg_version(void) { return "0.1.0"; }
const char* gradalg_last_error_message(void) { return last_message.c_str(); }
const char* gradalg_last_error_location(void) { return last_location.c_str(); }
void gradalg_string_free(char* s) { std::free(s); }

gradalg_status gradalg_ring_parse(const char* text, gradalg_ring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gradalg_ring{parse_presentation(text)};
  });
}

void gradalg_ring_free(gradalg_ring* ring) { delete ring; }

gradalg_status gradalg_ring_print(const gradalg_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = copy_out(print_presentation(ring->algebra));
  });
}

gradalg_status gradalg_report_grading(const gradalg_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = copy_out(report::dump(report::grading(ring->algebra)));
  });
}

gradalg_status gradalg_report_signature(const gradalg_ring* ring, int64_t bound, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    const int64_t b = bound < 0 ? default_signature_bound(ring->algebra) : bound;
    *out = copy_out(report::dump(report::signature(ring->algebra, b)));
  });
}

gradalg_status gradalg_report_hilbert(const gradalg_ring* ring, int64_t upto, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = copy_out(report::dump(report::hilbert(ring->algebra, upto)));
  });
}

gradalg_status gradalg_report_tangent(const gradalg_ring* ring, const char* point, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(point, "point");
    require(out, "out");
    const auto pt = parse_point(ring->algebra.field(), point);
    *out = copy_out(report::dump(report::tangent(ring->algebra, pt)));
  });
}

gradalg_status gradalg_report_irreducible(const gradalg_ring* ring, const char* element,
                                          int64_t bound, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(element, "element");
    require(out, "out");
    *out = copy_out(report::dump(report::irreducible(ring->algebra, element, bound)));
  });
}

gradalg_status gradalg_report_bk(const char* field, int64_t a, int64_t b, const int64_t* c,
                                 const char* const* lambdas, size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_out(report::dump(report::bk(make_bk(field, a, b, c, lambdas, n))));
  });
}

gradalg_status gradalg_bk_ring(const char* field, int64_t a, int64_t b, const int64_t* c,
                               const char* const* lambdas, size_t n, gradalg_ring** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gradalg_ring{bk_algebra(make_bk(field, a, b, c, lambdas, n))};
  });
}

gradalg_status gradalg_construct_samuel(const gradalg_ring* base, const char* F, int64_t c,
                                        const char* new_var, gradalg_ring** out, char** flags) {
  return guarded([&] {
    require(base, "base");
    require(out, "out");
    const Polynomial poly = parse_in(base, F, "--F");
    emit_construction(samuel_extend(base->algebra, poly, c, new_var ? new_var : "z"), out, flags);
  });
}

gradalg_status gradalg_construct_modify(const gradalg_ring* base, const char* f,
                                        const char* const* ideal_gens, const char* const* new_vars,
                                        size_t n, gradalg_ring** out, char** flags) {
  return guarded([&] {
    require(base, "base");
    require(out, "out");
    if (n > 0) require(ideal_gens, "gens");
    const Polynomial fp = parse_in(base, f, "--f");
    std::vector<Polynomial> gens;
    std::vector<std::string> names;
    for (size_t k = 0; k < n; ++k) {
      gens.push_back(parse_in(base, ideal_gens[k], "--gens"));
      if (new_vars) {
        require(new_vars[k], "--vars");
        names.emplace_back(new_vars[k]);
      }
    }
    emit_construction(affine_modification(base->algebra, fp, gens, names), out, flags);
  });
}

gradalg_status gradalg_construct_bn(const char* field, const char* p, const int* a, const int* b,
                                    size_t n, gradalg_ring** out, char** flags) {
  return guarded([&] {
    require(field, "field");
    require(p, "--p");
    require(out, "out");
    if (n > 0) {
      require(a, "--a");
      require(b, "--b");
    }
    BnData data;
    data.field = FieldSpec::parse(field);
    RingPtr xring = make_ring(data.field, {"x"});
    Polynomial px(xring);
    try {
      px = parse_polynomial(p, xring);
    } catch (const InputError& e) {
      throw InputError(e.what(), "--p, " + e.location());
    }
    const int deg = px.total_degree();
    for (int k = 0; k <= deg; ++k) data.p_coeffs.push_back(px.coefficient({k}));
    data.a.assign(a, a + n);
    data.b.assign(b, b + n);
    emit_construction(bn_algebra(data), out, flags);
  });
}

}  // extern "C"
