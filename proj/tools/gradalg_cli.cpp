// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through gradalg.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradalg/gradalg.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct CliError {
  int code;
  std::string message;
  std::string location;
};

void report_error(const CliError& e) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", e.code == kExitInput ? "input" : "internal"},
                {"message", e.message},
                {"location", e.location}};
  std::cerr << j.dump(2) << "\n";
}

void check(gradalg_status status) {
  if (status == GRADALG_OK) return;
  throw CliError{status == GRADALG_ERR_INPUT ? kExitInput : kExitInternal,
                 gradalg_last_error_message(), gradalg_last_error_location()};
}

/// Owns a string returned by the library.
class LibString {
 public:
  LibString() = default;
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  ~LibString() { gradalg_string_free(ptr_); }
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ ? ptr_ : ""; }

 private:
  char* ptr_ = nullptr;
};

class Ring {
 public:
  Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;
  ~Ring() { gradalg_ring_free(ptr_); }
  gradalg_ring** out() { return &ptr_; }
  const gradalg_ring* get() const { return ptr_; }

 private:
  gradalg_ring* ptr_ = nullptr;
};

void load(const std::string& path, Ring& ring) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitInput, "cannot open presentation file", path};
  std::stringstream buf;
  buf << in.rdbuf();
  if (gradalg_ring_parse(buf.str().c_str(), ring.out()) != GRADALG_OK) {
    std::string loc = gradalg_last_error_location();
    throw CliError{kExitInput, gradalg_last_error_message(), path + (loc.empty() ? "" : ": " + loc)};
  }
}

void write_out(const std::string& s) {
  std::fwrite(s.data(), 1, s.size(), stdout);
  std::fflush(stdout);
}

void emit_construction(Ring& ring, LibString& flags) {
  std::string out;
  std::istringstream notes(flags.str());
  for (std::string line; std::getline(notes, line);) out += "# note: " + line + "\n";
  LibString text;
  check(gradalg_ring_print(ring.get(), text.out()));
  write_out(out + text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded algebras: gradings, signature sequences, Hilbert dimensions, tangent "
               "spaces and irreducibility oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gradalg_version()));

  std::string file;
  std::int64_t bound = -1;
  std::int64_t upto = 0;
  std::string point;
  std::string elem;

  auto* grading = app.add_subcommand("grading", "Grading cone and positivity of a presentation");
  grading->add_option("file", file, "Presentation file")->required();

  auto* signature = app.add_subcommand("signature", "Signature sequence up to a degree bound");
  signature->add_option("file", file, "Presentation file")->required();
  signature->add_option("--bound", bound, "Degree bound (default: sum of relation degrees)");

  auto* hilbert = app.add_subcommand("hilbert", "Dimensions of graded pieces 0..upto");
  hilbert->add_option("file", file, "Presentation file")->required();
  hilbert->add_option("--upto", upto, "Largest degree")->required();

  auto* tangent = app.add_subcommand("tangent", "Tangent-space dimension at a rational point");
  tangent->add_option("file", file, "Presentation file")->required();
  tangent->add_option("--at", point, "Comma-separated coordinates")->required();

  std::int64_t bk_a = 0;
  std::int64_t bk_b = 0;
  std::vector<std::int64_t> bk_c;
  std::vector<std::string> bk_lambda;
  std::string field = "Q";
  auto* bk = app.add_subcommand("bk", "Validate and describe B(a, b, c, lambda)");
  bk->add_option("--a", bk_a)->required();
  bk->add_option("--b", bk_b)->required();
  bk->add_option("--c", bk_c)->delimiter(',');
  bk->add_option("--lambda", bk_lambda)->delimiter(',');
  bk->add_option("--field", field, "Q or F<p>");
  auto* bk_emit = bk->add_flag("--presentation", "Print the presentation file instead of a report");

  auto* irreducible = app.add_subcommand("irreducible", "Exhaustive irreducibility test over F_p");
  irreducible->add_option("file", file, "Presentation file")->required();
  irreducible->add_option("--elem", elem, "Element to test")->required();
  irreducible->add_option("--bound", bound, "Degree bound")->required();

  auto* construct = app.add_subcommand("construct", "Build a presentation");
  construct->require_subcommand(1);

  std::string poly_F;
  std::int64_t samuel_c = 0;
  std::string new_var = "z";
  auto* samuel = construct->add_subcommand("samuel", "Cyclic cover A[Z]/(Z^c - F)");
  samuel->add_option("file", file, "Graded base presentation")->required();
  samuel->add_option("--F", poly_F, "Homogeneous F")->required();
  samuel->add_option("--c", samuel_c, "Exponent c")->required();
  samuel->add_option("--var", new_var, "Name of the new variable");

  std::string poly_f;
  std::vector<std::string> gens;
  std::vector<std::string> new_vars;
  auto* modify = construct->add_subcommand("modify", "Affine modification A[Z_i]/(f Z_i - a_i)");
  modify->add_option("file", file, "Base presentation")->required();
  modify->add_option("--f", poly_f, "Denominator f")->required();
  modify->add_option("--gens", gens, "Ideal generators a_i")->delimiter(',')->required();
  modify->add_option("--vars", new_vars, "Names of the new variables")->delimiter(',');

  std::string poly_p;
  std::vector<int> bn_a;
  std::vector<int> bn_b;
  auto* bn = construct->add_subcommand("bn", "Threefold B_n from p(x), a, b");
  bn->add_option("--p", poly_p, "p(x)")->required();
  bn->add_option("--a", bn_a)->delimiter(',');
  bn->add_option("--b", bn_b)->delimiter(',');
  bn->add_option("--field", field, "Q or F<p>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error({kExitInput, e.what(), e.get_name()});
    return kExitInput;
  }

  try {
    Ring ring;
    LibString out;
    if (*grading) {
      load(file, ring);
      check(gradalg_report_grading(ring.get(), out.out()));
    } else if (*signature) {
      load(file, ring);
      check(gradalg_report_signature(ring.get(), bound, out.out()));
    } else if (*hilbert) {
      load(file, ring);
      check(gradalg_report_hilbert(ring.get(), upto, out.out()));
    } else if (*tangent) {
      load(file, ring);
      check(gradalg_report_tangent(ring.get(), point.c_str(), out.out()));
    } else if (*irreducible) {
      load(file, ring);
      check(gradalg_report_irreducible(ring.get(), elem.c_str(), bound, out.out()));
    } else if (*bk) {
      if (bk_c.size() != bk_lambda.size()) {
        throw CliError{kExitInput,
                       "--c has " + std::to_string(bk_c.size()) + " entries but --lambda has " +
                           std::to_string(bk_lambda.size()),
                       "--lambda"};
      }
      std::vector<const char*> lambdas;
      for (const auto& l : bk_lambda) lambdas.push_back(l.c_str());
      if (*bk_emit) {
        check(gradalg_bk_ring(field.c_str(), bk_a, bk_b, bk_c.data(), lambdas.data(), bk_c.size(),
                              ring.out()));
        check(gradalg_ring_print(ring.get(), out.out()));
      } else {
        check(gradalg_report_bk(field.c_str(), bk_a, bk_b, bk_c.data(), lambdas.data(),
                                bk_c.size(), out.out()));
      }
    } else if (*samuel) {
      Ring base;
      load(file, base);
      LibString flags;
      check(gradalg_construct_samuel(base.get(), poly_F.c_str(), samuel_c, new_var.c_str(),
                                     ring.out(), flags.out()));
      emit_construction(ring, flags);
      return 0;
    } else if (*modify) {
      Ring base;
      load(file, base);
      if (!new_vars.empty() && new_vars.size() != gens.size()) {
        throw CliError{kExitInput, "--vars must name one variable per generator", "--vars"};
      }
      std::vector<const char*> g, v;
      for (const auto& s : gens) g.push_back(s.c_str());
      for (const auto& s : new_vars) v.push_back(s.c_str());
      LibString flags;
      check(gradalg_construct_modify(base.get(), poly_f.c_str(), g.data(),
                                     new_vars.empty() ? nullptr : v.data(), g.size(), ring.out(),
                                     flags.out()));
      emit_construction(ring, flags);
      return 0;
    } else if (*bn) {
      if (bn_a.size() != bn_b.size()) {
        throw CliError{kExitInput, "--a and --b must have the same length", "--b"};
      }
      LibString flags;
      check(gradalg_construct_bn(field.c_str(), poly_p.c_str(), bn_a.data(), bn_b.data(),
                                 bn_a.size(), ring.out(), flags.out()));
      emit_construction(ring, flags);
      return 0;
    }
    write_out(out.str());
    return 0;
  } catch (const CliError& e) {
    report_error(e);
    return e.code;
  }
}
