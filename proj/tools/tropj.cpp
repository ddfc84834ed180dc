#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tropj/jinv.hpp"
#include "tropj/jsonio.hpp"
#include "tropj/tropcurve.hpp"

using namespace tropj;

namespace {

// splitmix64: deterministic cross-platform sampling
struct Sampler {
  uint64_t state;
  explicit Sampler(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

HeightVector worked_example_heights() {
  const char* vals[10] = {"0", "1", "100", "100", "1", "100", "1", "1", "3", "7"};
  HeightVector u;
  for (size_t k = 0; k < 10; ++k) u[k] = Rational::parse(vals[k]);
  return u;
}

std::string heights_str(const HeightVector& u) {
  std::string s = "(";
  for (size_t k = 0; k < 10; ++k) {
    if (k) s += ", ";
    s += ext_str(u[k]);
  }
  return s + ")";
}

// Valuations of the coefficients; indeterminate ones abort the command.
HeightVector cubic_heights(const PuiseuxCubic& f) {
  HeightVector u;
  for (size_t k = 0; k < 10; ++k) {
    if (f[k].is_exactly_zero())
      u[k] = std::nullopt;
    else
      u[k] = f[k].valuation_info().valuation;
  }
  return u;
}

HeightVector load_input(const std::string& heights_path, const std::string& cubic_path,
                        PuiseuxCubic* cubic_out) {
  if (!heights_path.empty()) return parse_heights_json(read_file(heights_path));
  PuiseuxCubic f = parse_cubic_json(read_file(cubic_path));
  if (cubic_out) *cubic_out = f;
  return cubic_heights(f);
}

std::string cycle_line(bool has_cycle, bool generalized, const Rational& length) {
  if (has_cycle) return "cycle length = " + length.str();
  if (generalized) return "generalized cycle length = " + length.str();
  return "no cycle; length = 0";
}

int cmd_tropicalize(const std::string& heights_path, const std::string& cubic_path,
                    const std::string& svg_out, const std::string& json_out) {
  HeightVector u = load_input(heights_path, cubic_path, nullptr);
  TropicalCurve curve = dual_curve(u);
  if (!json_out.empty()) {
    write_file(json_out, curve_to_json(curve));
    std::cout << "wrote " << json_out << "\n";
  }
  if (!svg_out.empty()) {
    write_file(svg_out, render_svg(curve));
    std::cout << "wrote " << svg_out << "\n";
  }
  CycleReport rep = cycle_report(u);
  std::cout << cycle_line(rep.has_cycle, rep.generalized, rep.length) << "\n";
  return 0;
}

int cmd_jval(const std::string& heights_path, const std::string& cubic_path) {
  PuiseuxCubic f;
  bool have_cubic = !cubic_path.empty();
  HeightVector u = load_input(heights_path, cubic_path, &f);
  std::cout << "val_u(A) = " << generic_valuation(j_numerator(), u).str() << "\n";
  std::cout << "val_u(Delta) = " << generic_valuation(cubic_discriminant(), u).str() << "\n";
  std::cout << "val_u(j) = " << generic_jval(u).str() << "\n";
  if (have_cubic) {
    ValuedScalar j = evaluate_j(f);
    std::cout << "val(j(f)) = " << ext_str(j.valuation) << "\n";
    std::cout << "lc(j(f)) = " << j.leading.str() << "\n";
  }
  return 0;
}

int cmd_verify(long samples, uint64_t seed) {
  if (samples < 1) {
    std::cout << "error: --samples must be at least 1\n";
    return 1;
  }
  Sampler rng(seed);
  long failures = 0;
  for (long i = 1; i <= samples; ++i) {
    HeightVector u;
    if (i == 1) {
      u = worked_example_heights();  // the known example is always sample one
    } else {
      do {
        for (size_t k = 0; k < 10; ++k) {
          Rational h(rng.int_in(-20, 20));
          if (rng.int_in(0, 1)) h += Rational(rng.int_in(-3, 3), rng.int_in(1, 8));
          u[k] = h;
        }
      } while (!in_visibility_cone(u));
    }
    JvalCycleReport rep = check_jval_matches_cycle(u);
    if (!rep.applicable || !rep.pass) {
      ++failures;
      std::cout << "sample " << i << " FAIL: u = " << heights_str(u)
                << ", -val_u(j) = " << (-rep.jval).str()
                << ", cycle length = " << rep.cycle.str() << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " of " << samples << " samples failed\n";
    return 2;
  }
  std::cout << "verified " << samples
            << " samples: -val_u(j) = cycle length on every one\n";
  return 0;
}

int cmd_rays() {
  bool ok = true;
  std::vector<RayInfo> infos = enumerate_rays();
  for (const RayInfo& info : infos) {
    std::cout << info.label << "  (orbit size " << info.orbit_size << ")\n";
    std::cout << "  u = " << heights_str(info.heights) << "\n";
    RayClass back = classify_ray(info.subdivision);
    if (!(back == info.ray)) {
      std::cout << "  ERROR: witness classifies as " << ray_type_name(back.type) << "\n";
      ok = false;
    }
    CycleReport rep = cycle_report(info.heights);
    if (rep.has_cycle || rep.generalized) {
      Rational jv = generic_jval(info.heights);
      std::cout << "  " << cycle_line(rep.has_cycle, rep.generalized, rep.length)
                << ", -val_u(j) = " << (-jv).str() << "\n";
      if (-jv != rep.length) {
        std::cout << "  ERROR: length and valuation disagree\n";
        ok = false;
      }
    } else {
      std::cout << "  no cycle\n";
    }
  }
  if (!ok) return 2;
  std::cout << infos.size()
            << " ray classes; witnesses classify back; lengths match the valuations\n";
  return 0;
}

int cmd_shift(const std::string& bstr) {
  Rational b = Rational::parse(bstr);
  ShiftReport r = shift_experiment(b);
  std::cout << "b = " << b.str() << "\n";
  std::cout << "shifted coefficient valuations:\n";
  for (size_t k = 0; k < 10; ++k)
    std::cout << "  u" << kCubicNames[k].substr(1) << " = " << ext_str(r.heights[k]) << "\n";
  std::cout << "subdivision: " << r.subdivision.str() << "\n";
  MarkedSubdivision large_b = regular_subdivision(worked_example_heights());
  std::cout << (r.subdivision == large_b ? "subdivision matches the b >= 2 regime"
                                         : "subdivision differs from the b >= 2 regime")
            << "\n";
  std::cout << cycle_line(r.has_cycle, r.generalized, r.cycle_length) << "\n";
  std::cout << "val_u(j) = " << r.jval_generic.str() << "\n";
  std::cout << "val(j(f)) = " << ext_str(r.j_value.valuation) << "\n";
  std::cout << "lc(j(f)) = " << r.j_value.leading.str() << "\n";
  std::cout << "leading-term cancellation factor a01*a12 - a11*a02 = "
            << r.cancellation_factor.str() << "\n";
  std::cout << "t-initial form of Delta at the leading coefficients = "
            << r.delta_initial_value.str() << "\n";
  return 0;
}

int cmd_build_invariants() {
  const CubicInvariants& inv = cubic_invariants();
  std::cout << "S: " << inv.S.term_count() << " terms\n";
  std::cout << "A: " << inv.A.term_count() << " terms\n";
  std::cout << "Delta: " << inv.Delta.term_count() << " terms\n";
  std::cout << "certificates: " << inv.witness << "\n";
  return 0;
}

template <class F>
int guarded(F&& fn) {
  try {
    return fn();
  } catch (const TruncationInsufficient& e) {
    std::cout << "error: " << e.what() << "\n";
    return 3;
  } catch (const IndeterminateValuation& e) {
    std::cout << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropicalizations of plane cubics and their j-invariant"};
  app.require_subcommand(1);

  std::string heights_path, cubic_path, svg_out, json_out;
  auto add_input = [&](CLI::App* cmd) {
    auto* h = cmd->add_option("--heights", heights_path, "heights JSON file");
    auto* c = cmd->add_option("--cubic", cubic_path, "Puiseux cubic JSON file");
    h->excludes(c);
    c->excludes(h);
  };

  CLI::App* trop = app.add_subcommand(
      "tropicalize", "dual curve and cycle report of a height vector or cubic");
  add_input(trop);
  trop->add_option("--svg", svg_out, "write an SVG rendering here");
  trop->add_option("--json", json_out, "write the curve graph JSON here");

  CLI::App* jval = app.add_subcommand(
      "jval", "generic valuations of the invariants, and j for cubic input");
  add_input(jval);

  long samples = 100;
  uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "sample the visibility cone and compare -val_u(j) with the cycle length");
  verify->add_option("--samples", samples, "number of samples (>= 1)");
  verify->add_option("--seed", seed, "sampling seed");

  bool catalog = true;
  CLI::App* rays = app.add_subcommand(
      "rays", "catalogue of secondary-fan rays with annotated witnesses");
  rays->add_flag("--catalog", catalog, "print the full catalogue (default mode)");

  std::string bstr;
  CLI::App* shift = app.add_subcommand(
      "shift-experiment", "substitute x -> x + t^b into the worked example");
  shift->add_option("--b", bstr, "positive rational exponent p/q")->required();

  CLI::App* build = app.add_subcommand(
      "build-invariants", "construct (or load) S, A, Delta; cache path via TROPJ_CACHE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (trop->parsed() || jval->parsed()) {
    if (heights_path.empty() == cubic_path.empty()) {
      std::cout << "error: give exactly one of --heights or --cubic\n";
      return 1;
    }
  }
  if (trop->parsed())
    return guarded([&] { return cmd_tropicalize(heights_path, cubic_path, svg_out, json_out); });
  if (jval->parsed()) return guarded([&] { return cmd_jval(heights_path, cubic_path); });
  if (verify->parsed()) return guarded([&] { return cmd_verify(samples, seed); });
  if (rays->parsed()) return guarded([&] { return cmd_rays(); });
  if (shift->parsed()) return guarded([&] { return cmd_shift(bstr); });
  if (build->parsed()) return guarded([&] { return cmd_build_invariants(); });
  return 1;
}
