// Command line front end: Galois fixed points on the Bruhat-Tits tree of
// SL2 inside the Berkovich line, the retraction onto the rational building,
// the apartment unit test, and the seminorm calculus on split tori and the
// additive group. Exit codes: 0 success, 2 input validation failure,
// 3 property-sweep assertion failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "berktree/ascii_figure.hpp"
#include "berktree/bt_tree.hpp"
#include "berktree/hopf_norms.hpp"
#include "berktree/json_io.hpp"
#include "berktree/poly_text.hpp"
#include "berktree/sampling.hpp"

namespace {

using namespace berktree;

std::vector<Rational> parse_weight_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Valuation v = parse_valuation(item);
    if (v.is_infinite()) throw std::invalid_argument("weights must be finite exponents");
    out.push_back(v.value());
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

// --- subcommand bodies ------------------------------------------------------

int run_fixed_points(unsigned long p, const std::string& poly, bool json, bool ascii) {
  GaloisOrbitReport rep = galois_fixed_report(p, parse_poly(poly));
  if (json) {
    emit(galois_report_to_json(rep));
    return 0;
  }
  if (ascii) {
    std::cout << fixed_point_figure(rep);
    return 0;
  }
  std::cout << "p = " << rep.p << ", P = " << format_poly(rep.defining_poly) << ", e = " << rep.e
            << "\n";
  std::cout << "r  = " << rep.r.str(p) << "  (orbit diameter, exponent " << rep.r.exponent().str()
            << ")\n";
  std::cout << "r' = " << rep.r_prime.str(p) << "  (distance to the base field, exponent "
            << rep.r_prime.exponent().str() << ")\n";
  if (rep.fixed_segment) {
    std::cout << "fixed segment: [" << rep.fixed_segment->from.str(p) << ", "
              << rep.fixed_segment->to.str(p) << ")  Galois-fixed, outside B(SL2,Q_" << p << ")\n";
  } else {
    std::cout << "fixed segment: empty (the meet point already lies in the building)\n";
  }
  std::cout << "conditions: paths-outside=" << yesno(rep.cond_paths_outside)
            << " open-ball=" << yesno(rep.cond_open_ball) << " q-roots=" << yesno(rep.cond_q_roots)
            << " e-vanishes=" << yesno(rep.cond_e_vanishes) << "\n";
  std::cout << "Q reduction: " << rep.q_reduction.str("U") << "\n";
  return 0;
}

BerkPoint point_from_flags(unsigned long p, const std::string& poly, const std::string& center,
                           const std::string& radius_exp) {
  ExtField K = poly.empty() ? ExtField::rationals(p) : ExtField::make(p, parse_poly(poly));
  FieldElt c = parse_element(center, K);
  return eta(c, AbsValue::from_exponent(parse_valuation(radius_exp)));
}

int run_tau(unsigned long p, const std::string& poly, const std::string& center,
            const std::string& radius_exp, bool json) {
  BerkPoint x = point_from_flags(p, poly, center, radius_exp);
  BerkPoint t = retract(x);
  if (json) {
    emit(Json{{"input", berk_point_to_json(x)}, {"tau", berk_point_to_json(t)}});
  } else {
    std::cout << "tau(" << x.str() << ") = " << t.str() << "\n";
  }
  return 0;
}

int run_in_building(unsigned long p, const std::string& poly, const std::string& center,
                    const std::string& radius_exp, bool json) {
  BerkPoint x = point_from_flags(p, poly, center, radius_exp);
  bool in = in_building(x);
  if (json) {
    emit(Json{{"point", berk_point_to_json(x)}, {"in_building", in}});
  } else {
    std::cout << (in ? "true" : "false") << "\n";
  }
  return 0;
}

int run_norm_eval(const std::string& family, unsigned long p, const std::string& weights,
                  const std::string& radius_exp, const std::string& poly, bool json) {
  AbsValue value;
  if (family == "torus") {
    MonomialNorm x(p, parse_weight_list(weights));
    value = norm_eval(parse_laurent(poly, x.rank()), x);
  } else if (family == "additive") {
    Valuation q = parse_valuation(radius_exp);
    BallNorm x(p, q.value());
    value = norm_eval(parse_poly(poly, "a"), x);
  } else {
    throw std::invalid_argument("unknown family: " + family + " (expected torus|additive)");
  }
  if (json) {
    emit(Json{{"value_exp", valuation_to_json(value.exponent())}});
  } else {
    std::cout << value.str(p) << "\n";
  }
  return 0;
}

int run_convolve(const std::string& family, unsigned long p, const std::string& a,
                 const std::string& b, bool json) {
  if (family == "torus") {
    MonomialNorm x(p, parse_weight_list(a));
    MonomialNorm y(p, parse_weight_list(b));
    MonomialNorm z = convolve(x, y);
    if (json) {
      emit(monomial_norm_to_json(z));
    } else {
      std::string out;
      for (const auto& q : z.weight_exps()) out += (out.empty() ? "" : ",") + q.get_str();
      std::cout << out << "\n";
    }
  } else if (family == "additive") {
    BallNorm x(p, parse_valuation(a).value());
    BallNorm y(p, parse_valuation(b).value());
    BallNorm z = convolve(x, y);
    if (json) {
      emit(ball_norm_to_json(z));
    } else {
      std::cout << z.radius_exp().get_str() << "\n";
    }
  } else {
    throw std::invalid_argument("unknown family: " + family + " (expected torus|additive)");
  }
  return 0;
}

int run_envelope_check(const std::string& family, unsigned long p, const std::string& weights,
                       const std::string& radius_exp, bool json) {
  EnvelopeCheck c;
  if (family == "torus") {
    c = envelope_check(MonomialNorm(p, parse_weight_list(weights)));
  } else if (family == "additive") {
    c = envelope_check(BallNorm(p, parse_valuation(radius_exp).value()));
  } else {
    throw std::invalid_argument("unknown family: " + family + " (expected torus|additive)");
  }
  if (json) {
    emit(envelope_to_json(c));
  } else {
    std::cout << "unit_ok=" << yesno(c.unit_ok) << " inv_ok=" << yesno(c.inv_ok)
              << " idem_ok=" << yesno(c.idem_ok) << " bounded_ok=" << yesno(c.bounded_ok) << "\n";
  }
  return 0;
}

int run_theorem_check(int rank, const std::string& weights, unsigned long p, bool json) {
  std::vector<Rational> w = parse_weight_list(weights);
  if (static_cast<int>(w.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " weights, got " +
                                std::to_string(w.size()));
  TorusTheoremReport rep = theorem_conditions_torus(MonomialNorm(p, std::move(w)));
  if (json) {
    emit(theorem_report_to_json(rep));
  } else {
    std::cout << "(i) universal=" << yesno(rep.universal)
              << " (ii) envelope=" << yesno(rep.envelope)
              << " (iii) dominates-shilov=" << yesno(rep.dominates_shilov)
              << " (iv) maximal=" << yesno(rep.maximal_in_family) << "\n";
    if (rep.witness_ii) std::cout << "witness for failed (ii): " << *rep.witness_ii << "\n";
    if (rep.witness_iii) std::cout << "witness for failed (iii): " << *rep.witness_iii << "\n";
    std::cout << (rep.is_shilov_point ? "this is the distinguished point o_T"
                                      : "not the distinguished point")
              << "\n";
  }
  return 0;
}

int run_apartment_test(unsigned long p, const std::string& center, const std::string& radius_exp,
                       bool json) {
  BerkPoint x = point_from_flags(p, "", center, radius_exp);
  ApartmentMoveWitness w = find_moving_unit(x);
  if (json) {
    emit(witness_to_json(w));
  } else {
    std::cout << "unit " << format_element(w.unit)
              << (w.extension_used ? " in " + w.extension_used->id() : " in the base field")
              << " moves the point to " << w.moved_to.str() << "\n";
  }
  return 0;
}

int run_sweep(const std::string& mode, int count, std::uint64_t seed, bool json) {
  SweepResult res = run_sweep(parse_sweep_mode(mode), count, seed);
  if (json) {
    Json j{{"mode", to_string(res.mode)},
           {"requested", res.requested},
           {"passes", res.passes},
           {"failures", res.failures},
           {"divergence_log", res.divergence_log}};
    emit(j);
  } else {
    std::cout << to_string(res.mode) << " sweep: " << res.passes << "/" << res.requested
              << " passed\n";
    for (const auto& line : res.divergence_log) std::cout << "note (d-divergence): " << line << "\n";
    for (const auto& line : res.failures) std::cout << "FAILED: " << line << "\n";
  }
  return res.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "berktree: Galois fixed points, retraction and apartment tests on the Bruhat-Tits tree of "
      "SL2 in the Berkovich line, and the seminorm calculus on split tori.\n"
      "Polynomials use the grammar `c*T^k` joined by +/- (coefficients as integers or n/d);\n"
      "elements of an extension use `alpha` for the class of T; torus Laurent polynomials use\n"
      "x1..xn with integer exponents; radii and weights are given as value-exponents q (the\n"
      "value is p^(-q)), written `3/2`, `-1`, or `inf`."};
  app.require_subcommand(1);

  int rc = 0;
  unsigned long p = 2;
  std::string poly, center, radius_exp, weights, family = "torus", mode = "tame", a, b;
  int rank = 1, count = 100;
  std::uint64_t seed = 0;
  bool json = false, ascii = false;

  auto guarded = [&rc](auto fn) {
    return [&rc, fn]() {
      try {
        rc = fn();
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
      }
    };
  };

  auto* fp = app.add_subcommand("fixed-points",
                                "Galois fixed-point report for an Eisenstein polynomial");
  fp->add_option("--p", p, "prime of the base field")->required();
  fp->add_option("--poly", poly, "Eisenstein polynomial in T")->required();
  fp->add_flag("--json", json, "machine output");
  fp->add_flag("--ascii", ascii, "ASCII figure of the paths and their meet");
  fp->callback(guarded([&]() { return run_fixed_points(p, poly, json, ascii); }));

  auto* tau = app.add_subcommand("tau", "retraction onto base-centered balls");
  tau->add_option("--p", p, "prime of the base field")->required();
  tau->add_option("--poly", poly, "defining polynomial of the extension (omit for the base field)");
  tau->add_option("--center", center, "center, an expression in alpha")->required();
  tau->add_option("--radius-exp", radius_exp, "radius exponent q (radius p^(-q)), or inf")
      ->required();
  tau->add_flag("--json", json, "machine output");
  tau->callback(guarded([&]() { return run_tau(p, poly, center, radius_exp, json); }));

  auto* ib = app.add_subcommand("in-building", "membership in the rational building");
  ib->add_option("--p", p, "prime of the base field")->required();
  ib->add_option("--poly", poly, "defining polynomial of the extension (omit for the base field)");
  ib->add_option("--center", center, "center, an expression in alpha")->required();
  ib->add_option("--radius-exp", radius_exp, "radius exponent q, must be finite")->required();
  ib->add_flag("--json", json, "machine output");
  ib->callback(guarded([&]() { return run_in_building(p, poly, center, radius_exp, json); }));

  auto* ne = app.add_subcommand("norm-eval", "evaluate a seminorm on a polynomial");
  ne->add_option("--family", family, "torus|additive")->required();
  ne->add_option("--p", p, "prime")->required();
  ne->add_option("--weights", weights, "torus weight exponents, comma separated");
  ne->add_option("--radius-exp", radius_exp, "ball radius exponent");
  ne->add_option("--poly", poly, "Laurent polynomial in x1..xn (torus) or polynomial in a")
      ->required();
  ne->add_flag("--json", json, "machine output");
  ne->callback(guarded([&]() { return run_norm_eval(family, p, weights, radius_exp, poly, json); }));

  auto* cv = app.add_subcommand("convolve", "convolution of two seminorms");
  cv->add_option("--family", family, "torus|additive")->required();
  cv->add_option("--p", p, "prime")->required();
  cv->add_option("--a", a, "first norm: weight exponents or radius exponent")->required();
  cv->add_option("--b", b, "second norm: weight exponents or radius exponent")->required();
  cv->add_flag("--json", json, "machine output");
  cv->callback(guarded([&]() { return run_convolve(family, p, a, b, json); }));

  auto* ec = app.add_subcommand("envelope-check", "envelope-subgroup conditions for a seminorm");
  ec->add_option("--family", family, "torus|additive")->required();
  ec->add_option("--p", p, "prime")->required();
  ec->add_option("--weights", weights, "torus weight exponents, comma separated");
  ec->add_option("--radius-exp", radius_exp, "ball radius exponent");
  ec->add_flag("--json", json, "machine output");
  ec->callback(guarded([&]() { return run_envelope_check(family, p, weights, radius_exp, json); }));

  auto* tc = app.add_subcommand("theorem-check",
                                "characterization conditions (i)-(iv) for a monomial norm");
  tc->add_option("--rank", rank, "torus rank")->required();
  tc->add_option("--weights", weights, "weight exponents, comma separated")->required();
  tc->add_option("--p", p, "prime (affects only value rendering)");
  tc->add_flag("--json", json, "machine output");
  tc->callback(guarded([&]() { return run_theorem_check(rank, weights, p, json); }));

  auto* at = app.add_subcommand("apartment-test",
                                "find a torus unit moving an off-apartment point");
  at->add_option("--p", p, "prime of the base field")->required();
  at->add_option("--center", center, "center in the base field")->required();
  at->add_option("--radius-exp", radius_exp, "radius exponent q")->required();
  at->add_flag("--json", json, "machine output");
  at->callback(guarded([&]() { return run_apartment_test(p, center, radius_exp, json); }));

  auto* sw = app.add_subcommand("sweep", "seeded property sweeps over random Eisenstein inputs");
  sw->add_option("--mode", mode, "tame|wild-prime|equivalence")->required();
  sw->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
  sw->add_option("--seed", seed, "random seed");
  sw->add_flag("--json", json, "machine output");
  sw->callback(guarded([&]() { return run_sweep(mode, count, seed, json); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
