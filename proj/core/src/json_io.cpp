#include "berktree/json_io.hpp"

#include <stdexcept>

#include "berktree/poly_text.hpp"

namespace berktree {

namespace {

long to_long_checked(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::domain_error(std::string(what) + " out of serializable range");
  return z.get_si();
}

Json rational_to_json(const Rational& q) {
  return Json{{"num", to_long_checked(q.get_num(), "numerator")},
              {"den", to_long_checked(q.get_den(), "denominator")}};
}

Rational rational_from_json(const Json& j) {
  return make_rational(Integer(j.at("num").get<long>()), Integer(j.at("den").get<long>()));
}

}  // namespace

Json valuation_to_json(const Valuation& v) {
  if (v.is_infinite()) return Json("inf");
  return rational_to_json(v.value());
}

Valuation valuation_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Valuation::infinity();
    throw std::invalid_argument("bad valuation literal: " + j.dump());
  }
  return Valuation(rational_from_json(j));
}

Json berk_point_to_json(const BerkPoint& x) {
  Json center = Json::array();
  for (const auto& c : x.center().coords()) center.push_back(rational_to_json(c));
  return Json{{"center", center},
              {"radius_exp", valuation_to_json(x.radius().exponent())},
              {"field", x.context().id()}};
}

BerkPoint berk_point_from_json(const Json& j) {
  ExtField K = parse_field_id(j.at("field").get<std::string>());
  std::vector<Rational> coords;
  for (const auto& c : j.at("center")) coords.push_back(rational_from_json(c));
  return BerkPoint(K.element(std::move(coords)),
                   AbsValue::from_exponent(valuation_from_json(j.at("radius_exp"))));
}

Json galois_report_to_json(const GaloisOrbitReport& r) {
  Json seg;
  if (r.fixed_segment) {
    seg = Json{{"from_exp", valuation_to_json(r.fixed_segment->from.exponent())},
               {"to_exp", valuation_to_json(r.fixed_segment->to.exponent())},
               {"closed_open", true}};
  } else {
    seg = nullptr;
  }
  Json reduction = Json::array();
  for (int i = 0; i <= r.q_reduction.degree(); ++i)
    reduction.push_back(static_cast<long>(r.q_reduction.coeff(i)));
  return Json{{"p", r.p},
              {"poly", format_poly(r.defining_poly, "T")},
              {"e", r.e},
              {"r_exp", valuation_to_json(r.r.exponent())},
              {"r_prime_exp", valuation_to_json(r.r_prime.exponent())},
              {"fixed_segment", seg},
              {"cond_paths_outside", r.cond_paths_outside},
              {"cond_open_ball", r.cond_open_ball},
              {"cond_q_roots", r.cond_q_roots},
              {"cond_e_vanishes", r.cond_e_vanishes},
              {"q_reduction", reduction}};
}

Json monomial_norm_to_json(const MonomialNorm& x) {
  Json w = Json::array();
  for (const auto& q : x.weight_exps()) w.push_back(rational_to_json(q));
  return Json{{"family", "torus"}, {"weights_exp", w}};
}

Json ball_norm_to_json(const BallNorm& x) {
  return Json{{"family", "additive"}, {"radius_exp", rational_to_json(x.radius_exp())}};
}

NormJson norm_from_json(const Json& j, unsigned long p) {
  NormJson out;
  std::string family = j.at("family").get<std::string>();
  if (family == "torus") {
    std::vector<Rational> w;
    for (const auto& q : j.at("weights_exp")) w.push_back(rational_from_json(q));
    out.torus = MonomialNorm(p, std::move(w));
  } else if (family == "additive") {
    out.additive = BallNorm(p, rational_from_json(j.at("radius_exp")));
  } else {
    throw std::invalid_argument("unknown norm family: " + family);
  }
  return out;
}

Json envelope_to_json(const EnvelopeCheck& c) {
  return Json{{"unit_ok", c.unit_ok},
              {"inv_ok", c.inv_ok},
              {"idem_ok", c.idem_ok},
              {"bounded_ok", c.bounded_ok}};
}

Json theorem_report_to_json(const TorusTheoremReport& r) {
  return Json{{"cond_i_universal", r.universal},
              {"cond_ii_envelope", r.envelope},
              {"cond_iii_dominates_shilov", r.dominates_shilov},
              {"cond_iv_maximal", r.maximal_in_family},
              {"maximality_scope", "monomial-family"},
              {"witness_ii", r.witness_ii ? Json(*r.witness_ii) : Json(nullptr)},
              {"witness_iii", r.witness_iii ? Json(*r.witness_iii) : Json(nullptr)},
              {"is_shilov_point", r.is_shilov_point}};
}

Json witness_to_json(const ApartmentMoveWitness& w) {
  return Json{{"unit", format_element(w.unit)},
              {"extension_used", w.extension_used ? Json(w.extension_used->id()) : Json(nullptr)},
              {"moved_to", berk_point_to_json(w.moved_to)}};
}

}  // namespace berktree
