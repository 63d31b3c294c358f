#pragma once

#include <nlohmann/json.hpp>

#include "berktree/berkovich.hpp"
#include "berktree/bt_tree.hpp"
#include "berktree/hopf_norms.hpp"

namespace berktree {

/// All machine output preserves insertion order so that parse/re-serialize
/// round trips are byte-identical.
using Json = nlohmann::ordered_json;

/// Valuations serialize as {"num": int, "den": int} or the string "inf".
Json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

Json berk_point_to_json(const BerkPoint& x);
BerkPoint berk_point_from_json(const Json& j);

Json galois_report_to_json(const GaloisOrbitReport& r);

Json monomial_norm_to_json(const MonomialNorm& x);
Json ball_norm_to_json(const BallNorm& x);
/// Parses either norm family from {"family": "torus"|"additive", ...};
/// exactly one of the results is set.
struct NormJson {
  std::optional<MonomialNorm> torus;
  std::optional<BallNorm> additive;
};
NormJson norm_from_json(const Json& j, unsigned long p);

Json envelope_to_json(const EnvelopeCheck& c);
Json theorem_report_to_json(const TorusTheoremReport& r);
Json witness_to_json(const ApartmentMoveWitness& w);

}  // namespace berktree
