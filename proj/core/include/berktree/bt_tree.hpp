#pragma once

#include <optional>
#include <vector>

#include "berktree/berkovich.hpp"
#include "berktree/newton.hpp"

namespace berktree {

/// Distance d(x, k) from an element of a totally ramified extension to the
/// base field, as a valuation exponent: min over i >= 1 of v(b_i a^i) in
/// coordinates, infinity when x already lies in k. The basis 1, a, ...,
/// a^(e-1) has pairwise distinct valuations mod 1, which makes this the
/// exact minimum of v(x - c) over c in k, attained at the constant
/// coordinate.
Valuation distance_to_base(const FieldElt& x);

/// The retraction onto base-centered balls: the maximal point of the
/// smallest ball with center in k containing x. Pre: context of x is the
/// base itself or an Eisenstein extension of it (unramified contexts are
/// rejected).
BerkPoint retract(const BerkPoint& x);

/// Membership in the rational building (the convex hull of the base
/// rational points, rational points themselves omitted): retract(x) == x.
/// Pre: radius positive; type-1 points are rejected.
bool in_building(const BerkPoint& x);

/// Radius range [from, to) in value terms, closed at `from` (the meet of
/// the conjugate paths), open at `to` (where the paths enter the building).
struct FixedSegment {
  AbsValue from;
  AbsValue to;
};

/// The Galois fixed-point analysis of a totally ramified extension
/// presented by an Eisenstein polynomial: orbit diameter r, distance to the
/// base r', the segment of Galois-fixed points outside the rational
/// building, and the four equivalence-criterion flags (reported
/// independently, never coerced to agree).
struct GaloisOrbitReport {
  unsigned long p = 0;
  RatPoly defining_poly;
  int e = 0;
  AbsValue r;                               // orbit diameter max |a^g - a|
  AbsValue r_prime;                         // d(a, k) = |a|
  std::optional<FixedSegment> fixed_segment;  // present iff r < r'
  bool cond_paths_outside = false;  // (a) conjugate paths meet outside the building
  bool cond_open_ball = false;      // (b) all conjugates inside D(a, |a|)
  bool cond_q_roots = false;        // (c) all roots of the rescaled polynomial in D(1, 1)
  bool cond_e_vanishes = false;     // (d) residue characteristic divides e
  FpPoly q_reduction{2};            // residue reduction of the rescaled polynomial
};

GaloisOrbitReport galois_fixed_report(unsigned long p, const RatPoly& eisenstein_poly);

/// The defining polynomial rescaled by its root: U -> P(a U)/a_0, a degree-e
/// polynomial over K with unit roots and constant term 1, together with its
/// residue reduction (which works out to 1 - U^e).
struct RescaledPoly {
  KPoly q;
  FpPoly reduction;
};
RescaledPoly rescaled_eisenstein_poly(const ExtField& K);

/// Galois conjugation on points over a quadratic extension, induced by
/// a -> -a_1 - a on centers; radii are preserved (the action is isometric).
/// Pre: degree 2.
BerkPoint galois_conjugate(const BerkPoint& x);

/// The diagonal torus action in the standard chart, z -> t^2 z on centers:
/// E(a, r) -> E(t^2 a, |t|^2 r). Pre: t != 0.
BerkPoint apartment_action(const FieldElt& t, const BerkPoint& x);

/// Witness that a point off the standard apartment is moved by a unit of
/// the diagonal torus.
struct ApartmentMoveWitness {
  FieldElt unit;
  std::optional<ExtField> extension_used;
  BerkPoint moved_to;
};

/// For x = E(a, r) over the base field with |a| > r, finds a unit t with
/// |t^2 - 1| |a| > r: base-field residue representatives are tried first,
/// then the generator of the quadratic unramified extension (whose residue
/// square is never 1, so it always moves). On-apartment inputs (|a| <= r)
/// are rejected: no such unit exists.
ApartmentMoveWitness find_moving_unit(const BerkPoint& x);

/// The quadratic unramified extension of Q_p: T^2+T+1 for p = 2, T^2 - n
/// with n the smallest quadratic nonresidue for odd p.
ExtField quadratic_unramified(unsigned long p);

}  // namespace berktree
