#include "berktree/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace berktree {

int NewtonPolygon::total_multiplicity() const {
  int n = 0;
  for (const auto& s : slopes_) n += s.multiplicity;
  return n;
}

NewtonPolygon newton_polygon(const KPoly& f, bool drop_zero_roots) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");

  int deg = f.degree();
  std::vector<std::pair<int, Valuation>> pts;
  for (int i = 0; i <= deg; ++i) {
    FieldElt c = f.coeff(i);
    if (!c.is_zero()) pts.emplace_back(i, valuation(c));
  }
  int ord = pts.front().first;  // multiplicity of the zero root

  std::vector<NewtonSlope> slopes;
  // Walk the lower hull from (ord, v_ord) to (deg, v_deg): at each vertex
  // take the candidate minimizing the slope, preferring the farthest point
  // on ties so collinear segments merge.
  size_t cur = 0;
  while (pts[cur].first < deg) {
    size_t best = cur + 1;
    Rational best_slope;
    bool have = false;
    for (size_t j = cur + 1; j < pts.size(); ++j) {
      Rational s = (pts[j].second.value() - pts[cur].second.value()) /
                   Rational(pts[j].first - pts[cur].first);
      // `<=` keeps the farthest endpoint among equal slopes.
      if (!have || s <= best_slope) {
        best = j;
        best_slope = s;
        have = true;
      }
    }
    slopes.push_back(NewtonSlope{Valuation(Rational(-best_slope)),
                                 pts[best].first - pts[cur].first});
    cur = best;
  }

  if (!drop_zero_roots && ord > 0)
    slopes.push_back(NewtonSlope{Valuation::infinity(), ord});

  std::sort(slopes.begin(), slopes.end(), [](const NewtonSlope& a, const NewtonSlope& b) {
    return a.root_valuation < b.root_valuation;
  });
  // Merge equal valuations (possible after reordering).
  std::vector<NewtonSlope> merged;
  for (const auto& s : slopes) {
    if (!merged.empty() && merged.back().root_valuation == s.root_valuation)
      merged.back().multiplicity += s.multiplicity;
    else
      merged.push_back(s);
  }
  return NewtonPolygon(std::move(merged));
}

std::vector<AbsValue> conjugate_distances(const ExtField& K) {
  if (K.kind() != FieldKind::eisenstein)
    throw std::invalid_argument("conjugate distances need an Eisenstein extension");
  if (K.degree() < 2) throw std::invalid_argument("degree must be at least 2");

  KPoly shifted = taylor_shift(KPoly::lift(K.defining_poly(), K), K.generator());
  NewtonPolygon np = newton_polygon(shifted, /*drop_zero_roots=*/true);

  std::vector<AbsValue> out;
  for (const auto& s : np.slopes())
    for (int i = 0; i < s.multiplicity; ++i)
      out.push_back(AbsValue::from_exponent(s.root_valuation));
  std::sort(out.begin(), out.end(), [](const AbsValue& a, const AbsValue& b) { return b < a; });
  return out;
}

}  // namespace berktree
