#pragma once

#include <utility>
#include <vector>

#include "berktree/hopf_norms.hpp"
#include "berktree/sampling.hpp"

namespace berktree::testutil {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// A random invertible G together with its inverse, built from elementary
/// row operations with small and p-power coefficients.
inline std::pair<Matrix, Matrix> random_invertible(Rng& rng, size_t n, unsigned long p) {
  Matrix g = identity_matrix(n);
  Matrix ginv = identity_matrix(n);
  std::vector<Rational> lambdas{Rational(1),  Rational(-1), Rational(2),
                                Rational(-2), Rational(static_cast<long>(p)),
                                make_rational(1, static_cast<long>(p))};
  int ops = static_cast<int>(rng.uniform(1, 6));
  for (int k = 0; k < ops; ++k) {
    size_t i = static_cast<size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    size_t j = static_cast<size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i == j) {
      // Scale row i by a p-power unit times +-1.
      const Rational& lambda = rng.pick(lambdas);
      for (size_t c = 0; c < n; ++c) g[i][c] *= lambda;
      for (size_t c = 0; c < n; ++c) ginv[c][i] /= lambda;
    } else {
      // row_i += lambda row_j on G; the inverse absorbs the opposite
      // column operation.
      const Rational& lambda = rng.pick(lambdas);
      for (size_t c = 0; c < n; ++c) g[i][c] += lambda * g[j][c];
      for (size_t r = 0; r < n; ++r) ginv[r][j] -= lambda * ginv[r][i];
    }
  }
  return {g, ginv};
}

/// Transforms the canonical decomposition sum_i b_i (x) c_i into the
/// equivalent decomposition with b'_j = sum_i G_ji b_i and
/// c'_j = sum_i (G^-T)_ji c_i; the represented tensor is unchanged.
inline std::vector<std::pair<RatPoly, RatPoly>> transformed_decomposition(
    const std::vector<std::pair<RatPoly, RatPoly>>& canonical, const Matrix& g,
    const Matrix& ginv) {
  size_t n = canonical.size();
  std::vector<std::pair<RatPoly, RatPoly>> out;
  out.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    RatPoly b, c;
    for (size_t i = 0; i < n; ++i) {
      b = b + canonical[i].first * g[j][i];
      c = c + canonical[i].second * ginv[i][j];  // (G^-T)_{ji} = (G^-1)_{ij}
    }
    out.emplace_back(std::move(b), std::move(c));
  }
  return out;
}

/// Sanity route for the transformation: expands both decompositions as
/// two-variable coefficient tables and compares.
inline bool same_tensor(const std::vector<std::pair<RatPoly, RatPoly>>& a,
                        const std::vector<std::pair<RatPoly, RatPoly>>& b) {
  auto expand = [](const std::vector<std::pair<RatPoly, RatPoly>>& dec) {
    std::vector<std::vector<Rational>> t;
    for (const auto& [f, g] : dec) {
      for (int i = 0; i <= f.degree(); ++i) {
        if (static_cast<size_t>(i) >= t.size()) t.resize(static_cast<size_t>(i) + 1);
        for (int j = 0; j <= g.degree(); ++j) {
          auto& row = t[static_cast<size_t>(i)];
          if (static_cast<size_t>(j) >= row.size()) row.resize(static_cast<size_t>(j) + 1, Rational(0));
          row[static_cast<size_t>(j)] += f.coeff(i) * g.coeff(j);
        }
      }
    }
    for (auto& row : t)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!t.empty() && t.back().empty()) t.pop_back();
    return t;
  };
  return expand(a) == expand(b);
}

}  // namespace berktree::testutil
