#include "berktree/ascii_figure.hpp"

#include <sstream>

#include "berktree/poly_text.hpp"

namespace berktree {

std::string fixed_point_figure(const GaloisOrbitReport& rep) {
  std::ostringstream out;
  std::string r = rep.r.str(rep.p);
  std::string rp = rep.r_prime.str(rep.p);
  std::string base = "Q_" + std::to_string(rep.p);

  out << "P = " << format_poly(rep.defining_poly, "T") << " over " << base
      << ", e = " << rep.e << "\n\n";
  if (rep.e == 2) {
    out << "   alpha         alpha^g\n";
    out << "      \\           /\n";
    out << "       \\         /\n";
  } else {
    out << "   alpha^g, g in Gal   (" << rep.e << " conjugate paths)\n";
    out << "       \\   |   /\n";
    out << "        \\  |  /\n";
  }
  if (rep.fixed_segment) {
    out << "        x' = eta(alpha; " << r << ")    meet of the paths; Galois-fixed\n";
    out << "        |\n";
    out << "        |  Galois-fixed segment [" << r << ", " << rp << ")  outside B(SL2," << base
        << ")\n";
    out << "        |\n";
    out << "        tau(alpha) = eta(alpha; " << rp << ")    enters B(SL2," << base << ")\n";
  } else {
    out << "        x' = eta(alpha; " << r << ") = tau(alpha)    meet; already in B(SL2," << base
        << ")\n";
  }
  out << "        |\n";
  out << "        eta(0; 1)    Gauss point\n";
  out << "        |\n";
  out << "        v   apartment {eta(0; r)}\n";
  return out.str();
}

}  // namespace berktree
