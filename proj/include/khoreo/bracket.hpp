// Kauffman bracket state sum with writhe normalization, already substituted
// into the q variable.  This is the oracle side of the graded Euler
// characteristic identity; it shares only parse/resolve with the homology
// path.
#pragma once

#include "khoreo/complex.hpp"
#include "khoreo/laurent.hpp"
#include "khoreo/resolution.hpp"

namespace khoreo {

// (q^-1 + q) * V(L) under sqrt(t) = -q, computed without any homology.
inline LaurentPoly jones_bracket(const Diagram& d, int max_crossings = kDefaultCrossingCap) {
  const int c = d.crossing_count();
  if (c > max_crossings) throw CapExceeded("jones_bracket: crossing limit exceeded");

  LaurentPoly circle;  // q + q^-1
  circle.add(1, 1);
  circle.add(-1, 1);

  // loop value powers up to the maximum possible circle count
  std::vector<LaurentPoly> circle_pow(2 * c + d.unknot_components() + 2);
  circle_pow[0].add(0, 1);
  for (std::size_t k = 1; k < circle_pow.size(); ++k)
    circle_pow[k] = circle_pow[k - 1] * circle;

  LaurentPoly sum;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << c); ++s) {
    int w = __builtin_popcount(s);
    int circles = resolve(d, State{s}).n_circles();
    const LaurentPoly& term = circle_pow.at(circles);
    for (auto& [deg, coeff] : term.terms())
      sum.add(deg + w, (w % 2) ? -coeff : coeff);  // times (-q)^{|s|}
  }

  auto [x, y] = d.crossing_counts();
  LaurentPoly out;
  for (auto& [deg, coeff] : sum.terms())
    out.add(deg + y - 2 * x, (x % 2) ? -coeff : coeff);  // times (-1)^x q^{y-2x}
  return out;
}

// Graded Euler characteristic identity: Kh(-1, q) equals the bracket oracle.
inline bool verify_jones(const Diagram& d, int max_crossings = kDefaultCrossingCap,
                         int jobs = 0) {
  auto table = homology_table(d, khovanov_frobenius(), max_crossings, jobs);
  return kh_polynomial(table).at_t_minus_one() == jones_bracket(d, max_crossings);
}

}  // namespace khoreo
