#pragma once
// Built-in scenarios. Each exercises a distinct shape: free rings and
// quotients, adic and seeded filtrations, rescaled and quotient views, every
// task kind, and both verdicts of the Cohen-Macaulay comparison.

#include <string>

#include "fibercone/errors.hpp"
#include <utility>
#include <vector>

namespace fibercone {

inline const std::vector<std::pair<std::string, std::string>>& corpus() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"line",
       "# coordinate ring of a line; the simplest spread-one instance\n"
       "ring x\n"
       "ideal M = x\n"
       "filtration F = adic(M)\n"
       "task report F M\n"
       "task cor43-scan F\n"},

      {"plane",
       "# polynomial ring in two variables, filtered by the maximal ideal\n"
       "ring x y\n"
       "ideal M = x, y\n"
       "filtration F = adic(M)\n"
       "task report F M\n"},

      {"veronese-square",
       "# adic filtration of the squared maximal ideal; reduction number 1\n"
       "ring x y\n"
       "ideal M = x, y\n"
       "ideal I = x^2, x*y, y^2\n"
       "ideal C = x^2, y^2\n"
       "filtration F = adic(I)\n"
       "task report F M\n"
       "task reduction F C\n"},

      {"axis",
       "# principal filtration on a line with an embedded axis; the base\n"
       "# ideal has a nonzero annihilator, so the torsion route computes\n"
       "# the multiplicity\n"
       "ring x y mod x*y, y^2\n"
       "ideal M = x, y\n"
       "ideal I = x\n"
       "filtration F = adic(I)\n"
       "task report F M\n"
       "task multiplicity F M\n"},

      {"seeded-powers",
       "# seeded filtration I_1 = M^2, I_2 = M^3 with the tail rule beyond;\n"
       "# the product law fails at (2,2), so the declaration is unchecked.\n"
       "# both verdict routes agree that the fiber cone is not\n"
       "# Cohen-Macaulay: the parameter length exceeds the multiplicity\n"
       "ring x y\n"
       "ideal M = x, y\n"
       "ideal A = x^2, x*y, y^2\n"
       "ideal B = x^3, x^2*y, x*y^2, y^3\n"
       "filtration F = seeded([A; B], u=2, unchecked)\n"
       "task report F M\n"
       "task fc-sequence F M\n"},

      {"quartic-gap",
       "# quartic monomial ideal with a missing middle monomial; the\n"
       "# intersection condition fails at n = 2 and the parameter length\n"
       "# exceeds the multiplicity, so the fiber cone is not Cohen-Macaulay\n"
       "ring x y\n"
       "ideal M = x, y\n"
       "ideal I = x^4, x^3*y, x*y^3, y^4\n"
       "filtration F = adic(I)\n"
       "task report F M\n"},

      {"double-line",
       "# adic filtration of the maximal ideal on a double line; spread one\n"
       "# with a regular element, so the principal criterion applies\n"
       "ring x y mod x^2\n"
       "ideal M = x, y\n"
       "filtration F = adic(M)\n"
       "task report F M\n"
       "task cor43-scan F\n"},

      {"axis-rescale",
       "# rescaled view of the axis filtration: term(n) = base(3n)\n"
       "ring x y mod x*y, y^2\n"
       "ideal I = x\n"
       "ideal M = x, y\n"
       "filtration F = adic(I)\n"
       "filtration G = rescale(F, 3)\n"
       "task spread G\n"
       "task report G M\n"},

      {"fat-point",
       "# nilpotent: the filtration powers vanish, so multiplicity and\n"
       "# Cohen-Macaulay questions are skipped with a reason\n"
       "ring x y mod x^2, x*y, y^2\n"
       "ideal M = x, y\n"
       "filtration F = adic(M)\n"
       "task report F M\n"
       "task fc-sequence F M\n"},

      {"space-max",
       "# three variables, maximal-ideal filtration; spread three needs a\n"
       "# three-step sequence and three nested length comparisons\n"
       "ring x y z\n"
       "ideal M = x, y, z\n"
       "filtration F = adic(M)\n"
       "task report F M\n"},

      {"axis-scan",
       "# candidate certification plus the rescaling scan on the axis\n"
       "ring x y mod x*y, y^2\n"
       "ideal I = x\n"
       "ideal M = x, y\n"
       "filtration F = adic(I)\n"
       "task spread F\n"
       "task reduction F I\n"
       "task cor43-scan F\n"},
  };
  return c;
}

inline const std::string& corpus_text(const std::string& name) {
  for (auto& [n, text] : corpus())
    if (n == name) return text;
  throw precondition_error("unknown corpus scenario: " + name);
}

}  // namespace fibercone
