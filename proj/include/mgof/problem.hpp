#pragma once

#include <mgof/density.hpp>
#include <mgof/error.hpp>
#include <mgof/weight.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace mgof {

/// One goodness-of-fit task: Mellin line, weight, null f0 and error g_U.
struct TestProblem {
  double c;
  WeightFunction weight;
  MellinDensity null;
  MellinDensity error;

  TestProblem(double c_, WeightFunction w, MellinDensity f0, MellinDensity gu)
      : c(c_), weight(std::move(w)), null(std::move(f0)), error(std::move(gu)) {
    require(null.has_mellin(),
            "null density '" + null.name() + "' needs a closed-form Mellin transform");
    require(error.has_mellin(),
            "error density '" + error.name() + "' needs a closed-form Mellin transform");
    // probe M_c[g_U] != 0 on a coarse grid
    for (int i = 0; i <= 200; ++i) {
      const double t = 0.05 * i;
      if (std::abs(error.mellin(c, t)) == 0.0)
        throw PreconditionError("Mellin transform of the error vanishes at t = " +
                                std::to_string(t));
    }
  }

  /// |M_c[g_U](t)|^{-2} w^2(t): the per-frequency inversion penalty.
  double penalty(double t) const {
    return weight.w2(t) / std::norm(error.mellin(c, t));
  }
};

}  // namespace mgof
