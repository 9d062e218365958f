#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "jointrank/rng.hpp"

namespace jointrank {

// Coefficients of Y = a + bZ + cZ^2 + dZ^3 with E[Y]=0, Var[Y]=1 and the
// requested skewness / excess kurtosis; a = -c always.
struct FleishmanCoeffs {
    double a = 0.0;
    double b = 1.0;
    double c = 0.0;
    double d = 0.0;
};

// Residuals of the three moment equations at (b, c, d); zero at a solution.
std::array<double, 3> fleishman_residuals(double b, double c, double d, double skewness,
                                          double excess_kurtosis);

// Damped Newton solve from (1, skewness/6, 0); throws NumericalError when the
// target moments are outside the feasible region.
FleishmanCoeffs fleishman_coefficients(double skewness, double excess_kurtosis);

// location + scale * (a + bZ + cZ^2 + dZ^3); nullopt coefficients = standard
// normal pass-through.
std::vector<double> sample_group(const std::optional<FleishmanCoeffs>& coeffs, std::size_t n,
                                 double location, double scale, Rng& rng);

}  // namespace jointrank
