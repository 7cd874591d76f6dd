#pragma once

#include <spinlight/halfint.hpp>

namespace spinlight::angular {

/// ln(n!) from a table initialized once (thread safe); covers momenta
/// up to 2j = 200, falls back to lgamma beyond the table.
double ln_factorial(int n);

/// Wigner 3j symbol via the Racah single-sum formula with log-factorial
/// accumulation. Selection-rule failures (triangle, m1+m2+m3 != 0) return 0.
/// Malformed projections throw std::invalid_argument.
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3);

/// Clebsch-Gordan coefficient C^{JM}_{j1 m1, j2 m2}. Zero on selection-rule
/// failure, consistent with wigner_3j via the standard phase relation.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

/// Wigner 6j symbol {a b c; d e f} via the Racah sum. Zero when any of the
/// four triads violates the triangle rule.
double wigner_6j(HalfInt a, HalfInt b, HalfInt c,
                 HalfInt d, HalfInt e, HalfInt f);

}  // namespace spinlight::angular
