#pragma once

namespace lcaes::analysis {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation with
/// relative accuracy about 1e-12. Requires a, b > 0 and x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student t statistic with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

}  // namespace lcaes::analysis
