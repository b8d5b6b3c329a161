#pragma once

namespace relhyd {

/// log Gamma(x), x > 0.
double log_gamma(double x);

/// Gamma(x), x > 0.
double gamma_fn(double x);

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b).
double beta_fn(double a, double b);

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a),
/// a > 0, x >= 0.  Series for x < a+1, continued fraction otherwise.
double gamma_p(double a, double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double beta_inc(double a, double b, double x);

} // namespace relhyd
