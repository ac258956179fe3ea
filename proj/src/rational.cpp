#include "rap/rational.hpp"

#include <cmath>
#include <limits>

namespace rap {

double integer_distance(double x) { return std::fabs(x - std::round(x)); }

std::optional<Rational> rational_detect(double x, double tol, long long max_den,
                                        double sharpness) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents p_k/q_k of x, ascending in q.
  double rem = x;
  long long p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  long long p = 0, q = 1;            // dummy p_{-2}/q_{-2} after first step
  bool first = true;
  for (int k = 0; k < 64; ++k) {
    double fl = std::floor(rem);
    if (fl > 9e17 || fl < -9e17) break;
    long long a = static_cast<long long>(fl);
    long long pn, qn;
    if (first) {
      pn = a;
      qn = 1;
      first = false;
    } else {
      pn = a * p_prev + p;
      qn = a * q_prev + q;
    }
    if (qn > max_den) break;
    p = p_prev;
    q = q_prev;
    p_prev = pn;
    q_prev = qn;
    double approx = static_cast<double>(pn) / static_cast<double>(qn);
    double err = std::fabs(x - approx);
    double qd = static_cast<double>(qn);
    if (err <= tol && err <= sharpness / (qd * qd)) return Rational(pn, qn);
    double frac = rem - fl;
    if (frac < 1e-18) break;
    rem = 1.0 / frac;
    if (!std::isfinite(rem)) break;
  }
  return std::nullopt;
}

}  // namespace rap
