#include "gasketlab/special_functions.hpp"

#include <cmath>

namespace gasketlab::special {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_nome_open(double q) {
  if (!(q > 0.0) || !(q < 1.0) || std::isnan(q))
    throw std::domain_error("nome q must lie in (0,1)");
}

}  // namespace

double theta2(double q, const EvalPolicy& policy) {
  policy.validate();
  if (q == 0.0) return 0.0;
  if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("theta2: q must lie in [0,1)");
  // 2 q^{1/4} * sum_{n>=0} q^{n(n+1)}
  const double q2 = q * q;
  double sum = 0.0;
  double term = 1.0;       // q^{n(n+1)} at n = 0
  double ratio = q2;       // q^{2(n+1)}: term_{n+1} = term_n * ratio
  for (int n = 0;; ++n) {
    sum += term;
    if (term < policy.abs_tol && n >= 3) break;
    if (n + 1 >= policy.max_terms)
      throw NonConvergence("theta2: series cap exceeded (q too close to 1)");
    term *= ratio;
    ratio *= q2;
  }
  return 2.0 * std::pow(q, 0.25) * sum;
}

namespace {

// sum_{n>=1} s^n q^{n^2} with s = +1 or -1.
double theta34_tail(double q, double sign, const EvalPolicy& policy) {
  const double q2 = q * q;
  double sum = 0.0;
  double term = q;     // q^{n^2} at n = 1
  double ratio = q * q2;  // q^{2n+1}: term_{n+1} = term_n * ratio
  double sgn = sign;
  for (int n = 1;; ++n) {
    sum += sgn * term;
    if (term < policy.abs_tol && n >= 3) break;
    if (n + 1 >= policy.max_terms)
      throw NonConvergence("theta3/theta4: series cap exceeded (q too close to 1)");
    term *= ratio;
    ratio *= q2;
    sgn *= sign;
  }
  return sum;
}

}  // namespace

double theta3(double q, const EvalPolicy& policy) {
  policy.validate();
  if (q == 0.0) return 1.0;
  if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("theta3: q must lie in [0,1)");
  return 1.0 + 2.0 * theta34_tail(q, +1.0, policy);
}

double theta4(double q, const EvalPolicy& policy) {
  policy.validate();
  if (q == 0.0) return 1.0;
  if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("theta4: q must lie in [0,1)");
  return 1.0 + 2.0 * theta34_tail(q, -1.0, policy);
}

double theta3_minus_theta4(double q, const EvalPolicy& policy) {
  policy.validate();
  if (q == 0.0) return 0.0;
  if (!(q >= 0.0) || !(q < 1.0))
    throw std::domain_error("theta3_minus_theta4: q must lie in [0,1)");
  // 4 * sum over odd n >= 1 of q^{n^2}; successive ratio q^{(n+2)^2 - n^2} = q^{4n+4}.
  const double q4 = q * q * q * q;
  double sum = 0.0;
  double term = q;          // q^{n^2}, n = 1
  double ratio = q4 * q4;   // q^{4n+4} at n = 1
  for (int n = 1;; n += 2) {
    sum += term;
    if (term < policy.abs_tol * q && n >= 5) break;
    if (n >= 2 * policy.max_terms)
      throw NonConvergence("theta3_minus_theta4: series cap exceeded");
    term *= ratio;
    ratio *= q4 * q4;
  }
  return 4.0 * sum;
}

double elliptic_K(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) throw std::domain_error("elliptic_K: k must lie in [0,1)");
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < 60; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) <= 1e-17 * a) break;
  }
  return kPi / (2.0 * a);
}

double elliptic_Kprime(double k) {
  if (!(k > 0.0)) throw std::domain_error("elliptic_Kprime: diverges as k -> 0");
  if (!(k <= 1.0)) throw std::domain_error("elliptic_Kprime: k must lie in (0,1]");
  if (k == 1.0) return kPi / 2.0;
  // K(k') with k' = sqrt(1-k^2): AGM of (1, k).
  double a = 1.0;
  double b = k;
  for (int i = 0; i < 60; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) <= 1e-17 * a) break;
  }
  return kPi / (2.0 * a);
}

double complementary_nome(double q) {
  check_nome_open(q);
  return std::exp(kPi * kPi / std::log(q));
}

NomePair NomePair::from_modulus(double k) {
  if (!(k > 0.0) || !(k < 1.0)) throw std::domain_error("nome_from_k: k must lie in (0,1)");
  return from_modulus_pair(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

NomePair NomePair::from_modulus_pair(double k, double k_comp) {
  if (!(k > 0.0) || !(k <= 1.0) || !(k_comp > 0.0) || !(k_comp < 1.0))
    throw std::domain_error("nome_from_k: modulus pair out of range");
  double log_q;  // log q = -pi K'(k)/K(k) < 0
  if (k_comp < 1e-7) {
    // Degenerate modulus: K(k) = log(4/k'')(1 + O(k''^2)), K'(k) -> pi/2.
    const double L = std::log(4.0 / k_comp);
    const double kc2 = k_comp * k_comp;
    const double K = L + 0.25 * kc2 * (L - 1.0);
    const double Kp = 0.5 * kPi * (1.0 + 0.25 * kc2 + (9.0 / 64.0) * kc2 * kc2);
    log_q = -kPi * Kp / K;
  } else {
    log_q = -kPi * elliptic_Kprime(k) / elliptic_K(k);
  }
  const double q = std::exp(log_q);
  const double q_hat = std::exp(kPi * kPi / log_q);
  if (!(q > 0.0) || !(q < 1.0)) throw NonConvergence("nome_from_k: nome left (0,1)");
  return NomePair(q, q_hat, k);
}

NomePair NomePair::from_nome(double q) {
  check_nome_open(q);
  const double t2 = theta2(q);
  const double t3 = theta3(q);
  const double k = (t2 * t2) / (t3 * t3);
  return NomePair(q, complementary_nome(q), k);
}

}  // namespace gasketlab::special
