#pragma once

// Jacobi theta constants theta_2/3/4(q), complete elliptic integrals via the
// arithmetic-geometric mean, and conversions between the nome q, the
// complementary nome q_hat (log q * log q_hat = pi^2) and the modulus
// k = theta_2(q)^2 / theta_3(q)^2.
//
// All series are evaluated in double precision. Near-degenerate moduli
// (k'' < 1e-7) switch to the standard K(k) ~ log(4/k'') expansion so that
// nome conversions stay accurate when k is within a few ulps of 1.

#include <cstdint>
#include <stdexcept>

namespace gasketlab::special {

struct EvalPolicy {
  double abs_tol = 1e-15;  // series truncation target
  int max_terms = 64;      // safety cap; exceeded -> NonConvergence

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("EvalPolicy: abs_tol must be > 0");
    if (max_terms < 8) throw std::invalid_argument("EvalPolicy: max_terms must be >= 8");
  }
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// theta_2(q) = sum_{n in Z} q^{(n+1/2)^2};  theta_2(0) = 0.
double theta2(double q, const EvalPolicy& policy = {});
// theta_3(q) = sum_{n in Z} q^{n^2};  theta_3(0) = 1.
double theta3(double q, const EvalPolicy& policy = {});
// theta_4(q) = sum_{n in Z} (-1)^n q^{n^2};  theta_4(0) = 1.
double theta4(double q, const EvalPolicy& policy = {});

// theta_3(q) - theta_4(q) = 4 * (q + q^9 + q^25 + ...), summed directly.
// Keeps full relative precision when the difference is tiny (q -> 0).
double theta3_minus_theta4(double q, const EvalPolicy& policy = {});

// K(k) = int_0^1 dx / sqrt((1-k^2 x^2)(1-x^2)), k in [0,1). AGM iteration.
double elliptic_K(double k);
// K'(k) = K(sqrt(1-k^2)), k in (0,1].
double elliptic_Kprime(double k);

// Complementary nome: q_hat = exp(pi^2 / log q), an involution on (0,1).
double complementary_nome(double q);

class NomePair {
 public:
  // k in (0,1) -> q = exp(-pi K'(k)/K(k)).
  static NomePair from_modulus(double k);
  // Same, with the complementary modulus k'' = sqrt(1-k^2) supplied by the
  // caller (avoids cancellation when k is close to 1).
  static NomePair from_modulus_pair(double k, double k_comp);
  // q in (0,1) -> k = theta_2(q)^2/theta_3(q)^2.
  static NomePair from_nome(double q);

  double q() const { return q_; }
  double q_hat() const { return q_hat_; }
  double k() const { return k_; }

 private:
  NomePair(double q, double q_hat, double k) : q_(q), q_hat_(q_hat), k_(k) {}
  double q_, q_hat_, k_;
};

inline NomePair nome_from_k(double k) { return NomePair::from_modulus(k); }

}  // namespace gasketlab::special
