#pragma once

// Resummation coefficients a_{m,n} for simple random walks: the signed
// measure nu_m = sum_n a_{m,n} P_n on walks started at n satisfies
// nu_m(S_k = 0) = delta_{k,m}. All delta checks run in exact integer
// arithmetic; floating point appears only in series evaluation.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gasketlab::walks {

struct Overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact a_{m,n} (a_{m,-n} = a_{m,n}; zero when |n| < m or parities differ).
//   m = 0: a_{0,0} = 1, a_{0,2j} = (-1)^j.
//   m >= 1: a_{m,m} = 2^{m-1},
//           a_{m,n} = 2^{m-1} (-1)^{(n-m)/2} ( C((n+m)/2,(n-m)/2)
//                                            + C((n+m)/2-1,(n-m)/2-1) ).
// Throws Overflow if the value exceeds int64.
long long coefficient(int m, long long n);

// Same value in double precision, via log-gamma when it leaves int64 range.
double coefficient_value(int m, long long n);

struct WalkCoefficients {
  int m = 0;
  int n_max = 0;
  std::vector<long long> table;  // index n in [0, n_max]; negative n mirrors

  long long at(long long n) const {
    const long long a = n < 0 ? -n : n;
    return a <= n_max ? table[static_cast<size_t>(a)] : 0;
  }
};

WalkCoefficients coefficients(int m, int n_max);

// Exact return probability of the simple walk: P(S_k = 0 | S_0 = n),
// as numerator / 2^k.
struct Rational {
  long long num = 0;
  int log2_den = 0;  // denominator 2^{log2_den}
};
Rational walk_return_prob(long long n, int k);

// Checks sum_n a_{m,n} P_n(S_k = 0) = delta_{k,m} exactly for k <= k_max.
struct DeltaReport {
  int m = 0;
  int k_max = 0;
  bool exact = true;
  std::vector<int> failed_k;
};
DeltaReport verify_delta(int m, int k_max, int n_max);

// sum_{|n| <= n_max} P^{lazy,p}_n(S_m = 0) for the walk that moves +-1 with
// probability p/2 each and stays put with probability 1-p. Equals 1 exactly
// whenever n_max >= m.
double lazy_resummation(double p, int m, int n_max);

// Taylor coefficients of g_n(z) = (1 - sqrt(1-z^2))^n / (z^n sqrt(1-z^2))
// versus walk_return_prob(n, k) for k <= k_max.
struct GeneratingReport {
  int n = 0;
  int k_max = 0;
  double max_abs_err = 0.0;
};
GeneratingReport generating_check(int n, int k_max = 20);

}  // namespace gasketlab::walks
