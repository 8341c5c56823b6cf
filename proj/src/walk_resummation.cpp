#include "gasketlab/walk_resummation.hpp"

#include <cmath>

namespace gasketlab::walks {

namespace {

// C(n, k) in __int128, throwing Overflow past int64.
__int128 binom128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long j = 1; j <= k; ++j) {
    r = r * (n - k + j);
    r /= j;
    if (r > static_cast<__int128>(INT64_MAX) * 1024)
      throw Overflow("binomial exceeds guarded range");
  }
  return r;
}

long long to_i64(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow(what);
  return static_cast<long long>(v);
}

double lbinom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

long long coefficient(int m, long long n) {
  if (m < 0) throw std::domain_error("coefficient: m must be >= 0");
  if (n < 0) n = -n;
  if (m == 0) {
    if (n % 2 != 0) return 0;
    return (n / 2) % 2 == 0 ? 1 : -1;
  }
  if (n < m || (n - m) % 2 != 0) return 0;
  const __int128 pow2 = static_cast<__int128>(1) << (m - 1);
  if (n == m) return to_i64(pow2, "coefficient: 2^{m-1} exceeds int64");
  const long long h = (n + m) / 2, j = (n - m) / 2;
  const __int128 core = binom128(h, j) + binom128(h - 1, j - 1);
  const __int128 val = pow2 * core;
  const long long out = to_i64(val, "coefficient exceeds int64");
  return (j % 2 == 0) ? out : -out;
}

double coefficient_value(int m, long long n) {
  if (m < 0) throw std::domain_error("coefficient_value: m must be >= 0");
  if (n < 0) n = -n;
  if (m == 0) {
    if (n % 2 != 0) return 0.0;
    return (n / 2) % 2 == 0 ? 1.0 : -1.0;
  }
  if (n < m || (n - m) % 2 != 0) return 0.0;
  try {
    return static_cast<double>(coefficient(m, n));
  } catch (const Overflow&) {
    const double h = 0.5 * double(n + m), j = 0.5 * double(n - m);
    const double core = std::exp(lbinom(h, j)) + std::exp(lbinom(h - 1.0, j - 1.0));
    const double val = std::ldexp(core, m - 1);
    return (static_cast<long long>(j) % 2 == 0) ? val : -val;
  }
}

WalkCoefficients coefficients(int m, int n_max) {
  if (m < 0) throw std::domain_error("coefficients: m must be >= 0");
  if (n_max < m) throw std::domain_error("coefficients: n_max must be >= m");
  WalkCoefficients out;
  out.m = m;
  out.n_max = n_max;
  out.table.resize(static_cast<size_t>(n_max) + 1, 0);
  for (long long n = 0; n <= n_max; ++n) out.table[static_cast<size_t>(n)] = coefficient(m, n);
  return out;
}

Rational walk_return_prob(long long n, int k) {
  if (k < 0) throw std::domain_error("walk_return_prob: k must be >= 0");
  if (k > 62) throw Overflow("walk_return_prob: k too large for exact 2^k denominator");
  if (n < 0) n = -n;
  Rational r;
  r.log2_den = k;
  if (n > k || (k + n) % 2 != 0) {
    r.num = 0;
    return r;
  }
  r.num = to_i64(binom128(k, (k + n) / 2), "walk_return_prob: binomial exceeds int64");
  return r;
}

DeltaReport verify_delta(int m, int k_max, int n_max) {
  if (n_max < k_max || k_max < m)
    throw std::domain_error("verify_delta: need n_max >= k_max >= m");
  DeltaReport rep;
  rep.m = m;
  rep.k_max = k_max;
  const WalkCoefficients coeffs = coefficients(m, n_max);
  for (int k = 0; k <= k_max; ++k) {
    // sum_n a_{m,n} C(k, (k+n)/2) over |n| <= k must equal delta_{k,m} 2^k.
    __int128 sum = 0;
    for (long long n = -k; n <= k; ++n) {
      const Rational p = walk_return_prob(n, k);
      if (p.num == 0) continue;
      sum += static_cast<__int128>(coeffs.at(n)) * p.num;
    }
    const __int128 expected = (k == m) ? (static_cast<__int128>(1) << k) : 0;
    if (sum != expected) {
      rep.exact = false;
      rep.failed_k.push_back(k);
    }
  }
  return rep;
}

double lazy_resummation(double p, int m, int n_max) {
  if (!(p > 0.0) || !(p <= 1.0)) throw std::domain_error("lazy_resummation: p must lie in (0,1]");
  if (m < 0 || n_max < 0) throw std::domain_error("lazy_resummation: m, n_max must be >= 0");
  // distribution of S_m started from 0; P_n(S_m = 0) = P_0(S_m = -n)
  std::vector<double> dist(2 * m + 1, 0.0);
  dist[static_cast<size_t>(m)] = 1.0;  // offset m <-> position 0
  std::vector<double> next(dist.size());
  for (int step = 0; step < m; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i <= 2 * m; ++i) {
      const double w = dist[static_cast<size_t>(i)];
      if (w == 0.0) continue;
      next[static_cast<size_t>(i)] += (1.0 - p) * w;
      if (i > 0) next[static_cast<size_t>(i - 1)] += 0.5 * p * w;
      if (i < 2 * m) next[static_cast<size_t>(i + 1)] += 0.5 * p * w;
    }
    dist.swap(next);
  }
  double sum = 0.0;
  for (int n = -std::min(m, n_max); n <= std::min(m, n_max); ++n)
    sum += dist[static_cast<size_t>(m + n)];
  return sum;
}

GeneratingReport generating_check(int n, int k_max) {
  if (n < 0 || k_max < 0) throw std::domain_error("generating_check: n, k_max must be >= 0");
  const int N = k_max + 1;
  // power series mod z^{N} as coefficient arrays
  auto mul = [N](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(static_cast<size_t>(N), 0.0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; i + j < N; ++j) c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return c;
  };
  // s(z) = sqrt(1 - z^2): binomial series in u = z^2
  std::vector<double> s(static_cast<size_t>(N), 0.0);
  {
    double c = 1.0;  // C(1/2, j) (-1)^j
    for (int j = 0; 2 * j < N; ++j) {
      s[static_cast<size_t>(2 * j)] = c;
      c *= -(0.5 - j) / (j + 1.0);
    }
  }
  // 1/s via series inversion
  std::vector<double> inv_s(static_cast<size_t>(N), 0.0);
  inv_s[0] = 1.0 / s[0];
  for (int i = 1; i < N; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) acc += s[static_cast<size_t>(j)] * inv_s[static_cast<size_t>(i - j)];
    inv_s[static_cast<size_t>(i)] = -acc / s[0];
  }
  // w(z) = (1 - s)/z : odd series, w = z/2 + z^3/8 + ...
  std::vector<double> w(static_cast<size_t>(N), 0.0);
  for (int i = 0; i + 1 < N; ++i) w[static_cast<size_t>(i)] = -s[static_cast<size_t>(i + 1)];
  // g_n = w^n / s
  std::vector<double> g = inv_s;
  for (int rep = 0; rep < n; ++rep) g = mul(g, w);

  GeneratingReport out;
  out.n = n;
  out.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    const Rational p = walk_return_prob(n, k);
    const double expect = std::ldexp(static_cast<double>(p.num), -p.log2_den);
    out.max_abs_err = std::max(out.max_abs_err, std::abs(g[static_cast<size_t>(k)] - expect));
  }
  return out;
}

}  // namespace gasketlab::walks
