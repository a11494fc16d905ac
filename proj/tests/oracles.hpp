#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// Frozen from an independent high-precision evaluation (mpmath, 50 digits).
namespace frozen {
inline constexpr double rho2_l15 = 0.58281164386581139;
inline constexpr double rho_d3_l15 = 0.35409880311754444;
inline constexpr double lambda_star_d3_l15 = 0.62578253420128292;
inline constexpr double c_d3_l15 = 0.45030168712080505;
inline constexpr double sigma2_d3_l15 = 3.2155514830579752;
inline constexpr double J1_d3_l15 = 0.15549432271085961;

inline constexpr double rho_d2_l2 = 0.79681213002002005;
inline constexpr double lambda_star_d2_l2 = 0.40637573995995991;
inline constexpr double c_d2_l2 = 0.16190255947297871;
inline constexpr double sigma2_d2_l2 = 0.45944172300703756;
inline constexpr double J1_d2_l2 = 1.0882773047417402;
}  // namespace frozen

// Plain bisection on a sign change in (lo, hi), long double, fixed 200 halvings.
inline long double bisect(const std::function<long double(long double)>& f, long double lo, long double hi) {
  long double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

inline double rho2(double lambda) {
  const long double l = lambda;
  return static_cast<double>(bisect([&](long double r) { return 1.0L - r - std::exp(-l * r); }, 1e-12L, 1.0L));
}

inline double rho_d(int d, double lambda) {
  const long double l = lambda;
  const long double m = d - 1;
  return static_cast<double>(bisect(
      [&](long double r) { return 1.0L - r - std::exp(-(l / m) * (1.0L - std::pow(1.0L - r, m))); }, 1e-12L, 1.0L));
}

// All d-subsets of {1..N} in lexicographic order.
inline std::vector<std::vector<int>> all_edges(int N, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= N; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Exact law of |C_{<=k}| (index = size) over every edge subset, weighted by
// p^|E| (1-p)^(C(N,d)-|E|). Closure by repeated sweeps, no union-find.
inline std::vector<double> seed_component_law(int N, int d, double p, int k) {
  const auto edges = all_edges(N, d);
  const std::size_t m = edges.size();
  std::vector<double> law(static_cast<std::size_t>(N) + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int count = 0;
    std::vector<char> in(static_cast<std::size_t>(N) + 1, 0);
    for (int v = 1; v <= k; ++v) in[v] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < m; ++e) {
        if (!((mask >> e) & 1)) continue;
        bool touches = false;
        for (int v : edges[e]) touches = touches || in[v];
        if (!touches) continue;
        for (int v : edges[e]) {
          if (!in[v]) {
            in[v] = 1;
            changed = true;
          }
        }
      }
    }
    for (int v = 1; v <= N; ++v) count += in[v];
    const int present = __builtin_popcountll(mask);
    law[count] += std::pow(p, present) * std::pow(1.0 - p, static_cast<double>(m) - present);
  }
  return law;
}

}  // namespace oracle
