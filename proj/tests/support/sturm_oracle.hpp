#ifndef HYPERLP_TESTS_STURM_ORACLE_HPP
#define HYPERLP_TESTS_STURM_ORACLE_HPP

// Exact Sturm-sequence root counting over the rationals.  Test-only: it is
// the independent oracle for the interval-arithmetic isolator.

#include <gmpxx.h>

#include <vector>

namespace hyperlp::testing {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = a.back() / b.back();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline int sign_at_infinity(const QPoly& p, bool positive) {
  const int lead = sgn(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (!positive && odd) ? -lead : lead;
}

/// Number of distinct real roots of p (p nonzero).
inline int sturm_distinct_real_roots(QPoly p) {
  trim(p);
  if (p.size() <= 1) return 0;
  std::vector<QPoly> seq{p};
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  seq.push_back(d);
  while (seq.back().size() > 1) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  auto variations = [&](bool positive) {
    int v = 0, last = 0;
    for (const auto& s : seq) {
      const int sg = sign_at_infinity(s, positive);
      if (sg != 0 && last != 0 && sg != last) ++v;
      if (sg != 0) last = sg;
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace hyperlp::testing

#endif  // HYPERLP_TESTS_STURM_ORACLE_HPP
