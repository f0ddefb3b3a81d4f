#include <stdexcept>

#include "hyperlp/errors.hpp"
#include "hyperlp/specfun.hpp"

namespace hyperlp {

std::vector<mpz_class> partition_integers(long max_n) {
  if (max_n < 0) throw DomainError("partition_numbers: N must be non-negative");
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    mpz_class acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const long g2 = k * (3 * k + 1) / 2;
      mpz_class term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[n] = acc;
  }
  return p;
}

PartitionTable partition_numbers(long max_n) {
  PartitionTable table;
  for (const auto& v : partition_integers(max_n)) table.values.emplace_back(v);
  return table;
}

PartitionTable fractional_partition(const mpq_class& alpha, long max_n) {
  if (max_n < 0) throw DomainError("fractional_partition: N must be non-negative");
  const auto size = static_cast<std::size_t>(max_n) + 1;
  std::vector<mpz_class> sigma(size, 0);
  for (long d = 1; d <= max_n; ++d) {
    for (long m = d; m <= max_n; m += d) sigma[m] += d;
  }
  PartitionTable table;
  table.kind = PartitionKind::Fractional;
  table.alpha = alpha;
  table.values.assign(size, 0);
  table.values[0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    mpq_class acc = 0;
    for (long k = 1; k <= n; ++k) acc += mpq_class(sigma[k]) * table.values[n - k];
    table.values[n] = alpha * acc / n;
    table.values[n].canonicalize();
  }
  return table;
}

}  // namespace hyperlp
