#include "clifford3/krawtchouk.hpp"

#include <string>
#include <vector>

#include "clifford3/arith.hpp"
#include "clifford3/error.hpp"

namespace clifford3 {
namespace {

void check(const KrawtchoukQuery& q) {
  if (q.r < 0 || q.n < 0 || q.N < 0 || q.n > q.N) {
    throw Error(ErrorCode::KrawtchoukDomain,
                "Krawtchouk parameters need r, n, N >= 0 and n <= N; got r=" +
                    std::to_string(q.r) + " n=" + std::to_string(q.n) +
                    " N=" + std::to_string(q.N));
  }
}

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt krawtchouk(const KrawtchoukQuery& q) {
  check(q);
  if (q.r > q.N) return 0;
  BigInt sum = 0;
  for (std::int64_t j = 0; j <= std::min(q.r, q.n); ++j) {
    BigInt term = binomial(q.n, j) * binomial(q.N - q.n, q.r - j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt krawtchouk_oracle(const KrawtchoukQuery& q) {
  check(q);
  if (q.N > 64) {
    throw Error(ErrorCode::OracleRangeExceeded,
                "oracle expansion is limited to N <= 64, got " + std::to_string(q.N));
  }
  Poly product{BigInt(1)};
  const Poly minus{BigInt(1), BigInt(-1)};
  const Poly plus{BigInt(1), BigInt(1)};
  for (std::int64_t i = 0; i < q.n; ++i) product = multiply(product, minus);
  for (std::int64_t i = 0; i < q.N - q.n; ++i) product = multiply(product, plus);
  if (q.r >= static_cast<std::int64_t>(product.size())) return 0;
  return product[static_cast<std::size_t>(q.r)];
}

KrawtchoukQuery rank2_delta_query(std::int64_t g, std::int64_t deg, std::int64_t s1) {
  if (!congruent(deg, s1, 2)) {
    throw Error(ErrorCode::CongruenceViolation,
                "rank-2 degree and s_1 must have the same parity", 1);
  }
  const std::int64_t index = (deg - s1) / 2 + 1;
  if (index < 0) {
    throw Error(ErrorCode::IndexNegative,
                "Krawtchouk index " + std::to_string(index) + " is negative");
  }
  KrawtchoukQuery q{index, g, 2 * g - s1};
  check(q);
  return q;
}

bool rank2_delta_vanishes(std::int64_t g, std::int64_t deg, std::int64_t s1) {
  return krawtchouk(rank2_delta_query(g, deg, s1)) == 0;
}

KrawtchoukQuery delta_query(std::int64_t g, std::int64_t d, std::int64_t s1,
                            std::int64_t s1F) {
  const std::int64_t numerator = 2 * d + s1 - 3 * s1F;
  if (mod(numerator, 6) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "2d + s1 - 3 s1F = " + std::to_string(numerator) + " is not divisible by 6");
  }
  const std::int64_t index = numerator / 6 + 1;
  if (index < 0) {
    throw Error(ErrorCode::IndexNegative,
                "Krawtchouk index " + std::to_string(index) + " is negative");
  }
  KrawtchoukQuery q{index, g, 2 * g - s1F};
  check(q);
  return q;
}

bool delta_vanishes(std::int64_t g, std::int64_t d, std::int64_t s1, std::int64_t s1F) {
  return krawtchouk(delta_query(g, d, s1, s1F)) == 0;
}

}  // namespace clifford3
