#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace clifford3 {

using BigInt = boost::multiprecision::cpp_int;

/// K_r(n, N): the coefficient of z^r in (1-z)^n (1+z)^(N-n).
struct KrawtchoukQuery {
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
};

/// Closed form sum_j (-1)^j C(n,j) C(N-n, r-j). Zero for r > N.
BigInt krawtchouk(const KrawtchoukQuery& q);

/// Same coefficient by multiplying out the two factors; N <= 64.
BigInt krawtchouk_oracle(const KrawtchoukQuery& q);

/// C(a, b), zero outside 0 <= b <= a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Zero test of K_{(2d + s1 - 3 s1F)/6 + 1}(g, 2g - s1F), the quantity that
/// decides the +1 correction in the refined rank-2 quotient bound. `s1F` is the
/// stability degree of a minimal rank-2 quotient F of a rank-3 bundle with
/// degree d and first stability degree s1.
bool delta_vanishes(std::int64_t g, std::int64_t d, std::int64_t s1, std::int64_t s1F);

/// The Krawtchouk query behind delta_vanishes, exposed for reporting.
KrawtchoukQuery delta_query(std::int64_t g, std::int64_t d, std::int64_t s1,
                            std::int64_t s1F);

/// Rank-2 form: zero test of K_{(deg - s1)/2 + 1}(g, 2g - s1) for a rank-2
/// bundle of degree `deg` and stability degree `s1`.
bool rank2_delta_vanishes(std::int64_t g, std::int64_t deg, std::int64_t s1);
KrawtchoukQuery rank2_delta_query(std::int64_t g, std::int64_t deg, std::int64_t s1);

}  // namespace clifford3
