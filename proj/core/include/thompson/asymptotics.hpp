#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

// 50 decimal digits: k^k terms stay representable in log space far past k=1000.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat to_bigfloat(const BigInt& x);
BigFloat to_bigfloat(const Rational& x);
BigFloat log_bigint(const BigInt& x);

// t_k = (k+1) C_k^2 and v_k = (k+1)! C_k^2.
BigInt element_count_T(int k);
BigInt element_count_V(int k);

// log of the counts via exact log-Gamma, bypassing the big integers.
BigFloat log_element_count_T(int k);
BigFloat log_element_count_V(int k);

// t_k k^2 / 16^k, log-space; converges to 1/pi.
BigFloat growth_ratio_T(int k);
// v_k / ((16/e)^k k^(k-3/2)), log-space; converges to sqrt(2/pi)
// (Stirling: C_k ~ 4^k / (sqrt(pi) k^(3/2)) and (k+1)! ~ sqrt(2 pi k) (k/e)^k k).
BigFloat growth_ratio_V(int k);
BigFloat growth_constant_T();  // 1/pi
BigFloat growth_constant_V();  // sqrt(2/pi)

struct GrowthSample {
  int k = 0;
  BigFloat exact_log;  // ln(count), exact big-integer or log-Gamma source
  BigFloat model_log;  // ln(asymptotic model)
  BigFloat ratio;      // count / model = exp(exact_log - model_log)
};

GrowthSample growth_sample_T(int k);
GrowthSample growth_sample_V(int k);

// Pair-sphere growth: sphere = count^2 against models 16^(2n)/n^4 (T) and
// ((16/e)^n n^(n-3/2))^2 (V).
GrowthSample sphere_growth_sample(Group group, int n);
std::vector<GrowthSample> sphere_growth_check(Group group, const std::vector<int>& ns);

struct LimitRow {
  std::string quantity;
  int n = 0;
  BigFloat value;
  BigFloat limit;
  BigFloat abs_gap;
};

// The reference limits at n in {10, 50, 200, 1000}: family density ratios
// (T and V, limit 1/16) and ping-pong pair ratios (limit 2^-24).
std::vector<LimitRow> limit_table();

}  // namespace thompson
