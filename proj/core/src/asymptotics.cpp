#include "thompson/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "thompson/dynamics.hpp"
#include "thompson/errors.hpp"
#include "thompson/freeness.hpp"
#include "thompson/tree.hpp"

namespace thompson {

namespace {

BigFloat lng(int arg) {  // ln Gamma(arg) = ln (arg-1)!
  return boost::math::lgamma(BigFloat(arg));
}

BigFloat ln16() { return log(BigFloat(16)); }

// ln C_k = ln (2k)! - 2 ln k! - ln(k+1).
BigFloat log_catalan(int k) { return lng(2 * k + 1) - 2 * lng(k + 1) - log(BigFloat(k + 1)); }

}  // namespace

BigFloat to_bigfloat(const BigInt& x) { return BigFloat(x); }

BigFloat to_bigfloat(const Rational& x) {
  return BigFloat(numerator(x)) / BigFloat(denominator(x));
}

BigFloat log_bigint(const BigInt& x) {
  if (x <= 0) throw DomainError("log of a non-positive integer");
  return log(BigFloat(x));
}

BigInt element_count_T(int k) {
  BigInt c = catalan(k);
  return c * c * (k + 1);
}

BigInt element_count_V(int k) {
  BigInt c = catalan(k);
  return c * c * factorial(k + 1);
}

BigFloat log_element_count_T(int k) { return 2 * log_catalan(k) + log(BigFloat(k + 1)); }

BigFloat log_element_count_V(int k) { return 2 * log_catalan(k) + lng(k + 2); }

BigFloat growth_ratio_T(int k) {
  BigFloat gap = log_element_count_T(k) + 2 * log(BigFloat(k)) - k * ln16();
  return exp(gap);
}

BigFloat growth_ratio_V(int k) {
  BigFloat lnk = log(BigFloat(k));
  BigFloat model = k * (ln16() - 1) + (BigFloat(k) - BigFloat(3) / 2) * lnk;
  return exp(log_element_count_V(k) - model);
}

BigFloat growth_constant_T() { return 1 / boost::math::constants::pi<BigFloat>(); }

BigFloat growth_constant_V() {
  return sqrt(2 / boost::math::constants::pi<BigFloat>());
}

GrowthSample growth_sample_T(int k) {
  GrowthSample s;
  s.k = k;
  s.exact_log = log_bigint(element_count_T(k));
  s.model_log = k * ln16() - 2 * log(BigFloat(k));
  s.ratio = exp(s.exact_log - s.model_log);
  return s;
}

GrowthSample growth_sample_V(int k) {
  GrowthSample s;
  s.k = k;
  s.exact_log = log_bigint(element_count_V(k));
  BigFloat lnk = log(BigFloat(k));
  s.model_log = k * (ln16() - 1) + (BigFloat(k) - BigFloat(3) / 2) * lnk;
  s.ratio = exp(s.exact_log - s.model_log);
  return s;
}

GrowthSample sphere_growth_sample(Group group, int n) {
  GrowthSample one = group == Group::T ? growth_sample_T(n) : growth_sample_V(n);
  GrowthSample s;
  s.k = n;
  s.exact_log = 2 * one.exact_log;
  s.model_log = 2 * one.model_log;
  s.ratio = exp(s.exact_log - s.model_log);
  return s;
}

std::vector<GrowthSample> sphere_growth_check(Group group, const std::vector<int>& ns) {
  std::vector<GrowthSample> out;
  out.reserve(ns.size());
  for (int n : ns) out.push_back(sphere_growth_sample(group, n));
  return out;
}

std::vector<LimitRow> limit_table() {
  std::vector<LimitRow> rows;
  const int ns[] = {10, 50, 200, 1000};
  BigFloat sixteenth = BigFloat(1) / 16;
  BigFloat two24 = BigFloat(1) / (BigInt(1) << 24).convert_to<BigFloat>();
  auto add = [&rows](const char* quantity, int n, const Rational& value, const BigFloat& limit) {
    LimitRow row;
    row.quantity = quantity;
    row.n = n;
    row.value = to_bigfloat(value);
    row.limit = limit;
    row.abs_gap = abs(row.value - limit);
    rows.push_back(row);
  };
  for (int n : ns) {
    add("family_density_T", n, density_ratio_formula_T(n), sixteenth);
    add("family_density_V", n, density_ratio_formula_V(n), sixteenth);
    add("pingpong_ratio_T", n, pingpong_ratio_T(n), two24);
    add("pingpong_ratio_V", n, pingpong_ratio_V(n), two24);
  }
  return rows;
}

}  // namespace thompson
