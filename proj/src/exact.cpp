#include "anf/exact.hpp"

#include <stdexcept>

namespace anf {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;  // exact at every step: result is C(n-k+j, j)
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt result = 1;
  for (long long j = 2; j <= n; ++j) result *= j;
  return result;
}

GaussianRational GaussianRational::i_power(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {-1};
    default: return {Rational(0), Rational(-1)};
  }
}

std::string GaussianRational::str() const {
  if (im == 0) return re.str();
  if (re == 0) return im.str() + "*i";
  std::string s = re.str();
  if (im > 0) s += "+";
  return s + im.str() + "*i";
}

}  // namespace anf
