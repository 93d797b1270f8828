#include "edgewise/common.hpp"

#include <sstream>

namespace edgewise {

Count factorial(int n) {
  require(n >= 0, "factorial of a negative number");
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Count binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Count out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= (n - r + i);
    out /= i;
  }
  return out;
}

Count multichoose(long long n, long long r) {
  if (r == 0) return 1;
  return binomial(n + r - 1, r);
}

CountVec convolve(const CountVec& a, const CountVec& b) {
  if (a.empty() || b.empty()) return {};
  CountVec c(a.size() + b.size() - 1, Count(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

CountVec to_counts(const std::vector<std::uint64_t>& values) {
  CountVec out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

CountVec padded(CountVec v, std::size_t n) {
  v.resize(n, Count(0));
  return v;
}

std::string to_string(const CountVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace edgewise
