#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgewise {

// Exact integer used for every count-valued result. Small values stay in the
// inline limb buffer; larger ones (factorials past 20!) grow transparently.
using Count = boost::multiprecision::cpp_int;
using CountVec = std::vector<Count>;

// A precondition on the mathematical input was violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to enumerate past its configured budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

Count factorial(int n);
Count binomial(long long n, long long r);  // 0 outside 0 <= r <= n
Count multichoose(long long n, long long r);  // C(n+r-1, r)

// (a0..as) * (b0..bt) -> (c0..c_{s+t}), c_j = sum_i a_i b_{j-i}.
CountVec convolve(const CountVec& a, const CountVec& b);

CountVec to_counts(const std::vector<std::uint64_t>& values);

// Resize to n entries, padding with zeros.
CountVec padded(CountVec v, std::size_t n);

std::string to_string(const CountVec& v);
std::string to_string(const std::vector<int>& v);

}  // namespace edgewise
