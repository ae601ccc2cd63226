#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace vknot {

/// Integer polynomial in one variable z, stored sparsely. Zero coefficients are never kept.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant) { set(0, constant); }  // NOLINT: implicit from integers

  long long coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
  }

  void set(int degree, long long value) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (value == 0)
      coeffs_.erase(degree);
    else
      coeffs_[degree] = value;
  }

  void add(int degree, long long value) { set(degree, coefficient(degree) + value); }

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, long long>& coefficients() const { return coeffs_; }

  /// Exact evaluation; throws std::overflow_error if the value leaves the 64-bit range.
  long long evaluate(long long z) const {
    __int128 acc = 0;
    for (int d = degree(); d >= 0; --d) {
      acc = acc * z + coefficient(d);
      if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("polynomial value overflows 64 bits");
    }
    return static_cast<long long>(acc);
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    for (auto [d, c] : b.coeffs_) a.add(d, c);
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    for (auto [d, c] : b.coeffs_) a.add(d, -c);
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (auto [da, ca] : a.coeffs_)
      for (auto [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
    return out;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, e.g. "1 - 2z^2 + z^4"; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto [d, c] : coeffs_) {
      const long long mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1 || d == 0) out += std::to_string(mag);
      if (d >= 1) out += "z";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  std::map<int, long long> coeffs_;
};

}  // namespace vknot
