#ifndef MCKAY_UPOLY_HPP
#define MCKAY_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/rational.hpp"

namespace mckay {

/// Dense univariate polynomial with ascending coefficients, trailing zeros
/// trimmed. Internal helper; coefficient type C is Integer or Rational.
/// divmod assumes the divisor's leading coefficient is invertible in C,
/// i.e. any field coefficients, or a monic divisor over the integers.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(std::size_t degree, C coeff = C(1)) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = std::move(coeff);
    return UPoly(std::move(v));
  }

  /// x^n - 1
  static UPoly x_power_minus_one(std::size_t n) {
    std::vector<C> v(n + 1, C(0));
    v[0] = C(-1);
    v[n] = C(1);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  const C& leading() const { return c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UPoly(std::move(v));
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(const C& s) const {
    std::vector<C> v(c_);
    for (auto& x : v) x *= s;
    return UPoly(std::move(v));
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<C> rem = a.c_;
    std::vector<C> quo(a.c_.size() - b.c_.size() + 1, C(0));
    const long db = b.degree();
    for (long k = a.degree(); k >= db; --k) {
      if (rem[k] == 0) continue;
      C q = rem[k] / b.c_[db];
      quo[k - db] = q;
      for (long j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

}  // namespace mckay

#endif  // MCKAY_UPOLY_HPP
