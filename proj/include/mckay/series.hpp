#ifndef MCKAY_SERIES_HPP
#define MCKAY_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/rational.hpp"

namespace mckay {

/// Integer polynomial in one variable t; trailing zeros trimmed, so equal
/// values have equal coefficient vectors.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.push_back(Integer(constant));
  }
  explicit TPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static TPoly t_power(std::size_t k, Integer coeff = Integer(1)) {
    if (coeff == 0) return TPoly();
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = std::move(coeff);
    return TPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  friend TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return TPoly(std::move(v));
  }

  friend TPoly operator-(const TPoly& a, const TPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return TPoly(std::move(v));
  }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return TPoly(std::move(v));
  }

  TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  /// Multiply by t^k.
  TPoly shifted(std::size_t k) const {
    if (is_zero()) return TPoly();
    std::vector<Integer> v(c_.size() + k, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return TPoly(std::move(v));
  }

  /// t^d * P(1/t); requires degree <= d.
  TPoly reciprocal(std::size_t d) const {
    if (degree() > static_cast<long>(d))
      throw precondition_error("reciprocal shift smaller than the degree");
    std::vector<Integer> v(d + 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[d - i] = c_[i];
    return TPoly(std::move(v));
  }

  Integer eval(const Integer& t) const {
    Integer value(0);
    for (std::size_t i = c_.size(); i-- > 0;) value = value * t + c_[i];
    return value;
  }

  /// e.g. "1 + 2t^2 + 2t^4"; the zero polynomial renders as "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const bool negative = c_[k] < 0;
      const Integer mag = negative ? Integer(-c_[k]) : c_[k];
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string body;
      if (k == 1)
        body = "t";
      else if (k > 1)
        body = "t^" + std::to_string(k);
      if (body.empty())
        out += mckay::to_string(mag);
      else if (mag == 1)
        out += body;
      else
        out += mckay::to_string(mag) + body;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// Power series in q truncated at a fixed order, with TPoly coefficients.
/// All operations are exact through q^order; mixing truncation orders takes
/// the minimum.
class QSeries {
 public:
  explicit QSeries(long order) : order_(order), c_(check_order(order) + 1) {}
  QSeries(long order, std::vector<TPoly> coeffs) : order_(order), c_(std::move(coeffs)) {
    check_order(order);
    c_.resize(static_cast<std::size_t>(order) + 1);
  }

  static QSeries one(long order) {
    QSeries s(order);
    s.c_[0] = TPoly(1);
    return s;
  }

  /// base * q^d as a truncated series.
  static QSeries monomial(long order, const TPoly& base, long d) {
    if (d < 0) throw precondition_error("negative q-exponent");
    QSeries s(order);
    if (d <= order) s.c_[static_cast<std::size_t>(d)] = base;
    return s;
  }

  /// (1 - base*q^d)^{-1} = sum_k base^k q^{dk}, truncated. Only factors with
  /// unit constant term are invertible in the truncated ring, which this
  /// shape guarantees; d must be >= 1.
  static QSeries geometric_inverse(long order, const TPoly& base, long d) {
    if (d < 1) throw precondition_error("geometric_inverse requires q-exponent d >= 1");
    QSeries s(order);
    TPoly power(1);
    for (long k = 0; k * d <= order; ++k) {
      s.c_[static_cast<std::size_t>(k * d)] = power;
      power *= base;
    }
    return s;
  }

  long order() const { return order_; }
  const TPoly& coeff(std::size_t k) const { return c_.at(k); }
  const std::vector<TPoly>& coeffs() const { return c_; }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const long order = std::min(a.order_, b.order_);
    QSeries s(order);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k)
      s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    const long order = std::min(a.order_, b.order_);
    QSeries s(order);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k)
      s.c_[k] = a.c_[k] - b.c_[k];
    return s;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const long order = std::min(a.order_, b.order_);
    QSeries s(order);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(order); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= static_cast<std::size_t>(order); ++j)
        s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }

  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries pow(long e) const {
    if (e < 0) throw precondition_error("negative series power");
    QSeries result = one(order_);
    QSeries base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  /// "(c_0) + (c_1)*q + (c_2)*q^2 + ..." with every coefficient
  /// parenthesized.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].to_string() + ")";
      if (k == 1)
        out += "*q";
      else if (k > 1)
        out += "*q^" + std::to_string(k);
    }
    return out;
  }

 private:
  static long check_order(long order) {
    if (order < 0) throw precondition_error("series truncation order must be >= 0");
    return order;
  }

  long order_;
  std::vector<TPoly> c_;
};

/// A partition of n in multiplicity form (1^{a_1} 2^{a_2} ... n^{a_n}).
struct Partition {
  long n = 0;
  std::vector<long> multiplicity;  // multiplicity[j-1] = a_j, number of parts equal to j

  /// d(nu) = sum_j a_j, the number of parts.
  long parts_count() const {
    long d = 0;
    for (const long a : multiplicity) d += a;
    return d;
  }

  /// e.g. "(1^2 3^1)" for 1+1+3; the empty partition renders as "()".
  std::string to_string() const {
    std::string out = "(";
    bool first = true;
    for (std::size_t j = 0; j < multiplicity.size(); ++j) {
      if (multiplicity[j] == 0) continue;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1) + "^" + std::to_string(multiplicity[j]);
    }
    return out + ")";
  }
};

/// All partitions of n, enumerated with the largest part descending.
/// partitions(0) holds exactly the empty partition.
inline std::vector<Partition> partitions(long n) {
  if (n < 0) throw precondition_error("partitions of a negative integer");
  std::vector<Partition> out;
  Partition current;
  current.n = n;
  current.multiplicity.assign(static_cast<std::size_t>(n), 0);
  // descend over the largest allowed part
  auto recurse = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
      ++current.multiplicity[static_cast<std::size_t>(part - 1)];
      self(self, remaining - part, part);
      --current.multiplicity[static_cast<std::size_t>(part - 1)];
    }
  };
  recurse(recurse, n, n);
  return out;
}

}  // namespace mckay

#endif  // MCKAY_SERIES_HPP
