#ifndef MCKAY_EPOLY_HPP
#define MCKAY_EPOLY_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/rational.hpp"

namespace mckay {

namespace detail {

inline long checked_exponent_add(long a, long b) {
  if (a > std::numeric_limits<long>::max() - b)
    throw internal_error("bivariate exponent overflow");
  return a + b;
}

}  // namespace detail

/// Integer-coefficient polynomial in the formal variables u, v. Terms are
/// kept in lexicographic (p, q) order with no stored zero coefficients, so
/// equal values have identical term maps. Immutable-style value type.
class EPoly {
 public:
  using Exponents = std::pair<long, long>;

  EPoly() = default;
  EPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) t_[{0, 0}] = Integer(constant);
  }

  static EPoly term(long p, long q, Integer coeff) {
    if (p < 0 || q < 0) throw precondition_error("negative exponent in E-polynomial term");
    EPoly e;
    if (coeff != 0) e.t_[{p, q}] = std::move(coeff);
    return e;
  }

  /// (uv)^k, the E-polynomial of a rank-k affine space.
  static EPoly uv_power(long k) { return term(k, k, Integer(1)); }

  const std::map<Exponents, Integer>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  friend EPoly operator+(const EPoly& a, const EPoly& b) {
    EPoly c = a;
    for (const auto& [e, coeff] : b.t_) c.add_term(e, coeff);
    return c;
  }

  friend EPoly operator-(const EPoly& a, const EPoly& b) {
    EPoly c = a;
    for (const auto& [e, coeff] : b.t_) c.add_term(e, -coeff);
    return c;
  }

  EPoly operator-() const {
    EPoly c = *this;
    for (auto& [e, coeff] : c.t_) coeff = -coeff;
    return c;
  }

  friend EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly c;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        c.add_term({detail::checked_exponent_add(ea.first, eb.first),
                    detail::checked_exponent_add(ea.second, eb.second)},
                   ca * cb);
    return c;
  }

  EPoly& operator+=(const EPoly& o) { return *this = *this + o; }
  EPoly& operator*=(const EPoly& o) { return *this = *this * o; }

  EPoly scaled(const Integer& s) const {
    EPoly c;
    if (s == 0) return c;
    c.t_ = t_;
    for (auto& [e, coeff] : c.t_) coeff *= s;
    return c;
  }

  friend bool operator==(const EPoly& a, const EPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }

  Integer coeff(long p, long q) const {
    const auto it = t_.find({p, q});
    return it == t_.end() ? Integer(0) : it->second;
  }

  /// Evaluation at u = v = -1, the Euler characteristic of the carrier.
  Integer euler_number() const {
    Integer e(0);
    for (const auto& [exps, coeff] : t_)
      e += ((exps.first + exps.second) % 2 == 0) ? coeff : -coeff;
    return e;
  }

  /// True iff every term has p = q (Hodge type (i,i) shape).
  bool is_pure_uv() const {
    for (const auto& [exps, coeff] : t_)
      if (exps.first != exps.second) return false;
    return true;
  }

  /// Range of p over stored terms; the zero polynomial has no range.
  std::pair<long, long> uv_degree_range() const {
    if (t_.empty()) throw precondition_error("degree range of the zero polynomial is undefined");
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    for (const auto& [exps, coeff] : t_) {
      lo = std::min(lo, exps.first);
      hi = std::max(hi, exps.first);
    }
    return {lo, hi};
  }

  /// Terms sorted by total degree then p; pure polynomials collapse to the
  /// "(uv)^k" convention.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Exponents, Integer>> terms(t_.begin(), t_.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      const long da = a.first.first + a.first.second;
      const long db = b.first.first + b.first.second;
      return da != db ? da < db : a.first.first < b.first.first;
    });
    const bool pure = is_pure_uv();
    std::string out;
    for (const auto& [exps, coeff] : terms) {
      const bool negative = coeff < 0;
      const Integer mag = negative ? Integer(-coeff) : coeff;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string body;
      if (pure) {
        if (exps.first == 1)
          body = "uv";
        else if (exps.first > 1)
          body = "(uv)^" + std::to_string(exps.first);
      } else {
        if (exps.first == 1)
          body = "u";
        else if (exps.first > 1)
          body = "u^" + std::to_string(exps.first);
        if (exps.second >= 1) {
          if (!body.empty()) body += "*";
          body += exps.second == 1 ? "v" : "v^" + std::to_string(exps.second);
        }
      }
      if (body.empty())
        out += mckay::to_string(mag);
      else if (mag == 1)
        out += body;
      else
        out += mckay::to_string(mag) + "*" + body;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = t_.emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::map<Exponents, Integer> t_;
};

/// 1 + uv + ... + (uv)^{k-1} = ((uv)^k - 1)/(uv - 1), the E-polynomial of
/// P^{k-1} and of the projectivized eigenspace strata.
inline EPoly geometric_sum(long k) {
  if (k < 1) throw precondition_error("geometric_sum requires k >= 1");
  EPoly e;
  for (long j = 0; j < k; ++j) e += EPoly::uv_power(j);
  return e;
}

/// (uv)^d: the E-polynomial of a rank-d affine fiber, and of C^d/H for any
/// finite linear group H.
inline EPoly affine_quotient_e(long d) {
  if (d < 0) throw precondition_error("affine_quotient_e requires d >= 0");
  return EPoly::uv_power(d);
}

inline Integer euler_number(const EPoly& e) { return e.euler_number(); }
inline bool is_pure_uv(const EPoly& e) { return e.is_pure_uv(); }
inline std::pair<long, long> uv_degree_range(const EPoly& e) { return e.uv_degree_range(); }

}  // namespace mckay

#endif  // MCKAY_EPOLY_HPP
