#ifndef MCKAY_CYCLOTOMIC_HPP
#define MCKAY_CYCLOTOMIC_HPP

#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/rational.hpp"
#include "mckay/upoly.hpp"

namespace mckay {

namespace detail {

/// M-th cyclotomic polynomial over the integers, memoized. Computed by
/// exact division: Phi_M(x) = (x^M - 1) / prod_{d | M, d < M} Phi_d(x).
/// The returned reference stays valid for the program lifetime; the table
/// is guarded by a mutex and inserts are idempotent.
inline const UPoly<Integer>& cyclotomic_polynomial(long m) {
  if (m < 1) throw precondition_error("cyclotomic order must be >= 1");
  static std::map<long, UPoly<Integer>> table;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto it = table.find(m);
  if (it != table.end()) return it->second;
  // Fill bottom-up over divisors so each step only divides by known factors.
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0 || table.count(d)) continue;
    UPoly<Integer> divisor({Integer(1)});
    for (long e = 1; e < d; ++e)
      if (d % e == 0) divisor = divisor * table.at(e);
    auto [quo, rem] = divmod(UPoly<Integer>::x_power_minus_one(static_cast<std::size_t>(d)), divisor);
    if (!rem.is_zero())
      throw internal_error("cyclotomic polynomial division left a remainder at order " + std::to_string(d));
    table.emplace(d, std::move(quo));
  }
  return table.at(m);
}

inline std::atomic<long>& order_cap_storage() {
  static std::atomic<long> cap{360};
  return cap;
}

}  // namespace detail

/// Ambient-order limit for joins and lifts (bounds coefficient blow-up).
inline long cyclotomic_order_cap() { return detail::order_cap_storage().load(); }
inline void set_cyclotomic_order_cap(long cap) {
  if (cap < 1) throw precondition_error("order cap must be >= 1");
  detail::order_cap_storage().store(cap);
}

/// An exact element of the cyclotomic field Q(zeta_M).
///
/// Values are residues in Q[x]/(Phi_M(x)): the coefficient vector always has
/// length deg Phi_M = phi(M) and is the unique reduced representative, so two
/// elements of the same order are equal iff their coefficients are equal.
/// Elements of different orders compare by lifting both to the lcm order.
/// Immutable after construction; all operations are pure.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value) : order_(1), coeffs_{value} {}

  /// Canonical form of sum_j coeffs[j] * zeta_order^j. Accepts any number of
  /// coefficients; reduction handles degrees past phi(order).
  static Cyclotomic make(long order, std::vector<Rational> coeffs) {
    if (order < 1) throw precondition_error("cyclotomic order must be >= 1");
    return Cyclotomic(order, UPoly<Rational>(std::move(coeffs)));
  }

  static Cyclotomic zeta(long order) {
    return make(order, {Rational(0), Rational(1)});
  }

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }

  /// Constant coefficient; the exact value when is_rational().
  const Rational& rational_value() const {
    if (!is_rational()) throw precondition_error("cyclotomic value is not rational");
    return coeffs_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = joined(a, b);
    std::vector<Rational> v(x.coeffs_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += y.coeffs_[j];
    return Cyclotomic(x.order_, std::move(v), already_reduced_tag{});
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  Cyclotomic operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c = -c;
    return Cyclotomic(order_, std::move(v), already_reduced_tag{});
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = joined(a, b);
    return Cyclotomic(x.order_, UPoly<Rational>(x.coeffs_) * UPoly<Rational>(y.coeffs_));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_M over the rationals. Phi_M is irreducible, so every nonzero
  /// residue is invertible.
  Cyclotomic inverse() const {
    if (is_zero()) throw precondition_error("inversion of zero cyclotomic element");
    UPoly<Rational> r0 = modulus_poly(order_);
    UPoly<Rational> r1(coeffs_);
    UPoly<Rational> s0, s1({Rational(1)});  // coefficients of *this in the Bezout identity
    while (!r1.is_zero()) {
      auto [q, r2] = divmod(r0, r1);
      UPoly<Rational> s2 = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.degree() != 0)
      throw internal_error("cyclotomic inverse: gcd with Phi_M is not a unit");
    return Cyclotomic(order_, s0.scaled(Rational(1) / r0.leading()));
  }

  /// Complex conjugation, the Galois map zeta_M -> zeta_M^{-1}.
  Cyclotomic conj() const {
    std::vector<Rational> v(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      v[static_cast<std::size_t>((order_ - static_cast<long>(j)) % order_)] += coeffs_[j];
    return Cyclotomic(order_, UPoly<Rational>(std::move(v)));
  }

  Cyclotomic pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic result(Rational(1));
    Cyclotomic base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// Lift into Q(zeta_N) for a multiple N of the current order
  /// (zeta_M -> zeta_N^{N/M}).
  Cyclotomic lift_to_order(long n) const {
    if (n % order_ != 0)
      throw precondition_error("lift target order must be a multiple of the current order");
    if (n == order_) return *this;
    const long step = n / order_;
    std::vector<Rational> v(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      v[j * static_cast<std::size_t>(step)] = coeffs_[j];
    return Cyclotomic(n, UPoly<Rational>(std::move(v)));
  }

  /// Express the value in Q(zeta_N) for a divisor N of the order, if it lies
  /// in that subfield. Solves for coordinates in the lifted zeta_N power
  /// basis; the solution is unique when it exists.
  std::optional<Cyclotomic> try_reduce_to_order(long n) const;

  /// Total order: same-order values compare coefficient-lexicographically
  /// (equality is exact by canonical form); mixed orders join to the lcm.
  static int compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) {
      for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
        const int c = cmp(a.coeffs_[j], b.coeffs_[j]);
        if (c != 0) return c;
      }
      return 0;
    }
    auto [x, y] = joined(a, b);
    return compare(x, y);
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) != 0; }

  /// Render as a reduced rational combination, e.g. "1/2 + (-1/2)*z4" where
  /// zM denotes a primitive M-th root of unity.
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string c = mckay::to_string(coeffs_[j]);
      if (j == 0) {
        out += c;
        continue;
      }
      std::string power = "z" + std::to_string(order_);
      if (j > 1) power += "^" + std::to_string(j);
      if (coeffs_[j] == 1) {
        out += power;
      } else if (is_integer(coeffs_[j]) && coeffs_[j] > 0) {
        out += c + "*" + power;
      } else {
        out += "(" + c + ")*" + power;
      }
    }
    return out.empty() ? "0" : out;
  }

  static long join_order(long a, long b) {
    const long joined = std::lcm(a, b);
    if (joined > cyclotomic_order_cap() && joined != a && joined != b)
      throw precondition_error("joined cyclotomic order " + std::to_string(joined) +
                               " exceeds the ambient cap " + std::to_string(cyclotomic_order_cap()));
    return joined;
  }

 private:
  struct already_reduced_tag {};

  Cyclotomic(long order, std::vector<Rational> reduced, already_reduced_tag)
      : order_(order), coeffs_(std::move(reduced)) {}

  Cyclotomic(long order, const UPoly<Rational>& poly) : order_(order) {
    const auto& mod = modulus_poly(order);
    auto [quo, rem] = divmod(poly, mod);
    (void)quo;
    coeffs_.assign(static_cast<std::size_t>(mod.degree()), Rational(0));
    for (std::size_t j = 0; j < rem.coeffs().size(); ++j) coeffs_[j] = rem.coeffs()[j];
  }

  static UPoly<Rational> modulus_poly(long order) {
    const auto& phi = detail::cyclotomic_polynomial(order);
    std::vector<Rational> v;
    v.reserve(phi.coeffs().size());
    for (const auto& c : phi.coeffs()) v.emplace_back(c);
    return UPoly<Rational>(std::move(v));
  }

  static std::pair<Cyclotomic, Cyclotomic> joined(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return {a, b};
    const long n = join_order(a.order_, b.order_);
    return {a.lift_to_order(n), b.lift_to_order(n)};
  }

  long order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic inverse(const Cyclotomic& a) { return a.inverse(); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline Cyclotomic pow(const Cyclotomic& a, long k) { return a.pow(k); }

struct CyclotomicLess {
  bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
    return Cyclotomic::compare(a, b) < 0;
  }
};

namespace detail {

/// Gaussian elimination over Q for the subfield-coordinate system in
/// try_reduce_to_order. Columns hold the lifted basis vectors, the last
/// column the target. Returns the unique solution or nullopt if the target
/// is outside the column span.
inline std::optional<std::vector<Rational>> solve_rational_columns(
    std::vector<std::vector<Rational>> columns, std::vector<Rational> target) {
  const std::size_t rows = target.size();
  const std::size_t vars = columns.size();
  std::vector<std::size_t> pivot_of_var(vars, static_cast<std::size_t>(-1));
  std::size_t pivot_row = 0;
  for (std::size_t v = 0; v < vars && pivot_row < rows; ++v) {
    std::size_t p = pivot_row;
    while (p < rows && columns[v][p] == 0) ++p;
    if (p == rows) continue;
    for (std::size_t u = v; u < vars; ++u) std::swap(columns[u][p], columns[u][pivot_row]);
    std::swap(target[p], target[pivot_row]);
    const Rational inv = Rational(1) / columns[v][pivot_row];
    for (std::size_t u = v; u < vars; ++u) columns[u][pivot_row] *= inv;
    target[pivot_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || columns[v][r] == 0) continue;
      const Rational f = columns[v][r];
      for (std::size_t u = v; u < vars; ++u) columns[u][r] -= f * columns[u][pivot_row];
      target[r] -= f * target[pivot_row];
    }
    pivot_of_var[v] = pivot_row;
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (target[r] != 0) return std::nullopt;
  std::vector<Rational> solution(vars, Rational(0));
  for (std::size_t v = 0; v < vars; ++v)
    if (pivot_of_var[v] != static_cast<std::size_t>(-1)) solution[v] = target[pivot_of_var[v]];
  return solution;
}

}  // namespace detail

inline std::optional<Cyclotomic> Cyclotomic::try_reduce_to_order(long n) const {
  if (n < 1 || order_ % n != 0)
    throw precondition_error("reduction target order must divide the current order");
  if (n == order_) return *this;
  const std::size_t sub_dim =
      static_cast<std::size_t>(detail::cyclotomic_polynomial(n).degree());
  std::vector<std::vector<Rational>> columns;
  columns.reserve(sub_dim);
  const Cyclotomic z = Cyclotomic::zeta(n);
  for (std::size_t i = 0; i < sub_dim; ++i)
    columns.push_back(z.pow(static_cast<long>(i)).lift_to_order(order_).coeffs());
  auto solution = detail::solve_rational_columns(std::move(columns), coeffs_);
  if (!solution) return std::nullopt;
  return Cyclotomic::make(n, std::move(*solution));
}

}  // namespace mckay

#endif  // MCKAY_CYCLOTOMIC_HPP
