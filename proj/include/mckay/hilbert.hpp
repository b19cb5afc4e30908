#ifndef MCKAY_HILBERT_HPP
#define MCKAY_HILBERT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/series.hpp"

namespace mckay {

/// Generating series of Poincare polynomials of symmetric products of a
/// genus-g curve: (1 + t q)^{2g} / ((1 - q)(1 - t^2 q)), truncated at q^N.
/// The coefficient of q^m is P_t(S^m Sigma) for Betti numbers (1, 2g, 1).
inline QSeries macdonald_series(long genus, long order) {
  if (genus < 0) throw precondition_error("macdonald_series requires genus >= 0");
  if (order < 0) throw precondition_error("macdonald_series requires order >= 0");
  QSeries numerator(order, {TPoly(1), TPoly::t_power(1)});
  return numerator.pow(2 * genus) *
         QSeries::geometric_inverse(order, TPoly(1), 1) *
         QSeries::geometric_inverse(order, TPoly::t_power(2), 1);
}

/// P_t(S^m Sigma) for a genus-g curve.
inline TPoly sym_power_poincare(long m, long genus) {
  if (m < 0) throw precondition_error("negative symmetric power");
  return macdonald_series(genus, m).coeff(static_cast<std::size_t>(m));
}

/// Poincare polynomial of the product of symmetric products attached to a
/// partition: prod_j P_t(S^{a_j} Sigma).
inline TPoly poincare_sym_nu(const Partition& nu, long genus) {
  TPoly product(1);
  long check = 0;
  for (std::size_t j = 0; j < nu.multiplicity.size(); ++j) {
    const long a = nu.multiplicity[j];
    if (a < 0) throw precondition_error("negative part multiplicity");
    check += static_cast<long>(j + 1) * a;
    if (a > 0) product *= sym_power_poincare(a, genus);
  }
  if (check != nu.n) throw precondition_error("partition multiplicities do not sum to n");
  return product;
}

/// Poincare polynomial of Hilb^n(T*Sigma) as the stratum sum
/// sum_nu t^{2n - 2 d(nu)} * P_t(S^nu Sigma) over partitions nu of n.
inline TPoly hilb_poincare_strata(long n, long genus) {
  if (n < 0) throw precondition_error("hilb_poincare_strata requires n >= 0");
  TPoly total;
  for (const Partition& nu : partitions(n)) {
    const long d = nu.parts_count();
    total += poincare_sym_nu(nu, genus).shifted(static_cast<std::size_t>(2 * (n - d)));
  }
  return total;
}

/// Generating series sum_n P_t(Hilb^n(T*Sigma)) q^n as the infinite product
///   prod_{d>=1} (1 + t^{2d-1} q^d)^{b_1} / ((1 - t^{2d-2} q^d)^{b_0} (1 - t^{2d} q^d)^{b_2})
/// with (b_0, b_1, b_2) = (1, 2g, 1), truncated at q^N. Factors with d > N
/// contribute nothing through q^N.
inline QSeries goettsche_series(long genus, long order) {
  if (genus < 0) throw precondition_error("goettsche_series requires genus >= 0");
  if (order < 0) throw precondition_error("goettsche_series requires order >= 0");
  QSeries product = QSeries::one(order);
  for (long d = 1; d <= order; ++d) {
    const QSeries odd = QSeries::one(order) +
                        QSeries::monomial(order, TPoly::t_power(static_cast<std::size_t>(2 * d - 1)), d);
    product *= odd.pow(2 * genus);
    product *= QSeries::geometric_inverse(order, TPoly::t_power(static_cast<std::size_t>(2 * d - 2)), d);
    product *= QSeries::geometric_inverse(order, TPoly::t_power(static_cast<std::size_t>(2 * d)), d);
  }
  return product;
}

/// Outcome of comparing the product formula against the stratum sums,
/// coefficient by coefficient through q^N.
struct SeriesMatchVerdict {
  bool pass = true;
  long first_mismatch = -1;
  TPoly product_side;
  TPoly strata_side;
};

inline SeriesMatchVerdict check_goettsche_vs_strata(long genus, long order) {
  const QSeries product = goettsche_series(genus, order);
  SeriesMatchVerdict verdict;
  for (long n = 0; n <= order; ++n) {
    const TPoly strata = hilb_poincare_strata(n, genus);
    if (product.coeff(static_cast<std::size_t>(n)) != strata) {
      verdict.pass = false;
      verdict.first_mismatch = n;
      verdict.product_side = product.coeff(static_cast<std::size_t>(n));
      verdict.strata_side = strata;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace mckay

#endif  // MCKAY_HILBERT_HPP
