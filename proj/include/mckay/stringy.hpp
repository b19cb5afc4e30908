#ifndef MCKAY_STRINGY_HPP
#define MCKAY_STRINGY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/epoly.hpp"
#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

/// One summand of the orbifold E-function: a fixed-point component W of a
/// group element, carrying its weight and the E-polynomial of W/C(g,W).
struct Stratum {
  long weight = 0;
  EPoly quotient_e;
  std::string label;
};

/// Orbifold E-function assembly: sum over strata of (uv)^weight * E.
inline EPoly orbifold_assemble(const std::vector<Stratum>& strata) {
  EPoly total;
  for (const auto& s : strata) {
    if (s.weight < 0) throw precondition_error("stratum weight must be nonnegative");
    total += EPoly::uv_power(s.weight) * s.quotient_e;
  }
  return total;
}

namespace detail {

inline void require_symplectic(const MatrixGroup& g, const char* where) {
  if (g.dim() % 2 != 0)
    throw precondition_error(std::string(where) + " requires a group of even size");
  for (std::size_t i = 0; i < g.order(); ++i)
    if (!is_symplectic(g.element(i)))
      throw precondition_error(std::string(where) + ": element " + std::to_string(i) +
                               " does not preserve the symplectic form");
}

inline long integral_weight(const Matrix& g, std::size_t index) {
  const Rational w = weight(g);
  if (!is_integer(w) || w < 0)
    throw internal_error("weight of element " + std::to_string(index) +
                         " is not a nonnegative integer: " + to_string(w));
  return static_cast<long>(w.get_num().get_si());
}

}  // namespace detail

/// Stringy (= orbifold) E-function of C^{2n}/G for a finite symplectic
/// linear group: each conjugacy class contributes one linear stratum
/// Fix(g) with E(Fix(g)/C(g)) = (uv)^{dim Fix(g)}.
inline EPoly stringy_e_linear_symplectic(const MatrixGroup& g) {
  detail::require_symplectic(g, "stringy_e_linear_symplectic");
  std::vector<Stratum> strata;
  const auto& classes = g.conjugacy_classes();
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    const std::size_t rep = classes.classes[c][0];
    const Matrix& m = g.element(rep);
    strata.push_back(Stratum{detail::integral_weight(m, rep),
                             affine_quotient_e(fixed_subspace(m).dim),
                             "class " + std::to_string(c)});
  }
  return orbifold_assemble(strata);
}

/// One row of the projective class table behind the T*P^n Hodge formula:
/// a projective class with the multiplicities of the distinct eigenvalues
/// of its least-index lift.
struct TpnClassRow {
  std::size_t representative = 0;  // least element index in the block
  std::size_t block_size = 0;      // number of ambient-group elements in the block
  std::vector<long> k;             // eigenvalue multiplicities, ascending
};

/// Validates the determinant-one precondition and the consistency of
/// eigenvalue-multiplicity multisets across the lifts inside each
/// projective class, then returns one row per class.
inline std::vector<TpnClassRow> tpn_class_table(const MatrixGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i).determinant() != Cyclotomic(1))
      throw precondition_error("element " + std::to_string(i) + " has determinant != 1");
  const auto& projective = g.projective_classes();
  const auto& ordinary = g.conjugacy_classes();
  std::vector<TpnClassRow> rows;
  rows.reserve(projective.classes.size());
  for (const auto& block : projective.classes) {
    TpnClassRow row;
    row.representative = block[0];
    row.block_size = block.size();
    row.k = eigen_data(g.element(block[0])).multiplicity_multiset();
    // All lifts in the block must agree on the multiset; conjugate elements
    // share eigen data, so one check per ordinary class inside the block
    // suffices.
    std::vector<std::size_t> seen_classes;
    for (const std::size_t member : block) {
      const std::size_t cls = ordinary.class_of[member];
      if (std::find(seen_classes.begin(), seen_classes.end(), cls) != seen_classes.end()) continue;
      seen_classes.push_back(cls);
      if (eigen_data(g.element(member)).multiplicity_multiset() != row.k)
        throw internal_error("projective class with representative " +
                             std::to_string(row.representative) +
                             " has lifts with different eigenvalue multiplicity multisets");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Hodge-number generating polynomial of a symplectic resolution of
/// T*P^n / G for G in SL(n+1):
///   (uv)^n * sum over projective classes of sum_i (1 + uv + ... + (uv)^{k_i - 1}).
/// The output is a polynomial in uv with nonnegative coefficients.
inline EPoly hodge_tpn(const MatrixGroup& g) {
  if (g.dim() < 1) throw precondition_error("hodge_tpn requires matrix size >= 1");
  const long n = static_cast<long>(g.dim()) - 1;
  EPoly sum;
  for (const TpnClassRow& row : tpn_class_table(g))
    for (const long k : row.k) sum += geometric_sum(k);
  return EPoly::uv_power(n) * sum;
}

/// Euler number of the same resolution, by the class-counting corollary
/// e = (n+1) * #projective classes. Independent of hodge_tpn.
inline Integer euler_tpn(const MatrixGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i).determinant() != Cyclotomic(1))
      throw precondition_error("element " + std::to_string(i) + " has determinant != 1");
  return Integer(g.dim()) * Integer(g.projective_classes().classes.size());
}

/// A caller-supplied fixed-point stratum of a general projective base:
/// the codimension of W in X and the E-polynomial of W/C(g,W).
struct GeneralStratum {
  long codim = 0;
  EPoly quotient_e;
};

/// Hodge-number assembly for T*X / G over caller-supplied stratum data:
/// (uv)^n * sum of E(W/C(g,W)). The weight (uv)^{codim W} cancels against
/// the affine-fiber factor (uv)^{dim W}, so each stratum contributes at
/// full shift (uv)^n; the codimension is validated but not otherwise used.
inline EPoly hodge_cotangent_general(long n, const std::vector<GeneralStratum>& strata) {
  if (n < 0) throw precondition_error("hodge_cotangent_general requires n >= 0");
  EPoly sum;
  for (const auto& s : strata) {
    if (s.codim < 0 || s.codim > n)
      throw precondition_error("stratum codimension must lie in [0, n]");
    sum += s.quotient_e;
  }
  return EPoly::uv_power(n) * sum;
}

}  // namespace mckay

#endif  // MCKAY_STRINGY_HPP
