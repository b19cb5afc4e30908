#ifndef MCKAY_CATALOG_HPP
#define MCKAY_CATALOG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

namespace detail {

inline long parse_catalog_parameter(std::string_view name, std::string_view text, long min_value) {
  long value = 0;
  for (const char c : text) {
    if (c < '0' || c > '9')
      throw precondition_error("catalog name '" + std::string(name) + "': parameter '" +
                               std::string(text) + "' is not a positive integer");
    value = value * 10 + (c - '0');
    if (value > 100000) break;
  }
  if (text.empty() || value < min_value)
    throw precondition_error("catalog name '" + std::string(name) + "': parameter must be >= " +
                             std::to_string(min_value));
  return value;
}

/// Unit quaternion a + b*i + c*j + d*k as a 2x2 matrix over Q(i).
inline Matrix quaternion_matrix(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                                const Cyclotomic& d) {
  const Cyclotomic i = Cyclotomic::zeta(4);
  return Matrix::from_rows({{a + b * i, c + d * i}, {-c + d * i, a - b * i}});
}

inline Matrix permutation_matrix(const std::vector<std::size_t>& image) {
  Matrix m(image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m.at(image[j], j) = Cyclotomic(1);
  return m;
}

}  // namespace detail

/// Built-in named groups. Generators are the standard small presentations:
///   trivial-sl2          {I} in SL(2)
///   minus-one-sl2        {+-I} in SL(2)
///   minus-one-sp4        {+-I} in Sp(4)
///   cyclic-sl2:k         <diag(z_k, z_k^{-1})>, order k
///   binary-dihedral:k    <diag(z_{2k}, z_{2k}^{-1}), [[0,1],[-1,0]]>, order 4k
///   binary-tetrahedral   quaternions <i, (-1+i+j+k)/2> over Q(i), order 24
///   binary-octahedral    <diag(z8, z8^7), (-1+i+j+k)/2> over Q(z8), order 48
///   binary-icosahedral   Klein's SL(2) pair over Q(z5), order 120
///   symmetric:n          permutation matrices in GL(n), order n!
inline MatrixGroup catalog_group(std::string_view name, std::size_t cap = 10000) {
  const ClosureOptions opts{cap, std::nullopt};
  if (name == "trivial-sl2") return MatrixGroup::trivial(2);
  if (name == "minus-one-sl2")
    return MatrixGroup::closure({Matrix::identity(2).scaled(Cyclotomic(-1))}, opts);
  if (name == "minus-one-sp4")
    return MatrixGroup::closure({Matrix::identity(4).scaled(Cyclotomic(-1))}, opts);
  if (name == "binary-tetrahedral") {
    const Cyclotomic half(Rational(1, 2));
    return MatrixGroup::closure(
        {detail::quaternion_matrix(0, 1, 0, 0),
         detail::quaternion_matrix(-half, half, half, half)},
        opts);
  }
  if (name == "binary-octahedral") {
    const Cyclotomic half(Rational(1, 2));
    const Cyclotomic z8 = Cyclotomic::zeta(8);
    return MatrixGroup::closure(
        {Matrix::diagonal({z8, z8.pow(7)}),
         detail::quaternion_matrix(-half, half, half, half)},
        opts);
  }
  if (name == "binary-icosahedral") {
    const Cyclotomic z = Cyclotomic::zeta(5);
    // det = 1 because (z - z^4)^2 + (z^2 - z^3)^2 = -5.
    const Cyclotomic inv_sqrt5 =
        (z - z.pow(2) - z.pow(3) + z.pow(4)) * Cyclotomic(Rational(1, 5));
    const Matrix rotation = Matrix::diagonal({z.pow(3), z.pow(2)});
    const Matrix involution = Matrix::from_rows({{inv_sqrt5 * (-(z - z.pow(4))), inv_sqrt5 * (z.pow(2) - z.pow(3))},
                                                 {inv_sqrt5 * (z.pow(2) - z.pow(3)), inv_sqrt5 * (z - z.pow(4))}});
    return MatrixGroup::closure({rotation, involution}, opts);
  }
  if (name.rfind("cyclic-sl2:", 0) == 0) {
    const long k = detail::parse_catalog_parameter(name, name.substr(11), 1);
    if (k == 1) return MatrixGroup::trivial(2);
    const Cyclotomic z = Cyclotomic::zeta(k);
    return MatrixGroup::closure({Matrix::diagonal({z, z.inverse()})}, opts);
  }
  if (name.rfind("binary-dihedral:", 0) == 0) {
    const long k = detail::parse_catalog_parameter(name, name.substr(16), 1);
    const Cyclotomic z = Cyclotomic::zeta(2 * k);
    return MatrixGroup::closure(
        {Matrix::diagonal({z, z.inverse()}), detail::quaternion_matrix(0, 0, 1, 0)}, opts);
  }
  if (name.rfind("symmetric:", 0) == 0) {
    const long n = detail::parse_catalog_parameter(name, name.substr(10), 1);
    if (n == 1) return MatrixGroup::trivial(1);
    std::vector<std::size_t> swap_first_two, cycle;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      swap_first_two.push_back(j < 2 ? 1 - j : j);
      cycle.push_back((j + 1) % static_cast<std::size_t>(n));
    }
    return MatrixGroup::closure(
        {detail::permutation_matrix(swap_first_two), detail::permutation_matrix(cycle)}, opts);
  }
  throw precondition_error("unknown catalog group '" + std::string(name) + "'");
}

/// Names and one-line descriptions, for CLI help and docs.
inline std::vector<std::pair<std::string, std::string>> catalog_names() {
  return {
      {"trivial-sl2", "trivial group in SL(2)"},
      {"minus-one-sl2", "{+-I} in SL(2), the A1 point group"},
      {"minus-one-sp4", "{+-I} in Sp(4)"},
      {"cyclic-sl2:k", "cyclic group <diag(z_k, z_k^-1)> of order k"},
      {"binary-dihedral:k", "binary dihedral group of order 4k"},
      {"binary-tetrahedral", "binary tetrahedral group, order 24"},
      {"binary-octahedral", "binary octahedral group, order 48"},
      {"binary-icosahedral", "binary icosahedral group, order 120"},
      {"symmetric:n", "permutation matrices of S_n in GL(n)"},
  };
}

}  // namespace mckay

#endif  // MCKAY_CATALOG_HPP
