#ifndef MCKAY_MATRIX_HPP
#define MCKAY_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/rational.hpp"

namespace mckay {

/// Dense matrix over a cyclotomic field. Entries may carry mixed orders;
/// arithmetic joins them as needed. Immutable value semantics.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
  }

  static Matrix diagonal(std::vector<Cyclotomic> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = std::move(entries[i]);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw precondition_error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw precondition_error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Cyclotomic& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Cyclotomic& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  Matrix scaled(const Cyclotomic& s) const {
    Matrix c = *this;
    for (auto& x : c.a_) x *= s;
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Cyclotomic trace() const {
    require_square("trace");
    Cyclotomic t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  /// All entries lifted to a common ambient order: the lcm over entries,
  /// joined with the requested minimum.
  Matrix lifted_to_order(long order) const {
    const long ambient = Cyclotomic::join_order(order, common_entry_order());
    Matrix c = *this;
    for (auto& x : c.a_) x = x.lift_to_order(ambient);
    return c;
  }

  long common_entry_order() const {
    long ambient = 1;
    for (const auto& x : a_) ambient = Cyclotomic::join_order(ambient, x.order());
    return ambient;
  }

  /// The scalar c when the matrix equals c*I, otherwise nullopt.
  std::optional<Cyclotomic> as_scalar() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Cyclotomic& c = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? at(i, j) != c : !at(i, j).is_zero()) return std::nullopt;
      }
    return c;
  }

  Cyclotomic determinant() const;
  Matrix inverse() const;

  Matrix pow(long k) const {
    require_square("pow");
    if (k < 0) return inverse().pow(-k);
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  static int compare(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      const int c = Cyclotomic::compare(a.a_[i], b.a_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return compare(a, b) != 0; }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += at(i, j).to_string();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void require_square(const char* op) const {
    if (!is_square()) throw precondition_error(std::string(op) + " requires a square matrix");
  }

  std::size_t rows_, cols_;
  std::vector<Cyclotomic> a_;
};

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const { return Matrix::compare(a, b) < 0; }
};

namespace detail {

/// In-place reduced row echelon form; returns the pivot columns.
/// RREF is unique, so equal row spaces produce identical matrices.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const Cyclotomic inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Cyclotomic f = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(Matrix m) { return detail::rref(m).size(); }

/// Basis of the right kernel, one vector per row, in RREF-derived canonical
/// form (deterministic and unique per subspace).
inline Matrix kernel_basis(Matrix m) {
  const std::size_t n = m.cols();
  const auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(k, free_cols[k]) = Cyclotomic(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(k, pivots[r]) = -m.at(r, free_cols[k]);
  }
  return basis;
}

inline Cyclotomic Matrix::determinant() const {
  require_square("determinant");
  Matrix m = *this;
  Cyclotomic det(1);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t p = col;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) return Cyclotomic(0);
    if (p != col) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    const Cyclotomic inv = m.at(col, col).inverse();
    for (std::size_t r = col + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Cyclotomic f = m.at(r, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

inline Matrix Matrix::inverse() const {
  require_square("inverse");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Cyclotomic(1);
  }
  const auto pivots = detail::rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw precondition_error("matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// Fixed subspace of a linear map: ker(g - I) with an RREF-canonical basis.
struct FixedSubspace {
  long dim;
  Matrix basis;  // dim rows spanning the subspace
};

inline FixedSubspace fixed_subspace(const Matrix& g) {
  if (!g.is_square()) throw precondition_error("fixed_subspace requires a square matrix");
  const Matrix basis = kernel_basis(g - Matrix::identity(g.rows()));
  return FixedSubspace{static_cast<long>(basis.rows()), basis};
}

/// Least m >= 1 with g^m = I; throws past the bound (non-finite input).
inline long element_order(const Matrix& g, long bound = 10000) {
  if (!g.is_square()) throw precondition_error("element_order requires a square matrix");
  const Matrix id = Matrix::identity(g.rows());
  Matrix p = g;
  for (long m = 1; m <= bound; ++m) {
    if (p == id) return m;
    p = p * g;
  }
  throw precondition_error("element order exceeds bound " + std::to_string(bound) +
                           "; input not certified of finite order");
}

/// Eigenvalue data of a finite-order matrix: the multiplicity of the
/// eigenvalue zeta_m^k for each exponent k, nonzero entries only.
struct EigenData {
  long modulus;                     // the order m of the matrix
  std::map<long, long> multiplicity;  // exponent k -> mult of zeta_m^k

  long dimension() const {
    long d = 0;
    for (const auto& [k, mult] : multiplicity) d += mult;
    return d;
  }

  long fixed_dim() const {
    auto it = multiplicity.find(0);
    return it == multiplicity.end() ? 0 : it->second;
  }

  /// Multiplicities of the distinct eigenvalues, ascending.
  std::vector<long> multiplicity_multiset() const {
    std::vector<long> v;
    v.reserve(multiplicity.size());
    for (const auto& [k, mult] : multiplicity) v.push_back(mult);
    std::sort(v.begin(), v.end());
    return v;
  }
};

/// Exact eigenvalue multiplicities via the discrete Fourier transform of the
/// trace sequence: mult_k = (1/m) sum_j trace(g^j) zeta_m^{-jk}. Each value
/// is certified to be a nonnegative rational integer.
inline EigenData eigen_data(const Matrix& g, long order_bound = 10000) {
  if (!g.is_square()) throw precondition_error("eigen_data requires a square matrix");
  const long m = element_order(g, order_bound);
  std::vector<Cyclotomic> traces;
  traces.reserve(static_cast<std::size_t>(m));
  Matrix p = Matrix::identity(g.rows());
  for (long j = 0; j < m; ++j) {
    traces.push_back(p.trace());
    p = p * g;
  }
  // power table of zeta_m^{-1}; exponents reduce mod m
  const Cyclotomic zeta_inv = Cyclotomic::zeta(m).inverse();
  std::vector<Cyclotomic> zpow(static_cast<std::size_t>(m), Cyclotomic(1));
  for (long t = 1; t < m; ++t) zpow[static_cast<std::size_t>(t)] = zpow[static_cast<std::size_t>(t - 1)] * zeta_inv;
  EigenData data{m, {}};
  long total = 0;
  for (long k = 0; k < m; ++k) {
    Cyclotomic sum(0);
    for (long j = 0; j < m; ++j)
      sum += traces[static_cast<std::size_t>(j)] * zpow[static_cast<std::size_t>((j * k) % m)];
    const Cyclotomic mult = sum * Cyclotomic(Rational(1, static_cast<unsigned long>(m)));
    if (mult.is_zero()) continue;
    if (!mult.is_rational() || !is_integer(mult.rational_value()) || mult.rational_value() < 0)
      throw internal_error("eigenvalue multiplicity is not a nonnegative integer for exponent " +
                           std::to_string(k) + " (got " + mult.to_string() + ")");
    const long count = static_cast<long>(mult.rational_value().get_num().get_si());
    data.multiplicity[k] = count;
    total += count;
  }
  if (total != static_cast<long>(g.rows()))
    throw internal_error("eigenvalue multiplicities sum to " + std::to_string(total) +
                         ", expected " + std::to_string(g.rows()));
  return data;
}

/// The weight of a finite-order matrix: sum of the a_i in [0,1) with
/// eigenvalues e^{2 pi i a_i}, i.e. sum_k mult_k * k/m. An integer whenever
/// det g = 1.
inline Rational weight(const EigenData& data) {
  Rational w(0);
  for (const auto& [k, mult] : data.multiplicity)
    w += Rational(mult) * make_rational(k, data.modulus);
  return w;
}

inline Rational weight(const Matrix& g, long order_bound = 10000) {
  return weight(eigen_data(g, order_bound));
}

/// Standard symplectic form J = [[0, I], [-I, 0]] on C^{2n}.
inline Matrix symplectic_form(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(i, n + i) = Cyclotomic(1);
    j.at(n + i, i) = Cyclotomic(-1);
  }
  return j;
}

/// True iff g^T J g = J for the standard form; the size must be even.
inline bool is_symplectic(const Matrix& g) {
  if (!g.is_square()) throw precondition_error("is_symplectic requires a square matrix");
  if (g.rows() % 2 != 0) throw precondition_error("is_symplectic requires an even matrix size");
  const Matrix j = symplectic_form(g.rows() / 2);
  return g.transpose() * j * g == j;
}

/// The induced action on the cotangent bundle: g -> diag(g, (g^T)^{-1}).
/// The image preserves the standard symplectic form.
inline Matrix cotangent_lift(const Matrix& g) {
  if (!g.is_square()) throw precondition_error("cotangent_lift requires a square matrix");
  const std::size_t n = g.rows();
  const Matrix dual = g.transpose().inverse();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = g.at(i, j);
      m.at(n + i, n + j) = dual.at(i, j);
    }
  return m;
}

}  // namespace mckay

#endif  // MCKAY_MATRIX_HPP
