#ifndef MCKAY_CRITERIA_HPP
#define MCKAY_CRITERIA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

/// A distinct fixed subspace Fix(g) for some g != 1, with the least element
/// index realizing it.
struct FixedSubspaceRecord {
  std::size_t element;  // witness: least index with this fixed subspace
  long dim;
  Matrix basis;  // RREF rows; canonical per subspace
};

namespace detail {

/// True iff the row space of `inner` is contained in the row space of
/// `outer`, decided exactly by a rank computation.
inline bool subspace_contained(const Matrix& inner, const Matrix& outer, std::size_t ambient) {
  if (inner.rows() == 0) return true;
  if (inner.rows() > outer.rows()) return false;
  Matrix stacked(inner.rows() + outer.rows(), ambient);
  for (std::size_t i = 0; i < outer.rows(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) stacked.at(i, j) = outer.at(i, j);
  for (std::size_t i = 0; i < inner.rows(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) stacked.at(outer.rows() + i, j) = inner.at(i, j);
  return rank(stacked) == outer.rows();
}

}  // namespace detail

/// The distinct fixed subspaces of the nontrivial elements, restricted to
/// those maximal under inclusion. The zero subspace {0} counts as a fixed
/// subspace; it survives only when no nontrivial element fixes more.
inline std::vector<FixedSubspaceRecord> maximal_fixed_subspaces(const MatrixGroup& g) {
  // dedupe by canonical (RREF) basis
  std::map<Matrix, FixedSubspaceRecord, MatrixLess> distinct;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i == g.identity_index()) continue;
    const FixedSubspace fix = fixed_subspace(g.element(i));
    distinct.emplace(fix.basis, FixedSubspaceRecord{i, fix.dim, fix.basis});
  }
  std::vector<FixedSubspaceRecord> all;
  for (const auto& [basis, record] : distinct) all.push_back(record);
  std::vector<FixedSubspaceRecord> maximal;
  for (const auto& candidate : all) {
    bool dominated = false;
    for (const auto& other : all) {
      if (other.dim <= candidate.dim) continue;
      if (detail::subspace_contained(candidate.basis, other.basis, g.dim())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(candidate);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const FixedSubspaceRecord& a, const FixedSubspaceRecord& b) { return a.element < b.element; });
  return maximal;
}

/// Codimensions of the maximal fixed subspaces; empty iff the group is
/// trivial.
inline std::vector<long> maximal_fixed_codims(const MatrixGroup& g) {
  std::vector<long> codims;
  for (const auto& record : maximal_fixed_subspaces(g))
    codims.push_back(static_cast<long>(g.dim()) - record.dim);
  std::sort(codims.begin(), codims.end());
  return codims;
}

/// Verdict of the pure-codimension-2 necessary condition. A fail verdict
/// certifies that no symplectic resolution of C^{2n}/G exists; the witness
/// is an element whose maximal fixed subspace has codimension != 2.
struct Codim2Verdict {
  bool pass = true;
  std::optional<std::size_t> witness;  // element index
  long witness_fixed_dim = 0;
  long witness_codim = 0;
};

inline Codim2Verdict passes_pure_codim2(const MatrixGroup& g) {
  if (g.dim() % 2 != 0 || !is_symplectic_group(g))
    throw precondition_error("passes_pure_codim2 requires a symplectic group");
  Codim2Verdict verdict;
  for (const auto& record : maximal_fixed_subspaces(g)) {
    const long codim = static_cast<long>(g.dim()) - record.dim;
    if (codim != 2) {
      verdict.pass = false;
      verdict.witness = record.element;
      verdict.witness_fixed_dim = record.dim;
      verdict.witness_codim = codim;
      break;
    }
  }
  return verdict;
}

/// Elements whose fixed subspace has codimension exactly 2.
inline std::vector<std::size_t> symplectic_reflections(const MatrixGroup& g) {
  if (g.dim() % 2 != 0 || !is_symplectic_group(g))
    throw precondition_error("symplectic_reflections requires a symplectic group");
  std::vector<std::size_t> reflections;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i == g.identity_index()) continue;
    if (fixed_subspace(g.element(i)).dim == static_cast<long>(g.dim()) - 2)
      reflections.push_back(i);
  }
  return reflections;
}

/// Result of a generated-by-reflections test: the reflection indices, the
/// order of the subgroup they generate, and the verdict.
struct GenerationVerdict {
  bool generated = false;
  std::vector<std::size_t> reflections;
  std::size_t subgroup_order = 0;
};

namespace detail {

inline GenerationVerdict generation_verdict(const MatrixGroup& g, std::vector<std::size_t> reflections) {
  GenerationVerdict verdict;
  verdict.reflections = std::move(reflections);
  std::vector<Matrix> gens;
  for (const std::size_t i : verdict.reflections) gens.push_back(g.element(i));
  const MatrixGroup subgroup =
      MatrixGroup::closure(gens, ClosureOptions{g.order(), g.dim()});
  verdict.subgroup_order = subgroup.order();
  verdict.generated = subgroup.order() == g.order();
  return verdict;
}

}  // namespace detail

/// Necessary condition of Verbitsky type: a symplectic quotient C^{2n}/G
/// with a symplectic resolution forces G to be generated by its symplectic
/// reflections.
inline GenerationVerdict generated_by_symplectic_reflections(const MatrixGroup& g) {
  return detail::generation_verdict(g, symplectic_reflections(g));
}

/// Chevalley-Shephard-Todd smoothness test: C^n/G is smooth iff G is
/// generated by its pseudo-reflections (elements fixing a hyperplane).
inline GenerationVerdict generated_by_pseudo_reflections(const MatrixGroup& g) {
  std::vector<std::size_t> reflections;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i == g.identity_index()) continue;
    if (fixed_subspace(g.element(i)).dim == static_cast<long>(g.dim()) - 1)
      reflections.push_back(i);
  }
  return detail::generation_verdict(g, reflections);
}

}  // namespace mckay

#endif  // MCKAY_CRITERIA_HPP
