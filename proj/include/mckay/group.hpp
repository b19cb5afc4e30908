#ifndef MCKAY_GROUP_HPP
#define MCKAY_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

struct ClosureOptions {
  std::size_t cap = 10000;                  // abort past this many elements
  std::optional<std::size_t> dim;           // required when generators are empty
};

struct ConjugacyClasses {
  std::vector<std::vector<std::size_t>> classes;  // ordered by least member; identity class first
  std::vector<std::size_t> class_of;              // element index -> class id
};

struct ProjectiveClasses {
  // Classes of the image modulo the scalar subgroup, as blocks of element
  // indices in the ambient group; the least index in a block is its
  // representative lift.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

/// A finite group of invertible cyclotomic matrices, stored as the full
/// element list in deterministic breadth-first closure order with the
/// identity at index 0. Immutable after construction; the conjugacy-class
/// partitions are computed lazily with compute-once semantics and are safe
/// under concurrent first access.
class MatrixGroup {
 public:
  /// Breadth-first closure of the generating set under multiplication.
  /// Generators are lifted to a common cyclotomic order first; an empty
  /// generating set needs an explicit dimension and yields the trivial group.
  static MatrixGroup closure(const std::vector<Matrix>& generators, ClosureOptions opts = {}) {
    if (generators.empty()) {
      if (!opts.dim) throw precondition_error("empty generating set requires an explicit dimension");
      return trivial(*opts.dim);
    }
    const std::size_t n = generators[0].rows();
    long ambient = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Matrix& g = generators[i];
      if (!g.is_square() || g.rows() != n)
        throw precondition_error("generator " + std::to_string(i) + " has mismatched size");
      ambient = Cyclotomic::join_order(ambient, g.common_entry_order());
    }
    auto data = std::make_shared<Data>();
    data->dim = n;
    data->cyc_order = ambient;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Matrix g = generators[i].lifted_to_order(ambient);
      if (g.determinant().is_zero())
        throw precondition_error("generator " + std::to_string(i) + " is not invertible");
      data->generators.push_back(std::move(g));
    }

    const Matrix id = Matrix::identity(n).lifted_to_order(ambient);
    data->elements.push_back(id);
    data->index.emplace(id, 0);
    for (std::size_t next = 0; next < data->elements.size(); ++next) {
      for (const Matrix& g : data->generators) {
        Matrix p = data->elements[next] * g;
        if (data->index.count(p)) continue;
        if (data->elements.size() >= opts.cap)
          throw precondition_error("closure exceeded cap " + std::to_string(opts.cap) +
                                   "; group not certified finite at this cap");
        data->index.emplace(p, data->elements.size());
        data->elements.push_back(std::move(p));
      }
    }
    data->finish();
    return MatrixGroup(std::move(data));
  }

  static MatrixGroup trivial(std::size_t dim, long cyc_order = 1) {
    auto data = std::make_shared<Data>();
    data->dim = dim;
    data->cyc_order = cyc_order;
    const Matrix id = Matrix::identity(dim).lifted_to_order(cyc_order);
    data->elements.push_back(id);
    data->index.emplace(id, 0);
    data->finish();
    return MatrixGroup(std::move(data));
  }

  /// Rebuilds a group by applying an injective homomorphism elementwise
  /// (used by the cotangent lift; the image is closed by construction).
  template <class F>
  MatrixGroup mapped(F&& hom) const {
    auto data = std::make_shared<Data>();
    data->dim = hom(element(0)).rows();
    long ambient = 1;
    for (const Matrix& g : d_->elements) {
      Matrix m = hom(g);
      ambient = Cyclotomic::join_order(ambient, m.common_entry_order());
      data->elements.push_back(std::move(m));
    }
    data->cyc_order = ambient;
    for (auto& m : data->elements) m = m.lifted_to_order(ambient);
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      if (!data->index.emplace(data->elements[i], i).second)
        throw internal_error("group map is not injective");
    }
    for (const Matrix& g : d_->generators) data->generators.push_back(hom(g).lifted_to_order(ambient));
    data->finish();
    return MatrixGroup(std::move(data));
  }

  std::size_t order() const { return d_->elements.size(); }
  std::size_t dim() const { return d_->dim; }
  long cyclotomic_order() const { return d_->cyc_order; }
  std::size_t identity_index() const { return 0; }
  const std::vector<Matrix>& elements() const { return d_->elements; }
  const Matrix& element(std::size_t i) const { return d_->elements[i]; }
  const std::vector<Matrix>& generators() const { return d_->generators; }

  std::optional<std::size_t> index_of(const Matrix& m) const {
    const auto it = d_->index.find(m);
    if (it != d_->index.end()) return it->second;
    // retry at the ambient order in case the query carries a sub-order
    const auto lifted = d_->index.find(m.lifted_to_order(d_->cyc_order));
    if (lifted != d_->index.end()) return lifted->second;
    return std::nullopt;
  }

  std::size_t inverse_index(std::size_t i) const { return d_->inverse_index[i]; }

  /// Indices of the scalar elements zeta * I (a central subgroup).
  const std::vector<std::size_t>& scalar_indices() const { return d_->scalar_indices; }

  /// Orbit partition under conjugation; brute-force orbits by generator
  /// conjugation. Classes are listed by least representative, the identity
  /// class (a singleton) first.
  const ConjugacyClasses& conjugacy_classes() const {
    std::call_once(d_->classes_once, [this] { d_->classes = compute_classes(false); });
    return d_->classes;
  }

  /// Classes of the image in the projective group: g ~ h iff some conjugate
  /// of g equals a scalar multiple of h.
  const ProjectiveClasses& projective_classes() const {
    std::call_once(d_->projective_once, [this] {
      const ConjugacyClasses raw = compute_classes(true);
      d_->projective = ProjectiveClasses{raw.classes, raw.class_of};
    });
    return d_->projective;
  }

 private:
  struct Data {
    std::size_t dim = 0;
    long cyc_order = 1;
    std::vector<Matrix> elements;
    std::vector<Matrix> generators;
    std::map<Matrix, std::size_t, MatrixLess> index;
    std::vector<std::size_t> inverse_index;
    std::vector<std::size_t> scalar_indices;

    mutable std::once_flag classes_once;
    mutable ConjugacyClasses classes;
    mutable std::once_flag projective_once;
    mutable ProjectiveClasses projective;

    // derived tables filled once the element list is complete
    void finish() {
      inverse_index.resize(elements.size());
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto it = index.find(elements[i].inverse());
        if (it == index.end()) throw internal_error("closure is not inverse-closed");
        inverse_index[i] = it->second;
      }
      for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].as_scalar()) scalar_indices.push_back(i);
    }
  };

  explicit MatrixGroup(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

  std::size_t lookup(const Matrix& m) const {
    const auto it = d_->index.find(m);
    if (it == d_->index.end()) throw internal_error("product left the closed element set");
    return it->second;
  }

  ConjugacyClasses compute_classes(bool modulo_scalars) const {
    const std::size_t n = order();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    ConjugacyClasses result;
    result.class_of.assign(n, unassigned);
    std::vector<Matrix> gen_inverses;
    for (const Matrix& g : d_->generators) gen_inverses.push_back(g.inverse());
    for (std::size_t seed = 0; seed < n; ++seed) {
      if (result.class_of[seed] != unassigned) continue;
      const std::size_t id = result.classes.size();
      std::vector<std::size_t> members;
      std::deque<std::size_t> queue{seed};
      result.class_of[seed] = id;
      while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        members.push_back(cur);
        auto visit = [&](const Matrix& m) {
          const std::size_t j = lookup(m);
          if (result.class_of[j] != unassigned) return;
          result.class_of[j] = id;
          queue.push_back(j);
        };
        for (std::size_t k = 0; k < d_->generators.size(); ++k)
          visit(d_->generators[k] * element(cur) * gen_inverses[k]);
        if (modulo_scalars)
          for (const std::size_t s : d_->scalar_indices) visit(element(s) * element(cur));
      }
      std::sort(members.begin(), members.end());
      result.classes.push_back(std::move(members));
    }
    return result;
  }

  std::shared_ptr<const Data> d_;
};

/// The induced group on the cotangent bundle: every element g maps to
/// diag(g, (g^T)^{-1}) inside Sp(2n).
inline MatrixGroup cotangent_lift(const MatrixGroup& g) {
  return g.mapped([](const Matrix& m) { return cotangent_lift(m); });
}

/// True iff every element preserves the standard symplectic form.
inline bool is_symplectic_group(const MatrixGroup& g) {
  if (g.dim() % 2 != 0) return false;
  for (const Matrix& m : g.elements())
    if (!is_symplectic(m)) return false;
  return true;
}

}  // namespace mckay

#endif  // MCKAY_GROUP_HPP
