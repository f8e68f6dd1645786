#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "repscheme/matrix.hpp"

namespace repscheme {

/// Element of SO(3) = PO(3) over an exact field: M^T M = I and det M = 1,
/// checked on construction. Line involutions are represented as pi-rotations
/// about conormals, so everything stays in one matrix group.
struct SO3Element {
  ExactMatrix matrix;
  explicit SO3Element(ExactMatrix m);
  friend SO3Element operator*(const SO3Element& a, const SO3Element& b) {
    return SO3Element(a.matrix * b.matrix);
  }
  SO3Element inverse() const { return SO3Element(matrix.transpose()); }
  friend bool operator==(const SO3Element& a, const SO3Element& b) {
    return a.matrix == b.matrix;
  }
};

/// Element of SL(2) over an exact field: det = 1, checked on construction.
struct SL2Element {
  ExactMatrix matrix;
  explicit SL2Element(ExactMatrix m);
  friend SL2Element operator*(const SL2Element& a, const SL2Element& b) {
    return SL2Element(a.matrix * b.matrix);
  }
  SL2Element inverse() const;  // adjugate; polynomial in the entries
  SL2Element negated() const { return SL2Element(matrix.scaled(FieldElement(Rational(-1)))); }
  friend bool operator==(const SL2Element& a, const SL2Element& b) {
    return a.matrix == b.matrix;
  }
};

/// The involution 2aa^T/(a.a) - I fixing [a] and acting as -1 on its
/// orthogonal complement. Throws when the axis is zero or isotropic.
SO3Element rotation_pi(const std::vector<FieldElement>& axis);

/// Ensures sqrt(-1) is available; returns the (possibly extended) tower and i.
std::pair<TowerPtr, FieldElement> ensure_i(const TowerPtr& tower);

/// The two preimages (g~, -g~) of g under the adjoint covering, extending the
/// tower by i and by the square roots the quaternion extraction needs. The
/// first element is sign-canonical for determinism.
std::pair<SL2Element, SL2Element> spin_lift(const SO3Element& g);

/// Adjoint action on trace-zero 2x2 matrices in the Pauli basis; the covering
/// SL(2) -> SO(3). adjoint(-g) = adjoint(g), adjoint(spin_lift(h)) = h.
SO3Element adjoint(const SL2Element& g);

/// Ad of a group element as a 3x3 matrix: the matrix itself for SO(3), the
/// adjoint image for SL(2).
ExactMatrix ad_matrix(const ExactMatrix& element);

struct CentralizerReport {
  int lie_dim = 0;
  bool is_center_only = false;
  bool certified_at_lie_level = false;  // group-level check skipped (infinite closure)
};

/// Dimension of the common Ad-fixed subspace of the Lie algebra, plus a
/// group-level center check when the closure is finite.
CentralizerReport centralizer_dimension(const std::vector<ExactMatrix>& elements,
                                        int closure_cap = 256);

struct FiniteGroupTable {
  std::vector<ExactMatrix> elements;       // discovery order, deterministic
  std::vector<std::vector<int>> table;     // table[i][j] = index of e_i * e_j
  int order() const { return static_cast<int>(elements.size()); }
};

struct ExceedsCap {
  int partial_count = 0;
};

using ClosureResult = std::variant<FiniteGroupTable, ExceedsCap>;

/// Breadth-first multiplicative closure with exact equality. Returns the
/// multiplication table when the count stays within cap.
ClosureResult group_closure(const std::vector<ExactMatrix>& generators, int cap);

struct Dense {};
struct Finite {
  int order = 0;
};
struct Undetermined {
  std::string reason;
};
using DensityResult = std::variant<Dense, Finite, Undetermined>;

/// Density certificate for subgroups of SO(3,R): Finite when the closure
/// terminates under cap; Dense when the action is irreducible (exact common
/// eigenvector search) and some short word has rational trace t with
/// (t-1)/2 outside {0, +-1/2, +-1}; otherwise Undetermined.
DensityResult density_certificate(const std::vector<SO3Element>& generators, int cap = 10000,
                                  int witness_word_length = 6);

/// Exact common-eigenline test over tower extensions (the irreducibility
/// decision behind the density certificate).
bool has_common_eigenline(const std::vector<ExactMatrix>& elements);

/// Default closure cap; REPSCHEME_CAP and --cap override it in the CLI.
inline constexpr int kDefaultClosureCap = 10000;

}  // namespace repscheme
