#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repscheme/rational.hpp"

namespace repscheme {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Coefficients of a tower element, indexed by radical subset. Bit i of the
/// mask selects radical r_i; the value is the rational coefficient of the
/// corresponding square-free monomial in the radicals. No zero entries.
using CoeffMap = std::map<std::uint64_t, Rational>;

/// An iterated quadratic extension of Q. Radical r_i satisfies
/// r_i^2 = radicand(i), where radicand(i) only involves r_0..r_{i-1}.
/// The adjunction of i = sqrt(-1) is the special case radicand -1.
/// Invariant: no radicand is a square in the tower below it, so each step
/// has degree exactly 2 and coefficient maps are normal forms.
class FieldTower {
 public:
  static TowerPtr rationals();

  int height() const { return static_cast<int>(radicands_.size()); }
  const CoeffMap& radicand(int i) const { return radicands_[static_cast<std::size_t>(i)]; }

  /// True when every radicand is a positive real, so the tower sits inside
  /// the reals and elements have an exact sign.
  bool all_real() const { return all_real_; }

  /// Structural prefix test; elements move freely along prefix chains.
  bool is_prefix_of(const FieldTower& other) const;

  /// Tower extended by one radical. Callers go through adjoin_sqrt, which
  /// enforces the non-square invariant.
  TowerPtr extended(CoeffMap radicand) const;

  /// Max height accepted by adjoin_sqrt (the configured limit).
  static constexpr int kHeightLimit = 48;

 private:
  std::vector<CoeffMap> radicands_;
  bool all_real_ = true;
};

/// One element of a FieldTower in normal form. Arithmetic is closed and
/// equality is coefficient-wise. Mixing elements of different towers is
/// allowed when one tower is a prefix of the other.
class FieldElement {
 public:
  FieldElement() : tower_(FieldTower::rationals()) {}
  explicit FieldElement(Rational q, TowerPtr tower = FieldTower::rationals());
  FieldElement(long n) : FieldElement(Rational(n)) {}
  FieldElement(TowerPtr tower, CoeffMap coeffs)
      : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {}

  /// The monomial r_index of the given tower.
  static FieldElement radical(TowerPtr tower, int index);

  const TowerPtr& tower() const { return tower_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  /// Throws if the element has a radical part.
  Rational as_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;  // throws on zero
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Total order (tower-compatible lexicographic); used for deterministic
  /// tables and map keys, no numeric meaning.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  /// Monomial count + coefficient bit size; the elimination pivot measure.
  std::size_t size_measure() const;

  std::string to_string() const;

 private:
  TowerPtr tower_;
  CoeffMap coeffs_;
};

struct AdjoinResult {
  TowerPtr tower;
  FieldElement root;  // element of `tower` with root^2 == a
  bool extended;      // false when a was already a square
};

/// Adjoins sqrt(a) to the tower. If a is already a square, the tower is
/// returned unchanged together with a witness root. Throws ValidationError
/// when the height limit is exceeded or a == 0 is passed.
AdjoinResult adjoin_sqrt(const TowerPtr& tower, const FieldElement& a);

/// Exact square detection in the tower of `a` (no extension, no numerics).
std::optional<FieldElement> sqrt_in_tower(const FieldElement& a);

/// Parses the serialization format: sums of rational-coefficient monomials
/// in radicals `r1`, `r2`, ..., e.g. "-1/3 + 3/2*r1*r2". The tower gives
/// meaning to the radical names.
FieldElement parse_field_element(const std::string& text, const TowerPtr& tower,
                                 int line = 0);

/// Renders the tower header block, one `radical ri = sqrt(<element>)` line
/// per radical.
std::vector<std::string> tower_header(const TowerPtr& tower);

/// Rebuilds a tower from header lines (inverse of tower_header).
TowerPtr parse_tower_header(const std::vector<std::string>& lines);

/// Returns the taller of two prefix-compatible towers; throws otherwise.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

/// Re-tags an element onto a taller compatible tower.
FieldElement lift_to_tower(const FieldElement& x, const TowerPtr& tower);

/// Exact sign (-1, 0, +1) of an element of a real tower, decided by
/// recursive comparison of conjugate parts. Throws for non-real towers.
int exact_sign(const FieldElement& x);

}  // namespace repscheme
