#pragma once

#include <string>
#include <vector>

#include "repscheme/field.hpp"

namespace repscheme {

/// Dense matrix over a field tower. Row-major, dimensions fixed at
/// construction. All arithmetic is exact.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, TowerPtr tower = FieldTower::rationals());
  static ExactMatrix identity(int n, TowerPtr tower = FieldTower::rationals());
  /// Rational matrix from row-major integer data (test/builder convenience).
  static ExactMatrix from_rationals(int rows, int cols, const std::vector<Rational>& data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FieldElement& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  ExactMatrix transpose() const;
  FieldElement det() const;  // n <= 4
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const FieldElement& c) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }
  /// Deterministic total order for closure tables and set keys.
  friend bool operator<(const ExactMatrix& a, const ExactMatrix& b);

  bool is_zero() const;
  bool is_rational() const;
  /// Common tower of the entries.
  TowerPtr tower() const;

  std::string to_string() const;  // rows separated by "; ", entries by ", "

 private:
  int rows_, cols_;
  std::vector<FieldElement> entries_;
};

struct KernelResult {
  int dimension = 0;
  int rank = 0;
  /// Basis vectors of the right kernel (each of length cols), ordered by the
  /// free column that generates them.
  std::vector<std::vector<FieldElement>> basis;
};

/// Exact right-kernel via division-minimizing (cross-multiplication)
/// elimination. Pivots are chosen by smallest expression size, ties broken by
/// lowest column then lowest row, so the output is deterministic.
KernelResult kernel(const ExactMatrix& m);

/// Matrix applied to a vector.
std::vector<FieldElement> matvec(const ExactMatrix& m, const std::vector<FieldElement>& v);

}  // namespace repscheme
