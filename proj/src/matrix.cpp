#include "repscheme/matrix.hpp"

#include <algorithm>
#include <limits>

#include "repscheme/errors.hpp"

namespace repscheme {

ExactMatrix::ExactMatrix(int rows, int cols, TowerPtr tower) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw ValidationError("matrix dimensions must be positive", "matrix");
  entries_.assign(static_cast<std::size_t>(rows) * cols, FieldElement(Rational(0), tower));
}

ExactMatrix ExactMatrix::identity(int n, TowerPtr tower) {
  ExactMatrix m(n, n, tower);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement(Rational(1), std::move(tower));
  return m;
}

ExactMatrix ExactMatrix::from_rationals(int rows, int cols, const std::vector<Rational>& data) {
  ExactMatrix m(rows, cols);
  if (data.size() != static_cast<std::size_t>(rows) * cols)
    throw ValidationError("entry count does not match dimensions", "matrix");
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = FieldElement(data[static_cast<std::size_t>(i) * cols + j]);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FieldElement ExactMatrix::det() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix", "matrix");
  const int n = rows_;
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  FieldElement d;
  for (int j = 0; j < n; ++j) {
    ExactMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, jj++) = at(i, k);
      }
    }
    FieldElement term = at(0, j) * minor.det();
    if (j % 2)
      d -= term;
    else
      d += term;
  }
  return d;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch", "matrix");
  ExactMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix sum shape mismatch", "matrix");
  ExactMatrix c = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) += b.at(i, j);
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix difference shape mismatch", "matrix");
  ExactMatrix c = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& c) const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

bool operator<(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] < b.entries_[i]) return true;
    if (b.entries_[i] < a.entries_[i]) return false;
  }
  return false;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FieldElement& e) { return e.is_zero(); });
}

bool ExactMatrix::is_rational() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FieldElement& e) { return e.is_rational(); });
}

TowerPtr ExactMatrix::tower() const {
  TowerPtr t = FieldTower::rationals();
  for (const auto& e : entries_) t = common_tower(t, e.tower());
  return t;
}

std::string ExactMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kernel

namespace {

// Divides the row through by the rational content of its coefficients, which
// keeps cross-multiplication swell bounded without any field division.
void normalize_content(std::vector<FieldElement>& row) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& e : row)
    for (const auto& [m, c] : e.coeffs()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  FieldElement s(scale);
  for (auto& e : row) e = e * s;
}

}  // namespace

KernelResult kernel(const ExactMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<FieldElement>> a(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    a[i].reserve(cols);
    for (int j = 0; j < cols; ++j) a[i].push_back(m.at(i, j));
  }

  std::vector<int> pivot_col;
  std::vector<char> col_used(static_cast<std::size_t>(cols), 0);
  int step = 0;
  while (step < rows) {
    int best_row = -1, best_col = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (int j = 0; j < cols; ++j) {
      if (col_used[j]) continue;
      for (int i = step; i < rows; ++i) {
        if (a[i][j].is_zero()) continue;
        std::size_t s = a[i][j].size_measure();
        if (s < best_size) {
          best_size = s;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (best_row < 0) break;
    std::swap(a[step], a[best_row]);
    col_used[best_col] = 1;
    pivot_col.push_back(best_col);
    const FieldElement pivot = a[step][best_col];
    for (int i = step + 1; i < rows; ++i) {
      if (a[i][best_col].is_zero()) continue;
      const FieldElement factor = a[i][best_col];
      for (int j = 0; j < cols; ++j) a[i][j] = pivot * a[i][j] - factor * a[step][j];
      normalize_content(a[i]);
    }
    ++step;
  }

  const int rank = static_cast<int>(pivot_col.size());
  KernelResult result;
  result.rank = rank;
  result.dimension = cols - rank;
  for (int f = 0; f < cols; ++f) {
    if (col_used[f]) continue;
    std::vector<FieldElement> v(static_cast<std::size_t>(cols));
    v[f] = FieldElement(Rational(1));
    for (int s = rank - 1; s >= 0; --s) {
      FieldElement acc;
      for (int j = 0; j < cols; ++j) {
        if (j == pivot_col[s]) continue;
        if (!a[s][j].is_zero() && !v[j].is_zero()) acc += a[s][j] * v[j];
      }
      v[pivot_col[s]] = -(acc * a[s][pivot_col[s]].inverse());
    }
    result.basis.push_back(std::move(v));
  }
  return result;
}

std::vector<FieldElement> matvec(const ExactMatrix& m, const std::vector<FieldElement>& v) {
  if (v.size() != static_cast<std::size_t>(m.cols()))
    throw ValidationError("vector length does not match matrix", "matrix");
  std::vector<FieldElement> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace repscheme
