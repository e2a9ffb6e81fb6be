#ifndef LIFTAUT_MODLINALG_HPP
#define LIFTAUT_MODLINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liftaut/bigint.hpp"
#include "liftaut/error.hpp"

namespace liftaut {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<BigVector>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw LiftError(ErrorCode::IndexOutOfRange, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  BigVector row(std::size_t r) const {
    return BigVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() +
                         static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  /// Appends a row (cols must match unless the matrix is empty).
  void append_row(const BigVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_)
      throw LiftError(ErrorCode::IndexOutOfRange, "row length mismatch");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw LiftError(ErrorCode::IndexOutOfRange, "matrix shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend BigVector operator*(const IntMatrix& a, const BigVector& v) {
    if (a.cols_ != v.size())
      throw LiftError(ErrorCode::IndexOutOfRange, "vector length mismatch");
    BigVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  BigVector entries_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
inline BigInt determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols())
    throw LiftError(ErrorCode::IndexOutOfRange, "determinant of non-square matrix");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  BigVector invariant_factors() const {
    BigVector out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form with transforms. Pivot: smallest nonzero absolute value
/// in the remaining block, ties to the lowest (row, col).
inline SmithDecomposition smith(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  auto& a = s.D;

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        const BigInt v = abs(a(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      const auto pivot = find_pivot(t);
      if (!pivot) break;
      a.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the
      // offending row into row t and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      a.add_row(t, *bad_row, 1);
      s.U.add_row(t, *bad_row, 1);
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

/// M v = w (mod modulus); modulus 0 means over the integers.
struct LinearSystem {
  IntMatrix matrix;
  BigVector rhs;
  BigInt modulus;
};

/// A kernel generator b: multiples 0..period-1 of b give distinct solutions
/// modulo the modulus. Period 0 means every integer multiple is distinct.
struct KernelVector {
  BigVector vector;
  BigInt period;
};

struct SolutionSet {
  bool solvable = false;
  BigInt modulus;
  std::size_t cols = 0;
  BigVector particular;
  std::vector<KernelVector> kernel_basis;
  /// Number of solutions (residues modulo the modulus); nullopt = infinite.
  std::optional<BigInt> count = BigInt(0);

  bool infinite() const noexcept { return !count.has_value(); }
};

/// Inverse of a modulo m; a must be a unit.
inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw LiftError(ErrorCode::AssertionFailed, "element is not invertible");
  return floor_mod(old_s, m);
}

inline bool satisfies(const LinearSystem& sys, const BigVector& v) {
  const BigVector mv = sys.matrix * v;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    const BigInt diff = mv[i] - sys.rhs[i];
    if (sys.modulus == 0 ? diff != 0 : floor_mod(diff, sys.modulus) != 0)
      return false;
  }
  return true;
}

/// Complete description of {v : M v = w (mod modulus)} via the Smith form:
/// with y = V^{-1} v and c = U w the system decouples into d_i y_i = c_i.
inline SolutionSet solve(const LinearSystem& sys) {
  const auto& m = sys.matrix;
  if (sys.rhs.size() != m.rows())
    throw LiftError(ErrorCode::IndexOutOfRange, "rhs length must equal row count");
  if (sys.modulus < 0)
    throw LiftError(ErrorCode::Config, "modulus must be non-negative");

  const auto snf = smith(m);
  const BigVector c = snf.U * sys.rhs;
  const std::size_t rows = m.rows(), cols = m.cols();
  const BigInt& mod = sys.modulus;

  SolutionSet out;
  out.modulus = mod;
  out.cols = cols;
  BigVector y(cols);
  // step_i * e_i with its period, in y-coordinates
  std::vector<std::pair<std::size_t, std::pair<BigInt, BigInt>>> free_dirs;

  for (std::size_t i = 0; i < rows; ++i) {
    const BigInt d = i < cols ? snf.D(i, i) : BigInt(0);
    if (mod == 0) {
      if (d == 0) {
        if (c[i] != 0) return out;
        continue;
      }
      if (c[i] % d != 0) return out;
      y[i] = c[i] / d;
      continue;
    }
    const BigInt dm = floor_mod(d, mod);
    const BigInt g = gcd(dm, mod);  // gcd(0, m) = m
    if (floor_mod(c[i], g) != 0) return out;
    if (i >= cols) continue;
    const BigInt reduced_mod = mod / g;
    y[i] = reduced_mod == 1
               ? BigInt(0)
               : floor_mod(floor_mod(c[i], mod) / g *
                               inverse_mod(dm / g, reduced_mod),
                           reduced_mod);
    if (g > 1) free_dirs.push_back({i, {reduced_mod, g}});
  }
  for (std::size_t i = rows; i < cols; ++i) {
    if (mod == 0)
      free_dirs.push_back({i, {BigInt(1), BigInt(0)}});
    else if (mod > 1)
      free_dirs.push_back({i, {BigInt(1), mod}});
  }
  if (mod == 0)
    for (std::size_t i = snf.rank; i < std::min(rows, cols); ++i)
      free_dirs.push_back({i, {BigInt(1), BigInt(0)}});
  std::sort(free_dirs.begin(), free_dirs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  out.solvable = true;
  out.particular = snf.V * y;
  if (mod != 0)
    for (auto& x : out.particular) x = floor_mod(x, mod);

  BigInt count = 1;
  bool infinite = false;
  for (const auto& [col, sp] : free_dirs) {
    const auto& [step, period] = sp;
    BigVector e(cols);
    e[col] = step;
    BigVector b = snf.V * e;
    if (mod != 0)
      for (auto& x : b) x = floor_mod(x, mod);
    out.kernel_basis.push_back({std::move(b), period});
    if (period == 0)
      infinite = true;
    else
      count *= period;
  }
  if (infinite)
    out.count.reset();
  else
    out.count = count;
  return out;
}

inline SolutionSet solve(const IntMatrix& m, const BigVector& w,
                         const BigInt& modulus) {
  return solve(LinearSystem{m, w, modulus});
}

/// Distinct solutions in lexicographic order (coordinates reduced into
/// [0, modulus)), at most `cap` of them.
inline std::vector<BigVector> enumerate(const SolutionSet& set, std::size_t cap) {
  if (!set.solvable || cap == 0) return {};
  if (set.infinite())
    throw LiftError(ErrorCode::InfiniteSolutionSet,
                    "cannot list an infinite solution set");
  if (*set.count > 10'000'000)
    throw LiftError(ErrorCode::BudgetExceeded,
                    "solution set too large to enumerate: " + to_string(*set.count));

  std::set<BigVector> all;
  std::vector<BigInt> k(set.kernel_basis.size(), 0);
  for (;;) {
    BigVector v = set.particular;
    for (std::size_t b = 0; b < k.size(); ++b)
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] += k[b] * set.kernel_basis[b].vector[j];
    if (set.modulus != 0)
      for (auto& x : v) x = floor_mod(x, set.modulus);
    all.insert(std::move(v));
    std::size_t b = k.size();
    while (b > 0 && ++k[b - 1] == set.kernel_basis[b - 1].period) k[--b] = 0;
    if (b == 0) break;
  }
  std::vector<BigVector> out;
  for (auto& v : all) {
    if (out.size() == cap) break;
    out.push_back(v);
  }
  return out;
}

inline constexpr std::size_t kAllSolutions = static_cast<std::size_t>(-1);

}  // namespace liftaut

#endif  // LIFTAUT_MODLINALG_HPP
