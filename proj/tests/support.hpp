#ifndef LIFTAUT_TESTS_SUPPORT_HPP
#define LIFTAUT_TESTS_SUPPORT_HPP

// Test-only reference implementations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liftaut/lifting.hpp"
#include "liftaut/presentation.hpp"
#include "liftaut/todd_coxeter.hpp"

namespace support {

using Perm = std::vector<std::uint32_t>;

/// p then q.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm perm_identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline Perm perm_power(const Perm& p, std::int64_t e) {
  Perm base = e < 0 ? perm_inverse(p) : p;
  Perm r = perm_identity(p.size());
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r = compose(r, base);
  return r;
}

/// Naive closure under multiplication by generators.
inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen{perm_identity(gens.front().size())};
  std::vector<Perm> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

/// Evaluates a word letter by letter on permutations.
inline Perm eval_perm(const liftaut::FreeWord& w, const std::vector<Perm>& gens) {
  Perm r = perm_identity(gens.front().size());
  for (const auto& l : w.letters()) r = compose(r, perm_power(gens[l.gen], l.exp));
  return r;
}

inline Perm cycle_perm(std::size_t n, std::size_t k) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + k) % n);
  return r;
}

/// Q8 acting on itself by right multiplication. Units are encoded as
/// sign * {1, i, j, k} with index 4*s + u.
inline std::vector<Perm> quaternion_model() {
  // u*v for unit basis elements: (sign, unit).
  const int table[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}}};
  auto mul = [&](int a, int b) {
    const int s = (a / 4 + b / 4 + table[a % 4][b % 4][0]) % 2;
    return 4 * s + table[a % 4][b % 4][1];
  };
  std::vector<Perm> gens;
  for (int g : {1, 2}) {
    Perm p(8);
    for (int a = 0; a < 8; ++a) p[a] = static_cast<std::uint32_t>(mul(a, g));
    gens.push_back(p);
  }
  return gens;
}

/// Unitriangular 3x3 matrices over F3 acting on row vectors in F3^3.
inline std::vector<Perm> heisenberg_model() {
  using Mat = std::array<std::array<int, 3>, 3>;
  auto act = [](const Mat& m) {
    Perm p(27);
    for (int v = 0; v < 27; ++v) {
      const int x[3] = {v % 3, v / 3 % 3, v / 9};
      int y[3] = {0, 0, 0};
      for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) y[c] += x[r] * m[r][c];
      p[v] = static_cast<std::uint32_t>(y[0] % 3 + 3 * (y[1] % 3) + 9 * (y[2] % 3));
    }
    return p;
  };
  const Mat a{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  const Mat b{{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}};
  return {act(a), act(b)};
}

/// Affine maps of Z/27: x = (t -> t+1), y = (t -> 10t).
inline std::vector<Perm> metacyclic_model() {
  Perm x(27), y(27);
  for (std::uint32_t t = 0; t < 27; ++t) {
    x[t] = (t + 1) % 27;
    y[t] = (10 * t) % 27;
  }
  return {x, y};
}

/// Stack reduction on a letter-per-unit expansion.
inline std::vector<std::pair<std::size_t, int>> naive_reduce(
    const std::vector<std::pair<std::size_t, std::int64_t>>& raw) {
  std::vector<std::pair<std::size_t, int>> stack;
  for (const auto& [g, e] : raw) {
    const int s = e < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
      if (!stack.empty() && stack.back().first == g && stack.back().second == -s)
        stack.pop_back();
      else
        stack.emplace_back(g, s);
    }
  }
  return stack;
}

inline std::vector<std::pair<std::size_t, int>> unit_letters(const liftaut::FreeWord& w) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& l : w.letters())
    for (std::int64_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i)
      out.emplace_back(l.gen, l.exp < 0 ? -1 : 1);
  return out;
}

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t small_det(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    SmallMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * small_det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors via determinantal divisors d_k = gcd of k x k minors.
inline std::vector<std::int64_t> invariant_factors_by_minors(const SmallMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t d = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        SmallMatrix sub;
        for (auto i : r) {
          std::vector<std::int64_t> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        d = std::gcd(d, small_det(sub));
      }
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Number of v in (Z/m)^cols with M v = w (mod m).
inline std::uint64_t brute_count(const SmallMatrix& m, const std::vector<std::int64_t>& w,
                                 std::int64_t modulus) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::int64_t> v(cols, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < m.size() && ok; ++r) {
      std::int64_t s = -w[r];
      for (std::size_t c = 0; c < cols; ++c) s += m[r][c] * v[c];
      ok = ((s % modulus) + modulus) % modulus == 0;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < cols && ++v[i] == modulus) v[i++] = 0;
    if (i == cols) break;
  }
  return count;
}

inline liftaut::IntMatrix to_int_matrix(const SmallMatrix& m) {
  std::vector<liftaut::BigVector> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return liftaut::IntMatrix::from_rows(rows);
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(LIFTAUT_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(LIFTAUT_FIXTURES) + "/" + name;
}

/// Loads a `.pres` fixture and builds its engine by coset enumeration.
inline std::shared_ptr<const liftaut::LiftSetting> load_setting(const std::string& name,
                                                               std::size_t max_cosets = 10000) {
  const auto doc = liftaut::parse_presentation_document(read_fixture(name));
  auto engine = liftaut::todd_coxeter(doc.presentation, max_cosets);
  return liftaut::LiftSetting::create(doc.presentation, engine.group, doc.central);
}

/// Fixtures making up the solver/oracle corpus.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{
      "c4.pres",         "c6_x2.pres",      "c6_x.pres",       "q8.pres",
      "heisenberg.pres", "c2c2c4.pres",     "metacyclic_x3.pres", "metacyclic_x9.pres"};
  return names;
}

}  // namespace support

#endif  // LIFTAUT_TESTS_SUPPORT_HPP
