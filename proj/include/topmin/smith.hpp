// Smith normal form over the integers, templated on the scalar type.
//
// The matrix is diagonalized by unimodular row and column operations on a
// sparse working copy. Unit pivots are taken first (boundary matrices are
// dominated by them); the remainder uses a minimal-absolute-value pivot. The
// resulting diagonal is then brought into divisibility order.
//
// Any Scalar with exact +, -, *, /, % and ordering works. With a fixed-width
// Scalar the caller is responsible for overflow; use BigInt for guarantees.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace topmin {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Rewrites a list of nonzero diagonal entries as the equivalent invariant
/// factors d1 | d2 | ... (all positive). The count of entries is preserved.
template <typename Scalar>
std::vector<Scalar> normalize_divisibility_chain(std::vector<Scalar> diagonal) {
  for (auto& d : diagonal) d = abs_value(d);
  std::sort(diagonal.begin(), diagonal.end());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      if (diagonal[j] % diagonal[i] == Scalar(0)) continue;
      // Z/a + Z/b = Z/gcd + Z/lcm
      Scalar g = gcd_value(diagonal[i], diagonal[j]);
      Scalar l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  std::sort(diagonal.begin(), diagonal.end());
  return diagonal;
}

namespace detail {

template <typename Scalar>
class SparseEliminator {
 public:
  SparseEliminator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  void set(int r, int c, const Scalar& v) {
    if (v == Scalar(0)) return;
    rows_[static_cast<std::size_t>(r)][c] = v;
    cols_[static_cast<std::size_t>(c)].insert(r);
  }

  std::vector<Scalar> run() {
    bool progress = true;
    while (progress) {
      progress = unit_pass();
      if (!progress) progress = general_step();
    }
    return normalize_divisibility_chain(std::move(pivots_));
  }

 private:
  static bool is_unit(const Scalar& v) { return v == Scalar(1) || v == Scalar(-1); }

  // row_dst -= q * row_src
  void axpy_row(int dst, int src, const Scalar& q) {
    auto& d = rows_[static_cast<std::size_t>(dst)];
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(src)]) {
      auto it = d.find(c);
      if (it == d.end()) {
        d.emplace(c, Scalar(-q * v));
        cols_[static_cast<std::size_t>(c)].insert(dst);
      } else {
        it->second -= q * v;
        if (it->second == Scalar(0)) {
          d.erase(it);
          cols_[static_cast<std::size_t>(c)].erase(dst);
        }
      }
    }
  }

  void drop_row(int r) {
    for (const auto& entry : rows_[static_cast<std::size_t>(r)]) cols_[static_cast<std::size_t>(entry.first)].erase(r);
    rows_[static_cast<std::size_t>(r)].clear();
  }

  // Clears column c with unit pivot at (r, c); the pivot row then only
  // needs column operations local to itself, so it is removed outright.
  void eliminate_unit(int r, int c) {
    const Scalar p = rows_[static_cast<std::size_t>(r)].at(c);
    std::vector<int> others;
    for (int r2 : cols_[static_cast<std::size_t>(c)])
      if (r2 != r) others.push_back(r2);
    for (int r2 : others) {
      Scalar q = rows_[static_cast<std::size_t>(r2)].at(c) * p;  // p = p^-1 for units
      axpy_row(r2, r, q);
    }
    drop_row(r);
    pivots_.push_back(Scalar(1));
  }

  bool unit_pass() {
    bool any = false;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].empty()) continue;
      int best = -1;
      std::size_t best_len = 0;
      for (int r : cols_[c]) {
        if (!is_unit(rows_[static_cast<std::size_t>(r)].at(static_cast<int>(c)))) continue;
        std::size_t len = rows_[static_cast<std::size_t>(r)].size();
        if (best < 0 || len < best_len) {
          best = r;
          best_len = len;
        }
      }
      if (best >= 0) {
        eliminate_unit(best, static_cast<int>(c));
        any = true;
      }
    }
    return any;
  }

  // One round of minimal-pivot reduction. Returns false when the matrix is zero.
  bool general_step() {
    int pr = -1;
    int pc = -1;
    Scalar best{};
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        Scalar a = abs_value(v);
        if (pr < 0 || a < best) {
          pr = static_cast<int>(r);
          pc = c;
          best = a;
        }
      }
    }
    if (pr < 0) return false;
    if (is_unit(best)) {
      eliminate_unit(pr, pc);
      return true;
    }
    const Scalar p = rows_[static_cast<std::size_t>(pr)].at(pc);
    bool clean = true;
    std::vector<int> others;
    for (int r2 : cols_[static_cast<std::size_t>(pc)])
      if (r2 != pr) others.push_back(r2);
    for (int r2 : others) {
      Scalar q = rows_[static_cast<std::size_t>(r2)].at(pc) / p;
      if (q != Scalar(0)) axpy_row(r2, pr, q);
      if (rows_[static_cast<std::size_t>(r2)].count(pc)) clean = false;
    }
    if (!clean) return true;
    // Column pc now holds only the pivot: column operations touch row pr only.
    auto& row = rows_[static_cast<std::size_t>(pr)];
    std::vector<int> cols_in_row;
    for (const auto& entry : row)
      if (entry.first != pc) cols_in_row.push_back(entry.first);
    for (int c2 : cols_in_row) {
      Scalar rem = row.at(c2) % p;
      if (rem == Scalar(0)) {
        row.erase(c2);
        cols_[static_cast<std::size_t>(c2)].erase(pr);
      } else {
        row[c2] = rem;
        clean = false;
      }
    }
    if (clean) {
      drop_row(pr);
      pivots_.push_back(abs_value(p));
    }
    return true;
  }

  std::vector<std::map<int, Scalar>> rows_;
  std::vector<std::set<int>> cols_;
  std::vector<Scalar> pivots_;
};

}  // namespace detail

/// Invariant factors d1 | d2 | ... of a sparse integer matrix; the count is its rank.
template <typename Scalar, int Options, typename StorageIndex>
std::vector<Scalar> smith_normal_form(const Eigen::SparseMatrix<Scalar, Options, StorageIndex>& m) {
  detail::SparseEliminator<Scalar> work(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index outer = 0; outer < m.outerSize(); ++outer)
    for (typename Eigen::SparseMatrix<Scalar, Options, StorageIndex>::InnerIterator it(m, outer); it; ++it)
      work.set(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
  return work.run();
}

/// Invariant factors of a dense integer matrix.
template <typename Derived>
std::vector<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::SparseEliminator<Scalar> work(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) work.set(static_cast<int>(r), static_cast<int>(c), m(r, c));
  return work.run();
}

}  // namespace topmin
