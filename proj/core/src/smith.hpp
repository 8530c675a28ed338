#pragma once

// Integer elimination kernels. Every routine is a template over the scalar
// type so callers can run on CheckedInt first and redo the work on Integer
// when an IntegerOverflow escapes.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fatcat/integer.hpp"

namespace fatcat::detail {

template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  static Dense identity(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_i += q·row_j over columns [from, cols)
  void add_row(std::size_t i, std::size_t j, const T& q, std::size_t from = 0) {
    for (std::size_t c = from; c < cols; ++c) {
      const T& v = (*this)(j, c);
      if (v != T(0)) (*this)(i, c) += q * v;
    }
  }
  // col_i += q·col_j over rows [from, rows)
  void add_col(std::size_t i, std::size_t j, const T& q, std::size_t from = 0) {
    for (std::size_t r = from; r < rows; ++r) {
      const T& v = (*this)(r, j);
      if (v != T(0)) (*this)(r, i) += q * v;
    }
  }
};

inline Integer magnitude(const Integer& v) { return v < 0 ? Integer(-v) : v; }
inline CheckedInt magnitude(CheckedInt v) { return abs(v); }

/// Canonical invariant factors from an arbitrary list of diagonal entries:
/// drops units and zeros, returns d₁ | d₂ | … with every dᵢ ≥ 2.
inline std::vector<Integer> invariant_factors(std::vector<Integer> d) {
  for (auto& v : d) v = magnitude(v);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0 || d[j] == 0) continue;
      Integer g = boost::multiprecision::gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::vector<Integer> out;
  for (auto& v : d)
    if (v > 1) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Row-transform bookkeeping: P accumulates the row operations applied to the
/// matrix, Pinv its inverse.
template <class T>
struct RowTracker {
  Dense<T> P;
  Dense<T> Pinv;
  explicit RowTracker(std::size_t n) : P(Dense<T>::identity(n)), Pinv(Dense<T>::identity(n)) {}
  void swap(std::size_t i, std::size_t j) {
    P.swap_rows(i, j);
    Pinv.swap_cols(i, j);
  }
  void add(std::size_t i, std::size_t j, const T& q) {  // row_i += q·row_j
    P.add_row(i, j, q);
    Pinv.add_col(j, i, -q);
  }
};

/// Diagonalizes m in place by row and column operations, always choosing a
/// pivot of minimal absolute value. Returns the diagonal (length = rank).
/// Row operations are mirrored into `rows` when given.
template <class T>
std::vector<T> diagonalize(Dense<T>& m, RowTracker<T>* rows = nullptr) {
  std::vector<T> diag;
  const std::size_t R = m.rows, C = m.cols;
  auto row_swap = [&](std::size_t i, std::size_t j) {
    m.swap_rows(i, j);
    if (rows) rows->swap(i, j);
  };
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    std::size_t pr = R, pc = C;
    T best(0);
    for (std::size_t r = t; r < R && !(pr < R && best == T(1)); ++r) {
      for (std::size_t c = t; c < C; ++c) {
        const T& v = m(r, c);
        if (v == T(0)) continue;
        T av = magnitude(v);
        if (pr == R || av < best) {
          best = av;
          pr = r;
          pc = c;
          if (best == T(1)) break;
        }
      }
    }
    if (pr == R) break;
    row_swap(t, pr);
    m.swap_cols(t, pc);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) == T(0)) continue;
        T q = m(i, t) / m(t, t);
        if (q != T(0)) {
          m.add_row(i, t, -q, t);
          if (rows) rows->add(i, t, -q);
        }
        if (m(i, t) != T(0)) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) == T(0)) continue;
        T q = m(t, j) / m(t, t);
        if (q != T(0)) m.add_col(j, t, -q, t);
        if (m(t, j) != T(0)) clean = false;
      }
      if (clean) break;
      // A smaller remainder appeared in row or column t; move it to the pivot.
      std::size_t br = t, bc = t;
      T b = magnitude(m(t, t));
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) != T(0) && magnitude(m(i, t)) < b) {
          b = magnitude(m(i, t));
          br = i;
          bc = t;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) != T(0) && magnitude(m(t, j)) < b) {
          b = magnitude(m(t, j));
          br = t;
          bc = j;
        }
      }
      row_swap(t, br);
      m.swap_cols(t, bc);
    }
    diag.push_back(m(t, t));
  }
  return diag;
}

/// Column echelon form of m by unimodular column operations. Tracks V (the
/// accumulated column transform) and its inverse. Returns the number of
/// nonzero columns p; columns p.. of V span the kernel of the original m and
/// rows p.. of Vinv give coordinates of kernel vectors in that basis.
template <class T>
std::size_t column_echelon(Dense<T>& m, Dense<T>& V, Dense<T>& Vinv) {
  const std::size_t R = m.rows, C = m.cols;
  V = Dense<T>::identity(C);
  Vinv = Dense<T>::identity(C);
  std::size_t p = 0;
  for (std::size_t r = 0; r < R && p < C; ++r) {
    while (true) {
      std::size_t best = C;
      for (std::size_t c = p; c < C; ++c) {
        if (m(r, c) == T(0)) continue;
        if (best == C || magnitude(m(r, c)) < magnitude(m(r, best))) best = c;
      }
      if (best == C) break;
      bool clean = true;
      for (std::size_t c = p; c < C; ++c) {
        if (c == best || m(r, c) == T(0)) continue;
        T q = m(r, c) / m(r, best);
        m.add_col(c, best, -q, r);
        V.add_col(c, best, -q);
        Vinv.add_row(best, c, q);
        if (m(r, c) != T(0)) clean = false;
      }
      if (clean) {
        m.swap_cols(p, best);
        V.swap_cols(p, best);
        Vinv.swap_rows(p, best);
        ++p;
        break;
      }
    }
  }
  return p;
}

}  // namespace fatcat::detail
