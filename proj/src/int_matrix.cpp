#include "stacky/int_matrix.hpp"

#include <sstream>

namespace stacky {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// floor division, so that remainders are nonnegative when b > 0
BigInt floordiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const BigInt& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += k * s;
  }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const BigInt& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += k * s;
  }
}

std::size_t IntMatrix::rank() const {
  IntMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      const BigInt f = a(i, c);
      const BigInt g = a(r, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& M, bool track_U) {
  const std::size_t R = M.rows(), C = M.cols();
  SmithForm sf{M, track_U ? IntMatrix::identity(R) : IntMatrix(), IntMatrix::identity(C), IntMatrix::identity(C)};
  IntMatrix& A = sf.D;

  auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    A.add_row(dst, src, k);
    if (track_U) sf.U.add_row(dst, src, k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    if (track_U) sf.U.swap_rows(a, b);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    A.add_col(dst, src, k);
    sf.V.add_col(dst, src, k);
    sf.Vinv.add_row(src, dst, -k);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    sf.V.swap_cols(a, b);
    sf.Vinv.swap_rows(a, b);
  };

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      std::size_t pi = R, pj = C;
      BigInt best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (A(i, j) == 0) continue;
          BigInt v = babs(A(i, j));
          if (pi == R || v < best) {
            best = v;
            pi = i;
            pj = j;
            if (best == 1) goto found;
          }
        }
    found:
      if (pi == R) return sf;  // trailing block is zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A(i, t) == 0) continue;
        row_op(i, t, -floordiv(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A(t, j) == 0) continue;
        col_op(j, t, -floordiv(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (A(i, j) % A(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) A(t, j) = -A(t, j);
      if (track_U)
        for (std::size_t j = 0; j < R; ++j) sf.U(t, j) = -sf.U(t, j);
    }
  }
  return sf;
}

std::vector<BigInt> cokernel_invariants(const IntMatrix& M) {
  const SmithForm sf = smith_normal_form(M, false);
  std::vector<BigInt> out;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) {
    const BigInt& d = sf.D(i, i);
    if (d != 0) ++nonzero;
    if (d > 1) out.push_back(d);
  }
  for (std::size_t i = nonzero; i < M.cols(); ++i) out.push_back(0);
  return out;
}

void LatticeBasis::insert(std::vector<BigInt> row) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    // clear earlier columns first: rows_ are kept sorted by pivot
    bool lead_zero = true;
    for (std::size_t j = 0; j < c; ++j)
      if (row[j] != 0) {
        lead_zero = false;
        break;
      }
    if (!lead_zero) {
      // row has a nonzero before this pivot; it becomes a new pivot row here
      std::size_t pc = 0;
      while (row[pc] == 0) ++pc;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(row));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), pc);
      return;
    }
    if (row[c] == 0) continue;
    // extended Euclid on the pivot column, unimodular on the pair of rows
    auto& b = rows_[i];
    while (row[c] != 0) {
      const BigInt q = floordiv(b[c], row[c]);
      for (std::size_t j = c; j < n_; ++j) b[j] -= q * row[j];
      std::swap(b, row);
    }
    if (b[c] < 0)
      for (std::size_t j = c; j < n_; ++j) b[j] = -b[j];
  }
  std::size_t pc = 0;
  while (pc < n_ && row[pc] == 0) ++pc;
  if (pc == n_) return;
  rows_.push_back(std::move(row));
  pivots_.push_back(pc);
}

IntMatrix LatticeBasis::matrix() const {
  IntMatrix m(rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = rows_[i][j];
  return m;
}

}  // namespace stacky
