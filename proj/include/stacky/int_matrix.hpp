#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace stacky {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k);

  /// Rank over Q, by fraction-free elimination.
  std::size_t rank() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  IntMatrix D;     ///< diagonal, d1 | d2 | ..., nonnegative
  IntMatrix U;     ///< unimodular rows x rows
  IntMatrix V;     ///< unimodular cols x cols
  IntMatrix Vinv;  ///< inverse of V
  /// The nonzero diagonal entries in order (all of them, including ones).
  std::vector<BigInt> diagonal() const;
};

/// D = U * M * V with D in Smith normal form.  With track_U false, U is left
/// empty; useful for tall relation matrices.
SmithForm smith_normal_form(const IntMatrix& M, bool track_U = true);

/// Row-echelon basis of a sublattice of Z^n, built one row at a time.
/// Keeps at most n rows, so long relation lists stay cheap.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t n) : n_(n) {}
  void insert(std::vector<BigInt> row);
  IntMatrix matrix() const;
  std::size_t dim() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[i] has its pivot at pivots_[i]
  std::vector<std::size_t> pivots_;
};

/// Invariant factors of Z^cols / rowspace(M): the diagonal entries > 1 followed by
/// one zero per free summand.
std::vector<BigInt> cokernel_invariants(const IntMatrix& M);

}  // namespace stacky
