#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "foxcolor/bigint.hpp"

namespace foxcolor {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Throws InvalidConfig on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  /// Copy with row `r` and column `c` removed.
  IntMatrix without(std::size_t r, std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Vector of residues modulo a prime.
struct ModPVector {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> entries;

  friend bool operator==(const ModPVector&, const ModPVector&) = default;
};

/// Signed determinant by Bareiss fraction-free elimination. 0x0 gives 1.
BigInt det(const IntMatrix& m);

/// Signed determinant of `m` with row `i` and column `j` deleted (0-based).
/// The cofactor is (-1)^(i+j) times this.
BigInt minor(const IntMatrix& m, std::size_t i, std::size_t j);

/// C(i,j) = (-1)^(i+j) minor(i,j). The adjugate is the transpose.
IntMatrix all_cofactors(const IntMatrix& m);

IntMatrix adjugate(const IntMatrix& m);

/// Entrywise m + 1 (adds the all-ones matrix).
IntMatrix add_all_ones(const IntMatrix& m);

/// Echelon basis of { x : m x = 0 (mod p) }. One basis vector per free
/// column, in column order, with that free coordinate set to 1. Pivots are
/// the first nonzero entry scanning columns left to right.
std::vector<ModPVector> nullspace_mod_p(const IntMatrix& m, std::uint64_t p);

/// Rank of m over the field with p elements.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Least nonnegative residue of v mod p.
std::uint64_t residue(const BigInt& v, std::uint64_t p);

}  // namespace foxcolor
