#include "foxcolor/exact_linalg.hpp"

#include <utility>

#include "foxcolor/error.hpp"
#include "foxcolor/primes.hpp"

namespace foxcolor {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidConfig, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidConfig, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::without(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "minor index (" + std::to_string(r) + ", " +
                                                std::to_string(c) + ") outside " +
                                                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::NotSquare, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(op) + " of a " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()) + " matrix");
  }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

// Row-reduces `a` (entries already in [0, p)) in place; returns pivot columns.
std::vector<std::size_t> reduce_mod_p(std::vector<std::vector<std::uint64_t>>& a,
                                      std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pick = rank;
    while (pick < a.size() && a[pick][c] == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[rank], a[pick]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (auto& v : a[rank]) v = mul_mod(v, inv, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(f, a[rank][j], p);
        a[r][j] = a[r][j] >= sub ? a[r][j] - sub : a[r][j] + (p - sub);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> residues(const IntMatrix& m, std::uint64_t p) {
  if (p < 2 || !is_prime(BigInt(p))) {
    throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  }
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = residue(m(r, c), p);
  return a;
}

}  // namespace

std::uint64_t residue(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

BigInt det(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pick = k + 1;
      while (pick < n && a(pick, k) == 0) ++pick;
      if (pick == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pick, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt out = a(n - 1, n - 1);
  return negate ? BigInt(-out) : out;
}

BigInt minor(const IntMatrix& m, std::size_t i, std::size_t j) {
  require_square(m, "minor");
  return det(m.without(i, j));
}

IntMatrix all_cofactors(const IntMatrix& m) {
  require_square(m, "cofactors");
  const std::size_t n = m.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = minor(m, i, j);
      out(i, j) = (i + j) % 2 == 0 ? v : BigInt(-v);
    }
  return out;
}

IntMatrix adjugate(const IntMatrix& m) { return all_cofactors(m).transpose(); }

IntMatrix add_all_ones(const IntMatrix& m) {
  require_square(m, "add_all_ones");
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += 1;
  return out;
}

std::vector<ModPVector> nullspace_mod_p(const IntMatrix& m, std::uint64_t p) {
  auto a = residues(m, p);
  const std::vector<std::size_t> pivots = reduce_mod_p(a, m.cols(), p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<ModPVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ModPVector v{p, std::vector<std::uint64_t>(m.cols(), 0)};
    v.entries[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v.entries[pivots[r]] = a[r][f] == 0 ? 0 : p - a[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  auto a = residues(m, p);
  return reduce_mod_p(a, m.cols(), p).size();
}

}  // namespace foxcolor
