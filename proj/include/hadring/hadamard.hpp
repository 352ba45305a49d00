#pragma once

// The algebra H_k(R) of 2^k x 2^k Hadamard matrices over R. A Hadamard
// matrix is stored as its first row; entry (i, j) of the full matrix is
// a_{i xor j}.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hadring/error.hpp"
#include "hadring/matrix.hpp"
#include "hadring/ring.hpp"

namespace hadring {

class HadamardMatrix {
 public:
  HadamardMatrix(Ring base, unsigned k, std::vector<Repr> row)
      : base_(std::move(base)), k_(k), row_(std::move(row)) {
    if (k_ > kMaxHadamardLevel) throw ShapeError("hadamard level " + std::to_string(k_) + " too large");
    if (row_.size() != size())
      throw ShapeError("first row of length " + std::to_string(row_.size()) + " for level " + std::to_string(k_));
    for (const Repr& a : row_)
      if (!base_.contains(a)) throw ShapeError("first-row entry is not an element of " + base_.name());
  }

  static HadamardMatrix zero(const Ring& base, unsigned k) {
    return HadamardMatrix(base, k, std::vector<Repr>(std::size_t{1} << k, base.zero()));
  }

  static HadamardMatrix identity(const Ring& base, unsigned k) {
    HadamardMatrix h = zero(base, k);
    h.row_[0] = base.one();
    return h;
  }

  /// c * I.
  static HadamardMatrix scalar(const Ring& base, unsigned k, const Repr& c) {
    HadamardMatrix h = zero(base, k);
    h.row_[0] = c;
    return h;
  }

  static HadamardMatrix sample(const Ring& base, unsigned k, Rng& rng) {
    std::vector<Repr> row;
    row.reserve(std::size_t{1} << k);
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) row.push_back(base.sample(rng));
    return HadamardMatrix(base, k, std::move(row));
  }

  /// Uniform element with eigenvalue 0: a_0 is overwritten by sum_{i>=1} a_i.
  static HadamardMatrix sample_kernel(const Ring& base, unsigned k, Rng& rng) {
    HadamardMatrix h = sample(base, k, rng);
    Repr sum = base.zero();
    for (std::size_t i = 1; i < h.size(); ++i) sum = base.add(sum, h.row_[i]);
    h.row_[0] = std::move(sum);
    return h;
  }

  /// Converts an element of the context H_k(R).
  static HadamardMatrix from_ring_value(const Ring& had, const Repr& v) {
    return HadamardMatrix(had.base(), had.level(), had.split(v));
  }

  const Ring& base() const noexcept { return base_; }
  unsigned level() const noexcept { return k_; }
  std::size_t size() const noexcept { return std::size_t{1} << k_; }
  const std::vector<Repr>& row() const noexcept { return row_; }
  const Repr& entry(std::size_t i, std::size_t j) const { return row_[i ^ j]; }

  /// The hadamard-ring context this matrix is an element of.
  Ring ring() const { return hadamard_ring(base_, k_); }
  Repr to_ring_value() const { return ring().join(row_); }

  friend bool operator==(const HadamardMatrix& a, const HadamardMatrix& b) {
    return a.k_ == b.k_ && a.base_ == b.base_ && a.row_ == b.row_;
  }

 private:
  Ring base_;
  unsigned k_;
  std::vector<Repr> row_;
};

namespace detail {
inline void check_compatible(const HadamardMatrix& a, const HadamardMatrix& b) {
  check_same(a.base(), b.base());
  if (a.level() != b.level())
    throw ShapeError("hadamard levels differ: " + std::to_string(a.level()) + " vs " + std::to_string(b.level()));
}
}  // namespace detail

inline RingMatrix had_expand(const HadamardMatrix& h) {
  const std::size_t n = h.size();
  RingMatrix m(h.base(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h.entry(i, j);
  return m;
}

/// Recovers the first row of a full matrix, checking M_{i,j} = M_{0,i xor j}
/// in row-major order. Throws NotHadamard at the first violation.
inline HadamardMatrix had_from_full(const RingMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.is_square() || n == 0 || (n & (n - 1)) != 0)
    throw ShapeError("hadamard matrix side must be a power of 2, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != m(0, i ^ j))
        throw NotHadamard(i, j, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") differs from first-row entry " + std::to_string(i ^ j));
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  std::vector<Repr> row(m.entries().begin(), m.entries().begin() + static_cast<std::ptrdiff_t>(n));
  return HadamardMatrix(m.ring(), k, std::move(row));
}

inline HadamardMatrix had_add(const HadamardMatrix& a, const HadamardMatrix& b) {
  detail::check_compatible(a, b);
  std::vector<Repr> row(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) row[i] = a.base().add(a.row()[i], b.row()[i]);
  return HadamardMatrix(a.base(), a.level(), std::move(row));
}

/// Product; the first row is the xor-convolution c_j = sum_i a_i b_{i xor j}.
inline HadamardMatrix had_mul(const HadamardMatrix& a, const HadamardMatrix& b) {
  detail::check_compatible(a, b);
  const Ring had = a.ring();
  return HadamardMatrix::from_ring_value(had, had.mul(a.to_ring_value(), b.to_ring_value()));
}

inline HadamardMatrix operator+(const HadamardMatrix& a, const HadamardMatrix& b) { return had_add(a, b); }
inline HadamardMatrix operator*(const HadamardMatrix& a, const HadamardMatrix& b) { return had_mul(a, b); }

/// The unique eigenvalue: the sum of the first row.
inline RingElement had_eigenvalue(const HadamardMatrix& h) {
  Repr sum = h.base().zero();
  for (const Repr& a : h.row()) sum = h.base().add(sum, a);
  return {h.base(), std::move(sum)};
}

/// Determinant of the expanded matrix, via the division-free charpoly.
inline RingElement had_det(const HadamardMatrix& h) { return {h.base(), mat_det(had_expand(h))}; }

namespace detail {
inline RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a.ring().mul(a(i, j), b(p, q));
  return r;
}
}  // namespace detail

/// Full 2^k x 2^k Kronecker product J_2^{i_0} (x) ... (x) J_2^{i_{k-1}},
/// where i_0 is the most significant binary digit of i and J_2^0 = I_2.
inline RingMatrix kron_basis_matrix(const Ring& base, unsigned k, std::size_t i) {
  if (i >= (std::size_t{1} << k))
    throw ShapeError("basis index " + std::to_string(i) + " out of range for level " + std::to_string(k));
  const RingMatrix i2 = RingMatrix::identity(base, 2);
  RingMatrix j2(base, 2, 2);
  j2(0, 1) = base.one();
  j2(1, 0) = base.one();
  RingMatrix r = RingMatrix::identity(base, 1);
  for (unsigned l = 0; l < k; ++l) {
    const bool digit = ((i >> (k - 1 - l)) & 1) != 0;
    r = detail::kronecker(r, digit ? j2 : i2);
  }
  return r;
}

/// The permutation Hadamard matrix J_2^i; its first row is the indicator of
/// position i.
inline HadamardMatrix had_kron_basis(const Ring& base, unsigned k, std::size_t i) {
  return had_from_full(kron_basis_matrix(base, k, i));
}

struct BasisTerm {
  Repr coefficient;
  std::size_t index;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// H = sum a_i J_2^i; returns the terms with nonzero a_i in index order.
inline std::vector<BasisTerm> had_decompose(const HadamardMatrix& h) {
  std::vector<BasisTerm> terms;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.base().is_zero(h.row()[i])) terms.push_back({h.row()[i], i});
  return terms;
}

inline HadamardMatrix had_reconstruct(const Ring& base, unsigned k, const std::vector<BasisTerm>& terms) {
  HadamardMatrix acc = HadamardMatrix::zero(base, k);
  for (const BasisTerm& t : terms) {
    const HadamardMatrix b = had_kron_basis(base, k, t.index);
    std::vector<Repr> row = b.row();
    for (Repr& a : row) a = base.mul(t.coefficient, a);
    acc = acc + HadamardMatrix(base, k, std::move(row));
  }
  return acc;
}

}  // namespace hadring
