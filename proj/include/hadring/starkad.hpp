#pragma once

// Diagnostics for Cauchy-built linear layers: construction, detection of
// block-Hadamard structure, and the power-dependency degree that bounds the
// dimension of invariant subspaces.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hadring/conjecture.hpp"
#include "hadring/error.hpp"
#include "hadring/hadamard.hpp"
#include "hadring/matrix.hpp"
#include "hadring/ring.hpp"

namespace hadring {

/// A block of a partitioned matrix is not Hadamard. row()/col() give the
/// offending entry inside the block.
class BlockNotHadamard : public NotHadamard {
 public:
  BlockNotHadamard(std::size_t block_row, std::size_t block_col, std::size_t row, std::size_t col,
                   const std::string& what)
      : NotHadamard(row, col, what), block_row_(block_row), block_col_(block_col) {}
  std::size_t block_row() const noexcept { return block_row_; }
  std::size_t block_col() const noexcept { return block_col_; }

 private:
  std::size_t block_row_;
  std::size_t block_col_;
};

struct CauchySpec {
  Ring field;
  std::vector<Repr> x;
  std::vector<Repr> y;
};

/// Entry (i, j) = (x_i + y_j)^-1. Validates distinctness of x and of y and
/// that no x_i + y_j vanishes.
inline RingMatrix cauchy_build(const CauchySpec& spec) {
  const Ring& f = spec.field;
  if (!f.is_field()) throw NotAField("Cauchy matrices need a field, got " + f.name());
  if (spec.x.size() != spec.y.size() || spec.x.empty())
    throw ShapeError("Cauchy spec needs two nonempty sequences of equal length");
  const std::size_t t = spec.x.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (!f.contains(spec.x[i]) || !f.contains(spec.y[i])) throw ShapeError("Cauchy point is not a field element");
    for (std::size_t j = i + 1; j < t; ++j) {
      if (spec.x[i] == spec.x[j])
        throw SpecError("x_" + std::to_string(i) + " and x_" + std::to_string(j) + " coincide");
      if (spec.y[i] == spec.y[j])
        throw SpecError("y_" + std::to_string(i) + " and y_" + std::to_string(j) + " coincide");
    }
  }
  RingMatrix m(f, t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const Repr d = f.add(spec.x[i], spec.y[j]);
      if (f.is_zero(d))
        throw SpecError("x_" + std::to_string(i) + " + y_" + std::to_string(j) + " = 0");
      m(i, j) = f.inverse(d);
    }
  }
  return m;
}

/// x_i = i and y_j = t xor j as bit-encoded field elements, so the Cauchy
/// entries depend on i xor j only.
inline CauchySpec starkad_like_spec(const Ring& field, std::size_t t) {
  if (!field.is_field() || !field.is_leaf()) throw NotAField("starkad-like layer needs a binary field");
  if (t == 0 || (t & (t - 1)) != 0) throw ShapeError("layer width " + std::to_string(t) + " is not a power of 2");
  const unsigned n = field.modulus_degree();
  if (n < 63 && (Word{1} << n) <= 2 * t)
    throw ShapeError("field " + field.name() + " has too few elements for width " + std::to_string(t));
  CauchySpec spec{field, {}, {}};
  for (std::size_t i = 0; i < t; ++i) {
    spec.x.push_back(field.from_uint(i));
    spec.y.push_back(field.from_uint(t ^ i));
  }
  return spec;
}

/// Partitions M into s x s blocks of side 2^k and checks each block.
inline BlockHadamardMatrix block_hadamard_detect(const RingMatrix& m, unsigned k) {
  if (!m.is_square()) throw ShapeError("block detection needs a square matrix");
  if (k > kMaxHadamardLevel) throw ShapeError("block level too large");
  const std::size_t n = std::size_t{1} << k;
  if (m.rows() == 0 || m.rows() % n != 0)
    throw ShapeError("side " + std::to_string(m.rows()) + " is not divisible by 2^" + std::to_string(k));
  const std::size_t s = m.rows() / n;
  std::vector<HadamardMatrix> blocks;
  blocks.reserve(s * s);
  for (std::size_t bi = 0; bi < s; ++bi) {
    for (std::size_t bj = 0; bj < s; ++bj) {
      RingMatrix sub(m.ring(), n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sub(i, j) = m(bi * n + i, bj * n + j);
      try {
        blocks.push_back(had_from_full(sub));
      } catch (const NotHadamard& e) {
        throw BlockNotHadamard(bi, bj, e.row(), e.col(),
                               "block (" + std::to_string(bi) + "," + std::to_string(bj) + "): " + e.what());
      }
    }
  }
  return BlockHadamardMatrix(m.ring(), k, s, blocks);
}

struct KrylovDependency {
  std::size_t degree;              // l
  RingPolynomial minimal_polynomial;
};

/// Inserts vec(I), vec(M), vec(M^2), ... into an incremental row echelon
/// form over the field until the first power falls into the span of the
/// earlier ones. The recorded combination is the minimal polynomial.
inline KrylovDependency krylov_dependency(const RingMatrix& m) {
  const Ring& f = m.ring();
  if (!f.is_field()) throw NotAField("power dependency needs a field, got " + f.name());
  if (!m.is_square() || m.rows() == 0) throw ShapeError("power dependency needs a nonempty square matrix");

  struct Row {
    std::size_t pivot;
    std::vector<Repr> vec;    // normalized: vec[pivot] = 1
    std::vector<Repr> combo;  // coefficients over powers of M
  };
  std::vector<Row> echelon;
  RingMatrix power = RingMatrix::identity(f, m.rows());
  for (std::size_t l = 0;; ++l) {
    std::vector<Repr> v = power.entries();
    std::vector<Repr> combo(l + 1, f.zero());
    combo[l] = f.one();
    for (const Row& row : echelon) {
      const Repr c = v[row.pivot];
      if (f.is_zero(c)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, row.vec[i]));
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = f.add(combo[i], f.mul(c, row.combo[i]));
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && f.is_zero(v[pivot])) ++pivot;
    if (pivot == v.size()) return {l, RingPolynomial(f, std::move(combo))};
    const Repr inv = f.inverse(v[pivot]);
    for (Repr& e : v) e = f.mul(inv, e);
    for (Repr& e : combo) e = f.mul(inv, e);
    echelon.push_back({pivot, std::move(v), std::move(combo)});
    power = power * m;
  }
}

/// Smallest l >= 1 with M^l in span{I, M, ..., M^(l-1)}.
inline std::size_t power_dependency_degree(const RingMatrix& m) { return krylov_dependency(m).degree; }

/// Monic least-degree polynomial annihilating M (field entries only).
inline RingPolynomial minimal_poly_field(const RingMatrix& m) { return krylov_dependency(m).minimal_polynomial; }

struct InvariantReport {
  std::size_t t = 0;
  std::size_t s = 0;
  unsigned k = 0;
  std::size_t l = 0;
  std::size_t bound_new = 0;        // 2s
  std::size_t bound_old = 0;        // (k+1)s
  std::size_t dim_lower_bound = 0;  // t - l

  bool within_bound() const { return l <= bound_new; }

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Detects the block structure at level k and measures the dependency
/// degree against the 2s and (k+1)s bounds.
inline InvariantReport analyze(const RingMatrix& m, unsigned k) {
  if (!m.ring().is_field()) throw NotAField("analysis needs a field, got " + m.ring().name());
  const BlockHadamardMatrix blocks = block_hadamard_detect(m, k);
  InvariantReport r;
  r.t = m.rows();
  r.s = blocks.blocks();
  r.k = k;
  r.l = power_dependency_degree(m);
  r.bound_new = 2 * r.s;
  r.bound_old = (k + 1) * r.s;
  r.dim_lower_bound = r.t - r.l;
  return r;
}

}  // namespace hadring
