#pragma once

// Block matrices whose blocks are Hadamard matrices, viewed as s x s
// matrices over H_k(R), and machine checks of q(M)^2 = 0 where q is the
// characteristic polynomial of the matrix of block eigenvalues.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadring/error.hpp"
#include "hadring/group_algebra.hpp"
#include "hadring/hadamard.hpp"
#include "hadring/matrix.hpp"
#include "hadring/ring.hpp"

namespace hadring {

class BlockHadamardMatrix {
 public:
  /// Wraps a square matrix whose entry context is a hadamard ring.
  explicit BlockHadamardMatrix(RingMatrix m) : m_(std::move(m)) {
    if (!m_.ring().is_hadamard())
      throw ContextMismatch("block matrix entries must lie in a hadamard ring, got " + m_.ring().name());
    if (!m_.is_square()) throw ShapeError("block matrix must be square");
  }

  /// Assembles an s x s layout from blocks given in row-major order.
  BlockHadamardMatrix(const Ring& base, unsigned k, std::size_t s, const std::vector<HadamardMatrix>& blocks)
      : m_(hadamard_ring(base, k), s, s) {
    if (blocks.size() != s * s) throw ShapeError("expected " + std::to_string(s * s) + " blocks");
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        const HadamardMatrix& b = blocks[i * s + j];
        if (!(b.base() == base) || b.level() != k)
          throw ContextMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") has a different ring or level");
        m_(i, j) = b.to_ring_value();
      }
    }
  }

  static BlockHadamardMatrix zero(const Ring& base, unsigned k, std::size_t s) {
    return BlockHadamardMatrix(RingMatrix(hadamard_ring(base, k), s, s));
  }

  static BlockHadamardMatrix identity(const Ring& base, unsigned k, std::size_t s) {
    return BlockHadamardMatrix(RingMatrix::identity(hadamard_ring(base, k), s));
  }

  /// Every block drawn uniformly from H_k(R).
  static BlockHadamardMatrix sample(const Ring& base, unsigned k, std::size_t s, Rng& rng) {
    const Ring had = hadamard_ring(base, k);
    RingMatrix m(had, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m(i, j) = had.sample(rng);
    return BlockHadamardMatrix(std::move(m));
  }

  /// Every block drawn uniformly from the eigenvalue-0 blocks.
  static BlockHadamardMatrix sample_kernel(const Ring& base, unsigned k, std::size_t s, Rng& rng) {
    const Ring had = hadamard_ring(base, k);
    RingMatrix m(had, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m(i, j) = HadamardMatrix::sample_kernel(base, k, rng).to_ring_value();
    return BlockHadamardMatrix(std::move(m));
  }

  const RingMatrix& matrix() const noexcept { return m_; }
  const Ring& ring() const noexcept { return m_.ring(); }
  Ring base() const { return m_.ring().base(); }
  unsigned level() const { return m_.ring().level(); }
  /// Number of block rows (s).
  std::size_t blocks() const noexcept { return m_.rows(); }
  /// Side of the flattened matrix (t = 2^k s).
  std::size_t side() const { return m_.rows() << level(); }

  HadamardMatrix block(std::size_t i, std::size_t j) const {
    return HadamardMatrix::from_ring_value(m_.ring(), m_(i, j));
  }

  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const BlockHadamardMatrix& a, const BlockHadamardMatrix& b) { return a.m_ == b.m_; }

 private:
  RingMatrix m_;
};

inline BlockHadamardMatrix operator+(const BlockHadamardMatrix& a, const BlockHadamardMatrix& b) {
  return BlockHadamardMatrix(a.matrix() + b.matrix());
}
inline BlockHadamardMatrix operator*(const BlockHadamardMatrix& a, const BlockHadamardMatrix& b) {
  return BlockHadamardMatrix(a.matrix() * b.matrix());
}
inline BlockHadamardMatrix pow(const BlockHadamardMatrix& a, std::uint64_t e) {
  return BlockHadamardMatrix(pow(a.matrix(), e));
}

/// The s x s matrix of block eigenvalues (lambda applied blockwise).
inline RingMatrix lambda_projection(const BlockHadamardMatrix& m) {
  const Ring base = m.base();
  RingMatrix r(base, m.blocks(), m.blocks());
  for (std::size_t i = 0; i < m.blocks(); ++i)
    for (std::size_t j = 0; j < m.blocks(); ++j) r(i, j) = had_eigenvalue(m.block(i, j)).value;
  return r;
}

/// The s x s matrix of block determinants.
inline RingMatrix det_projection(const BlockHadamardMatrix& m) {
  const Ring base = m.base();
  RingMatrix r(base, m.blocks(), m.blocks());
  for (std::size_t i = 0; i < m.blocks(); ++i)
    for (std::size_t j = 0; j < m.blocks(); ++j) r(i, j) = had_det(m.block(i, j)).value;
  return r;
}

/// Expands every block into the t x t matrix over R.
inline RingMatrix flatten(const BlockHadamardMatrix& m) {
  const std::size_t n = std::size_t{1} << m.level();
  RingMatrix r(m.base(), m.side(), m.side());
  for (std::size_t bi = 0; bi < m.blocks(); ++bi) {
    for (std::size_t bj = 0; bj < m.blocks(); ++bj) {
      const HadamardMatrix h = m.block(bi, bj);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(bi * n + i, bj * n + j) = h.entry(i, j);
    }
  }
  return r;
}

/// A (x) I_{2^k} as a block matrix: block (i, j) is A_{ij} * I.
inline BlockHadamardMatrix kron_identity(const RingMatrix& a, unsigned k) {
  if (!a.is_square()) throw ShapeError("kron_identity needs a square matrix");
  const Ring had = hadamard_ring(a.ring(), k);
  RingMatrix r(had, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = had.lift(a(i, j));
  return BlockHadamardMatrix(std::move(r));
}

struct TensorDecomposition {
  RingMatrix eigen_part;           // M'' = lambda_projection(M)
  BlockHadamardMatrix kernel_part;  // M~ = M - M'' (x) I, in ker lambda-bar
};

/// M = M'' (x) I + M~ with lambda-bar(M~) = 0. Throws Error if the
/// decomposition fails to reconstruct M (an implementation fault).
inline TensorDecomposition tensor_decompose(const BlockHadamardMatrix& m) {
  RingMatrix eigen = lambda_projection(m);
  BlockHadamardMatrix kernel = m + kron_identity(eigen, m.level());
  if (!lambda_projection(kernel).is_zero()) throw Error("tensor_decompose: kernel part has nonzero eigenvalues");
  if (!(kron_identity(eigen, m.level()) + kernel == m)) throw Error("tensor_decompose: reconstruction failed");
  return {std::move(eigen), std::move(kernel)};
}

struct ConjectureReport {
  RingPolynomial q;                       // charpoly of lambda_projection(M), over R
  RingPolynomial big_q;                   // charpoly of M over H_k(R)
  RingMatrix q_of_m;                      // q(M), via the scalar action
  RingMatrix q_of_m_squared;              // q(M)^2; zero iff the conjecture holds
  RingMatrix cayley_hamilton_residual;    // Q(M)
  bool conjecture_holds = false;          // q(M)^2 == 0
  bool cayley_hamilton_holds = false;     // Q(M) == 0
  bool coefficients_correspond = false;   // lambda(Q_i) == q_i for all i
  bool squares_are_scalar = false;        // Q_i^2 == q_i^2 * I for all i
  bool frobenius_chain_holds = false;     // q(M)^2 == sum q_i^2 M^(2i)
  bool scalar_action_paths_agree = false; // lift and direct scaling give the same q(M)

  bool ok() const {
    return conjecture_holds && cayley_hamilton_holds && coefficients_correspond && squares_are_scalar &&
           frobenius_chain_holds && scalar_action_paths_agree;
  }
};

inline ConjectureReport verify_conjecture(const BlockHadamardMatrix& m) {
  const Ring base = m.base();
  const Ring& had = m.ring();
  RingPolynomial q = charpoly_berkowitz(lambda_projection(m));
  RingPolynomial big_q = charpoly_berkowitz(m.matrix());

  RingMatrix q_of_m = poly_eval_at_matrix(q, m.matrix(), ScalarAction::scale);
  const RingMatrix q_of_m_lifted = poly_eval_at_matrix(q, m.matrix(), ScalarAction::lift);
  RingMatrix q_sq = q_of_m * q_of_m;
  RingMatrix ch = poly_eval_at_matrix(big_q, m.matrix());

  bool correspond = big_q.degree() == q.degree();
  bool scalar_squares = true;
  for (std::size_t i = 0; i < big_q.coeffs().size(); ++i) {
    const HadamardMatrix qi = HadamardMatrix::from_ring_value(had, big_q.coeffs()[i]);
    const Repr lam = had_eigenvalue(qi).value;
    if (lam != q.coeff(i)) correspond = false;
    const Repr qi_sq = had.square(big_q.coeffs()[i]);
    if (qi_sq != had.lift(base.square(q.coeff(i)))) scalar_squares = false;
  }

  // sum_i (q_i^2 * I) M^(2i)
  const RingMatrix m2 = m.matrix() * m.matrix();
  RingMatrix chain(had, m.blocks(), m.blocks());
  RingMatrix power = RingMatrix::identity(had, m.blocks());
  for (const Repr& c : q.coeffs()) {
    chain = chain + scale(had.lift(base.square(c)), power);
    power = power * m2;
  }

  ConjectureReport r{std::move(q), std::move(big_q), q_of_m, q_sq, ch};
  r.conjecture_holds = r.q_of_m_squared.is_zero();
  r.cayley_hamilton_holds = r.cayley_hamilton_residual.is_zero();
  r.coefficients_correspond = correspond;
  r.squares_are_scalar = scalar_squares;
  r.frobenius_chain_holds = chain == r.q_of_m_squared;
  r.scalar_action_paths_agree = q_of_m_lifted == r.q_of_m;
  return r;
}

struct NilpotencyReport {
  std::size_t index = 0;     // smallest p >= 1 with M^p = 0
  bool power_2s_zero = false;
  bool power_k1_zero = false;

  bool ok() const { return power_2s_zero && power_k1_zero; }
};

/// For M in ker lambda-bar: checks M^(2s) = 0 and M^(k+1) = 0 and measures
/// the nilpotency index. Throws NotInIdeal if some block has a nonzero
/// eigenvalue.
inline NilpotencyReport kernel_power_nilpotency(const BlockHadamardMatrix& m) {
  if (!lambda_projection(m).is_zero()) throw NotInIdeal("block matrix is not in the kernel of lambda-bar");
  const std::size_t s = m.blocks();
  const std::size_t k1 = m.level() + 1;
  const std::size_t limit = std::max(2 * s, k1);
  NilpotencyReport r;
  RingMatrix power = m.matrix();
  for (std::size_t p = 1; p <= limit; ++p) {
    const bool zero = power.is_zero();
    if (zero && r.index == 0) r.index = p;
    if (p == 2 * s) r.power_2s_zero = zero;
    if (p == k1) r.power_k1_zero = zero;
    if (p < limit) power = power * m.matrix();
  }
  return r;
}

struct DiagramReport {
  bool eigenvalue_square = false;    // lambda(Det_H(M)) == Det_R(lambda-bar(M))
  bool determinant_square = false;   // det(Det_H(M)) == Det_R(det-bar(M))

  bool ok() const { return eigenvalue_square && determinant_square; }
};

inline DiagramReport diagram_check(const BlockHadamardMatrix& m) {
  const HadamardMatrix big_det = HadamardMatrix::from_ring_value(m.ring(), mat_det(m.matrix()));
  DiagramReport r;
  r.eigenvalue_square = had_eigenvalue(big_det).value == mat_det(lambda_projection(m));
  r.determinant_square = had_det(big_det).value == mat_det(det_projection(m));
  return r;
}

/// The s = 2 kernel instance [[0, e_0 + e], [e_1 + e, 0]] at level k >= 2.
/// Its eigenvalue matrix is 0, so the minimal polynomial of M'' is x, yet
/// M^2 != 0.
inline BlockHadamardMatrix kernel_counterexample(const Ring& base, unsigned k = 2) {
  if (k < 2) throw ShapeError("the counterexample needs level k >= 2");
  const auto e = GroupAlgebraElement::identity(base, k);
  const auto b = GroupAlgebraElement::group_element(base, k, standard_basis_index(k, 0)) + e;
  const auto c = GroupAlgebraElement::group_element(base, k, standard_basis_index(k, 1)) + e;
  const HadamardMatrix z = HadamardMatrix::zero(base, k);
  return BlockHadamardMatrix(base, k, 2, {z, ga_to_hadamard(b), ga_to_hadamard(c), z});
}

}  // namespace hadring
