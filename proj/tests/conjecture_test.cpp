#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hadring {
namespace {

using testing::BitMatrix;

HadamardMatrix row(const Ring& base, std::vector<Word> entries) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < entries.size()) ++k;
  std::vector<Repr> r;
  for (Word w : entries) r.push_back(base.from_uint(w));
  return HadamardMatrix(base, k, std::move(r));
}

TEST(BlockHadamardMatrix, Construction) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_THROW(BlockHadamardMatrix(RingMatrix::identity(gf2, 2)), ContextMismatch);
  EXPECT_THROW(BlockHadamardMatrix(gf2, 1, 2, {row(gf2, {1, 0})}), ShapeError);
  EXPECT_THROW(BlockHadamardMatrix(gf2, 2, 1, {row(gf2, {1, 0})}), ContextMismatch);
  const BlockHadamardMatrix m(gf2, 1, 1, {row(gf2, {0, 1})});
  EXPECT_EQ(m.side(), 2u);
  EXPECT_EQ(m.block(0, 0), row(gf2, {0, 1}));
}

TEST(LambdaProjection, Examples) {
  const Ring f8 = ring_make("gf2:8:0x11b");
  const BlockHadamardMatrix scalars(f8, 2, 2,
                                    {HadamardMatrix::scalar(f8, 2, Repr{7}), HadamardMatrix::scalar(f8, 2, Repr{9}),
                                     HadamardMatrix::zero(f8, 2), HadamardMatrix::scalar(f8, 2, Repr{7})});
  EXPECT_EQ(lambda_projection(scalars), RingMatrix(f8, 2, 2, {Repr{7}, Repr{9}, Repr{0}, Repr{7}}));

  const Ring gf2 = ring_make("gf2:1:0x3");
  const BlockHadamardMatrix m(gf2, 1, 2,
                              {row(gf2, {1, 1}), row(gf2, {1, 0}), row(gf2, {0, 1}), row(gf2, {1, 1})});
  EXPECT_EQ(lambda_projection(m), RingMatrix(gf2, 2, 2, {Repr{0}, Repr{1}, Repr{1}, Repr{0}}));
}

TEST(Projections, AreHomomorphisms) {
  Rng rng(1);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 2; ++k)
      for (std::size_t s = 1; s <= 3; ++s) {
        const auto a = BlockHadamardMatrix::sample(base, k, s, rng);
        const auto b = BlockHadamardMatrix::sample(base, k, s, rng);
        ASSERT_EQ(lambda_projection(a * b), lambda_projection(a) * lambda_projection(b));
        ASSERT_EQ(lambda_projection(a + b), lambda_projection(a) + lambda_projection(b));
        ASSERT_EQ(det_projection(a * b), det_projection(a) * det_projection(b));
        ASSERT_EQ(det_projection(a + b), det_projection(a) + det_projection(b));
      }
}

TEST(DetProjection, Examples) {
  const Ring f4 = ring_make("gf2:2:0x7");
  EXPECT_EQ(det_projection(BlockHadamardMatrix::identity(f4, 2, 3)), RingMatrix::identity(f4, 3));
  const BlockHadamardMatrix single(f4, 1, 1, {row(f4, {2, 1})});
  EXPECT_EQ(det_projection(single), RingMatrix(f4, 1, 1, {had_det(row(f4, {2, 1})).value}));
}

TEST(Flatten, Examples) {
  Rng rng(2);
  const Ring f8 = ring_make("gf2:8:0x11b");
  const HadamardMatrix h = HadamardMatrix::sample(f8, 2, rng);
  EXPECT_EQ(flatten(BlockHadamardMatrix(f8, 2, 1, {h})), had_expand(h));
  EXPECT_EQ(flatten(BlockHadamardMatrix::identity(f8, 2, 3)), RingMatrix::identity(f8, 12));
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (std::size_t s = 1; s <= 3; ++s) {
        const auto a = BlockHadamardMatrix::sample(base, k, s, rng);
        const auto b = BlockHadamardMatrix::sample(base, k, s, rng);
        ASSERT_EQ(flatten(a * b), flatten(a) * flatten(b));
      }
}

TEST(TensorDecompose, Examples) {
  Rng rng(3);
  const Ring f8 = ring_make("gf2:8:0x11b");
  const RingMatrix eig = testing::random_matrix(f8, 3, 3, rng);
  const auto scalar_blocks = tensor_decompose(kron_identity(eig, 2));
  EXPECT_EQ(scalar_blocks.eigen_part, eig);
  EXPECT_TRUE(scalar_blocks.kernel_part.is_zero());

  const auto kernel = BlockHadamardMatrix::sample_kernel(f8, 2, 3, rng);
  const auto d = tensor_decompose(kernel);
  EXPECT_TRUE(d.eigen_part.is_zero());
  EXPECT_EQ(d.kernel_part, kernel);

  for (const Ring& base : testing::base_rings())
    for (std::size_t s = 1; s <= 4; ++s) {
      const auto m = BlockHadamardMatrix::sample(base, 2, s, rng);
      const auto t = tensor_decompose(m);
      ASSERT_TRUE(lambda_projection(t.kernel_part).is_zero());
      ASSERT_EQ(kron_identity(t.eigen_part, 2) + t.kernel_part, m);
      // g(M'' (x) I) = g(M'') (x) I = 0 for g = charpoly(M'')
      const RingPolynomial g = charpoly_berkowitz(t.eigen_part);
      ASSERT_TRUE(poly_eval_at_matrix(g, kron_identity(t.eigen_part, 2).matrix()).is_zero());
      ASSERT_EQ(poly_eval_at_matrix(g, kron_identity(t.eigen_part, 2).matrix()),
                kron_identity(poly_eval_at_matrix(g, t.eigen_part), 2).matrix());
    }
}

TEST(VerifyConjecture, SingleBlock) {
  Rng rng(4);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k) {
      const HadamardMatrix h = HadamardMatrix::sample(base, k, rng);
      const auto r = verify_conjecture(BlockHadamardMatrix(base, k, 1, {h}));
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.q, RingPolynomial(base, {had_eigenvalue(h).value, base.one()}));
    }
}

TEST(VerifyConjecture, ZeroMatrix) {
  for (const Ring& base : testing::base_rings())
    for (std::size_t s = 1; s <= 4; ++s) {
      const auto r = verify_conjecture(BlockHadamardMatrix::zero(base, 2, s));
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.q, RingPolynomial::monomial(base, s));
    }
}

// Independent 8x8 GF(2) bit-matrix arithmetic for the counterexample.
TEST(VerifyConjecture, KernelCounterexampleByBitOracle) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  const BlockHadamardMatrix m = kernel_counterexample(gf2);
  EXPECT_TRUE(lambda_projection(m).is_zero());

  BitMatrix b(8, std::vector<int>(8, 0));
  // B = e_0 + e has first row (1, 0, 1, 0); C = e_1 + e has (1, 1, 0, 0).
  const int brow[4] = {1, 0, 1, 0}, crow[4] = {1, 1, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      b[i][4 + j] = brow[i ^ j];
      b[4 + i][j] = crow[i ^ j];
    }
  EXPECT_EQ(testing::to_bits(flatten(m)), b);
  const BitMatrix b2 = testing::bit_mul(b, b);
  const BitMatrix b3 = testing::bit_mul(b2, b);
  const BitMatrix b4 = testing::bit_mul(b3, b);
  EXPECT_FALSE(testing::bit_zero(b2));
  EXPECT_TRUE(testing::bit_zero(b3));
  EXPECT_TRUE(testing::bit_zero(b4));

  const auto r = verify_conjecture(m);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.q, RingPolynomial::monomial(gf2, 2));
  EXPECT_FALSE((m * m).is_zero());
  EXPECT_EQ(r.q_of_m, (m * m).matrix());
  EXPECT_TRUE(r.q_of_m_squared.is_zero());
}

TEST(VerifyConjecture, RandomInstances) {
  Rng rng(5);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (std::size_t s = 1; s <= 4; ++s)
        for (int t = 0; t < 3; ++t) {
          const auto r = verify_conjecture(BlockHadamardMatrix::sample(base, k, s, rng));
          ASSERT_TRUE(r.ok()) << base.name() << " k=" << k << " s=" << s;
          ASSERT_EQ(r.q.degree(), static_cast<long>(s));
        }
}

TEST(VerifyConjecture, NestedHadamardBase) {
  // R itself a hadamard ring: H_1(H_1(GF(4))).
  Rng rng(6);
  const Ring base = ring_make("had:gf2:2:0x7:1");
  for (std::size_t s = 1; s <= 3; ++s) ASSERT_TRUE(verify_conjecture(BlockHadamardMatrix::sample(base, 1, s, rng)).ok());
}

// q(M + M~)^2 = 0 for M~ in ker lambda-bar, with q taken from M.
TEST(VerifyConjecture, StableUnderKernelPerturbation) {
  Rng rng(7);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 1; k <= 3; ++k)
      for (std::size_t s = 1; s <= 4; ++s) {
        const auto m = BlockHadamardMatrix::sample(base, k, s, rng);
        const auto tilde = BlockHadamardMatrix::sample_kernel(base, k, s, rng);
        const RingPolynomial q = charpoly_berkowitz(lambda_projection(m));
        const RingMatrix qm = poly_eval_at_matrix(q, (m + tilde).matrix());
        ASSERT_TRUE((qm * qm).is_zero());
      }
}

TEST(KernelNilpotency, Examples) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  const auto r = kernel_power_nilpotency(kernel_counterexample(gf2));
  EXPECT_EQ(r.index, 3u);
  EXPECT_TRUE(r.ok());

  EXPECT_EQ(kernel_power_nilpotency(BlockHadamardMatrix::zero(gf2, 2, 3)).index, 1u);

  Rng rng(8);
  const Ring f8 = ring_make("gf2:8:0x11b");
  for (unsigned k = 0; k <= 3; ++k) {
    const auto single = BlockHadamardMatrix(f8, k, 1, {HadamardMatrix::sample_kernel(f8, k, rng)});
    const auto n = kernel_power_nilpotency(single);
    EXPECT_LE(n.index, 2u);
    EXPECT_TRUE((single * single).is_zero());
  }
  EXPECT_THROW(kernel_power_nilpotency(BlockHadamardMatrix::identity(gf2, 1, 2)), NotInIdeal);
}

TEST(KernelNilpotency, RandomKernelInstances) {
  Rng rng(9);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (std::size_t s = 1; s <= 4; ++s) {
        const auto n = kernel_power_nilpotency(BlockHadamardMatrix::sample_kernel(base, k, s, rng));
        ASSERT_TRUE(n.ok());
        ASSERT_GE(n.index, 1u);
        ASSERT_LE(n.index, std::min<std::size_t>(k + 1, 2 * s));
      }
}

TEST(DiagramCheck, Examples) {
  Rng rng(10);
  const Ring f8 = ring_make("gf2:8:0x11b");
  EXPECT_TRUE(diagram_check(BlockHadamardMatrix(f8, 2, 1, {HadamardMatrix::sample(f8, 2, rng)})).ok());

  // Diagonal layout: Det over H_k is the product of diagonal blocks.
  std::vector<HadamardMatrix> blocks;
  std::vector<HadamardMatrix> diag;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) {
        diag.push_back(HadamardMatrix::sample(f8, 2, rng));
        blocks.push_back(diag.back());
      } else {
        blocks.push_back(HadamardMatrix::zero(f8, 2));
      }
    }
  const BlockHadamardMatrix m(f8, 2, 3, blocks);
  EXPECT_TRUE(diagram_check(m).ok());
  RingElement lam{f8, f8.one()}, det{f8, f8.one()};
  for (const auto& d : diag) {
    lam = lam * had_eigenvalue(d);
    det = det * had_det(d);
  }
  EXPECT_EQ(mat_det(lambda_projection(m)), lam.value);
  EXPECT_EQ(mat_det(det_projection(m)), det.value);

  for (const Ring& base : testing::base_rings())
    for (int t = 0; t < 20; ++t) {
      const unsigned k = static_cast<unsigned>(rng.below(3));
      const std::size_t s = 1 + rng.below(3);
      ASSERT_TRUE(diagram_check(BlockHadamardMatrix::sample(base, k, s, rng)).ok()) << base.name();
    }
}

// With M'' = 0 the minimal polynomial of M'' is x, but x^2 does not
// annihilate M: the conjecture does not strengthen to minimal polynomials.
TEST(MinimalPolynomialCounterexample, Fails) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  const BlockHadamardMatrix m = kernel_counterexample(gf2);
  const RingPolynomial phi = minimal_poly_field(lambda_projection(m));
  EXPECT_EQ(phi, RingPolynomial::monomial(gf2, 1));
  const RingMatrix phi_m = poly_eval_at_matrix(phi, m.matrix());
  EXPECT_FALSE((phi_m * phi_m).is_zero());
  EXPECT_TRUE(pow(m, 4).is_zero());
}

}  // namespace
}  // namespace hadring
