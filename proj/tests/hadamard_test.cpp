#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hadring {
namespace {

HadamardMatrix row(const Ring& base, std::vector<Word> entries) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < entries.size()) ++k;
  std::vector<Repr> r;
  for (Word w : entries) r.push_back(base.from_uint(w));
  return HadamardMatrix(base, k, std::move(r));
}

TEST(HadExpand, Examples) {
  const Ring f8 = ring_make("gf2:8:0x11b");
  const RingMatrix two = had_expand(row(f8, {0x11, 0x22}));
  EXPECT_EQ(two, RingMatrix(f8, 2, 2, {Repr{0x11}, Repr{0x22}, Repr{0x22}, Repr{0x11}}));
  EXPECT_EQ(had_expand(row(f8, {0x7})), RingMatrix(f8, 1, 1, {Repr{0x7}}));
  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_EQ(had_expand(row(gf2, {1, 0, 0, 0})), RingMatrix::identity(gf2, 4));
}

TEST(HadExpand, RecursiveBlockForm) {
  // [[A, B], [B, A]] with A, B the half-size Hadamard matrices.
  const Ring f8 = ring_make("gf2:8:0x11b");
  Rng rng(1);
  for (unsigned k = 1; k <= 4; ++k) {
    const HadamardMatrix h = HadamardMatrix::sample(f8, k, rng);
    const std::size_t half = h.size() / 2;
    const HadamardMatrix a(f8, k - 1, {h.row().begin(), h.row().begin() + static_cast<long>(half)});
    const HadamardMatrix b(f8, k - 1, {h.row().begin() + static_cast<long>(half), h.row().end()});
    const RingMatrix full = had_expand(h), ea = had_expand(a), eb = had_expand(b);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j) {
        ASSERT_EQ(full(i, j), ea(i, j));
        ASSERT_EQ(full(i, j + half), eb(i, j));
        ASSERT_EQ(full(i + half, j), eb(i, j));
        ASSERT_EQ(full(i + half, j + half), ea(i, j));
      }
  }
}

TEST(HadFromFull, Examples) {
  const Ring f8 = ring_make("gf2:8:0x11b");
  const RingMatrix ok(f8, 2, 2, {Repr{3}, Repr{5}, Repr{5}, Repr{3}});
  EXPECT_EQ(had_from_full(ok), row(f8, {3, 5}));
  const RingMatrix bad(f8, 2, 2, {Repr{3}, Repr{5}, Repr{6}, Repr{3}});
  try {
    had_from_full(bad);
    FAIL() << "expected NotHadamard";
  } catch (const NotHadamard& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 0u);
  }
  EXPECT_THROW(had_from_full(RingMatrix::identity(f8, 3)), ShapeError);
  EXPECT_THROW(had_from_full(RingMatrix(f8, 2, 4)), ShapeError);
}

TEST(HadFromFull, RoundTrip) {
  Rng rng(2);
  for (const Ring& base : testing::property_rings()) {
    for (unsigned k = 0; k <= 3; ++k) {
      const HadamardMatrix h = HadamardMatrix::sample(base, k, rng);
      ASSERT_EQ(had_from_full(had_expand(h)), h);
    }
  }
}

TEST(HadMul, Examples) {
  const Ring f4 = ring_make("gf2:2:0x7");  // w = 0x2, w^2 = w + 1
  const HadamardMatrix a = row(f4, {2, 1}), b = row(f4, {1, 2});
  const HadamardMatrix oracle = had_from_full(had_expand(a) * had_expand(b));
  EXPECT_EQ(oracle, row(f4, {0, 2}));
  EXPECT_EQ(had_mul(a, b), row(f4, {0, 2}));

  Rng rng(3);
  const HadamardMatrix c = HadamardMatrix::sample(f4, 3, rng);
  EXPECT_EQ(HadamardMatrix::identity(f4, 3) * c, c);

  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_EQ(had_expand(row(gf2, {1, 1})) * had_expand(row(gf2, {1, 1})), RingMatrix(gf2, 2, 2));
  EXPECT_EQ(row(gf2, {1, 1}) * row(gf2, {1, 1}), row(gf2, {0, 0}));
}

TEST(HadMul, AgreesWithFullProduct) {
  Rng rng(4);
  for (const Ring& base : testing::property_rings()) {
    const unsigned max_k = base.width() > 2 ? 2 : 4;
    for (unsigned k = 0; k <= max_k; ++k) {
      for (int t = 0; t < 5; ++t) {
        const HadamardMatrix a = HadamardMatrix::sample(base, k, rng), b = HadamardMatrix::sample(base, k, rng);
        ASSERT_EQ(had_expand(a * b), had_expand(a) * had_expand(b)) << base.name() << " k=" << k;
      }
    }
  }
}

TEST(HadMul, Mismatch) {
  const Ring f4 = ring_make("gf2:2:0x7");
  const Ring f8 = ring_make("gf2:8:0x11b");
  EXPECT_THROW(HadamardMatrix::identity(f4, 1) * HadamardMatrix::identity(f4, 2), ShapeError);
  EXPECT_THROW(HadamardMatrix::identity(f4, 1) * HadamardMatrix::identity(f8, 1), ContextMismatch);
  EXPECT_THROW(HadamardMatrix::identity(f4, 1) + HadamardMatrix::identity(f8, 1), ContextMismatch);
  EXPECT_THROW(HadamardMatrix(f4, 1, {f4.one()}), ShapeError);
  EXPECT_THROW(HadamardMatrix(f4, 0, {Repr{0x9}}), ShapeError);
}

TEST(HadAdd, Examples) {
  Rng rng(5);
  const Ring f8 = ring_make("gf2:8:0x11b");
  const HadamardMatrix a = HadamardMatrix::sample(f8, 2, rng);
  EXPECT_EQ(a + a, HadamardMatrix::zero(f8, 2));
  EXPECT_EQ(a + HadamardMatrix::zero(f8, 2), a);
  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_EQ(row(gf2, {1, 0}) + row(gf2, {0, 1}), row(gf2, {1, 1}));
}

TEST(HadEigenvalue, Examples) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_TRUE(had_eigenvalue(row(gf2, {1, 0})).value == gf2.one());
  const Ring f4 = ring_make("gf2:2:0x7");
  EXPECT_EQ(had_eigenvalue(row(f4, {2, 1})).value, Repr{0x3});
  const Ring f8 = ring_make("gf2:8:0x11b");
  EXPECT_TRUE(had_eigenvalue(row(f8, {0x5c, 0x5c, 0x5c, 0x5c})).is_zero());
  EXPECT_TRUE(had_eigenvalue(row(f8, {0x5c, 0x5c})).is_zero());
}

TEST(HadDet, Examples) {
  const Ring f4 = ring_make("gf2:2:0x7");
  EXPECT_TRUE(f4.is_one(had_det(HadamardMatrix::identity(f4, 3)).value));
  const Ring gf2 = ring_make("gf2:1:0x3");
  EXPECT_TRUE(had_det(row(gf2, {1, 1})).is_zero());
  // a0^2 + a1^2 = w^2 + 1 = w
  EXPECT_EQ(f4.add(f4.square(f4.from_uint(2)), f4.one()), f4.from_uint(2));
  EXPECT_EQ(had_det(row(f4, {2, 1})).value, Repr{0x2});
}

// H^2 = lambda(H)^2 I.
TEST(HadamardProperties, SquareIsScalar) {
  Rng rng(6);
  for (const Ring& base : testing::property_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (int t = 0; t < 10; ++t) {
        const HadamardMatrix h = HadamardMatrix::sample(base, k, rng);
        const Repr lam = had_eigenvalue(h).value;
        ASSERT_EQ(h * h, HadamardMatrix::scalar(base, k, base.square(lam))) << base.name();
      }
}

// lambda and det are ring homomorphisms H_k(R) -> R.
TEST(HadamardProperties, Homomorphisms) {
  Rng rng(7);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (int t = 0; t < 20; ++t) {
        const HadamardMatrix a = HadamardMatrix::sample(base, k, rng), b = HadamardMatrix::sample(base, k, rng);
        ASSERT_EQ(had_eigenvalue(a + b), had_eigenvalue(a) + had_eigenvalue(b));
        ASSERT_EQ(had_eigenvalue(a * b), had_eigenvalue(a) * had_eigenvalue(b));
        ASSERT_EQ(had_det(a + b), had_det(a) + had_det(b));
        ASSERT_EQ(had_det(a * b), had_det(a) * had_det(b));
      }
}

// det(H) = lambda(H)^(2^k), checked against the division-free determinant.
TEST(HadamardProperties, DeterminantClosedForm) {
  Rng rng(8);
  for (const Ring& base : testing::property_rings())
    for (unsigned k = 0; k <= 3; ++k)
      for (int t = 0; t < 10; ++t) {
        const HadamardMatrix h = HadamardMatrix::sample(base, k, rng);
        ASSERT_EQ(had_det(h).value, base.pow(had_eigenvalue(h).value, std::uint64_t{1} << k)) << base.name();
      }
}

TEST(HadKronBasis, Examples) {
  const Ring gf2 = ring_make("gf2:1:0x3");
  for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(had_kron_basis(gf2, k, 0), HadamardMatrix::identity(gf2, k));

  // J2 (x) J2 written out by hand.
  const RingMatrix j2j2(gf2, 4, 4,
                        {Repr{0}, Repr{0}, Repr{0}, Repr{1},  //
                         Repr{0}, Repr{0}, Repr{1}, Repr{0},  //
                         Repr{0}, Repr{1}, Repr{0}, Repr{0},  //
                         Repr{1}, Repr{0}, Repr{0}, Repr{0}});
  EXPECT_EQ(kron_basis_matrix(gf2, 2, 3), j2j2);
  EXPECT_EQ(had_kron_basis(gf2, 2, 3), row(gf2, {0, 0, 0, 1}));
  // J2 (x) I2 has its first-row 1 at position 2 (leading digit i_0).
  EXPECT_EQ(had_kron_basis(gf2, 2, 2), row(gf2, {0, 0, 1, 0}));

  EXPECT_EQ(had_kron_basis(gf2, 2, 1) * had_kron_basis(gf2, 2, 2), had_kron_basis(gf2, 2, 3));
  EXPECT_THROW(had_kron_basis(gf2, 2, 4), ShapeError);
}

TEST(HadKronBasis, ProductLaw) {
  const Ring f8 = ring_make("gf2:8:0x11b");
  for (unsigned k = 0; k <= 4; ++k)
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i)
      for (std::size_t j = 0; j < (std::size_t{1} << k); ++j)
        ASSERT_EQ(had_kron_basis(f8, k, i) * had_kron_basis(f8, k, j), had_kron_basis(f8, k, i ^ j));
}

TEST(HadDecompose, Examples) {
  const Ring f4 = ring_make("gf2:2:0x7");
  EXPECT_EQ(had_decompose(HadamardMatrix::identity(f4, 2)), (std::vector<BasisTerm>{{f4.one(), 0}}));
  EXPECT_EQ(had_decompose(row(f4, {2, 1})), (std::vector<BasisTerm>{{Repr{2}, 0}, {Repr{1}, 1}}));
  EXPECT_TRUE(had_decompose(HadamardMatrix::zero(f4, 3)).empty());
  Rng rng(9);
  for (unsigned k = 0; k <= 4; ++k) {
    const HadamardMatrix h = HadamardMatrix::sample(f4, k, rng);
    ASSERT_EQ(had_reconstruct(f4, k, had_decompose(h)), h);
  }
}

TEST(HadamardMatrix, KernelSamplerHasEigenvalueZero) {
  Rng rng(10);
  for (const Ring& base : testing::base_rings())
    for (unsigned k = 0; k <= 3; ++k) ASSERT_TRUE(had_eigenvalue(HadamardMatrix::sample_kernel(base, k, rng)).is_zero());
}

}  // namespace
}  // namespace hadring
