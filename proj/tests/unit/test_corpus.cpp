#include "summa/corpus.hpp"

#include <cmath>

#include "support.hpp"

namespace summa {
namespace {

TEST(Corpus, ConstantAndCosine) {
  const PeriodicGrid g(8);
  const auto c = corpus_1d("constant(3)", g);
  for (double v : c.values()) EXPECT_EQ(v, 3.0);
  const auto cs = corpus_1d("cosine(3)", PeriodicGrid(16));
  EXPECT_NEAR(cs[8], 1.0, 1e-15);  // x = 0
}

TEST(Corpus, UnknownName) {
  const PeriodicGrid g(8);
  EXPECT_SUMMA_ERROR(corpus_1d("sawtooth", g), ErrorCode::UnknownCorpusEntry);
  EXPECT_SUMMA_ERROR(corpus_2d("nonsense", g, g), ErrorCode::UnknownCorpusEntry);
  EXPECT_SUMMA_ERROR(corpus_info("box(1)"), ErrorCode::UnknownCorpusEntry);
}

TEST(Corpus, RandomTrigPolyAgreesAcrossResolutions) {
  const PeriodicGrid g64(64), g128(128);
  const auto a = corpus_2d("random-trigpoly(2,3,seed=7)", g64, g64);
  const auto b = corpus_2d("random-trigpoly(2,3,seed=7)", g128, g128);
  const auto t = random_trig_poly_2d(2, 3, 7);
  for (std::size_t i = 0; i < 64; ++i) {
    for (std::size_t j = 0; j < 64; ++j) {
      EXPECT_EQ(a(i, j), b(2 * i, 2 * j));
      EXPECT_NEAR(a(i, j), t(g64.point(i), g64.point(j)), 1e-12);
    }
  }
}

TEST(Corpus, Deterministic) {
  const PeriodicGrid g(64);
  for (const auto& name : default_corpus_1d()) {
    const auto a = corpus_1d(name, g);
    const auto b = corpus_1d(name, g);
    for (std::size_t j = 0; j < 64; ++j) EXPECT_EQ(a[j], b[j]) << name;
  }
  for (const auto& name : default_corpus_2d()) {
    const auto a = corpus_2d(name, g, g);
    const auto b = corpus_2d(name, g, g);
    for (std::size_t k = 0; k < a.values().size(); ++k) EXPECT_EQ(a.values()[k], b.values()[k]) << name;
  }
}

TEST(Corpus, MembershipTags) {
  EXPECT_TRUE(corpus_info("log-singular").tags.llogl);
  EXPECT_FALSE(corpus_info("log-singular").tags.l1_only);
  EXPECT_TRUE(corpus_info("l1-only").tags.l1_only);
  EXPECT_FALSE(corpus_info("l1-only").tags.llogl);
  EXPECT_TRUE(corpus_info("product-log-singular").tags.llogl);
  const auto t = corpus_info("random-trigpoly(2,3,seed=7)");
  EXPECT_TRUE(t.tags.trig_poly);
  EXPECT_EQ(t.tags.degree1, 2);
  EXPECT_EQ(t.tags.degree2, 3);
  EXPECT_EQ(t.dims, 2);
  EXPECT_TRUE(corpus_info("cosine(3)").tags.continuous);
}

TEST(Corpus, SingularEntriesRecordClipping) {
  const auto info = corpus_info("log-singular");
  EXPECT_FALSE(info.clipping.empty());
  ASSERT_TRUE(info.singular_x1.has_value());
  EXPECT_EQ(*info.singular_x1, 0.0);
  const PeriodicGrid g(64);
  const auto f = corpus_1d("log-singular", g);
  // Origin cell holds the 64-point subsampled cell average, so it stays finite
  // and exceeds its neighbours.
  EXPECT_TRUE(std::isfinite(f[32]));
  EXPECT_GT(f[32], f[31]);
  EXPECT_GT(f[32], f[33]);
  EXPECT_NEAR(f[31], std::log(kTwoPi / g.step()), 1e-12);
}

TEST(Corpus, TensorProduct) {
  const PeriodicGrid g(16);
  const auto f = corpus_2d("cosine(1)*cosine(2)", g, g);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      EXPECT_NEAR(f(i, j), std::cos(g.point(i)) * std::cos(2 * g.point(j)), 1e-14);
}

TEST(Corpus, BoxIsHalfOpen) {
  const PeriodicGrid g(16);
  const auto f = corpus_1d("box(-0.5,0.5)", g);
  for (std::size_t j = 0; j < 16; ++j) {
    const double x = g.point(j);
    EXPECT_EQ(f[j], (x >= -0.5 && x < 0.5) ? 1.0 : 0.0);
  }
}

TEST(Corpus, RandomTrigPolyCoefficientsMatchEvaluation) {
  const auto p = random_trig_poly_1d(5, 11);
  EXPECT_EQ(p.degree(), 5);
  for (double x : {-3.0, -1.0, 0.25, 2.0}) {
    std::complex<double> s = 0.0;
    for (int m = -5; m <= 5; ++m) s += p.coefficient(m) * std::polar(1.0, m * x);
    EXPECT_NEAR(s.real(), p(x), 1e-13);
    EXPECT_NEAR(s.imag(), 0.0, 1e-13);
  }
}

}  // namespace
}  // namespace summa
