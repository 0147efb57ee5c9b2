#include <gtest/gtest.h>

#include <cmath>

#include "needlet/coeffs.hpp"
#include "needlet/spectrum.hpp"

using namespace needlet;

TEST(Spectrum, PowerLaw) {
  const auto s = PowerSpectrum::power_law(4.0);
  EXPECT_DOUBLE_EQ(s.c_l(2), 1.0 / 16.0);
  EXPECT_EQ(s.c_l(-3), s.c_l(3));
  EXPECT_THROW(s.c_l(0), std::domain_error);
}

TEST(Spectrum, CosineModulation) {
  const auto s = PowerSpectrum::cosine(2.0, 2.0, 1.0, 1.0);
  EXPECT_NEAR(s.c_l(5), (2.0 + std::cos(5.0)) / 25.0, 1e-15);
}

TEST(Spectrum, RejectsBadParameters) {
  EXPECT_THROW(PowerSpectrum::power_law(1.0), std::invalid_argument);
  EXPECT_THROW(PowerSpectrum::cosine(3.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST(Spectrum, TabulatedLookup) {
  const auto s = PowerSpectrum::tabulated(3.0, {{1, 1.0}, {2, 2.0}});
  EXPECT_DOUBLE_EQ(s.c_l(2), 2.0 / 8.0);
  EXPECT_THROW(s.c_l(3), std::out_of_range);
}

TEST(Spectrum, Scaled) {
  const auto s = PowerSpectrum::power_law(3.0).scaled(5.0);
  EXPECT_DOUBLE_EQ(s.c_l(2), 5.0 / 8.0);
}

TEST(ValidateA1, ConstantIsBounded) {
  const auto r = validate_a1(PowerSpectrum::power_law(4.0), 100);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.c1_hat, 1.0);
  EXPECT_EQ(r.c2_hat, 1.0);
}

TEST(ValidateA1, CosineStaysInBand) {
  const auto r = validate_a1(PowerSpectrum::cosine(2.0, 2.0, 1.0, 1.0), 10000);
  EXPECT_TRUE(r.ok);
  EXPECT_GE(r.c1_hat, 1.0);
  EXPECT_LE(r.c2_hat, 3.0);
}

TEST(ValidateA1, DriftingModulationsFail) {
  EXPECT_FALSE(validate_a1(PowerSpectrum::custom(2.0, [](std::size_t l) { return 1.0 / l; }, "1/l"), 1000).ok);
  EXPECT_FALSE(validate_a1(PowerSpectrum::custom(2.0, [](std::size_t l) { return double(l); }, "l"), 1000).ok);
}

TEST(ValidateA1, NonPositiveReportsIndex) {
  const auto r = validate_a1(PowerSpectrum::custom(2.0, [](std::size_t l) { return l == 7 ? 0.0 : 1.0; }, "hole"), 20);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.offending_index.has_value());
  EXPECT_EQ(*r.offending_index, 7u);
  EXPECT_THROW(validate_a1(PowerSpectrum::power_law(2.0), 7), std::invalid_argument);
}

// sigma_N^2 / C_{N/4} stays between fixed constants across scales.
TEST(Spectrum, Sigma2TracksCAtQuarterN) {
  for (const auto& s : {PowerSpectrum::power_law(4.0), PowerSpectrum::cosine(2.5, 2.0, 1.0, 1.0)}) {
    for (int j = 3; j <= 10; ++j) {
      const auto scale = NeedletScale::from_level(j);
      const double ratio = sigma2_N(s, scale) / s.c_l(static_cast<long>(scale.N / 4));
      EXPECT_GT(ratio, 0.05) << j;
      EXPECT_LT(ratio, 20.0) << j;
    }
  }
}
