#include <gtest/gtest.h>

#include <sstream>

#include "radon/experiment.hpp"

using namespace radon;

TEST(Config, ParsesKeysAndComments) {
  std::istringstream is("# comment\nfamily = affine  # trailing\n\nscales=20\na_min = 0.0625\nphantom = blobs\n");
  const ExperimentConfig c = parse_config(is);
  EXPECT_EQ(c.family, "affine");
  EXPECT_EQ(c.scales, 20u);
  EXPECT_EQ(c.a_min, 0.0625);
  EXPECT_EQ(c.phantom_name(), "blobs");
  EXPECT_NO_THROW(validate(c));
}

TEST(Config, ErrorsNameTheKey) {
  auto message = [](const std::string& text) {
    std::istringstream is(text);
    try {
      parse_config(is);
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("wavelet_color = blue\n").find("wavelet_color"), std::string::npos);
  EXPECT_NE(message("angles = many\n").find("angles"), std::string::npos);
  EXPECT_NE(message("a_max = 1e999\n").find("a_max"), std::string::npos);
  EXPECT_NE(message("scales = -3\n").find("scales"), std::string::npos);
  EXPECT_NE(message("just words\n").find("malformed"), std::string::npos);
}

TEST(Config, ValidateRejectsBadRanges) {
  ExperimentConfig c;
  c.family = "spherical";
  EXPECT_THROW(validate(c), UsageError);
  c = {};
  c.alpha = 1.0;
  EXPECT_THROW(validate(c), UsageError);
  c = {};
  c.a_max = c.a_min;
  EXPECT_THROW(validate(c), UsageError);
  c = {};
  c.angles = 1;
  EXPECT_THROW(validate(c), UsageError);
  EXPECT_NO_THROW(validate(ExperimentConfig{}));
}

TEST(Config, RefinementHalvesTheLogStepAndWidensTheRange) {
  const ExperimentConfig c;
  const ExperimentConfig r = refined(c);
  EXPECT_EQ(c.scales, 14u);
  EXPECT_EQ(r.scales, 40u);
  EXPECT_EQ(r.a_min, 0.0625);
  EXPECT_EQ(r.a_max, 8.0);
  EXPECT_EQ(r.group_angles, 72u);
  EXPECT_EQ(c.shear_count(), 69u);
  EXPECT_EQ(r.shear_count(), 97u);
}

TEST(Config, FamilyDefaults) {
  ExperimentConfig c;
  EXPECT_EQ(c.phantom_name(), "dog");
  EXPECT_EQ(c.budget(), 5e-2);
  c.family = "affine";
  EXPECT_EQ(c.phantom_name(), "cone_dog");
  EXPECT_EQ(c.budget(), 8e-2);
  c.family = "circular";
  EXPECT_EQ(c.budget(), 1e-1);
  c.tolerance = 0.3;
  EXPECT_EQ(c.budget(), 0.3);
}

TEST(Phantoms, DogHasZeroMeanAndGaussianPeaksAtTheCenter) {
  const Grid2 g = Grid2::centered(129, 1.0 / 8);
  const Image d = sample(dog_phantom(), g);
  cplx sum = 0.0;
  for (const auto& v : d.data) sum += v;
  EXPECT_LT(std::abs(sum) * g.dx * g.dy, 1e-12);
  const Image f = sample(gaussian_phantom(), g);
  EXPECT_EQ(f(64, 64).real(), 1.0);
  EXPECT_THROW(make_phantom("teapot"), DomainError);
}
