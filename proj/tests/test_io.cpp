#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "radon/io.hpp"
#include "radon/phantom.hpp"
#include "radon/transforms.hpp"

using namespace radon;

namespace {

RfaFile round_trip(const RfaFile& f) {
  std::stringstream ss;
  write_rfa(ss, f);
  return read_rfa(ss);
}

}  // namespace

TEST(Rfa, ImageRoundTripIsBitExact) {
  RfaFile f;
  f.kind = "image";
  f.image = sample(dog_phantom(), Grid2::centered(17, 12, 0.1, 0.3));
  f.image.data[3] = {1.0 / 3.0, -2e-300};
  const RfaFile g = round_trip(f);
  EXPECT_EQ(g.kind, "image");
  EXPECT_TRUE(g.image.grid.same_as(f.image.grid));
  EXPECT_EQ(g.image.grid.origin.x, f.image.grid.origin.x);
  EXPECT_EQ(g.image.data, f.image.data);
}

TEST(Rfa, SinogramRoundTripsAreBitExact) {
  const Grid2 g = Grid2::centered(16, 0.25);
  const Image img = sample(dog_phantom(), g);
  RfaFile p;
  p.kind = "sino_polar";
  p.polar = radon_polar(img, default_angles(7), default_offsets(g, 20), default_step(g));
  EXPECT_EQ(round_trip(p).polar.values.data, p.polar.values.data);
  EXPECT_EQ(round_trip(p).polar.theta.step, p.polar.theta.step);
  RfaFile a;
  a.kind = "sino_affine";
  a.affine = radon_affine(img, default_slopes(5), default_offsets(g, 20), default_step(g));
  EXPECT_EQ(round_trip(a).affine.values.data, a.affine.values.data);
  EXPECT_EQ(round_trip(a).affine.v.origin, a.affine.v.origin);
  RfaFile c;
  c.kind = "sino_circular";
  c.circular = radon_circular(img, g, {0.1, 1.0 / 3.0, 1.7}, 0.3);
  const RfaFile cc = round_trip(c);
  EXPECT_EQ(cc.circular.values, c.circular.values);
  EXPECT_EQ(cc.circular.radii, c.circular.radii);
  EXPECT_EQ(cc.circular.alpha, 0.3);
}

TEST(Rfa, ValuesAreLittleEndianDoubles) {
  RfaFile f;
  f.kind = "image";
  f.image = Image(Grid2::centered(2, 1.0));
  f.image.data[3] = {1.0, 0.0};
  std::stringstream ss;
  write_rfa(ss, f);
  const std::string s = ss.str();
  const std::string tail = s.substr(s.size() - 16);
  const unsigned char one[8] = {0, 0, 0, 0, 0, 0, 0xf0, 0x3f};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(static_cast<unsigned char>(tail[i]), one[i]);
  for (int i = 8; i < 16; ++i) EXPECT_EQ(tail[i], 0);
}

TEST(Rfa, MalformedInputIsAnIoError) {
  std::stringstream bad_magic("RFA2\nkind image\n");
  EXPECT_THROW(read_rfa(bad_magic), IoError);
  std::stringstream bad_kind("RFA1\nkind movie\nn 1 1\norigin 0 0\nstep 1 1\ndata\n");
  EXPECT_THROW(read_rfa(bad_kind), IoError);
  std::stringstream truncated("RFA1\nkind image\nn 2 2\norigin 0 0\nstep 1 1\ndata\nxyz");
  EXPECT_THROW(read_rfa(truncated), IoError);
  std::stringstream bad_number("RFA1\nkind image\nn 2 2\norigin 0 zero\nstep 1 1\ndata\n");
  EXPECT_THROW(read_rfa(bad_number), IoError);
  EXPECT_THROW(load_rfa("/nonexistent/dir/file.rfa"), IoError);
}

TEST(Pgm, HeaderAndScaling) {
  Image img(Grid2::centered(3, 2, 1.0, 1.0));
  img(0, 0) = 1.0;
  img(2, 1) = 3.0;
  const std::string path = testing::TempDir() + "radon_test.pgm";
  save_pgm(path, img);
  std::ifstream is(path, std::ios::binary);
  const std::string s{std::istreambuf_iterator<char>(is), {}};
  std::remove(path.c_str());
  ASSERT_EQ(s.size(), std::string("P5\n3 2\n255\n").size() + 6);
  EXPECT_EQ(s.substr(0, 11), "P5\n3 2\n255\n");
  // top row holds i2 = 1
  EXPECT_EQ(static_cast<unsigned char>(s[11 + 2]), 255);
  EXPECT_EQ(static_cast<unsigned char>(s[11 + 3]), 85);
}
