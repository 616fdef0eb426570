#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "hominf/format.hpp"
#include "hominf/geometry.hpp"
#include "hominf/point_io.hpp"

namespace {

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(hominf::format_double(0.25), "0.25");
  EXPECT_EQ(hominf::format_double(1.0), "1");
  EXPECT_EQ(hominf::format_double(0.1), "0.1");
  for (const double v : {1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.38634125121987}) {
    EXPECT_EQ(hominf::parse_double(hominf::format_double(v)), v);
  }
}

TEST(Format, ParseRejectsTrailingText) {
  EXPECT_EQ(hominf::parse_double(" 1.5\r"), 1.5);
  EXPECT_EQ(hominf::parse_double("+2"), 2.0);
  EXPECT_FALSE(hominf::parse_double("1.5x").has_value());
  EXPECT_FALSE(hominf::parse_double("").has_value());
  EXPECT_FALSE(hominf::parse_double("1,5").has_value());
}

TEST(PointIo, ReadsRowsAndSkipsBlankLines) {
  std::istringstream in("0.5,0.25\n\n1,2\r\n  \n-3,4e-2\n");
  const auto pts = hominf::read_points(in);
  ASSERT_EQ(pts.dim(), 2u);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[2][0], -3.0);
  EXPECT_EQ(pts[2][1], 0.04);
  EXPECT_EQ(pts[1][1], 2.0);
}

TEST(PointIo, EmptyInputGivesEmptyCloud) {
  std::istringstream in("\n\n");
  EXPECT_TRUE(hominf::read_points(in).empty());
}

TEST(PointIo, RaggedRowsReportTheLine) {
  std::istringstream in("1,2\n3,4\n5\n");
  try {
    (void)hominf::read_points(in);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(PointIo, BadNumberIsRejected) {
  std::istringstream in("1,2\n3,abc\n");
  EXPECT_THROW((void)hominf::read_points(in), std::runtime_error);
}

TEST(PointIo, FileRoundTripIsBitExact) {
  const auto pack = hominf::build_pack(2, 4, 1.0 / 16.0);
  const auto s = hominf::sample(pack, hominf::Hypothesis::null(), 250, 31);
  const auto path = std::filesystem::temp_directory_path() / "hominf_point_io_roundtrip.csv";
  hominf::write_point_file(path, s.points);
  const auto back = hominf::read_point_file(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back, s.points);
}

TEST(PointIo, MissingFileThrows) {
  EXPECT_THROW((void)hominf::read_point_file("/nonexistent/dir/points.csv"), std::runtime_error);
}

}  // namespace
