#include <sstream>

#include <gtest/gtest.h>

#include "hsgeo/families.hpp"
#include "hsgeo/generators.hpp"
#include "hsgeo/serialize.hpp"
#include "hsgeo/tables.hpp"

namespace hsgeo {
namespace {

TEST(Serialize, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Serialize, CsvRoundTrip) {
  Grid g = Grid::line(101, -3, 3);
  auto f = FunctionSpec("gaussian").sample(g);
  std::stringstream s;
  write_csv(s, f);
  auto back = read_csv(s, Decay::RapidlyDecreasing);
  EXPECT_TRUE(back.grid() == g);
  EXPECT_EQ(sup_distance(back, f), 0.0);
}

TEST(Serialize, PeriodicGridDetected) {
  Grid p = Grid::periodic(32);
  auto f = GridFunction::sample(p, [](double x) { return std::sin(x); }, Decay::Periodic);
  std::stringstream s;
  write_csv(s, f);
  EXPECT_TRUE(read_csv(s).grid().is_periodic());
}

TEST(Serialize, DiffeoCsvAndJson) {
  Grid g = Grid::line(201, -10, 10);
  DataGenerator gen(71);
  Diffeo phi = gen.bump_diffeo(g);
  std::stringstream s;
  write_csv(s, phi);
  EXPECT_EQ(sup_distance(read_diffeo_csv(s).f(), phi.f()), 0.0);
  auto j = to_json(phi);
  Diffeo back = diffeo_from_json(j);
  EXPECT_EQ(back.group_class(), phi.group_class());
  EXPECT_EQ(sup_distance(back.f(), phi.f()), 0.0);
  EXPECT_EQ(sup_distance(grid_function_from_json(to_json(phi.f())), phi.f()), 0.0);
}

TEST(Serialize, ParseErrors) {
  std::stringstream bad("x,value\n0,1\n1,oops\n");
  EXPECT_THROW(read_csv(bad), Error);
  std::stringstream uneven("0,1\n1,1\n3,1\n");
  EXPECT_THROW(read_csv(uneven), Error);
  EXPECT_THROW(grid_function_from_json("{"), Error);
}

TEST(Tables, CsvAndJson) {
  Table t{{"a", "b"}, {{1.0, 0.5}, {2.0, -0.25}}};
  EXPECT_EQ(table_string(t), "a,b\n1,0.5\n2,-0.25\n");
  EXPECT_EQ(table_string(t, TableFormat::Json), "{\"columns\":[\"a\",\"b\"],\"rows\":[[1.0,0.5],[2.0,-0.25]]}\n");
  EXPECT_THROW(table_format_from_string("xml"), Error);
}

}  // namespace
}  // namespace hsgeo
