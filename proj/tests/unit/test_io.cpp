#include <gtest/gtest.h>

#include <sstream>

#include "chainprod/constructions.hpp"
#include "chainprod/experiments.hpp"
#include "chainprod/io.hpp"
#include "support.hpp"

using namespace chainprod;

TEST(Io, MatrixRoundTrip) {
  Rng rng(1);
  for (unsigned q : testing_support::table_orders()) {
    const Field f = Field::of_order(q);
    const Mat m = testing_support::random_mat(f, 3, 5, rng);
    std::stringstream ss;
    write_matrix(ss, m);
    EXPECT_EQ(read_matrix(ss), m);
  }
  std::stringstream empty;
  write_matrix(empty, Mat(Field::of_order(4), 0, 3));
  EXPECT_EQ(read_matrix(empty), Mat(Field::of_order(4), 0, 3));
}

TEST(Io, MatrixSyntax) {
  std::istringstream in("# comment\n\n2^2 2 3\n1 2 3\n# inside\n0 0 1\n");
  const Mat m = read_matrix(in);
  EXPECT_EQ(m.field().q(), 4u);
  EXPECT_EQ(m, Mat::from_codes(Field::of_order(4), 2, 3, {1, 2, 3, 0, 0, 1}));
  std::istringstream prime("7 1 2\n6 5\n");
  EXPECT_EQ(read_matrix(prime).field().q(), 7u);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_matrix(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("2 2 2\n1 0\n1 2\n"), 3u);    // entry out of range
  EXPECT_EQ(line_of("2 2 2\n1 0\n"), 3u);         // missing row, reported at end of input
  EXPECT_EQ(line_of("2 2 2\n1 0 1\n0 1\n"), 2u);  // wrong row length
  EXPECT_EQ(line_of("6 1 1\n1\n"), 1u);           // not a field order
  EXPECT_EQ(line_of("\n# c\n2 x 1\n"), 3u);
  std::istringstream in("2 1 1\nz\n");
  try {
    read_matrix(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Io, ComplexRoundTripAndValidation) {
  const CssCode s = steane_code(Field::of_order(2));
  const ChainComplex c = css_complex(s);
  std::stringstream ss;
  write_complex(ss, c);
  EXPECT_EQ(read_complex(ss), c);
  std::istringstream bad("2 2\n2 1 2\n1 0\n2 2 1\n1\n0\n");
  EXPECT_THROW(read_complex(bad), std::exception);
  std::istringstream mixed("2 1\n3 1 1\n1\n");
  EXPECT_THROW(read_complex(mixed), ParseError);
}

TEST(Io, CodeRoundTrip) {
  const CssCode s = odd_base_code(Field::of_order(5));
  std::stringstream ss;
  write_code(ss, s);
  const AnyCode back = read_code(ss);
  ASSERT_TRUE(std::holds_alternative<CssCode>(back));
  EXPECT_EQ(std::get<CssCode>(back).hx(), s.hx());
  EXPECT_EQ(std::get<CssCode>(back).hz(), s.hz());

  const Field f2 = Field::of_order(2);
  const SubsystemCode bs = subsystem_qhp(repetition_checks(f2, 3), repetition_checks(f2, 3)).value;
  std::stringstream ss2;
  write_code(ss2, bs);
  const AnyCode b2 = read_code(ss2);
  ASSERT_TRUE(std::holds_alternative<SubsystemCode>(b2));
  EXPECT_EQ(std::get<SubsystemCode>(b2).gx(), bs.gx());
  EXPECT_EQ(std::get<SubsystemCode>(b2).kappa(), 4u);

  std::istringstream bad("stabilizer\n2 1 1\n1\n2 1 1\n1\n");
  EXPECT_THROW(read_code(bad), ParseError);
  std::istringstream nonorth("css\n2 1 2\n1 0\n2 1 2\n1 0\n");
  EXPECT_THROW(read_code(nonorth), std::exception);
  EXPECT_THROW(load_code("/nonexistent/file"), ParseError);
}

TEST(Io, IndexSets) {
  EXPECT_EQ(parse_index_set("1,3,4", 5).members(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(parse_index_set("4 1", 5).members(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(parse_index_set("", 5).size(), 0u);
  EXPECT_THROW(parse_index_set("0", 5), ParseError);
  EXPECT_THROW(parse_index_set("6", 5), ParseError);
  EXPECT_THROW(parse_index_set("2,2", 5), ParseError);
  EXPECT_THROW(parse_index_set("a", 5), ParseError);
}

TEST(Io, Certificates) {
  const Vec v{0, 1, 10, 35};
  EXPECT_EQ(certificate_string(v, 36), "01az");
  EXPECT_EQ(parse_certificate("01az", 36), v);
  EXPECT_EQ(certificate_string(Vec{1, 0, 1}, 2), "101");
  const Vec big{0, 200, 37};
  EXPECT_EQ(certificate_string(big, 256), "0.200.37");
  EXPECT_EQ(parse_certificate("0.200.37", 256), big);
  EXPECT_THROW(parse_certificate("12", 2), ParseError);
  Rng rng(3);
  for (unsigned q : {2u, 3u, 16u, 37u, 64u}) {
    Vec r(9);
    for (auto& x : r) x = static_cast<std::uint8_t>(rng.below(q));
    EXPECT_EQ(parse_certificate(certificate_string(r, q), q), r);
  }
}

TEST(Io, Json) {
  EXPECT_EQ(to_json(DistanceValue::infinity()), "inf");
  EXPECT_EQ(to_json(DistanceValue(7)), 7);
  EXPECT_EQ(to_json(DistanceValue(Rational(7, 2))), "7/2");
  const CssCode s = steane_code(Field::of_order(2));
  const DistanceResult r = dz_exact(s, Side::Z);
  const auto j = to_json(r, 2);
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["method"], "exhaustive");
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["certificate"].get<std::string>().size(), 7u);
  EXPECT_EQ(parse_certificate(j["certificate"].get<std::string>(), 2), *r.certificate);
  for (const char* key : {"trials", "seed", "algorithm", "certifying_bound"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto b = to_json(BoundPair{Bound{7, bound_tag::cyclic_orbit}, Bound{7, bound_tag::symmetric_length}});
  EXPECT_EQ(b["lower"]["tag"], bound_tag::cyclic_orbit);
  EXPECT_EQ(b["upper"]["value"], 7);
  const auto m = to_json(Mat::identity(Field::of_order(3), 2));
  EXPECT_EQ(m["data"].dump(), "[[1,0],[0,1]]");
  EXPECT_EQ(m["q"], "3");
  EXPECT_EQ(m["rows"], 2);
  const auto inf = to_json(dz_exact(CssCode(Mat::identity(Field::of_order(2), 1), Mat(Field::of_order(2), 0, 1)), Side::Z), 2);
  EXPECT_EQ(inf["value"], "inf");
  EXPECT_TRUE(inf["certificate"].is_null());
}
