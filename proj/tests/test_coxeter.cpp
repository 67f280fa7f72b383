#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxfar/coxeter.hpp"

using namespace coxfar;

TEST_CASE("type parsing accepts canonical symbols") {
  CHECK(parse_type("A3").symbol() == "A3");
  CHECK(parse_type("B4").symbol() == "B4");
  CHECK(parse_type("I2(7)").symbol() == "I2(7)");
  CHECK(parse_type("G2").symbol() == "G2");
  CHECK(parse_type("A1xA2").rank() == 3);
  CHECK(parse_type("H4").rank() == 4);
  CHECK(parse_type("E8").rank() == 8);
}

TEST_CASE("type parsing rejects dihedral aliases and junk") {
  CHECK_THROWS_AS(parse_type("I2(2)"), std::invalid_argument);  // = A1xA1
  CHECK_THROWS_AS(parse_type("I2(3)"), std::invalid_argument);  // = A2
  CHECK_THROWS_AS(parse_type("I2(4)"), std::invalid_argument);  // = B2
  CHECK_THROWS_AS(parse_type("I2(6)"), std::invalid_argument);  // = G2
  CHECK_THROWS_AS(parse_type("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("H5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("E9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("A3x"), std::invalid_argument);
}

TEST_CASE("degree tables") {
  DegreeTable h4 = degree_table(parse_type("H4"));
  CHECK(h4.degrees == std::vector<int>{2, 12, 20, 30});
  CHECK(h4.exponents == std::vector<int>{1, 11, 19, 29});
  CHECK(h4.coxeter_number == 30);
  CHECK(h4.order == 14400);
  CHECK(h4.num_reflections == 60);

  DegreeTable e8 = degree_table(parse_type("E8"));
  CHECK(e8.order == 696729600LL);
  CHECK(e8.num_reflections == 120);
  CHECK(e8.coxeter_number == 30);

  DegreeTable f4 = degree_table(parse_type("F4"));
  CHECK(f4.degrees == std::vector<int>{2, 6, 8, 12});

  DegreeTable prod = degree_table(parse_type("A1xA2"));
  CHECK(prod.order == 12);
  CHECK(prod.num_reflections == 4);
}

TEST_CASE("2N = hn for every irreducible type") {
  for (const char* s : {"A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2",
                        "H3", "H4", "E6", "E7", "E8", "I2(5)", "I2(7)",
                        "I2(8)"}) {
    CoxeterType t = parse_type(s);
    DegreeTable dt = degree_table(t);
    CHECK(2 * dt.num_reflections == dt.coxeter_number * t.rank());
  }
}

TEST_CASE("root counts match the reflection counts") {
  for (const char* s :
       {"A3", "B3", "D4", "F4", "H3", "H4", "I2(5)", "I2(7)", "A1xA2"}) {
    CoxeterType t = parse_type(s);
    RootSystem rs(t);
    CHECK(rs.num_roots() == degree_table(t).num_reflections);
  }
  CHECK(RootSystem(parse_type("H4")).num_roots() == 60);
  CHECK(RootSystem(parse_type("E8")).num_roots() == 120);
}

TEST_CASE("group enumeration sizes and refusal") {
  for (auto [s, n] : std::initializer_list<std::pair<const char*, long long>>{
           {"A3", 24}, {"B3", 48}, {"H3", 120}, {"I2(7)", 14}, {"A1xA2", 12}}) {
    RootSystem rs(parse_type(s));
    CHECK(static_cast<long long>(enumerate_group(rs, 1000).size()) == n);
  }
  RootSystem b3(parse_type("B3"));
  CHECK_THROWS_AS(enumerate_group(b3, 10), std::runtime_error);
}

TEST_CASE("reflections are involutions negating their own root") {
  RootSystem rs(parse_type("B3"));
  for (int r = 0; r < rs.num_roots(); ++r) {
    GroupElement g = rs.reflection_element(r);
    CHECK((g * g).is_identity());
    auto [img, sign] = g.apply(r);
    CHECK(img == r);
    CHECK(sign == -1);
  }
  // A simple reflection permutes the positive roots other than its own.
  for (int s = 0; s < rs.rank(); ++s) {
    const GroupElement& g = rs.simple_reflection(s);
    int negated = 0;
    for (int i = 0; i < rs.num_roots(); ++i)
      if (g.apply(i).second < 0) ++negated;
    CHECK(negated == 1);
  }
}

TEST_CASE("gram matrix encodes the coxeter labels") {
  RootSystem rs(parse_type("I2(5)"));
  AlgebraicNumber c = cos_pi_over(5, rs.field());
  CHECK(rs.gram()(0, 0) == AlgebraicNumber(1));
  CHECK(rs.gram()(0, 1) == -c);
  Eigen::MatrixXi m = coxeter_matrix(parse_type("B3"));
  CHECK(m(0, 1) == 3);
  CHECK(m(1, 2) == 4);
  CHECK(m(0, 2) == 2);
}
