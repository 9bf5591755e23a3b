#include "doctest.h"

#include <stdexcept>
#include <string>

#include "compsum/composition_sums.hpp"
#include "compsum/hypergeometric.hpp"
#include "compsum/json_io.hpp"

using namespace compsum;

TEST_CASE("bipoly json exact form") {
  BiPoly p;
  p.add_term({1, 0}, Rational(1));
  p.add_term({0, 1}, Rational(1));
  CHECK(bipoly_to_json(p) ==
        R"({"terms":[{"u":1,"v":0,"c":"1"},{"u":0,"v":1,"c":"1"}]})");
  CHECK(bipoly_to_json(BiPoly()) == R"({"terms":[]})");

  BiPoly q;
  q.add_term({0, 2}, Rational(-1, 2));
  CHECK(bipoly_to_json(q) == R"({"terms":[{"u":0,"v":2,"c":"-1/2"}]})");
}

TEST_CASE("bipoly json round trip") {
  const BiPoly p5 = generating_poly_recurrence(5).poly;
  CHECK(bipoly_from_json(bipoly_to_json(p5)) == p5);
  CHECK(bipoly_from_json(R"({"terms":[]})") == BiPoly());
  // duplicate exponent pairs merge
  const BiPoly merged =
      bipoly_from_json(R"({"terms":[{"u":1,"v":0,"c":"1/3"},{"u":1,"v":0,"c":"2/3"}]})");
  CHECK(merged == BiPoly::u());
}

TEST_CASE("bipoly json rejects malformed input") {
  CHECK_THROWS_AS(bipoly_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":42})"), std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":[{"u":1,"v":0}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":[{"u":-1,"v":0,"c":"1"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":[{"u":0.5,"v":0,"c":"1"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":[{"u":1,"v":0,"c":"1/0"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bipoly_from_json(R"({"terms":[{"u":1,"v":0,"c":2}]})"),
                  std::invalid_argument);
}

TEST_CASE("series json round trip and exact form") {
  const Series s({Rational(1), Rational(-1, 2), Rational(3, 7)});
  CHECK(series_to_json(s) == R"({"order":2,"coeffs":["1","-1/2","3/7"]})");
  CHECK(series_from_json(series_to_json(s)) == s);

  const Series f = f_series(Rational(2, 3), Rational(-1, 5), Rational(1, 2), 12);
  CHECK(series_from_json(series_to_json(f)) == f);
}

TEST_CASE("series json rejects malformed input") {
  CHECK_THROWS_AS(series_from_json("["), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"order":2})"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"order":2,"coeffs":["1","2"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"order":-1,"coeffs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"order":0,"coeffs":[1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"order":0,"coeffs":["junk"]})"),
                  std::invalid_argument);
}

TEST_CASE("composition json") {
  const Composition c({1, 2, 1});
  CHECK(composition_to_json(c) == "[1,2,1]");
  CHECK(composition_from_json("[1,2,1]").parts() == c.parts());
  CHECK(composition_from_json("[7]").parts() == Composition({7}).parts());
  CHECK_THROWS_AS(composition_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_json("[0,2]"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_json("[1,-2]"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_json(R"(["1"])"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_json("{}"), std::invalid_argument);
}

TEST_CASE("generating polynomial json") {
  const GeneratingPolynomial g = generating_poly_factored(6);
  const std::string text = generating_poly_to_json(g);
  const GeneratingPolynomial back = generating_poly_from_json(text);
  CHECK(back.n == 6);
  CHECK(back.poly == g.poly);

  const std::string p1 = generating_poly_to_json(generating_poly_recurrence(1));
  CHECK(p1 ==
        R"({"n":1,"poly":{"terms":[{"u":1,"v":0,"c":"1"},{"u":0,"v":1,"c":"1"}]}})");

  CHECK_THROWS_AS(generating_poly_from_json(R"({"poly":{"terms":[]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(generating_poly_from_json(R"({"n":0,"poly":{"terms":[]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(generating_poly_from_json(R"({"n":2,"poly":[]})"),
                  std::invalid_argument);
}

TEST_CASE("identity report json exact form") {
  const IdentityReport rep = identity_eq1(3, 2);
  CHECK(identity_report_to_json(rep) ==
        R"({"identity":"eq1","n":3,"l":2,"lhs":"2/9","rhs":"2/9","pass":true})");
}
