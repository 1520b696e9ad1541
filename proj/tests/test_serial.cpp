#include <doctest.h>

#include <cctype>
#include <g2x/rng.hpp>
#include <g2x/serial.hpp>
#include <g2x/threeform.hpp>

using namespace g2x;

TEST_CASE("scalar serialization roundtrip") {
    Rng rng(0x5E000001);
    for (int k = 0; k < 25; ++k) {
        Scalar s = rng.scalar(9, 7);
        CHECK(scalar_from_json(scalar_to_json(s)) == s);
    }
    Json j = scalar_to_json(Scalar(Rational(3, 4)));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0].get<std::string>() == "3/4");
    CHECK(j[1].get<std::string>() == "0");
}

TEST_CASE("scalar parsing accepts plain fractions and rejects junk") {
    CHECK(scalar_from_json(Json::parse(R"(["1/2","-3","0","5/7"])")) ==
          Scalar(Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)));
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","2","3"])")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","2","3","x"])")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","2","3","1/0"])")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"([1,2,3,4])")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("polynomial serialization roundtrip") {
    UniPoly p({Scalar(1), Scalar(0), Scalar(Rational(-2, 3))});
    CHECK(unipoly_from_json(unipoly_to_json(p)) == p);
    CHECK(unipoly_from_json(Json::array()) == UniPoly());
    CHECK_THROWS_AS(unipoly_from_json(Json::parse(R"("z^2")")), ParseError);
}

TEST_CASE("alternating form serialization uses one-based indices") {
    Json j = altform_to_json(rho0());
    CHECK(j["dim"] == 7);
    CHECK(j["degree"] == 3);
    REQUIRE(j["terms"].is_array());
    REQUIRE(j["terms"].size() == 5);
    // first stored term is e123 with the lowest mask
    CHECK(j["terms"][0]["idx"] == Json::parse("[1,2,3]"));
    CHECK(altform_from_json(j) == rho0());
}

TEST_CASE("alternating form parsing validates indices") {
    auto base = R"({"dim":7,"degree":3,"terms":[{"idx":[1,2,3],"c":["1","0","0","0"]}]})";
    CHECK(altform_from_json(Json::parse(base)) == AltForm::basis(7, {0, 1, 2}));

    CHECK_THROWS_AS(
        altform_from_json(Json::parse(
            R"({"dim":7,"degree":3,"terms":[{"idx":[3,2,1],"c":["1","0","0","0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(
        altform_from_json(Json::parse(
            R"({"dim":7,"degree":3,"terms":[{"idx":[0,1,2],"c":["1","0","0","0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(
        altform_from_json(Json::parse(
            R"({"dim":7,"degree":3,"terms":[{"idx":[1,2,8],"c":["1","0","0","0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(
        altform_from_json(Json::parse(
            R"({"dim":7,"degree":2,"terms":[{"idx":[1,2,3],"c":["1","0","0","0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(altform_from_json(Json::parse(R"({"dim":9,"degree":3,"terms":[]})")),
                    ParseError);
}

TEST_CASE("matrix serialization roundtrip and shape checks") {
    Mat m(2, 3);
    m.at(0, 0) = Scalar(1);
    m.at(1, 2) = Scalar(Rational(-5, 2));
    CHECK(mat_from_json(mat_to_json(m)) == m);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"([[["1","0","0","0"]],[]])")), ParseError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"([])")), ParseError);
}

TEST_CASE("curve and tangent serialization") {
    CurveFamily c;
    c.g_base = 3;
    c.f = UniPoly({Scalar(3), Scalar(1)});
    c.q = UniPoly({Scalar(0), Scalar(1)});
    Json j = curve_to_json(c);
    CurveFamily back = curve_from_json(j);
    CHECK(back.g_base == 3);
    CHECK(back.f == c.f);
    CHECK(back.q == c.q);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"g_base":1,"f":[],"q":[]})")), ParseError);

    TangentVec t{UniPoly({Scalar(1)}), UniPoly({Scalar(0), Scalar(2)})};
    TangentVec tb = tangent_from_json(tangent_to_json(t));
    CHECK(tb.f_dot == t.f_dot);
    CHECK(tb.q_dot == t.q_dot);
}

TEST_CASE("digest is stable and content sensitive") {
    Json a = Json::parse(R"({"x":1,"y":[2,3]})");
    Json b = Json::parse(R"({"x":1,"y":[2,4]})");
    std::string da = digest(a);
    CHECK(da.size() == 16);
    CHECK(da == digest(a));
    CHECK(da != digest(b));
    for (char ch : da) CHECK(std::isxdigit(static_cast<unsigned char>(ch)));
}
