#include <doctest.h>

#include "bu/bu_engine.hpp"
#include "bu/errors.hpp"
#include "bu/json_io.hpp"

using bu::Json;

namespace {

std::string error_of(const std::string& text) {
  try {
    bu::parse_instance_text(text);
  } catch (const bu::InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto theta =
      bu::parse_instance_text(R"({"schema":1,"case":"nonorientable-even","m":0,"n":4,"theta":{"u":2,"v":1}})");
  CHECK(theta.n == 4);
  CHECK(theta.source.surface_case() == bu::SurfaceCase::NonOrientableEvenIII);
  CHECK(theta.image(1).value() == 2);
  CHECK(theta.image(2).value() == 1);

  const auto negative = bu::parse_instance_text(R"({"case":"orientable","m":1,"n":5,"theta":{"a1":-1,"a2":7}})");
  CHECK(negative.image(1).value() == 4);
  CHECK(negative.image(2).value() == 2);
}

TEST_CASE("instance errors name the field") {
  CHECK(error_of("{").find("not valid JSON") != std::string::npos);
  CHECK(error_of("[]").find("object") != std::string::npos);
  CHECK(error_of(R"({"schema":2,"case":"orientable","m":0,"n":2,"theta":{}})").find("'schema'") != std::string::npos);
  CHECK(error_of(R"({"m":0,"n":2,"theta":{}})").find("'case'") != std::string::npos);
  CHECK(error_of(R"({"case":"sphere","m":0,"n":2,"theta":{}})").find("sphere") != std::string::npos);
  CHECK(error_of(R"({"case":"orientable","m":-1,"n":2,"theta":{}})").find("'m'") != std::string::npos);
  CHECK(error_of(R"({"case":"orientable","m":1,"n":0,"theta":{}})").find("'n'") != std::string::npos);
  CHECK(error_of(R"({"case":"orientable","m":1,"n":3,"theta":{"a1":1}})").find("theta.a2") != std::string::npos);
  CHECK(error_of(R"({"case":"orientable","m":1,"n":3,"theta":{"a1":1,"a2":"x"}})").find("theta.a2") !=
        std::string::npos);
  CHECK(error_of(R"({"case":"orientable","m":1,"n":3,"theta":{"a1":1,"a2":0,"c":1}})").find("theta.c") !=
        std::string::npos);
}

TEST_CASE("round trip through the decision JSON") {
  const auto theta = bu::make_hom(bu::SurfacePresentation(bu::SurfaceCase::NonOrientableEvenIII, 0), 4, {2, 1});
  const Json inst = bu::to_json(theta);
  const auto back = bu::parse_instance(inst);
  CHECK(back.n == theta.n);
  CHECK(back.images == theta.images);

  const Json d = bu::to_json(bu::decide(theta));
  CHECK(d["has_bu_property"] == false);
  CHECK(d["certificate"]["kind"] == "witness");
  for (const char* g : {"u", "v"}) {
    const auto word = bu::BraidWord::parse(d["certificate"]["images"][g]["word"].get<std::string>());
    CHECK(word.strands() == 4);
  }

  const auto yes = bu::make_hom(bu::SurfacePresentation(bu::SurfaceCase::NonOrientableOddII, 1), 6, {3, 1, 0});
  const Json o = bu::to_json(bu::decide(yes));
  CHECK(o["has_bu_property"] == true);
  CHECK(o["certificate"]["kind"] == "parity_obstruction");
  CHECK(o["certificate"]["full_twist_eps"] == 15);
}

TEST_CASE("report JSON records") {
  bu::Report r;
  r.add({"probe", {1, 2}, "a", "b", true, ""});
  r.add({"probe", {3}, "c", "d", false, "why"});
  const Json j = bu::to_json(r);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["relation"] == "probe");
  CHECK(j[0]["indices"] == Json::array({1, 2}));
  CHECK(j[1]["pass"] == false);
  CHECK(j[1]["detail"] == "why");
  CHECK_FALSE(j[0].contains("detail"));
}
