#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asf/asf.hpp"

using namespace asf;
using C = std::complex<double>;
using Catch::Matchers::ContainsSubstring;
using nlohmann::json;

namespace {
const Tolerances kTol;
}

// ============================================================================
// number rendering
// ============================================================================

TEST_CASE("real rendering is compact and round-trips every double") {
  REQUIRE(io::format_real(1.0) == "1");
  REQUIRE(io::format_real(2.0) == "2");
  REQUIRE(io::format_real(-0.5) == "-0.5");
  REQUIRE(io::format_real(0.1) == "0.10000000000000001");

  SeededRng rng(31337);
  for (int i = 0; i < 50; ++i) {
    const double x = (rng.uniform() - 0.5) * std::pow(10.0, i % 17);
    const std::string s = io::format_real(x);
    REQUIRE(std::strtod(s.c_str(), nullptr) == x);
  }
}

// ============================================================================
// builder
// ============================================================================

TEST_CASE("builder emits compact json in call order") {
  io::JsonBuilder b;
  b.begin_object();
  b.key("a").value_uint(1);
  b.key("b").begin_array();
  b.value_bool(true);
  b.value_null();
  b.value_string("x");
  b.end_array();
  b.key("c").begin_object().end_object();
  b.end_object();
  REQUIRE(b.str() == R"({"a":1,"b":[true,null,"x"],"c":{}})");
}

TEST_CASE("builder splices prerendered values") {
  io::JsonBuilder inner;
  inner.begin_object();
  inner.key("k").value_real(1.5);
  inner.end_object();

  io::JsonBuilder outer;
  outer.begin_object();
  outer.key("child").value_raw(inner.str());
  outer.key("after").value_bool(false);
  outer.end_object();
  REQUIRE(outer.str() == R"({"child":{"k":1.5},"after":false})");
}

TEST_CASE("builder escapes strings") {
  io::JsonBuilder b;
  b.begin_array();
  b.value_string("q\"\\\n\tz");
  b.end_array();
  REQUIRE(b.str() == "[\"q\\\"\\\\\\n\\tz\"]");
}

// ============================================================================
// system schema: frozen bytes
// ============================================================================

TEST_CASE("canonical system serializes to frozen bytes") {
  const auto sys = canonical_system<double>(2, Exponent(2));
  REQUIRE(io::system_to_json(sys) ==
          R"({"dim":2,"p":2,"scalar":"real",)"
          R"("pairs":[{"f":[1,0],"tau":[1,0]},{"f":[0,1],"tau":[0,1]}]})");
}

TEST_CASE("the sup exponent serializes as the string inf") {
  const auto sys = canonical_system<double>(1, Exponent::infinity());
  REQUIRE(io::system_to_json(sys) ==
          R"({"dim":1,"p":"inf","scalar":"real","pairs":[{"f":[1],"tau":[1]}]})");
}

TEST_CASE("complex entries serialize as re/im pairs") {
  std::vector<SystemPair<C>> pairs{{Functional<C>({C(1.0, 2.0)}),
                                    PVector<C>({C(-0.5, 0.0)}, Exponent(2))}};
  const FunctionalSystem<C> sys(1, Exponent(2), std::move(pairs));
  REQUIRE(io::system_to_json(sys) ==
          R"({"dim":1,"p":2,"scalar":"complex",)"
          R"("pairs":[{"f":[[1,2]],"tau":[[-0.5,0]]}]})");
}

TEST_CASE("serialization is deterministic") {
  const auto sys = random_system<double>(3, 5, Exponent(2.5), 424242);
  REQUIRE(io::system_to_json(sys) == io::system_to_json(sys));
}

// ============================================================================
// round trips
// ============================================================================

TEST_CASE("real systems round-trip bitwise through json") {
  const auto sys = random_system<double>(4, 7, Exponent(2.5), 1111);
  const std::string text = io::system_to_json(sys);
  const auto back = io::system_from_json<double>(json::parse(text));

  REQUIRE(back.dim() == sys.dim());
  REQUIRE(back.exponent() == sys.exponent());
  REQUIRE(back.size() == sys.size());
  for (std::size_t n = 0; n < sys.size(); ++n) {
    REQUIRE(back.pair(n).f.coeffs() == sys.pair(n).f.coeffs());
    REQUIRE(back.pair(n).tau.coords() == sys.pair(n).tau.coords());
  }
  REQUIRE(io::system_to_json(back) == text);
}

TEST_CASE("complex systems with the sup exponent round-trip bitwise") {
  const auto sys = random_system<C>(3, 6, Exponent::infinity(), 2222);
  const std::string text = io::system_to_json(sys);
  const auto back = io::system_from_json<C>(json::parse(text));
  REQUIRE(back.exponent().is_infinite());
  for (std::size_t n = 0; n < sys.size(); ++n) {
    REQUIRE(back.pair(n).f.coeffs() == sys.pair(n).f.coeffs());
    REQUIRE(back.pair(n).tau.coords() == sys.pair(n).tau.coords());
  }
  REQUIRE(io::system_to_json(back) == text);
}

TEST_CASE("scalar kind dispatch reads the tag") {
  REQUIRE(io::scalar_kind_of(json::parse(R"({"scalar":"real"})")) ==
          io::ScalarKind::real_field);
  REQUIRE(io::scalar_kind_of(json::parse(R"({"scalar":"complex"})")) ==
          io::ScalarKind::complex_field);
  REQUIRE_THROWS_AS(io::scalar_kind_of(json::parse(R"({"scalar":"weird"})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::scalar_kind_of(json::parse(R"({"dim":3})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::scalar_kind_of(json::parse("[1,2]")), InvalidArgument);
}

TEST_CASE("exponent parsing accepts numbers and inf only") {
  REQUIRE(io::exponent_from_json(json::parse("2.5")).value() == 2.5);
  REQUIRE(io::exponent_from_json(json::parse("1")).value() == 1.0);
  REQUIRE(io::exponent_from_json(json::parse(R"("inf")")).is_infinite());
  REQUIRE_THROWS_AS(io::exponent_from_json(json::parse(R"("sup")")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::exponent_from_json(json::parse("true")), InvalidArgument);
  REQUIRE_THROWS_AS(io::exponent_from_json(json::parse("0.5")), InvalidArgument);
}

// ============================================================================
// parse rejection with located diagnostics
// ============================================================================

TEST_CASE("parsing rejects malformed systems with located messages") {
  const std::string good =
      R"({"dim":2,"p":2,"scalar":"real","pairs":[{"f":[1,0],"tau":[0,1]}]})";
  REQUIRE_NOTHROW(io::system_from_json<double>(json::parse(good)));

  // scalar tag mismatch against the requested field
  REQUIRE_THROWS_AS(io::system_from_json<C>(json::parse(good)), InvalidArgument);

  REQUIRE_THROWS_WITH(
      io::system_from_json<double>(json::parse(
          R"({"dim":2,"p":2,"scalar":"real","pairs":[{"f":[1,0],"tau":[0,1,2]}]})")),
      ContainsSubstring("pairs[0].tau") && ContainsSubstring("length 2"));

  REQUIRE_THROWS_WITH(
      io::system_from_json<double>(json::parse(
          R"({"dim":2,"p":2,"scalar":"real",)"
          R"("pairs":[{"f":[1,0],"tau":[0,1]},{"f":[1,"x"],"tau":[0,1]}]})")),
      ContainsSubstring("pairs[1].f[1]"));

  REQUIRE_THROWS_WITH(
      io::system_from_json<C>(json::parse(
          R"({"dim":1,"p":2,"scalar":"complex","pairs":[{"f":[[1]],"tau":[[0,0]]}]})")),
      ContainsSubstring("pairs[0].f[0]") && ContainsSubstring("[re, im]"));

  REQUIRE_THROWS_AS(io::system_from_json<double>(json::parse(
                        R"({"p":2,"scalar":"real","pairs":[{"f":[1],"tau":[1]}]})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::system_from_json<double>(json::parse(
                        R"({"dim":-2,"p":2,"scalar":"real","pairs":[]})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::system_from_json<double>(json::parse(
                        R"({"dim":2,"p":2,"scalar":"real","pairs":[]})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::system_from_json<double>(json::parse(
                        R"({"dim":2,"p":2,"scalar":"real","pairs":[{"f":[1,0]}]})")),
                    InvalidArgument);
  REQUIRE_THROWS_AS(io::system_from_json<double>(json::parse(
                        R"({"dim":0,"p":2,"scalar":"real","pairs":[{"f":[],"tau":[]}]})")),
                    InvalidArgument);
}

TEST_CASE("unknown keys are ignored on parse") {
  const auto sys = io::system_from_json<double>(json::parse(
      R"({"dim":1,"p":1,"scalar":"real","note":"hi",)"
      R"("pairs":[{"f":[2],"tau":[3],"label":"first"}]})"));
  REQUIRE(sys.pair(0).f[0] == 2.0);
  REQUIRE(sys.pair(0).tau[0] == 3.0);
}

// ============================================================================
// expansion schema
// ============================================================================

TEST_CASE("expansion reports serialize to frozen bytes") {
  const auto sys = example_one_system<double>(2, Exponent(2));
  const auto recon = canonical_reconstruction<double>(2, Exponent(2));
  const auto result = expand_variant_a(sys, recon, kTol);
  REQUIRE(io::expansion_to_json(result) ==
          R"({"variant":"A","lambda":1,"count_added":1,)"
          R"("added_pairs":[{"f":[1,0],"tau":[1,0]}],"residual":0})");
}

TEST_CASE("complex lambda serializes as a re/im pair") {
  const auto sys = canonical_system<C>(2, Exponent(2));
  ExpansionResult<C> result{{}, sys, ExpansionVariant::tight, C(0.5, 0.5), 0, 0.0};
  REQUIRE(io::expansion_to_json(result) ==
          R"({"variant":"TIGHT","lambda":[0.5,0.5],"count_added":0,)"
          R"("added_pairs":[],"residual":0})");
}
