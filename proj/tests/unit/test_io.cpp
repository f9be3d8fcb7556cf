#include <doctest.h>

#include <cmath>
#include <random>

#include "niep/error.hpp"
#include "niep/io.hpp"
#include "niep/kernels.hpp"

using namespace niep;

namespace {

template <class T>
T round_trip(const T& value) {
  return parse_json(json(value).dump()).get<T>();
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("spectra") {
  const auto j = parse_json(R"([3, [0, -1.7320508075688772], [0, 1.7320508075688772]])");
  const auto v = values_from_json(j);
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Complex(0, -1.7320508075688772));
  const auto s = validate_spectrum(std::span<const Complex>(v));
  CHECK(round_trip(s) == s);
  CHECK(parse_json("[1, -1]").get<Spectrum>() == validate_spectrum({1, -1}));
  CHECK(parse_json(R"({"values": [1, -1], "tolerance": 1e-6})").get<Spectrum>().tolerance() == 1e-6);
  CHECK(code_of([] { values_from_json(parse_json(R"([1, "x"])")); }) == ErrorCode::Parse);
  CHECK(code_of([] { values_from_json(parse_json(R"([1, [1, 2, 3]])")); }) == ErrorCode::Parse);
  CHECK(code_of([] { reals_from_json(parse_json(R"({"a": 1})")); }) == ErrorCode::Parse);
}

TEST_CASE("parse errors carry a byte offset") {
  try {
    parse_json("[1, 2,, 3]");
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("at byte 7") != std::string::npos);
  }
  CHECK(code_of([] { parse_json(""); }) == ErrorCode::Parse);
}

TEST_CASE("matrices and graphs") {
  const auto a = SquareMatrix::from_rows({{0, 1}, {1, 0.25}});
  CHECK(matrix_from_json(matrix_to_json(a)) == a);
  CHECK(round_trip(a) == a);
  CHECK(code_of([] { matrix_from_json(parse_json("[[1, 2], [3]]")); }) == ErrorCode::Parse);

  const auto g = graph_from_json(parse_json(R"({"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]})"));
  CHECK(g == path_graph(4));
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_to_json(g)["edges"][0] == json::array({1, 2}));
  CHECK(code_of([] { graph_from_json(parse_json(R"({"n": 2, "edges": [[1, 3]]})")); }) ==
        ErrorCode::Parse);
}

TEST_CASE("reports round trip") {
  const auto rep = run_all_necessary(validate_spectrum({3, 3, -2, -2, -2}).values());
  CHECK(round_trip(rep) == rep);
  CHECK(json(rep)["aggregate"] == "NotRealizable");

  Decision d{Outcome::NotRealizable, "pi3", Witness{{1, 2}, 1.5, -2.0}, {"flag"}};
  CHECK(round_trip(d) == d);
  Decision bare{Outcome::Undetermined, "x", std::nullopt, {}};
  CHECK(round_trip(bare) == bare);
  CHECK(json(bare)["witness"].is_null());

  SuleimanovaPerfectResult r{d, Partition{{{6, {-1, -2}}, {4, {-1}}}}, 12};
  CHECK(round_trip(r) == r);
  CHECK(json(Block{6, {-1, -2}}).dump() == "[6.0,[-1.0,-2.0]]");

  const auto cert = verify_realization(SquareMatrix::from_rows({{0, 1}, {1, 0}}), validate_spectrum({1, -1}));
  CHECK(round_trip(cert) == cert);

  const auto bh = check_bh_hypotheses(std::vector<Complex>{3.1, 3, -2, -2, -2});
  CHECK(round_trip(bh) == bh);

  auto aug = min_zeros_for_necessary(validate_spectrum({3, 3, -2, -2, -2}), 8);
  CHECK(round_trip(aug) == aug);
  CHECK(json(aug)["scope"]["n_max"] == 8);
  aug.zeros_added.reset();
  CHECK(json(aug)["zeros_added"] == "NotFound");
  CHECK(round_trip(aug) == aug);

  const RasterCell cell{0.5, -0.25, true, Verdict::Satisfied};
  CHECK(round_trip(cell) == cell);
}

TEST_CASE("enumeration strings") {
  for (auto v : {Verdict::Satisfied, Verdict::Violated, Verdict::Inapplicable})
    CHECK(verdict_from_string(to_string(v)) == v);
  for (auto o : {Outcome::Realizable, Outcome::NotRealizable, Outcome::Inapplicable, Outcome::Undetermined})
    CHECK(outcome_from_string(to_string(o)) == o);
  for (auto a : {Aggregate::NotRealizable, Aggregate::Undecided}) CHECK(aggregate_from_string(to_string(a)) == a);
  CHECK_THROWS_AS(verdict_from_string("maybe"), Error);
}

TEST_CASE("raster csv") {
  const std::vector<RasterCell> cells{{0, 0, true, Verdict::Satisfied}, {1, 0.5, false, Verdict::Violated}};
  const auto csv = raster_to_csv(cells);
  CHECK(csv.rfind("re,im,in_pi_union,dd_verdict\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("Violated") != std::string::npos);
}

TEST_CASE("property: random reports survive serialization") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<Complex> v{u(rng)};
    for (int i = 0; i < t % 6; ++i) {
      if (i % 2 == 0) {
        const Complex z{u(rng), u(rng)};
        v.push_back(z);
        v.push_back(std::conj(z));
      } else {
        v.push_back(u(rng));
      }
    }
    const auto rep = run_all_necessary(v);
    CHECK(round_trip(rep) == rep);
    const auto s = validate_spectrum(std::span<const Complex>(v));
    CHECK(round_trip(s) == s);
  }
}
