#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hyperwalk/io.hpp"
#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"
#include "test_util.hpp"

using namespace hyperwalk;
using testutil::kPi;

TEST_SUITE_BEGIN("io");

TEST_CASE("canonical float formatting") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1.0) == "1.0");
    CHECK(format_double(0.0) == "0.0");
    CHECK(format_double(-3.0) == "-3.0");
    CHECK(format_double(1e-16) == "1e-16");
    CHECK(format_double(0.1797980009123) == "0.1797980009");
    CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("rounding to the output precision is idempotent") {
    const double value = 0.17979800091234;
    const double rounded = round_to_output_precision(value);
    CHECK(format_double(rounded) == format_double(value));
    CHECK(round_to_output_precision(rounded) == rounded);
}

TEST_CASE("distribution CSV is sorted and exact for the four-corner state") {
    WalkVariant variant{WalkKind::ModifiedPauli, qplate_pair()};
    WalkState one = evolve(make_initial_state({kPi / 4, 0.0}), variant, 1);

    std::ostringstream out;
    write_distribution_csv(one, out);
    CHECK(out.str() ==
          "x,m,probability\n"
          "-1,-1,0.25\n"
          "-1,1,0.25\n"
          "1,-1,0.25\n"
          "1,1,0.25\n");
}

TEST_CASE("state JSON round-trips structure and values") {
    WalkVariant variant{WalkKind::ModifiedPauli, qplate_pair()};
    WalkState one = evolve(make_initial_state({kPi / 4, 0.0}), variant, 1);

    std::ostringstream out;
    write_state_json(one, out);
    nlohmann::json parsed = nlohmann::json::parse(out.str());

    CHECK(parsed.at("steps") == 1);
    const auto& amplitudes = parsed.at("amplitudes");
    REQUIRE(amplitudes.size() == 4);

    const double r = 1.0 / (2.0 * std::sqrt(2.0));
    const auto& first = amplitudes.at(0);
    CHECK(first.at("coin") == "H");
    CHECK(first.at("x") == -1);
    CHECK(first.at("m") == -1);
    CHECK(first.at("re").get<double>() == doctest::Approx(r).epsilon(1e-9));
    CHECK(first.at("im").get<double>() == doctest::Approx(r).epsilon(1e-9));
}

TEST_CASE("curve and sweep CSV headers and rows") {
    std::ostringstream curve;
    write_curve_csv({{1, 0.0}, {2, 0.125}}, curve);
    CHECK(curve.str() == "n,negativity\n1,0.0\n2,0.125\n");

    std::ostringstream sweep;
    write_sweep_csv({{0.0, 0.5}}, sweep);
    CHECK(sweep.str() == "angle_rad,negativity\n0.0,0.5\n");
}

TEST_CASE("variant specs parse kinds, presets, angles and vectors") {
    WalkVariant preset = parse_variant_spec("modified-pauli", "q");
    CHECK(preset.kind == WalkKind::ModifiedPauli);
    CHECK(std::abs(preset.pair().u1.v - Complex(0.0, -1.0 / std::sqrt(2.0))) <
          1e-15);

    WalkVariant angles = parse_variant_spec(
        "pauli", R"({"xi": 0.0, "zeta": -1.5707963267948966, "theta": 0.7853981633974483})");
    CHECK(angles.kind == WalkKind::Pauli);
    CHECK(std::abs(angles.coin().m00.real() - 1.0 / std::sqrt(2.0)) < 1e-12);

    WalkVariant vectors = parse_variant_spec(
        "alternate",
        R"({"u1": [0.7071067811865476, 0.0, 0.7071067811865476, 0.0],
            "u2": [0.7071067811865476, 0.0, -0.7071067811865476, 0.0]})");
    CHECK(vectors.kind == WalkKind::Alternate);
    CHECK(std::abs(vectors.pair().u2.v.real() + 1.0 / std::sqrt(2.0)) < 1e-12);

    CHECK(parse_variant_spec("modified-alternate", "q").kind ==
          WalkKind::ModifiedAlternate);
}

TEST_CASE("variant specs reject malformed input") {
    CHECK_THROWS_AS(parse_variant_spec("hadamard", "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant_spec("pauli", "not json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_variant_spec("pauli", R"({"xi": 0.0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_variant_spec("pauli", R"({"u1": [1, 0, 0, 0]})"),
                    std::invalid_argument);
    // Non-orthonormal pair.
    CHECK_THROWS_AS(parse_variant_spec("pauli",
                                       R"({"u1": [1.0, 0.0, 0.0, 0.0],
                                           "u2": [1.0, 0.0, 0.0, 0.0]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_variant_spec("pauli", "{}"), std::invalid_argument);
}

TEST_CASE("degree-of-freedom pairs parse and validate") {
    auto [first, second] = parse_dof_pair("pol-oam");
    CHECK(first == Dof::Polarization);
    CHECK(second == Dof::Oam);

    auto [path, oam] = parse_dof_pair("path-oam");
    CHECK(path == Dof::Path);
    CHECK(oam == Dof::Oam);

    CHECK_THROWS_AS(parse_dof_pair("pol-pol"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dof_pair("spin-oam"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dof_pair("pol"), std::invalid_argument);
}

TEST_SUITE_END();
