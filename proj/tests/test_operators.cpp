#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"
#include "test_util.hpp"

using namespace hyperwalk;
using testutil::kPi;

namespace {

double matrix_diff(const CoinMatrix& a, const CoinMatrix& b) {
    return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                     std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
}

double jones_diff(const JonesVector& a, const JonesVector& b) {
    return std::max(std::abs(a.h - b.h), std::abs(a.v - b.v));
}

WalkState conjugated_shift(const WalkState& state, const CoinMatrix& coin,
                           WalkState (*inner)(const WalkState&)) {
    return apply_coin(inner(apply_coin(state, coin.adjoint())), coin);
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("rotation matrix hits the pinned reference angles") {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);

    CoinMatrix circular = coin_matrix({0.0, -kPi / 2, kPi / 4});
    CHECK(matrix_diff(circular, {s, -i * s, -i * s, s}) < 1e-15);

    CoinMatrix quarter = coin_matrix({kPi / 2, kPi / 2, kPi / 4});
    CHECK(matrix_diff(quarter, {i * s, i * s, i * s, -i * s}) < 1e-15);
}

TEST_CASE("rotation matrix is unitary with determinant one") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        CoinMatrix m = coin_matrix(testutil::random_params(rng));
        CHECK(is_unitary(m));
        Complex det = m.m00 * m.m11 - m.m01 * m.m10;
        CHECK(std::abs(det - Complex(1.0, 0.0)) < 1e-13);
    }
    CHECK_FALSE(is_unitary({1.0, 0.0, 0.0, 2.0}));
}

TEST_CASE("mode pair from angles is the matrix columns") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Su2Params params = testutil::random_params(rng);
        CoinMatrix m = coin_matrix(params);
        OrthoPair pair = pair_from_params(params);
        CHECK(jones_diff(pair.u1, m.column(0)) == 0.0);
        CHECK(jones_diff(pair.u2, m.column(1)) == 0.0);
        CHECK(is_orthonormal(pair));
    }
}

TEST_CASE("circular preset and its angle form differ only in a branch phase") {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);

    OrthoPair preset = qplate_pair();
    CHECK(jones_diff(preset.u1, {s, -i * s}) < 1e-15);
    CHECK(jones_diff(preset.u2, {s, i * s}) < 1e-15);
    CHECK(is_orthonormal(preset));

    OrthoPair from_angles = pair_from_params({0.0, -kPi / 2, kPi / 4});
    CHECK(jones_diff(from_angles.u1, preset.u1) < 1e-15);
    JonesVector rephased{-i * preset.u2.h, -i * preset.u2.v};
    CHECK(jones_diff(from_angles.u2, rephased) < 1e-15);
}

TEST_CASE("orthonormality check rejects a degenerate pair") {
    OrthoPair bad{{1.0, 0.0}, {1.0, 0.0}};
    CHECK_FALSE(is_orthonormal(bad));
}

TEST_CASE("conversion plate matrices at pinned angles") {
    OrthoPair hv{{1.0, 0.0}, {0.0, 1.0}};
    const Complex i(0.0, 1.0);

    CHECK(matrix_diff(jplate_matrix(0.0, hv), {0.0, 1.0, 1.0, 0.0}) < 1e-15);
    CHECK(matrix_diff(jplate_tilde_matrix(kPi / 2, hv), {-i, 0.0, 0.0, i}) <
          1e-15);
    CHECK(matrix_diff(jplate_matrix(0.0, qplate_pair()),
                      {1.0, 0.0, 0.0, -1.0}) < 1e-15);

    std::mt19937 rng(43);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 10; ++trial) {
        OrthoPair pair = pair_from_params(testutil::random_params(rng));
        CHECK(is_unitary(jplate_matrix(angle(rng), pair)));
        CHECK(is_unitary(jplate_tilde_matrix(angle(rng), pair)));
    }
}

TEST_CASE("polarization-only operator leaves the lattice untouched") {
    WalkState state;
    state.set_amplitude(Coin::H, 2, -1, Complex(1.0, 0.0));
    WalkState flipped = apply_coin(state, {0.0, 1.0, 1.0, 0.0});
    CHECK(std::abs(flipped.amplitude(Coin::V, 2, -1) - 1.0) < 1e-15);
    CHECK(std::abs(flipped.amplitude(Coin::H, 2, -1)) == 0.0);
}

TEST_CASE("path shift routes H down and V up") {
    WalkState state;
    state.set_amplitude(Coin::H, 0, 3, Complex(0.6, 0.0));
    state.set_amplitude(Coin::V, 0, 3, Complex(0.0, 0.8));
    WalkState shifted = shift_x(state);
    CHECK(std::abs(shifted.amplitude(Coin::H, -1, 3) - 0.6) < 1e-15);
    CHECK(std::abs(shifted.amplitude(Coin::V, 1, 3) - Complex(0.0, 0.8)) <
          1e-15);
    CHECK(shifted.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("plain OAM shift routes H down and V up in m") {
    WalkState state;
    state.set_amplitude(Coin::H, 4, 0, Complex(1.0, 0.0));
    state.set_amplitude(Coin::V, -4, 0, Complex(1.0, 0.0));
    WalkState shifted = shift_y(state);
    CHECK(std::abs(shifted.amplitude(Coin::H, 4, -1) - 1.0) < 1e-15);
    CHECK(std::abs(shifted.amplitude(Coin::V, -4, 1) - 1.0) < 1e-15);
}

TEST_CASE("swapping OAM shift equals the plain one after a polarization flip") {
    std::mt19937 rng(44);
    WalkVariant scratch{WalkKind::ModifiedPauli,
                        pair_from_params(testutil::random_params(rng))};
    WalkState state = evolve(make_initial_state({0.9, -0.4}), scratch, 3);

    WalkState modified = shift_y_modified(state);
    WalkState flipped = apply_coin(shift_y(state), {0.0, 1.0, 1.0, 0.0});
    CHECK(testutil::state_diff(modified, flipped) < 1e-15);
}

TEST_CASE("pair-mode shifts are the conjugated plain shifts") {
    std::mt19937 rng(45);
    for (int trial = 0; trial < 8; ++trial) {
        Su2Params params = testutil::random_params(rng);
        OrthoPair pair = pair_from_params(params);
        CoinMatrix coin = coin_matrix(params);
        WalkVariant scratch{WalkKind::ModifiedPauli, pair};
        WalkState state =
            evolve(make_initial_state(testutil::random_init(rng)), scratch, 3);

        CHECK(testutil::state_diff(shift_sigma(state, pair),
                                   conjugated_shift(state, coin, shift_y)) <
              1e-13);
        CHECK(testutil::state_diff(
                  shift_sigma_modified(state, pair),
                  conjugated_shift(state, coin, shift_y_modified)) < 1e-13);
    }
}

TEST_CASE("one swapping-walk step from the balanced input reaches four corners") {
    WalkVariant variant{WalkKind::ModifiedPauli, qplate_pair()};
    WalkState one = step(make_initial_state({kPi / 4, 0.0}), variant);
    CHECK(one.step_count() == 1);

    // By hand: the balanced input decomposes into the circular pair with
    // coefficients <u1|psi> = (1+i)/2 and <u2|psi> = (1-i)/2; the plate sends
    // those to u2 at m=-1 and u1 at m=+1, and the splitter routes H down.
    const double r = 1.0 / (2.0 * std::sqrt(2.0));
    const Complex plus(r, r), minus(r, -r);
    CHECK(std::abs(one.amplitude(Coin::H, -1, -1) - plus) < 1e-15);
    CHECK(std::abs(one.amplitude(Coin::H, -1, 1) - minus) < 1e-15);
    CHECK(std::abs(one.amplitude(Coin::V, 1, -1) + minus) < 1e-15);
    CHECK(std::abs(one.amplitude(Coin::V, 1, 1) + plus) < 1e-15);
    CHECK(one.size() == 4);
}

TEST_CASE("the H/V pair walk is a two-site orbit") {
    OrthoPair hv{{1.0, 0.0}, {0.0, 1.0}};
    WalkVariant variant{WalkKind::ModifiedPauli, hv};
    WalkState state = make_initial_state({0.0, 0.0});

    state = step(state, variant);
    CHECK(std::abs(state.amplitude(Coin::V, 1, -1) - 1.0) < 1e-14);
    CHECK(state.size() == 1);

    state = step(state, variant);
    CHECK(std::abs(state.amplitude(Coin::H, 0, 0) - 1.0) < 1e-14);
    CHECK(state.size() == 1);
}

TEST_CASE("interleaved coin walk equals the pair-mode walk") {
    std::mt19937 rng(46);
    for (int trial = 0; trial < 6; ++trial) {
        Su2Params params = testutil::random_params(rng);
        InitialStateParams init = testutil::random_init(rng);

        WalkState plain_pair =
            evolve(make_initial_state(init), {WalkKind::Pauli, params}, 5);
        WalkState plain_coin =
            evolve(make_initial_state(init), {WalkKind::Alternate, params}, 5);
        CHECK(testutil::state_diff(plain_pair, plain_coin) < 1e-13);

        WalkState swap_pair = evolve(make_initial_state(init),
                                     {WalkKind::ModifiedPauli, params}, 5);
        WalkState swap_coin = evolve(make_initial_state(init),
                                     {WalkKind::ModifiedAlternate, params}, 5);
        CHECK(testutil::state_diff(swap_pair, swap_coin) < 1e-13);
    }
}

TEST_CASE("swapping and plain circular walks share every site probability") {
    WalkVariant modified{WalkKind::ModifiedPauli, qplate_pair()};
    WalkVariant plain{WalkKind::Pauli, qplate_pair()};
    WalkState a = make_initial_state({kPi / 4, 0.0});
    WalkState b = a;
    for (int n = 1; n <= 12; ++n) {
        a = step(a, modified);
        b = step(b, plain);
        auto da = a.probability_distribution();
        auto db = b.probability_distribution();
        REQUIRE(da.size() == db.size());
        for (const auto& [site, p] : da) {
            CHECK(std::abs(p - db.at(site)) < 1e-12);
        }
    }
}

TEST_CASE("circular preset and its angle form differ by a pure OAM phase") {
    WalkVariant preset{WalkKind::ModifiedPauli, qplate_pair()};
    WalkVariant angles{WalkKind::ModifiedPauli,
                       pair_from_params({0.0, -kPi / 2, kPi / 4})};
    WalkState sa = evolve(make_initial_state({kPi / 4, 0.0}), preset, 7);
    WalkState sb = evolve(make_initial_state({kPi / 4, 0.0}), angles, 7);

    // Find the per-unit-m phase from one reference cell, then require it to
    // explain every amplitude: sb(x, m) = phase^m * sa(x, m).
    Complex phase(0.0, 0.0);
    for (const auto& [key, amp] : sa.amplitudes()) {
        if (key.m == 1 && std::abs(amp) > 0.1) {
            phase = sb.amplitude(key.coin, key.x, key.m) / amp;
            break;
        }
    }
    REQUIRE(std::abs(std::abs(phase) - 1.0) < 1e-12);
    for (const auto& [key, amp] : sa.amplitudes()) {
        Complex expected = std::pow(phase, key.m) * amp;
        CHECK(std::abs(sb.amplitude(key.coin, key.x, key.m) - expected) <
              1e-12);
    }
}

TEST_CASE("every walk family conserves norm and the support cone") {
    std::mt19937 rng(47);
    for (WalkKind kind : {WalkKind::ModifiedPauli, WalkKind::Pauli,
                          WalkKind::Alternate, WalkKind::ModifiedAlternate}) {
        WalkVariant variant{kind, testutil::random_params(rng)};
        WalkState state = make_initial_state(testutil::random_init(rng));
        for (int n = 1; n <= 25; ++n) {
            state = step(state, variant);
            REQUIRE(std::abs(state.norm_squared() - 1.0) < 1e-12);
        }
        CHECK(state.step_count() == 25);
        CHECK(testutil::support_ok(state));
    }
}

TEST_CASE("evolution rejects a negative step count") {
    WalkVariant variant{WalkKind::ModifiedPauli, qplate_pair()};
    CHECK_THROWS_AS(evolve(make_initial_state({0.0, 0.0}), variant, -1),
                    std::invalid_argument);
}

TEST_CASE("variant accessors expose coin and pair consistently") {
    Su2Params params{0.3, -0.8, 0.6};
    WalkVariant by_params{WalkKind::Pauli, params};
    WalkVariant by_pair{WalkKind::Pauli, pair_from_params(params)};

    CHECK(matrix_diff(by_params.coin(), by_pair.coin()) < 1e-15);
    CHECK(jones_diff(by_params.pair().u1, by_pair.pair().u1) < 1e-15);
    CHECK(jones_diff(by_params.pair().u2, by_pair.pair().u2) < 1e-15);
}

TEST_SUITE_END();
