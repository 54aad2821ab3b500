#include "hyperwalk/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperwalk {

namespace {

constexpr Complex kZero{0.0, 0.0};

Complex dot(const JonesVector& bra, const JonesVector& ket) {
    return std::conj(bra.h) * ket.h + std::conj(bra.v) * ket.v;
}

}  // namespace

CoinMatrix CoinMatrix::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

JonesVector CoinMatrix::apply(const JonesVector& in) const {
    return {m00 * in.h + m01 * in.v, m10 * in.h + m11 * in.v};
}

JonesVector CoinMatrix::column(int j) const {
    return j == 0 ? JonesVector{m00, m10} : JonesVector{m01, m11};
}

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

bool is_unitary(const CoinMatrix& m, double tol) {
    const CoinMatrix p = m * m.adjoint();
    return std::abs(p.m00 - Complex{1.0, 0.0}) <= tol &&
           std::abs(p.m01) <= tol && std::abs(p.m10) <= tol &&
           std::abs(p.m11 - Complex{1.0, 0.0}) <= tol;
}

bool is_orthonormal(const OrthoPair& pair, double tol) {
    return std::abs(dot(pair.u1, pair.u1) - Complex{1.0, 0.0}) <= tol &&
           std::abs(dot(pair.u2, pair.u2) - Complex{1.0, 0.0}) <= tol &&
           std::abs(dot(pair.u1, pair.u2)) <= tol;
}

OrthoPair WalkVariant::pair() const {
    if (const auto* p = std::get_if<OrthoPair>(&plate)) {
        return *p;
    }
    return pair_from_params(std::get<Su2Params>(plate));
}

CoinMatrix WalkVariant::coin() const {
    if (const auto* p = std::get_if<Su2Params>(&plate)) {
        return coin_matrix(*p);
    }
    const auto& pr = std::get<OrthoPair>(plate);
    return {pr.u1.h, pr.u2.h, pr.u1.v, pr.u2.v};
}

CoinMatrix coin_matrix(const Su2Params& params) {
    const double c = std::cos(params.theta);
    const double s = std::sin(params.theta);
    return {std::polar(c, params.xi), std::polar(s, params.zeta),
            -std::polar(s, -params.zeta), std::polar(c, -params.xi)};
}

OrthoPair pair_from_params(const Su2Params& params) {
    const CoinMatrix m = coin_matrix(params);
    return {m.column(0), m.column(1)};
}

OrthoPair qplate_pair() {
    const double r = 1.0 / std::sqrt(2.0);
    return {JonesVector{{r, 0.0}, {0.0, -r}},   // |R>
            JonesVector{{r, 0.0}, {0.0, r}}};   // |L>
}

CoinMatrix jplate_matrix(double phi, const OrthoPair& pair) {
    // e^{-i phi}|u2><u1| + e^{i phi}|u1><u2|
    const Complex down = std::polar(1.0, -phi);
    const Complex up = std::polar(1.0, phi);
    const JonesVector& u1 = pair.u1;
    const JonesVector& u2 = pair.u2;
    return {down * u2.h * std::conj(u1.h) + up * u1.h * std::conj(u2.h),
            down * u2.h * std::conj(u1.v) + up * u1.h * std::conj(u2.v),
            down * u2.v * std::conj(u1.h) + up * u1.v * std::conj(u2.h),
            down * u2.v * std::conj(u1.v) + up * u1.v * std::conj(u2.v)};
}

CoinMatrix jplate_tilde_matrix(double phi, const OrthoPair& pair) {
    // e^{-i phi}|u1><u1| + e^{i phi}|u2><u2|
    const Complex down = std::polar(1.0, -phi);
    const Complex up = std::polar(1.0, phi);
    const JonesVector& u1 = pair.u1;
    const JonesVector& u2 = pair.u2;
    return {down * u1.h * std::conj(u1.h) + up * u2.h * std::conj(u2.h),
            down * u1.h * std::conj(u1.v) + up * u2.h * std::conj(u2.v),
            down * u1.v * std::conj(u1.h) + up * u2.v * std::conj(u2.h),
            down * u1.v * std::conj(u1.v) + up * u2.v * std::conj(u2.v)};
}

WalkState apply_coin(const WalkState& state, const CoinMatrix& coin) {
    WalkState out;
    out.set_step_count(state.step_count());
    for (const auto& [key, amp] : state.amplitudes()) {
        const Complex to_h = key.coin == Coin::H ? coin.m00 : coin.m01;
        const Complex to_v = key.coin == Coin::H ? coin.m10 : coin.m11;
        if (to_h != kZero) {
            out.add_amplitude(Coin::H, key.x, key.m, to_h * amp);
        }
        if (to_v != kZero) {
            out.add_amplitude(Coin::V, key.x, key.m, to_v * amp);
        }
    }
    return out;
}

WalkState shift_x(const WalkState& state) {
    WalkState out;
    out.set_step_count(state.step_count());
    for (const auto& [key, amp] : state.amplitudes()) {
        const int dx = key.coin == Coin::H ? -1 : +1;
        out.add_amplitude(key.coin, key.x + dx, key.m, amp);
    }
    return out;
}

WalkState shift_y(const WalkState& state) {
    WalkState out;
    out.set_step_count(state.step_count());
    for (const auto& [key, amp] : state.amplitudes()) {
        const int dm = key.coin == Coin::H ? -1 : +1;
        out.add_amplitude(key.coin, key.x, key.m + dm, amp);
    }
    return out;
}

WalkState shift_y_modified(const WalkState& state) {
    WalkState out;
    out.set_step_count(state.step_count());
    for (const auto& [key, amp] : state.amplitudes()) {
        const int dm = key.coin == Coin::H ? -1 : +1;
        const Coin flipped = key.coin == Coin::H ? Coin::V : Coin::H;
        out.add_amplitude(flipped, key.x, key.m + dm, amp);
    }
    return out;
}

namespace {

// Common body of the two pair-mode OAM shifts. The u1 component of each
// cell moves m down and exits in mode `down_mode`; the u2 component moves m
// up and exits in mode `up_mode`.
WalkState shift_pair_modes(const WalkState& state, const OrthoPair& pair,
                           const JonesVector& down_mode,
                           const JonesVector& up_mode) {
    WalkState out;
    out.set_step_count(state.step_count());
    for (const auto& [key, amp] : state.amplitudes()) {
        const JonesVector cell =
            key.coin == Coin::H ? JonesVector{amp, kZero} : JonesVector{kZero, amp};
        const Complex along_u1 = dot(pair.u1, cell);
        const Complex along_u2 = dot(pair.u2, cell);
        if (along_u1 != kZero) {
            out.add_amplitude(Coin::H, key.x, key.m - 1, along_u1 * down_mode.h);
            out.add_amplitude(Coin::V, key.x, key.m - 1, along_u1 * down_mode.v);
        }
        if (along_u2 != kZero) {
            out.add_amplitude(Coin::H, key.x, key.m + 1, along_u2 * up_mode.h);
            out.add_amplitude(Coin::V, key.x, key.m + 1, along_u2 * up_mode.v);
        }
    }
    return out;
}

}  // namespace

WalkState shift_sigma(const WalkState& state, const OrthoPair& pair) {
    return shift_pair_modes(state, pair, pair.u1, pair.u2);
}

WalkState shift_sigma_modified(const WalkState& state, const OrthoPair& pair) {
    return shift_pair_modes(state, pair, pair.u2, pair.u1);
}

WalkState step(const WalkState& state, const WalkVariant& variant) {
    WalkState out;
    switch (variant.kind) {
        case WalkKind::ModifiedPauli:
            out = shift_x(shift_sigma_modified(state, variant.pair()));
            break;
        case WalkKind::Pauli:
            out = shift_x(shift_sigma(state, variant.pair()));
            break;
        case WalkKind::Alternate: {
            const CoinMatrix c = variant.coin();
            out = shift_x(apply_coin(shift_y(apply_coin(state, c.adjoint())), c));
            break;
        }
        case WalkKind::ModifiedAlternate: {
            const CoinMatrix c = variant.coin();
            out = shift_x(
                apply_coin(shift_y_modified(apply_coin(state, c.adjoint())), c));
            break;
        }
        default:
            throw std::invalid_argument("unknown walk kind");
    }
    out.prune();
    out.set_step_count(state.step_count() + 1);
    return out;
}

WalkState evolve(WalkState state, const WalkVariant& variant, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    for (int i = 0; i < steps; ++i) {
        state = step(state, variant);
    }
    return state;
}

}  // namespace hyperwalk
