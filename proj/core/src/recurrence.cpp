#include "hyperwalk/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperwalk {

namespace {

constexpr double kPrune = 1e-15;

void accumulate(std::map<Site, Complex>& grid, int x, int m, Complex value) {
    grid[Site{x, m}] += value;
}

void drop_residue(std::map<Site, Complex>& grid) {
    for (auto it = grid.begin(); it != grid.end();) {
        if (std::abs(it->second) < kPrune) {
            it = grid.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace

double AmplitudeGrids::norm_squared() const {
    double total = 0.0;
    for (const auto& [site, amp] : a) total += std::norm(amp);
    for (const auto& [site, amp] : b) total += std::norm(amp);
    return total;
}

AmplitudeGrids initial_grids(const InitialStateParams& params) {
    AmplitudeGrids grids;
    const Complex h{std::cos(params.alpha), 0.0};
    const Complex v = std::polar(std::sin(params.alpha), params.beta);
    if (std::abs(h) >= kPrune) grids.a[Site{0, 0}] = h;
    if (std::abs(v) >= kPrune) grids.b[Site{0, 0}] = v;
    grids.steps = 0;
    return grids;
}

AmplitudeGrids recurrence_step(const AmplitudeGrids& grids,
                               const Su2Params& params) {
    const Complex c1 = std::polar(std::cos(params.theta), params.xi);
    const Complex c2 = std::polar(std::sin(params.theta), params.zeta);
    const Complex c1c = std::conj(c1);
    const Complex c2c = std::conj(c2);

    AmplitudeGrids next;
    next.steps = grids.steps + 1;

    // Scatter form of the recurrences quoted in the header: a source H
    // amplitude at (x, m) feeds the H grid one column to the left and the V
    // grid one column to the right, and vice versa for a source V amplitude.
    for (const auto& [site, amp] : grids.a) {
        accumulate(next.a, site.x - 1, site.m - 1, c1c * c2 * amp);
        accumulate(next.a, site.x - 1, site.m + 1, c1 * c2c * amp);
        accumulate(next.b, site.x + 1, site.m - 1, c1c * c1c * amp);
        accumulate(next.b, site.x + 1, site.m + 1, -c2c * c2c * amp);
    }
    for (const auto& [site, amp] : grids.b) {
        accumulate(next.a, site.x - 1, site.m - 1, -c2 * c2 * amp);
        accumulate(next.a, site.x - 1, site.m + 1, c1 * c1 * amp);
        accumulate(next.b, site.x + 1, site.m - 1, -c1c * c2 * amp);
        accumulate(next.b, site.x + 1, site.m + 1, -c1 * c2c * amp);
    }

    drop_residue(next.a);
    drop_residue(next.b);
    return next;
}

AmplitudeGrids oracle_evolve(const InitialStateParams& init,
                             const Su2Params& params, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    AmplitudeGrids grids = initial_grids(init);
    for (int i = 0; i < steps; ++i) {
        grids = recurrence_step(grids, params);
    }
    return grids;
}

double compare_with_operator(const AmplitudeGrids& grids,
                             const WalkState& state) {
    if (grids.steps != state.step_count()) {
        throw std::invalid_argument(
            "cannot compare grids and state at different step counts");
    }
    double max_dev = 0.0;
    auto track = [&max_dev](Complex lhs, Complex rhs) {
        max_dev = std::max(max_dev, std::abs(lhs - rhs));
    };
    for (const auto& [site, amp] : grids.a) {
        track(amp, state.amplitude(Coin::H, site.x, site.m));
    }
    for (const auto& [site, amp] : grids.b) {
        track(amp, state.amplitude(Coin::V, site.x, site.m));
    }
    // Cells populated in the state but absent from the grids.
    for (const auto& [key, amp] : state.amplitudes()) {
        const auto& grid = key.coin == Coin::H ? grids.a : grids.b;
        if (!grid.contains(Site{key.x, key.m})) {
            track(Complex{0.0, 0.0}, amp);
        }
    }
    return max_dev;
}

}  // namespace hyperwalk
