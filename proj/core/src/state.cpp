#include "hyperwalk/state.hpp"

#include <cmath>

namespace hyperwalk {

Complex WalkState::amplitude(Coin c, int x, int m) const {
    auto it = amps_.find(SiteKey{x, m, c});
    return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
}

void WalkState::set_amplitude(Coin c, int x, int m, Complex value) {
    amps_[SiteKey{x, m, c}] = value;
}

void WalkState::add_amplitude(Coin c, int x, int m, Complex value) {
    amps_[SiteKey{x, m, c}] += value;
}

void WalkState::prune(double threshold) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) < threshold) {
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
}

double WalkState::norm_squared() const {
    double total = 0.0;
    for (const auto& [key, amp] : amps_) {
        total += std::norm(amp);
    }
    return total;
}

std::map<Site, double> WalkState::probability_distribution() const {
    std::map<Site, double> dist;
    for (const auto& [key, amp] : amps_) {
        dist[Site{key.x, key.m}] += std::norm(amp);
    }
    return dist;
}

std::map<int, double> WalkState::marginal_distribution(Axis axis) const {
    std::map<int, double> marginal;
    for (const auto& [key, amp] : amps_) {
        marginal[axis == Axis::Path ? key.x : key.m] += std::norm(amp);
    }
    return marginal;
}

WalkState make_initial_state(const InitialStateParams& params) {
    WalkState state;
    state.set_amplitude(Coin::H, 0, 0, Complex{std::cos(params.alpha), 0.0});
    state.set_amplitude(Coin::V, 0, 0,
                        std::polar(std::sin(params.alpha), params.beta));
    state.prune();
    state.set_step_count(0);
    return state;
}

}  // namespace hyperwalk
