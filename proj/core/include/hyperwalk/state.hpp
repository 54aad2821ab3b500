#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>

namespace hyperwalk {

using Complex = std::complex<double>;

/// Polarization (coin) basis label. H is the Jones vector [1,0], V is [0,1].
enum class Coin : std::uint8_t { H = 0, V = 1 };

/// A lattice cell: path position x and orbital angular momentum m.
struct Site {
    int x = 0;
    int m = 0;
    friend auto operator<=>(const Site&, const Site&) = default;
};

/// Key of one populated amplitude. Ordered site-major so that the two
/// polarization components of a cell are adjacent in map iteration.
struct SiteKey {
    int x = 0;
    int m = 0;
    Coin coin = Coin::H;
    friend auto operator<=>(const SiteKey&, const SiteKey&) = default;
};

/// Marginal axis selector for marginal_distribution().
enum class Axis { Path, Oam };

/// Initial polarization cos(alpha)|H> + e^{i beta} sin(alpha)|V>, localized
/// at x = 0, m = 0.
struct InitialStateParams {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Pure single-walker state over polarization x path x OAM, stored as a
/// sparse map from populated cells to complex amplitudes. Coordinates are
/// signed and unbounded; after n steps the support obeys |x| <= n, |m| <= n
/// with x = n (mod 2) and m = n (mod 2).
class WalkState {
public:
    using AmplitudeMap = std::map<SiteKey, Complex>;

    /// Magnitudes below this are dropped by prune(); it only removes
    /// round-off residue, never physically meaningful amplitude.
    static constexpr double kPruneThreshold = 1e-15;

    WalkState() = default;

    int step_count() const { return steps_; }
    void set_step_count(int n) { steps_ = n; }

    const AmplitudeMap& amplitudes() const { return amps_; }
    bool empty() const { return amps_.empty(); }
    std::size_t size() const { return amps_.size(); }

    /// Amplitude of a cell, 0 for unpopulated cells.
    Complex amplitude(Coin c, int x, int m) const;

    void set_amplitude(Coin c, int x, int m, Complex value);
    void add_amplitude(Coin c, int x, int m, Complex value);

    /// Drop entries with |amplitude| < threshold.
    void prune(double threshold = kPruneThreshold);

    /// Sum of |amplitude|^2 over all cells; 1 within 1e-12 for any state
    /// produced by unitary evolution of a normalized initial state.
    double norm_squared() const;

    /// Per-site probabilities (coin traced out), keyed by (x, m).
    std::map<Site, double> probability_distribution() const;

    /// Marginal of the site distribution along one axis.
    std::map<int, double> marginal_distribution(Axis axis) const;

private:
    AmplitudeMap amps_;
    int steps_ = 0;
};

/// State at step 0: (cos(alpha)|H> + e^{i beta} sin(alpha)|V>) at the origin.
WalkState make_initial_state(const InitialStateParams& params);

}  // namespace hyperwalk
