#pragma once

#include <map>

#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"

namespace hyperwalk {

/// Closed-form amplitude grids for the modified Pauli walk: a holds the H
/// amplitudes, b the V amplitudes, keyed by (x, m). Maintained by the scalar
/// recurrences in recurrence_step(), entirely independently of the operator
/// pipeline, so the two implementations can cross-validate each other.
/// See docs/recurrence.md for the derivation of the coefficients.
struct AmplitudeGrids {
    std::map<Site, Complex> a;
    std::map<Site, Complex> b;
    int steps = 0;

    double norm_squared() const;
};

/// Grids for the step-0 state of make_initial_state(params).
AmplitudeGrids initial_grids(const InitialStateParams& params);

/// One modified Pauli step by direct coefficient recurrence, with
/// c1 = e^{i xi} cos(theta) and c2 = e^{i zeta} sin(theta):
///   a'(x,m) = conj(c1) c2 a(x+1,m+1) + c1 conj(c2) a(x+1,m-1)
///           - c2^2       b(x+1,m+1) + c1^2        b(x+1,m-1)
///   b'(x,m) = conj(c1)^2 a(x-1,m+1) - conj(c2)^2  a(x-1,m-1)
///           - conj(c1) c2 b(x-1,m+1) - c1 conj(c2) b(x-1,m-1)
/// Every H output draws only on column x+1 and every V output only on
/// column x-1, as forced by the polarizing splitter.
AmplitudeGrids recurrence_step(const AmplitudeGrids& grids,
                               const Su2Params& params);

/// n recurrence steps from the given initial polarization.
AmplitudeGrids oracle_evolve(const InitialStateParams& init,
                             const Su2Params& params, int steps);

/// Maximum amplitude deviation between the grids and a walk state over the
/// union of their supports (a vs H, b vs V). Throws std::invalid_argument
/// when the step counts disagree.
double compare_with_operator(const AmplitudeGrids& grids,
                             const WalkState& state);

}  // namespace hyperwalk
