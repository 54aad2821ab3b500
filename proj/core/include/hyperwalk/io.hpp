#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/entanglement.hpp"
#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"

namespace hyperwalk {

/// Locale-independent rendering with 10 significant digits; integral values
/// keep a trailing ".0" so every number reads as a float.
std::string format_double(double value);

/// format_double parsed back, for emitting rounded numbers inside JSON.
double round_to_output_precision(double value);

/// Full state dump: {"steps": n, "amplitudes": [{coin, x, m, re, im}, ...]},
/// amplitudes ordered by (x, m, coin).
void write_state_json(const WalkState& state, std::ostream& out);

/// Site probabilities as "x,m,probability" rows sorted by (x, m).
void write_distribution_csv(const WalkState& state, std::ostream& out);

/// Negativity-per-step rows "n,negativity".
void write_curve_csv(const std::vector<std::pair<int, double>>& curve,
                     std::ostream& out);

/// Sweep rows "angle_rad,negativity".
void write_sweep_csv(const std::vector<std::pair<double, double>>& points,
                     std::ostream& out);

/// Build a walk variant from its external description: a kind token
/// ("modified-pauli", "pauli", "alternate", "modified-alternate") and a
/// plate description that is either the literal "q", a JSON object
/// {"xi":, "zeta":, "theta":} of angles in radians, or a JSON object
/// {"u1": [re,im,re,im], "u2": [re,im,re,im]} holding an orthonormal pair
/// (checked within 1e-12). Throws std::invalid_argument on anything else.
WalkVariant parse_variant_spec(const std::string& kind,
                               const std::string& plate);

/// Map a pair token like "pol-oam" to the two kept degrees of freedom.
/// Tokens: pol, path, oam; the two must differ.
std::pair<Dof, Dof> parse_dof_pair(const std::string& token);

}  // namespace hyperwalk
