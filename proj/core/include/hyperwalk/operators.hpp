#pragma once

#include <variant>

#include "hyperwalk/state.hpp"

namespace hyperwalk {

/// Angles of the SU(2) polarization rotation
///   [  e^{i xi} cos(theta)    e^{i zeta} sin(theta) ]
///   [ -e^{-i zeta} sin(theta) e^{-i xi} cos(theta)  ].
struct Su2Params {
    double xi = 0.0;
    double zeta = 0.0;
    double theta = 0.0;
};

/// Jones vector (polarization 2-vector), components along H and V.
struct JonesVector {
    Complex h{0.0, 0.0};
    Complex v{0.0, 0.0};
};

/// 2x2 complex matrix acting on the polarization space, row-major.
struct CoinMatrix {
    Complex m00{0.0, 0.0}, m01{0.0, 0.0};
    Complex m10{0.0, 0.0}, m11{0.0, 0.0};

    CoinMatrix adjoint() const;
    JonesVector apply(const JonesVector& in) const;
    JonesVector column(int j) const;
};

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b);

/// True when m is unitary within tol (max elementwise deviation of m*m^dag
/// from the identity).
bool is_unitary(const CoinMatrix& m, double tol = 1e-12);

/// Orthonormal polarization pair (u1, u2) selecting the plate eigenmodes:
/// the u1 component of the walker shifts m down, the u2 component up.
struct OrthoPair {
    JonesVector u1;
    JonesVector u2;
};

/// True when (u1, u2) are orthonormal within tol.
bool is_orthonormal(const OrthoPair& pair, double tol = 1e-12);

/// Walk families. All four interleave a polarization-dependent OAM shift
/// with the polarizing-beam-splitter path shift; the "modified" families
/// swap the polarization between the pair modes at the OAM shift.
enum class WalkKind { ModifiedPauli, Pauli, Alternate, ModifiedAlternate };

/// Complete step description: the family plus either an explicit mode pair
/// or SU(2) angles (whose matrix columns provide the pair / the coin).
struct WalkVariant {
    WalkKind kind = WalkKind::ModifiedPauli;
    std::variant<OrthoPair, Su2Params> plate;

    /// Mode pair: the stored pair, or the columns of coin_matrix(params).
    OrthoPair pair() const;
    /// Coin: the stored params' matrix, or [u1 u2] of the stored pair.
    CoinMatrix coin() const;
};

/// The SU(2) rotation for the given angles (determinant exactly +1).
CoinMatrix coin_matrix(const Su2Params& params);

/// Columns of coin_matrix(params) as an orthonormal pair; any phase carried
/// by the columns is kept verbatim.
OrthoPair pair_from_params(const Su2Params& params);

/// Exact circular pair u1 = |R> = [1, -i]/sqrt(2), u2 = |L> = [1, i]/sqrt(2).
/// pair_from_params({0, -pi/2, pi/4}) spans the same modes but its u2 differs
/// from |L> by the branch phase e^{-i pi/2}.
OrthoPair qplate_pair();

/// Polarization matrix of one pass through a conversion plate with phase
/// retardation phi: e^{-i phi}|u2><u1| + e^{i phi}|u1><u2|.
CoinMatrix jplate_matrix(double phi, const OrthoPair& pair);

/// Non-converting variant: e^{-i phi}|u1><u1| + e^{i phi}|u2><u2|.
CoinMatrix jplate_tilde_matrix(double phi, const OrthoPair& pair);

/// Apply a polarization-only operator at every cell.
WalkState apply_coin(const WalkState& state, const CoinMatrix& coin);

/// Path shift: H moves x -> x-1, V moves x -> x+1 (polarizing splitter).
WalkState shift_x(const WalkState& state);

/// OAM shift: H moves m -> m-1, V moves m -> m+1.
WalkState shift_y(const WalkState& state);

/// OAM shift with polarization flip: the H component moves m -> m-1 and
/// becomes V, the V component moves m -> m+1 and becomes H.
WalkState shift_y_modified(const WalkState& state);

/// Pair-mode OAM shift: the u1 component moves m -> m-1 keeping u1, the u2
/// component moves m -> m+1 keeping u2. Equals apply_coin(C) after shift_y
/// after apply_coin(C^dag) for C = [u1 u2].
WalkState shift_sigma(const WalkState& state, const OrthoPair& pair);

/// Pair-mode OAM shift with mode swap: the u1 component moves m -> m-1 and
/// becomes u2, the u2 component moves m -> m+1 and becomes u1.
WalkState shift_sigma_modified(const WalkState& state, const OrthoPair& pair);

/// One walk step (operators applied right-to-left):
///   ModifiedPauli:     shift_x . shift_sigma_modified
///   Pauli:             shift_x . shift_sigma
///   Alternate:         shift_x . C . shift_y . C^dag
///   ModifiedAlternate: shift_x . C . shift_y_modified . C^dag
/// Increments the step count and prunes round-off residue.
WalkState step(const WalkState& state, const WalkVariant& variant);

/// n applications of step().
WalkState evolve(WalkState state, const WalkVariant& variant, int steps);

}  // namespace hyperwalk
