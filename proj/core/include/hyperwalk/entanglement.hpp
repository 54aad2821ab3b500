#pragma once

#include <utility>
#include <vector>

#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"

namespace hyperwalk {

/// The three degrees of freedom carried by the walker.
enum class Dof { Polarization, Path, Oam };

/// Factor selector for partial transposition.
enum class Factor { First, Second };

/// Ordered basis of one kept degree of freedom. For Polarization the values
/// are always {0, 1} (H, V); for Path and Oam they are the distinct populated
/// coordinates in ascending order (compressed basis).
struct FactorBasis {
    Dof label = Dof::Polarization;
    std::vector<int> values;

    int dim() const { return static_cast<int>(values.size()); }
    /// Position of a value in the basis; throws std::invalid_argument when
    /// the value is not part of the basis.
    int index_of(int value) const;
};

/// Dense Hermitian matrix over the tensor product of two factor bases,
/// row-major, with the second factor index fastest: row = ia * dim_b + ib.
class DensityMatrix {
public:
    DensityMatrix(FactorBasis first, FactorBasis second);

    int dim() const { return dim_; }
    const FactorBasis& basis_first() const { return first_; }
    const FactorBasis& basis_second() const { return second_; }

    Complex at(int row, int col) const { return data_[row * dim_ + col]; }
    void set(int row, int col, Complex value) { data_[row * dim_ + col] = value; }
    void add(int row, int col, Complex value) { data_[row * dim_ + col] += value; }

    const std::vector<Complex>& data() const { return data_; }

    double trace_real() const;
    /// Max |A(i,j) - conj(A(j,i))| over all entries.
    double hermiticity_defect() const;

private:
    FactorBasis first_;
    FactorBasis second_;
    int dim_ = 0;
    std::vector<Complex> data_;
};

/// Reduced density matrix of the state over the two kept degrees of freedom
/// (the remaining one is traced out). The kept pair is ordered: the first
/// argument indexes the slow factor. Throws std::invalid_argument when the
/// two labels coincide or the state is empty.
DensityMatrix reduced_density_matrix(const WalkState& state, Dof keep_first,
                                     Dof keep_second);

/// Transpose of one tensor factor:
///   which = Second:  out[(i,j),(k,l)] = in[(i,l),(k,j)]
///   which = First:   out[(i,j),(k,l)] = in[(k,j),(i,l)]
/// An involution that preserves Hermiticity and trace.
DensityMatrix partial_transpose(const DensityMatrix& rho, Factor which);

/// All eigenvalues, ascending, of a Hermitian matrix, by cyclic Jacobi
/// rotations (off-diagonal threshold 1e-12 times the Frobenius norm, at most
/// 100 sweeps). Throws std::invalid_argument when the input deviates from
/// Hermitian by more than 1e-10.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& matrix);

/// Entanglement negativity: sum of |lambda| over the negative eigenvalues of
/// the partial transpose of rho. Eigenvalues with |lambda| < 1e-12 count as
/// zero. The result does not depend on which factor is transposed.
double negativity(const DensityMatrix& rho, Factor transpose_which = Factor::Second);

/// Negativity between two degrees of freedom of a walk state.
double negativity_between(const WalkState& state, Dof first, Dof second);

/// Negativity between the kept pair after each step 1..n_max of one
/// evolution (single pass, one snapshot per step).
std::vector<std::pair<int, double>> negativity_curve(
    const WalkVariant& variant, const InitialStateParams& init, Dof first,
    Dof second, int n_max);

/// Swept angle of a parameter sweep.
enum class SweepParam { Xi, Zeta, Theta };

/// Inclusive sweep grid: from, from + step, ... while <= to (step > 0).
struct SweepSpec {
    SweepParam param = SweepParam::Theta;
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
};

/// Negativity at n steps of the modified Pauli walk, with the swept angle
/// replacing the corresponding fixed parameter at each grid point. Points
/// are evaluated independently (possibly concurrently) and returned in grid
/// order. Throws std::invalid_argument for a non-positive step.
std::vector<std::pair<double, double>> parameter_sweep(
    const SweepSpec& sweep, const Su2Params& fixed,
    const InitialStateParams& init, int steps, Dof first, Dof second);

}  // namespace hyperwalk
