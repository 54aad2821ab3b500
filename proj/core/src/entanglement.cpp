#include "hyperwalk/entanglement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace hyperwalk {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kEigenvalueFloor = 1e-12;

int dof_value(const SiteKey& key, Dof dof) {
    switch (dof) {
        case Dof::Polarization:
            return static_cast<int>(key.coin);
        case Dof::Path:
            return key.x;
        case Dof::Oam:
            return key.m;
    }
    throw std::invalid_argument("unknown degree of freedom");
}

FactorBasis basis_for(const WalkState& state, Dof dof) {
    FactorBasis basis;
    basis.label = dof;
    if (dof == Dof::Polarization) {
        basis.values = {0, 1};
        return basis;
    }
    std::set<int> values;
    for (const auto& [key, amp] : state.amplitudes()) {
        values.insert(dof_value(key, dof));
    }
    basis.values.assign(values.begin(), values.end());
    return basis;
}

// Eigenvalues of an exactly Hermitian matrix held as split real/imaginary
// row-major arrays, by cyclic Jacobi rotations. Only the eigenvalues are
// needed, so no eigenvector accumulation. Each rotation works on the two
// pivot rows (contiguous) and mirrors them onto the conjugate columns.
std::vector<double> jacobi_eigenvalues(std::vector<double>& re,
                                       std::vector<double>& im, int n) {
    if (n == 0) return {};
    if (n == 1) return {re[0]};

    double fro2 = 0.0;
    for (int k = 0; k < n * n; ++k) {
        fro2 += re[k] * re[k] + im[k] * im[k];
    }
    const double off_target = 1e-12 * std::sqrt(fro2);

    std::vector<double> eigs(n);
    if (off_target > 0.0) {
        // Pivots below this cannot push the off-diagonal norm over target.
        const double skip = off_target / n;
        for (int sweep = 0; sweep < 100; ++sweep) {
            double off2 = 0.0;
            for (int p = 0; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    off2 += re[p * n + q] * re[p * n + q] +
                            im[p * n + q] * im[p * n + q];
                }
            }
            if (std::sqrt(2.0 * off2) <= off_target) break;

            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double gr = re[p * n + q];
                    const double gi = im[p * n + q];
                    const double absg = std::sqrt(gr * gr + gi * gi);
                    if (absg <= skip) continue;

                    const double alpha = re[p * n + p];
                    const double beta = re[q * n + q];
                    const double tau = (beta - alpha) / (2.0 * absg);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double wr = gr / absg;  // phase of the pivot
                    const double wi = gi / absg;

                    double* rp_re = re.data() + static_cast<std::size_t>(p) * n;
                    double* rp_im = im.data() + static_cast<std::size_t>(p) * n;
                    double* rq_re = re.data() + static_cast<std::size_t>(q) * n;
                    double* rq_im = im.data() + static_cast<std::size_t>(q) * n;

                    for (int i = 0; i < n; ++i) {
                        if (i == p || i == q) continue;
                        const double pr = rp_re[i];
                        const double pi = rp_im[i];
                        const double qr = rq_re[i];
                        const double qi = rq_im[i];
                        // w * row_q entry
                        const double wq_r = wr * qr - wi * qi;
                        const double wq_i = wr * qi + wi * qr;
                        const double np_r = c * pr - s * wq_r;
                        const double np_i = c * pi - s * wq_i;
                        const double nq_r = s * pr + c * wq_r;
                        const double nq_i = s * pi + c * wq_i;
                        rp_re[i] = np_r;
                        rp_im[i] = np_i;
                        rq_re[i] = nq_r;
                        rq_im[i] = nq_i;
                        // Hermitian mirror: column entries are conjugates.
                        re[static_cast<std::size_t>(i) * n + p] = np_r;
                        im[static_cast<std::size_t>(i) * n + p] = -np_i;
                        re[static_cast<std::size_t>(i) * n + q] = nq_r;
                        im[static_cast<std::size_t>(i) * n + q] = -nq_i;
                    }

                    re[p * n + p] = alpha - t * absg;
                    re[q * n + q] = beta + t * absg;
                    im[p * n + p] = 0.0;
                    im[q * n + q] = 0.0;
                    re[p * n + q] = im[p * n + q] = 0.0;
                    re[q * n + p] = im[q * n + p] = 0.0;
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        eigs[i] = re[i * n + i];
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

// Run fn(i) for i in [0, count) on up to hardware_concurrency() threads.
// Results are written by index, so the output order is deterministic.
template <typename Fn>
void for_each_index(int count, Fn fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers =
        std::min<unsigned>(hw == 0 ? 1 : hw, static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

int FactorBasis::index_of(int value) const {
    const auto it = std::lower_bound(values.begin(), values.end(), value);
    if (it == values.end() || *it != value) {
        throw std::invalid_argument("value not present in factor basis");
    }
    return static_cast<int>(it - values.begin());
}

DensityMatrix::DensityMatrix(FactorBasis first, FactorBasis second)
    : first_(std::move(first)), second_(std::move(second)) {
    dim_ = first_.dim() * second_.dim();
    data_.assign(static_cast<std::size_t>(dim_) * dim_, Complex{0.0, 0.0});
}

double DensityMatrix::trace_real() const {
    double tr = 0.0;
    for (int i = 0; i < dim_; ++i) {
        tr += at(i, i).real();
    }
    return tr;
}

double DensityMatrix::hermiticity_defect() const {
    double defect = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            defect = std::max(defect, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    }
    return defect;
}

DensityMatrix reduced_density_matrix(const WalkState& state, Dof keep_first,
                                     Dof keep_second) {
    if (keep_first == keep_second) {
        throw std::invalid_argument("kept degrees of freedom must differ");
    }
    if (state.empty()) {
        throw std::invalid_argument("cannot reduce an empty state");
    }
    Dof traced = Dof::Polarization;
    if (keep_first != Dof::Path && keep_second != Dof::Path) traced = Dof::Path;
    if (keep_first != Dof::Oam && keep_second != Dof::Oam) traced = Dof::Oam;

    FactorBasis first = basis_for(state, keep_first);
    FactorBasis second = basis_for(state, keep_second);
    const int dim_second = second.dim();
    DensityMatrix rho(std::move(first), std::move(second));

    // Group the pure state into one kept-space vector per traced value;
    // the reduction is the sum of their outer products.
    std::map<int, std::vector<std::pair<int, Complex>>> slices;
    for (const auto& [key, amp] : state.amplitudes()) {
        const int joint =
            rho.basis_first().index_of(dof_value(key, keep_first)) * dim_second +
            rho.basis_second().index_of(dof_value(key, keep_second));
        slices[dof_value(key, traced)].emplace_back(joint, amp);
    }
    for (const auto& [traced_value, slice] : slices) {
        for (const auto& [row, amp_row] : slice) {
            for (const auto& [col, amp_col] : slice) {
                rho.add(row, col, amp_row * std::conj(amp_col));
            }
        }
    }
    return rho;
}

DensityMatrix partial_transpose(const DensityMatrix& rho, Factor which) {
    const int da = rho.basis_first().dim();
    const int db = rho.basis_second().dim();
    DensityMatrix out(rho.basis_first(), rho.basis_second());
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            for (int k = 0; k < da; ++k) {
                for (int l = 0; l < db; ++l) {
                    const Complex value =
                        which == Factor::Second
                            ? rho.at(i * db + l, k * db + j)
                            : rho.at(k * db + j, i * db + l);
                    out.set(i * db + j, k * db + l, value);
                }
            }
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& matrix) {
    if (matrix.hermiticity_defect() > kHermitianTol) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
    const int n = matrix.dim();
    std::vector<double> re(static_cast<std::size_t>(n) * n);
    std::vector<double> im(static_cast<std::size_t>(n) * n);
    // Split storage and symmetrize exactly so the solver sees A = A^dag.
    for (int i = 0; i < n; ++i) {
        re[static_cast<std::size_t>(i) * n + i] = matrix.at(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const Complex mean =
                0.5 * (matrix.at(i, j) + std::conj(matrix.at(j, i)));
            re[static_cast<std::size_t>(i) * n + j] = mean.real();
            im[static_cast<std::size_t>(i) * n + j] = mean.imag();
            re[static_cast<std::size_t>(j) * n + i] = mean.real();
            im[static_cast<std::size_t>(j) * n + i] = -mean.imag();
        }
    }
    return jacobi_eigenvalues(re, im, n);
}

double negativity(const DensityMatrix& rho, Factor transpose_which) {
    const std::vector<double> eigs =
        hermitian_eigenvalues(partial_transpose(rho, transpose_which));
    double total = 0.0;
    for (double lambda : eigs) {
        if (lambda <= -kEigenvalueFloor) {
            total -= lambda;
        }
    }
    return total;
}

double negativity_between(const WalkState& state, Dof first, Dof second) {
    return negativity(reduced_density_matrix(state, first, second));
}

std::vector<std::pair<int, double>> negativity_curve(
    const WalkVariant& variant, const InitialStateParams& init, Dof first,
    Dof second, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("curve length must be non-negative");
    }
    std::vector<WalkState> snapshots;
    snapshots.reserve(n_max);
    WalkState state = make_initial_state(init);
    for (int n = 1; n <= n_max; ++n) {
        state = step(state, variant);
        snapshots.push_back(state);
    }
    std::vector<std::pair<int, double>> curve(snapshots.size());
    for_each_index(static_cast<int>(snapshots.size()), [&](int i) {
        curve[i] = {i + 1, negativity_between(snapshots[i], first, second)};
    });
    return curve;
}

std::vector<std::pair<double, double>> parameter_sweep(
    const SweepSpec& sweep, const Su2Params& fixed,
    const InitialStateParams& init, int steps, Dof first, Dof second) {
    if (sweep.step <= 0.0) {
        throw std::invalid_argument("sweep step must be positive");
    }
    if (sweep.to < sweep.from) {
        throw std::invalid_argument("sweep range is empty");
    }
    std::vector<double> angles;
    for (int k = 0;; ++k) {
        const double angle = sweep.from + k * sweep.step;
        if (angle > sweep.to + sweep.step * 1e-9) break;
        angles.push_back(angle);
    }

    std::vector<std::pair<double, double>> points(angles.size());
    for_each_index(static_cast<int>(angles.size()), [&](int i) {
        Su2Params params = fixed;
        switch (sweep.param) {
            case SweepParam::Xi:
                params.xi = angles[i];
                break;
            case SweepParam::Zeta:
                params.zeta = angles[i];
                break;
            case SweepParam::Theta:
                params.theta = angles[i];
                break;
        }
        const WalkVariant variant{WalkKind::ModifiedPauli,
                                  pair_from_params(params)};
        const WalkState state = evolve(make_initial_state(init), variant, steps);
        points[i] = {angles[i], negativity_between(state, first, second)};
    });
    return points;
}

}  // namespace hyperwalk
