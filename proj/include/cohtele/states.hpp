#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cohtele/cmatrix.hpp"

namespace cohtele {

/// Bloch parametrization cos(theta/2)|0> + sin(theta/2)e^{i phi}|1>.
struct PureQubit {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2pi)

    cx alpha() const { return std::cos(theta / 2.0); }
    cx beta() const { return std::sin(theta / 2.0) * std::exp(cx(0.0, phi)); }
    Vec amplitudes() const;
};

/// Density matrix with subsystem-dimension metadata. `make` validates
/// Hermiticity, unit trace and positivity.
struct DensityMatrix {
    Mat mat;
    std::vector<int> dims;

    int dim() const { return static_cast<int>(mat.rows()); }
    static DensityMatrix make(Mat m, std::vector<int> dims);
};

struct MemsParams {
    double p1 = 1.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
};

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

Vec bell_vector(Bell label);
DensityMatrix bell_state(Bell label);

DensityMatrix pure_qubit_density(const PureQubit& q);

/// The orthonormal two-qubit basis {Phi_n+, Phi_n-, Psi_n+, Psi_n-}
/// built from a complex parameter n, each normalized by 1/sqrt(1+|n|^2).
std::array<Vec, 4> n_basis(cx n);

/// p1|Psi-><Psi-| + p2|00><00| + p3|Psi+><Psi+| + p4|11><11|.
/// With enforce_order the decreasing ordering p1>=p2>=p3>=p4 is required;
/// otherwise a violation only warns on stderr (useful for sweeps).
DensityMatrix mems_state(const MemsParams& p, bool enforce_order = true);

/// p|Psi-><Psi-| + (1-p)/4 * I.
DensityMatrix werner_state(double p);

/// Sum of |off-diagonal| entries, optionally in the basis given by the
/// columns of a unitary (default: computational basis).
double l1_coherence(const DensityMatrix& rho,
                    const std::optional<Mat>& basis_unitary = std::nullopt);

/// Two-qubit concurrence via the spin-flip spectral construction.
double concurrence(const DensityMatrix& rho);

/// Smallest eigenvalue of the partial transpose over the second qubit;
/// nonnegative iff the state is PPT.
double min_partial_transpose_eig(const DensityMatrix& rho);

}  // namespace cohtele
