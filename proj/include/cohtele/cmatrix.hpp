#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace cohtele {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Module-wide floating tolerances. Everything in this library lives on
// Hilbert spaces of total dimension <= 8, where double precision never
// legitimately exceeds these.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kEigClampTol = 1e-10;

/// Spectral decomposition of a Hermitian matrix, eigenvalues in
/// descending order, eigenvector columns paired index-wise.
struct HermEig {
    Eigen::VectorXd eigenvalues;
    Mat eigenvectors;
};

/// Largest entrywise modulus.
double max_abs(const Mat& m);

bool is_hermitian(const Mat& m, double tol = kHermTol);

/// Kronecker product a (x) b.
Mat tensor(const Mat& a, const Mat& b);

/// Trace out every subsystem not listed in `keep`. `dims` are the
/// subsystem dimensions (product must equal the matrix dimension) and
/// `keep` must be strictly increasing valid indices. Trace-preserving.
Mat partial_trace(const Mat& m, const std::vector<int>& dims,
                  const std::vector<int>& keep);

/// Hermitian eigendecomposition; throws validation_error if the input is
/// not Hermitian within kHermTol (max-entry norm).
HermEig herm_eig(const Mat& m);

/// Hermitian PSD square root. Eigenvalues in [-kEigClampTol, 0) are
/// clamped to zero; anything more negative throws validation_error.
Mat psd_sqrt(const Mat& m);

/// Matrix unit |i><j| in d dimensions.
Mat matrix_unit(int d, int i, int j);

Mat identity(int d);
const Mat& pauli_x();
const Mat& pauli_y();
const Mat& pauli_z();

}  // namespace cohtele
