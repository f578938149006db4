#include "cohtele/states.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "cohtele/errors.hpp"

namespace cohtele {

Vec PureQubit::amplitudes() const {
    Vec v(2);
    v << alpha(), beta();
    return v;
}

DensityMatrix DensityMatrix::make(Mat m, std::vector<int> dims) {
    long total = 1;
    for (int d : dims) total *= d;
    if (dims.empty() || total != m.rows() || m.rows() != m.cols())
        throw dimension_error("DensityMatrix: dims do not match matrix shape");
    if (!is_hermitian(m))
        throw validation_error("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m.trace().real() - 1.0) > kHermTol ||
        std::abs(m.trace().imag()) > kHermTol)
        throw validation_error("DensityMatrix: trace != 1 within tolerance");
    HermEig eig = herm_eig(m);
    if (eig.eigenvalues.minCoeff() < -kEigClampTol)
        throw validation_error("DensityMatrix: negative eigenvalue");
    return DensityMatrix{std::move(m), std::move(dims)};
}

Vec bell_vector(Bell label) {
    const double s = 1.0 / std::sqrt(2.0);
    Vec v = Vec::Zero(4);
    switch (label) {
        case Bell::PhiPlus:  v(0) = s;  v(3) = s;  break;
        case Bell::PhiMinus: v(0) = s;  v(3) = -s; break;
        case Bell::PsiPlus:  v(1) = s;  v(2) = s;  break;
        case Bell::PsiMinus: v(1) = s;  v(2) = -s; break;
    }
    return v;
}

DensityMatrix bell_state(Bell label) {
    Vec v = bell_vector(label);
    return DensityMatrix::make(v * v.adjoint(), {2, 2});
}

DensityMatrix pure_qubit_density(const PureQubit& q) {
    Vec v = q.amplitudes();
    return DensityMatrix::make(v * v.adjoint(), {2});
}

std::array<Vec, 4> n_basis(cx n) {
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(n));
    Vec phi_p = Vec::Zero(4), phi_m = Vec::Zero(4);
    Vec psi_p = Vec::Zero(4), psi_m = Vec::Zero(4);
    phi_p(0) = norm;                 phi_p(3) = norm * n;
    phi_m(0) = norm * std::conj(n);  phi_m(3) = -norm;
    psi_p(1) = norm;                 psi_p(2) = norm * std::conj(n);
    psi_m(1) = norm * n;             psi_m(2) = -norm;
    return {phi_p, phi_m, psi_p, psi_m};
}

DensityMatrix mems_state(const MemsParams& p, bool enforce_order) {
    const double ps[4] = {p.p1, p.p2, p.p3, p.p4};
    double sum = 0.0;
    for (double v : ps) {
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw validation_error("mems_state: probability out of [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw validation_error("mems_state: probabilities do not sum to 1");
    const bool ordered = p.p1 >= p.p2 && p.p2 >= p.p3 && p.p3 >= p.p4;
    if (!ordered) {
        if (enforce_order)
            throw validation_error("mems_state: probabilities not in decreasing order");
        std::fprintf(stderr,
                     "mems_state: warning: probabilities not in decreasing order\n");
    }
    Vec psim = bell_vector(Bell::PsiMinus);
    Vec psip = bell_vector(Bell::PsiPlus);
    Mat m = p.p1 * (psim * psim.adjoint()) + p.p3 * (psip * psip.adjoint());
    m(0, 0) += p.p2;
    m(3, 3) += p.p4;
    return DensityMatrix::make(std::move(m), {2, 2});
}

DensityMatrix werner_state(double p) {
    if (p < 0.0 || p > 1.0)
        throw validation_error("werner_state: p out of [0,1]");
    Vec psim = bell_vector(Bell::PsiMinus);
    Mat m = p * (psim * psim.adjoint()) + ((1.0 - p) / 4.0) * Mat::Identity(4, 4);
    return DensityMatrix::make(std::move(m), {2, 2});
}

double l1_coherence(const DensityMatrix& rho,
                    const std::optional<Mat>& basis_unitary) {
    Mat m = rho.mat;
    if (basis_unitary) {
        const Mat& u = *basis_unitary;
        if (u.rows() != m.rows() || u.cols() != m.cols())
            throw dimension_error("l1_coherence: basis dimension mismatch");
        if (max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) > kHermTol)
            throw validation_error("l1_coherence: basis matrix is not unitary");
        m = u.adjoint() * m * u;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) sum += std::abs(m(i, j));
    return sum;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw dimension_error("concurrence: state must be two-qubit (4x4)");
    const Mat yy = tensor(pauli_y(), pauli_y());
    const Mat r = rho.mat * yy * rho.mat.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat> solver(r);
    std::array<double, 4> s{};
    for (int i = 0; i < 4; ++i)
        s[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
    std::sort(s.begin(), s.end(), std::greater<>());
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double min_partial_transpose_eig(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw dimension_error("min_partial_transpose_eig: state must be 4x4");
    Mat pt(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            pt.block(2 * i, 2 * j, 2, 2) =
                rho.mat.block(2 * i, 2 * j, 2, 2).transpose();
    return herm_eig(pt).eigenvalues.minCoeff();
}

}  // namespace cohtele
