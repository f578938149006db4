#include "cohtele/cmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "cohtele/errors.hpp"

namespace cohtele {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Mat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

Mat tensor(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Mat partial_trace(const Mat& m, const std::vector<int>& dims,
                  const std::vector<int>& keep) {
    if (m.rows() != m.cols())
        throw dimension_error("partial_trace: matrix must be square");
    long total = 1;
    for (int d : dims) {
        if (d <= 0) throw dimension_error("partial_trace: nonpositive dim");
        total *= d;
    }
    if (total != m.rows())
        throw dimension_error("partial_trace: product of dims != matrix dim");
    const int n = static_cast<int>(dims.size());
    for (size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= n)
            throw dimension_error("partial_trace: keep index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw dimension_error("partial_trace: keep must be strictly increasing");
    }

    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end())
            traced.push_back(i);

    // Row-major strides of the full multi-index.
    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

    long dk = 1, dt = 1;
    for (int i : keep) dk *= dims[i];
    for (int i : traced) dt *= dims[i];

    auto offset = [&](long flat, const std::vector<int>& subs) {
        long off = 0;
        for (int i = static_cast<int>(subs.size()) - 1; i >= 0; --i) {
            int s = subs[i];
            off += (flat % dims[s]) * stride[s];
            flat /= dims[s];
        }
        return off;
    };

    Mat out = Mat::Zero(dk, dk);
    for (long r = 0; r < dk; ++r) {
        const long ro = offset(r, keep);
        for (long c = 0; c < dk; ++c) {
            const long co = offset(c, keep);
            cx sum = 0.0;
            for (long t = 0; t < dt; ++t) {
                const long to = offset(t, traced);
                sum += m(ro + to, co + to);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

HermEig herm_eig(const Mat& m) {
    if (!is_hermitian(m))
        throw validation_error("herm_eig: matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Mat> solver(m);
    if (solver.info() != Eigen::Success)
        throw validation_error("herm_eig: eigendecomposition failed");
    // Eigen returns ascending order; we want descending.
    HermEig result;
    result.eigenvalues = solver.eigenvalues().reverse();
    result.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return result;
}

Mat psd_sqrt(const Mat& m) {
    HermEig eig = herm_eig(m);
    Eigen::VectorXd lambda = eig.eigenvalues;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < -kEigClampTol)
            throw validation_error("psd_sqrt: negative eigenvalue beyond tolerance");
        lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
    }
    return eig.eigenvectors * lambda.asDiagonal() * eig.eigenvectors.adjoint();
}

Mat matrix_unit(int d, int i, int j) {
    if (i < 0 || j < 0 || i >= d || j >= d)
        throw dimension_error("matrix_unit: index out of range");
    Mat out = Mat::Zero(d, d);
    out(i, j) = 1.0;
    return out;
}

Mat identity(int d) { return Mat::Identity(d, d); }

const Mat& pauli_x() {
    static const Mat m = (Mat(2, 2) << 0, 1, 1, 0).finished();
    return m;
}

const Mat& pauli_y() {
    static const Mat m = (Mat(2, 2) << 0, cx(0, -1), cx(0, 1), 0).finished();
    return m;
}

const Mat& pauli_z() {
    static const Mat m = (Mat(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

}  // namespace cohtele
