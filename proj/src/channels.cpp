#include "cohtele/channels.hpp"

#include "cohtele/errors.hpp"

namespace cohtele {

namespace {
constexpr double kKrausCutoff = 1e-12;
}

KrausMap KrausMap::make(std::vector<Mat> ops, bool trace_preserving) {
    if (ops.empty())
        throw validation_error("KrausMap: empty operator list");
    const int d_out = static_cast<int>(ops.front().rows());
    const int d_in = static_cast<int>(ops.front().cols());
    for (const Mat& k : ops)
        if (k.rows() != d_out || k.cols() != d_in)
            throw dimension_error("KrausMap: inconsistent operator shapes");
    KrausMap m{std::move(ops), d_in, d_out, trace_preserving};
    if (trace_preserving && !is_tp(m))
        throw validation_error("KrausMap: declared trace-preserving but sum K^dag K != I");
    return m;
}

ChoiMatrix choi_of_map(const KrausMap& m) {
    Mat choi = Mat::Zero(m.d_in * m.d_out, m.d_in * m.d_out);
    for (const Mat& k : m.ops)
        for (int i = 0; i < m.d_in; ++i)
            for (int j = 0; j < m.d_in; ++j)
                choi.block(i * m.d_out, j * m.d_out, m.d_out, m.d_out) +=
                    k.col(i) * k.col(j).adjoint();
    return ChoiMatrix{std::move(choi), m.d_in, m.d_out};
}

KrausMap map_of_choi(const ChoiMatrix& c) {
    if (c.mat.rows() != c.d_in * c.d_out)
        throw dimension_error("map_of_choi: matrix does not match declared dims");
    HermEig eig = herm_eig(c.mat);
    const double min_eig = eig.eigenvalues.minCoeff();
    if (min_eig < -kEigClampTol)
        throw not_completely_positive(
            "map_of_choi: Choi matrix is not positive semidefinite", min_eig);
    std::vector<Mat> ops;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda <= kKrausCutoff) continue;
        // Component (i*d_out + a) of the eigenvector is entry (a, i) of the
        // Kraus operator, matching the e_ij (x) Phi(e_ij) block layout.
        Mat op(c.d_out, c.d_in);
        for (int i = 0; i < c.d_in; ++i)
            for (int a = 0; a < c.d_out; ++a)
                op(a, i) = std::sqrt(lambda) * eig.eigenvectors(i * c.d_out + a, k);
        ops.push_back(std::move(op));
    }
    if (ops.empty()) ops.push_back(Mat::Zero(c.d_out, c.d_in));
    return KrausMap::make(std::move(ops));
}

KrausMap conjugate_map(const KrausMap& m) {
    std::vector<Mat> ops;
    ops.reserve(m.ops.size());
    for (const Mat& k : m.ops) ops.push_back(k.conjugate());
    return KrausMap::make(std::move(ops), m.declared_trace_preserving);
}

KrausMap compose(const KrausMap& outer, const KrausMap& inner) {
    if (inner.d_out != outer.d_in)
        throw dimension_error("compose: inner output dim != outer input dim");
    std::vector<Mat> ops;
    ops.reserve(outer.ops.size() * inner.ops.size());
    for (const Mat& a : outer.ops)
        for (const Mat& b : inner.ops) ops.push_back(a * b);
    return KrausMap::make(std::move(ops));
}

Mat apply_map(const KrausMap& m, const Mat& rho) {
    if (rho.rows() != m.d_in || rho.cols() != m.d_in)
        throw dimension_error("apply_map: state dimension != d_in");
    Mat out = Mat::Zero(m.d_out, m.d_out);
    for (const Mat& k : m.ops) out += k * rho * k.adjoint();
    return out;
}

bool is_cp(const ChoiMatrix& c) {
    return herm_eig(c.mat).eigenvalues.minCoeff() >= -kEigClampTol;
}

bool is_tp(const KrausMap& m) {
    Mat sum = Mat::Zero(m.d_in, m.d_in);
    for (const Mat& k : m.ops) sum += k.adjoint() * k;
    return max_abs(sum - Mat::Identity(m.d_in, m.d_in)) <= kHermTol;
}

}  // namespace cohtele
