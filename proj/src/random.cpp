#include "cohtele/random.hpp"

#include <algorithm>
#include <numbers>

namespace cohtele {

namespace {
Mat ginibre(int d, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = cx(normal(rng), normal(rng));
    return m;
}
}  // namespace

Mat random_unitary(int d, Rng& rng) {
    Eigen::HouseholderQR<Mat> qr(ginibre(d, rng));
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases so the distribution is Haar.
    for (int i = 0; i < d; ++i) {
        cx diag = r(i, i);
        q.col(i) *= diag / std::abs(diag);
    }
    return q;
}

DensityMatrix random_density(int d, Rng& rng) {
    Mat a = ginibre(d, rng);
    Mat m = a * a.adjoint();
    m /= m.trace();
    m = (Mat(0.5 * (m + m.adjoint().eval()))).eval();  // scrub roundoff skew
    std::vector<int> dims;
    for (int n = d; n > 1; n /= 2) dims.push_back(2);
    if (dims.empty()) dims.push_back(d);
    return DensityMatrix::make(std::move(m), std::move(dims));
}

PureQubit random_pure_qubit(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return PureQubit{u(rng) * std::numbers::pi, u(rng) * 2.0 * std::numbers::pi};
}

MemsParams random_mems(Rng& rng, bool p4_zero) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 4> p{u(rng), u(rng), u(rng), p4_zero ? 0.0 : u(rng)};
    double sum = p[0] + p[1] + p[2] + p[3];
    for (double& v : p) v /= sum;
    std::sort(p.begin(), p.end(), std::greater<>());
    // Re-pin the exact sum after rounding.
    p[0] += 1.0 - (p[0] + p[1] + p[2] + p[3]);
    return MemsParams{p[0], p[1], p[2], p[3]};
}

cx random_n(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
    return std::polar(mag(rng), arg(rng));
}

}  // namespace cohtele
