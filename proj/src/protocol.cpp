#include "cohtele/protocol.hpp"

#include <cmath>
#include <numbers>

#include "cohtele/errors.hpp"

namespace cohtele {

namespace {

Mat proj(const Vec& v) { return v * v.adjoint(); }

PovmElement element(Mat m, CaseId c, ResourceFamily f, int outcome,
                    std::optional<cx> n) {
    return PovmElement{std::move(m), c, f, outcome, n};
}

}  // namespace

BobUnitary BobUnitary::make(cx a, cx b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
        throw validation_error("BobUnitary: |a|^2 + |b|^2 != 1");
    return BobUnitary{a, b};
}

Mat BobUnitary::matrix() const {
    Mat u(2, 2);
    u << a, b, -std::conj(b), std::conj(a);
    return u;
}

std::array<PovmElement, 2> povm_catalog(CaseId case_id, ResourceFamily family,
                                        std::optional<cx> n) {
    if (family == ResourceFamily::nonmax) {
        if (!n) throw validation_error("povm_catalog: nonmax family requires n");
        auto basis = n_basis(*n);
        const Mat phi_p = proj(basis[0]), phi_m = proj(basis[1]);
        const Mat psi_p = proj(basis[2]), psi_m = proj(basis[3]);
        switch (case_id) {
            case CaseId::I:
                return {element(phi_p + psi_m, case_id, family, 0, n),
                        element(phi_m + psi_p, case_id, family, 1, n)};
            case CaseId::II:
                return {element(phi_p + psi_p, case_id, family, 0, n),
                        element(phi_m + psi_m, case_id, family, 1, n)};
            case CaseId::III:
                return {element(phi_p + phi_m, case_id, family, 0, n),
                        element(psi_p + psi_m, case_id, family, 1, n)};
        }
    }

    const Mat phi_p = proj(bell_vector(Bell::PhiPlus));
    const Mat phi_m = proj(bell_vector(Bell::PhiMinus));
    const Mat psi_p = proj(bell_vector(Bell::PsiPlus));
    const Mat psi_m = proj(bell_vector(Bell::PsiMinus));

    if (family == ResourceFamily::mems || family == ResourceFamily::werner) {
        // Those resources are paired with the Case I projector sums only.
        if (case_id != CaseId::I)
            throw validation_error("povm_catalog: mems/werner use the Case I pairing");
        return {element(phi_p + psi_p, case_id, family, 0, std::nullopt),
                element(phi_m + psi_m, case_id, family, 1, std::nullopt)};
    }

    switch (case_id) {
        case CaseId::I:
            return {element(phi_p + psi_p, case_id, family, 0, std::nullopt),
                    element(phi_m + psi_m, case_id, family, 1, std::nullopt)};
        case CaseId::II:
            return {element(phi_p + psi_m, case_id, family, 0, std::nullopt),
                    element(phi_m + psi_p, case_id, family, 1, std::nullopt)};
        case CaseId::III:
            return {element(phi_p + phi_m, case_id, family, 0, std::nullopt),
                    element(psi_p + psi_m, case_id, family, 1, std::nullopt)};
    }
    throw validation_error("povm_catalog: unknown case");
}

TeleportOutcome teleport_direct(const DensityMatrix& rho_in,
                                const DensityMatrix& tau,
                                const PovmElement& e) {
    if (rho_in.dim() != 2 || tau.dim() != 4 || e.mat.rows() != 4)
        throw dimension_error("teleport_direct: expected 2x2 input, 4x4 resource/POVM");
    // Every catalog element is a projector; fall back to the PSD square
    // root for user-supplied POVMs.
    const bool projector = max_abs(e.mat * e.mat - e.mat) < kHermTol;
    const Mat sqrt_e = projector ? e.mat : psd_sqrt(e.mat);
    const Mat big = tensor(rho_in.mat, tau.mat);
    const Mat meas = tensor(sqrt_e, identity(2));
    const Mat unnormalized = meas * big * meas;
    const Mat bob_raw = partial_trace(unnormalized, {2, 2, 2}, {2});
    const double probability = unnormalized.trace().real();
    if (probability < 1e-12)
        throw degenerate_outcome("teleport_direct: zero-probability outcome",
                                 probability);
    DensityMatrix bob = DensityMatrix::make(bob_raw / probability, {2});
    TeleportOutcome out;
    out.probability = probability;
    out.coherence_in = l1_coherence(rho_in);
    out.coherence_out = l1_coherence(bob);
    out.bob_state = std::move(bob);
    out.route = Route::direct;
    return out;
}

TeleportOutcome teleport_via_theorem(const DensityMatrix& rho_in,
                                     const DensityMatrix& tau,
                                     const PovmElement& e) {
    if (rho_in.dim() != 2 || tau.dim() != 4 || e.mat.rows() != 4)
        throw dimension_error("teleport_via_theorem: expected 2x2 input, 4x4 resource/POVM");
    const KrausMap t_map = map_of_choi(ChoiMatrix{tau.mat, 2, 2});
    const KrausMap phi_e = map_of_choi(ChoiMatrix{e.mat, 2, 2});
    const KrausMap composed = compose(t_map, conjugate_map(phi_e));
    const Mat bob_raw = apply_map(composed, rho_in.mat);
    const double probability = bob_raw.trace().real();
    if (probability < 1e-12)
        throw degenerate_outcome("teleport_via_theorem: zero-probability outcome",
                                 probability);
    DensityMatrix bob = DensityMatrix::make(bob_raw / probability, {2});
    TeleportOutcome out;
    out.probability = probability;
    out.coherence_in = l1_coherence(rho_in);
    out.coherence_out = l1_coherence(bob);
    out.bob_state = std::move(bob);
    out.route = Route::theorem;
    return out;
}

double coherence_formula(CaseId case_id, ResourceFamily family, int outcome,
                         const ProtocolParams& p) {
    if (outcome != 0 && outcome != 1)
        throw validation_error("coherence_formula: outcome must be 0 or 1");
    const double theta = p.theta, phi = p.phi;
    const cx alpha = PureQubit{theta, phi}.alpha();
    const cx beta = PureQubit{theta, phi}.beta();
    const double m = std::norm(p.n);  // |n|^2
    const double a2 = std::norm(alpha), b2 = std::norm(beta);

    switch (family) {
        case ResourceFamily::maxent:
            switch (case_id) {
                case CaseId::I:
                    return std::abs(std::cos(phi) * std::sin(theta));
                case CaseId::II:
                    return std::abs(2.0 * std::sin(phi) * std::cos(theta / 2.0) *
                                    std::sin(theta / 2.0));
                case CaseId::III:
                    return 0.0;
            }
            break;
        case ResourceFamily::nonmax:
            switch (case_id) {
                case CaseId::I: {
                    const double im = std::abs(std::imag(alpha * std::conj(beta)));
                    return outcome == 0 ? 4.0 * m / (1.0 + m * m) * im : 2.0 * im;
                }
                case CaseId::II: {
                    const double re = std::abs(std::real(alpha * std::conj(beta)));
                    const double denom = outcome == 0 ? a2 + b2 * m : a2 * m + b2;
                    return 4.0 * m / ((1.0 + m) * denom) * re;
                }
                case CaseId::III:
                    return 0.0;
            }
            break;
        case ResourceFamily::mems: {
            const MemsParams& q = p.mems;
            return 4.0 * std::abs(q.p1 - q.p3) / (1.0 + q.p1 + q.p3) *
                   std::abs(std::real(p.rho01));
        }
        case ResourceFamily::werner:
            return 2.0 * p.werner_p / (1.0 + p.werner_p) *
                   std::abs(2.0 * std::real(p.rho01));
    }
    throw validation_error("coherence_formula: unknown case");
}

double probability_formula(CaseId case_id, ResourceFamily family, int outcome,
                           const ProtocolParams& p) {
    if (outcome != 0 && outcome != 1)
        throw validation_error("probability_formula: outcome must be 0 or 1");
    if (family != ResourceFamily::nonmax) return 0.5;
    const cx alpha = PureQubit{p.theta, p.phi}.alpha();
    const cx beta = PureQubit{p.theta, p.phi}.beta();
    const double m = std::norm(p.n);
    const double a2 = std::norm(alpha), b2 = std::norm(beta);
    switch (case_id) {
        case CaseId::I:
            return outcome == 0 ? (1.0 + m * m) / ((1.0 + m) * (1.0 + m))
                                : 2.0 * m / ((1.0 + m) * (1.0 + m));
        case CaseId::II:
        case CaseId::III:
            return outcome == 0 ? (a2 + b2 * m) / (1.0 + m)
                                : (a2 * m + b2) / (1.0 + m);
    }
    throw validation_error("probability_formula: unknown case");
}

bool probability_from_paper(ResourceFamily family) {
    return family == ResourceFamily::nonmax;
}

double bob_unitary_coherence(const TeleportOutcome& outcome, const BobUnitary& u) {
    const Mat m = u.matrix();
    return l1_coherence(
        DensityMatrix::make(m * outcome.bob_state.mat * m.adjoint(), {2}));
}

double bell_decomposition_check(const PureQubit& q) {
    const Vec psi = q.amplitudes();
    Vec lhs = Vec::Zero(8);
    const Vec phi_plus = bell_vector(Bell::PhiPlus);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) lhs(i * 4 + j) = psi(i) * phi_plus(j);

    const std::array<Bell, 4> bells = {Bell::PhiPlus, Bell::PhiMinus,
                                       Bell::PsiPlus, Bell::PsiMinus};
    const std::array<Mat, 4> unitaries = {identity(2), pauli_z(), pauli_x(),
                                          cx(0.0, -1.0) * pauli_y()};
    Vec rhs = Vec::Zero(8);
    for (int k = 0; k < 4; ++k) {
        const Vec b = bell_vector(bells[k]);
        const Vec rotated = unitaries[k] * psi;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) rhs(i * 2 + j) += 0.5 * b(i) * rotated(j);
    }
    return (lhs - rhs).norm();
}

BobUnitary haar_su2(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double eta = std::acos(std::sqrt(u(rng)));
    const double chi1 = 2.0 * std::numbers::pi * u(rng);
    const double chi2 = 2.0 * std::numbers::pi * u(rng);
    return BobUnitary{std::polar(std::cos(eta), chi1),
                      std::polar(std::sin(eta), chi2)};
}

DensityMatrix resource_state(ResourceFamily family, const ProtocolParams& p) {
    switch (family) {
        case ResourceFamily::maxent:
            return bell_state(Bell::PhiPlus);
        case ResourceFamily::nonmax: {
            const Vec v = n_basis(p.n)[0];
            return DensityMatrix::make(v * v.adjoint(), {2, 2});
        }
        case ResourceFamily::mems:
            return mems_state(p.mems, /*enforce_order=*/false);
        case ResourceFamily::werner:
            return werner_state(p.werner_p);
    }
    throw validation_error("resource_state: unknown family");
}

}  // namespace cohtele
