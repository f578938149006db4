#include "cohtele/verify.hpp"

#include <cmath>
#include <numbers>

#include "cohtele/errors.hpp"
#include "cohtele/protocol.hpp"

namespace cohtele {

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    std::string name;
    double tolerance;
    double max_dev = 0.0;

    void record(double dev) { max_dev = std::max(max_dev, dev); }
    CheckResult result() const {
        return CheckResult{name, max_dev <= tolerance, max_dev, tolerance};
    }
};

double frob(const Mat& a, const Mat& b) { return (a - b).norm(); }

DensityMatrix random_input(Rng& rng) { return random_density(2, rng); }

std::array<PovmElement, 2> random_projective_povm(Rng& rng) {
    const Mat u = random_unitary(4, rng);
    Mat p0 = Mat::Zero(4, 4), p1 = Mat::Zero(4, 4);
    for (int k = 0; k < 2; ++k) p0 += u.col(k) * u.col(k).adjoint();
    for (int k = 2; k < 4; ++k) p1 += u.col(k) * u.col(k).adjoint();
    return {PovmElement{p0, CaseId::I, ResourceFamily::maxent, 0, std::nullopt},
            PovmElement{p1, CaseId::I, ResourceFamily::maxent, 1, std::nullopt}};
}

KrausMap random_kraus(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Mat> ops;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Mat op(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) op(r, c) = cx(normal(rng), normal(rng));
        ops.push_back(0.3 * op);
    }
    return KrausMap::make(std::move(ops));
}

void compare_routes(Check& prob_check, Check& state_check,
                    const DensityMatrix& rho, const DensityMatrix& tau,
                    const PovmElement& e) {
    TeleportOutcome direct, theorem;
    try {
        direct = teleport_direct(rho, tau, e);
        theorem = teleport_via_theorem(rho, tau, e);
    } catch (const degenerate_outcome&) {
        return;  // both routes undefined at probability zero
    }
    prob_check.record(std::abs(direct.probability - theorem.probability));
    state_check.record(frob(direct.bob_state.mat, theorem.bob_state.mat));
}

VerificationReport suite_theorem(std::uint64_t seed) {
    Rng rng(seed);
    VerificationReport report{"theorem", {}};

    Check prob{"route equivalence: probability", 1e-9};
    Check state{"route equivalence: bob state", 1e-9};
    const std::array<CaseId, 3> cases = {CaseId::I, CaseId::II, CaseId::III};
    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = random_input(rng);
        ProtocolParams p;
        p.n = random_n(rng);
        p.mems = random_mems(rng);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        p.werner_p = u(rng);
        for (CaseId c : cases) {
            for (const auto& e : povm_catalog(c, ResourceFamily::maxent))
                compare_routes(prob, state, rho,
                               resource_state(ResourceFamily::maxent, p), e);
            for (const auto& e : povm_catalog(c, ResourceFamily::nonmax, p.n))
                compare_routes(prob, state, rho,
                               resource_state(ResourceFamily::nonmax, p), e);
        }
        for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::mems))
            compare_routes(prob, state, rho,
                           resource_state(ResourceFamily::mems, p), e);
        for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::werner))
            compare_routes(prob, state, rho,
                           resource_state(ResourceFamily::werner, p), e);
        const DensityMatrix tau = random_density(4, rng);
        for (const auto& e : random_projective_povm(rng))
            compare_routes(prob, state, rho, tau, e);
    }
    report.checks.push_back(prob.result());
    report.checks.push_back(state.result());

    Check round_trip{"CJKS round trip: Choi fixed point", 1e-9};
    Check channel{"CJKS round trip: induced channel", 1e-9};
    for (int rep = 0; rep < 50; ++rep) {
        const KrausMap m = random_kraus(rng);
        const ChoiMatrix choi = choi_of_map(m);
        const KrausMap recovered = map_of_choi(choi);
        round_trip.record(frob(choi_of_map(recovered).mat, choi.mat));
        for (int s = 0; s < 20; ++s) {
            const Mat rho = random_density(2, rng).mat;
            channel.record(frob(apply_map(m, rho), apply_map(recovered, rho)));
        }
    }
    report.checks.push_back(round_trip.result());
    report.checks.push_back(channel.result());

    Check transpose{"transpose-map Choi rejected, min eigenvalue -1", 1e-10};
    Mat swap = Mat::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            swap += tensor(matrix_unit(2, i, j), matrix_unit(2, j, i));
    bool rejected = false;
    double min_eig = 0.0;
    try {
        map_of_choi(ChoiMatrix{swap, 2, 2});
    } catch (const not_completely_positive& err) {
        rejected = true;
        min_eig = err.min_eigenvalue;
    }
    transpose.record(rejected ? std::abs(min_eig + 1.0) : 1.0);
    report.checks.push_back(transpose.result());
    return report;
}

VerificationReport suite_formulas(std::uint64_t seed) {
    Rng rng(seed + 1);
    VerificationReport report{"formulas", {}};

    Check case1{"maxent Case I coherence = |cos(phi) sin(theta)|", 1e-10};
    Check case2{"maxent Case II coherence = |2 sin(phi) cos(t/2) sin(t/2)|", 1e-10};
    Check case3{"maxent Case III bob state diagonal (coherence = 0)", 1e-12};
    const DensityMatrix phi_plus = bell_state(Bell::PhiPlus);
    for (int it = 0; it < 16; ++it) {
        for (int ip = 0; ip < 16; ++ip) {
            const double theta = kPi * it / 15.0;
            const double phi = 2.0 * kPi * ip / 16.0;
            const DensityMatrix rho = pure_qubit_density({theta, phi});
            const ProtocolParams params{theta, phi};
            for (int outcome = 0; outcome < 2; ++outcome) {
                auto e1 = povm_catalog(CaseId::I, ResourceFamily::maxent)[outcome];
                case1.record(std::abs(
                    teleport_direct(rho, phi_plus, e1).coherence_out -
                    coherence_formula(CaseId::I, ResourceFamily::maxent, outcome, params)));
                auto e2 = povm_catalog(CaseId::II, ResourceFamily::maxent)[outcome];
                case2.record(std::abs(
                    teleport_direct(rho, phi_plus, e2).coherence_out -
                    coherence_formula(CaseId::II, ResourceFamily::maxent, outcome, params)));
                auto e3 = povm_catalog(CaseId::III, ResourceFamily::maxent)[outcome];
                case3.record(teleport_direct(rho, phi_plus, e3).coherence_out);
            }
        }
    }
    report.checks.push_back(case1.result());
    report.checks.push_back(case2.result());
    report.checks.push_back(case3.result());

    Check nm_prob{"nonmax outcome probabilities", 1e-10};
    Check nm_coh{"nonmax coherences (Cases I and II)", 1e-10};
    Check nm_diag{"nonmax Case III coherence = 0", 1e-12};
    Check nm_sum{"nonmax outcome probabilities sum to 1", 1e-10};
    for (int rep = 0; rep < 8; ++rep) {
        ProtocolParams params;
        params.n = random_n(rng);
        const DensityMatrix tau = resource_state(ResourceFamily::nonmax, params);
        for (int it = 0; it < 8; ++it) {
            for (int ip = 0; ip < 8; ++ip) {
                params.theta = kPi * (it + 0.5) / 8.0;
                params.phi = 2.0 * kPi * ip / 8.0;
                const DensityMatrix rho =
                    pure_qubit_density({params.theta, params.phi});
                for (CaseId c : {CaseId::I, CaseId::II, CaseId::III}) {
                    double psum = 0.0;
                    for (int outcome = 0; outcome < 2; ++outcome) {
                        auto e = povm_catalog(c, ResourceFamily::nonmax, params.n)[outcome];
                        const TeleportOutcome res = teleport_direct(rho, tau, e);
                        psum += res.probability;
                        nm_prob.record(std::abs(
                            res.probability -
                            probability_formula(c, ResourceFamily::nonmax, outcome, params)));
                        const double formula = coherence_formula(
                            c, ResourceFamily::nonmax, outcome, params);
                        if (c == CaseId::III)
                            nm_diag.record(res.coherence_out);
                        else
                            nm_coh.record(std::abs(res.coherence_out - formula));
                    }
                    nm_sum.record(std::abs(psum - 1.0));
                }
            }
        }
    }
    report.checks.push_back(nm_prob.result());
    report.checks.push_back(nm_coh.result());
    report.checks.push_back(nm_diag.result());
    report.checks.push_back(nm_sum.result());

    Check mixed{"mixed input: coherence = |rho01 + rho10|", 1e-12};
    for (int rep = 0; rep < 50; ++rep) {
        const DensityMatrix rho = random_input(rng);
        for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::maxent)) {
            const TeleportOutcome res = teleport_direct(rho, phi_plus, e);
            mixed.record(std::abs(res.coherence_out -
                                  std::abs(rho.mat(0, 1) + rho.mat(1, 0))));
        }
    }
    report.checks.push_back(mixed.result());

    Check circles{"perfect teleportation on the special circles", 1e-10};
    for (int it = 0; it < 64; ++it) {
        const double theta = kPi * it / 63.0;
        for (double phi : {0.0, kPi}) {
            const DensityMatrix rho = pure_qubit_density({theta, phi});
            for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::maxent)) {
                const TeleportOutcome res = teleport_direct(rho, phi_plus, e);
                circles.record(std::abs(res.coherence_out - res.coherence_in));
            }
        }
        for (double phi : {kPi / 2.0, 3.0 * kPi / 2.0}) {
            const DensityMatrix rho = pure_qubit_density({theta, phi});
            for (const auto& e : povm_catalog(CaseId::II, ResourceFamily::maxent)) {
                const TeleportOutcome res = teleport_direct(rho, phi_plus, e);
                circles.record(std::abs(res.coherence_out - res.coherence_in));
            }
        }
    }
    report.checks.push_back(circles.result());
    return report;
}

VerificationReport suite_basis(std::uint64_t seed) {
    Rng rng(seed + 2);
    VerificationReport report{"basis", {}};

    Check gram{"n-basis Gram matrix = I", 1e-12};
    std::uniform_real_distribution<double> mag(0.0, 10.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * kPi);
    for (int rep = 0; rep < 100; ++rep) {
        const cx n = std::polar(mag(rng), arg(rng));
        const auto basis = n_basis(n);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const cx inner = basis[i].dot(basis[j]);
                gram.record(std::abs(inner - (i == j ? cx(1.0) : cx(0.0))));
            }
    }
    report.checks.push_back(gram.result());

    Check bell{"Bell states pairwise orthonormal", 1e-12};
    const std::array<Bell, 4> labels = {Bell::PhiPlus, Bell::PhiMinus,
                                        Bell::PsiPlus, Bell::PsiMinus};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cx inner = bell_vector(labels[i]).dot(bell_vector(labels[j]));
            bell.record(std::abs(inner - (i == j ? cx(1.0) : cx(0.0))));
        }
    report.checks.push_back(bell.result());

    Check decomposition{"Bell decomposition residual", 1e-12};
    for (int rep = 0; rep < 100; ++rep)
        decomposition.record(bell_decomposition_check(random_pure_qubit(rng)));
    report.checks.push_back(decomposition.result());
    return report;
}

VerificationReport suite_bounds(std::uint64_t seed) {
    Rng rng(seed + 3);
    VerificationReport report{"bounds", {}};

    Check mems_bound{"MEMS bound C_out <= 2C/(1+C) C_in (p4 = 0)", 1e-10};
    for (int rep = 0; rep < 1000; ++rep) {
        ProtocolParams params;
        params.mems = random_mems(rng, /*p4_zero=*/true);
        const DensityMatrix tau = resource_state(ResourceFamily::mems, params);
        const double conc = concurrence(tau);
        const DensityMatrix rho = random_input(rng);
        for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::mems)) {
            const TeleportOutcome res = teleport_direct(rho, tau, e);
            const double bound = 2.0 * conc / (1.0 + conc) * res.coherence_in;
            mems_bound.record(std::max(0.0, res.coherence_out - bound));
        }
    }
    report.checks.push_back(mems_bound.result());

    Check contraction{"mixed input: C_out <= C_in", 1e-12};
    Check equality{"mixed input: equality for real states", 1e-12};
    const DensityMatrix phi_plus = bell_state(Bell::PhiPlus);
    for (int rep = 0; rep < 200; ++rep) {
        const DensityMatrix rho = random_input(rng);
        Mat real_mat = rho.mat.real().cast<cx>();
        real_mat /= real_mat.trace();
        const DensityMatrix rho_real = DensityMatrix::make(real_mat, {2});
        for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::maxent)) {
            const TeleportOutcome res = teleport_direct(rho, phi_plus, e);
            contraction.record(std::max(0.0, res.coherence_out - res.coherence_in));
            const TeleportOutcome real_res = teleport_direct(rho_real, phi_plus, e);
            equality.record(std::abs(real_res.coherence_out - real_res.coherence_in));
        }
    }
    report.checks.push_back(contraction.result());
    report.checks.push_back(equality.result());

    Check separable{"Werner: separable resource still teleports coherence", 0.0};
    const DensityMatrix plus = pure_qubit_density({kPi / 2.0, 0.0});
    for (int k = 1; k <= 8; ++k) {
        const double p = k / 24.0;  // (0, 1/3]
        ProtocolParams params;
        params.werner_p = p;
        const DensityMatrix tau = resource_state(ResourceFamily::werner, params);
        const bool sep = concurrence(tau) <= 1e-10 &&
                         min_partial_transpose_eig(tau) >= -kEigClampTol;
        const TeleportOutcome res = teleport_direct(
            plus, tau, povm_catalog(CaseId::I, ResourceFamily::werner)[0]);
        separable.record((sep && res.coherence_out > 1e-6) ? 0.0 : 1.0);
    }
    report.checks.push_back(separable.result());

    Check ceiling_point{"Bob unitary coherence matches closed form", 1e-10};
    Check ceiling_max{"Bob unitary supremum = 2|Re(alpha beta*)|", 1e-4};
    for (int rep = 0; rep < 10; ++rep) {
        const PureQubit q = random_pure_qubit(rng);
        const DensityMatrix rho = pure_qubit_density(q);
        const TeleportOutcome res = teleport_direct(
            rho, phi_plus, povm_catalog(CaseId::I, ResourceFamily::maxent)[0]);
        const double target =
            2.0 * std::abs(std::real(q.alpha() * std::conj(q.beta())));
        if (target < 1e-3) continue;  // supremum check is relative
        double best = 0.0;
        for (int s = 0; s < 2000; ++s) {
            const BobUnitary u = haar_su2(rng);
            const double c = bob_unitary_coherence(res, u);
            const double closed =
                target * std::sqrt(std::max(
                             0.0, 1.0 - std::pow(2.0 * std::real(u.a * std::conj(u.b)), 2)));
            ceiling_point.record(std::abs(c - closed));
            best = std::max(best, c);
        }
        ceiling_max.record(std::abs(best - target) / std::max(target, 1e-12));
    }
    report.checks.push_back(ceiling_point.result());
    report.checks.push_back(ceiling_max.result());
    return report;
}

}  // namespace

VerificationReport verify_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "theorem") return suite_theorem(seed);
    if (suite == "formulas") return suite_formulas(seed);
    if (suite == "basis") return suite_basis(seed);
    if (suite == "bounds") return suite_bounds(seed);
    throw validation_error("verify_suite: unknown suite '" + suite + "'");
}

std::vector<VerificationReport> verify_all(std::uint64_t seed) {
    return {verify_suite("theorem", seed), verify_suite("formulas", seed),
            verify_suite("basis", seed), verify_suite("bounds", seed)};
}

}  // namespace cohtele
