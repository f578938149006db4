#include <doctest.h>

#include <numbers>

#include "cohtele/errors.hpp"
#include "cohtele/protocol.hpp"

using namespace cohtele;

namespace {
constexpr double kPi = std::numbers::pi;

const DensityMatrix& phi_plus() {
    static const DensityMatrix tau = bell_state(Bell::PhiPlus);
    return tau;
}
}  // namespace

TEST_CASE("catalog POVMs are complete projector pairs") {
    Rng rng(41);
    auto check_pair = [](const std::array<PovmElement, 2>& pair) {
        CHECK(max_abs(pair[0].mat + pair[1].mat - identity(4)) < 1e-12);
        for (const auto& e : pair) {
            CHECK(is_hermitian(e.mat));
            CHECK(max_abs(e.mat * e.mat - e.mat) < 1e-10);
            CHECK(herm_eig(e.mat).eigenvalues.minCoeff() >= -1e-10);
        }
    };
    for (CaseId c : {CaseId::I, CaseId::II, CaseId::III}) {
        check_pair(povm_catalog(c, ResourceFamily::maxent));
        check_pair(povm_catalog(c, ResourceFamily::nonmax, random_n(rng)));
    }
    check_pair(povm_catalog(CaseId::I, ResourceFamily::mems));
    check_pair(povm_catalog(CaseId::I, ResourceFamily::werner));
    CHECK_THROWS_AS(povm_catalog(CaseId::I, ResourceFamily::nonmax), validation_error);
    CHECK_THROWS_AS(povm_catalog(CaseId::II, ResourceFamily::werner), validation_error);
}

TEST_CASE("maxent Case III element 0 projects onto span{|00>, |11>}") {
    const auto pair = povm_catalog(CaseId::III, ResourceFamily::maxent);
    Mat expected = matrix_unit(4, 0, 0) + matrix_unit(4, 3, 3);
    CHECK(max_abs(pair[0].mat - expected) < 1e-14);
}

TEST_CASE("nonmax catalog at n = 1 induces the same outcomes as a maxent catalog") {
    // {Phi_n+ + Psi_n-, ...} at n = 1 matches the maxent Case II pairing
    Rng rng(43);
    const auto nm = povm_catalog(CaseId::I, ResourceFamily::nonmax, cx(1.0, 0.0));
    const auto me = povm_catalog(CaseId::II, ResourceFamily::maxent);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        for (int outcome = 0; outcome < 2; ++outcome) {
            const auto a = teleport_direct(rho, phi_plus(), nm[outcome]);
            const auto b = teleport_direct(rho, phi_plus(), me[outcome]);
            CHECK(std::abs(a.probability - b.probability) < 1e-12);
            CHECK((a.bob_state.mat - b.bob_state.mat).norm() < 1e-12);
        }
    }
}

TEST_CASE("maxent Case I teleportation of |+> and of the polar state") {
    const auto e0 = povm_catalog(CaseId::I, ResourceFamily::maxent)[0];
    const auto plus = teleport_direct(pure_qubit_density({kPi / 2.0, 0.0}), phi_plus(), e0);
    CHECK(plus.probability == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(plus.coherence_out == doctest::Approx(1.0).epsilon(1e-13));

    const auto polar =
        teleport_direct(pure_qubit_density({kPi / 2.0, kPi / 2.0}), phi_plus(), e0);
    CHECK(polar.coherence_out < 1e-12);
}

TEST_CASE("maxent Case III always erases the off-diagonal part") {
    // Outcome 0 keeps the populations, outcome 1 swaps them; either way the
    // output is incoherent and equals I/2 only for balanced inputs.
    Rng rng(47);
    const auto pair = povm_catalog(CaseId::III, ResourceFamily::maxent);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        const auto res0 = teleport_direct(rho, phi_plus(), pair[0]);
        const auto res1 = teleport_direct(rho, phi_plus(), pair[1]);
        CHECK(res0.coherence_out < 1e-12);
        CHECK(res1.coherence_out < 1e-12);
        CHECK(std::abs(res0.bob_state.mat(0, 0) - rho.mat(0, 0)) < 1e-12);
        CHECK(std::abs(res1.bob_state.mat(0, 0) - rho.mat(1, 1)) < 1e-12);
    }
    const auto balanced = teleport_direct(pure_qubit_density({kPi / 2.0, 0.7}),
                                          phi_plus(), pair[0]);
    CHECK((balanced.bob_state.mat - 0.5 * identity(2)).norm() < 1e-12);
}

TEST_CASE("nonmax Case I at n = 2 reproduces the closed-form numbers") {
    ProtocolParams p;
    p.theta = kPi / 2.0;
    p.phi = kPi / 2.0;
    p.n = cx(2.0, 0.0);
    const DensityMatrix rho = pure_qubit_density({p.theta, p.phi});
    const DensityMatrix tau = resource_state(ResourceFamily::nonmax, p);
    const auto e0 = povm_catalog(CaseId::I, ResourceFamily::nonmax, p.n)[0];
    const auto res = teleport_direct(rho, tau, e0);
    CHECK(res.probability == doctest::Approx(0.68).epsilon(1e-12));
    CHECK(res.coherence_out == doctest::Approx(8.0 / 17.0).epsilon(1e-12));
}

TEST_CASE("outcome probabilities sum to one") {
    Rng rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        const cx n = random_n(rng);
        const Vec v = n_basis(n)[0];
        const DensityMatrix tau = DensityMatrix::make(v * v.adjoint(), {2, 2});
        for (CaseId c : {CaseId::I, CaseId::II, CaseId::III}) {
            const auto pair = povm_catalog(c, ResourceFamily::nonmax, n);
            const double p0 = teleport_direct(rho, tau, pair[0]).probability;
            const double p1 = teleport_direct(rho, tau, pair[1]).probability;
            CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("theorem route agrees with the direct route on the catalogs") {
    Rng rng(59);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        ProtocolParams p;
        p.n = random_n(rng);
        p.mems = random_mems(rng);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        p.werner_p = u(rng);
        struct Combo {
            ResourceFamily family;
            CaseId c;
        };
        const std::vector<Combo> combos = {
            {ResourceFamily::maxent, CaseId::I}, {ResourceFamily::maxent, CaseId::II},
            {ResourceFamily::maxent, CaseId::III}, {ResourceFamily::nonmax, CaseId::I},
            {ResourceFamily::nonmax, CaseId::II}, {ResourceFamily::nonmax, CaseId::III},
            {ResourceFamily::mems, CaseId::I}, {ResourceFamily::werner, CaseId::I}};
        for (const auto& combo : combos) {
            std::optional<cx> n;
            if (combo.family == ResourceFamily::nonmax) n = p.n;
            const DensityMatrix tau = resource_state(combo.family, p);
            for (const auto& e : povm_catalog(combo.c, combo.family, n)) {
                const auto direct = teleport_direct(rho, tau, e);
                const auto theorem = teleport_via_theorem(rho, tau, e);
                CHECK(std::abs(direct.probability - theorem.probability) < 1e-9);
                CHECK((direct.bob_state.mat - theorem.bob_state.mat).norm() < 1e-9);
            }
        }
    }
}

TEST_CASE("theorem route reproduces the mixed-input maps") {
    Rng rng(61);
    const auto pair = povm_catalog(CaseId::I, ResourceFamily::maxent);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        // outcome 0: bob proportional to rho + sx rho sx
        const auto res0 = teleport_via_theorem(rho, phi_plus(), pair[0]);
        Mat expected = rho.mat + pauli_x() * rho.mat * pauli_x();
        expected /= expected.trace();
        CHECK((res0.bob_state.mat - expected).norm() < 1e-12);
        // outcome 1: bob proportional to sz rho sz + sy rho sy
        const auto res1 = teleport_via_theorem(rho, phi_plus(), pair[1]);
        expected = pauli_z() * rho.mat * pauli_z() + pauli_y() * rho.mat * pauli_y();
        expected /= expected.trace();
        CHECK((res1.bob_state.mat - expected).norm() < 1e-12);
    }
}

TEST_CASE("coherence formula evaluators") {
    ProtocolParams p;
    p.theta = kPi / 3.0;
    p.phi = kPi / 3.0;
    CHECK(coherence_formula(CaseId::I, ResourceFamily::maxent, 0, p) ==
          doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-14));

    ProtocolParams w;
    w.werner_p = 1.0 / 3.0;
    w.rho01 = cx(0.5, 0.0);
    CHECK(coherence_formula(CaseId::I, ResourceFamily::werner, 0, w) ==
          doctest::Approx(0.5).epsilon(1e-14));

    ProtocolParams m;
    m.mems = MemsParams{0.5, 0.3, 0.2, 0.0};
    m.rho01 = cx(0.5, 0.0);
    CHECK(coherence_formula(CaseId::I, ResourceFamily::mems, 0, m) ==
          doctest::Approx(6.0 / 17.0).epsilon(1e-14));
}

TEST_CASE("probability formula evaluators") {
    ProtocolParams p;
    p.n = cx(2.0, 0.0);
    CHECK(probability_formula(CaseId::I, ResourceFamily::nonmax, 0, p) ==
          doctest::Approx(17.0 / 25.0).epsilon(1e-14));
    Rng rng(67);
    for (int rep = 0; rep < 10; ++rep) {
        p.n = random_n(rng);
        const double sum = probability_formula(CaseId::I, ResourceFamily::nonmax, 0, p) +
                           probability_formula(CaseId::I, ResourceFamily::nonmax, 1, p);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    }
    p.n = cx(1.0, 0.0);
    p.theta = kPi / 2.0;
    CHECK(probability_formula(CaseId::II, ResourceFamily::nonmax, 0, p) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(probability_formula(CaseId::I, ResourceFamily::maxent, 0, p) == 0.5);
    CHECK(probability_from_paper(ResourceFamily::nonmax));
    CHECK_FALSE(probability_from_paper(ResourceFamily::maxent));
}

TEST_CASE("Bob-side unitary rotations") {
    const PureQubit q{0.9, 0.7};
    const auto res = teleport_direct(pure_qubit_density(q), phi_plus(),
                                     povm_catalog(CaseId::I, ResourceFamily::maxent)[0]);
    const double target = 2.0 * std::abs(std::real(q.alpha() * std::conj(q.beta())));

    CHECK(bob_unitary_coherence(res, BobUnitary::make(cx(1.0), cx(0.0))) ==
          doctest::Approx(res.coherence_out).epsilon(1e-13));

    // Re(a b*) = 0 realizes the ceiling 2|Re(alpha beta*)|
    const BobUnitary tilt = BobUnitary::make(cx(std::cos(0.3), 0.0),
                                             cx(0.0, std::sin(0.3)));
    CHECK(bob_unitary_coherence(res, tilt) == doctest::Approx(target).epsilon(1e-12));

    Rng rng(71);
    double best = 0.0;
    for (int s = 0; s < 10000; ++s)
        best = std::max(best, bob_unitary_coherence(res, haar_su2(rng)));
    CHECK(best <= target + 1e-9);
    CHECK(best > target * (1.0 - 1e-4));
    // strictly below the input coherence away from the equatorial circle
    CHECK(best < res.coherence_in);

    CHECK_THROWS_AS(BobUnitary::make(cx(1.0), cx(1.0)), validation_error);
}

TEST_CASE("Bell decomposition residual vanishes") {
    CHECK(bell_decomposition_check({0.0, 0.0}) < 1e-12);
    CHECK(bell_decomposition_check({kPi / 2.0, 0.0}) < 1e-12);
    Rng rng(73);
    for (int rep = 0; rep < 100; ++rep)
        CHECK(bell_decomposition_check(random_pure_qubit(rng)) < 1e-12);
}

TEST_CASE("zero-probability outcomes raise a degenerate-outcome error") {
    // n = 0 with a |0> input makes the f-case outcome 1 impossible
    ProtocolParams p;
    p.n = cx(0.0, 0.0);
    const DensityMatrix tau = resource_state(ResourceFamily::nonmax, p);
    const auto e1 = povm_catalog(CaseId::III, ResourceFamily::nonmax, p.n)[1];
    const DensityMatrix rho = pure_qubit_density({0.0, 0.0});
    CHECK_THROWS_AS(teleport_direct(rho, tau, e1), degenerate_outcome);
    CHECK_THROWS_AS(teleport_via_theorem(rho, tau, e1), degenerate_outcome);
}

TEST_CASE("perfect teleportation on the equatorial and polar circles") {
    for (int i = 0; i < 32; ++i) {
        const double theta = kPi * i / 31.0;
        for (double phi : {0.0, kPi}) {
            const DensityMatrix rho = pure_qubit_density({theta, phi});
            for (const auto& e : povm_catalog(CaseId::I, ResourceFamily::maxent)) {
                const auto res = teleport_direct(rho, phi_plus(), e);
                CHECK(std::abs(res.coherence_out - res.coherence_in) < 1e-10);
            }
        }
        for (double phi : {kPi / 2.0, 3.0 * kPi / 2.0}) {
            const DensityMatrix rho = pure_qubit_density({theta, phi});
            for (const auto& e : povm_catalog(CaseId::II, ResourceFamily::maxent)) {
                const auto res = teleport_direct(rho, phi_plus(), e);
                CHECK(std::abs(res.coherence_out - res.coherence_in) < 1e-10);
            }
        }
    }
}
