#pragma once

#include <array>
#include <optional>

#include "cohtele/channels.hpp"
#include "cohtele/random.hpp"
#include "cohtele/states.hpp"

namespace cohtele {

enum class CaseId { I, II, III };
enum class ResourceFamily { maxent, nonmax, mems, werner };

/// One element of a two-outcome POVM on systems (1,2), together with its
/// catalog identity.
struct PovmElement {
    Mat mat;  // 4x4
    CaseId case_id = CaseId::I;
    ResourceFamily family = ResourceFamily::maxent;
    int outcome = 0;
    std::optional<cx> n;
};

enum class Route { direct, theorem };

struct TeleportOutcome {
    double probability = 0.0;
    DensityMatrix bob_state;
    double coherence_in = 0.0;
    double coherence_out = 0.0;
    Route route = Route::direct;
};

/// General SU(2) matrix [[a, b], [-b*, a*]].
struct BobUnitary {
    cx a{1.0, 0.0};
    cx b{0.0, 0.0};

    static BobUnitary make(cx a, cx b);
    Mat matrix() const;
};

/// Parameter bundle for the closed-form evaluators. Only the fields
/// relevant to the requested case/resource are read.
struct ProtocolParams {
    double theta = 0.0;
    double phi = 0.0;
    cx n{1.0, 0.0};
    double werner_p = 1.0;
    MemsParams mems{};
    cx rho01{0.0, 0.0};  // input off-diagonal <0|rho|1> for mixed-resource cases
};

/// The two-element POVM of the named case. For the nonmax family a value
/// of n is required; mems/werner admit Case I only (the Bell-projector
/// pairing used for those resources).
std::array<PovmElement, 2> povm_catalog(CaseId case_id, ResourceFamily family,
                                        std::optional<cx> n = std::nullopt);

/// Partial-trace route: probability Tr[(sqrt(E) (x) I)(rho (x) tau)(...)],
/// Bob's state as the normalized system-3 reduction.
TeleportOutcome teleport_direct(const DensityMatrix& rho_in,
                                const DensityMatrix& tau,
                                const PovmElement& e);

/// Map-composition route: tau and E read as CJKS matrices, Bob's state
/// proportional to (T o conj(Phi_E))(rho).
TeleportOutcome teleport_via_theorem(const DensityMatrix& rho_in,
                                     const DensityMatrix& tau,
                                     const PovmElement& e);

/// Closed-form teleported coherence for the named case, as published.
double coherence_formula(CaseId case_id, ResourceFamily family, int outcome,
                         const ProtocolParams& params);

/// Closed-form outcome probability for the named case.
double probability_formula(CaseId case_id, ResourceFamily family, int outcome,
                           const ProtocolParams& params);

/// True when the probability expression is a published closed form
/// (nonmax); the remaining families' value of 1/2 is derived from the
/// simulation.
bool probability_from_paper(ResourceFamily family);

/// Coherence of U bob_state U^dagger.
double bob_unitary_coherence(const TeleportOutcome& outcome, const BobUnitary& u);

/// Residual norm of |psi>|Phi+> - (1/2) sum_i |B_i> (x) u_i |psi> with the
/// local unitaries {I, sx, -i sy, sz} (Paulis up to phase) paired to the
/// Bell basis so the identity is exact.
double bell_decomposition_check(const PureQubit& q);

/// Haar-distributed SU(2) element.
BobUnitary haar_su2(Rng& rng);

/// The resource state a family designates: Phi+ for maxent, Phi_n+ for
/// nonmax, and the mems/werner constructions.
DensityMatrix resource_state(ResourceFamily family, const ProtocolParams& params);

}  // namespace cohtele
