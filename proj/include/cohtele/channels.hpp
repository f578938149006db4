#pragma once

#include <vector>

#include "cohtele/cmatrix.hpp"

namespace cohtele {

/// A completely positive map in operator-sum form. Not necessarily
/// trace-preserving; declare trace preservation to have it validated.
struct KrausMap {
    std::vector<Mat> ops;
    int d_in = 0;
    int d_out = 0;
    bool declared_trace_preserving = false;

    static KrausMap make(std::vector<Mat> ops, bool trace_preserving = false);
};

/// Unnormalized CJKS matrix: sum_ij e_ij (x) Phi(e_ij). Trace equals d_in
/// for trace-preserving maps.
struct ChoiMatrix {
    Mat mat;
    int d_in = 0;
    int d_out = 0;
};

ChoiMatrix choi_of_map(const KrausMap& m);

/// Kraus extraction from a PSD Choi matrix via its spectral decomposition;
/// throws not_completely_positive when an eigenvalue is below -1e-10.
KrausMap map_of_choi(const ChoiMatrix& c);

/// Entrywise complex conjugate of every Kraus operator (computational basis).
KrausMap conjugate_map(const KrausMap& m);

/// Kraus family {A_i B_j}; acts as outer(inner(rho)).
KrausMap compose(const KrausMap& outer, const KrausMap& inner);

/// sum_i K_i rho K_i^dagger (possibly trace-deficient).
Mat apply_map(const KrausMap& m, const Mat& rho);

bool is_cp(const ChoiMatrix& c);
bool is_tp(const KrausMap& m);

}  // namespace cohtele
