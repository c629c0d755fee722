#pragma once

#include <Eigen/Dense>
#include <cstdlib>
#include <lapacke.h>
#include <vector>

#include "dwell/errors.hpp"

namespace dwell {

// Pin the BLAS backend to one thread.  Results must be bit-reproducible
// regardless of how many sweep workers call into LAPACK concurrently, so the
// backend must not re-split its own reductions.  Call before the first solve.
inline void pin_blas_threads() {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    setenv("OMP_NUM_THREADS", "1", 0);
}

struct EigResult {
    std::vector<double> values;
    Eigen::MatrixXd vectors;  // one eigenvector per column; empty if not requested
};

// Lowest n_lowest eigenpairs of a symmetric matrix (dsyevr, index range).
// The input matrix is consumed as workspace.
inline EigResult eigh_lowest(Eigen::MatrixXd a, int n_lowest, bool want_vectors = true) {
    const int n = static_cast<int>(a.rows());
    if (n_lowest < 1 || n_lowest > n)
        throw precondition_error("eigh_lowest: need 1 <= n_lowest <= n");
    EigResult r;
    r.values.assign(n, 0.0);
    std::vector<lapack_int> isuppz(2 * std::max(1, n_lowest));
    lapack_int m = 0;
    if (want_vectors) r.vectors.resize(n, n_lowest);
    const lapack_int info = LAPACKE_dsyevr(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', 'U', n, a.data(), n,
        0.0, 0.0, 1, n_lowest, 0.0, &m, r.values.data(),
        want_vectors ? r.vectors.data() : nullptr, n, isuppz.data());
    if (info != 0) throw solver_error("dsyevr failed", info);
    if (m < n_lowest) throw solver_error("dsyevr returned too few eigenvalues", m);
    r.values.resize(n_lowest);
    return r;
}

inline std::vector<double> eigh_values(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    std::vector<double> w(n);
    const lapack_int info =
        LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, w.data());
    if (info != 0) throw solver_error("dsyev failed", info);
    return w;
}

}
