// Copyright 2026 The Orbit Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "orbit_atlas/matrix.hpp"

namespace orbit_atlas {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kMaxDim = 64;

struct EigenSystem {
    std::vector<double> values;  // nonincreasing
    ComplexMatrix vectors;       // column k pairs with values[k]
    double residual = 0.0;       // max_k |H v_k - lambda_k v_k|
    int sweeps = 0;
};

/// Cyclic complex Jacobi. Throws NotHermitian when max|H - H^dagger| > tol and
/// NoConvergence when 100 sweeps do not drive the off-diagonal mass below
/// 1e-14 relative to ||H||_F.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol = kDefaultTol);

/// Eigenvalues only, nonincreasing.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol = kDefaultTol);

/// A density matrix that passed validation within `tol`. The spectrum is
/// computed once at validation time.
class DensityMatrix {
public:
    static DensityMatrix validate(ComplexMatrix m, double tol = kDefaultTol);

    /// Maximally mixed state I/n.
    static DensityMatrix maximally_mixed(std::size_t n);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }
    double tol() const noexcept { return tol_; }
    const std::vector<double>& spectrum() const noexcept { return spectrum_; }

    /// Tr(rho^2).
    double purity() const;

private:
    DensityMatrix(ComplexMatrix m, double tol, std::vector<double> spectrum)
        : matrix_(std::move(m)), tol_(tol), spectrum_(std::move(spectrum)) {}

    ComplexMatrix matrix_;
    double tol_ = kDefaultTol;
    std::vector<double> spectrum_;
};

/// Tr(rho^r) for r = 1..n, by repeated multiplication.
std::vector<double> trace_invariants(const DensityMatrix& rho);

/// Unitary equivalence through the trace invariants Tr(rho^r), r = 1..n.
bool unitarily_equivalent(const DensityMatrix& rho1, const DensityMatrix& rho2,
                          double tol = kDefaultTol);

/// Independent route: compare nonincreasing spectra entrywise.
bool spectra_match(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol = kDefaultTol);

/// (1 - t) rho1 + t rho2, t in [0, 1].
DensityMatrix convex_path(const DensityMatrix& rho1, const DensityMatrix& rho2, double t);

// Sampling helpers shared by the property checks, the Monte Carlo estimators
// and the symplectic generator.

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_gaussian_matrix(std::size_t n, std::mt19937_64& rng);

/// Gram-Schmidt on the columns of a random Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Uniform point on the probability simplex.
std::vector<double> random_probability_vector(std::size_t n, std::mt19937_64& rng);

/// U diag(p) U^dagger with U random and p from the simplex.
DensityMatrix random_density(std::size_t n, std::mt19937_64& rng);

/// U m U^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);

}  // namespace orbit_atlas
