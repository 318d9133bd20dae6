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

#include "orbit_atlas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orbit_atlas/error.hpp"

namespace orbit_atlas {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// Annihilates a(p, q) with G = diag(1, e^{-i phi}) * R(theta) restricted to the
// (p, q) plane, where a(p, q) = |a(p, q)| e^{i phi}. Updates a <- G^dagger a G
// and v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex g_pp = c;
    const Complex g_pq = s;
    const Complex g_qp = -s * std::conj(phase);
    const Complex g_qq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * g_pp + akq * g_qp;
        a(k, q) = akp * g_pq + akq * g_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
        a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * g_pp + vkq * g_qp;
        v(k, q) = vkp * g_pq + vkq * g_qq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

void require_dim_in_range(std::size_t n) {
    if (n == 0 || n > kMaxDim) {
        throw Error(ErrorCode::DimensionOutOfRange,
                    "matrix dimension " + std::to_string(n) + " outside [1, 64]");
    }
}

std::string format_value(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
    const std::size_t n = h.dim();
    require_dim_in_range(n);
    const double defect = hermiticity_defect(h);
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian,
                    "Hermiticity violated: max |H - H^dagger| = " + format_value(defect));
    }

    ComplexMatrix a = 0.5 * (h + h.adjoint());
    const ComplexMatrix sym = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kOffDiagonalThreshold * std::max(1.0, a.frobenius_norm());

    int sweeps = 0;
    bool converged = off_diagonal_norm(a) <= threshold;
    while (!converged && sweeps < kMaxSweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        ++sweeps;
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) +
                        " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenSystem out;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex hv = 0.0;
            for (std::size_t j = 0; j < n; ++j) hv += sym(i, j) * out.vectors(j, k);
            out.residual = std::max(out.residual, std::abs(hv - out.values[k] * out.vectors(i, k)));
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
    return hermitian_eigensystem(h, tol).values;
}

DensityMatrix DensityMatrix::validate(ComplexMatrix m, double tol) {
    const std::size_t n = m.dim();
    require_dim_in_range(n);
    if (!(tol >= 0.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "validation tolerance must be non-negative");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian,
                    "Hermiticity violated: max |M - M^dagger| = " + format_value(defect));
    }
    const double trace_error = std::abs(m.trace() - 1.0);
    if (trace_error > tol) {
        throw Error(ErrorCode::NotUnitTrace,
                    "unit trace violated: |Tr M - 1| = " + format_value(trace_error));
    }
    auto spectrum = hermitian_eigenvalues(m, tol);
    const double lowest = spectrum.back();
    if (lowest < -tol * static_cast<double>(n)) {
        throw Error(ErrorCode::NotPositive,
                    "positivity violated: min eigenvalue = " + format_value(lowest));
    }
    return DensityMatrix(std::move(m), tol, std::move(spectrum));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
    require_dim_in_range(n);
    return DensityMatrix((1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n), kDefaultTol,
                         std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double DensityMatrix::purity() const { return trace_of_product(matrix_, matrix_).real(); }

std::vector<double> trace_invariants(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    std::vector<double> out(n);
    ComplexMatrix power = rho.matrix();
    out[0] = power.trace().real();
    for (std::size_t r = 1; r < n; ++r) {
        power = power * rho.matrix();
        out[r] = power.trace().real();
    }
    return out;
}

bool unitarily_equivalent(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol) {
    if (rho1.dim() != rho2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    const auto t1 = trace_invariants(rho1);
    const auto t2 = trace_invariants(rho2);
    for (std::size_t r = 0; r < t1.size(); ++r)
        if (std::abs(t1[r] - t2[r]) > tol) return false;
    return true;
}

bool spectra_match(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol) {
    if (rho1.dim() != rho2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    for (std::size_t k = 0; k < rho1.dim(); ++k)
        if (std::abs(rho1.spectrum()[k] - rho2.spectrum()[k]) > tol) return false;
    return true;
}

DensityMatrix convex_path(const DensityMatrix& rho1, const DensityMatrix& rho2, double t) {
    if (rho1.dim() != rho2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "path parameter t must lie in [0, 1]");
    }
    ComplexMatrix mix = (1.0 - t) * rho1.matrix() + t * rho2.matrix();
    return DensityMatrix::validate(std::move(mix), std::max(rho1.tol(), rho2.tol()));
}

ComplexMatrix random_gaussian_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    return m;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    ComplexMatrix u = random_gaussian_matrix(n, rng);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) overlap += std::conj(u(i, j)) * u(i, k);
            for (std::size_t i = 0; i < n; ++i) u(i, k) -= overlap * u(i, j);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(u(i, k));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) u(i, k) /= norm;
    }
    return u;
}

std::vector<double> random_probability_vector(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(n);
    for (auto& x : p) x = expo(rng);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= total;
    return p;
}

DensityMatrix random_density(std::size_t n, std::mt19937_64& rng) {
    const auto p = random_probability_vector(n, rng);
    const ComplexMatrix u = random_unitary(n, rng);
    return DensityMatrix::validate(conjugate_by(u, ComplexMatrix::diagonal(p)));
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
    return u * m * u.adjoint();
}

}  // namespace orbit_atlas
