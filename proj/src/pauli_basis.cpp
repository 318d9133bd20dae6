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

#include "orbit_atlas/pauli_basis.hpp"

#include <cmath>
#include <numeric>

#include "orbit_atlas/error.hpp"

namespace orbit_atlas {

namespace {

void require_basis_dim(std::size_t n) {
    if (n < kMinBasisDim || n > kMaxBasisDim) {
        throw Error(ErrorCode::DimensionOutOfRange,
                    "basis dimension " + std::to_string(n) + " outside [2, 16]");
    }
}

std::size_t basis_size(std::size_t n) { return n * n - 1; }

void require_length(const CoherenceVector& s, const PauliBasis& basis) {
    if (s.dim != basis.dim || s.components.size() != basis_size(basis.dim)) {
        throw Error(ErrorCode::LengthMismatch,
                    "coherence vector for n=" + std::to_string(basis.dim) + " needs " +
                        std::to_string(basis_size(basis.dim)) + " components, got " +
                        std::to_string(s.components.size()));
    }
}

}  // namespace

PauliBasis generate_basis(std::size_t n) {
    require_basis_dim(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex i_unit(0.0, 1.0);

    PauliBasis basis;
    basis.dim = n;
    basis.elements.reserve(basis_size(n));

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
            ComplexMatrix x(n);
            x(r, s) = inv_sqrt2;
            x(s, r) = inv_sqrt2;
            basis.elements.push_back(std::move(x));
        }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
            ComplexMatrix y(n);
            y(r, s) = -i_unit * inv_sqrt2;
            y(s, r) = i_unit * inv_sqrt2;
            basis.elements.push_back(std::move(y));
        }
    for (std::size_t r = 1; r < n; ++r) {
        const double rr = static_cast<double>(r);
        const double scale = std::sqrt(2.0 / (rr + rr * rr)) * inv_sqrt2;
        ComplexMatrix z(n);
        for (std::size_t k = 0; k < r; ++k) z(k, k) = scale;
        z(r, r) = -rr * scale;
        basis.elements.push_back(std::move(z));
    }

    basis.identity_element = (1.0 / std::sqrt(static_cast<double>(n))) * ComplexMatrix::identity(n);
    return basis;
}

std::string basis_label(std::size_t n, std::size_t k) {
    require_basis_dim(n);
    const std::size_t pairs = n * (n - 1) / 2;
    if (k >= basis_size(n)) {
        throw Error(ErrorCode::ParameterOutOfRange, "basis index out of range");
    }
    if (k >= 2 * pairs) return "z(" + std::to_string(k - 2 * pairs + 1) + ")";
    const char kind = k < pairs ? 'x' : 'y';
    std::size_t idx = k % pairs;
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = n - 1 - r;
        if (idx < row) {
            return std::string(1, kind) + "(" + std::to_string(r + 1) + "," +
                   std::to_string(r + 2 + idx) + ")";
        }
        idx -= row;
    }
    return {};
}

std::string_view convention_name(VectorConvention c) {
    return c == VectorConvention::Coherence ? "coherence" : "bloch";
}

double CoherenceVector::norm() const {
    return std::sqrt(std::inner_product(components.begin(), components.end(), components.begin(), 0.0));
}

CoherenceVector to_coherence_vector(const DensityMatrix& rho) {
    return to_coherence_vector(rho, generate_basis(rho.dim()));
}

CoherenceVector to_coherence_vector(const DensityMatrix& rho, const PauliBasis& basis) {
    if (basis.dim != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
    }
    CoherenceVector s;
    s.dim = rho.dim();
    s.convention = VectorConvention::Coherence;
    s.components.reserve(basis.elements.size());
    for (const auto& sigma : basis.elements)
        s.components.push_back(trace_of_product(rho.matrix(), sigma).real());
    return s;
}

ComplexMatrix from_coherence_vector(const CoherenceVector& s) {
    require_basis_dim(s.dim);
    return from_coherence_vector(s, generate_basis(s.dim));
}

ComplexMatrix from_coherence_vector(const CoherenceVector& s, const PauliBasis& basis) {
    require_length(s, basis);
    const CoherenceVector coh = convert_convention(s, VectorConvention::Coherence);
    const std::size_t n = basis.dim;
    ComplexMatrix m = (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
    for (std::size_t k = 0; k < coh.components.size(); ++k) {
        const double c = coh.components[k];
        if (c == 0.0) continue;
        m += c * basis.elements[k];
    }
    return m;
}

PhysicalityCheck is_physical_vector(const CoherenceVector& s, double tol) {
    require_basis_dim(s.dim);
    return is_physical_vector(s, generate_basis(s.dim), tol);
}

PhysicalityCheck is_physical_vector(const CoherenceVector& s, const PauliBasis& basis, double tol) {
    const ComplexMatrix m = from_coherence_vector(s, basis);
    const auto values = hermitian_eigenvalues(m, tol);
    PhysicalityCheck out;
    out.min_eigenvalue = values.back();
    out.physical = out.min_eigenvalue >= -tol * static_cast<double>(basis.dim);
    return out;
}

CoherenceVector convert_convention(const CoherenceVector& s, VectorConvention target) {
    CoherenceVector out = s;
    if (s.convention == target) return out;
    const double factor = target == VectorConvention::Bloch ? 2.0 : 0.5;
    for (auto& c : out.components) c *= factor;
    out.convention = target;
    return out;
}

std::vector<double> uniform_sphere_point(std::size_t dim, double radius, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> v(dim);
    double norm = 0.0;
    do {
        for (auto& x : v) x = normal(rng);
        norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    } while (norm == 0.0);
    for (auto& x : v) x *= radius / norm;
    return v;
}

std::vector<double> uniform_ball_point(std::size_t dim, double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double r = radius * std::pow(uniform(rng), 1.0 / static_cast<double>(dim));
    return uniform_sphere_point(dim, r, rng);
}

}  // namespace orbit_atlas
