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
#include <random>
#include <string>
#include <vector>

#include "orbit_atlas/linalg.hpp"
#include "orbit_atlas/matrix.hpp"

namespace orbit_atlas {

/// Orthonormal traceless Hermitian basis of n x n matrices, Tr(s_j s_k) = delta_jk.
///
/// Index order is fixed: every x-type element (r < s, lexicographic), then every
/// y-type element in the same order, then the n - 1 diagonal z-type elements.
/// With 1-based |r>, and before the overall 1/sqrt(2):
///   x_rs = |r><s| + |s><r|
///   y_rs = -i (|r><s| - |s><r|)
///   z_r  = sqrt(2 / (r + r^2)) (sum_{k<=r} |k><k| - r |r+1><r+1|)
struct PauliBasis {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> elements;
    ComplexMatrix identity_element;  // I / sqrt(n)
};

inline constexpr std::size_t kMinBasisDim = 2;
inline constexpr std::size_t kMaxBasisDim = 16;

PauliBasis generate_basis(std::size_t n);

/// Human-readable tag of element k, e.g. "x(1,2)", "z(2)".
std::string basis_label(std::size_t n, std::size_t k);

enum class VectorConvention { Coherence, Bloch };

std::string_view convention_name(VectorConvention c);

/// Real expansion coefficients of a state in the basis above; the implied
/// identity coefficient 1/sqrt(n) is not stored. Bloch components are 2x the
/// coherence components.
struct CoherenceVector {
    std::size_t dim = 0;
    std::vector<double> components;
    VectorConvention convention = VectorConvention::Coherence;

    double norm() const;
};

CoherenceVector to_coherence_vector(const DensityMatrix& rho);
CoherenceVector to_coherence_vector(const DensityMatrix& rho, const PauliBasis& basis);

/// I/n + sum_k s_k sigma_k. Hermitian with unit trace but not necessarily
/// positive once n > 2.
ComplexMatrix from_coherence_vector(const CoherenceVector& s);
ComplexMatrix from_coherence_vector(const CoherenceVector& s, const PauliBasis& basis);

struct PhysicalityCheck {
    bool physical = false;
    double min_eigenvalue = 0.0;
};

PhysicalityCheck is_physical_vector(const CoherenceVector& s, double tol = kDefaultTol);
PhysicalityCheck is_physical_vector(const CoherenceVector& s, const PauliBasis& basis,
                                    double tol = kDefaultTol);

CoherenceVector convert_convention(const CoherenceVector& s, VectorConvention target);

/// Gaussian direction normalized onto the sphere of the given radius.
std::vector<double> uniform_sphere_point(std::size_t dim, double radius, std::mt19937_64& rng);

/// Uniform point in the closed ball of the given radius.
std::vector<double> uniform_ball_point(std::size_t dim, double radius, std::mt19937_64& rng);

}  // namespace orbit_atlas
