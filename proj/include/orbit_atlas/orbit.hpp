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
#include <string>
#include <string_view>
#include <vector>

#include "orbit_atlas/linalg.hpp"

namespace orbit_atlas {

inline constexpr double kDefaultClusterTol = 1e-8;

enum class StateClass { CompletelyRandom, Pure, PseudoPure, Generic, OtherDegenerate };

std::string_view state_class_name(StateClass c);

/// Clustered spectrum of a state. Distinct values are strictly decreasing and
/// multiplicities follow the same order.
struct OrbitSignature {
    std::size_t dim = 0;
    std::vector<double> distinct_values;
    std::vector<std::size_t> multiplicities;
    double cluster_tol = kDefaultClusterTol;
    StateClass state_class = StateClass::Generic;
};

/// Single-linkage clustering of a nonincreasing spectrum. Throws
/// AmbiguousClustering when two resulting cluster means lie within
/// 2 * cluster_tol of each other.
OrbitSignature signature_from_spectrum(std::vector<double> spectrum,
                                       double cluster_tol = kDefaultClusterTol);

OrbitSignature orbit_signature(const DensityMatrix& rho, double cluster_tol = kDefaultClusterTol);

/// Class implied by a multiplicity pattern and the distinct values it refers to.
StateClass classify_pattern(const std::vector<double>& distinct_values,
                            const std::vector<std::size_t>& multiplicities, double cluster_tol);

/// n^2 - sum n_i^2, the real dimension of the flag manifold.
std::size_t orbit_dimension(std::size_t n, const std::vector<std::size_t>& multiplicities);
std::size_t orbit_dimension(const OrbitSignature& sig);

/// "U(n)/[U(n1)x...xU(nr)]" with factors in ascending order, "point" when the
/// orbit is trivial, and " = CP^(n-1)" appended for the {1, n-1} pattern.
std::string flag_manifold_name(std::size_t n, const std::vector<std::size_t>& multiplicities);
std::string flag_manifold_name(const OrbitSignature& sig);

enum class Majorization { Less, Greater, Equal, Incomparable };

std::string_view majorization_name(Majorization m);

/// Compares partial sums of nonincreasing spectra. Less means rho1 is
/// majorized by rho2 (rho1 is the more mixed state).
Majorization majorize_compare(const std::vector<double>& spectrum1,
                              const std::vector<double>& spectrum2, double tol = kDefaultTol);
Majorization majorize_compare(const DensityMatrix& rho1, const DensityMatrix& rho2,
                              double tol = kDefaultTol);

/// -sum lambda ln lambda with 0 ln 0 = 0, in nats.
double entropy_of_spectrum(const std::vector<double>& spectrum);
double von_neumann_entropy(const DensityMatrix& rho);

struct OrbitTableRow {
    std::vector<std::size_t> partition;  // ascending
    std::string manifold;
    std::size_t dimension = 0;
};

/// One row per integer partition of n, sorted by dimension (ties by partition).
std::vector<OrbitTableRow> enumerate_orbit_table(std::size_t n);

/// "1+1+2".
std::string partition_string(const std::vector<std::size_t>& partition);

}  // namespace orbit_atlas
