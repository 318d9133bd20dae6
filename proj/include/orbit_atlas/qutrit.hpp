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
#include <optional>
#include <string_view>
#include <vector>

namespace orbit_atlas {

// The qutrit family diag(a, b, c) with trace 1 and purity c2:
//   K = sqrt(-1 + 2a - 3a^2 + 2 c2),  b = (1 - a + K) / 2,  c = (1 - a - K) / 2.
// In the (a, c2) plane three curves bound the region of distinct physical orbits:
//   solid     3a^2 - 2a + 1 = 2 c2   (K = 0, b = c)
//   dashed    2a^2 - 2a + 1 = c2     (c = 0)
//   dash-dot  6a^2 - 4a + 1 = c2     (a = b)

enum class RegionClass {
    NonHermitian,
    NonPositive,
    PhysicalDuplicate,
    UniqueOrbit,
    BoundaryPseudoPureSolid,
    BoundaryPseudoPureDashDot,
};

std::string_view region_class_name(RegionClass c);

/// True for every class that describes a positive semidefinite diag(a, b, c).
bool is_physical(RegionClass c);

struct BoundaryCurves {
    double solid = 0.0;     // 3a^2 - 2a + 1
    double dashed = 0.0;    // 2a^2 - 2a + 1
    double dash_dot = 0.0;  // 6a^2 - 4a + 1
};

BoundaryCurves boundary_curves(double a);

struct QutritRegionPoint {
    double a = 0.0;
    double c2 = 0.0;
    double b = 0.0;  // NaN when NonHermitian
    double c = 0.0;  // NaN when NonHermitian
    double K = 0.0;  // NaN when NonHermitian
    RegionClass classification = RegionClass::NonHermitian;
};

/// Requires a in [0, 1] and c2 in [1/3, 1]; throws ParameterOutOfRange otherwise.
QutritRegionPoint qutrit_from_params(double a, double c2);

RegionClass feasibility(double a, double c2);

struct FeasibleInterval {
    double c2 = 0.0;
    double a_lo = 0.0;
    double a_hi = 0.0;
    bool empty = false;
    double K1 = 0.0;             // sqrt(6 c2 - 2)
    std::optional<double> K2;    // sqrt(2 c2 - 1), only for c2 > 1/2
};

/// Range of a giving unique physical orbits (a >= b >= c >= 0).
FeasibleInterval feasible_interval(double c2);

struct ARange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Range of a >= 1/3 giving physical (not necessarily canonical) states.
ARange physical_range(double c2);

struct RegionRecord {
    double a = 0.0;
    double c2 = 0.0;
    RegionClass classification = RegionClass::NonHermitian;
    BoundaryCurves curves;
};

std::vector<RegionRecord> region_grid(const std::vector<double>& c2_values,
                                      const std::vector<double>& a_values);

struct CurvePoint {
    double c2 = 0.0;
    double a = 0.0;
    double value = 0.0;
};

struct SkippedPoint {
    double a = 0.0;
    RegionClass reason = RegionClass::NonHermitian;
};

struct CurveResult {
    std::vector<CurvePoint> points;
    std::vector<SkippedPoint> skipped;
};

/// a + b = (1 + a + K) / 2 along a, skipping points with K^2 < 0.
CurveResult fig2_curve(double c2, const std::vector<double>& a_values);

/// Entropy of diag(a, b, c) along a, skipping non-physical points.
CurveResult fig3_curve(double c2, const std::vector<double>& a_values);

/// {0.35, 0.40, ..., 1.00}.
std::vector<double> default_c2_grid();

/// steps + 1 equally spaced values covering [1/3, 1].
std::vector<double> default_a_grid(std::size_t steps = 600);

/// Fraction of `samples` uniform points on the coherence sphere of radius
/// sqrt(c2 - 1/n) that reconstruct to a positive semidefinite matrix. Work is
/// split into fixed chunks whose generators derive from (seed, chunk index), so
/// the result does not depend on `threads` (0 picks the hardware count).
double sphere_physical_fraction(std::size_t n, double c2, std::size_t samples, std::uint64_t seed,
                                unsigned threads = 0);

}  // namespace orbit_atlas
