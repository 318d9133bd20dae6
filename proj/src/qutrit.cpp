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

#include "orbit_atlas/qutrit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "orbit_atlas/error.hpp"
#include "orbit_atlas/orbit.hpp"
#include "orbit_atlas/pauli_basis.hpp"

namespace orbit_atlas {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kSnapTol = 1e-12;      // K^2 in [-kSnapTol, 0) counts as 0
constexpr double kBoundaryTol = 1e-10;  // curve membership
constexpr double kDomainSlack = 1e-12;
constexpr std::size_t kChunkSize = 256;

void require_domain(double a, double c2) {
    if (!(a >= -kDomainSlack && a <= 1.0 + kDomainSlack)) {
        throw Error(ErrorCode::ParameterOutOfRange, "a must lie in [0, 1]");
    }
    if (!(c2 >= kThird - kDomainSlack && c2 <= 1.0 + kDomainSlack)) {
        throw Error(ErrorCode::ParameterOutOfRange, "c2 must lie in [1/3, 1]");
    }
}

void require_c2(double c2) { require_domain(0.5, c2); }

}  // namespace

std::string_view region_class_name(RegionClass c) {
    switch (c) {
        case RegionClass::NonHermitian: return "NonHermitian";
        case RegionClass::NonPositive: return "NonPositive";
        case RegionClass::PhysicalDuplicate: return "PhysicalDuplicate";
        case RegionClass::UniqueOrbit: return "UniqueOrbit";
        case RegionClass::BoundaryPseudoPureSolid: return "BoundaryPseudoPureSolid";
        case RegionClass::BoundaryPseudoPureDashDot: return "BoundaryPseudoPureDashDot";
    }
    return "Unknown";
}

bool is_physical(RegionClass c) {
    return c != RegionClass::NonHermitian && c != RegionClass::NonPositive;
}

BoundaryCurves boundary_curves(double a) {
    return {3.0 * a * a - 2.0 * a + 1.0, 2.0 * a * a - 2.0 * a + 1.0, 6.0 * a * a - 4.0 * a + 1.0};
}

RegionClass feasibility(double a, double c2) {
    require_domain(a, c2);
    const BoundaryCurves curves = boundary_curves(a);

    if (2.0 * c2 - curves.solid < -kSnapTol) return RegionClass::NonHermitian;
    if (c2 - curves.dashed > kSnapTol) return RegionClass::NonPositive;

    if (std::abs(a - kThird) <= kBoundaryTol && std::abs(c2 - kThird) <= kBoundaryTol) {
        return RegionClass::UniqueOrbit;
    }
    const bool canonical = a >= kThird - kSnapTol && curves.dash_dot >= c2 - kSnapTol;
    if (!canonical) return RegionClass::PhysicalDuplicate;
    if (std::abs(curves.solid - 2.0 * c2) <= kBoundaryTol) return RegionClass::BoundaryPseudoPureSolid;
    if (std::abs(curves.dash_dot - c2) <= kBoundaryTol) return RegionClass::BoundaryPseudoPureDashDot;
    return RegionClass::UniqueOrbit;
}

QutritRegionPoint qutrit_from_params(double a, double c2) {
    QutritRegionPoint p;
    p.a = a;
    p.c2 = c2;
    p.classification = feasibility(a, c2);
    if (p.classification == RegionClass::NonHermitian) {
        p.K = p.b = p.c = std::numeric_limits<double>::quiet_NaN();
        return p;
    }
    const double k_squared = -1.0 + 2.0 * a - 3.0 * a * a + 2.0 * c2;
    p.K = k_squared > 0.0 ? std::sqrt(k_squared) : 0.0;
    p.b = 0.5 * (1.0 - a + p.K);
    p.c = 0.5 * (1.0 - a - p.K);
    return p;
}

FeasibleInterval feasible_interval(double c2) {
    require_c2(c2);
    FeasibleInterval out;
    out.c2 = c2;
    out.K1 = std::sqrt(std::max(0.0, 6.0 * c2 - 2.0));
    // a >= b holds to the right of the larger root of 6a^2 - 4a + 1 = c2.
    double lo = (1.0 + 0.5 * out.K1) / 3.0;
    if (c2 > 0.5) {
        out.K2 = std::sqrt(2.0 * c2 - 1.0);
        lo = std::max(lo, 0.5 * (1.0 + *out.K2));
    }
    const double hi = (1.0 + out.K1) / 3.0;
    out.a_lo = std::clamp(lo, kThird, 1.0);
    out.a_hi = std::clamp(hi, kThird, 1.0);
    out.empty = out.a_lo > out.a_hi;
    return out;
}

ARange physical_range(double c2) {
    require_c2(c2);
    const double k1 = std::sqrt(std::max(0.0, 6.0 * c2 - 2.0));
    double lo = kThird;
    if (c2 > 0.5) lo = std::max(lo, 0.5 * (1.0 + std::sqrt(2.0 * c2 - 1.0)));
    return {std::clamp(lo, kThird, 1.0), std::clamp((1.0 + k1) / 3.0, kThird, 1.0)};
}

std::vector<RegionRecord> region_grid(const std::vector<double>& c2_values,
                                      const std::vector<double>& a_values) {
    std::vector<RegionRecord> out;
    out.reserve(c2_values.size() * a_values.size());
    for (double c2 : c2_values)
        for (double a : a_values) out.push_back({a, c2, feasibility(a, c2), boundary_curves(a)});
    return out;
}

CurveResult fig2_curve(double c2, const std::vector<double>& a_values) {
    CurveResult out;
    for (double a : a_values) {
        const auto p = qutrit_from_params(a, c2);
        if (p.classification == RegionClass::NonHermitian) {
            out.skipped.push_back({a, p.classification});
            continue;
        }
        out.points.push_back({c2, a, 0.5 * (1.0 + a + p.K)});
    }
    return out;
}

CurveResult fig3_curve(double c2, const std::vector<double>& a_values) {
    CurveResult out;
    for (double a : a_values) {
        const auto p = qutrit_from_params(a, c2);
        if (!is_physical(p.classification)) {
            out.skipped.push_back({a, p.classification});
            continue;
        }
        out.points.push_back({c2, a, entropy_of_spectrum({p.a, p.b, p.c})});
    }
    return out;
}

std::vector<double> default_c2_grid() {
    std::vector<double> out;
    for (int k = 7; k <= 20; ++k) out.push_back(k / 20.0);
    return out;
}

std::vector<double> default_a_grid(std::size_t steps) {
    if (steps == 0) {
        throw Error(ErrorCode::ParameterOutOfRange, "a grid needs at least one step");
    }
    std::vector<double> out(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        out[i] = kThird + (1.0 - kThird) * static_cast<double>(i) / static_cast<double>(steps);
    out.back() = 1.0;
    return out;
}

double sphere_physical_fraction(std::size_t n, double c2, std::size_t samples, std::uint64_t seed,
                                unsigned threads) {
    if (n < kMinBasisDim || n > kMaxBasisDim) {
        throw Error(ErrorCode::ParameterOutOfRange, "n must lie in [2, 16]");
    }
    const double center = 1.0 / static_cast<double>(n);
    if (!(c2 > center && c2 <= 1.0 + kDomainSlack)) {
        throw Error(ErrorCode::ParameterOutOfRange, "c2 must lie in (1/n, 1]");
    }
    if (samples == 0) {
        throw Error(ErrorCode::ParameterOutOfRange, "samples must be positive");
    }

    const PauliBasis basis = generate_basis(n);
    const double radius = std::sqrt(std::min(c2, 1.0) - center);
    const std::size_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<std::size_t> physical(chunks, 0);

    auto run_chunk = [&](std::size_t chunk) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 rng(seq);
        const std::size_t begin = chunk * kChunkSize;
        const std::size_t end = std::min(samples, begin + kChunkSize);
        CoherenceVector s;
        s.dim = n;
        std::size_t count = 0;
        for (std::size_t i = begin; i < end; ++i) {
            s.components = uniform_sphere_point(n * n - 1, radius, rng);
            if (is_physical_vector(s, basis).physical) ++count;
        }
        physical[chunk] = count;
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t chunk = next++; chunk < chunks; chunk = next++) run_chunk(chunk);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }

    std::size_t total = 0;
    for (auto c : physical) total += c;
    return static_cast<double>(total) / static_cast<double>(samples);
}

}  // namespace orbit_atlas
