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

#include "orbit_atlas/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "orbit_atlas/error.hpp"

namespace orbit_atlas {

std::string_view state_class_name(StateClass c) {
    switch (c) {
        case StateClass::CompletelyRandom: return "CompletelyRandom";
        case StateClass::Pure: return "Pure";
        case StateClass::PseudoPure: return "PseudoPure";
        case StateClass::Generic: return "Generic";
        case StateClass::OtherDegenerate: return "OtherDegenerate";
    }
    return "Unknown";
}

std::string_view majorization_name(Majorization m) {
    switch (m) {
        case Majorization::Less: return "Less";
        case Majorization::Greater: return "Greater";
        case Majorization::Equal: return "Equal";
        case Majorization::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

StateClass classify_pattern(const std::vector<double>& distinct_values,
                            const std::vector<std::size_t>& multiplicities, double cluster_tol) {
    const std::size_t r = multiplicities.size();
    const std::size_t n = std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
    if (r == 1) return StateClass::CompletelyRandom;
    if (r == 2) {
        const std::size_t lo = std::min(multiplicities[0], multiplicities[1]);
        const std::size_t hi = std::max(multiplicities[0], multiplicities[1]);
        if (lo == 1 && hi == n - 1) {
            const bool pure = distinct_values.size() == 2 && multiplicities[0] == 1 &&
                              std::abs(distinct_values[0] - 1.0) <= cluster_tol &&
                              std::abs(distinct_values[1]) <= cluster_tol;
            return pure ? StateClass::Pure : StateClass::PseudoPure;
        }
    }
    if (r == n) return StateClass::Generic;
    return StateClass::OtherDegenerate;
}

OrbitSignature signature_from_spectrum(std::vector<double> spectrum, double cluster_tol) {
    if (spectrum.empty()) {
        throw Error(ErrorCode::DimensionOutOfRange, "empty spectrum");
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());

    OrbitSignature sig;
    sig.dim = spectrum.size();
    sig.cluster_tol = cluster_tol;

    double sum = spectrum[0];
    std::size_t count = 1;
    for (std::size_t k = 1; k <= spectrum.size(); ++k) {
        if (k < spectrum.size() && spectrum[k - 1] - spectrum[k] <= cluster_tol) {
            sum += spectrum[k];
            ++count;
            continue;
        }
        sig.distinct_values.push_back(sum / static_cast<double>(count));
        sig.multiplicities.push_back(count);
        if (k < spectrum.size()) {
            sum = spectrum[k];
            count = 1;
        }
    }

    for (std::size_t i = 1; i < sig.distinct_values.size(); ++i) {
        if (sig.distinct_values[i - 1] - sig.distinct_values[i] <= 2.0 * cluster_tol) {
            throw Error(ErrorCode::AmbiguousClustering,
                        "eigenvalue clusters closer than twice the clustering tolerance");
        }
    }
    sig.state_class = classify_pattern(sig.distinct_values, sig.multiplicities, cluster_tol);
    return sig;
}

OrbitSignature orbit_signature(const DensityMatrix& rho, double cluster_tol) {
    return signature_from_spectrum(rho.spectrum(), cluster_tol);
}

std::size_t orbit_dimension(std::size_t n, const std::vector<std::size_t>& multiplicities) {
    std::size_t stabilizer = 0;
    for (auto m : multiplicities) stabilizer += m * m;
    return n * n - stabilizer;
}

std::size_t orbit_dimension(const OrbitSignature& sig) {
    return orbit_dimension(sig.dim, sig.multiplicities);
}

std::string flag_manifold_name(std::size_t n, const std::vector<std::size_t>& multiplicities) {
    if (multiplicities.size() <= 1) return "point";
    std::vector<std::size_t> parts = multiplicities;
    std::sort(parts.begin(), parts.end());
    std::string name = "U(" + std::to_string(n) + ")/[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) name += "x";
        name += "U(" + std::to_string(parts[i]) + ")";
    }
    name += "]";
    if (parts.size() == 2 && parts[0] == 1 && parts[1] == n - 1) {
        name += " = CP^" + std::to_string(n - 1);
    }
    return name;
}

std::string flag_manifold_name(const OrbitSignature& sig) {
    return flag_manifold_name(sig.dim, sig.multiplicities);
}

Majorization majorize_compare(const std::vector<double>& spectrum1,
                              const std::vector<double>& spectrum2, double tol) {
    if (spectrum1.size() != spectrum2.size()) {
        throw Error(ErrorCode::DimensionMismatch, "spectra have different lengths");
    }
    std::vector<double> a = spectrum1;
    std::vector<double> b = spectrum2;
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());

    bool below = true;  // every partial sum of a <= that of b (within tol)
    bool above = true;
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb + tol) below = false;
        if (sa < sb - tol) above = false;
    }
    if (below && above) return Majorization::Equal;
    if (below) return Majorization::Less;
    if (above) return Majorization::Greater;
    return Majorization::Incomparable;
}

Majorization majorize_compare(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol) {
    if (rho1.dim() != rho2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    return majorize_compare(rho1.spectrum(), rho2.spectrum(), tol);
}

double entropy_of_spectrum(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double x : spectrum)
        if (x > 0.0) s -= x * std::log(x);
    const double upper = std::log(static_cast<double>(spectrum.size()));
    return std::clamp(s, 0.0, upper);
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of_spectrum(rho.spectrum()); }

namespace {

void collect_partitions(std::size_t remaining, std::size_t min_part, std::vector<std::size_t>& prefix,
                        std::vector<std::vector<std::size_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t part = min_part; part <= remaining; ++part) {
        prefix.push_back(part);
        collect_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OrbitTableRow> enumerate_orbit_table(std::size_t n) {
    if (n < 2 || n > 8) {
        throw Error(ErrorCode::DimensionOutOfRange, "orbit table supports 2 <= n <= 8");
    }
    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> prefix;
    collect_partitions(n, 1, prefix, partitions);

    std::vector<OrbitTableRow> rows;
    rows.reserve(partitions.size());
    for (auto& p : partitions) {
        OrbitTableRow row;
        row.dimension = orbit_dimension(n, p);
        row.manifold = flag_manifold_name(n, p);
        row.partition = std::move(p);
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const OrbitTableRow& x, const OrbitTableRow& y) {
        if (x.dimension != y.dimension) return x.dimension < y.dimension;
        return x.partition < y.partition;
    });
    return rows;
}

std::string partition_string(const std::vector<std::size_t>& partition) {
    std::string out;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i > 0) out += "+";
        out += std::to_string(partition[i]);
    }
    return out;
}

}  // namespace orbit_atlas
