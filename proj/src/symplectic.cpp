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

#include "orbit_atlas/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "orbit_atlas/error.hpp"
#include "orbit_atlas/linalg.hpp"
#include "orbit_atlas/orbit.hpp"

namespace orbit_atlas {

namespace {

constexpr int kTaylorTerms = 18;
constexpr double kScaledNorm = 0.5;

std::size_t require_even(const ComplexMatrix& s) {
    if (s.dim() == 0 || s.dim() % 2 != 0) {
        throw Error(ErrorCode::OddDimension,
                    "symplectic test needs an even dimension, got " + std::to_string(s.dim()));
    }
    return s.dim() / 2;
}

}  // namespace

ComplexMatrix standard_J(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "J needs n >= 1");
    ComplexMatrix j(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

bool is_symplectic(const ComplexMatrix& s, double tol) {
    const std::size_t n = require_even(s);
    const ComplexMatrix j = standard_J(n);
    if (max_abs_diff(s.transpose() * j * s, j) > tol) return false;
    return max_abs_diff(s.adjoint() * s, ComplexMatrix::identity(2 * n)) <= tol;
}

bool has_sp_block_form(const ComplexMatrix& s, double tol) {
    const std::size_t n = require_even(s);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = s(i, k);
            const Complex b = s(i, n + k);
            if (std::abs(s(n + i, k) + std::conj(b)) > tol) return false;
            if (std::abs(s(n + i, n + k) - std::conj(a)) > tol) return false;
        }
    }
    return true;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& x) {
    const std::size_t dim = x.dim();
    const double norm = x.frobenius_norm();
    int squarings = 0;
    if (norm > kScaledNorm) squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNorm)));
    const ComplexMatrix y = std::ldexp(1.0, -squarings) * x;

    ComplexMatrix result = ComplexMatrix::identity(dim);
    ComplexMatrix term = ComplexMatrix::identity(dim);
    for (int k = 1; k <= kTaylorTerms; ++k) {
        term = (1.0 / k) * (term * y);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

ComplexMatrix random_symplectic(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "random_symplectic needs n >= 1");
    std::mt19937_64 rng(seed);
    const ComplexMatrix m = random_gaussian_matrix(2 * n, rng);
    const ComplexMatrix anti = 0.5 * (m - m.adjoint());
    // X -> J X^T J is an involution preserving anti-Hermiticity; its fixed
    // points are exactly the X with X^T J + J X = 0.
    const ComplexMatrix j = standard_J(n);
    const ComplexMatrix generator = 0.5 * (anti + j * anti.transpose() * j);
    return matrix_exponential(generator);
}

std::string_view sp_rule_name(SpRule r) {
    switch (r) {
        case SpRule::Transitive: return "Transitive";
        case SpRule::GenericTorus: return "GenericTorus";
        case SpRule::EqualHalves: return "EqualHalves";
        case SpRule::ScalarHalves: return "ScalarHalves";
        case SpRule::TrailingScalarBlock: return "TrailingScalarBlock";
    }
    return "Unknown";
}

SpOrbitReport sp_orbit_bounds(const std::vector<double>& diagonal, double equal_tol) {
    if (diagonal.empty() || diagonal.size() % 2 != 0) {
        throw Error(ErrorCode::OddDimension, "diagonal length must be a positive even number");
    }
    for (double x : diagonal) {
        if (!(x >= -1e-9 && x <= 1.0 + 1e-9)) {
            throw Error(ErrorCode::NotNormalized, "diagonal entries must lie in [0, 1]");
        }
    }
    const double total = std::accumulate(diagonal.begin(), diagonal.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotNormalized, "diagonal entries must sum to 1");
    }

    const std::size_t n = diagonal.size() / 2;
    const auto same = [equal_tol](double x, double y) { return std::abs(x - y) <= equal_tol; };
    const auto constant = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin + 1; i < end; ++i)
            if (!same(diagonal[i], diagonal[begin])) return false;
        return true;
    };

    SpOrbitReport report;
    report.half_dim = n;
    report.diagonal = diagonal;

    const OrbitSignature sig = signature_from_spectrum(diagonal, equal_tol);
    report.unitary_dim = orbit_dimension(sig);

    const bool uniform = sig.multiplicities.size() == 1;
    const bool pseudo_pure =
        sig.multiplicities.size() == 2 &&
        std::min(sig.multiplicities[0], sig.multiplicities[1]) == 1 &&
        std::max(sig.multiplicities[0], sig.multiplicities[1]) == 2 * n - 1;
    if (uniform || pseudo_pure) {
        report.rules.push_back({SpRule::Transitive, report.unitary_dim, true});
    }

    report.rules.push_back({SpRule::GenericTorus, 2 * n * n, false});

    bool halves_equal = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!same(diagonal[i], diagonal[n + i])) halves_equal = false;
    if (halves_equal && !constant(0, n)) {
        report.rules.push_back({SpRule::EqualHalves, 2 * n * n - 1, false});
    }

    if (constant(0, n) && constant(n, 2 * n) && !same(diagonal[0], diagonal[n])) {
        report.rules.push_back({SpRule::ScalarHalves, n * n + n, true});
    }

    std::size_t run = 1;
    while (run < 2 * n && same(diagonal[2 * n - 1 - run], diagonal.back())) ++run;
    if (run < 2 * n && run >= 2) {
        const std::size_t ell = run / 2;
        report.rules.push_back(
            {SpRule::TrailingScalarBlock, n * (2 * n + 1) - ell * (2 * ell + 1), false});
    }

    report.min_bound = report.rules.front().bound;
    for (const auto& r : report.rules) report.min_bound = std::min(report.min_bound, r.bound);
    report.min_bound_exact = std::any_of(report.rules.begin(), report.rules.end(), [&](const auto& r) {
        return r.exact && r.bound == report.min_bound;
    });
    return report;
}

std::vector<double> diagonal_from_pattern(std::string_view pattern) {
    std::vector<double> out;
    out.reserve(pattern.size());
    for (char ch : pattern) {
        if (ch < 'a' || ch > 'z') {
            throw Error(ErrorCode::Parse, "pattern letters must be lowercase a-z");
        }
        out.push_back(static_cast<double>(ch - 'a' + 1));
    }
    const double total = std::accumulate(out.begin(), out.end(), 0.0);
    for (auto& x : out) x /= total;
    return out;
}

std::vector<Table2Row> table2() {
    struct Published {
        const char* pattern;
        std::size_t bound;
    };
    static constexpr Published kRows[] = {
        {"aaaa", 0},    {"abbb", 6},    {"aabb", 6},    {"abcc", 8},    {"abcd", 8},
        {"aaaaaa", 0},  {"abbbbb", 10}, {"aabbbb", 11}, {"abcccc", 11}, {"abbccc", 18},
        {"abcddd", 18}, {"aabbcc", 18}, {"aaabbb", 12}, {"abccdd", 18}, {"abcdee", 18},
        {"abcdef", 18},
    };
    std::vector<Table2Row> rows;
    for (const auto& published : kRows) {
        Table2Row row;
        row.pattern = published.pattern;
        row.diagonal = diagonal_from_pattern(row.pattern);
        const SpOrbitReport report = sp_orbit_bounds(row.diagonal);
        row.unitary_dim = report.unitary_dim;
        row.published_bound = published.bound;
        row.computed_bound = report.min_bound;
        row.exact = report.min_bound_exact;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace orbit_atlas
