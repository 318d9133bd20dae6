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
#include <string>
#include <string_view>
#include <vector>

#include "orbit_atlas/matrix.hpp"

namespace orbit_atlas {

/// [[0, I_n], [-I_n, 0]].
ComplexMatrix standard_J(std::size_t n);

/// ||S^T J S - J||_max <= tol and S unitary within tol. Throws OddDimension.
bool is_symplectic(const ComplexMatrix& s, double tol = 1e-8);

/// S == [[A, B], [-conj(B), conj(A)]] within tol. Throws OddDimension.
bool has_sp_block_form(const ComplexMatrix& s, double tol = 1e-8);

/// exp(X) for a random X in the Lie algebra of Sp(n): anti-Hermitian with
/// X^T J + J X = 0. Deterministic per seed.
ComplexMatrix random_symplectic(std::size_t n, std::uint64_t seed);

/// Scaling and squaring around a truncated Taylor series.
ComplexMatrix matrix_exponential(const ComplexMatrix& x);

enum class SpRule { Transitive, GenericTorus, EqualHalves, ScalarHalves, TrailingScalarBlock };

std::string_view sp_rule_name(SpRule r);

struct SpRuleBound {
    SpRule rule = SpRule::GenericTorus;
    std::size_t bound = 0;
    bool exact = false;
};

struct SpOrbitReport {
    std::size_t half_dim = 0;
    std::vector<double> diagonal;  // as given, not sorted
    std::vector<SpRuleBound> rules;
    std::size_t min_bound = 0;
    bool min_bound_exact = false;
    std::size_t unitary_dim = 0;
};

/// Applies every symplectic orbit-dimension rule that fits the diagonal in the
/// order given. Entries must lie in [0, 1] and sum to 1 within 1e-9, with an
/// even count; throws NotNormalized / OddDimension otherwise.
SpOrbitReport sp_orbit_bounds(const std::vector<double>& diagonal, double equal_tol = 1e-8);

struct Table2Row {
    std::string pattern;  // letters, e.g. "aabb"
    std::vector<double> diagonal;
    std::size_t unitary_dim = 0;
    std::size_t published_bound = 0;
    std::size_t computed_bound = 0;
    bool exact = false;
};

/// Diagonal with one distinct value per letter, normalized to unit trace.
std::vector<double> diagonal_from_pattern(std::string_view pattern);

/// The sixteen N = 4 and N = 6 spectrum patterns with their published
/// symplectic bounds, evaluated against sp_orbit_bounds.
std::vector<Table2Row> table2();

}  // namespace orbit_atlas
