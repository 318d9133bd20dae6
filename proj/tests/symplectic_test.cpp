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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "orbit_atlas/error.hpp"
#include "orbit_atlas/linalg.hpp"
#include "orbit_atlas/quaternion.hpp"

using namespace orbit_atlas;

namespace {

std::vector<Complex> random_complex_vector(std::size_t len, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(len);
    for (auto& z : v) z = Complex(g(rng), g(rng));
    return v;
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += m(i, k) * v[k];
    return out;
}

const SpRuleBound* find_rule(const SpOrbitReport& report, SpRule rule) {
    for (const auto& r : report.rules)
        if (r.rule == rule) return &r;
    return nullptr;
}

}  // namespace

TEST(standard_J, structure) {
    const ComplexMatrix j1 = standard_J(1);
    EXPECT_EQ(j1(0, 1), Complex(1.0));
    EXPECT_EQ(j1(1, 0), Complex(-1.0));
    EXPECT_EQ(j1(0, 0), Complex(0.0));
    for (std::size_t n = 1; n <= 4; ++n) {
        const ComplexMatrix j = standard_J(n);
        EXPECT_EQ(max_abs_diff(j * j, -1.0 * ComplexMatrix::identity(2 * n)), 0.0);
        EXPECT_EQ(max_abs_diff(j.transpose(), -1.0 * j), 0.0);
        EXPECT_EQ(max_abs_diff(j.transpose() * j * j, j), 0.0);
    }
    EXPECT_THROW(standard_J(0), Error);
}

TEST(is_symplectic, examples) {
    EXPECT_TRUE(is_symplectic(ComplexMatrix::identity(4)));
    EXPECT_TRUE(is_symplectic(standard_J(2)));
    EXPECT_FALSE(is_symplectic(ComplexMatrix::diagonal({2.0, 0.5, 1.0, 1.0})));
    EXPECT_THROW(is_symplectic(ComplexMatrix::identity(3)), Error);
}

TEST(has_sp_block_form, examples) {
    EXPECT_TRUE(has_sp_block_form(ComplexMatrix::identity(6)));
    EXPECT_TRUE(has_sp_block_form(standard_J(3)));
    std::mt19937_64 rng(3);
    const ComplexMatrix u = random_unitary(4, rng);
    ASSERT_LE(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)), 1e-12);
    EXPECT_FALSE(has_sp_block_form(u));
    EXPECT_FALSE(is_symplectic(u));
    EXPECT_THROW(has_sp_block_form(ComplexMatrix::identity(5)), Error);
}

TEST(matrix_exponential, known_values) {
    // exp of a diagonal
    ComplexMatrix d(2);
    d(0, 0) = Complex(0.0, 1.0);
    d(1, 1) = 2.0;
    const ComplexMatrix e = matrix_exponential(d);
    EXPECT_NEAR(std::abs(e(0, 0) - std::exp(Complex(0.0, 1.0))), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(e(1, 1) - std::exp(2.0)), 0.0, 1e-12);
    // exp(t J) is a rotation
    const ComplexMatrix r = matrix_exponential(3.0 * standard_J(1));
    EXPECT_NEAR(r(0, 0).real(), std::cos(3.0), 1e-13);
    EXPECT_NEAR(r(0, 1).real(), std::sin(3.0), 1e-13);
    EXPECT_NEAR(r(1, 0).real(), -std::sin(3.0), 1e-13);
}

TEST(random_symplectic, deterministic) {
    EXPECT_EQ(max_abs_diff(random_symplectic(2, 42), random_symplectic(2, 42)), 0.0);
    EXPECT_GT(max_abs_diff(random_symplectic(2, 42), random_symplectic(2, 43)), 1e-3);
    EXPECT_THROW(random_symplectic(0, 1), Error);
}

TEST(random_symplectic, group_properties) {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 3; ++n) {
        const ComplexMatrix j = standard_J(n);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const ComplexMatrix s = random_symplectic(n, seed);
            EXPECT_LE(max_abs_diff(s.adjoint() * s, ComplexMatrix::identity(2 * n)), 1e-8);
            EXPECT_LE(max_abs_diff(s.transpose() * j * s, j), 1e-8);
            EXPECT_TRUE(is_symplectic(s));
            EXPECT_TRUE(has_sp_block_form(s));
            const auto z = random_complex_vector(2 * n, rng);
            const auto w = random_complex_vector(2 * n, rng);
            EXPECT_LE(std::abs(skew_form(apply(s, z), apply(s, w)) - skew_form(z, w)), 1e-8);
        }
    }
}

TEST(sp_orbit_bounds, published_examples) {
    const double b = 0.2;
    const auto pseudo = sp_orbit_bounds({0.4, b, b, b});
    EXPECT_EQ(pseudo.unitary_dim, 6u);
    EXPECT_EQ(pseudo.min_bound, 6u);
    EXPECT_TRUE(pseudo.min_bound_exact);
    ASSERT_NE(find_rule(pseudo, SpRule::Transitive), nullptr);

    const auto halves = sp_orbit_bounds({0.3, 0.3, 0.2, 0.2});
    EXPECT_EQ(halves.unitary_dim, 8u);
    EXPECT_EQ(halves.min_bound, 6u);
    EXPECT_TRUE(halves.min_bound_exact);
    ASSERT_NE(find_rule(halves, SpRule::ScalarHalves), nullptr);

    const auto generic = sp_orbit_bounds(diagonal_from_pattern("abcd"));
    EXPECT_EQ(generic.unitary_dim, 12u);
    EXPECT_EQ(generic.min_bound, 8u);
    EXPECT_FALSE(generic.min_bound_exact);

    const auto trailing = sp_orbit_bounds(diagonal_from_pattern("abcccc"));
    const auto* rule = find_rule(trailing, SpRule::TrailingScalarBlock);
    ASSERT_NE(rule, nullptr);
    EXPECT_EQ(rule->bound, 11u);
    EXPECT_EQ(trailing.min_bound, 11u);
}

TEST(sp_orbit_bounds, arrangement_matters) {
    // same spectrum, different arrangement
    const auto paired = sp_orbit_bounds({0.3, 0.2, 0.3, 0.2});
    const auto split = sp_orbit_bounds({0.3, 0.3, 0.2, 0.2});
    EXPECT_EQ(paired.unitary_dim, split.unitary_dim);
    EXPECT_NE(find_rule(paired, SpRule::EqualHalves), nullptr);
    EXPECT_EQ(find_rule(paired, SpRule::ScalarHalves), nullptr);
    EXPECT_EQ(paired.min_bound, 7u);
    EXPECT_EQ(split.min_bound, 6u);
}

TEST(sp_orbit_bounds, transitive_matches_projective_space) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<double> diag(2 * n, 0.4 / static_cast<double>(2 * n - 1));
        diag[0] = 0.6;
        const auto report = sp_orbit_bounds(diag);
        EXPECT_EQ(report.unitary_dim, 4 * n - 2);
        EXPECT_EQ(report.min_bound, 4 * n - 2);
        EXPECT_TRUE(report.min_bound_exact);
    }
}

TEST(sp_orbit_bounds, errors) {
    EXPECT_THROW(sp_orbit_bounds({0.5, 0.3, 0.2}), Error);
    EXPECT_THROW(sp_orbit_bounds({0.5, 0.5, 0.5, 0.5}), Error);
    EXPECT_THROW(sp_orbit_bounds({1.5, -0.5}), Error);
    try {
        sp_orbit_bounds({0.6, 0.6});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
    }
}

TEST(table2, dominance_and_known_discrepancy) {
    const auto rows = table2();
    ASSERT_EQ(rows.size(), 16u);
    for (const auto& row : rows) {
        // unitary column: n^2 - sum n_i^2 from letter counts
        std::size_t counts[26] = {};
        for (char ch : row.pattern) ++counts[ch - 'a'];
        std::size_t expected = row.pattern.size() * row.pattern.size();
        for (std::size_t c : counts) expected -= c * c;
        EXPECT_EQ(row.unitary_dim, expected) << row.pattern;
        EXPECT_LE(row.computed_bound, row.published_bound) << row.pattern;
        EXPECT_LE(row.computed_bound, row.unitary_dim) << row.pattern;
        if (row.pattern == "abcc") {
            EXPECT_EQ(row.computed_bound, 7u);
            EXPECT_EQ(row.published_bound, 8u);
        } else {
            EXPECT_EQ(row.computed_bound, row.published_bound) << row.pattern;
        }
    }
    EXPECT_EQ(rows[1].pattern, "abbb");
    EXPECT_EQ(rows[1].computed_bound, 6u);
    EXPECT_EQ(rows[6].pattern, "abbbbb");
    EXPECT_EQ(rows[6].computed_bound, 10u);
}

TEST(diagonal_from_pattern, weights) {
    const auto d = diagonal_from_pattern("aab");
    ASSERT_EQ(d.size(), 3u);
    EXPECT_DOUBLE_EQ(d[0], 0.25);
    EXPECT_DOUBLE_EQ(d[2], 0.5);
    EXPECT_THROW(diagonal_from_pattern("aB"), Error);
}

TEST(quaternion, basis_products) {
    using Q = Quaternion;
    const Q basis[4] = {Q::one(), Q::e1(), Q::e2(), Q::e3()};
    const Q neg_one{-1.0, 0.0, 0.0, 0.0};
    // expected[i][j] = basis[i] * basis[j]
    const Q expected[4][4] = {
        {Q::one(), Q::e1(), Q::e2(), Q::e3()},
        {Q::e1(), neg_one, Q::e3(), Q{0, 0, -1, 0}},
        {Q::e2(), Q{0, 0, 0, -1}, neg_one, Q::e1()},
        {Q::e3(), Q::e2(), Q{0, -1, 0, 0}, neg_one},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(basis[i] * basis[j], expected[i][j]) << i << "," << j;
}

TEST(quaternion, associative_on_random_values) {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    auto draw = [&] { return Quaternion{g(rng), g(rng), g(rng), g(rng)}; };
    for (int trial = 0; trial < 200; ++trial) {
        const Quaternion p = draw(), q = draw(), r = draw();
        const Quaternion lhs = (p * q) * r;
        const Quaternion rhs = p * (q * r);
        EXPECT_NEAR(lhs.w, rhs.w, 1e-12);
        EXPECT_NEAR(lhs.x, rhs.x, 1e-12);
        EXPECT_NEAR(lhs.y, rhs.y, 1e-12);
        EXPECT_NEAR(lhs.z, rhs.z, 1e-12);
    }
}

TEST(quat_to_complex, examples) {
    const Quaternion one[] = {Quaternion::one()};
    EXPECT_EQ(quat_to_complex(one), (ComplexVector{1.0, 0.0}));
    const Quaternion e2[] = {Quaternion::e2()};
    EXPECT_EQ(quat_to_complex(e2), (ComplexVector{0.0, 1.0}));
    const Quaternion e3[] = {Quaternion::e3()};
    EXPECT_EQ(quat_to_complex(e3), (ComplexVector{0.0, Complex(0.0, -1.0)}));
    // e3 = e2 (-e1)
    EXPECT_EQ(Quaternion::e2() * (Quaternion{0, -1, 0, 0}), Quaternion::e3());
}

TEST(quat_to_complex, inverse) {
    std::mt19937_64 rng(7);
    const auto z = random_complex_vector(6, rng);
    EXPECT_EQ(quat_to_complex(complex_to_quat(z)), z);
    const ComplexVector odd(3);
    EXPECT_THROW(complex_to_quat(odd), Error);
}

TEST(quat_inner, decomposition) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto z = random_complex_vector(2 * n, rng);
        const auto w = random_complex_vector(2 * n, rng);
        const Quaternion lhs = quat_inner(complex_to_quat(z), complex_to_quat(w));

        // right side: hermitian part plus e2 times the skew form, with the
        // complex numbers read as re + im e1
        Complex herm = 0.0;
        for (std::size_t i = 0; i < 2 * n; ++i) herm += std::conj(z[i]) * w[i];
        Complex skew = 0.0;
        for (std::size_t i = 0; i < n; ++i) skew += z[i] * w[n + i] - z[n + i] * w[i];
        const Quaternion rhs = Quaternion::from_complex(herm) + Quaternion::e2() * Quaternion::from_complex(skew);

        EXPECT_NEAR(lhs.w, rhs.w, 1e-12);
        EXPECT_NEAR(lhs.x, rhs.x, 1e-12);
        EXPECT_NEAR(lhs.y, rhs.y, 1e-12);
        EXPECT_NEAR(lhs.z, rhs.z, 1e-12);
    }
}

TEST(quat_inner, examples) {
    const Quaternion e2[] = {Quaternion::e2()};
    const Quaternion one[] = {Quaternion::one()};
    EXPECT_EQ(quat_inner(e2, one), (Quaternion{0, 0, -1, 0}));
    const Quaternion unit[] = {Quaternion{0.5, 0.5, 0.5, 0.5}};
    EXPECT_EQ(quat_inner(unit, unit), Quaternion::one());
    const Quaternion two[] = {Quaternion::one(), Quaternion::one()};
    EXPECT_THROW(quat_inner(one, two), Error);
}

TEST(skew_form, examples) {
    EXPECT_EQ(skew_form(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0}), Complex(1.0));
    EXPECT_EQ(skew_form(ComplexVector{0.0, 1.0}, ComplexVector{1.0, 0.0}), Complex(-1.0));
    std::mt19937_64 rng(9);
    const auto z = random_complex_vector(4, rng);
    const auto w = random_complex_vector(4, rng);
    EXPECT_EQ(skew_form(z, z), Complex(0.0));
    EXPECT_NEAR(std::abs(skew_form(z, w) + skew_form(w, z)), 0.0, 1e-15);
    EXPECT_THROW(skew_form(z, ComplexVector(2)), Error);
    EXPECT_THROW(skew_form(ComplexVector(3), ComplexVector(3)), Error);
}
