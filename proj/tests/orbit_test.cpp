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
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "orbit_atlas/error.hpp"

using namespace orbit_atlas;

namespace {

DensityMatrix diag(std::initializer_list<double> values) {
    return DensityMatrix::validate(ComplexMatrix::diagonal(values));
}

DensityMatrix diag(const std::vector<double>& values) {
    return DensityMatrix::validate(ComplexMatrix::diagonal(values));
}

// A doubly-stochastic average of permutations of p is majorized by p.
std::vector<double> permutation_average(const std::vector<double>& p, std::mt19937_64& rng) {
    const auto weights = random_probability_vector(4, rng);
    std::vector<double> out(p.size(), 0.0);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (double w : weights) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < p.size(); ++i) out[i] += w * p[perm[i]];
    }
    return out;
}

}  // namespace

TEST(orbit_signature, qutrit_examples) {
    const auto center = orbit_signature(DensityMatrix::maximally_mixed(3));
    EXPECT_EQ(center.multiplicities, std::vector<std::size_t>({3}));
    EXPECT_EQ(center.state_class, StateClass::CompletelyRandom);

    const auto pseudo = orbit_signature(diag({0.6, 0.2, 0.2}));
    ASSERT_EQ(pseudo.distinct_values.size(), 2u);
    EXPECT_NEAR(pseudo.distinct_values[0], 0.6, 1e-12);
    EXPECT_NEAR(pseudo.distinct_values[1], 0.2, 1e-12);
    EXPECT_EQ(pseudo.multiplicities, std::vector<std::size_t>({1, 2}));
    EXPECT_EQ(pseudo.state_class, StateClass::PseudoPure);

    const auto generic = orbit_signature(diag({0.5, 0.3, 0.2}));
    EXPECT_EQ(generic.multiplicities, std::vector<std::size_t>({1, 1, 1}));
    EXPECT_EQ(generic.state_class, StateClass::Generic);
}

TEST(orbit_signature, other_classes) {
    EXPECT_EQ(orbit_signature(diag({1, 0, 0})).state_class, StateClass::Pure);
    EXPECT_EQ(orbit_signature(diag({0.4, 0.4, 0.2})).state_class, StateClass::PseudoPure);
    EXPECT_EQ(orbit_signature(diag({0.3, 0.3, 0.2, 0.2})).state_class, StateClass::OtherDegenerate);
    EXPECT_EQ(orbit_signature(diag({0.7, 0.3})).state_class, StateClass::PseudoPure);
}

TEST(orbit_signature, ambiguous_clustering) {
    // Two linked pairs: {0.4, 0.4 - 0.9e-8} and {0.4 - 1.95e-8, 0.4 - 2.85e-8}.
    // The pairs are split (gap 1.05e-8) but their means differ by 1.95e-8.
    const std::vector<double> spectrum = {0.4, 0.4 - 0.9e-8, 0.4 - 1.95e-8, 0.4 - 2.85e-8};
    try {
        signature_from_spectrum(spectrum, 1e-8);
        FAIL() << "expected AmbiguousClustering";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AmbiguousClustering);
    }
}

TEST(orbit_signature, invariant_under_conjugation) {
    std::mt19937_64 rng(12);
    const std::vector<std::vector<double>> spectra = {
        {0.5, 0.3, 0.2}, {0.6, 0.2, 0.2}, {0.25, 0.25, 0.25, 0.25}, {0.4, 0.4, 0.1, 0.1},
        {0.3, 0.3, 0.3, 0.1}, {0.2, 0.2, 0.2, 0.2, 0.1, 0.1}};
    for (const auto& values : spectra) {
        const auto rho = diag(values);
        const auto base = orbit_signature(rho);
        for (int trial = 0; trial < 20; ++trial) {
            const auto moved =
                DensityMatrix::validate(conjugate_by(random_unitary(values.size(), rng), rho.matrix()));
            const auto sig = orbit_signature(moved);
            ASSERT_EQ(sig.multiplicities, base.multiplicities);
            for (std::size_t i = 0; i < sig.distinct_values.size(); ++i)
                EXPECT_NEAR(sig.distinct_values[i], base.distinct_values[i], 1e-10);
            EXPECT_EQ(orbit_dimension(sig), orbit_dimension(base));
        }
    }
}

TEST(orbit_dimension, table_rows) {
    EXPECT_EQ(orbit_dimension(3, {1, 2}), 4u);
    EXPECT_EQ(orbit_dimension(4, {2, 2}), 8u);
    EXPECT_EQ(orbit_dimension(2, {1, 1}), 2u);
    EXPECT_EQ(orbit_dimension(3, {3}), 0u);
}

TEST(flag_manifold_name, examples) {
    EXPECT_EQ(flag_manifold_name(3, {3}), "point");
    EXPECT_EQ(flag_manifold_name(3, {1, 2}), "U(3)/[U(1)xU(2)] = CP^2");
    EXPECT_EQ(flag_manifold_name(3, {2, 1}), "U(3)/[U(1)xU(2)] = CP^2");
    EXPECT_EQ(flag_manifold_name(4, {1, 1, 1, 1}), "U(4)/[U(1)xU(1)xU(1)xU(1)]");
    EXPECT_EQ(flag_manifold_name(2, {1, 1}), "U(2)/[U(1)xU(1)] = CP^1");
    EXPECT_EQ(flag_manifold_name(4, {2, 2}), "U(4)/[U(2)xU(2)]");
}

TEST(enumerate_orbit_table, dimensions) {
    auto dims = [](std::size_t n) {
        std::vector<std::size_t> out;
        for (const auto& row : enumerate_orbit_table(n)) out.push_back(row.dimension);
        return out;
    };
    EXPECT_EQ(dims(2), std::vector<std::size_t>({0, 2}));
    EXPECT_EQ(dims(3), std::vector<std::size_t>({0, 4, 6}));
    EXPECT_EQ(dims(4), std::vector<std::size_t>({0, 6, 8, 10, 12}));
    EXPECT_THROW(enumerate_orbit_table(1), Error);
    EXPECT_THROW(enumerate_orbit_table(9), Error);
}

TEST(enumerate_orbit_table, partition_counts_and_parity) {
    // p(n) for n = 2..8
    const std::size_t partitions[] = {2, 3, 5, 7, 11, 15, 22};
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto rows = enumerate_orbit_table(n);
        EXPECT_EQ(rows.size(), partitions[n - 2]);
        for (const auto& row : rows) {
            EXPECT_EQ(row.dimension % 2, 0u) << partition_string(row.partition);
            EXPECT_EQ(std::accumulate(row.partition.begin(), row.partition.end(), std::size_t{0}), n);
        }
        EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                                   [](const auto& a, const auto& b) { return a.dimension < b.dimension; }));
    }
}

TEST(majorize_compare, published_fixtures) {
    // Sorted, (1,1,3)/5 is (3,1,1)/5: partial sums 3/5, 4/5 against 2/5, 4/5.
    // Only the unsorted reading 1 <= 2, 1+1 <= 2+2 would make it the smaller one.
    EXPECT_EQ(majorize_compare(diag({0.2, 0.2, 0.6}), diag({0.4, 0.4, 0.2})), Majorization::Greater);
    EXPECT_EQ(majorize_compare(diag({0.4, 0.4, 0.2}), diag({0.2, 0.2, 0.6})), Majorization::Less);
    EXPECT_EQ(majorize_compare(std::vector<double>{0.5, 0.3, 0.2}, std::vector<double>{0.6, 0.3, 0.1}),
              Majorization::Less);
    EXPECT_EQ(majorize_compare(diag({5.0 / 8, 2.0 / 8, 1.0 / 8}), diag({4.0 / 8, 4.0 / 8, 0.0})),
              Majorization::Incomparable);
    const auto rho = diag({0.5, 0.3, 0.2});
    EXPECT_EQ(majorize_compare(rho, rho), Majorization::Equal);
    EXPECT_THROW(majorize_compare(rho, DensityMatrix::maximally_mixed(2)), Error);
}

TEST(majorize_compare, maximally_mixed_is_least) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = random_density(4, rng);
        const auto m = majorize_compare(DensityMatrix::maximally_mixed(4), rho);
        EXPECT_TRUE(m == Majorization::Less || m == Majorization::Equal);
    }
}

TEST(majorize_compare, entropy_and_purity_consistency) {
    std::mt19937_64 rng(31);
    int strict = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto p2 = random_probability_vector(n, rng);
        const auto p1 = permutation_average(p2, rng);
        const auto rho1 = diag(p1);
        const auto rho2 = diag(p2);
        const auto order = majorize_compare(rho1, rho2);
        ASSERT_TRUE(order == Majorization::Less || order == Majorization::Equal);
        if (order == Majorization::Less) {
            ++strict;
            EXPECT_GE(von_neumann_entropy(rho1), von_neumann_entropy(rho2) - 1e-9);
            EXPECT_LE(rho1.purity(), rho2.purity() + 1e-12);
        }
    }
    EXPECT_GT(strict, 900);
}

TEST(von_neumann_entropy, examples) {
    EXPECT_EQ(von_neumann_entropy(diag({1, 0, 0})), 0.0);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), std::log(3.0), 1e-15);
    const double expected = -(0.5 * std::log(0.5) + 0.3 * std::log(0.3) + 0.2 * std::log(0.2));
    EXPECT_NEAR(von_neumann_entropy(diag({0.5, 0.3, 0.2})), expected, 1e-14);
    EXPECT_NEAR(expected, 1.0296530140645737, 1e-15);
}

TEST(von_neumann_entropy, bounded_by_log_n) {
    std::mt19937_64 rng(4);
    for (std::size_t n : {2u, 3u, 6u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const double s = von_neumann_entropy(random_density(n, rng));
            EXPECT_GE(s, 0.0);
            EXPECT_LE(s, std::log(static_cast<double>(n)));
        }
    }
}
