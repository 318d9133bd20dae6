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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace orbit_atlas {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    Complex trace() const;

    /// Largest entry modulus.
    double max_abs() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// max_{ij} |a_ij - b_ij|; throws DimensionMismatch on unequal sizes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace orbit_atlas
