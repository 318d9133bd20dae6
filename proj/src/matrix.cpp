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

#include "orbit_atlas/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbit_atlas/error.hpp"

namespace orbit_atlas {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotUnitTrace: return "NotUnitTrace";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::AmbiguousClustering: return "AmbiguousClustering";
        case ErrorCode::OddDimension: return "OddDimension";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ: " +
                                                      std::to_string(a.dim()) + " vs " +
                                                      std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                        std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(dim_);
    std::transform(data_.begin(), data_.end(), out.data_.begin(),
                   [](Complex z) { return std::conj(z); });
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& z : data_) best = std::max(best, std::abs(z));
    return best;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
    if (v.size() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    }
    std::vector<Complex> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    double best = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    return best;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return t;
}

}  // namespace orbit_atlas
