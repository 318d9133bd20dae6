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

#include <span>
#include <vector>

#include "orbit_atlas/matrix.hpp"

namespace orbit_atlas {

/// w + x e1 + y e2 + z e3 with e_i^2 = -1 and e1 e2 = e3 (cyclic).
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion e1() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion e2() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion e3() { return {0.0, 0.0, 0.0, 1.0}; }

    /// Embeds re + im e1.
    static constexpr Quaternion from_complex(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

using QuaternionVector = std::vector<Quaternion>;
using ComplexVector = std::vector<Complex>;

/// H^n -> C^2n with q_i = z_i + e2 z_{n+i}, i.e. for q = q0 + q1 e1 + q2 e2 + q3 e3:
/// z_i = q0 + i q1 and z_{n+i} = q2 - i q3.
ComplexVector quat_to_complex(std::span<const Quaternion> qvec);

/// Inverse of quat_to_complex; throws LengthMismatch on odd length.
QuaternionVector complex_to_quat(std::span<const Complex> zvec);

/// sum_i conj(q_i) q'_i.
Quaternion quat_inner(std::span<const Quaternion> q, std::span<const Quaternion> q2);

/// sum_{i<=n} (z_i z'_{n+i} - z_{n+i} z'_i).
Complex skew_form(std::span<const Complex> z, std::span<const Complex> z2);

}  // namespace orbit_atlas
