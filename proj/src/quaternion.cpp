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

#include "orbit_atlas/quaternion.hpp"

#include "orbit_atlas/error.hpp"

namespace orbit_atlas {

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

ComplexVector quat_to_complex(std::span<const Quaternion> qvec) {
    const std::size_t n = qvec.size();
    ComplexVector z(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = Complex(qvec[i].w, qvec[i].x);
        z[n + i] = Complex(qvec[i].y, -qvec[i].z);
    }
    return z;
}

QuaternionVector complex_to_quat(std::span<const Complex> zvec) {
    if (zvec.size() % 2 != 0) {
        throw Error(ErrorCode::LengthMismatch, "complex vector length must be even");
    }
    const std::size_t n = zvec.size() / 2;
    QuaternionVector q(n);
    for (std::size_t i = 0; i < n; ++i)
        q[i] = {zvec[i].real(), zvec[i].imag(), zvec[n + i].real(), -zvec[n + i].imag()};
    return q;
}

Quaternion quat_inner(std::span<const Quaternion> q, std::span<const Quaternion> q2) {
    if (q.size() != q2.size()) {
        throw Error(ErrorCode::LengthMismatch, "quaternion vectors differ in length");
    }
    Quaternion sum;
    for (std::size_t i = 0; i < q.size(); ++i) sum = sum + quat_mul(q[i].conj(), q2[i]);
    return sum;
}

Complex skew_form(std::span<const Complex> z, std::span<const Complex> z2) {
    if (z.size() != z2.size() || z.size() % 2 != 0) {
        throw Error(ErrorCode::LengthMismatch, "skew form needs two vectors of equal even length");
    }
    const std::size_t n = z.size() / 2;
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += z[i] * z2[n + i] - z[n + i] * z2[i];
    return s;
}

}  // namespace orbit_atlas
