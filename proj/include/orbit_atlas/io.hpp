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

#include <iosfwd>
#include <string>
#include <vector>

#include "orbit_atlas/matrix.hpp"
#include "orbit_atlas/orbit.hpp"
#include "orbit_atlas/pauli_basis.hpp"
#include "orbit_atlas/qutrit.hpp"
#include "orbit_atlas/symplectic.hpp"

namespace orbit_atlas::io {

/// Decimal rendering with 12 significant digits.
std::string format_number(double x);

/// Rounds to 12 significant digits so JSON output stays short.
double round_12(double x);

// Matrix file: {"dim": n, "re": [[...]], "im": [[...]]}; "im" optional.
ComplexMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& m);

// Vector file: {"dim": n, "convention": "coherence"|"bloch", "components": [...]}.
CoherenceVector parse_vector_json(const std::string& text);
std::string vector_to_json(const CoherenceVector& s);

std::string read_file(const std::string& path);

void write_orbit_table_csv(std::ostream& os, const std::vector<OrbitTableRow>& rows);
void write_table2_csv(std::ostream& os, const std::vector<Table2Row>& rows);
void write_region_csv(std::ostream& os, const std::vector<RegionRecord>& records);
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points,
                     const std::string& value_column);

struct FractionRecord {
    std::size_t n = 0;
    double c2 = 0.0;
    std::size_t samples = 0;
    double fraction = 0.0;
    std::uint64_t seed = 0;
};

void write_fractions_csv(std::ostream& os, const std::vector<FractionRecord>& records);

}  // namespace orbit_atlas::io
