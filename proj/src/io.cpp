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

#include "orbit_atlas/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "orbit_atlas/error.hpp"

namespace orbit_atlas::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
}

std::size_t read_dim(const json& doc) {
    if (!doc.is_object()) parse_error("top-level JSON value must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        parse_error("\"dim\" must be an integer");
    }
    const auto dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > static_cast<long long>(kMaxDim)) parse_error("\"dim\" must lie in [1, 64]");
    return static_cast<std::size_t>(dim);
}

std::vector<double> read_rows(const json& doc, const char* key, std::size_t n) {
    const json& rows = doc[key];
    if (!rows.is_array() || rows.size() != n) {
        parse_error(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
    }
    std::vector<double> out;
    out.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) {
            parse_error(std::string("every row of \"") + key + "\" must have " + std::to_string(n) +
                        " entries");
        }
        for (const auto& x : row) {
            if (!x.is_number()) parse_error(std::string("\"") + key + "\" entries must be numbers");
            out.push_back(x.get<double>());
        }
    }
    return out;
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

ComplexMatrix parse_matrix_json(const std::string& text) {
    const json doc = parse_text(text);
    const std::size_t n = read_dim(doc);
    if (!doc.contains("re")) parse_error("\"re\" is required");
    const auto re = read_rows(doc, "re", n);
    std::vector<double> im(n * n, 0.0);
    if (doc.contains("im")) im = read_rows(doc, "im", n);
    std::vector<Complex> entries(n * n);
    for (std::size_t k = 0; k < n * n; ++k) entries[k] = Complex(re[k], im[k]);
    return ComplexMatrix(n, std::move(entries));
}

std::string matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            re_row.push_back(round_12(m(i, j).real()));
            im_row.push_back(round_12(m(i, j).imag()));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json doc;
    doc["dim"] = m.dim();
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    return doc.dump(2);
}

CoherenceVector parse_vector_json(const std::string& text) {
    const json doc = parse_text(text);
    const std::size_t n = read_dim(doc);
    if (n < kMinBasisDim || n > kMaxBasisDim) parse_error("vector \"dim\" must lie in [2, 16]");

    CoherenceVector s;
    s.dim = n;
    if (doc.contains("convention")) {
        if (!doc["convention"].is_string()) parse_error("\"convention\" must be a string");
        const auto name = doc["convention"].get<std::string>();
        if (name == "coherence") {
            s.convention = VectorConvention::Coherence;
        } else if (name == "bloch") {
            s.convention = VectorConvention::Bloch;
        } else {
            parse_error("\"convention\" must be \"coherence\" or \"bloch\"");
        }
    }
    if (!doc.contains("components") || !doc["components"].is_array()) {
        parse_error("\"components\" must be an array");
    }
    const auto& comps = doc["components"];
    if (comps.size() != n * n - 1) {
        parse_error("\"components\" must have " + std::to_string(n * n - 1) + " entries");
    }
    for (const auto& x : comps) {
        if (!x.is_number()) parse_error("\"components\" entries must be numbers");
        s.components.push_back(x.get<double>());
    }
    return s;
}

std::string vector_to_json(const CoherenceVector& s) {
    json comps = json::array();
    for (double x : s.components) comps.push_back(round_12(x));
    json doc;
    doc["dim"] = s.dim;
    doc["convention"] = std::string(convention_name(s.convention));
    doc["components"] = std::move(comps);
    return doc.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_orbit_table_csv(std::ostream& os, const std::vector<OrbitTableRow>& rows) {
    os << "partition,manifold,dimension\n";
    for (const auto& row : rows)
        os << partition_string(row.partition) << ',' << row.manifold << ',' << row.dimension << '\n';
}

void write_table2_csv(std::ostream& os, const std::vector<Table2Row>& rows) {
    os << "pattern,unitary_dim,paper_bound,computed_bound,exact\n";
    for (const auto& row : rows) {
        os << row.pattern << ',' << row.unitary_dim << ',' << row.published_bound << ','
           << row.computed_bound << ',' << (row.exact ? "true" : "false") << '\n';
    }
}

void write_region_csv(std::ostream& os, const std::vector<RegionRecord>& records) {
    os << "a,c2,class,curve1,curve2,curve3\n";
    for (const auto& r : records) {
        os << format_number(r.a) << ',' << format_number(r.c2) << ','
           << region_class_name(r.classification) << ',' << format_number(r.curves.solid) << ','
           << format_number(r.curves.dashed) << ',' << format_number(r.curves.dash_dot) << '\n';
    }
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points,
                     const std::string& value_column) {
    os << "c2,a," << value_column << '\n';
    for (const auto& p : points)
        os << format_number(p.c2) << ',' << format_number(p.a) << ',' << format_number(p.value) << '\n';
}

void write_fractions_csv(std::ostream& os, const std::vector<FractionRecord>& records) {
    os << "n,c2,samples,fraction,seed\n";
    for (const auto& r : records) {
        os << r.n << ',' << format_number(r.c2) << ',' << r.samples << ','
           << format_number(r.fraction) << ',' << r.seed << '\n';
    }
}

}  // namespace orbit_atlas::io
