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

#include "orbit_atlas/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbit_atlas/error.hpp"
#include "orbit_atlas/io.hpp"
#include "orbit_atlas/linalg.hpp"
#include "orbit_atlas/orbit.hpp"
#include "orbit_atlas/pauli_basis.hpp"
#include "orbit_atlas/qutrit.hpp"
#include "orbit_atlas/symplectic.hpp"

namespace orbit_atlas::cli {

namespace {

using nlohmann::json;

constexpr double kThirdSnap = 1e-6;
constexpr const char* kTolEnv = "ORBIT_ATLAS_TOL";

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double parse_real(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value)) {
        input_error("invalid " + what + ": '" + text + "'");
    }
    return value;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
        case ErrorCode::ParameterOutOfRange:
        case ErrorCode::DimensionOutOfRange:
        case ErrorCode::LengthMismatch:
            return kExitInput;
        default:
            return kExitValidation;
    }
}

struct Settings {
    std::optional<std::string> tol_text;
    double cluster_tol = kDefaultClusterTol;
    std::optional<std::string> output;

    double tol() const {
        double value = kDefaultTol;
        if (const char* env = std::getenv(kTolEnv); env != nullptr && *env != '\0') {
            value = parse_real(env, std::string(kTolEnv));
        }
        if (tol_text) value = parse_real(*tol_text, "--tol");
        if (value < 0.0) input_error("tolerance must be non-negative");
        return value;
    }
};

void emit(const Settings& settings, std::ostream& out, const std::string& text) {
    if (settings.output) {
        std::ofstream file(*settings.output, std::ios::binary);
        if (!file) input_error("cannot write " + *settings.output);
        file << text;
        return;
    }
    out << text;
}

json rounded_array(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(io::round_12(v));
    return arr;
}

std::string cmd_classify(const Settings& settings, const std::string& input) {
    const double tol = settings.tol();
    ComplexMatrix m = io::parse_matrix_json(io::read_file(input));
    const DensityMatrix rho = DensityMatrix::validate(std::move(m), tol);
    const OrbitSignature sig = orbit_signature(rho, settings.cluster_tol);

    const double purity = rho.purity();
    double radius = 0.0;
    if (rho.dim() >= kMinBasisDim && rho.dim() <= kMaxBasisDim) {
        radius = to_coherence_vector(rho).norm();
    } else {
        radius = std::sqrt(std::max(0.0, purity - 1.0 / static_cast<double>(rho.dim())));
    }

    json doc;
    doc["dim"] = rho.dim();
    doc["spectrum"] = rounded_array(rho.spectrum());
    doc["distinct_values"] = rounded_array(sig.distinct_values);
    doc["multiplicities"] = sig.multiplicities;
    doc["state_class"] = std::string(state_class_name(sig.state_class));
    doc["flag_manifold"] = flag_manifold_name(sig);
    doc["orbit_dimension"] = orbit_dimension(sig);
    doc["entropy"] = io::round_12(von_neumann_entropy(rho));
    doc["coherence_radius"] = io::round_12(radius);
    doc["purity"] = io::round_12(purity);
    return doc.dump(2) + "\n";
}

std::string cmd_bloch(const Settings& settings, const std::string& input, const std::string& to,
                      const std::string& convention, bool check) {
    const double tol = settings.tol();
    const std::string text = io::read_file(input);
    if (to == "vector") {
        const DensityMatrix rho = DensityMatrix::validate(io::parse_matrix_json(text), tol);
        if (rho.dim() < kMinBasisDim || rho.dim() > kMaxBasisDim) {
            input_error("coherence vectors need 2 <= dim <= 16");
        }
        const auto target =
            convention == "bloch" ? VectorConvention::Bloch : VectorConvention::Coherence;
        const CoherenceVector s = convert_convention(to_coherence_vector(rho), target);
        json doc = json::parse(io::vector_to_json(s));
        if (check) {
            const auto result = is_physical_vector(s, tol);
            doc["check"] = {{"physical", result.physical},
                            {"min_eigenvalue", io::round_12(result.min_eigenvalue)}};
        }
        return doc.dump(2) + "\n";
    }
    const CoherenceVector s = io::parse_vector_json(text);
    json doc = json::parse(io::matrix_to_json(from_coherence_vector(s)));
    if (check) {
        const auto result = is_physical_vector(s, tol);
        doc["check"] = {{"physical", result.physical},
                        {"min_eigenvalue", io::round_12(result.min_eigenvalue)}};
    }
    return doc.dump(2) + "\n";
}

std::string cmd_tables(const std::string& which) {
    std::ostringstream os;
    if (which == "sp") {
        io::write_table2_csv(os, table2());
        return os.str();
    }
    char* end = nullptr;
    const long n = std::strtol(which.c_str(), &end, 10);
    if (which.empty() || end != which.c_str() + which.size() || n < 2 || n > 8) {
        input_error("tables expects an integer n in [2, 8] or 'sp', got '" + which + "'");
    }
    io::write_orbit_table_csv(os, enumerate_orbit_table(static_cast<std::size_t>(n)));
    return os.str();
}

struct QutritFlags {
    std::optional<std::string> c2;
    std::size_t a_steps = 600;
    std::size_t n = 3;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
};

std::vector<double> c2_values(const QutritFlags& flags) {
    if (flags.c2) return {parse_c2(*flags.c2)};
    return default_c2_grid();
}

std::string cmd_qutrit(const std::string& which, const QutritFlags& flags) {
    std::ostringstream os;
    if (which == "region") {
        io::write_region_csv(os, region_grid(c2_values(flags), default_a_grid(flags.a_steps)));
    } else if (which == "fig2" || which == "fig3") {
        std::vector<CurvePoint> points;
        const auto grid = default_a_grid(flags.a_steps);
        for (double c2 : c2_values(flags)) {
            const CurveResult curve = which == "fig2" ? fig2_curve(c2, grid) : fig3_curve(c2, grid);
            points.insert(points.end(), curve.points.begin(), curve.points.end());
        }
        io::write_curve_csv(os, points, which == "fig2" ? "a_plus_b" : "entropy");
    } else {
        std::vector<double> values;
        if (flags.c2) {
            values.push_back(parse_c2(*flags.c2));
        } else {
            for (int k = 5; k <= 10; ++k)
                if (k / 10.0 > 1.0 / static_cast<double>(flags.n)) values.push_back(k / 10.0);
        }
        std::vector<io::FractionRecord> records;
        for (double c2 : values) {
            records.push_back({flags.n, c2, flags.samples,
                               sphere_physical_fraction(flags.n, c2, flags.samples, flags.seed),
                               flags.seed});
        }
        io::write_fractions_csv(os, records);
    }
    return os.str();
}

}  // namespace

double parse_c2(const std::string& text) {
    double value = 0.0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const double num = parse_real(text.substr(0, slash), "--c2 numerator");
        const double den = parse_real(text.substr(slash + 1), "--c2 denominator");
        if (den == 0.0) input_error("--c2 denominator is zero");
        value = num / den;
    } else {
        value = parse_real(text, "--c2");
    }
    if (std::abs(value - 1.0 / 3.0) <= kThirdSnap) value = 1.0 / 3.0;
    return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbit geometry of finite-dimensional quantum states."};
    app.name(args.empty() ? "orbit-atlas" : args[0]);
    app.require_subcommand(1);

    Settings settings;
    app.add_option("--tol", settings.tol_text, "Validation tolerance (default 1e-9, env ORBIT_ATLAS_TOL)");
    app.add_option("--cluster-tol", settings.cluster_tol, "Eigenvalue clustering tolerance")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output", settings.output, "Write the result to this file");

    std::string input;
    auto* classify = app.add_subcommand("classify", "Orbit report for a density matrix file");
    classify->add_option("--input", input, "Matrix JSON file")->required();

    std::string to;
    std::string convention = "coherence";
    bool check = false;
    auto* bloch = app.add_subcommand("bloch", "Convert between matrices and coherence/Bloch vectors");
    bloch->add_option("--input", input, "Matrix or vector JSON file")->required();
    bloch->add_option("--to", to, "Target representation")
        ->required()
        ->check(CLI::IsMember({"vector", "matrix"}));
    bloch->add_option("--convention", convention, "Vector convention for --to vector")
        ->check(CLI::IsMember({"coherence", "bloch"}));
    bloch->add_flag("--check", check, "Report physicality and the minimum eigenvalue");

    std::string which_table;
    auto* tables = app.add_subcommand("tables", "Orbit table for n in [2, 8], or 'sp' for Sp(n) bounds");
    tables->add_option("which", which_table, "n or sp")->required();

    QutritFlags qflags;
    std::string qutrit_command;
    auto* qutrit = app.add_subcommand("qutrit", "Qutrit (a, c2) datasets");
    qutrit->require_subcommand(1);
    for (const char* name : {"region", "fig2", "fig3", "fraction"}) {
        auto* sub = qutrit->add_subcommand(name);
        sub->add_option("--c2", qflags.c2, "Purity Tr(rho^2); decimal or p/q");
        if (std::string(name) == "fraction") {
            sub->add_option("--n", qflags.n, "Hilbert space dimension")->check(CLI::Range(2, 16));
            sub->add_option("--samples", qflags.samples, "Monte Carlo samples")
                ->check(CLI::PositiveNumber);
            sub->add_option("--seed", qflags.seed, "Random seed");
        } else {
            sub->add_option("--a-steps", qflags.a_steps, "Steps of the a grid over [1/3, 1]")
                ->check(CLI::PositiveNumber);
        }
        sub->fallthrough();
        sub->callback([&qutrit_command, name] { qutrit_command = name; });
    }

    for (auto* sub : {classify, bloch, tables, qutrit}) sub->fallthrough();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        std::string result;
        if (classify->parsed()) {
            result = cmd_classify(settings, input);
        } else if (bloch->parsed()) {
            result = cmd_bloch(settings, input, to, convention, check);
        } else if (tables->parsed()) {
            result = cmd_tables(which_table);
        } else {
            result = cmd_qutrit(qutrit_command, qflags);
        }
        emit(settings, out, result);
    } catch (const Error& e) {
        err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace orbit_atlas::cli
