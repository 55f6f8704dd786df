// Command-line front end: single-state analysis, steady-state evaluation, and
// parameter sweeps over the driving-field intensity. Exit codes: 0 success,
// 2 usage or parse failure, 3 unphysical matrix, 4 non-X-form matrix,
// 5 unphysical field.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/fields.hpp"
#include "dicke/io.hpp"
#include "dicke/report.hpp"
#include "dicke/sweep.hpp"
#include "dicke/xstate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotPhysical = 3;
constexpr int kExitNotXForm = 4;
constexpr int kExitUnphysicalField = 5;

void print_report(const dicke::WitnessReport& report) {
    std::cout << dicke::report_to_json(report).dump(2) << "\n";
}

int run_analyze(const std::string& input_path, const std::string& basis_flag) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file: " << input_path << "\n";
        return kExitUsage;
    }

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON in " << input_path << ": " << e.what() << "\n";
        return kExitUsage;
    }

    dicke::DensityMatrixFile file;
    try {
        file = dicke::density_matrix_from_json(j);
    } catch (const dicke::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    dicke::BasisKind basis = dicke::BasisKind::Product;
    if (!basis_flag.empty()) {
        const auto flag_basis = dicke::basis_from_string(basis_flag);
        if (!flag_basis) {
            std::cerr << "error: --basis must be \"product\" or \"collective\"\n";
            return kExitUsage;
        }
        if (file.basis && *file.basis != *flag_basis) {
            std::cerr << "error: --basis " << basis_flag << " contradicts the file's \""
                      << dicke::to_string(*file.basis) << "\" basis field\n";
            return kExitUsage;
        }
        basis = *flag_basis;
    } else if (file.basis) {
        basis = *file.basis;
    }

    dicke::XStateParams params;
    try {
        params = dicke::from_density_matrix(file.matrix, basis);
    } catch (const dicke::NotXForm& e) {
        std::cerr << "error: not an X-form matrix: " << e.what() << "\n";
        return kExitNotXForm;
    } catch (const dicke::NotPhysical& e) {
        std::cerr << "error: not a physical density matrix: " << e.what() << "\n";
        return kExitNotPhysical;
    } catch (const dicke::InvalidStateParams& e) {
        std::cerr << "error: not a physical density matrix: " << e.what() << "\n";
        return kExitNotPhysical;
    }

    print_report(dicke::analyze_state(params));
    return kExitOk;
}

int run_steady_state(const std::string& field_name, double n_bar, bool m_abs_given, double m_abs,
                     double m_arg, const std::string& export_path) {
    const auto kind = dicke::field_kind_from_string(field_name);
    if (!kind) {
        std::cerr << "error: unknown field kind: " << field_name << "\n";
        return kExitUsage;
    }
    if (m_abs_given && *kind != dicke::FieldKind::Custom) {
        std::cerr << "error: --m-abs is only meaningful with --field custom\n";
        return kExitUsage;
    }

    dicke::FieldParams field;
    switch (*kind) {
        case dicke::FieldKind::Thermal:
            field = dicke::thermal_field(n_bar);
            break;
        case dicke::FieldKind::ClassicalSqueezed:
            field = dicke::classical_squeezed_field(n_bar, m_arg);
            break;
        case dicke::FieldKind::QuantumSqueezed:
            field = dicke::quantum_squeezed_field(n_bar, m_arg);
            break;
        case dicke::FieldKind::Custom:
            field = dicke::custom_field(n_bar, std::polar(m_abs, m_arg));
            break;
    }

    dicke::XStateParams state;
    try {
        state = dicke::steady_state(field);
    } catch (const dicke::UnphysicalField& e) {
        std::cerr << "error: unphysical field: " << e.what() << "\n";
        return kExitUnphysicalField;
    }

    const dicke::WitnessReport report = dicke::analyze_state(state);
    nlohmann::json j = dicke::report_to_json(report);
    j["field"] = {{"kind", dicke::to_string(*kind)},
                  {"n_bar", n_bar},
                  {"m_corr", dicke::complex_to_json(field.m_corr)}};
    std::cout << j.dump(2) << "\n";

    if (!export_path.empty()) {
        const dicke::Matrix4 rho = dicke::to_density_matrix(state, dicke::BasisKind::Product);
        std::ofstream out(export_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot open export file: " << export_path << "\n";
            return 1;
        }
        out << dicke::density_matrix_to_json(rho, dicke::BasisKind::Product).dump(2) << "\n";
    }
    return kExitOk;
}

int run_sweep(const std::string& field_name, double n_min, double n_max, int steps,
              const std::string& scale_name, const std::string& output_path,
              const std::string& format_name) {
    const auto kind = dicke::field_kind_from_string(field_name);
    if (!kind) {
        std::cerr << "error: unknown field kind: " << field_name << "\n";
        return kExitUsage;
    }

    dicke::SweepConfig config;
    config.kind = *kind;
    config.n_min = n_min;
    config.n_max = n_max;
    config.steps = steps;
    config.scale = scale_name == "log" ? dicke::SweepScale::Log : dicke::SweepScale::Linear;
    config.format = format_name == "json" ? dicke::SweepFormat::Json : dicke::SweepFormat::Csv;

    std::vector<dicke::SweepRow> rows;
    try {
        rows = dicke::run_sweep(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid sweep configuration: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        dicke::write_sweep_file(rows, output_path, config.format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement and spin squeezing in the two-atom Dicke model"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyze a density-matrix JSON file");
    std::string input_path;
    std::string basis_flag;
    analyze->add_option("--input", input_path, "Path to the density-matrix JSON file")->required();
    analyze->add_option("--basis", basis_flag, "Basis of the matrix (product|collective)")
        ->check(CLI::IsMember({"product", "collective"}));

    // steady-state
    auto* steady = app.add_subcommand("steady-state", "Analytic steady state for a driving field");
    std::string field_name;
    double n_bar = 0.0;
    double m_arg = 0.0;
    double m_abs = 0.0;
    steady->add_option("--field", field_name, "thermal|classical|quantum|custom")
        ->required()
        ->check(CLI::IsMember({"thermal", "classical", "quantum", "custom"}));
    steady->add_option("--n", n_bar, "Mean photon number N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* m_abs_option =
        steady->add_option("--m-abs", m_abs, "Two-photon correlation |M| (custom field only)");
    steady->add_option("--m-arg", m_arg, "Phase of M in radians");
    std::string export_path;
    steady->add_option("--export", export_path, "Write the product-basis density matrix here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep the steady state over N and write rows");
    std::string sweep_field;
    double n_min = 0.0, n_max = 0.0;
    int steps = 0;
    std::string scale_name = "linear";
    std::string output_path;
    std::string format_name = "csv";
    sweep->add_option("--field", sweep_field, "thermal|classical|quantum")
        ->required()
        ->check(CLI::IsMember({"thermal", "classical", "quantum"}));
    sweep->add_option("--n-min", n_min, "Lowest N")->required();
    sweep->add_option("--n-max", n_max, "Highest N")->required();
    sweep->add_option("--steps", steps, "Number of grid points (endpoints included)")->required();
    sweep->add_option("--scale", scale_name, "Grid spacing")
        ->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--output", output_path, "Output file path")->required();
    sweep->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(input_path, basis_flag);
        if (app.got_subcommand(steady))
            return run_steady_state(field_name, n_bar, m_abs_option->count() > 0, m_abs, m_arg,
                                    export_path);
        if (app.got_subcommand(sweep))
            return run_sweep(sweep_field, n_min, n_max, steps, scale_name, output_path,
                             format_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
