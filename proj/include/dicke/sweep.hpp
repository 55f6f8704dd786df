#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/fields.hpp"
#include "dicke/io.hpp"
#include "dicke/witness.hpp"

namespace dicke {

enum class SweepScale { Linear, Log };
enum class SweepFormat { Csv, Json };

struct SweepConfig {
    FieldKind kind = FieldKind::Thermal;
    double n_min = 0.0;
    double n_max = 0.0;
    int steps = 0;
    SweepScale scale = SweepScale::Linear;
    SweepFormat format = SweepFormat::Csv;
};

inline void validate(const SweepConfig& c) {
    if (c.kind == FieldKind::Custom)
        throw std::invalid_argument("sweep supports thermal, classical, and quantum fields only");
    if (!std::isfinite(c.n_min) || !std::isfinite(c.n_max) || !(c.n_min < c.n_max))
        throw std::invalid_argument("sweep requires n_min < n_max");
    if (c.steps < 2) throw std::invalid_argument("sweep requires at least 2 steps");
    if (c.scale == SweepScale::Log && c.n_min <= 0.0)
        throw std::invalid_argument("log scale requires n_min > 0");
    if (c.n_min < 0.0) throw std::invalid_argument("sweep requires n_min >= 0");
}

// Both endpoints included; log scale is geometric spacing.
inline std::vector<double> sweep_grid(const SweepConfig& c) {
    validate(c);
    std::vector<double> grid(static_cast<size_t>(c.steps));
    const double last = static_cast<double>(c.steps - 1);
    if (c.scale == SweepScale::Linear) {
        const double span = c.n_max - c.n_min;
        for (int i = 0; i < c.steps; ++i) grid[static_cast<size_t>(i)] = c.n_min + span * (i / last);
    } else {
        const double log_min = std::log(c.n_min);
        const double log_span = std::log(c.n_max) - log_min;
        for (int i = 0; i < c.steps; ++i)
            grid[static_cast<size_t>(i)] = std::exp(log_min + log_span * (i / last));
    }
    grid.front() = c.n_min;
    grid.back() = c.n_max;
    return grid;
}

struct SweepRow {
    double n_bar = 0.0;
    XStateParams state;
    double negativity_e = 0.0;
    double xi_ku = 1.0;
    double theta_opt = 0.0;
    bool criterion_coherence = false;
    bool criterion_population = false;
};

inline FieldParams field_at(FieldKind kind, double n_bar) {
    switch (kind) {
        case FieldKind::Thermal: return thermal_field(n_bar);
        case FieldKind::ClassicalSqueezed: return classical_squeezed_field(n_bar);
        case FieldKind::QuantumSqueezed: return quantum_squeezed_field(n_bar);
        case FieldKind::Custom: break;
    }
    throw std::invalid_argument("sweep supports thermal, classical, and quantum fields only");
}

inline SweepRow evaluate_sweep_point(FieldKind kind, double n_bar) {
    SweepRow row;
    row.n_bar = n_bar;
    row.state = steady_state(field_at(kind, n_bar));
    const EntanglementReport ent = entanglement_report(row.state);
    const SqueezingResult sq = squeezing_ku(row.state);
    row.negativity_e = ent.negativity_e;
    row.xi_ku = sq.xi_ku;
    row.theta_opt = sq.theta_opt;
    row.criterion_coherence = ent.criterion_coherence;
    row.criterion_population = ent.criterion_population;
    return row;
}

// Rows in grid order; each row is a pure function of its n_bar.
inline std::vector<SweepRow> run_sweep(const SweepConfig& c) {
    const std::vector<double> grid = sweep_grid(c);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double n : grid) rows.push_back(evaluate_sweep_point(c.kind, n));
    return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "n_bar,rho_gg,rho_ee,rho_ss,re_rho_eg,im_rho_eg,negativity_e,xi_ku,theta_opt,"
    "criterion_coherence,criterion_population";

namespace detail {

// 17 significant digits: enough to round-trip any double, identical on every run.
inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace detail

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << "\n";
    for (const SweepRow& r : rows) {
        out << detail::format_full(r.n_bar) << ',' << detail::format_full(r.state.rho_gg) << ','
            << detail::format_full(r.state.rho_ee) << ',' << detail::format_full(r.state.rho_ss)
            << ',' << detail::format_full(r.state.rho_eg.real()) << ','
            << detail::format_full(r.state.rho_eg.imag()) << ','
            << detail::format_full(r.negativity_e) << ',' << detail::format_full(r.xi_ku) << ','
            << detail::format_full(r.theta_opt) << ',' << (r.criterion_coherence ? '1' : '0')
            << ',' << (r.criterion_population ? '1' : '0') << "\n";
    }
}

inline nlohmann::json rows_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        arr.push_back(nlohmann::json{{"n_bar", r.n_bar},
                                     {"rho_gg", r.state.rho_gg},
                                     {"rho_ee", r.state.rho_ee},
                                     {"rho_ss", r.state.rho_ss},
                                     {"re_rho_eg", r.state.rho_eg.real()},
                                     {"im_rho_eg", r.state.rho_eg.imag()},
                                     {"negativity_e", r.negativity_e},
                                     {"xi_ku", r.xi_ku},
                                     {"theta_opt", r.theta_opt},
                                     {"criterion_coherence", r.criterion_coherence},
                                     {"criterion_population", r.criterion_population}});
    }
    return arr;
}

// Writes the sweep to disk; a partially written file is removed on failure.
inline void write_sweep_file(const std::vector<SweepRow>& rows, const std::string& path,
                             SweepFormat format) {
    try {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        if (format == SweepFormat::Csv) {
            write_csv(rows, out);
        } else {
            out << rows_to_json(rows).dump(2) << "\n";
        }
        out.flush();
        if (!out) throw std::runtime_error("failed while writing output file: " + path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw;
    }
}

}  // namespace dicke
