#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dicke/errors.hpp"
#include "dicke/fields.hpp"
#include "dicke/linalg.hpp"
#include "dicke/report.hpp"
#include "dicke/xstate.hpp"

namespace dicke {

inline const char* to_string(BasisKind basis) {
    return basis == BasisKind::Product ? "product" : "collective";
}

inline std::optional<BasisKind> basis_from_string(std::string_view s) {
    if (s == "product") return BasisKind::Product;
    if (s == "collective") return BasisKind::Collective;
    return std::nullopt;
}

inline const char* to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::Thermal: return "thermal";
        case FieldKind::ClassicalSqueezed: return "classical";
        case FieldKind::QuantumSqueezed: return "quantum";
        case FieldKind::Custom: return "custom";
    }
    return "custom";
}

inline std::optional<FieldKind> field_kind_from_string(std::string_view s) {
    if (s == "thermal") return FieldKind::Thermal;
    if (s == "classical") return FieldKind::ClassicalSqueezed;
    if (s == "quantum") return FieldKind::QuantumSqueezed;
    if (s == "custom") return FieldKind::Custom;
    return std::nullopt;
}

inline nlohmann::json complex_to_json(Complex z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

// Entries may be {"re":..,"im":..} objects or bare reals.
inline Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_object()) {
        if (!j.contains("re") || !j.at("re").is_number())
            throw ParseError("complex entry requires a numeric \"re\" field");
        const double re = j.at("re").get<double>();
        double im = 0.0;
        if (j.contains("im")) {
            if (!j.at("im").is_number()) throw ParseError("complex \"im\" field must be numeric");
            im = j.at("im").get<double>();
        }
        return Complex(re, im);
    }
    throw ParseError("complex entry must be a number or an {\"re\",\"im\"} object");
}

// Density-matrix file: { "basis": "product"|"collective", "matrix": 4x4 array
// of complex entries }. The basis field is optional on input; extra keys are
// ignored so exported reports stay readable.
struct DensityMatrixFile {
    std::optional<BasisKind> basis;
    Matrix4 matrix;
};

inline nlohmann::json density_matrix_to_json(const Matrix4& m, BasisKind basis) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"basis", to_string(basis)}, {"matrix", std::move(rows)}};
}

inline DensityMatrixFile density_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("density-matrix file must be a JSON object");
    DensityMatrixFile f;
    if (j.contains("basis")) {
        if (!j.at("basis").is_string()) throw ParseError("\"basis\" must be a string");
        const auto basis = basis_from_string(j.at("basis").get<std::string>());
        if (!basis) throw ParseError("\"basis\" must be \"product\" or \"collective\"");
        f.basis = *basis;
    }
    if (!j.contains("matrix")) throw ParseError("density-matrix file requires a \"matrix\" field");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 4) throw ParseError("\"matrix\" must be a 4x4 array");
    for (int i = 0; i < 4; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != 4) throw ParseError("\"matrix\" must be a 4x4 array");
        for (int j2 = 0; j2 < 4; ++j2) f.matrix(i, j2) = complex_from_json(row.at(j2));
    }
    return f;
}

inline nlohmann::json report_to_json(const WitnessReport& r) {
    nlohmann::json j{
        {"state",
         {{"rho_gg", r.state.rho_gg},
          {"rho_ee", r.state.rho_ee},
          {"rho_ss", r.state.rho_ss},
          {"rho_eg", complex_to_json(r.state.rho_eg)}}},
        {"negativity_e", r.entanglement.negativity_e},
        {"mu",
         {{"mu_1p", r.entanglement.mu.mu_1p},
          {"mu_1m", r.entanglement.mu.mu_1m},
          {"mu_2p", r.entanglement.mu.mu_2p},
          {"mu_2m", r.entanglement.mu.mu_2m}}},
        {"criterion_coherence", r.entanglement.criterion_coherence},
        {"criterion_population", r.entanglement.criterion_population},
        {"xi_ku", r.squeezing.xi_ku},
        {"theta_opt", r.squeezing.theta_opt},
        {"probabilities",
         {{"pi_plus", r.spectrum.pi_plus},
          {"pi_minus", r.spectrum.pi_minus},
          {"pi_s", r.spectrum.pi_s},
          {"pi_a", r.spectrum.pi_a}}}};
    if (r.squeezing.xi_wineland)
        j["xi_wineland"] = *r.squeezing.xi_wineland;
    else
        j["xi_wineland"] = nullptr;
    return j;
}

}  // namespace dicke
