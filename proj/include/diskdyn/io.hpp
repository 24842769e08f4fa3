#pragma once

// Map specifications as JSON and CSV tables with 17 significant digits.

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "diskdyn/errors.hpp"
#include "diskdyn/presets.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn::io {

using json = nlohmann::ordered_json;

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Cell = std::variant<double, long long, std::string>;

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
        write_line(std::vector<Cell>(header.begin(), header.end()));
    }

    void row(const std::vector<Cell>& cells) {
        if (cells.size() != columns_) {
            throw DomainError("CsvWriter: row has " + std::to_string(cells.size()) + " cells, header has " +
                              std::to_string(columns_));
        }
        write_line(cells);
    }

private:
    void write_line(const std::vector<Cell>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out_ << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out_ << format_double(v);
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        out_ << quote(v);
                    } else {
                        out_ << v;
                    }
                },
                cells[k]);
        }
        out_ << '\n';
    }

    /// RFC 4180 quoting when the field holds a comma, quote or newline.
    static std::string quote(const std::string& v) {
        if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
        std::string q = "\"";
        for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    std::ostream& out_;
    std::size_t columns_;
};

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

/// Throws DomainError naming the first key of obj not in allowed.
inline void require_known_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                               const std::string& where) {
    if (!obj.is_object()) {
        throw DomainError(where + ": expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) {
            throw DomainError(where + ": unknown field '" + key + "'");
        }
    }
}

inline double number_from_json(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw DomainError(where + ": expected a number");
    }
    return j.get<double>();
}

inline cplx complex_from_json(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError(where + ": expected a number or [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

/// A preset with its parameter, or an explicit list of stages applied in order.
struct MapSpec {
    std::string preset;
    std::optional<double> alpha;
    std::vector<FiniteBlaschkeProduct> stages;

    CompositeMap build() const {
        if (!preset.empty()) return CompositeMap(presets::by_name(preset, alpha.value_or(0.5)));
        return CompositeMap(stages);
    }

    /// Operations that need the zeros of f (preimage trees, counting) accept one stage only.
    FiniteBlaschkeProduct single_stage() const {
        const auto m = build();
        if (m.stages().size() != 1) {
            throw DomainError("this operation needs a single-stage map, got " + std::to_string(m.stages().size()) +
                              " stages");
        }
        return m.stages().front();
    }

    std::string label() const { return preset.empty() ? std::string("stages") : preset; }
};

inline MapSpec preset_spec(const std::string& name, std::optional<double> alpha = std::nullopt) {
    if (alpha && name != "example61") {
        throw DomainError("alpha applies to the example61 preset only");
    }
    MapSpec spec{name, alpha, {}};
    spec.build();
    return spec;
}

inline FiniteBlaschkeProduct stage_from_json(const json& j, const std::string& where) {
    require_known_keys(j, {"gamma", "zeros"}, where);
    if (!j.contains("zeros") || !j["zeros"].is_array()) {
        throw DomainError(where + ": 'zeros' must be an array");
    }
    const cplx gamma = j.contains("gamma") ? complex_from_json(j["gamma"], where + ".gamma") : cplx{1.0, 0.0};
    std::vector<Zero> zeros;
    for (std::size_t k = 0; k < j["zeros"].size(); ++k) {
        const auto& z = j["zeros"][k];
        const std::string at = where + ".zeros[" + std::to_string(k) + "]";
        require_known_keys(z, {"point", "multiplicity"}, at);
        if (!z.contains("point")) {
            throw DomainError(at + ": missing 'point'");
        }
        int mult = 1;
        if (z.contains("multiplicity")) {
            if (!z["multiplicity"].is_number_integer()) {
                throw DomainError(at + ".multiplicity: expected an integer");
            }
            mult = z["multiplicity"].get<int>();
        }
        zeros.push_back({complex_from_json(z["point"], at + ".point"), mult});
    }
    return {gamma, std::move(zeros)};
}

inline MapSpec map_spec_from_json(const json& j) {
    require_known_keys(j, {"preset", "alpha", "stages"}, "map");
    if (j.contains("preset") == j.contains("stages")) {
        throw DomainError("map: give exactly one of 'preset' or 'stages'");
    }
    if (j.contains("preset")) {
        if (!j["preset"].is_string()) {
            throw DomainError("map.preset: expected a string");
        }
        std::optional<double> alpha;
        if (j.contains("alpha")) alpha = number_from_json(j["alpha"], "map.alpha");
        return preset_spec(j["preset"].get<std::string>(), alpha);
    }
    if (j.contains("alpha")) {
        throw DomainError("map: 'alpha' applies to presets only");
    }
    if (!j["stages"].is_array() || j["stages"].empty()) {
        throw DomainError("map.stages: expected a non-empty array");
    }
    MapSpec spec;
    for (std::size_t k = 0; k < j["stages"].size(); ++k) {
        spec.stages.push_back(stage_from_json(j["stages"][k], "map.stages[" + std::to_string(k) + "]"));
    }
    return spec;
}

inline json to_json(const FiniteBlaschkeProduct& f) {
    json zeros = json::array();
    for (const auto& z : f.zeros()) zeros.push_back({{"point", to_json(z.point)}, {"multiplicity", z.multiplicity}});
    return {{"gamma", to_json(f.gamma())}, {"zeros", zeros}};
}

inline json to_json(const MapSpec& spec) {
    if (!spec.preset.empty()) {
        json j{{"preset", spec.preset}};
        if (spec.alpha) j["alpha"] = *spec.alpha;
        return j;
    }
    json stages = json::array();
    for (const auto& s : spec.stages) stages.push_back(to_json(s));
    return {{"stages", stages}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace diskdyn::io
