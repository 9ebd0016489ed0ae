#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tdesign/design.hpp"
#include "tdesign/harmonic.hpp"
#include "tdesign/interval_design.hpp"

namespace tdesign {

/// On-disk design format: versioned JSON, points as decimal arrays (binary64
/// round-trip exact), with optional provenance metadata.
struct DesignFile {
    static constexpr int current_version = 1;

    int format_version = current_version;
    std::string kind;  // "euclidean" | "interval"
    int dim = 0;
    std::vector<std::vector<double>> points;  // interval designs use [c] singletons
    std::vector<double> weights;
    std::optional<std::string> constructor_name;
    nlohmann::json parameters;  // null or object
    std::optional<int> claimed_strength;
};

DesignFile make_design_file(const WeightedPointSet& x, const std::string& constructor_name = "",
                            nlohmann::json parameters = nullptr,
                            std::optional<int> claimed_strength = std::nullopt);
DesignFile make_design_file(const IntervalDesign& d, const std::string& constructor_name = "");

/// Throw std::invalid_argument on kind mismatch or malformed content.
WeightedPointSet to_point_set(const DesignFile& file);
IntervalDesign to_interval_design(const DesignFile& file);

nlohmann::json to_json(const DesignFile& file);
DesignFile design_file_from_json(const nlohmann::json& j);

void write_design_file(const DesignFile& file, const std::string& path);
DesignFile read_design_file(const std::string& path);

nlohmann::json report_to_json(const DesignReport& report);
nlohmann::json fisher_bound_to_json(const FisherBound& fb);

/// Term-list serialization {exponents, numerator, denominator} of an exact
/// polynomial (coefficients as decimal strings, so nothing is rounded).
nlohmann::json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const nlohmann::json& j);

}  // namespace tdesign
