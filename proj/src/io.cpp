#include "tdesign/io.hpp"

#include <fstream>
#include <stdexcept>

namespace tdesign {

using nlohmann::json;

DesignFile make_design_file(const WeightedPointSet& x, const std::string& constructor_name,
                            json parameters, std::optional<int> claimed_strength) {
    DesignFile file;
    file.kind = "euclidean";
    file.dim = x.dim();
    file.points = x.points();
    file.weights = x.weights();
    if (!constructor_name.empty()) file.constructor_name = constructor_name;
    file.parameters = std::move(parameters);
    file.claimed_strength = claimed_strength;
    return file;
}

DesignFile make_design_file(const IntervalDesign& d, const std::string& constructor_name) {
    DesignFile file;
    file.kind = "interval";
    file.dim = d.n;
    for (double c : d.nodes) file.points.push_back({c});
    file.weights = d.weights;
    if (!constructor_name.empty()) file.constructor_name = constructor_name;
    file.claimed_strength = d.t;
    return file;
}

WeightedPointSet to_point_set(const DesignFile& file) {
    if (file.kind != "euclidean")
        throw std::invalid_argument("design file: expected kind \"euclidean\"");
    return WeightedPointSet(file.dim, file.points, file.weights);
}

IntervalDesign to_interval_design(const DesignFile& file) {
    if (file.kind != "interval")
        throw std::invalid_argument("design file: expected kind \"interval\"");
    IntervalDesign d;
    d.n = file.dim;
    d.t = file.claimed_strength.value_or(0);
    for (const std::vector<double>& p : file.points) {
        if (p.size() != 1)
            throw std::invalid_argument("design file: interval nodes must be scalars");
        d.nodes.push_back(p[0]);
    }
    d.weights = file.weights;
    return d;
}

json to_json(const DesignFile& file) {
    json j = {
        {"format_version", file.format_version},
        {"kind", file.kind},
        {"dim", file.dim},
        {"points", file.points},
        {"weights", file.weights},
    };
    if (file.constructor_name || file.claimed_strength || !file.parameters.is_null()) {
        json meta = json::object();
        if (file.constructor_name) meta["constructor"] = *file.constructor_name;
        if (!file.parameters.is_null()) meta["parameters"] = file.parameters;
        if (file.claimed_strength) meta["claimed_strength"] = *file.claimed_strength;
        j["metadata"] = std::move(meta);
    }
    return j;
}

DesignFile design_file_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("design file: not a JSON object");
    DesignFile file;
    try {
        file.format_version = j.at("format_version").get<int>();
        file.kind = j.at("kind").get<std::string>();
        file.dim = j.at("dim").get<int>();
        file.points = j.at("points").get<std::vector<std::vector<double>>>();
        file.weights = j.at("weights").get<std::vector<double>>();
        if (j.contains("metadata")) {
            const json& meta = j.at("metadata");
            if (meta.contains("constructor"))
                file.constructor_name = meta.at("constructor").get<std::string>();
            if (meta.contains("parameters")) file.parameters = meta.at("parameters");
            if (meta.contains("claimed_strength"))
                file.claimed_strength = meta.at("claimed_strength").get<int>();
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("design file: ") + e.what());
    }
    if (file.format_version != DesignFile::current_version)
        throw std::invalid_argument("design file: unsupported format_version");
    if (file.kind != "euclidean" && file.kind != "interval")
        throw std::invalid_argument("design file: unknown kind");
    if (file.points.size() != file.weights.size())
        throw std::invalid_argument("design file: points/weights length mismatch");
    return file;
}

void write_design_file(const DesignFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json(file).dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

DesignFile read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("design file: parse error: ") + e.what());
    }
    return design_file_from_json(j);
}

json report_to_json(const DesignReport& report) {
    json rows = json::array();
    for (const ResidualRow& row : report.residuals)
        rows.push_back({{"degree", row.degree},
                        {"residual", row.worst},
                        {"worst", row.worst_item}});
    json j = {
        {"method", report.method},
        {"requested_strength", report.requested_strength},
        {"pass", report.pass},
        {"verified_strength", report.verified_strength},
        {"max_residual", report.max_residual},
        {"tolerance", report.tolerance},
        {"antipodal", report.antipodal},
        {"residuals", std::move(rows)},
    };
    if (report.tight) {
        switch (*report.tight) {
            case Tightness::tight: j["tight"] = "tight"; break;
            case Tightness::not_tight: j["tight"] = "not_tight"; break;
            case Tightness::inapplicable: j["tight"] = "inapplicable"; break;
        }
    }
    return j;
}

json fisher_bound_to_json(const FisherBound& fb) {
    return json{{"n", fb.n},
                {"p", fb.p},
                {"t", fb.t},
                {"per_k", fb.per_k},
                {"N", fb.total},
                {"antipodality_required", fb.antipodality_required}};
}

json poly_to_json(const RationalPoly& p) {
    json terms = json::array();
    for (const auto& [exps, c] : p.terms())
        terms.push_back({{"exponents", exps},
                         {"numerator", numerator(c).str()},
                         {"denominator", denominator(c).str()}});
    return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

RationalPoly poly_from_json(const json& j) {
    RationalPoly p(j.at("nvars").get<int>());
    for (const json& term : j.at("terms")) {
        const auto exps = term.at("exponents").get<std::vector<unsigned>>();
        const BigInt num(term.at("numerator").get<std::string>());
        const BigInt den(term.at("denominator").get<std::string>());
        p.add_term(exps, Rational(num, den));
    }
    return p;
}

}  // namespace tdesign
