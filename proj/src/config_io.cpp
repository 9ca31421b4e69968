#include "naxes/config_io.hpp"

#include <utility>

#include <json.hpp>

namespace naxes {

using nlohmann::json;
using nlohmann::ordered_json;

ConfigFile make_config_file(const std::vector<ProjPoint>& points,
                            std::map<std::string, std::string> meta) {
    if (points.empty()) throw MathError("config needs at least one point");
    ConfigFile f;
    f.field = points.front().field();
    f.meta = std::move(meta);
    f.points.reserve(points.size());
    for (const ProjPoint& p : points) {
        require_same_field(p.field(), f.field);
        f.points.push_back({p.x().str(), p.y().str(), p.z().str()});
    }
    return f;
}

std::vector<ProjPoint> points_of(const ConfigFile& f) {
    std::vector<ProjPoint> out;
    out.reserve(f.points.size());
    for (const auto& t : f.points)
        out.emplace_back(Scalar::from_string(f.field, t[0]), Scalar::from_string(f.field, t[1]),
                         Scalar::from_string(f.field, t[2]));
    return out;
}

std::string serialize_config(const ConfigFile& f) {
    ordered_json j;
    if (f.field.is_rational())
        j["field"] = "rational";
    else
        j["field"] = ordered_json{{"prime", f.field.characteristic()}};
    ordered_json pts = ordered_json::array();
    for (const auto& t : f.points) pts.push_back({t[0], t[1], t[2]});
    j["points"] = std::move(pts);
    if (!f.meta.empty()) {
        ordered_json m = ordered_json::object();
        for (const auto& [k, v] : f.meta) m[k] = v; // std::map iterates sorted
        j["meta"] = std::move(m);
    }
    return j.dump(2) + "\n";
}

ConfigFile parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config root must be an object");
    for (const auto& [k, v] : j.items())
        if (k != "field" && k != "points" && k != "meta")
            throw ParseError("unexpected key \"" + k + "\" in config");

    ConfigFile f;
    if (!j.contains("field")) throw ParseError("config is missing \"field\"");
    const json& jf = j["field"];
    if (jf.is_string()) {
        if (jf.get<std::string>() != "rational")
            throw ParseError("unknown field \"" + jf.get<std::string>() + "\"");
        f.field = FieldTag::rationals();
    } else if (jf.is_object() && jf.size() == 1 && jf.contains("prime") &&
               jf["prime"].is_number_unsigned()) {
        f.field = FieldTag::prime(jf["prime"].get<std::uint64_t>());
    } else {
        throw ParseError("field must be \"rational\" or {\"prime\": p}");
    }

    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw ParseError("config needs a non-empty \"points\" array");
    for (const json& row : j["points"]) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("each point must be an array of 3 coordinate strings");
        std::array<std::string, 3> triple;
        for (int k = 0; k < 3; ++k) {
            if (!row[k].is_string())
                throw ParseError("coordinates must be exact strings, not numbers");
            triple[k] = row[k].get<std::string>();
        }
        f.points.push_back(std::move(triple));
    }

    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw ParseError("\"meta\" must be an object");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw ParseError("metadata values must be strings");
            f.meta[k] = v.get<std::string>();
        }
    }
    return f;
}

} // namespace naxes
