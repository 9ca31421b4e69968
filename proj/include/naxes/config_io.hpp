#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "naxes/projective.hpp"

namespace naxes {

// On-disk form of a point list: the field, one exact string triple per
// point ("num" or "num/den", never decimals), and optional string-valued
// metadata. Serialization is deterministic, so equal files mean equal
// bytes; parse(serialize(f)) == f.
struct ConfigFile {
    FieldTag field = FieldTag::rationals();
    std::vector<std::array<std::string, 3>> points;
    std::map<std::string, std::string> meta;

    friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

ConfigFile make_config_file(const std::vector<ProjPoint>& points,
                            std::map<std::string, std::string> meta = {});

// Points in canonical form; does not validate any configuration shape.
std::vector<ProjPoint> points_of(const ConfigFile& f);

std::string serialize_config(const ConfigFile& f);

// Strict: unknown keys, non-string coordinates and malformed field specs
// are rejected with position or key information.
ConfigFile parse_config(const std::string& text);

} // namespace naxes
