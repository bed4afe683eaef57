#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quasikoorn/epoly.hpp"
#include "quasikoorn/params.hpp"
#include "quasikoorn/quasipoly.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

using Json = nlohmann::ordered_json;

/// Parameter file contents.  A missing t is resolved per orbit.
struct Config {
    ParamSpec params;
    std::optional<TorusPoint> t;
    std::uint64_t seed = 0;
};

/// Throws InvalidParameters on malformed documents.
Config parse_config(const Json &doc);
Config load_config(const std::string &path);
Json config_to_json(const Config &config);

/// Comma-separated rationals, e.g. "3/4,0".  Throws std::invalid_argument.
Point parse_point(std::string_view text);

Json point_to_json(const Point &y);
Point point_from_json(const Json &j);

/// Terms ordered by the linear extension (length of g_y, then lexicographic).
Json quasipoly_to_json(const QuasiPolynomial &p);
QuasiPolynomial quasipoly_from_json(const Json &j);

Json epoly_to_json(const EPolynomial &e);

} // namespace quasikoorn
