#include "quasikoorn/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

namespace {

Rational rational_field(const Json &doc, const char *name)
{
    if (!doc.contains(name)) {
        throw InvalidParameters(std::string("config: missing field '") + name + "'");
    }
    const Json &v = doc.at(name);
    try {
        if (v.is_string()) {
            return Rational::parse(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational(v.get<long>());
        }
    } catch (const std::invalid_argument &e) {
        throw InvalidParameters(std::string("config: field '") + name + "': " + e.what());
    }
    throw InvalidParameters(std::string("config: field '") + name + "' must be a rational string or an integer");
}

Rational rational_value(const Json &v)
{
    if (v.is_string()) {
        return Rational::parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    throw std::invalid_argument("expected a rational string");
}

} // namespace

Config parse_config(const Json &doc)
{
    if (!doc.is_object()) {
        throw InvalidParameters("config: expected a JSON object");
    }
    Config config;
    if (!doc.contains("rank") || !doc.at("rank").is_number_integer()) {
        throw InvalidParameters("config: 'rank' must be an integer");
    }
    config.params.rank = doc.at("rank").get<int>();
    config.params.sqrt_q = rational_field(doc, "sqrt_q");
    config.params.k0 = rational_field(doc, "k0");
    config.params.u0 = rational_field(doc, "u0");
    config.params.k = doc.contains("k") ? rational_field(doc, "k") : Rational(1);
    config.params.kr = rational_field(doc, "kr");
    config.params.ur = rational_field(doc, "ur");
    config.params.validate();
    if (doc.contains("t") && !doc.at("t").is_null()) {
        const Json &t = doc.at("t");
        if (!t.is_array() || t.size() != static_cast<std::size_t>(config.params.rank)) {
            throw InvalidParameters("config: 't' must be an array of " + std::to_string(config.params.rank) +
                                    " rationals");
        }
        TorusPoint point;
        try {
            for (const auto &x : t) {
                point.coords.push_back(rational_value(x));
            }
        } catch (const std::invalid_argument &e) {
            throw InvalidParameters(std::string("config: 't': ") + e.what());
        }
        config.t = std::move(point);
    }
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_integer()) {
            throw InvalidParameters("config: 'seed' must be an integer");
        }
        config.seed = doc.at("seed").get<std::uint64_t>();
    }
    return config;
}

Config load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameters("cannot open config file '" + path + "'");
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InvalidParameters("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

Json config_to_json(const Config &config)
{
    const ParamSpec &p = config.params;
    Json doc = {
        {"rank", p.rank},       {"sqrt_q", p.sqrt_q.str()}, {"k0", p.k0.str()}, {"u0", p.u0.str()},
        {"k", p.k.str()},       {"kr", p.kr.str()},         {"ur", p.ur.str()},
    };
    if (config.t) {
        doc["t"] = point_to_json(config.t->coords);
    }
    doc["seed"] = config.seed;
    return doc;
}

Point parse_point(std::string_view text)
{
    Point out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Json point_to_json(const Point &y)
{
    Json arr = Json::array();
    for (const auto &x : y) {
        arr.push_back(x.str());
    }
    return arr;
}

Point point_from_json(const Json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("point: expected an array");
    }
    Point out;
    for (const auto &x : j) {
        out.push_back(rational_value(x));
    }
    return out;
}

Json quasipoly_to_json(const QuasiPolynomial &p)
{
    std::vector<std::pair<ExtensionKey, Rational>> keyed;
    for (const auto &[y, c] : p.terms()) {
        keyed.emplace_back(extension_key(y), c);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    Json arr = Json::array();
    for (const auto &[key, c] : keyed) {
        arr.push_back(Json{{"exponent", point_to_json(key.point)}, {"coeff", c.str()}});
    }
    return arr;
}

QuasiPolynomial quasipoly_from_json(const Json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("quasi-polynomial: expected an array of terms");
    }
    QuasiPolynomial p;
    for (const auto &term : j) {
        p.add_term(point_from_json(term.at("exponent")), rational_value(term.at("coeff")));
    }
    return p;
}

Json epoly_to_json(const EPolynomial &e)
{
    Json eig = Json::array();
    for (const auto &g : e.eigenvalues) {
        eig.push_back(g.str());
    }
    return Json{
        {"degree", point_to_json(e.degree)},
        {"orbit_basepoint", point_to_json(e.orbit.basepoint)},
        {"facet", e.orbit.facet},
        {"eigenvalues", eig},
        {"terms", quasipoly_to_json(e.poly)},
    };
}

} // namespace quasikoorn
