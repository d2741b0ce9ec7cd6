#include "galine/group.hpp"

#include <json.hpp>

namespace galine {

using nlohmann::json;

GroupElementD to_double(const GroupElement& g) {
    return GroupElementD(to_double(g.a), g.b.to_double(), g.max_degree);
}

static json poly_to_json(const TimePoly& p) {
    json arr = json::array();
    for (int n = 0; n <= p.degree(); ++n) arr.push_back(p.coeff(n).str());
    return arr;
}

static TimePoly poly_from_json(const json& arr) {
    if (!arr.is_array()) throw ConfigError("group JSON: coefficient list expected");
    std::vector<Rational> c;
    for (const auto& v : arr) {
        if (v.is_string())
            c.push_back(Rational::parse(v.get<std::string>()));
        else if (v.is_number_integer())
            c.push_back(Rational(v.get<long>()));
        else
            throw ConfigError("group JSON: coefficients must be integers or 'p/q' strings");
    }
    return TimePoly(std::move(c));
}

std::string group_to_json(const GroupElement& g) {
    json j;
    j["a"] = json::array({poly_to_json(g.a.x), poly_to_json(g.a.y), poly_to_json(g.a.z)});
    j["b"] = g.b.str();
    return j.dump();
}

GroupElement group_from_json(const std::string& text, int budget) {
    json j = json::parse(text, nullptr, true);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "a" && it.key() != "b")
            throw ConfigError("group JSON: unknown key '" + it.key() + "'");
    if (!j.contains("a") || !j.contains("b")) throw ConfigError("group JSON: need 'a' and 'b'");
    if (!j["a"].is_array() || j["a"].size() != 3)
        throw ConfigError("group JSON: 'a' must hold three coefficient lists");
    Vec3Poly a{poly_from_json(j["a"][0]), poly_from_json(j["a"][1]), poly_from_json(j["a"][2])};
    Rational b = j["b"].is_string() ? Rational::parse(j["b"].get<std::string>())
                                    : Rational(j["b"].get<long>());
    return GroupElement(std::move(a), std::move(b), budget);
}

}  // namespace galine
