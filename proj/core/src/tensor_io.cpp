#include "octobil/tensor_io.hpp"

#include <stdexcept>

namespace octobil {

nlohmann::ordered_json tensor_to_json(const Tensor& t) {
    nlohmann::ordered_json j;
    j["r"] = t.r;
    j["s"] = t.s;
    j["k"] = t.k;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : t.entries)
        j["entries"].push_back(nlohmann::ordered_json::array({e.t, e.i, e.j, e.value.str()}));
    return j;
}

Tensor tensor_from_json(const nlohmann::json& j) {
    Tensor t;
    try {
        t.r = j.at("r").get<int>();
        t.s = j.at("s").get<int>();
        t.k = j.at("k").get<int>();
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 4)
                throw std::invalid_argument("tensor_from_json: entry must be [t,i,j,\"p/q\"]");
            t.entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                                 Rational::parse(e[3].get<std::string>())});
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("tensor_from_json: ") + ex.what());
    }
    t.validate();
    return t;
}

}  // namespace octobil
