#include "wd/render.hpp"

#include <sstream>

#include <json.hpp>

#include "wd/errors.hpp"

namespace wd {

std::string to_polynomial_text(const WeightDistribution& dist) {
    std::ostringstream out;
    out << "1";
    for (const auto& [w, f] : dist.entries) out << "+" << f << "x^" << w;
    return out.str();
}

std::string to_json(const WeightDistribution& dist, Classification classification) {
    nlohmann::json doc;
    doc["p"] = dist.spec.p;
    doc["s"] = dist.spec.s;
    doc["m"] = dist.spec.m;
    doc["N"] = dist.spec.N;
    doc["q"] = std::uint64_t(dist.spec.q);
    doc["r"] = dist.spec.r.str();
    doc["n"] = dist.spec.n.str();
    doc["N2"] = dist.spec.n2;
    doc["dimension"] = dist.spec.m;
    doc["entries"] = nlohmann::json::array();
    for (const auto& [w, f] : dist.entries)
        doc["entries"].push_back({{"weight", w.str()}, {"frequency", f.str()}});
    doc["method"] = dist.method;
    doc["classification"] = to_string(classification);
    return doc.dump(2);
}

WeightDistribution from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    WeightDistribution dist;
    dist.spec = code_params(doc.at("p").get<std::uint64_t>(), doc.at("s").get<unsigned>(),
                            doc.at("m").get<unsigned>(), doc.at("N").get<std::uint64_t>());
    if (Int(doc.at("r").get<std::string>()) != dist.spec.r ||
        Int(doc.at("n").get<std::string>()) != dist.spec.n ||
        doc.at("N2").get<std::uint64_t>() != dist.spec.n2)
        throw Error("JSON document is inconsistent with its own parameters");
    for (const auto& entry : doc.at("entries"))
        dist.entries.emplace_back(Int(entry.at("weight").get<std::string>()),
                                  Int(entry.at("frequency").get<std::string>()));
    dist.method = doc.at("method").get<std::string>();
    dist.validate();
    return dist;
}

}  // namespace wd
