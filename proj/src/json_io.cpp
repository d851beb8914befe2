#include "donoghue/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace donoghue {

DiscreteMeasure measure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw std::invalid_argument("measure JSON needs an \"atoms\" array");
    std::vector<std::pair<double, double>> pairs;
    for (const Json& a : j["atoms"]) {
        if (!a.is_object() || !a.contains("lambda") || !a.contains("weight"))
            throw std::invalid_argument("each atom needs \"lambda\" and \"weight\"");
        if (!a["lambda"].is_number() || !a["weight"].is_number())
            throw std::invalid_argument("atom fields must be numbers");
        pairs.emplace_back(a["lambda"].get<double>(), a["weight"].get<double>());
    }
    return make_measure(pairs);
}

Json measure_to_json(const DiscreteMeasure& m) {
    Json atoms = Json::array();
    for (const Atom& a : m.atoms())
        atoms.push_back({{"lambda", a.position}, {"weight", a.weight}});
    return {{"atoms", atoms}};
}

PerturbedHerglotz function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("Q") || !j.contains("measure"))
        throw std::invalid_argument("function JSON needs \"Q\" and \"measure\"");
    if (!j["Q"].is_number())
        throw std::invalid_argument("\"Q\" must be a number");
    return PerturbedHerglotz(j["Q"].get<double>(), measure_from_json(j["measure"]));
}

Json function_to_json(const PerturbedHerglotz& f) {
    return {{"Q", f.Q}, {"measure", measure_to_json(f.measure)}, {"a", f.a}};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex values must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace donoghue
