#include "ospq/scalar_io.hpp"
#include "ospq/expr.hpp"

#include <stdexcept>

namespace ospq {

namespace {

LaurentRational parse_laurent(const std::string& text) {
    Scalar s = parse_scalar(text);
    if (s.is_zero()) return {};
    if (s.terms().size() != 1 || !s.terms()[0].rad.is_trivial() ||
        !s.terms()[0].par.is_trivial())
        throw std::runtime_error("scalar_from_json: not a plain Laurent-rational: " + text);
    return s.terms()[0].coef;
}

} // namespace

nlohmann::json scalar_to_json(const Scalar& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : x.terms()) {
        nlohmann::json rec;
        rec["laurent"] = t.coef.to_string();
        rec["radical"] = t.rad.is_trivial() ? "" : t.rad.kernel().to_string();
        nlohmann::json params = nlohmann::json::object();
        for (auto& [id, e] : t.par.even()) params[Symbols::name(id)] = e;
        for (int id : t.par.odd()) params[Symbols::name(id)] = 1;
        rec["params"] = params;
        terms.push_back(std::move(rec));
    }
    return nlohmann::json{{"terms", terms}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    Scalar x;
    for (const auto& rec : j.at("terms")) {
        LaurentRational coef = parse_laurent(rec.at("laurent").get<std::string>());
        RadicalMonomial rad;
        std::string rad_text = rec.at("radical").get<std::string>();
        if (!rad_text.empty()) rad = RadicalMonomial(parse_laurent(rad_text));
        std::map<int, long> even;
        std::vector<int> odd;
        for (auto it = rec.at("params").begin(); it != rec.at("params").end(); ++it) {
            int id = Symbols::id(it.key());
            long e = it.value().get<long>();
            if (Symbols::parity(id) == 1) odd.push_back(id);
            else even[id] = e;
        }
        std::sort(odd.begin(), odd.end());
        x += Scalar::term(std::move(coef), std::move(rad),
                          ParameterMonomial::build(std::move(even), std::move(odd)));
    }
    return x;
}

} // namespace ospq
