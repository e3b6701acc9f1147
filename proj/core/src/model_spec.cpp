#include <charconv>
#include <map>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/models.hpp"

namespace casimir {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
    throw ParseError("invalid model spec '" + std::string(text) + "': " + why);
}

double parse_number(std::string_view text, std::string_view value, std::string_view key) {
    if (value.empty()) fail(text, "missing value for '" + std::string(key) + "'");
    double out = 0.0;
    const char* first = value.data();
    const char* last = first + value.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        fail(text, "'" + std::string(value) + "' is not a number");
    }
    return out;
}

std::map<std::string, double, std::less<>> parse_params(std::string_view text, std::string_view body) {
    std::map<std::string, double, std::less<>> out;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view item = body.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) fail(text, "expected key=value, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        if (key.empty()) fail(text, "empty parameter name");
        const double v = parse_number(text, item.substr(eq + 1), key);
        if (!out.emplace(std::string(key), v).second) fail(text, "duplicate parameter '" + std::string(key) + "'");
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) fail(text, "trailing comma");
    }
    return out;
}

double take(std::map<std::string, double, std::less<>>& params, std::string_view text, const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) fail(text, std::string("missing parameter '") + key + "'");
    const double v = it->second;
    params.erase(it);
    return v;
}

}  // namespace

ScattererModel parse_model_spec(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (colon != std::string_view::npos && body.empty()) fail(text, "empty parameter list");

    auto params = parse_params(text, body);
    auto finish = [&](ScattererModel m) {
        if (!params.empty()) fail(text, "unknown parameter '" + params.begin()->first + "'");
        return m;
    };

    if (name == "delta") {
        const double g = take(params, text, "g");
        return finish(delta_scatterer(g));
    }
    if (name == "perfect") {
        return finish(perfect_mirror());
    }
    if (name == "const") {
        const double rho = take(params, text, "rho");
        return finish(constant_reflectivity(rho));
    }
    if (name == "barrier") {
        const double v0 = take(params, text, "v0");
        const double a = take(params, text, "a");
        return finish(rect_barrier_scatterer(v0, a));
    }
    if (name == "lc") {
        const double z0 = take(params, text, "z0");
        const double l = take(params, text, "l");
        return finish(lc_shunt_scatterer(z0, l));
    }
    fail(text, "unknown model '" + std::string(name) + "' (expected delta, perfect, const, barrier or lc)");
}

}  // namespace casimir
