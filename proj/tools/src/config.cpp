#include "config.hpp"

#include <fstream>
#include <map>
#include <regex>

#include <json.hpp>

#include "dnc/errors.hpp"

namespace dnc::cli {

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& msg) {
    throw Error(ErrorCode::config_error, field + ": " + msg);
}

std::pair<int, int> parse_key(const std::string& key, const std::string& field) {
    static const std::regex pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(key, m, pattern)) config_error(field, "expected a key of the form \"i,j\"");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

template <class T>
T get_field(const nlohmann::json& doc, const char* name) {
    try {
        return doc.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        config_error(std::string("config.") + name, e.what());
    }
}

} // namespace

AngleText parse_angle(const std::string& text, const std::string& field) {
    static const std::regex fraction(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
    static const std::regex decimal(R"(\s*(-?)(\d*)\.(\d+)\s*)");
    std::smatch m;
    AngleText out;
    if (std::regex_match(text, m, fraction)) {
        mpz_class den = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
        if (den == 0) config_error(field, "zero denominator in angle '" + text + "'");
        out.exact = mpq_class(mpz_class(m[1].str()), den);
        out.exact.canonicalize();
    } else if (std::regex_match(text, m, decimal)) {
        std::string digits = m[2].str() + m[3].str();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, m[3].length());
        out.exact = mpq_class(mpz_class(digits.empty() ? "0" : digits), scale);
        out.exact.canonicalize();
        if (!m[1].str().empty()) out.exact = -out.exact;
        out.decimal = true;
    } else {
        config_error(field, "cannot read angle '" + text + "'");
    }
    out.numeric = out.exact.get_d();
    if (out.decimal) out.numeric = std::stod(text);
    return out;
}

SuiteConfig load_config(const std::string& path, const Overrides& flags) {
    nlohmann::json doc = nlohmann::json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) config_error("--config", "cannot open '" + path + "'");
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            config_error("config", e.what());
        }
        if (!doc.is_object()) config_error("config", "expected a JSON object");
        for (const auto& [key, value] : doc.items()) {
            static const std::vector<std::string> known{"n", "l", "phi", "mode", "K", "band", "seed", "cases", "suite"};
            if (std::find(known.begin(), known.end(), key) == known.end()) config_error("config." + key, "unknown field");
        }
    }

    SuiteConfig cfg;
    int n = flags.n ? *flags.n : doc.contains("n") ? get_field<int>(doc, "n") : 2;
    int l = flags.l ? *flags.l : doc.contains("l") ? get_field<int>(doc, "l") : std::min(n, 1);
    std::string mode = flags.mode ? *flags.mode : doc.contains("mode") ? get_field<std::string>(doc, "mode") : "exact";
    if (mode != "exact" && mode != "numeric") config_error("mode", "expected exact or numeric, got '" + mode + "'");
    if (n < 0) config_error("n", "must be nonnegative");
    if (l < 0 || l > n) config_error("l", "must satisfy 0 <= l <= n");

    // angle entries: file first, flags override
    std::map<std::pair<int, int>, std::pair<std::string, std::string>> entries;
    bool explicit_phi = false;
    if (doc.contains("phi")) {
        const auto& phi = doc["phi"];
        if (!phi.is_object()) config_error("config.phi", "expected an object of \"i,j\": \"p/q\" entries");
        for (const auto& [key, value] : phi.items()) {
            std::string field = "config.phi[\"" + key + "\"]";
            std::string text = value.is_string() ? value.get<std::string>() : value.is_number() ? value.dump() : "";
            if (text.empty()) config_error(field, "expected a string or number");
            entries[parse_key(key, field)] = {text, field};
        }
        explicit_phi = true;
    }
    for (const auto& spec : flags.phi) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) config_error("--phi", "expected i,j=p/q, got '" + spec + "'");
        std::string field = "--phi " + spec;
        entries[parse_key(spec.substr(0, eq), field)] = {spec.substr(eq + 1), field};
        explicit_phi = true;
    }
    if (!explicit_phi && n >= 2) entries[{1, 2}] = {"1/4", "default phi"};

    AngleAssignment angles(n, mode == "exact" ? AngleMode::exact : AngleMode::numeric);
    for (const auto& [key, text] : entries) {
        auto [i, j] = key;
        if (!(1 <= i && i < j && j <= n)) config_error(text.second, "angle key needs 1 <= i < j <= n");
        auto a = parse_angle(text.first, text.second);
        angles = mode == "exact" ? angles.with(i, j, a.exact) : angles.with(i, j, a.numeric);
    }
    cfg.sig = Signature(n, l, angles);

    cfg.K = flags.K ? *flags.K : doc.contains("K") ? get_field<std::int64_t>(doc, "K") : 8;
    cfg.band = flags.band ? *flags.band : doc.contains("band") ? get_field<std::int64_t>(doc, "band") : 2;
    if (cfg.K < 0) config_error("K", "must be nonnegative");
    if (cfg.band < 0 || cfg.band > cfg.K) config_error("band", "must satisfy 0 <= band <= K");
    cfg.seed = flags.seed ? *flags.seed : doc.contains("seed") ? get_field<std::uint64_t>(doc, "seed") : 1;
    cfg.cases = flags.cases ? *flags.cases : doc.contains("cases") ? get_field<std::size_t>(doc, "cases") : 0;
    return cfg;
}

} // namespace dnc::cli

namespace dnc::cli {

std::vector<std::string> configured_suites(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (!doc.is_object() || !doc.contains("suite")) return {};
    const auto& s = doc["suite"];
    if (s.is_string()) return {s.get<std::string>()};
    if (!s.is_array()) config_error("config.suite", "expected a name or a list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i].is_string()) config_error("config.suite[" + std::to_string(i) + "]", "expected a string");
        out.push_back(s[i].get<std::string>());
    }
    return out;
}

} // namespace dnc::cli
