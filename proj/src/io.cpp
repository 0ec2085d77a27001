#include "formale/io.hpp"

#include <filesystem>
#include <fstream>

namespace formale {

namespace {

Json integer_value(const Integer& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

Integer integer_from(const Json& j) {
    if (j.is_number_integer()) {
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) {
            throw ParseError("bad integer string " + j.dump());
        }
        return v;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

template <class T>
Json optional_value(const std::optional<T>& v) {
    if (v) {
        return *v;
    }
    return nullptr;
}

std::optional<std::int64_t> optional_int(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<std::int64_t>();
}

Json cache_entry(const LocalData& d) {
    Json e;
    e["A_p"] = optional_value(d.points);
    e["t_p"] = d.trace;
    e["u_p"] = d.u;
    e["type"] = to_string(d.reduction);
    return e;
}

} // namespace

Json to_json(const std::array<Integer, 5>& curve) {
    Json j = Json::array();
    for (const auto& a : curve) {
        j.push_back(integer_value(a));
    }
    return j;
}

std::array<Integer, 5> curve_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 5) {
        throw ParseError("curve must be a five-element array");
    }
    std::array<Integer, 5> out;
    for (std::size_t i = 0; i < 5; ++i) {
        out[i] = integer_from(j[i]);
    }
    return out;
}

Json to_json(const CongruenceReport& r) {
    Json j;
    j["statement"] = to_string(r.statement);
    j["curve"] = to_json(r.curve);
    j["p"] = optional_value(r.p);
    j["n"] = optional_value(r.n);
    j["s"] = optional_value(r.s);
    j["modulus"] = r.modulus.get_str();
    j["residual"] = r.residual.get_str();
    j["pass"] = r.pass;
    if (r.variant) {
        j["variant"] = *r.variant;
    }
    if (r.note) {
        j["note"] = *r.note;
    }
    return j;
}

CongruenceReport report_from_json(const Json& j) {
    CongruenceReport r;
    try {
        r.statement = statement_from_string(j.at("statement").get<std::string>());
        r.curve = curve_from_json(j.at("curve"));
        r.p = optional_int(j, "p");
        r.n = optional_int(j, "n");
        r.s = optional_int(j, "s");
        r.modulus = integer_from(j.at("modulus"));
        r.residual = integer_from(j.at("residual"));
        r.pass = j.at("pass").get<bool>();
        if (j.contains("variant")) {
            r.variant = j.at("variant").get<std::string>();
        }
        if (j.contains("note")) {
            r.note = j.at("note").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return r;
}

Json to_json(const LocalData& d) {
    Json j;
    j["p"] = d.p;
    j["type"] = to_string(d.reduction);
    j["A_p"] = optional_value(d.points);
    j["t_p"] = d.trace;
    j["u_p"] = d.u;
    return j;
}

LocalData local_data_from_json(const Json& j) {
    LocalData d;
    try {
        d.p = j.value("p", std::int64_t{0});
        d.reduction = reduction_type_from_string(j.at("type").get<std::string>());
        d.points = optional_int(j, "A_p");
        d.trace = j.at("t_p").get<std::int64_t>();
        d.u = j.at("u_p").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed local data: ") + e.what());
    }
    return d;
}

Json to_json(const IntSeries& series) {
    Json j = Json::array();
    for (const auto& c : series.coeffs()) {
        j.push_back(c.get_str());
    }
    return j;
}

Json to_json(const RatSeries& series) {
    Json j = Json::array();
    for (const auto& c : series.coeffs()) {
        j.push_back(c.get_str());
    }
    return j;
}

Json to_json(const DirichletCoefficients& c) {
    Json j = Json::array();
    for (const auto& v : c.c) {
        j.push_back(integer_value(v));
    }
    return j;
}

DirichletCoefficients dirichlet_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("c-sequence must be a nonempty JSON array");
    }
    DirichletCoefficients out;
    out.provenance = Provenance::UserSupplied;
    for (const auto& v : j) {
        out.c.push_back(integer_from(v));
    }
    if (out.c.front() != 1) {
        throw ParseError("c-sequence must start with c_1 = 1");
    }
    return out;
}

void load_cache(const std::string& path, TraceCache& cache) {
    if (!std::filesystem::exists(path)) {
        return;
    }
    std::ifstream in(path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("cache file " + path + " is not valid JSON: " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
        const auto bar = key.rfind('|');
        if (bar == std::string::npos) {
            throw ParseError("bad cache key '" + key + "'");
        }
        LocalData d = local_data_from_json(value);
        d.p = std::stoll(key.substr(bar + 1));
        cache.insert(key, d);
    }
}

void save_cache(const std::string& path, const TraceCache& cache) {
    Json j = Json::object();
    for (const auto& [key, d] : cache.entries()) {
        j[key] = cache_entry(d);
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace formale
