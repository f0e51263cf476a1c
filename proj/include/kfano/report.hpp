#ifndef KFANO_REPORT_HPP
#define KFANO_REPORT_HPP

#include "datasets.hpp"

namespace kfano {

inline constexpr const char* kToolVersion = "kfano 1.0.0";

inline Json to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline Json to_json(const IVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const std::vector<IVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline std::string rat_text(const Rat& r) { return r.get_str(); }

inline Json polys_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(format_polynomial(p, names));
    return a;
}

struct Check {
    std::string name;
    Json expected, actual;
    bool pass = false;
};

struct Report {
    std::string case_id;
    Json provenance = Json::object();
    Json invariants = Json::object();
    Json presentations = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> annotations;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    // exact comparison of JSON values
    bool check(const std::string& name, const Json& expected, const Json& actual) {
        checks.push_back({name, expected, actual, expected == actual});
        return checks.back().pass;
    }
    bool check_true(const std::string& name, bool ok, const Json& detail = nullptr) {
        checks.push_back({name, true, detail.is_null() ? Json(ok) : detail, ok});
        return ok;
    }

    void use_dataset(const std::string& name) { provenance["datasets"][name] = dataset_checksum(name); }

    Json to_json() const {
        Json j;
        j["case"] = case_id;
        j["tool_version"] = kToolVersion;
        j["status"] = passed() ? "pass" : "fail";
        j["provenance"] = provenance;
        j["invariants"] = invariants;
        j["presentations"] = presentations;
        Json cs = Json::array();
        for (const auto& c : checks) cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        j["checks"] = cs;
        j["annotations"] = annotations;
        return j;
    }

    std::string to_text() const {
        std::ostringstream o;
        o << case_id << ": " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : checks) {
            o << "  [" << (c.pass ? "ok" : "FAILED") << "] " << c.name << " = " << c.actual.dump();
            if (!c.pass) o << " (expected " << c.expected.dump() << ")";
            o << "\n";
        }
        if (!invariants.empty()) {
            o << "invariants:\n";
            for (const auto& [k, v] : invariants.items()) o << "  " << k << ": " << v.dump() << "\n";
        }
        if (!presentations.empty()) {
            o << "presentations:\n";
            for (const auto& [k, v] : presentations.items()) o << "  " << k << ": " << v.dump() << "\n";
        }
        if (!annotations.empty()) {
            o << "annotations:\n";
            for (const auto& a : annotations) o << "  - " << a << "\n";
        }
        return o.str();
    }
};

inline std::string render(const Report& r, const std::string& format) {
    if (format == "json") return r.to_json().dump(2) + "\n";
    if (format == "text") return r.to_text();
    throw InputError("unknown format " + format);
}

}  // namespace kfano

#endif
