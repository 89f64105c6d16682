#pragma once

// Structured verification reports.  One Report per CLI run: command echo,
// config echo, a list of named checks with both side values, and computed
// results.  The JSON form is deterministic (insertion-ordered keys, fixed
// indentation), so identical configs give byte-identical output.

#include <json.hpp>

#include <sstream>
#include <string>

namespace hallcat {

using Json = nlohmann::ordered_json;

struct Report {
    Json doc;
    bool all_ok = true;

    explicit Report(const std::string& command) {
        doc["command"] = command;
        doc["config"] = Json::object();
        doc["checks"] = Json::array();
        doc["results"] = Json::object();
    }

    template <class V>
    void config(const std::string& key, const V& value) {
        doc["config"][key] = value;
    }
    template <class V>
    void result(const std::string& key, const V& value) {
        doc["results"][key] = value;
    }
    void check(const std::string& name, bool ok, const std::string& lhs = "",
               const std::string& rhs = "") {
        Json c;
        c["name"] = name;
        c["ok"] = ok;
        if (!lhs.empty() || !rhs.empty()) {
            c["lhs"] = lhs;
            c["rhs"] = rhs;
        }
        doc["checks"].push_back(std::move(c));
        all_ok = all_ok && ok;
    }

    std::string structured() const {
        Json out = doc;
        out["ok"] = all_ok;
        return out.dump(2) + "\n";
    }

    std::string human() const {
        std::ostringstream os;
        os << doc["command"].get<std::string>() << "\n";
        for (const auto& [k, v] : doc["config"].items())
            os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
               << "\n";
        for (const auto& c : doc["checks"]) {
            os << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] "
               << c["name"].get<std::string>();
            if (c.contains("lhs"))
                os << ": " << c["lhs"].get<std::string>() << " vs "
                   << c["rhs"].get<std::string>();
            os << "\n";
        }
        for (const auto& [k, v] : doc["results"].items())
            os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
               << "\n";
        os << (all_ok ? "OK" : "FAILED") << "\n";
        return os.str();
    }
};

}  // namespace hallcat
