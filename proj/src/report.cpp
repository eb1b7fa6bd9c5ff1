#include "hq/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hq {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = tool_version;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = std::move(cfg);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["value"] = r.value;
        item["expected"] = r.expected;
        item["tolerance"] = r.tolerance;
        item["pass"] = r.pass;
        arr.push_back(std::move(item));
    }
    j["results"] = std::move(arr);
    return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "name,value,expected,tolerance,pass\n";
    for (const CheckResult& r : results) {
        os << csv_quote(r.name) << ',' << csv_quote(r.value) << ','
           << csv_quote(r.expected) << ',' << csv_quote(r.tolerance) << ','
           << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

void Report::save_json(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << to_json();
}

void Report::save_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << to_csv();
}

}  // namespace hq
