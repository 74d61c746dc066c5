#include "sph/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace sph {

namespace {

std::string type_of(const Json& j) {
    if (j.is_null()) return "null";
    if (j.is_boolean()) return "boolean";
    if (j.is_number_integer() || j.is_number_unsigned()) return "integer";
    if (j.is_number()) return "number";
    if (j.is_string()) return "string";
    if (j.is_array()) return "array";
    return "object";
}

bool type_matches(const std::string& want, const Json& j) {
    const auto have = type_of(j);
    return want == have || (want == "number" && have == "integer");
}

class Validator {
public:
    explicit Validator(const Json& root) : root_(root) {}

    void check(const Json& s, const Json& d, const std::string& path, std::vector<Violation>& out) const {
        if (s.is_boolean()) {
            if (!s.get<bool>()) out.push_back({"schema", path + ": not allowed"});
            return;
        }
        if (s.contains("$ref")) check(resolve(s["$ref"].get<std::string>()), d, path, out);
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok = ok || type_matches(t.get<std::string>(), d);
            } else {
                ok = type_matches(s["type"].get<std::string>(), d);
            }
            if (!ok) {
                out.push_back({"schema", path + ": expected " + s["type"].dump() + ", got " + type_of(d)});
                return;
            }
        }
        if (s.contains("const") && s["const"] != d) out.push_back({"schema", path + ": must equal " + s["const"].dump()});
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& e : s["enum"]) found = found || e == d;
            if (!found) out.push_back({"schema", path + ": " + d.dump() + " not in " + s["enum"].dump()});
        }
        if (s.contains("anyOf")) {
            bool any = false;
            for (const auto& alt : s["anyOf"]) {
                std::vector<Violation> tmp;
                check(alt, d, path, tmp);
                any = any || tmp.empty();
            }
            if (!any) out.push_back({"schema", path + ": matches no alternative"});
        }
        if (d.is_number()) {
            if (s.contains("minimum") && d.get<double>() < s["minimum"].get<double>())
                out.push_back({"schema", path + ": below minimum " + s["minimum"].dump()});
            if (s.contains("maximum") && d.get<double>() > s["maximum"].get<double>())
                out.push_back({"schema", path + ": above maximum " + s["maximum"].dump()});
        }
        if (d.is_string()) {
            const auto str = d.get<std::string>();
            if (s.contains("minLength") && str.size() < s["minLength"].get<std::size_t>())
                out.push_back({"schema", path + ": string too short"});
            if (s.contains("pattern") && !std::regex_search(str, std::regex(s["pattern"].get<std::string>())))
                out.push_back({"schema", path + ": '" + str + "' does not match " + s["pattern"].get<std::string>()});
        }
        if (d.is_array()) {
            if (s.contains("minItems") && d.size() < s["minItems"].get<std::size_t>())
                out.push_back({"schema", path + ": too few items"});
            if (s.contains("maxItems") && d.size() > s["maxItems"].get<std::size_t>())
                out.push_back({"schema", path + ": too many items"});
            if (s.value("uniqueItems", false))
                for (std::size_t i = 0; i < d.size(); ++i)
                    for (std::size_t k = i + 1; k < d.size(); ++k)
                        if (d[i] == d[k]) out.push_back({"schema", path + ": duplicate item " + d[i].dump()});
            if (s.contains("items"))
                for (std::size_t i = 0; i < d.size(); ++i) check(s["items"], d[i], path + "/" + std::to_string(i), out);
        }
        if (d.is_object()) {
            if (s.contains("required"))
                for (const auto& r : s["required"])
                    if (!d.contains(r.get<std::string>()))
                        out.push_back({"schema", path + ": missing required field '" + r.get<std::string>() + "'"});
            for (const auto& [key, value] : d.items()) {
                const std::string sub = path + "/" + key;
                if (s.contains("properties") && s["properties"].contains(key)) {
                    check(s["properties"][key], value, sub, out);
                } else if (s.contains("additionalProperties")) {
                    const auto& ap = s["additionalProperties"];
                    if (ap.is_boolean() && !ap.get<bool>()) out.push_back({"schema", sub + ": unknown field"});
                    else if (ap.is_object()) check(ap, value, sub, out);
                }
            }
        }
    }

private:
    const Json& resolve(const std::string& ref) const {
        if (ref.rfind("#", 0) != 0) throw Error(ErrorCode::SchemaViolation, "only local $ref supported: " + ref);
        return root_.at(Json::json_pointer(ref.substr(1)));
    }

    const Json& root_;
};

}  // namespace

std::vector<Violation> schema_validate(const Json& schema, const Json& doc) {
    std::vector<Violation> out;
    Validator(schema).check(schema, doc, "", out);
    for (auto& v : out)
        if (v.witness.rfind(":", 0) == 0) v.witness = "/" + v.witness;
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

Json load_schema(const std::string& name) {
    if (const char* env = std::getenv("SKELETON_SCHEMA_PATH"); env && *env) {
        const std::filesystem::path p(env);
        if (std::filesystem::is_directory(p)) {
            const auto f = p / (name + ".schema.json");
            if (std::filesystem::exists(f)) return read_json_file(f.string());
        } else if (name == "skeleton") {
            return read_json_file(p.string());
        }
    }
    const char* text = name == "skeleton"    ? schemas::skeleton()
                       : name == "augmented" ? schemas::augmented()
                       : name == "report"    ? schemas::report()
                                             : nullptr;
    if (!text) throw Error(ErrorCode::ParseError, "unknown schema '" + name + "'");
    return Json::parse(text);
}

void require_schema(const std::string& name, const Json& doc) {
    const auto vs = schema_validate(load_schema(name), doc);
    if (vs.empty()) return;
    std::string msg = name + " document: " + vs.front().witness;
    if (vs.size() > 1) msg += " (+" + std::to_string(vs.size() - 1) + " more)";
    throw Error(ErrorCode::SchemaViolation, msg);
}

}  // namespace sph
