#include "fibrant/cli.hpp"

namespace fibrant::cli {

namespace {

bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check(const json& v, const json& s, const std::string& path, std::vector<std::string>& out) {
    if (s.contains("type")) {
        const json& t = s["type"];
        bool ok = false;
        if (t.is_string())
            ok = has_type(v, t.get<std::string>());
        else
            for (auto& alt : t) ok = ok || has_type(v, alt.get<std::string>());
        if (!ok) {
            out.push_back(path + ": expected type " + t.dump());
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (auto& e : s["enum"]) found = found || e == v;
        if (!found) out.push_back(path + ": value " + v.dump() + " not in " + s["enum"].dump());
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (auto& key : s["required"])
                if (!v.contains(key.get<std::string>())) out.push_back(path + ": missing '" + key.get<std::string>() + "'");
        const json* props = s.contains("properties") ? &s["properties"] : nullptr;
        const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
        for (auto& [key, value] : v.items()) {
            if (props && props->contains(key))
                check(value, (*props)[key], path + "." + key, out);
            else if (closed)
                out.push_back(path + ": unexpected key '" + key + "'");
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>())
            out.push_back(path + ": fewer than " + s["minItems"].dump() + " items");
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>())
            out.push_back(path + ": more than " + s["maxItems"].dump() + " items");
        if (s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "[" + std::to_string(i) + "]", out);
    }
}

}  // namespace

const json& report_schema() {
    static const json schema = json::parse(report_schema_text());
    return schema;
}

std::vector<std::string> validate(const json& doc, const json& schema) {
    std::vector<std::string> out;
    check(doc, schema, "$", out);
    return out;
}

}  // namespace fibrant::cli
