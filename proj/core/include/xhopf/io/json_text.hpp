#pragma once

#include <string>

namespace xhopf::io {

/// Pretty-prints a nlohmann-style JSON value with two-space indentation,
/// keeping arrays of primitives (rows, vectors) on one line.
template <class Json>
void compact_dump(const Json& j, std::string& out, int indent = 0) {
    auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            pad(indent + 2);
            out += Json(it.key()).dump();
            out += ": ";
            compact_dump(it.value(), out, indent + 2);
        }
        out += "\n";
        pad(indent);
        out += "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j)
            flat = flat && !v.is_structured();
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                out += j[i].dump();
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            pad(indent + 2);
            compact_dump(j[i], out, indent + 2);
        }
        out += "\n";
        pad(indent);
        out += "]";
    } else {
        out += j.dump();
    }
}

template <class Json>
std::string compact_dump(const Json& j) {
    std::string out;
    compact_dump(j, out, 0);
    out += "\n";
    return out;
}

} // namespace xhopf::io
