#include "report_format.hpp"

namespace xhopf::cli {

ojson checks_json(const Report& report) {
    ojson out = ojson::array();
    for (const auto& c : report.checks()) {
        ojson j;
        j["name"] = c.name();
        j["status"] = std::string(to_string(c.status()));
        j["violations"] = c.violations();
        if (!c.note().empty())
            j["note"] = c.note();
        j["witnesses"] = c.witnesses();
        out.push_back(std::move(j));
    }
    return out;
}

ojson vector_json(const Vector& v) {
    ojson out = ojson::array();
    for (const auto& s : v)
        out.push_back(s.to_string());
    return out;
}

namespace {

void render_outputs(const ojson& obj, std::string& out, int indent) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        out.append(static_cast<std::size_t>(indent), ' ');
        if (it.value().is_object()) {
            out += it.key() + ":\n";
            render_outputs(it.value(), out, indent + 2);
        } else if (it.value().is_string()) {
            out += it.key() + " = " + it.value().get<std::string>() + "\n";
        } else {
            out += it.key() + " = " + it.value().dump() + "\n";
        }
    }
}

} // namespace

std::string render_text(const ojson& report) {
    std::string out;
    out += "command = " + report["command"].get<std::string>() + "\n";
    for (const auto& t : report["targets"])
        out += "target = " + t.get<std::string>() + "\n";
    out += "input = " + report["input"].get<std::string>() + "\n";
    out += "checks:\n";
    for (const auto& c : report["checks"]) {
        out += "  [" + c["status"].get<std::string>() + "] " + c["name"].get<std::string>();
        if (c["violations"].get<std::size_t>() > 0)
            out += " (" + std::to_string(c["violations"].get<std::size_t>()) + " violations)";
        if (c.contains("note"))
            out += " -- " + c["note"].get<std::string>();
        out += "\n";
        for (const auto& w : c["witnesses"])
            out += "      witness: " + w.get<std::string>() + "\n";
    }
    if (!report["outputs"].empty()) {
        out += "outputs:\n";
        render_outputs(report["outputs"], out, 2);
    }
    const auto& summary = report["summary"];
    out += "result = " + summary["result"].get<std::string>() + " (" +
           std::to_string(summary["checks"].get<std::size_t>()) + " checks, " +
           std::to_string(summary["failed"].get<std::size_t>()) + " failed)\n";
    return out;
}

} // namespace xhopf::cli
