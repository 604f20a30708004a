#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "xhopf/report.hpp"
#include "xhopf/matrix.hpp"

namespace xhopf::cli {

using ojson = nlohmann::ordered_json;

ojson checks_json(const Report& report);
ojson vector_json(const Vector& v);

/// Plain text: header lines, one line per check with indented witnesses,
/// then outputs as "key = value" with nested objects indented.
std::string render_text(const ojson& report);

} // namespace xhopf::cli
