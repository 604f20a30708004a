#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "xhopf/matrix.hpp"
#include "xhopf/report.hpp"

namespace xhopf::detail {

/// Runs `probe(i)` for every i in [0, n), possibly concurrently, and records
/// the witnesses each probe returns in index order.
template <class F>
void fan_out(Check& check, std::size_t n, unsigned jobs, F&& probe) {
    std::vector<std::vector<std::string>> found(n);
    parallel_for(n, jobs, [&](std::size_t i) { found[i] = probe(i); });
    for (auto& list : found)
        for (auto& w : list)
            check.fail(std::move(w));
}

/// Appends "<where>: <difference>" to `out` when the matrices differ.
inline void compare(std::vector<std::string>& out, const std::string& where, const Matrix& lhs, const Matrix& rhs) {
    if (auto d = first_difference(lhs, rhs))
        out.push_back(where + ": " + *d);
}

inline std::string label(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
    std::string s;
    for (const auto& [name, value] : parts) {
        if (!s.empty())
            s += ' ';
        s += name;
        s += '=';
        s += std::to_string(value);
    }
    return s;
}

} // namespace xhopf::detail
