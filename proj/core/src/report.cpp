#include "xhopf/report.hpp"

#include <sstream>

namespace xhopf {

std::string_view to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

void Check::fail(std::string witness) {
    ++violations_;
    if (witnesses_.size() < kMaxWitnesses)
        witnesses_.push_back(std::move(witness));
}

void Check::skip(std::string reason) {
    skipped_ = true;
    note_ = std::move(reason);
}

CheckStatus Check::status() const {
    if (violations_ > 0)
        return CheckStatus::fail;
    return skipped_ ? CheckStatus::skipped : CheckStatus::pass;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks_) {
        if (!prefix.empty())
            c.rename(prefix + c.name());
        checks_.push_back(std::move(c));
    }
}

bool Report::ok() const { return failed_count() == 0; }

std::size_t Report::failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        n += c.status() == CheckStatus::fail;
    return n;
}

std::size_t Report::total_violations() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        n += c.violations();
    return n;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name() == name)
            return &c;
    return nullptr;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << '[' << to_string(c.status()) << "] " << c.name();
        if (c.violations() > 0)
            os << " (" << c.violations() << " violations)";
        if (!c.note().empty())
            os << " -- " << c.note();
        os << '\n';
        for (const auto& w : c.witnesses())
            os << "    witness: " << w << '\n';
    }
    return os.str();
}

} // namespace xhopf
