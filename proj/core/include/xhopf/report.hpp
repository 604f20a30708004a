#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xhopf {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

/// One named identity or axiom. Every violation is counted, but only the
/// first `kMaxWitnesses` are kept as human-readable witnesses.
class Check {
  public:
    static constexpr std::size_t kMaxWitnesses = 10;

    explicit Check(std::string name) : name_(std::move(name)) {}

    void fail(std::string witness);
    void skip(std::string reason);
    /// Records a failure when `ok` is false; `witness` is only built on failure.
    template <class F>
    void expect(bool ok, F&& witness) {
        if (!ok)
            fail(witness());
    }

    const std::string& name() const { return name_; }
    CheckStatus status() const;
    std::size_t violations() const { return violations_; }
    const std::vector<std::string>& witnesses() const { return witnesses_; }
    const std::string& note() const { return note_; }

    void rename(std::string name) { name_ = std::move(name); }

  private:
    std::string name_;
    std::size_t violations_ = 0;
    bool skipped_ = false;
    std::vector<std::string> witnesses_;
    std::string note_;
};

/// Ordered list of checks. Order is the order of insertion, which every
/// validator keeps canonical (ascending element indices).
class Report {
  public:
    void add(Check check) { checks_.push_back(std::move(check)); }
    /// Appends all checks of `other`, prefixing their names with `prefix`.
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t failed_count() const;
    std::size_t total_violations() const;
    const std::vector<Check>& checks() const { return checks_; }
    const Check* find(const std::string& name) const;

    /// Plain-text rendering, one line per check plus indented witnesses.
    std::string to_text() const;

  private:
    std::vector<Check> checks_;
};

} // namespace xhopf
