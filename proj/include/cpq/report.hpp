#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cpq {

enum class Status { Pass, Fail, Error };

std::string to_string(Status s);

/// One verified identity. `anchor` names the identity checked (a formula or
/// the word "plumbing" for infrastructure checks).
struct CheckEntry {
    std::string id;
    std::string anchor;
    Status status = Status::Pass;
    std::string witness;
    double elapsed_ms = 0;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckEntry>& entries() const { return entries_; }

    void add(CheckEntry e) { entries_.push_back(std::move(e)); }
    /// Run `body`; an empty optional means pass, a string is the failure witness.
    /// Exceptions become Error entries carrying the exception text.
    void run(const std::string& id, const std::string& anchor,
             const std::function<std::optional<std::string>()>& body);
    /// Convenience for a boolean outcome.
    void expect(const std::string& id, const std::string& anchor, bool ok, const std::string& witness = {});
    void merge(const Report& other);
    void sort_by_id();

    bool all_passed() const;
    std::size_t count(Status s) const;

    std::string to_text() const;
    std::string to_json() const;

private:
    std::string suite_;
    std::vector<CheckEntry> entries_;
};

}  // namespace cpq
