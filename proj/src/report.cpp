#include "cpq/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cpq {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

void Report::run(const std::string& id, const std::string& anchor,
                 const std::function<std::optional<std::string>()>& body) {
    CheckEntry e{id, anchor};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto w = body();
        if (w) {
            e.status = Status::Fail;
            e.witness = *w;
        }
    } catch (const std::exception& ex) {
        e.status = Status::Error;
        e.witness = ex.what();
    }
    e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    entries_.push_back(std::move(e));
}

void Report::expect(const std::string& id, const std::string& anchor, bool ok, const std::string& witness) {
    CheckEntry e{id, anchor, ok ? Status::Pass : Status::Fail, ok ? std::string() : witness};
    entries_.push_back(std::move(e));
}

void Report::merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void Report::sort_by_id() {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
}

bool Report::all_passed() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const CheckEntry& e) { return e.status == Status::Pass; });
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [s](const CheckEntry& e) { return e.status == s; }));
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries_) {
        os << "[" << to_string(e.status) << "] " << e.id << "  (" << e.anchor << ")";
        if (!e.witness.empty()) os << "\n    witness: " << e.witness;
        os << "\n";
    }
    os << suite_ << ": " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, "
       << count(Status::Error) << " errors\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite_;
    j["passed"] = all_passed();
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& e : entries_) {
        arr.push_back({{"id", e.id},
                       {"anchor", e.anchor},
                       {"status", to_string(e.status)},
                       {"witness", e.witness},
                       {"elapsed_ms", e.elapsed_ms}});
    }
    return j.dump(2);
}

}  // namespace cpq
