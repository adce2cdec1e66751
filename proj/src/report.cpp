#include "topomeasure/report.hpp"

namespace topomeasure {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.informational && c.verdict != Verdict::pass) return false;
    return true;
}

bool Report::any_fail() const {
    for (const auto& c : checks)
        if (!c.informational && c.verdict == Verdict::fail) return true;
    return false;
}

bool Report::any_unknown() const {
    for (const auto& c : checks)
        if (!c.informational && c.verdict == Verdict::unknown) return true;
    return false;
}

const Check* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace topomeasure
