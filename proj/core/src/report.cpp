#include "biamalg/report.hpp"

#include "biamalg/isocheck.hpp"

namespace biamalg {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unknown: return "unknown";
    }
    return "unknown";
}

Check& Report::add(std::string name, bool ok, std::string witness) {
    checks.push_back(Check{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness), {}});
    return checks.back();
}

void Report::add_unknown(std::string name, std::string reason) {
    checks.push_back(Check{std::move(name), CheckStatus::unknown, std::move(reason), {}});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        checks.push_back(c);
        checks.back().name = prefix + c.name;
    }
    for (const auto& n : other.notes) notes.push_back(prefix + n);
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

bool Report::any_failed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

bool Report::any_unknown() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::unknown) return true;
    return false;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Check& add_isomorphism(Report& report, std::string name, const FiniteRing& r, const FiniteRing& s,
                       std::uint64_t budget) {
    IsoResult res = find_isomorphism(r, s, budget);
    switch (res.outcome) {
        case IsoOutcome::isomorphic: {
            Check& c = report.add(std::move(name), true, to_string(*res.witness));
            c.map = std::move(res.witness);
            return c;
        }
        case IsoOutcome::not_isomorphic:
            return report.add(std::move(name), false,
                              "orders " + std::to_string(r.size()) + " and " + std::to_string(s.size()) + ": " +
                                  res.reason);
        case IsoOutcome::unknown: break;
    }
    report.add_unknown(std::move(name), res.reason);
    return report.checks.back();
}

}  // namespace biamalg
