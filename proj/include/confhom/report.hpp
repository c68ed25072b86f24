#ifndef CONFHOM_REPORT_HPP
#define CONFHOM_REPORT_HPP

#include <string>
#include <vector>

namespace confhom {

// One verification check. `label` identifies the check and its parameters
// ("cycle p=2 alpha=[0,1] s=[1,0]"); `detail` carries both sides of the
// compared equality so a failure line is self-contained.
struct Check {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string label, bool pass, std::string detail = {}) {
        checks.push_back(Check{std::move(label), pass, std::move(detail)});
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const Check& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

} // namespace confhom

#endif
