#pragma once

#include "tworay/scenario.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace testing_util {

using namespace tworay;

inline const cli::ScenarioFile& paper_x() {
    static const auto s = cli::builtin("paper-X");
    return s;
}
inline const cli::ScenarioFile& paper_xprime() {
    static const auto s = cli::builtin("paper-Xprime");
    return s;
}

inline cones::RayZ2 ray(cones::Int x, cones::Int y) { return cones::RayZ2::from_primitive({x, y}); }

inline std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

inline std::vector<std::string> formatted(const toric::GradingMatrix& g, const std::vector<monomials::ExponentVector>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(monomials::format_monomial(g, e));
    return out;
}

inline std::set<std::string> formatted_set(const toric::GradingMatrix& g, const std::vector<monomials::ExponentVector>& v) {
    const auto f = formatted(g, v);
    return {f.begin(), f.end()};
}

// Strata as sets of variable-name sets.
inline std::set<std::set<std::string>> strata_names(const toric::GradingMatrix& g,
                                                    const std::vector<monomials::Stratum>& strata) {
    std::set<std::set<std::string>> out;
    for (const auto& s : strata) out.insert(as_set(s.names(g)));
    return out;
}

} // namespace testing_util
