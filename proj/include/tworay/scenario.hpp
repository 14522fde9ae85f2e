#pragma once

// Line-oriented scenario files:
//
//   [variety]       name, vars, row1, row2, chamber, ambient_claim
//   [hypersurface]  degree, monomial = x^2*y*z u_min=1 | monomial = x^4 absent
//   [transform]     shift = x:4 t:6, cancel, target_name, target_vars,
//                   target_row1, target_row2, target_chamber
//
// '#' starts a comment. Monomials are multiplicative ("x^3*z").

#include "tworay/graded_toric.hpp"
#include "tworay/monomials.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tworay::cli {

using cones::Int;
using cones::Vec2;
using monomials::ExponentVector;

// Reference ambient weights recorded for a ray, printed next to the
// computed presentation and never reconciled with it.
struct AmbientClaim {
    Vec2 ray;
    std::vector<int> weights;
    friend bool operator==(const AmbientClaim&, const AmbientClaim&) = default;
};

struct VarietyBlock {
    std::string name;
    std::vector<std::string> vars;
    std::vector<Int> row1;
    std::vector<Int> row2;
    Vec2 chamber_lo;
    Vec2 chamber_hi;
    std::vector<AmbientClaim> claims;
    friend bool operator==(const VarietyBlock&, const VarietyBlock&) = default;
};

struct ConstraintLine {
    ExponentVector fibre;
    int u_min = 0;
    friend bool operator==(const ConstraintLine&, const ConstraintLine&) = default;
};

struct HypersurfaceBlock {
    Vec2 degree;
    std::vector<ConstraintLine> constraints; // grlex order
    std::vector<ExponentVector> absent;      // grlex order
    friend bool operator==(const HypersurfaceBlock&, const HypersurfaceBlock&) = default;
};

struct TransformBlock {
    std::vector<std::pair<std::string, int>> shifts; // nonzero, file order
    std::optional<int> cancel;
    std::string target_name;
    std::vector<std::string> target_vars;
    std::vector<Int> target_row1;
    std::vector<Int> target_row2;
    std::optional<std::pair<Vec2, Vec2>> target_chamber;
    friend bool operator==(const TransformBlock&, const TransformBlock&) = default;
};

struct ScenarioFile {
    VarietyBlock variety;
    std::optional<HypersurfaceBlock> hypersurface;
    std::optional<TransformBlock> transform;

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
    // Equal up to name and ambient claims.
    bool equivalent(const ScenarioFile& other) const;

    toric::GradingMatrix grading() const;
    toric::ToricModel model() const;
    // Throws PreconditionError without a hypersurface block.
    monomials::LinearSystem system() const;
};

// Throws ParseError carrying the offending line number.
ScenarioFile parse_scenario(std::string_view text);
std::string serialize(const ScenarioFile& s);

std::vector<std::string> builtin_names();
// Throws PreconditionError for an unknown name.
std::string_view builtin_text(std::string_view name);
ScenarioFile builtin(std::string_view name);

// Scenario of the transformed hypersurface; its [transform] block holds
// the inverse substitution.
ScenarioFile transform_scenario(const ScenarioFile& s, int* cancelled = nullptr);

} // namespace tworay::cli
