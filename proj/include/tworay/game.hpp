#pragma once

// The 2-ray game on a rank-two toric ambient and its restriction to a
// hypersurface.

#include "tworay/graded_toric.hpp"
#include "tworay/monomials.hpp"
#include "tworay/sectionring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tworay::game {

using cones::Cone2;
using cones::RayZ2;
using cones::UnimodularMap;
using monomials::LinearSystem;
using toric::Bidegree;
using toric::GradingMatrix;
using toric::ToricModel;

enum class CrossingKind { small, divisorial_contracts, boundary_fibration, boundary_divisorial };
const char* to_string(CrossingKind k);

enum class KSign { flip, flop, antiflip, not_small };
const char* to_string(KSign k);

struct WallCrossing {
    RayZ2 wall;
    UnimodularMap normalizer = UnimodularMap::identity();
    // First coordinate of normalizer * column, in grading order.
    std::vector<std::pair<std::string, cones::Int>> weights;
    std::vector<std::string> positive_side;
    std::vector<std::string> wall_vars;
    std::vector<std::string> negative_side;
    CrossingKind kind = CrossingKind::small;
    std::optional<std::string> divisor; // contracted variable for divisorial kinds

    // Nonzero weights only, grading order, e.g. (1,1,-2,-2,-4).
    std::vector<cones::Int> nonzero_weights() const;
    KSign toric_k_sign() const;
    std::string kind_str() const;
};

WallCrossing classify_boundary(const GradingMatrix& g, const RayZ2& r);
WallCrossing classify_wall(const GradingMatrix& g, const RayZ2& w, const Cone2& from_chamber);

enum class RestrictionResult { restricted_small, isomorphism_disjoint, divisorial, fibration };
const char* to_string(RestrictionResult r);

struct RestrictedCrossing {
    WallCrossing parent;
    std::optional<std::string> eliminated;
    std::optional<std::string> witness; // monomial that fired the rule
    RestrictionResult result = RestrictionResult::restricted_small;
    std::vector<std::pair<std::string, cones::Int>> weights; // restricted, nonzero only
    KSign k_sign = KSign::not_small;
    bool inconclusive = false;

    std::vector<cones::Int> weight_values() const;
};

RestrictedCrossing restrict_to_hypersurface(const WallCrossing& wc, const LinearSystem& s);

struct MoriCheck {
    bool ok = true;
    std::string reason; // failure reason, or a note when ok
};

inline const std::string kNonIsolated = "non-isolated singularities on extracted locus";
inline const std::string kKTrivial = "K-trivial contraction";

MoriCheck mori_check(const RestrictedCrossing& rc, const Bidegree& antican);

struct GameStep {
    RestrictedCrossing crossing;
    MoriCheck check;
};

enum class Verdict { sarkisov_link, fails_mori_category, k_trivial_end };
const char* to_string(Verdict v);

struct LinkEnd {
    RayZ2 ray;
    CrossingKind kind;
    sections::SectionRingPresentation presentation;
    std::optional<sections::Rewrite> rewrite;
    std::optional<cones::Int> image_degree;
    std::optional<cones::Int> fano_index;
};

struct GameTrace {
    std::vector<ToricModel> models;
    std::vector<GameStep> steps;
    Verdict verdict = Verdict::sarkisov_link;
    std::optional<std::size_t> fail_step;
    std::string fail_reason;
    // Every failing step, collected in full-trace mode.
    std::vector<std::pair<std::size_t, std::string>> failures;
    std::optional<LinkEnd> end;
    bool reflected = false; // walk ran from the counterclockwise end
    bool inconclusive = false;
};

struct GameOptions {
    bool full_trace = false;
    int section_bound = 12;
};

GameTrace run_game(const ToricModel& m, const LinearSystem& s, const GameOptions& opts = {});

} // namespace tworay::game
