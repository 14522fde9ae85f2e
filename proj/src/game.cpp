#include "tworay/game.hpp"

#include "tworay/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace tworay::game {

using cones::cross;
using cones::Int;
using cones::Vec2;
using monomials::MonomialClass;

const char* to_string(CrossingKind k) {
    switch (k) {
    case CrossingKind::small: return "small";
    case CrossingKind::divisorial_contracts: return "divisorial_contracts";
    case CrossingKind::boundary_fibration: return "boundary_fibration";
    case CrossingKind::boundary_divisorial: return "boundary_divisorial";
    }
    return "?";
}

const char* to_string(KSign k) {
    switch (k) {
    case KSign::flip: return "flip";
    case KSign::flop: return "flop";
    case KSign::antiflip: return "antiflip";
    case KSign::not_small: return "not_small";
    }
    return "?";
}

const char* to_string(RestrictionResult r) {
    switch (r) {
    case RestrictionResult::restricted_small: return "restricted_small";
    case RestrictionResult::isomorphism_disjoint: return "isomorphism_disjoint";
    case RestrictionResult::divisorial: return "divisorial";
    case RestrictionResult::fibration: return "fibration";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::sarkisov_link: return "sarkisov_link";
    case Verdict::fails_mori_category: return "fails_mori_category";
    case Verdict::k_trivial_end: return "k_trivial_end";
    }
    return "?";
}

namespace {

KSign sign_of_sum(const std::vector<std::pair<std::string, Int>>& weights) {
    Int sum = 0;
    for (const auto& [name, w] : weights) sum = cones::checked_add(sum, w);
    if (sum > 0) return KSign::flip;
    if (sum < 0) return KSign::antiflip;
    return KSign::flop;
}

std::vector<std::pair<std::string, Int>> nonzero(const std::vector<std::pair<std::string, Int>>& weights) {
    std::vector<std::pair<std::string, Int>> out;
    for (const auto& p : weights)
        if (p.second != 0) out.push_back(p);
    return out;
}

WallCrossing with_weights(const GradingMatrix& g, const RayZ2& w, const UnimodularMap& m) {
    WallCrossing wc{w, m, {}, {}, {}, {}, CrossingKind::small, std::nullopt};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Int weight = m.apply(g.col(i)).x;
        wc.weights.emplace_back(g.var(i), weight);
        (weight > 0 ? wc.positive_side : weight == 0 ? wc.wall_vars : wc.negative_side).push_back(g.var(i));
    }
    return wc;
}

} // namespace

std::vector<Int> WallCrossing::nonzero_weights() const {
    std::vector<Int> out;
    for (const auto& [name, w] : weights)
        if (w != 0) out.push_back(w);
    return out;
}

KSign WallCrossing::toric_k_sign() const {
    if (kind != CrossingKind::small) return KSign::not_small;
    return sign_of_sum(weights);
}

std::string WallCrossing::kind_str() const {
    std::string s = to_string(kind);
    if (divisor) s += "(" + *divisor + ")";
    return s;
}

std::vector<Int> RestrictedCrossing::weight_values() const {
    std::vector<Int> out;
    for (const auto& p : weights) out.push_back(p.second);
    return out;
}

WallCrossing classify_boundary(const GradingMatrix& g, const RayZ2& r) {
    const auto fan = toric::chamber_fan(g);
    if (!(r == fan.rays.front() || r == fan.rays.back()))
        throw PreconditionError("ray " + r.str() + " is not an extreme ray of the effective cone");
    // Any orientation clockwise of r gives the forced first row.
    const auto m = cones::normalize_wall(r, Vec2{r.y(), -r.x()});
    WallCrossing wc = with_weights(g, r, m);
    const auto& carriers = fan.carriers_of(r);
    if (carriers.size() >= 2) {
        wc.kind = CrossingKind::boundary_fibration;
    } else {
        wc.kind = CrossingKind::boundary_divisorial;
        wc.divisor = carriers.front();
    }
    return wc;
}

WallCrossing classify_wall(const GradingMatrix& g, const RayZ2& w, const Cone2& from_chamber) {
    const auto fan = toric::chamber_fan(g);
    const auto idx = fan.ray_index(w);
    if (!idx || *idx == 0 || *idx + 1 == fan.rays.size())
        throw PreconditionError("ray " + w.str() + " is not an interior wall of the chamber fan");
    if (std::find(fan.chambers.begin(), fan.chambers.end(), from_chamber) == fan.chambers.end() ||
        !(from_chamber.lo() == w || from_chamber.hi() == w))
        throw PreconditionError("cone " + from_chamber.str() + " is not a chamber adjacent to wall " + w.str());
    const auto m = cones::normalize_wall(w, from_chamber.interior_point());
    WallCrossing wc = with_weights(g, w, m);
    const std::size_t pos = wc.positive_side.size(), neg = wc.negative_side.size();
    if (pos >= 2 && neg >= 2) {
        wc.kind = CrossingKind::small;
    } else {
        wc.kind = CrossingKind::divisorial_contracts;
        wc.divisor = neg == 1 ? wc.negative_side.front() : wc.positive_side.front();
    }
    return wc;
}

RestrictedCrossing restrict_to_hypersurface(const WallCrossing& wc, const LinearSystem& s) {
    const auto& g = s.ambient();
    if (wc.weights.size() != g.size()) throw PreconditionError("linear system does not match the crossing's grading");
    std::uint64_t off_wall = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& [name, w] = wc.weights[i];
        if (name != g.var(i) || wc.normalizer.apply(g.col(i)).x != w)
            throw PreconditionError("linear system does not match the crossing's grading");
        if (w != 0) off_wall |= std::uint64_t{1} << i;
    }

    RestrictedCrossing rc{wc, std::nullopt, std::nullopt, RestrictionResult::restricted_small, nonzero(wc.weights),
                          KSign::not_small, false};

    auto alive = [&](const MonomialClass& c) { return !monomials::coefficient_vanishes(s, c, off_wall); };
    auto off_wall_vars = [&](const MonomialClass& c) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < c.fibre.size(); ++i)
            if (c.fibre[i] > 0 && (off_wall >> i & 1U)) vars.push_back(i);
        return vars;
    };

    // Elimination: a class linear in one off-wall variable, otherwise on the wall.
    auto elimination_scan = [&]() {
        for (const auto& c : s.classes()) {
            const auto vars = off_wall_vars(c);
            if (vars.size() == 1 && c.fibre[vars.front()] == 1 && alive(c)) {
                const std::string& name = g.var(vars.front());
                rc.eliminated = name;
                rc.witness = monomials::format_monomial(g, c.fibre);
                std::erase_if(rc.weights, [&](const auto& p) { return p.first == name; });
                return true;
            }
        }
        return false;
    };

    switch (wc.kind) {
    case CrossingKind::boundary_fibration:
        rc.result = RestrictionResult::fibration;
        elimination_scan();
        return rc;
    case CrossingKind::boundary_divisorial:
    case CrossingKind::divisorial_contracts:
        rc.result = RestrictionResult::divisorial;
        elimination_scan();
        return rc;
    case CrossingKind::small: break;
    }

    // Disjointness takes precedence over elimination.
    for (const auto& c : s.classes()) {
        if (off_wall_vars(c).empty() && alive(c)) {
            rc.result = RestrictionResult::isomorphism_disjoint;
            rc.witness = monomials::format_monomial(g, c.fibre);
            rc.weights.clear();
            return rc;
        }
    }
    if (!elimination_scan()) rc.inconclusive = true;
    rc.result = RestrictionResult::restricted_small;
    rc.k_sign = sign_of_sum(rc.weights);
    return rc;
}

MoriCheck mori_check(const RestrictedCrossing& rc, const Bidegree& antican) {
    if (rc.result == RestrictionResult::isomorphism_disjoint) return {true, "hypersurface misses the crossing locus"};
    MoriCheck out{true, ""};
    if (rc.result == RestrictionResult::restricted_small) {
        std::vector<Int> extracted;
        for (const auto& [name, w] : rc.weights)
            if (w < 0) extracted.push_back(-w);
        const bool all_big = std::all_of(extracted.begin(), extracted.end(), [](Int w) { return w >= 2; });
        const bool any_big = std::any_of(extracted.begin(), extracted.end(), [](Int w) { return w >= 2; });
        if (extracted.size() >= 2 && all_big) return {false, kNonIsolated};
        if (any_big) out.reason = "isolated quotient points on the extracted locus";
    }
    if (!antican.is_zero() && cross(rc.parent.wall, antican) == 0) return {false, kKTrivial};
    return out;
}

namespace {

// (x, y) -> (-x, y), an orientation-reversing involution.
Vec2 reflect(const Vec2& v) { return {-v.x, v.y}; }
RayZ2 reflect(const RayZ2& r) { return RayZ2::from_primitive(reflect(r.vec())); }

GameTrace walk(const ToricModel& m, const LinearSystem& s, const GameOptions& opts) {
    const auto& g = m.grading;
    const auto fan = toric::chamber_fan(g);
    const auto mob = toric::mobile_cone_toric(g);
    const Bidegree antican = toric::adjunction_anticanonical(g, s.degree());
    const std::size_t last = *fan.ray_index(mob.hi());

    GameTrace trace;
    trace.models.push_back(m);
    bool stopped = false;
    for (std::size_t i = 0; i <= last && !stopped; ++i) {
        const RayZ2& r = fan.rays[i];
        const bool boundary = i == 0 || i + 1 == fan.rays.size();
        const WallCrossing wc = boundary ? classify_boundary(g, r) : classify_wall(g, r, fan.chambers[i - 1]);
        GameStep step{restrict_to_hypersurface(wc, s), {}};
        step.check = mori_check(step.crossing, antican);
        if (step.crossing.inconclusive) trace.inconclusive = true;
        if (!step.check.ok) {
            trace.failures.emplace_back(trace.steps.size(), step.check.reason);
            if (!opts.full_trace) stopped = true;
        }
        const bool crosses_into_chamber = wc.kind == CrossingKind::small && i < last;
        trace.steps.push_back(std::move(step));
        if (crosses_into_chamber) trace.models.push_back(toric::model_from_chamber(g, fan.chambers[i]));
    }

    if (!stopped) {
        const auto& terminal = trace.steps.back().crossing;
        LinkEnd end{terminal.parent.wall, terminal.parent.kind,
                    sections::section_generators(g, terminal.parent.wall, opts.section_bound), std::nullopt,
                    std::nullopt, std::nullopt};
        if (terminal.parent.kind != CrossingKind::boundary_fibration) {
            end.rewrite = sections::rewrite_in_generators(s, end.presentation);
            if (end.rewrite->ok && end.rewrite->image_degree) {
                end.image_degree = *end.rewrite->image_degree;
                end.fano_index = sections::wps_index(sections::ambient_weights(end.presentation), *end.image_degree);
            }
        }
        trace.end = std::move(end);
    }

    if (trace.failures.empty()) {
        trace.verdict = Verdict::sarkisov_link;
    } else {
        const auto& [step, reason] = trace.failures.front();
        trace.fail_step = step;
        trace.fail_reason = reason;
        const bool terminal = step == last;
        trace.verdict = reason == kKTrivial && terminal ? Verdict::k_trivial_end : Verdict::fails_mori_category;
    }
    return trace;
}

} // namespace

GameTrace run_game(const ToricModel& m, const LinearSystem& s, const GameOptions& opts) {
    if (!(m.grading == s.ambient())) throw PreconditionError("linear system is not over the model's grading");
    const auto fan = toric::chamber_fan(m.grading);
    if (fan.carriers.front().size() >= 2 && m.chamber.lo() == fan.rays.front()) return walk(m, s, opts);
    if (!(fan.carriers.back().size() >= 2 && m.chamber.hi() == fan.rays.back()))
        throw PreconditionError("the model's chamber is not adjacent to a fibration boundary");

    // Walk from the counterclockwise end in the mirror image, then map back.
    std::vector<Vec2> cols;
    for (const auto& c : m.grading.cols()) cols.push_back(reflect(c));
    const GradingMatrix rg(m.grading.vars(), cols);
    const Cone2 rc(reflect(m.chamber.hi()), reflect(m.chamber.lo()));
    const LinearSystem rs(rg, reflect(s.degree()), s.classes());
    GameTrace t = walk(toric::model_from_chamber(rg, rc), rs, opts);
    t.reflected = true;
    for (auto& model : t.models)
        model = toric::model_from_chamber(m.grading, Cone2(reflect(model.chamber.hi()), reflect(model.chamber.lo())));
    for (auto& step : t.steps) step.crossing.parent.wall = reflect(step.crossing.parent.wall);
    if (t.end) {
        t.end->ray = reflect(t.end->ray);
        t.end->presentation.ray = t.end->ray;
    }
    return t;
}

} // namespace tworay::game
