#include "tworay/graded_toric.hpp"

#include "tworay/error.hpp"

#include <algorithm>
#include <set>

namespace tworay::toric {

using cones::cross;

namespace {

int half(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const Vec2& a, const Vec2& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

// Clockwise-most and counterclockwise-most extremes of a pointed cone.
std::pair<RayZ2, RayZ2> extremes(const std::vector<Vec2>& cols) {
    std::vector<RayZ2> rays;
    for (const auto& c : cols) {
        auto r = cones::primitivize(c);
        if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
    }
    if (rays.size() < 2) throw PreconditionError("grading columns span a single ray; the effective cone is degenerate");
    std::sort(rays.begin(), rays.end(), [](const RayZ2& a, const RayZ2& b) { return angle_less(a, b); });
    const std::size_t m = rays.size();
    for (std::size_t i = 0; i < m; ++i) {
        const RayZ2& a = rays[i];
        const RayZ2& b = rays[(i + 1) % m];
        // A counterclockwise gap of more than 180 degrees.
        if (cross(a, b) < 0) return {b, a};
    }
    throw PreconditionError("grading columns span a non-pointed cone");
}

} // namespace

GradingMatrix::GradingMatrix(std::vector<std::string> vars, std::vector<Vec2> cols)
    : vars_(std::move(vars)), cols_(std::move(cols)) {
    if (vars_.size() != cols_.size()) throw PreconditionError("variable count does not match column count");
    if (vars_.size() < 3) throw PreconditionError("a grading needs at least three variables");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw PreconditionError("empty variable name");
        if (!seen.insert(vars_[i]).second) throw PreconditionError("duplicate variable name " + vars_[i]);
        if (cols_[i].is_zero()) throw PreconditionError("variable " + vars_[i] + " has degree (0,0)");
    }
    const auto [lo, hi] = extremes(cols_);
    positive_ = Vec2{-lo.y(), lo.x()} + Vec2{hi.y(), -hi.x()};
}

std::optional<std::size_t> GradingMatrix::find(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t GradingMatrix::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw PreconditionError("unknown variable " + name);
    return *i;
}

GradingMatrix GradingMatrix::transformed(const cones::UnimodularMap& m) const {
    std::vector<Vec2> cols;
    cols.reserve(cols_.size());
    for (const auto& c : cols_) cols.push_back(m.apply(c));
    return GradingMatrix(vars_, std::move(cols));
}

std::optional<std::size_t> ChamberFan::ray_index(const RayZ2& r) const {
    auto it = std::find(rays.begin(), rays.end(), r);
    if (it == rays.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rays.begin());
}

const std::vector<std::string>& ChamberFan::carriers_of(const RayZ2& r) const {
    auto i = ray_index(r);
    if (!i) throw PreconditionError("ray " + r.str() + " is not a ray of the chamber fan");
    return carriers[*i];
}

std::string IrrelevantIdeal::str() const {
    auto join = [](const std::vector<std::string>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s + ")";
    };
    return join(f) + "∩" + join(g);
}

Cone2 effective_cone(const GradingMatrix& g) {
    const auto [lo, hi] = extremes(g.cols());
    return Cone2(lo, hi);
}

ChamberFan chamber_fan(const GradingMatrix& g) {
    ChamberFan fan;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto r = g.ray(i);
        if (!fan.ray_index(r)) fan.rays.push_back(r);
    }
    // Inside a pointed cone the cross product is a strict total order.
    std::sort(fan.rays.begin(), fan.rays.end(), [](const RayZ2& a, const RayZ2& b) { return cross(a, b) > 0; });
    fan.carriers.resize(fan.rays.size());
    for (std::size_t i = 0; i < g.size(); ++i) fan.carriers[*fan.ray_index(g.ray(i))].push_back(g.var(i));
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i) fan.chambers.emplace_back(fan.rays[i], fan.rays[i + 1]);
    return fan;
}

ToricModel model_from_chamber(const GradingMatrix& g, const Cone2& c) {
    const auto fan = chamber_fan(g);
    if (std::find(fan.chambers.begin(), fan.chambers.end(), c) == fan.chambers.end())
        throw PreconditionError("cone " + c.str() + " is not a chamber of the grading");
    // Chambers are consecutive, so every ray is <= lo or >= hi.
    const std::size_t lo = *fan.ray_index(c.lo());
    IrrelevantIdeal ideal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t k = *fan.ray_index(g.ray(i));
        (k <= lo ? ideal.f : ideal.g).push_back(g.var(i));
    }
    return ToricModel{g, c, std::move(ideal)};
}

Bidegree anticanonical_ambient(const GradingMatrix& g) {
    Bidegree s;
    for (const auto& c : g.cols()) s = s + c;
    return s;
}

Bidegree adjunction_anticanonical(const GradingMatrix& g, const Bidegree& hyp) {
    return anticanonical_ambient(g) - hyp;
}

Cone2 mobile_cone_toric(const GradingMatrix& g) {
    const auto fan = chamber_fan(g);
    const std::size_t m = fan.rays.size();
    const RayZ2 lo = fan.carriers.front().size() >= 2 ? fan.rays.front() : fan.rays[1];
    const RayZ2 hi = fan.carriers.back().size() >= 2 ? fan.rays.back() : fan.rays[m - 2];
    if (cross(lo, hi) <= 0) throw PreconditionError("the toric mobile cone is degenerate");
    return Cone2(lo, hi);
}

const char* to_string(KCondition k) {
    switch (k) {
    case KCondition::holds_boundary: return "holds_boundary";
    case KCondition::holds_exterior: return "holds_exterior";
    case KCondition::fails_interior: return "fails_interior";
    }
    return "?";
}

KConditionReport k_condition(const GradingMatrix& g, const Bidegree& hyp) {
    const Bidegree antican = adjunction_anticanonical(g, hyp);
    if (antican.is_zero()) throw PreconditionError("anticanonical class is (0,0); the K-condition is undefined");
    const Cone2 mob = mobile_cone_toric(g);
    KCondition verdict = KCondition::fails_interior;
    switch (cones::cone_position(mob, antican)) {
    case cones::Position::interior: verdict = KCondition::fails_interior; break;
    case cones::Position::boundary: verdict = KCondition::holds_boundary; break;
    case cones::Position::exterior: verdict = KCondition::holds_exterior; break;
    }
    const bool ok = !hyp.is_zero() && cones::cone_position(mob, hyp) == cones::Position::interior;
    return {verdict, antican, mob, ok};
}

const char* to_string(Gorenstein v) {
    switch (v) {
    case Gorenstein::gorenstein: return "gorenstein";
    case Gorenstein::not_gorenstein: return "not_gorenstein";
    case Gorenstein::not_applicable: return "not_applicable";
    }
    return "?";
}

Gorenstein gorenstein_check(const GradingMatrix& g, const Bidegree& hyp) {
    if (g.size() != 6 || hyp.y != 4) return Gorenstein::not_applicable;
    int base = 0, fibre = 0, weight_two = 0;
    Int weight_two_first = 0;
    for (const auto& c : g.cols()) {
        if (c == Vec2{1, 0}) ++base;
        else if (c.y == 1) ++fibre;
        else if (c.y == 2) { ++weight_two; weight_two_first = c.x; }
    }
    if (base != 2 || fibre != 3 || weight_two != 1) return Gorenstein::not_applicable;
    return hyp.x == cones::checked_mul(2, weight_two_first) ? Gorenstein::gorenstein : Gorenstein::not_gorenstein;
}

std::optional<RayZ2> fibration_ray(const GradingMatrix& g) {
    const auto fan = chamber_fan(g);
    if (fan.carriers.front().size() >= 2) return fan.rays.front();
    if (fan.carriers.back().size() >= 2) return fan.rays.back();
    return std::nullopt;
}

} // namespace tworay::toric
