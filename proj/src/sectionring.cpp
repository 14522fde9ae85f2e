#include "tworay/sectionring.hpp"

#include "tworay/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

namespace tworay::sections {

using cones::cross;
using cones::dot;
using cones::Vec2;
using monomials::degree_of;
using monomials::format_monomial;
using monomials::grlex_less;

std::optional<Int> ray_weight(const GradingMatrix& g, const RayZ2& ray, const ExponentVector& e) {
    const Vec2 d = degree_of(g, e);
    if (cross(d, ray) != 0 || dot(d, ray) < 0) return std::nullopt;
    return ray.x() != 0 ? d.x / ray.x() : d.y / ray.y();
}

namespace {

// phi with phi . ray = 1.
Vec2 unit_functional(const RayZ2& r) {
    Int old_r = r.x(), rr = r.y(), old_s = 1, s = 0, old_t = 0, t = 1;
    while (rr != 0) {
        const Int q = old_r / rr;
        old_r = std::exchange(rr, old_r - q * rr);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    return old_r < 0 ? Vec2{-old_s, -old_t} : Vec2{old_s, old_t};
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

int generator_weight_bound(const GradingMatrix& g, const RayZ2& ray) {
    // Minimal solutions of sum(lambda_i e_i) = 0 with e >= 0 have
    // positive-part size <= max|negative lambda| and vice versa.
    Int max_pos = 0, max_neg = 0;
    for (const auto& c : g.cols()) {
        const Int l = cross(c, ray);
        if (l > 0) max_pos = std::max(max_pos, l);
        if (l < 0) max_neg = std::max(max_neg, -l);
    }
    const Vec2 phi0 = unit_functional(ray);
    const Vec2 perp{ray.y(), -ray.x()};
    Int best = -1;
    for (Int k = -64; k <= 64; ++k) {
        const Vec2 phi = phi0 + perp.scaled(k);
        Int zero_part = 0, pos_phi = 0, neg_phi = 0;
        for (const auto& c : g.cols()) {
            const Int l = cross(c, ray);
            const Int w = dot(phi, c);
            if (l == 0) zero_part = std::max(zero_part, w);
            else if (l > 0) pos_phi = std::max(pos_phi, w);
            else neg_phi = std::max(neg_phi, w);
        }
        Int mixed = 0;
        if (max_pos > 0 && max_neg > 0) mixed = max_neg * pos_phi + max_pos * neg_phi;
        const Int bound = std::max(zero_part, mixed);
        if (best < 0 || bound < best) best = bound;
    }
    return static_cast<int>(best);
}

SectionRingPresentation section_generators(const GradingMatrix& g, const RayZ2& ray, int bound) {
    if (bound < 1) throw PreconditionError("section ring degree bound must be >= 1");
    if (cones::cone_position(toric::effective_cone(g), ray) == cones::Position::exterior)
        throw PreconditionError("ray " + ray.str() + " lies outside the effective cone");
    SectionRingPresentation p;
    p.ray = ray;
    p.degree_bound = bound;
    p.hilbert_bound = generator_weight_bound(g, ray);
    p.complete_up_to_bound = bound >= p.hilbert_bound;
    for (int m = 1; m <= bound; ++m) {
        std::vector<Generator> fresh;
        for (auto& e : monomials::enumerate_monomials(g, cones::Vec2(ray).scaled(m))) {
            const bool reducible = std::any_of(p.generators.begin(), p.generators.end(),
                                               [&](const Generator& h) { return divides(h.exps, e); });
            if (!reducible) fresh.push_back({std::move(e), m});
        }
        std::move(fresh.begin(), fresh.end(), std::back_inserter(p.generators));
    }
    return p;
}

std::vector<int> ambient_weights(const SectionRingPresentation& p) {
    std::vector<int> w;
    for (const auto& gen : p.generators) w.push_back(gen.weight);
    std::sort(w.begin(), w.end());
    return w;
}

Rewrite rewrite_in_generators(const LinearSystem& s, const SectionRingPresentation& p) {
    const auto& g = s.ambient();
    std::vector<std::size_t> order(p.generators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = p.generators[a];
        const auto& gb = p.generators[b];
        if (ga.weight != gb.weight) return ga.weight > gb.weight;
        return grlex_less(ga.exps, gb.exps);
    });

    Rewrite out;
    for (const auto& m : s.expanded_monomials()) {
        const auto w = ray_weight(g, p.ray, m);
        if (!w) {
            out.failure = format_monomial(g, m) + " has degree " + degree_of(g, m).str() +
                          ", not a multiple of " + p.ray.str();
            return out;
        }
        RewrittenTerm term{m, {}, static_cast<int>(*w)};
        ExponentVector rest = m;
        while (std::any_of(rest.begin(), rest.end(), [](int x) { return x != 0; })) {
            auto it = std::find_if(order.begin(), order.end(),
                                   [&](std::size_t i) { return divides(p.generators[i].exps, rest); });
            if (it == order.end()) {
                out.failure = format_monomial(g, m) + " is not a product of the generators";
                return out;
            }
            term.factors.push_back(*it);
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= p.generators[*it].exps[k];
        }
        if (out.image_degree && *out.image_degree != term.weight) {
            out.failure = format_monomial(g, m) + " has generator weight " + std::to_string(term.weight) +
                          ", expected " + std::to_string(*out.image_degree);
            return out;
        }
        out.image_degree = term.weight;
        out.terms.push_back(std::move(term));
    }
    out.ok = true;
    return out;
}

Int wps_index(const std::vector<int>& weights, Int hyp_degree) {
    Int sum = 0;
    for (int w : weights) sum = cones::checked_add(sum, w);
    return sum - hyp_degree;
}

std::string format_weights(const std::vector<int>& weights) {
    std::vector<int> w = weights;
    std::sort(w.begin(), w.end());
    std::ostringstream os;
    os << "P(";
    if (w.size() <= 6) {
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    } else {
        std::map<int, int> count;
        for (int x : w) ++count[x];
        bool first = true;
        for (const auto& [x, k] : count) {
            os << (first ? "" : ",") << x;
            if (k > 1) os << '^' << k;
            first = false;
        }
    }
    os << ')';
    return os.str();
}

} // namespace tworay::sections
