#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

using tworay::cones::cross;
using tworay::cones::dot;

namespace {

Vec2 positive_functional(const std::vector<Vec2>& cols) {
    for (Int r = 1; r <= 60; ++r)
        for (Int a = -r; a <= r; ++a)
            for (Int b = -r; b <= r; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != r) continue;
                const Vec2 phi{a, b};
                if (std::all_of(cols.begin(), cols.end(), [&](const Vec2& c) { return dot(phi, c) > 0; })) return phi;
            }
    throw std::logic_error("oracle: no small positive functional");
}

} // namespace

std::vector<Exps> monomials_box(const std::vector<Vec2>& cols, const Vec2& d) {
    const std::size_t n = cols.size();
    const Vec2 phi = positive_functional(cols);
    const Int budget = dot(phi, d);
    std::vector<Exps> out;
    if (budget < 0) return out;

    std::size_t j = n, k = n;
    for (std::size_t b = n; b-- > 1 && j == n;)
        for (std::size_t a = b; a-- > 0;)
            if (cross(cols[a], cols[b]) != 0) {
                j = a;
                k = b;
                break;
            }

    std::vector<std::size_t> loop;
    for (std::size_t i = 0; i < n; ++i)
        if (i != j && i != k) loop.push_back(i);
    if (j == n) loop.pop_back(); // all columns parallel: solve for the last one

    Exps e(n, 0);
    auto solve = [&](const Vec2& r) {
        if (j == n) {
            const std::size_t l = n - 1;
            const Vec2& c = cols[l];
            if (cross(c, r) != 0 || dot(c, r) < 0) return;
            const Int m = c.x != 0 ? r.x / c.x : r.y / c.y;
            if (Vec2{c.x * m, c.y * m} != r) return;
            e[l] = static_cast<int>(m);
            out.push_back(e);
            e[l] = 0;
            return;
        }
        const Int det = cross(cols[j], cols[k]);
        const Int ln = cross(r, cols[k]), mn = cross(cols[j], r);
        if (ln % det != 0 || mn % det != 0) return;
        const Int l = ln / det, m = mn / det;
        if (l < 0 || m < 0) return;
        e[j] = static_cast<int>(l);
        e[k] = static_cast<int>(m);
        out.push_back(e);
        e[j] = e[k] = 0;
    };

    // Plain nested box loop over the remaining variables.
    auto rec = [&](auto&& self, std::size_t idx, Int used, Vec2 acc) -> void {
        if (idx == loop.size()) {
            solve(Vec2{d.x - acc.x, d.y - acc.y});
            return;
        }
        const std::size_t v = loop[idx];
        const Int w = dot(phi, cols[v]);
        for (Int p = 0; used + p * w <= budget; ++p) {
            e[v] = static_cast<int>(p);
            self(self, idx + 1, used + p * w, Vec2{acc.x + p * cols[v].x, acc.y + p * cols[v].y});
        }
        e[v] = 0;
    };
    rec(rec, 0, 0, Vec2{0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

bool in_cone(const std::vector<Vec2>& gens, const Vec2& p) {
    for (const auto& g : gens)
        if (cross(g, p) == 0 && dot(g, p) > 0) return true;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            const Int det = cross(a, b);
            if (det == 0) continue;
            const Int l = cross(p, b), m = cross(a, p);
            if ((det > 0 && l >= 0 && m >= 0) || (det < 0 && l <= 0 && m <= 0)) return true;
        }
    return false;
}

bool stable(const std::vector<Vec2>& cols, std::uint64_t zero_mask, const Vec2& chamber_point) {
    std::vector<Vec2> rest;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (!(zero_mask >> i & 1)) rest.push_back(cols[i]);
    return in_cone(rest, chamber_point);
}

std::vector<Exps> expand(const tworay::monomials::LinearSystem& s) {
    const auto& base = s.base().base;
    const std::size_t u = s.base().designated;
    std::vector<Exps> out;
    for (const auto& c : s.classes()) {
        Exps e = c.fibre;
        auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
            if (idx + 1 == base.size()) {
                e[base[idx]] = left;
                Exps m = e;
                m[u] += c.u_min;
                out.push_back(m);
                return;
            }
            for (int p = 0; p <= left; ++p) {
                e[base[idx]] = p;
                self(self, idx + 1, left - p);
            }
        };
        rec(rec, 0, c.coeff_deg - c.u_min);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> base_locus(const tworay::monomials::LinearSystem& s, const Vec2& chamber_point) {
    const auto& g = s.ambient();
    const std::size_t n = g.size();
    const auto mons = expand(s);
    std::vector<Vec2> cols(g.cols().begin(), g.cols().end());
    auto killed = [&](std::uint64_t mask) {
        for (const auto& m : mons) {
            bool hit = false;
            for (std::size_t i = 0; i < n; ++i)
                if (m[i] > 0 && (mask >> i & 1)) hit = true;
            if (!hit) return false;
        }
        return true;
    };
    std::vector<std::uint64_t> cand;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (stable(cols, mask, chamber_point) && killed(mask)) cand.push_back(mask);
    std::vector<std::uint64_t> out;
    for (auto m : cand) {
        const bool minimal = std::none_of(cand.begin(), cand.end(),
                                          [&](std::uint64_t o) { return o != m && (o & m) == o; });
        if (minimal) out.push_back(m);
    }
    return out;
}

bool derivative_alive(const std::vector<Exps>& expanded, std::size_t var, std::uint64_t mask) {
    for (const auto& m : expanded) {
        if (m[var] != 1) continue;
        bool clean = true;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] > 0 && (mask >> i & 1)) clean = false;
        if (clean) return true;
    }
    return false;
}

bool generates(const std::vector<Vec2>& cols, const Vec2& ray, int bound, const std::vector<Exps>& gens) {
    std::set<Exps> reachable;
    auto decomposes = [&](auto&& self, const Exps& e) -> bool {
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return true;
        if (reachable.count(e)) return true;
        for (const auto& gen : gens) {
            bool fits = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (gen[i] > e[i]) fits = false;
            if (!fits) continue;
            Exps rest = e;
            for (std::size_t i = 0; i < e.size(); ++i) rest[i] -= gen[i];
            if (self(self, rest)) {
                reachable.insert(e);
                return true;
            }
        }
        return false;
    };
    for (int m = 1; m <= bound; ++m)
        for (const auto& e : monomials_box(cols, Vec2{ray.x * m, ray.y * m}))
            if (!decomposes(decomposes, e)) return false;
    return true;
}

Mat random_unimodular(std::mt19937_64& rng, int steps) {
    static const Mat moves[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, -1, 1, 0}};
    Mat m{1, 0, 0, 1};
    std::uniform_int_distribution<int> pick(0, 4);
    for (int s = 0; s < steps; ++s) {
        const Mat& e = moves[pick(rng)];
        m = {e.a * m.a + e.b * m.c, e.a * m.b + e.b * m.d, e.c * m.a + e.d * m.c, e.c * m.b + e.d * m.d};
    }
    return m;
}

} // namespace oracle
