#include "tworay/monomials.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tworay::monomials {

using cones::checked_add;
using cones::checked_mul;
using cones::cross;
using cones::dot;

Bidegree degree_of(const GradingMatrix& g, const ExponentVector& e) {
    Bidegree d;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) d = d + g.col(i).scaled(e[i]);
    return d;
}

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string format_monomial(const std::vector<std::string>& vars, const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[i];
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_monomial(const GradingMatrix& g, const ExponentVector& e) { return format_monomial(g.vars(), e); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

ExponentVector parse_monomial(const GradingMatrix& g, std::string_view text) {
    ExponentVector e(g.size(), 0);
    text = trim(text);
    if (text.empty()) throw ParseError(0, "empty monomial");
    if (text == "1") return e;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t star = std::min(text.find('*', start), text.size());
        std::string_view factor = trim(text.substr(start, star - start));
        std::string_view name = factor;
        int power = 1;
        if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
            name = trim(factor.substr(0, caret));
            const auto digits = trim(factor.substr(caret + 1));
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || power < 0)
                throw ParseError(0, "bad exponent in monomial '" + std::string(text) + "'");
        }
        const auto idx = g.find(std::string(name));
        if (!idx) throw ParseError(0, "unknown variable '" + std::string(name) + "' in monomial '" + std::string(text) + "'");
        e[*idx] += power;
        start = star + 1;
    }
    return e;
}

// --- enumeration -----------------------------------------------------------

namespace {

struct Enumerator {
    const GradingMatrix& g;
    const Vec2 phi;
    std::vector<Int> phi_col;

    explicit Enumerator(const GradingMatrix& grading) : g(grading), phi(grading.positive_functional()) {
        for (const auto& c : g.cols()) phi_col.push_back(dot(phi, c));
    }

    // Largest exponent of variable i that keeps phi(remaining) >= 0.
    Int max_power(std::size_t i, const Vec2& rem) const {
        const Int p = dot(phi, rem);
        return p < 0 ? -1 : p / phi_col[i];
    }

    void dfs(std::size_t i, Vec2 rem, ExponentVector& e, std::vector<ExponentVector>& out) const {
        const std::size_t n = g.size();
        const Int p = dot(phi, rem);
        if (p < 0) return;
        if (p == 0) {
            if (!rem.is_zero()) return;
            std::fill(e.begin() + static_cast<std::ptrdiff_t>(i), e.end(), 0);
            out.push_back(e);
            return;
        }
        if (i == n - 1) {
            const Vec2& c = g.col(i);
            const Int k = p / phi_col[i];
            if (p % phi_col[i] == 0 && c.scaled(k) == rem) {
                e[i] = static_cast<int>(k);
                out.push_back(e);
            }
            return;
        }
        const Int top = max_power(i, rem);
        for (Int k = 0; k <= top; ++k) {
            e[i] = static_cast<int>(k);
            dfs(i + 1, rem - g.col(i).scaled(k), e, out);
        }
        e[i] = 0;
    }
};

} // namespace

std::vector<ExponentVector> enumerate_monomials_serial(const GradingMatrix& g, const Bidegree& d) {
    Enumerator en(g);
    std::vector<ExponentVector> out;
    ExponentVector e(g.size(), 0);
    en.dfs(0, d, e, out);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

std::vector<ExponentVector> enumerate_monomials(const GradingMatrix& g, const Bidegree& d) {
    Enumerator en(g);
    const Int top = en.max_power(0, d);
    if (top < 0) return {};
    std::vector<std::vector<ExponentVector>> parts(static_cast<std::size_t>(top + 1));

#pragma omp parallel for schedule(dynamic)
    for (Int k = 0; k <= top; ++k) {
        ExponentVector e(g.size(), 0);
        e[0] = static_cast<int>(k);
        en.dfs(1, d - g.col(0).scaled(k), e, parts[static_cast<std::size_t>(k)]);
    }

    std::vector<ExponentVector> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

// --- linear systems --------------------------------------------------------

bool BaseSplit::is_base(std::size_t i) const { return std::find(base.begin(), base.end(), i) != base.end(); }

BaseSplit base_split(const GradingMatrix& g) {
    const auto ray = toric::fibration_ray(g);
    if (!ray) throw PreconditionError("grading has no fibration boundary (no extreme ray carries two variables)");
    BaseSplit split;
    split.ray = *ray;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.ray(i) == *ray) split.base.push_back(i);
    for (std::size_t i : split.base)
        if (g.col(i) != g.col(split.base.front()))
            throw PreconditionError("base variables on the fibration ray must share one degree");
    split.designated = split.base.front();
    return split;
}

namespace {

// All exponent vectors over `vars` with total degree `deg`, grlex order.
void compositions(const std::vector<std::size_t>& vars, std::size_t pos, int deg, ExponentVector& e,
                  std::vector<ExponentVector>& out) {
    if (pos + 1 == vars.size()) {
        e[vars[pos]] = deg;
        out.push_back(e);
        e[vars[pos]] = 0;
        return;
    }
    for (int k = deg; k >= 0; --k) {
        e[vars[pos]] = k;
        compositions(vars, pos + 1, deg - k, e, out);
    }
    e[vars[pos]] = 0;
}

Bidegree class_degree(const GradingMatrix& g, const BaseSplit& base, const MonomialClass& c) {
    return degree_of(g, c.fibre) + g.col(base.designated).scaled(c.coeff_deg);
}

} // namespace

LinearSystem::LinearSystem(GradingMatrix ambient, Bidegree degree, std::vector<MonomialClass> classes)
    : ambient_(std::move(ambient)), degree_(degree), classes_(std::move(classes)), base_(base_split(ambient_)) {
    for (const auto& c : classes_) {
        if (c.fibre.size() != ambient_.size()) throw PreconditionError("class exponent vector has the wrong length");
        for (int x : c.fibre)
            if (x < 0) throw PreconditionError("negative exponent in class");
        for (std::size_t i : base_.base)
            if (c.fibre[i] != 0) throw PreconditionError("class fibre part involves a base variable");
        if (c.u_min < 0 || c.u_min > c.coeff_deg)
            throw PreconditionError("class " + format_monomial(ambient_, c.fibre) + " needs 0 <= u_min <= coeff_deg");
        if (class_degree(ambient_, base_, c) != degree_)
            throw PreconditionError("class " + format_monomial(ambient_, c.fibre) + " does not have degree " +
                                    degree_.str());
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const MonomialClass& a, const MonomialClass& b) { return grlex_less(a.fibre, b.fibre); });
    for (std::size_t i = 1; i < classes_.size(); ++i)
        if (classes_[i].fibre == classes_[i - 1].fibre)
            throw PreconditionError("duplicate fibre monomial " + format_monomial(ambient_, classes_[i].fibre));
}

const MonomialClass* LinearSystem::find(const ExponentVector& fibre) const {
    for (const auto& c : classes_)
        if (c.fibre == fibre) return &c;
    return nullptr;
}

std::vector<ExponentVector> LinearSystem::expand(const MonomialClass& c) const {
    std::vector<ExponentVector> out;
    ExponentVector e = c.fibre;
    compositions(base_.base, 0, c.free_deg(), e, out);
    for (auto& m : out) m[base_.designated] += c.u_min;
    return out;
}

std::vector<ExponentVector> LinearSystem::expanded_monomials() const {
    std::vector<ExponentVector> out;
    for (const auto& c : classes_) {
        auto part = expand(c);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<MonomialClass> fibre_classes(const GradingMatrix& g, const Bidegree& d) {
    const BaseSplit base = base_split(g);
    std::vector<MonomialClass> out;
    for (auto e : enumerate_monomials(g, d)) {
        int k = 0;
        for (std::size_t i : base.base) k += std::exchange(e[i], 0);
        if (std::none_of(out.begin(), out.end(), [&](const MonomialClass& c) { return c.fibre == e; }))
            out.push_back({std::move(e), k, 0});
    }
    std::sort(out.begin(), out.end(),
              [](const MonomialClass& a, const MonomialClass& b) { return grlex_less(a.fibre, b.fibre); });
    return out;
}

LinearSystem build_system(const GradingMatrix& g, const Bidegree& d, const std::vector<Constraint>& constraints,
                          const std::vector<ExponentVector>& excluded) {
    auto classes = fibre_classes(g, d);
    auto locate = [&](const ExponentVector& fibre) {
        auto it = std::find_if(classes.begin(), classes.end(), [&](const MonomialClass& c) { return c.fibre == fibre; });
        if (it == classes.end())
            throw PreconditionError("monomial " + format_monomial(g, fibre) + " is not a fibre monomial of degree " +
                                    d.str());
        return it;
    };
    for (const auto& con : constraints) {
        auto it = locate(con.fibre);
        if (con.u_min < 0 || con.u_min > it->coeff_deg)
            throw PreconditionError("u_min " + std::to_string(con.u_min) + " for " + format_monomial(g, con.fibre) +
                                    " exceeds its coefficient degree " + std::to_string(it->coeff_deg));
        it->u_min = con.u_min;
    }
    for (const auto& ex : excluded) classes.erase(locate(ex));
    return LinearSystem(g, d, std::move(classes));
}

std::vector<ExponentVector> missing_monomials(const LinearSystem& s) {
    std::vector<ExponentVector> out;
    for (const auto& c : fibre_classes(s.ambient(), s.degree()))
        if (!s.find(c.fibre)) out.push_back(c.fibre);
    return out;
}

// --- strata ----------------------------------------------------------------

std::uint64_t Stratum::mask() const {
    std::uint64_t m = 0;
    for (std::size_t i : zeros) m |= std::uint64_t{1} << i;
    return m;
}

Stratum Stratum::from_mask(std::uint64_t mask, std::size_t n) {
    Stratum s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) s.zeros.push_back(i);
    return s;
}

std::vector<std::string> Stratum::names(const GradingMatrix& g) const {
    std::vector<std::string> out;
    for (std::size_t i : zeros) out.push_back(g.var(i));
    return out;
}

bool Stratum::contains(std::size_t i) const { return std::find(zeros.begin(), zeros.end(), i) != zeros.end(); }

Stratum stratum_from_names(const GradingMatrix& g, const std::vector<std::string>& names) {
    std::uint64_t m = 0;
    for (const auto& n : names) m |= std::uint64_t{1} << g.index_of(n);
    return Stratum::from_mask(m, g.size());
}

namespace {

std::uint64_t mask_of(const GradingMatrix& g, const std::vector<std::string>& names) {
    std::uint64_t m = 0;
    for (const auto& n : names) m |= std::uint64_t{1} << g.index_of(n);
    return m;
}

} // namespace

bool admissible(const ToricModel& m, std::uint64_t mask) {
    const std::uint64_t f = mask_of(m.grading, m.irrelevant.f);
    const std::uint64_t g = mask_of(m.grading, m.irrelevant.g);
    return mask != 0 && (mask & f) != f && (mask & g) != g;
}

bool coefficient_vanishes(const LinearSystem& s, const MonomialClass& c, std::uint64_t mask) {
    const auto& base = s.base();
    if ((mask >> base.designated & 1U) && c.u_min >= 1) return true;
    const bool all_base = std::all_of(base.base.begin(), base.base.end(), [&](std::size_t i) { return mask >> i & 1U; });
    return all_base && c.coeff_deg >= 1;
}

bool class_vanishes(const LinearSystem& s, const MonomialClass& c, std::uint64_t mask) {
    for (std::size_t i = 0; i < c.fibre.size(); ++i)
        if (c.fibre[i] > 0 && (mask >> i & 1U)) return true;
    return coefficient_vanishes(s, c, mask);
}

namespace {

void check_locus_inputs(const ToricModel& m, const LinearSystem& s) {
    if (!(m.grading == s.ambient())) throw PreconditionError("linear system is not over the model's grading");
    if (s.empty()) throw PreconditionError("empty linear system: its base locus is everything");
    if (m.grading.size() > 24) throw PreconditionError("exhaustive strata search supports at most 24 variables");
}

bool kills(const LinearSystem& s, std::uint64_t mask) {
    return std::all_of(s.classes().begin(), s.classes().end(),
                       [&](const MonomialClass& c) { return class_vanishes(s, c, mask); });
}

// Candidates are upward closed in "kills" and downward closed in
// admissibility, so single-bit removals decide minimality.
bool minimal(const std::vector<char>& candidate, std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const std::uint64_t bit = rest & (~rest + 1);
        if (candidate[mask ^ bit]) return false;
    }
    return true;
}

std::vector<Stratum> collect(const std::vector<char>& is_min, std::size_t n) {
    std::vector<Stratum> out;
    for (std::uint64_t mask = 0; mask < is_min.size(); ++mask)
        if (is_min[mask]) out.push_back(Stratum::from_mask(mask, n));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Stratum> base_locus_serial(const ToricModel& m, const LinearSystem& s) {
    check_locus_inputs(m, s);
    const std::size_t n = m.grading.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<char> candidate(total, 0), is_min(total, 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) candidate[mask] = admissible(m, mask) && kills(s, mask);
    for (std::uint64_t mask = 1; mask < total; ++mask) is_min[mask] = candidate[mask] && minimal(candidate, mask);
    return collect(is_min, n);
}

std::vector<Stratum> base_locus(const ToricModel& m, const LinearSystem& s) {
    check_locus_inputs(m, s);
    const std::size_t n = m.grading.size();
    const std::int64_t total = std::int64_t{1} << n;
    const std::uint64_t f = mask_of(m.grading, m.irrelevant.f);
    const std::uint64_t g = mask_of(m.grading, m.irrelevant.g);
    std::vector<char> candidate(static_cast<std::size_t>(total), 0), is_min(static_cast<std::size_t>(total), 0);

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 1; k < total; ++k) {
        const auto mask = static_cast<std::uint64_t>(k);
        candidate[mask] = (mask & f) != f && (mask & g) != g && kills(s, mask);
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 1; k < total; ++k) {
        const auto mask = static_cast<std::uint64_t>(k);
        is_min[mask] = candidate[mask] && minimal(candidate, mask);
    }
    return collect(is_min, n);
}

std::optional<SmoothnessWitness> smoothness_certificate(const ToricModel& m, const LinearSystem& s,
                                                        const Stratum& st) {
    const auto locus = base_locus(m, s);
    if (std::find(locus.begin(), locus.end(), st) == locus.end())
        throw PreconditionError("stratum is not a component of the base locus");
    const std::uint64_t mask = st.mask();
    for (std::size_t ci = 0; ci < s.classes().size(); ++ci) {
        const auto& c = s.classes()[ci];
        std::optional<std::size_t> linear;
        bool clean = true;
        for (std::size_t i : st.zeros) {
            if (c.fibre[i] == 0) continue;
            if (c.fibre[i] == 1 && !linear) linear = i;
            else clean = false;
        }
        if (clean && linear && !coefficient_vanishes(s, c, mask)) return SmoothnessWitness{ci, *linear};
    }
    return std::nullopt;
}

Polynomial instantiate(const LinearSystem& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(1, 1'000'000);
    Polynomial p;
    for (auto& m : s.expanded_monomials()) p[std::move(m)] = coeff(rng);
    return p;
}

bool derivative_survives(const Polynomial& poly, std::size_t var, const Stratum& st) {
    for (const auto& [e, c] : poly) {
        if (c == 0 || e[var] == 0) continue;
        ExponentVector d = e;
        d[var] -= 1;
        if (std::none_of(st.zeros.begin(), st.zeros.end(), [&](std::size_t i) { return d[i] > 0; })) return true;
    }
    return false;
}

// --- local charts ----------------------------------------------------------

std::string LocalChart::describe(const GradingMatrix& g) const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto& c = coords[k];
        if (k) os << ", ";
        os << g.var(c.var) << " -> " << g.var(c.var) << "/(" << g.var(a) << "^" << c.alpha << "*" << g.var(b) << "^"
           << c.beta << ")";
    }
    return os.str();
}

LocalChart local_chart(const GradingMatrix& g, const std::string& a, const std::string& b, const Stratum& point) {
    const std::size_t ia = g.index_of(a), ib = g.index_of(b);
    if (ia == ib) throw PreconditionError("chart variables must differ");
    const Int det = cross(g.col(ia), g.col(ib));
    if (det != 1 && det != -1)
        throw NonUnimodularChart(det, "chart (" + a + "," + b + ") refused: det = " + std::to_string(det) +
                                          ", local quotient group of order " + std::to_string(det < 0 ? -det : det));
    std::uint64_t others = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != ia && i != ib) others |= std::uint64_t{1} << i;
    if (point.mask() != others) throw PreconditionError("point stratum must consist of every non-chart variable");

    LocalChart chart{ia, ib, {}};
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == ia || i == ib) continue;
        const Int alpha = cross(g.col(i), g.col(ib)) / det;
        const Int beta = cross(g.col(ia), g.col(i)) / det;
        chart.coords.push_back({i, alpha, beta});
    }
    return chart;
}

SupportReport local_support(const LinearSystem& s, const LocalChart& chart, int degree_bound) {
    SupportReport rep;
    rep.degree_bound = degree_bound;
    const auto& g = s.ambient();
    for (const auto& c : chart.coords) rep.coordinates.push_back(g.var(c.var));

    std::set<ExponentVector, decltype(&grlex_less)> local(&grlex_less);
    for (const auto& m : s.expanded_monomials()) {
        ExponentVector e;
        e.reserve(chart.coords.size());
        for (const auto& c : chart.coords) e.push_back(m[c.var]);
        local.insert(std::move(e));
    }
    for (const auto& e : local) {
        const int deg = total_degree(e);
        if (!rep.min_degree) rep.min_degree = deg;
        if (deg <= degree_bound) rep.by_degree[deg].push_back(e);
        const auto nonzero = std::count_if(e.begin(), e.end(), [](int x) { return x != 0; });
        if (nonzero == 1) {
            const auto k = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](int x) { return x != 0; }) - e.begin());
            auto [it, inserted] = rep.pure_powers.emplace(rep.coordinates[k], e[k]);
            if (!inserted) it->second = std::min(it->second, e[k]);
        }
    }

    // Heuristic naming only; the analytic normal form is not computed.
    if (rep.coordinates.size() == 4 && rep.min_degree == 2) {
        const auto& quad = rep.by_degree[2];
        const bool single_square = quad.size() == 1 && std::count(quad[0].begin(), quad[0].end(), 2) == 1;
        std::vector<int> powers;
        for (const auto& [name, p] : rep.pure_powers) powers.push_back(p);
        std::sort(powers.begin(), powers.end());
        if (single_square && powers.size() >= 3 && powers[0] == 2 && powers[1] == 3 && powers[2] == 4)
            rep.note = "cE6 (heuristic): pure-power signature 2,3,4 with a single quadratic square; "
                       "analytic normal form not computed";
    }
    return rep;
}

// --- fibrewise transform ---------------------------------------------------

LinearSystem fibrewise_transform(const LinearSystem& s, const Substitution& subst, const GradingMatrix& target,
                                 std::optional<int> cancel, int* cancelled) {
    const auto& src = s.ambient();
    const auto& sb = s.base();
    for (const auto& [name, power] : subst) {
        const std::size_t i = src.index_of(name);
        if (sb.is_base(i)) throw PreconditionError("substitution may not shift base variable " + name);
        (void)power;
    }
    if (target.size() != src.size()) throw PreconditionError("target grading has a different number of variables");
    std::vector<std::size_t> to_target(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) to_target[i] = target.index_of(src.var(i));
    const BaseSplit tb = base_split(target);
    if (target.var(tb.designated) != src.var(sb.designated) || tb.base.size() != sb.base.size())
        throw PreconditionError("target grading must keep the base variables");
    for (std::size_t i : sb.base)
        if (!tb.is_base(to_target[i])) throw PreconditionError("target grading must keep the base variables");

    std::vector<MonomialClass> shifted;
    int lowest = 0;
    for (std::size_t ci = 0; ci < s.classes().size(); ++ci) {
        const auto& c = s.classes()[ci];
        int shift = 0;
        for (const auto& [name, power] : subst) shift += c.fibre[src.index_of(name)] * power;
        MonomialClass n{ExponentVector(target.size(), 0), c.coeff_deg + shift, c.u_min + shift};
        for (std::size_t i = 0; i < src.size(); ++i) n.fibre[to_target[i]] = c.fibre[i];
        lowest = ci == 0 ? n.u_min : std::min(lowest, n.u_min);
        shifted.push_back(std::move(n));
    }
    const int amount = cancel.value_or(lowest);
    if (!shifted.empty() && amount > lowest)
        throw PreconditionError("cancelling u^" + std::to_string(amount) + " would make a u_min negative (smallest is " +
                                std::to_string(lowest) + ")");
    for (auto& c : shifted) {
        c.u_min -= amount;
        c.coeff_deg -= amount;
    }
    if (cancelled) *cancelled = amount;

    if (shifted.empty()) return LinearSystem(target, s.degree(), {});
    const Bidegree deg = degree_of(target, shifted.front().fibre) + target.col(tb.designated).scaled(shifted.front().coeff_deg);
    for (const auto& c : shifted)
        if (degree_of(target, c.fibre) + target.col(tb.designated).scaled(c.coeff_deg) != deg)
            throw PreconditionError("transformed class " + format_monomial(target, c.fibre) +
                                    " is inconsistent with the target grading");
    return LinearSystem(target, deg, std::move(shifted));
}

} // namespace tworay::monomials
