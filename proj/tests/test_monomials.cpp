#include "doctest.h"

#include "common.hpp"
#include "oracles.hpp"
#include "tworay/error.hpp"
#include "tworay/monomials.hpp"

#include <map>
#include <random>

using namespace tworay;
using namespace tworay::monomials;
using testing_util::formatted_set;
using testing_util::paper_x;
using testing_util::paper_xprime;

namespace {

std::map<int, std::set<std::string>> by_coeff(const GradingMatrix& g, const std::vector<MonomialClass>& cs) {
    std::map<int, std::set<std::string>> out;
    for (const auto& c : cs) out[c.coeff_deg].insert(format_monomial(g, c.fibre));
    return out;
}

std::map<int, std::set<std::string>> by_free(const LinearSystem& s) {
    const auto& g = s.ambient();
    const std::string u = g.var(s.base().designated);
    std::map<int, std::set<std::string>> out;
    for (const auto& c : s.classes()) {
        std::string p = c.u_min == 0 ? "" : c.u_min == 1 ? u + "*" : u + "^" + std::to_string(c.u_min) + "*";
        out[c.free_deg()].insert(p + format_monomial(g, c.fibre));
    }
    return out;
}

std::vector<oracle::Exps> sorted(std::vector<ExponentVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("monomial formatting and parsing") {
    const auto g = paper_x().grading();
    const auto e = parse_monomial(g, "x^3*z");
    CHECK(e == ExponentVector{0, 0, 3, 0, 0, 1});
    CHECK(format_monomial(g, e) == "x^3*z");
    CHECK(format_monomial(g, ExponentVector(6, 0)) == "1");
    CHECK(parse_monomial(g, " x * x*z ") == ExponentVector{0, 0, 2, 0, 0, 1});
    CHECK_THROWS_AS(parse_monomial(g, "w^2"), ParseError);
    CHECK_THROWS_AS(parse_monomial(g, "x^"), ParseError);
    CHECK_THROWS_AS(parse_monomial(g, "x^-1"), ParseError);
    CHECK(grlex_less(parse_monomial(g, "x^2"), parse_monomial(g, "x*y")));
    CHECK(grlex_less(parse_monomial(g, "x*y"), parse_monomial(g, "y^2")));
    CHECK(grlex_less(parse_monomial(g, "z"), parse_monomial(g, "x^2")));
}

TEST_CASE("the |O(-4,4)| table") {
    const auto g = paper_x().grading();
    const auto basis = enumerate_monomials(g, {-4, 4});
    CHECK(basis.size() == 99);
    CHECK(sorted(basis) == oracle::monomials_box({g.cols().begin(), g.cols().end()}, {-4, 4}));
    const std::map<int, std::set<std::string>> table = {
        {0, {"x^3*z", "t^2", "x^2*y^2", "x*t*y"}},
        {2, {"x*y^3", "t*y^2", "x^2*y*z", "x*t*z"}},
        {4, {"t*y*z", "x*y^2*z", "y^4", "x^2*z^2"}},
        {6, {"x*y*z^2", "t*z^2", "y^3*z"}},
        {8, {"x*z^3", "y^2*z^2"}},
        {10, {"y*z^3"}},
        {12, {"z^4"}},
    };
    CHECK(by_coeff(g, fibre_classes(g, {-4, 4})) == table);
    CHECK(enumerate_monomials(g, {1, -1}).empty());
    CHECK(enumerate_monomials(g, {0, 0}).size() == 1);
}

TEST_CASE("the constrained system L'") {
    const auto s = paper_x().system();
    CHECK(s.classes().size() == 19);
    CHECK(missing_monomials(s).empty());
    const auto& g = s.ambient();
    const std::map<std::string, int> umin = {{"x^2*y*z", 1}, {"x*t*z", 2},   {"x*y^2*z", 2}, {"t*y*z", 3},
                                             {"y^3*z", 3},   {"x^2*z^2", 4}, {"x*y*z^2", 5}, {"t*z^2", 6},
                                             {"y^2*z^2", 6}, {"x*z^3", 8},   {"y*z^3", 9},   {"z^4", 12}};
    for (const auto& c : s.classes()) {
        const auto name = format_monomial(g, c.fibre);
        const auto it = umin.find(name);
        CHECK_MESSAGE(c.u_min == (it == umin.end() ? 0 : it->second), name);
    }
    // u^5 x y z^2 and u^6 x y z^2 style expansion: free degree 1 gives two monomials.
    const auto* c = s.find(parse_monomial(g, "x*y*z^2"));
    REQUIRE(c);
    CHECK(formatted_set(g, s.expand(*c)) == std::set<std::string>{"u^6*x*y*z^2", "u^5*v*x*y*z^2"});
    CHECK(sorted(s.expanded_monomials()) == oracle::expand(s));
    CHECK_THROWS_AS(build_system(g, {-4, 4}, {{parse_monomial(g, "t^2"), 1}}), PreconditionError);
    CHECK_THROWS_AS(build_system(g, {-4, 4}, {{parse_monomial(g, "x^4"), 0}}), PreconditionError);
}

TEST_CASE("the g table on A'") {
    const auto s = paper_xprime().system();
    const auto& g = s.ambient();
    CHECK(s.classes().size() == 19);
    CHECK(fibre_classes(g, {0, 4}).size() == 22);
    CHECK(formatted_set(g, missing_monomials(s)) == std::set<std::string>{"x^4", "x^2*t", "x^3*y"});
    const std::map<int, std::set<std::string>> table = {
        {0, {"x^3*z", "x^2*z^2", "x*z^3", "z^4", "t^2", "x*t*z", "t*z^2", "u^2*x^2*y^2", "u*x*t*y"}},
        {1, {"x^2*z*y", "x*z^2*y", "z^3*y", "t*z*y"}},
        {2, {"x*z*y^2", "z^2*y^2", "t*y^2", "u*x*y^3"}},
        {3, {"z*y^3"}},
        {4, {"y^4"}},
    };
    CHECK(by_free(s) == table);
}

TEST_CASE("serial and parallel enumeration agree") {
    const auto g = paper_x().grading();
    for (cones::Int a = -20; a <= 4; a += 3)
        for (cones::Int b = 0; b <= 9; b += 2) CHECK(enumerate_monomials(g, {a, b}) == enumerate_monomials_serial(g, {a, b}));
}

TEST_CASE("enumeration against the box oracle on random pointed gradings") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> n_dist(3, 6), entry(-3, 3), deg(-12, 12);
    int cases = 0, nonempty = 0;
    while (cases < 250) {
        const int n = n_dist(rng);
        std::vector<std::string> vars;
        std::vector<cones::Vec2> cols;
        for (int i = 0; i < n; ++i) {
            vars.push_back("v" + std::to_string(i));
            cols.push_back({entry(rng), entry(rng)});
        }
        std::optional<GradingMatrix> g;
        try {
            g.emplace(vars, cols);
        } catch (const PreconditionError&) {
            continue;
        }
        const cones::Vec2 d{deg(rng), deg(rng)};
        const auto lib = enumerate_monomials(*g, d);
        CHECK(lib == enumerate_monomials_serial(*g, d));
        CHECK(sorted(lib) == oracle::monomials_box(cols, d));
        CHECK(std::is_sorted(lib.begin(), lib.end(), grlex_less));
        ++cases;
        if (!lib.empty()) ++nonempty;
    }
    CHECK(nonempty > 50);
}

TEST_CASE("base loci") {
    const auto m = paper_x().model();
    const auto& g = m.grading;
    const auto lp = paper_x().system();
    using S = std::set<std::set<std::string>>;
    CHECK(testing_util::strata_names(g, base_locus(m, lp)) == S{{"u", "x", "y", "t"}, {"y", "t", "z"}});
    const auto l = build_system(g, {-4, 4}, {});
    CHECK(testing_util::strata_names(g, base_locus(m, l)) == S{{"y", "t", "z"}});
    const auto mp = paper_xprime().model();
    CHECK(testing_util::strata_names(mp.grading, base_locus(mp, paper_xprime().system())) == S{{"y", "t", "z"}});
    CHECK(base_locus(m, lp) == base_locus_serial(m, lp));
    CHECK_THROWS_AS(base_locus(m, LinearSystem(g, {-4, 4}, {})), PreconditionError);
}

TEST_CASE("base loci against the monomial-vanishing oracle") {
    for (const auto* sc : {&paper_x(), &paper_xprime()}) {
        const auto m = sc->model();
        const auto s = sc->system();
        std::vector<std::uint64_t> lib;
        for (const auto& st : base_locus(m, s)) lib.push_back(st.mask());
        std::sort(lib.begin(), lib.end());
        auto want = oracle::base_locus(s, m.chamber.interior_point());
        std::sort(want.begin(), want.end());
        CHECK(lib == want);
    }
}

TEST_CASE("vanishing truth table") {
    const auto s = paper_x().system();
    const auto& g = s.ambient();
    auto mask = [&](std::initializer_list<const char*> names) {
        std::vector<std::string> v(names.begin(), names.end());
        return stratum_from_names(g, v).mask();
    };
    const auto* z4 = s.find(parse_monomial(g, "z^4"));
    const auto* t2 = s.find(parse_monomial(g, "t^2"));
    const auto* y4 = s.find(parse_monomial(g, "y^4"));
    CHECK(class_vanishes(s, *z4, mask({"u"})));
    CHECK_FALSE(class_vanishes(s, *z4, mask({"v"})));
    CHECK_FALSE(class_vanishes(s, *t2, mask({"u", "v"})));
    CHECK(class_vanishes(s, *y4, mask({"u", "v"})));
    CHECK_FALSE(class_vanishes(s, *y4, mask({"u"})));
    CHECK(class_vanishes(s, *t2, mask({"t"})));
}

TEST_CASE("smoothness certificates") {
    const auto m = paper_x().model();
    const auto& g = m.grading;
    const auto s = paper_x().system();
    const auto line = stratum_from_names(g, {"t", "y", "z"});
    const auto p = stratum_from_names(g, {"u", "x", "t", "y"});
    const auto w = smoothness_certificate(m, s, line);
    REQUIRE(w);
    CHECK(format_monomial(g, s.classes()[w->class_index].fibre) == "x^3*z");
    CHECK(g.var(w->variable) == "z");
    CHECK_FALSE(smoothness_certificate(m, s, p).has_value());
    CHECK_THROWS_AS(smoothness_certificate(m, s, stratum_from_names(g, {"x"})), PreconditionError);
}

TEST_CASE("local chart at p") {
    const auto g = paper_x().grading();
    const auto p = stratum_from_names(g, {"u", "x", "t", "y"});
    const auto chart = local_chart(g, "v", "z", p);
    std::map<std::string, std::pair<cones::Int, cones::Int>> table;
    for (const auto& c : chart.coords) {
        table[g.var(c.var)] = {c.alpha, c.beta};
        // exponent equations: col(w) = alpha col(a) + beta col(b)
        CHECK(g.col(chart.a).scaled(c.alpha) + g.col(chart.b).scaled(c.beta) == g.col(c.var));
    }
    const std::map<std::string, std::pair<cones::Int, cones::Int>> want = {
        {"u", {1, 0}}, {"x", {4, 1}}, {"t", {6, 2}}, {"y", {2, 1}}};
    CHECK(table == want);
    const auto rep = local_support(paper_x().system(), chart);
    REQUIRE(rep.min_degree);
    CHECK(*rep.min_degree == 2);
    REQUIRE(rep.by_degree.count(2));
    CHECK(rep.by_degree.at(2).size() == 1);
    CHECK(format_monomial(rep.coordinates, rep.by_degree.at(2).front()) == "t^2");
    std::set<std::string> cubic;
    for (const auto& e : rep.by_degree.at(3)) cubic.insert(format_monomial(rep.coordinates, e));
    CHECK(cubic.count("x^3"));
    CHECK(cubic.count("x*t*y"));
    CHECK(rep.pure_powers.at("t") == 2);
    CHECK(rep.pure_powers.at("x") == 3);
    CHECK(rep.pure_powers.at("y") == 4);
    CHECK(rep.note.has_value());

    try {
        local_chart(g, "u", "v", stratum_from_names(g, {"x", "t", "y", "z"}));
        FAIL("parallel chart accepted");
    } catch (const NonUnimodularChart& e) {
        CHECK(e.det() == 0);
    }
    try {
        local_chart(g, "t", "u", stratum_from_names(g, {"v", "x", "y", "z"}));
        FAIL("non-unimodular chart accepted");
    } catch (const NonUnimodularChart& e) {
        CHECK(std::abs(e.det()) == 2);
    }
}

TEST_CASE("fibrewise transform and its inverse") {
    const auto s = paper_x().system();
    const auto target = paper_xprime().grading();
    int cancelled = 0;
    const auto t = fibrewise_transform(s, {{"x", 4}, {"t", 6}, {"y", 3}}, target, std::nullopt, &cancelled);
    CHECK(cancelled == 12);
    CHECK(t == paper_xprime().system());
    const auto back = fibrewise_transform(t, {{"x", -4}, {"t", -6}, {"y", -3}}, s.ambient(), -12, &cancelled);
    CHECK(cancelled == -12);
    CHECK(back == s);
    CHECK_THROWS_AS(fibrewise_transform(s, {{"x", 4}, {"t", 6}, {"y", 3}}, target, 13), PreconditionError);
    CHECK_THROWS_AS(fibrewise_transform(s, {{"u", 1}}, target), PreconditionError);
}
