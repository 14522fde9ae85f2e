#pragma once

// Monomial bases, constrained linear systems, base loci, local charts and
// fibrewise transforms over a rank-two graded Cox ring.

#include "tworay/graded_toric.hpp"
#include "tworay/error.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tworay::monomials {

using cones::Int;
using cones::Vec2;
using toric::Bidegree;
using toric::GradingMatrix;
using toric::ToricModel;

// One nonnegative exponent per variable of the ambient grading.
using ExponentVector = std::vector<int>;

Bidegree degree_of(const GradingMatrix& g, const ExponentVector& e);
int total_degree(const ExponentVector& e);

// Total degree first, then lexicographic with earlier variables dominant
// (x^2 before x*y before y^2).
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

// "x^3*z", or "1" for the empty monomial.
std::string format_monomial(const std::vector<std::string>& vars, const ExponentVector& e);
std::string format_monomial(const GradingMatrix& g, const ExponentVector& e);
// Inverse of format_monomial; throws ParseError (line 0) on bad input.
ExponentVector parse_monomial(const GradingMatrix& g, std::string_view text);

// All e >= 0 with A e = d, sorted by grlex_less. OpenMP-parallel over the
// exponent of the first variable.
std::vector<ExponentVector> enumerate_monomials(const GradingMatrix& g, const Bidegree& d);
// Single-threaded reference with identical output.
std::vector<ExponentVector> enumerate_monomials_serial(const GradingMatrix& g, const Bidegree& d);

// The variables on the fibration ray ("base" variables, e.g. u, v) and the
// designated first one whose powers the coefficient constraints count.
struct BaseSplit {
    std::vector<std::size_t> base;
    std::size_t designated = 0;
    cones::RayZ2 ray = cones::RayZ2::from_primitive({1, 0});

    bool is_base(std::size_t i) const;
};

// Throws PreconditionError when there is no fibration ray or the base
// columns differ.
BaseSplit base_split(const GradingMatrix& g);

// Fibre monomial times u^u_min times a general form of degree
// coeff_deg - u_min in the base variables.
struct MonomialClass {
    ExponentVector fibre; // zero on base variables
    int coeff_deg = 0;
    int u_min = 0;

    int free_deg() const { return coeff_deg - u_min; }
    friend bool operator==(const MonomialClass&, const MonomialClass&) = default;
};

class LinearSystem {
public:
    // Validates degrees, distinct fibres and 0 <= u_min <= coeff_deg.
    LinearSystem(GradingMatrix ambient, Bidegree degree, std::vector<MonomialClass> classes);

    const GradingMatrix& ambient() const { return ambient_; }
    const Bidegree& degree() const { return degree_; }
    const std::vector<MonomialClass>& classes() const { return classes_; }
    const BaseSplit& base() const { return base_; }
    bool empty() const { return classes_.empty(); }
    const MonomialClass* find(const ExponentVector& fibre) const;

    // Every monomial of every class with the coefficient expanded.
    std::vector<ExponentVector> expanded_monomials() const;
    std::vector<ExponentVector> expand(const MonomialClass& c) const;

    friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
        return a.ambient_ == b.ambient_ && a.degree_ == b.degree_ && a.classes_ == b.classes_;
    }

private:
    GradingMatrix ambient_;
    Bidegree degree_;
    std::vector<MonomialClass> classes_;
    BaseSplit base_;
};

// Distinct fibre parts of the degree-d basis with their coefficient degree.
std::vector<MonomialClass> fibre_classes(const GradingMatrix& g, const Bidegree& d);

struct Constraint {
    ExponentVector fibre;
    int u_min = 0;
};

// One class per fibre monomial of |O(d)| minus the excluded ones; the
// constrained classes carry their u_min, all others 0.
LinearSystem build_system(const GradingMatrix& g, const Bidegree& d, const std::vector<Constraint>& constraints,
                          const std::vector<ExponentVector>& excluded = {});

// Fibre monomials of |O(d)| that the system does not contain.
std::vector<ExponentVector> missing_monomials(const LinearSystem& s);

// Coordinate subspace V(S), variable indices ascending.
struct Stratum {
    std::vector<std::size_t> zeros;

    std::uint64_t mask() const;
    static Stratum from_mask(std::uint64_t mask, std::size_t n);
    std::vector<std::string> names(const GradingMatrix& g) const;
    bool contains(std::size_t i) const;
    friend bool operator==(const Stratum&, const Stratum&) = default;
    friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

Stratum stratum_from_names(const GradingMatrix& g, const std::vector<std::string>& names);

// Admissible: contains neither irrelevant factor entirely.
bool admissible(const ToricModel& m, std::uint64_t mask);

// Truth table for a class on V(S): a fibre variable in S, or the
// designated variable in S with u_min >= 1, or every base variable in S
// with coeff_deg >= 1.
bool class_vanishes(const LinearSystem& s, const MonomialClass& c, std::uint64_t mask);
bool coefficient_vanishes(const LinearSystem& s, const MonomialClass& c, std::uint64_t mask);

// Inclusion-minimal admissible strata on which every class vanishes.
// Exhaustive over 2^n subsets, OpenMP-parallel.
std::vector<Stratum> base_locus(const ToricModel& m, const LinearSystem& s);
std::vector<Stratum> base_locus_serial(const ToricModel& m, const LinearSystem& s);

struct SmoothnessWitness {
    std::size_t class_index = 0; // into s.classes()
    std::size_t variable = 0;    // the stratum variable the fibre is linear in
};

// A class linear in exactly one stratum variable, free of the others, with
// a coefficient alive on the stratum. nullopt marks a singularity candidate.
std::optional<SmoothnessWitness> smoothness_certificate(const ToricModel& m, const LinearSystem& s,
                                                        const Stratum& st);

// A member of the system with seeded coefficients in [1, 10^6].
using Polynomial = std::map<ExponentVector, std::int64_t>;
Polynomial instantiate(const LinearSystem& s, std::uint64_t seed);

// d poly / d var restricted to V(stratum) is not identically zero.
bool derivative_survives(const Polynomial& poly, std::size_t var, const Stratum& st);

// Invariant coordinate w * a^-alpha * b^-beta near a point where only the
// chart variables a, b are nonzero.
struct ChartCoordinate {
    std::size_t var = 0;
    Int alpha = 0;
    Int beta = 0;
    friend bool operator==(const ChartCoordinate&, const ChartCoordinate&) = default;
};

struct LocalChart {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<ChartCoordinate> coords; // grading order, chart pair omitted
    std::string describe(const GradingMatrix& g) const;
};

// Chart refused: the pair has |det| != 1, so the point has a quotient
// singularity of order |det| (0 for parallel columns).
class NonUnimodularChart : public PreconditionError {
public:
    NonUnimodularChart(Int det, const std::string& msg) : PreconditionError(msg), det_(det) {}
    Int det() const noexcept { return det_; }

private:
    Int det_;
};

LocalChart local_chart(const GradingMatrix& g, const std::string& a, const std::string& b, const Stratum& point);

struct SupportReport {
    std::vector<std::string> coordinates;
    std::optional<int> min_degree;
    // total degree -> localized monomials (exponents over coordinates), up to the bound
    std::map<int, std::vector<ExponentVector>> by_degree;
    // coordinate -> smallest pure power present
    std::map<std::string, int> pure_powers;
    std::optional<std::string> note;
    int degree_bound = 6;
};

SupportReport local_support(const LinearSystem& s, const LocalChart& chart, int degree_bound = 6);

// variable -> power of the designated base variable multiplying it.
using Substitution = std::map<std::string, int>;

// Rewrites each class under the substitution, cancels the largest common
// power of the designated variable (or exactly `cancel` when given;
// negative amounts restore content) and re-grades over `target`.
LinearSystem fibrewise_transform(const LinearSystem& s, const Substitution& subst, const GradingMatrix& target,
                                 std::optional<int> cancel = std::nullopt, int* cancelled = nullptr);

} // namespace tworay::monomials
