#pragma once

// Minimal generators of ray section rings and rewriting in them.

#include "tworay/graded_toric.hpp"
#include "tworay/monomials.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tworay::sections {

using cones::Int;
using cones::RayZ2;
using monomials::ExponentVector;
using monomials::LinearSystem;
using toric::GradingMatrix;

struct Generator {
    ExponentVector exps;
    int weight = 0;
};

struct SectionRingPresentation {
    RayZ2 ray = RayZ2::from_primitive({1, 0});
    std::vector<Generator> generators; // by weight, then grlex
    int degree_bound = 0;
    // A priori weight bound past which no new generator can occur.
    int hilbert_bound = 0;
    bool complete_up_to_bound = false;
};

// Degree of a monomial along the ray: m with A e = m * ray, or nullopt.
std::optional<Int> ray_weight(const GradingMatrix& g, const RayZ2& ray, const ExponentVector& e);

// Upper bound on the weight of any minimal generator of the semigroup
// {e >= 0 : A e in N * ray}.
int generator_weight_bound(const GradingMatrix& g, const RayZ2& ray);

SectionRingPresentation section_generators(const GradingMatrix& g, const RayZ2& ray, int bound = 12);

std::vector<int> ambient_weights(const SectionRingPresentation& p);

struct RewrittenTerm {
    ExponentVector monomial;
    std::vector<std::size_t> factors; // generator indices
    int weight = 0;
};

struct Rewrite {
    bool ok = false;
    std::vector<RewrittenTerm> terms;
    std::optional<int> image_degree; // common generator weight of every term
    std::string failure;             // first non-factorable monomial
};

// Greedy factorization, heaviest generators first, ties in grlex order.
Rewrite rewrite_in_generators(const LinearSystem& s, const SectionRingPresentation& p);

// Sum of weights minus the hypersurface degree; positive means Fano of that index.
Int wps_index(const std::vector<int>& weights, Int hyp_degree);

std::string format_weights(const std::vector<int>& weights); // "P(1^9,2^3)"

} // namespace tworay::sections
