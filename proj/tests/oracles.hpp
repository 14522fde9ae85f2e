#pragma once

// Reference computations used only by the tests. They deliberately avoid
// the library's algorithms: box search instead of pruned DFS, GIT
// stability from cone membership instead of irrelevant-ideal bookkeeping,
// and monomial-by-monomial vanishing instead of the class truth table.

#include "tworay/cones2d.hpp"
#include "tworay/monomials.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using tworay::cones::Int;
using tworay::cones::Vec2;
using Exps = std::vector<int>;

// All e >= 0 with sum e_i col_i = d, sorted lexicographically. The last two
// variables with independent columns are solved for by Cramer's rule.
std::vector<Exps> monomials_box(const std::vector<Vec2>& cols, const Vec2& d);

// p in the closed cone spanned by the given vectors.
bool in_cone(const std::vector<Vec2>& gens, const Vec2& p);

// V(S) meets the semistable locus of the chamber: the columns of the
// variables outside S span a cone containing an interior chamber point.
bool stable(const std::vector<Vec2>& cols, std::uint64_t zero_mask, const Vec2& chamber_point);

// Every monomial of every class written out, with the coefficient
// enumerated over all base-variable compositions.
std::vector<Exps> expand(const tworay::monomials::LinearSystem& s);

// Minimal S (by full subset search) that are stable and on which every
// expanded monomial has a variable in S.
std::vector<std::uint64_t> base_locus(const tworay::monomials::LinearSystem& s, const Vec2& chamber_point);

// d/d x_var of the expanded system has a term free of S: some expanded
// monomial has exponent exactly 1 at var and no other S variable.
bool derivative_alive(const std::vector<Exps>& expanded, std::size_t var, std::uint64_t mask);

// Every e >= 0 of ray degree m (1 <= m <= bound) is a product of the
// given generators.
bool generates(const std::vector<Vec2>& cols, const Vec2& ray, int bound, const std::vector<Exps>& gens);

// Random det +1 matrix as a product of elementary shears and a rotation.
struct Mat {
    Int a, b, c, d;
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};
Mat random_unimodular(std::mt19937_64& rng, int steps = 4);

} // namespace oracle
