#pragma once

// Rank-two graded Cox rings: chamber fans, models, cones and canonical classes.

#include "tworay/cones2d.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tworay::toric {

using cones::Cone2;
using cones::Int;
using cones::RayZ2;
using cones::Vec2;
using Bidegree = Vec2;

// 2 x n grading of a Cox ring, one column per named variable.
class GradingMatrix {
public:
    // Validates distinct names, n >= 3, nonzero columns, pointed cone.
    GradingMatrix(std::vector<std::string> vars, std::vector<Vec2> cols);

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Vec2>& cols() const { return cols_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const Vec2& col(std::size_t i) const { return cols_[i]; }
    RayZ2 ray(std::size_t i) const { return cones::primitivize(cols_[i]); }
    // Throws PreconditionError for an unknown name.
    std::size_t index_of(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;

    // A linear functional strictly positive on every column.
    const Vec2& positive_functional() const { return positive_; }

    GradingMatrix transformed(const cones::UnimodularMap& m) const;
    friend bool operator==(const GradingMatrix& a, const GradingMatrix& b) {
        return a.vars_ == b.vars_ && a.cols_ == b.cols_;
    }

private:
    std::vector<std::string> vars_;
    std::vector<Vec2> cols_;
    Vec2 positive_;
};

struct ChamberFan {
    std::vector<RayZ2> rays;                         // counterclockwise, distinct
    std::vector<Cone2> chambers;                     // chambers[i] = <rays[i], rays[i+1]>
    std::vector<std::vector<std::string>> carriers;  // variables on rays[i], grading order

    std::optional<std::size_t> ray_index(const RayZ2& r) const;
    const std::vector<std::string>& carriers_of(const RayZ2& r) const;
};

// Irrelevant ideal (F) ∩ (G).
struct IrrelevantIdeal {
    std::vector<std::string> f;
    std::vector<std::string> g;
    std::string str() const;
    friend bool operator==(const IrrelevantIdeal&, const IrrelevantIdeal&) = default;
};

struct ToricModel {
    GradingMatrix grading;
    Cone2 chamber;
    IrrelevantIdeal irrelevant;
};

Cone2 effective_cone(const GradingMatrix& g);
ChamberFan chamber_fan(const GradingMatrix& g);
ToricModel model_from_chamber(const GradingMatrix& g, const Cone2& c);

// Sum of the columns.
Bidegree anticanonical_ambient(const GradingMatrix& g);
Bidegree adjunction_anticanonical(const GradingMatrix& g, const Bidegree& hyp);

// Intersection over i of the cone spanned by all columns but the i-th:
// an extreme ray carried by a single variable is replaced by its neighbour.
Cone2 mobile_cone_toric(const GradingMatrix& g);

enum class KCondition { holds_boundary, holds_exterior, fails_interior };
const char* to_string(KCondition k);

struct KConditionReport {
    KCondition verdict;
    Bidegree anticanonical;
    Cone2 mobile;
    // Mob(X) = Mob(T) is assumed; it is justified only when the
    // hypersurface class is interior to the toric mobile cone.
    bool mobile_assumption_ok;
};

// Throws PreconditionError when the anticanonical class is zero.
KConditionReport k_condition(const GradingMatrix& g, const Bidegree& hyp);

enum class Gorenstein { gorenstein, not_gorenstein, not_applicable };
const char* to_string(Gorenstein v);

// Numeric criterion for the double-cover family: six variables, two of
// degree (1,0), three of second degree 1, one of second degree 2, and a
// hypersurface of second degree 4. Gorenstein iff the hypersurface's first
// degree is twice the first degree of the weight-two variable.
Gorenstein gorenstein_check(const GradingMatrix& g, const Bidegree& hyp);

// Extreme ray of the effective cone carrying at least two variables
// (clockwise end preferred). nullopt if neither end qualifies.
std::optional<RayZ2> fibration_ray(const GradingMatrix& g);

} // namespace tworay::toric
