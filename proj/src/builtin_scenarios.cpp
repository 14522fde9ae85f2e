#include "tworay/scenario.hpp"

#include "tworay/error.hpp"

namespace tworay::cli {

namespace {

// Degree-2 del Pezzo fibration X in a rank-two toric 4-fold T, cut out by a
// general member of the sublinear system with u-power constraints.
constexpr std::string_view kScenarioX = R"(# X in T: general member of the constrained sublinear system of |O_T(-4,4)|.
[variety]
name = paper-X
vars = u v x t y z
row1 = 1 1 0 -2 -2 -4
row2 = 0 0 1 2 1 1
chamber = (1,0) (0,1)
# Weighted projective ambient stated for the divisorial end of the game.
ambient_claim = (-2,1) 1 1 2 4 6

[hypersurface]
degree = (-4,4)
monomial = x^2*y*z u_min=1
monomial = x*t*z u_min=2
monomial = x*y^2*z u_min=2
monomial = t*y*z u_min=3
monomial = y^3*z u_min=3
monomial = x^2*z^2 u_min=4
monomial = x*y*z^2 u_min=5
monomial = t*z^2 u_min=6
monomial = y^2*z^2 u_min=6
monomial = x*z^3 u_min=8
monomial = y*z^3 u_min=9
monomial = z^4 u_min=12

[transform]
# (u,v,x,t,y,z) -> (u,v,u^4 x,u^6 t,u^3 y,z), then divide by u^12.
shift = x:4 t:6 y:3
cancel = 12
target_name = paper-Xprime
target_vars = u v x t z y
target_row1 = 1 1 0 0 0 -1
target_row2 = 0 0 1 2 1 1
target_chamber = (1,0) (0,1)
)";

// The fibrewise transform X' of X; smooth, with a divisorial contraction to
// a quartic in P(1,1,1,1,2).
constexpr std::string_view kScenarioXprime = R"(# X' in F: the fibrewise transform of X.
[variety]
name = paper-Xprime
vars = u v x t z y
row1 = 1 1 0 0 0 -1
row2 = 0 0 1 2 1 1
chamber = (1,0) (0,1)

[hypersurface]
degree = (0,4)
monomial = x*t*y u_min=1
monomial = x^2*y^2 u_min=2
monomial = x*y^3 u_min=1
monomial = x^4 absent
monomial = x^2*t absent
monomial = x^3*y absent

[transform]
shift = x:-4 t:-6 y:-3
cancel = -12
target_name = paper-X
target_vars = u v x t y z
target_row1 = 1 1 0 -2 -2 -4
target_row2 = 0 0 1 2 1 1
target_chamber = (1,0) (0,1)
)";

} // namespace

std::vector<std::string> builtin_names() { return {"paper-X", "paper-Xprime"}; }

std::string_view builtin_text(std::string_view name) {
    if (name == "paper-X") return kScenarioX;
    if (name == "paper-Xprime") return kScenarioXprime;
    throw PreconditionError("unknown built-in scenario '" + std::string(name) + "'");
}

ScenarioFile builtin(std::string_view name) { return parse_scenario(builtin_text(name)); }

} // namespace tworay::cli
