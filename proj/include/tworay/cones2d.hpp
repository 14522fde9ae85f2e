#pragma once

// Exact arithmetic for rays and cones in the rank-two class lattice.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tworay::cones {

using Int = std::int64_t;

// Overflow-checked integer ops; throw std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// An arbitrary lattice point of Z^2. Also used for bidegrees.
struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;

    bool is_zero() const { return x == 0 && y == 0; }
    Vec2 operator+(const Vec2& o) const { return {checked_add(x, o.x), checked_add(y, o.y)}; }
    Vec2 operator-(const Vec2& o) const { return {checked_sub(x, o.x), checked_sub(y, o.y)}; }
    Vec2 operator-() const { return {checked_sub(0, x), checked_sub(0, y)}; }
    Vec2 scaled(Int k) const { return {checked_mul(x, k), checked_mul(y, k)}; }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

// a.x*b.y - a.y*b.x
Int cross(const Vec2& a, const Vec2& b);
Int dot(const Vec2& a, const Vec2& b);

// Primitive nonzero lattice vector.
class RayZ2 {
public:
    // Throws PreconditionError unless v is nonzero and primitive.
    static RayZ2 from_primitive(Vec2 v);

    Int x() const { return v_.x; }
    Int y() const { return v_.y; }
    const Vec2& vec() const { return v_; }
    operator const Vec2&() const { return v_; }

    friend bool operator==(const RayZ2&, const RayZ2&) = default;
    std::string str() const { return v_.str(); }

private:
    explicit RayZ2(Vec2 v) : v_(v) {}
    Vec2 v_;
};

// v / gcd(|v.x|, |v.y|). Throws PreconditionError on the zero vector.
RayZ2 primitivize(Vec2 v);

// True when v is a positive multiple of r.
bool same_direction(const Vec2& v, const Vec2& r);

enum class RayOrder { before, equal, after };

// Counterclockwise order; meaningful inside any cone of angle < 180 degrees.
// Throws PreconditionError when a and b are opposite.
RayOrder compare_rays(const RayZ2& a, const RayZ2& b);

// Strictly convex cone, lo and hi counterclockwise with cross(lo, hi) > 0.
class Cone2 {
public:
    Cone2(RayZ2 lo, RayZ2 hi);

    const RayZ2& lo() const { return lo_; }
    const RayZ2& hi() const { return hi_; }
    friend bool operator==(const Cone2&, const Cone2&) = default;

    // Any lattice point strictly inside.
    Vec2 interior_point() const { return lo_.vec() + hi_.vec(); }
    std::string str() const;

private:
    RayZ2 lo_;
    RayZ2 hi_;
};

enum class Position { interior, boundary, exterior };
const char* to_string(Position p);

Position cone_position(const Cone2& c, const Vec2& d);

// 2x2 integer matrix with determinant +1, row-major.
class UnimodularMap {
public:
    static UnimodularMap identity() { return UnimodularMap({1, 0, 0, 1}); }
    // Throws PreconditionError if det != 1.
    static UnimodularMap from_rows(Int a, Int b, Int c, Int d);

    Int at(int row, int col) const { return m_[static_cast<std::size_t>(row * 2 + col)]; }
    Vec2 apply(const Vec2& v) const;
    Vec2 row(int r) const { return {at(r, 0), at(r, 1)}; }
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& rhs) const; // this * rhs
    Int det() const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
    std::string str() const;

private:
    explicit UnimodularMap(std::array<Int, 4> m) : m_(m) {}
    std::array<Int, 4> m_;
};

// The det +1 map sending the wall w to (0,1) and orient to the right half
// plane. The first row is forced to (w.y, -w.x); among the remaining
// second rows (c, d) the one minimizing |c|, then |d|, then with c > 0 is
// chosen, which keeps the map upper-triangular whenever w.y = 1.
// Requires cross(orient, w) > 0.
UnimodularMap normalize_wall(const RayZ2& w, const RayZ2& orient);
UnimodularMap normalize_wall(const RayZ2& w, const Vec2& orient);

} // namespace tworay::cones
