#include "tworay/cones2d.hpp"

#include "tworay/error.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tworay::cones {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

std::string Vec2::str() const {
    std::ostringstream os;
    os << '(' << x << ',' << y << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.str(); }

Int cross(const Vec2& a, const Vec2& b) { return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x)); }

Int dot(const Vec2& a, const Vec2& b) { return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)); }

RayZ2 RayZ2::from_primitive(Vec2 v) {
    if (v.is_zero()) throw PreconditionError("ray must be nonzero");
    if (std::gcd(v.x, v.y) != 1) throw PreconditionError("ray " + v.str() + " is not primitive");
    return RayZ2(v);
}

RayZ2 primitivize(Vec2 v) {
    if (v.is_zero()) throw PreconditionError("cannot primitivize the zero vector");
    const Int g = std::gcd(v.x, v.y);
    return RayZ2::from_primitive({v.x / g, v.y / g});
}

bool same_direction(const Vec2& v, const Vec2& r) { return cross(v, r) == 0 && dot(v, r) > 0; }

RayOrder compare_rays(const RayZ2& a, const RayZ2& b) {
    if (a == b) return RayOrder::equal;
    const Int c = cross(a, b);
    if (c == 0) throw PreconditionError("rays " + a.str() + " and " + b.str() + " span 180 degrees");
    return c > 0 ? RayOrder::before : RayOrder::after;
}

Cone2::Cone2(RayZ2 lo, RayZ2 hi) : lo_(lo), hi_(hi) {
    if (cross(lo_, hi_) <= 0)
        throw PreconditionError("cone " + lo_.str() + ".." + hi_.str() + " is not strictly convex and counterclockwise");
}

std::string Cone2::str() const { return "<" + lo_.str() + "," + hi_.str() + ">"; }

const char* to_string(Position p) {
    switch (p) {
    case Position::interior: return "interior";
    case Position::boundary: return "boundary";
    case Position::exterior: return "exterior";
    }
    return "?";
}

Position cone_position(const Cone2& c, const Vec2& d) {
    if (d.is_zero()) throw PreconditionError("cone_position of the zero vector");
    const Int from_lo = cross(c.lo(), d);
    const Int to_hi = cross(d, c.hi());
    if (from_lo > 0 && to_hi > 0) return Position::interior;
    if ((from_lo == 0 && dot(c.lo(), d) > 0) || (to_hi == 0 && dot(c.hi(), d) > 0)) return Position::boundary;
    return Position::exterior;
}

UnimodularMap UnimodularMap::from_rows(Int a, Int b, Int c, Int d) {
    UnimodularMap m({a, b, c, d});
    if (m.det() != 1) throw PreconditionError("matrix " + m.str() + " does not have determinant +1");
    return m;
}

Int UnimodularMap::det() const { return checked_sub(checked_mul(m_[0], m_[3]), checked_mul(m_[1], m_[2])); }

Vec2 UnimodularMap::apply(const Vec2& v) const {
    return {checked_add(checked_mul(m_[0], v.x), checked_mul(m_[1], v.y)),
            checked_add(checked_mul(m_[2], v.x), checked_mul(m_[3], v.y))};
}

UnimodularMap UnimodularMap::inverse() const { return UnimodularMap({m_[3], -m_[1], -m_[2], m_[0]}); }

UnimodularMap UnimodularMap::compose(const UnimodularMap& r) const {
    auto e = [&](int i, int j) {
        return checked_add(checked_mul(at(i, 0), r.at(0, j)), checked_mul(at(i, 1), r.at(1, j)));
    };
    return UnimodularMap({e(0, 0), e(0, 1), e(1, 0), e(1, 1)});
}

std::string UnimodularMap::str() const {
    std::ostringstream os;
    os << "[[" << m_[0] << ',' << m_[1] << "],[" << m_[2] << ',' << m_[3] << "]]";
    return os.str();
}

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::array<Int, 3> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool better_row(Int c, Int d, Int bc, Int bd) {
    if (std::llabs(c) != std::llabs(bc)) return std::llabs(c) < std::llabs(bc);
    if (std::llabs(d) != std::llabs(bd)) return std::llabs(d) < std::llabs(bd);
    return c > bc;
}

} // namespace

UnimodularMap normalize_wall(const RayZ2& w, const Vec2& orient) {
    if (orient.is_zero()) throw PreconditionError("orientation vector must be nonzero");
    const Int side = cross(orient, w);
    if (side == 0) throw PreconditionError("orientation " + orient.str() + " is parallel to wall " + w.str());
    if (side < 0)
        throw PreconditionError("orientation " + orient.str() + " lies counterclockwise of wall " + w.str() +
                                "; no determinant +1 normalization exists");

    // Second row (c, d) solves c*w.x + d*w.y = 1; solutions differ by
    // multiples of the first row (w.y, -w.x).
    const auto [g, s, t] = ext_gcd(w.x(), w.y());
    (void)g;
    Int c = s, d = t;
    if (w.y() != 0) {
        const Int m = std::llabs(w.y());
        // Reduce c into the symmetric residue range, then try the neighbour.
        Int k = (c >= 0 ? c / m : -((-c + m - 1) / m));
        c -= k * m;
        d = (1 - c * w.x()) / w.y();
        Int bc = c, bd = d;
        for (Int shift : {-m, m}) {
            const Int c2 = c + shift;
            const Int d2 = (1 - c2 * w.x()) / w.y();
            if (better_row(c2, d2, bc, bd)) { bc = c2; bd = d2; }
        }
        c = bc;
        d = bd;
    } else {
        // w = (+-1, 0): c is forced, d is free; take d = 0.
        c = w.x();
        d = 0;
    }
    return UnimodularMap::from_rows(w.y(), -w.x(), c, d);
}

UnimodularMap normalize_wall(const RayZ2& w, const RayZ2& orient) { return normalize_wall(w, orient.vec()); }

} // namespace tworay::cones
