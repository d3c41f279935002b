#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace bp {

// Arbitrary precision rational. GMP keeps mpq values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms; constructing mpq_class from two integers does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Point operator+(const Point& a, const Point& b) { return {Rational(a.x + b.x), Rational(a.y + b.y)}; }
inline Point operator-(const Point& a, const Point& b) { return {Rational(a.x - b.x), Rational(a.y - b.y)}; }
inline Point operator*(const Rational& s, const Point& p) { return {Rational(s * p.x), Rational(s * p.y)}; }

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational norm2(const Point& a) { return dot(a, a); }

// Sign of the turn p -> q -> r: +1 left, -1 right, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// Counter-clockwise rotation by 90 degrees.
inline Point rot_ccw(const Point& d) { return {Rational(-d.y), d.x}; }
inline Point rot_cw(const Point& d) { return {d.y, Rational(-d.x)}; }

// p + t (q - p)
Point lerp(const Point& p, const Point& q, const Rational& t);

// Total order on direction vectors by angle in [0, 2pi) measured from the
// positive x axis. Zero vectors are not allowed.
bool angle_less(const Point& a, const Point& b);

// Squared euclidean distance from point p to the closed segment [a, b].
Rational dist2_point_segment(const Point& p, const Point& a, const Point& b);

// True iff p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace bp
