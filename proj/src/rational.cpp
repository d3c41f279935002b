#include "beyondplanar/rational.hpp"

#include "beyondplanar/errors.hpp"

namespace bp {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

int orientation(const Point& p, const Point& q, const Point& r) {
    Rational c = cross(q - p, r - p);
    return sgn(c);
}

Point lerp(const Point& p, const Point& q, const Rational& t) {
    return {Rational(p.x + t * (q.x - p.x)), Rational(p.y + t * (q.y - p.y))};
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point& d) {
    if (d.y > 0) return 0;
    if (d.y < 0) return 1;
    return d.x > 0 ? 0 : 1;
}

}  // namespace

bool angle_less(const Point& a, const Point& b) {
    int ha = half_plane(a);
    int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return sgn(cross(a, b)) > 0;
}

Rational dist2_point_segment(const Point& p, const Point& a, const Point& b) {
    Point ab = b - a;
    Point ap = p - a;
    Rational len2 = norm2(ab);
    if (len2 == 0) return norm2(ap);
    Rational t = dot(ap, ab) / len2;
    if (t <= 0) return norm2(ap);
    if (t >= 1) return norm2(p - b);
    Point foot = lerp(a, b, t);
    return norm2(p - foot);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << to_string(p.x) << ", " << to_string(p.y) << ")";
}

}  // namespace bp
