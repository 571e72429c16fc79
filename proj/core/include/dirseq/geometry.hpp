#pragma once

#include <optional>
#include <vector>

#include "dirseq/field.hpp"
#include "dirseq/sequence.hpp"

namespace dirseq {

struct Point {
    FieldScalar x, y;

    Point operator-() const { return {-x, -y}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Planar point set with coordinates in one quadratic field.
struct Configuration {
    int disc = 1;
    std::vector<Point> points;

    Configuration() = default;
    Configuration(int disc, std::vector<Point> pts);

    int size() const { return static_cast<int>(points.size()); }
    bool negation_closed() const;  // closed under p -> -p, no fixed point
};

// Canonical representative of a line direction: dy > 0, or dy == 0 and
// dx > 0, scale fixed by the first nonzero coordinate's rational part (or
// surd part when the rational part vanishes).  Equality and order are
// decided by exact cross-product signs, never by representation.
struct Direction {
    FieldScalar dx, dy;

    static Direction through(const Point& p, const Point& q);
};

// Negative / zero / positive as the angle of u in [0, pi) is smaller than /
// equal to / greater than the angle of v.
int cmp_angle(const Direction& u, const Direction& v);

struct AngleLess {
    bool operator()(const Direction& u, const Direction& v) const {
        return cmp_angle(u, v) < 0;
    }
};

// Number of distinct connecting-line directions.  AllCollinear when every
// pair determines the same direction (this includes 2-point sets).
int direction_count(const Configuration& cfg);

// Circular sequence of the configuration by rotational sweep: directions
// sorted by angle; the initial permutation orders points by projection onto
// the normal of the first direction with ties broken by projection onto the
// direction itself; each move reverses every maximal group of points
// collinear along the current direction.  h equals direction_count.
// Negation-closed configurations come out canonically labeled (1..n,-n..-1).
HalfPeriod circular_sequence(const Configuration& cfg);

// Witness families.
struct FamilySpec {
    enum class Kind { Polygon, ExpCross, Bipencil, Tricolumnar, Z5_12, Z5_13 };

    Kind kind{};
    int sides = 0;        // Polygon: 2m
    Rational lambda = 2;  // ExpCross: ratio > 1
    int s = 0, t = 0;     // ExpCross: axis exponent ranges
    int d1 = 0;           // Bipencil / Tricolumnar column half-size

    static FamilySpec polygon(int sides);
    static FamilySpec exp_cross(Rational lambda, int s, int t);
    static FamilySpec bipencil(int d1);
    static FamilySpec tricolumnar(int d1);
    static FamilySpec z5_12();
    static FamilySpec z5_13();

    std::string name() const;
};

// Exact coordinates of a witness family:
//   ExpCross(lambda,s,t): (+-lambda^i, 0), (0, +-lambda^j), no center
//   Bipencil(d1):         (0, +-k) for k in [d1], (+-1, 0)
//   Tricolumnar(d1):      Bipencil(d1) plus +-(1, 1)
//   Z5_12:                +-(0,1), +-(0,tau), +-(1,0), +-(tau,0),
//                         +-(1,1), +-(tau,tau) with tau the golden ratio
//   Z5_13:                Z5_12 plus the center (0,0)
// Polygon has quadratic-field coordinates only for 4 or 8 sides; other
// polygons are handled by the rational-angle sweep (polygon_sequence).
Configuration gen_family(const FamilySpec& spec);

// Circular sequence of a regular 2m-gon via exact rational-angle arithmetic
// (vertex k at angle k*pi/m, events at multiples of pi/(2m)).
HalfPeriod polygon_sequence(int m);

// Image under an invertible affine map with rational entries.
Configuration affine_image(const Configuration& cfg, const Rational& a, const Rational& b,
                           const Rational& c, const Rational& d, const Rational& e,
                           const Rational& f);

}  // namespace dirseq
