#include "dirseq/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dirseq {

Configuration::Configuration(int d, std::vector<Point> pts) : disc(d), points(std::move(pts)) {
    if (disc != 1 && disc != 2 && disc != 5)
        fail("InvalidParams", "discriminant must be 1, 2 or 5");
    for (const Point& p : points) {
        for (const FieldScalar* c : {&p.x, &p.y})
            if (!c->is_rational() && c->disc() != disc)
                fail("MixedDiscriminants", "coordinate outside the declared field");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                fail("InvalidParams", "points must be pairwise distinct");
}

bool Configuration::negation_closed() const {
    if (points.size() % 2 != 0) return false;
    for (const Point& p : points) {
        if (p.x.is_zero() && p.y.is_zero()) return false;
        bool found = false;
        for (const Point& q : points)
            if (q == -p) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

Direction Direction::through(const Point& p, const Point& q) {
    FieldScalar dx = q.x - p.x;
    FieldScalar dy = q.y - p.y;
    if (dx.is_zero() && dy.is_zero())
        fail("InternalInconsistency", "direction of coincident points");
    int sy = dy.sign();
    if (sy < 0 || (sy == 0 && dx.sign() < 0)) {
        dx = -dx;
        dy = -dy;
    }
    // Scale normalization for stable serialization; comparisons never use it.
    const FieldScalar& lead = dx.is_zero() ? dy : dx;
    Rational ra = lead.rational_part();
    Rational rb = lead.surd_part();
    FieldScalar scale = ra != 0 ? FieldScalar(ra < 0 ? Rational(-ra) : ra)
                                : FieldScalar(0, rb < 0 ? Rational(-rb) : rb, lead.disc());
    return {dx / scale, dy / scale};
}

int cmp_angle(const Direction& u, const Direction& v) {
    // cross(u, v) > 0 puts v counterclockwise of u within [0, pi), i.e. the
    // angle of u is the smaller one.
    return -(u.dx * v.dy - u.dy * v.dx).sign();
}

namespace {

std::map<Direction, std::vector<std::pair<int, int>>, AngleLess> direction_classes(
    const Configuration& cfg) {
    if (cfg.size() < 2) fail("AllCollinear", "need at least two points");
    std::map<Direction, std::vector<std::pair<int, int>>, AngleLess> classes;
    for (int i = 0; i < cfg.size(); ++i)
        for (int j = i + 1; j < cfg.size(); ++j)
            classes[Direction::through(cfg.points[static_cast<std::size_t>(i)],
                                       cfg.points[static_cast<std::size_t>(j)])]
                .push_back({i, j});
    return classes;
}

FieldScalar dot(const Point& p, const FieldScalar& ux, const FieldScalar& uy) {
    return p.x * ux + p.y * uy;
}

}  // namespace

int direction_count(const Configuration& cfg) {
    auto classes = direction_classes(cfg);
    if (classes.size() == 1) fail("AllCollinear", "all points lie on one line");
    return static_cast<int>(classes.size());
}

HalfPeriod circular_sequence(const Configuration& cfg) {
    auto classes = direction_classes(cfg);
    if (classes.size() == 1) fail("AllCollinear", "all points lie on one line");
    const int N = cfg.size();

    // Order just before the first event: primary key projects onto the
    // normal of the first direction, secondary onto the direction itself.
    const Direction& first = classes.begin()->first;
    std::vector<int> order(static_cast<std::size_t>(N));
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](int i, int j) {
        const Point& p = cfg.points[static_cast<std::size_t>(i)];
        const Point& q = cfg.points[static_cast<std::size_t>(j)];
        FieldScalar primary = dot(p, -first.dy, first.dx) - dot(q, -first.dy, first.dx);
        int sp = primary.sign();
        if (sp != 0) return sp < 0;
        FieldScalar secondary = dot(p, first.dx, first.dy) - dot(q, first.dx, first.dy);
        return secondary.sign() < 0;
    };
    std::sort(order.begin(), order.end(), key_less);

    std::vector<std::vector<int>> index_rows;
    index_rows.push_back(order);
    for (const auto& [dir, pairs] : classes) {
        // Group members of this direction class by supporting line.
        auto line_key = [&](int i) {
            const Point& p = cfg.points[static_cast<std::size_t>(i)];
            return p.x * dir.dy - p.y * dir.dx;
        };
        std::vector<std::pair<FieldScalar, int>> keyed;
        std::vector<int> members;
        for (const auto& [i, j] : pairs) {
            members.push_back(i);
            members.push_back(j);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::vector<std::vector<int>> lines;
        for (int i : members) {
            FieldScalar k = line_key(i);
            bool placed = false;
            for (std::size_t g = 0; g < keyed.size(); ++g)
                if (keyed[g].first == k) {
                    lines[g].push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) {
                keyed.push_back({k, i});
                lines.push_back({i});
            }
        }

        std::vector<int> row = index_rows.back();
        std::vector<int> pos(static_cast<std::size_t>(N));
        for (int q = 0; q < N; ++q) pos[static_cast<std::size_t>(row[static_cast<std::size_t>(q)])] = q;
        for (const auto& line : lines) {
            if (line.size() < 2) continue;
            int lo = N, hi = -1;
            for (int i : line) {
                lo = std::min(lo, pos[static_cast<std::size_t>(i)]);
                hi = std::max(hi, pos[static_cast<std::size_t>(i)]);
            }
            if (hi - lo + 1 != static_cast<int>(line.size()))
                fail("InternalInconsistency", "collinear group not consecutive in sweep");
            std::reverse(row.begin() + lo, row.begin() + hi + 1);
        }
        index_rows.push_back(std::move(row));
    }

    // Label assignment: canonical signed labels for negation-closed sets,
    // else 1..N in initial order.
    std::vector<Label> label_of(static_cast<std::size_t>(N), 0);
    if (N % 2 == 0 && cfg.negation_closed()) {
        const int n = N / 2;
        for (int i = 0; i < n; ++i) {
            int idx = order[static_cast<std::size_t>(i)];
            int mirror = order[static_cast<std::size_t>(N - 1 - i)];
            if (!(cfg.points[static_cast<std::size_t>(mirror)] ==
                  -cfg.points[static_cast<std::size_t>(idx)]))
                fail("InternalInconsistency", "negated partner not at mirrored position");
            label_of[static_cast<std::size_t>(idx)] = i + 1;
            label_of[static_cast<std::size_t>(mirror)] = -(i + 1);
        }
    } else {
        for (int i = 0; i < N; ++i) label_of[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
    }

    std::vector<Row> rows;
    rows.reserve(index_rows.size());
    for (const auto& ir : index_rows) {
        Row r;
        r.reserve(static_cast<std::size_t>(N));
        for (int i : ir) r.push_back(label_of[static_cast<std::size_t>(i)]);
        rows.push_back(std::move(r));
    }
    return validated(rows);
}

FamilySpec FamilySpec::polygon(int sides) {
    if (sides < 4 || sides % 2 != 0) fail("InvalidParams", "polygon needs an even side count >= 4");
    FamilySpec f;
    f.kind = Kind::Polygon;
    f.sides = sides;
    return f;
}

FamilySpec FamilySpec::exp_cross(Rational lambda, int s, int t) {
    if (lambda <= 1) fail("InvalidParams", "exponential cross needs lambda > 1");
    if (s < 1 || t < 1) fail("InvalidParams", "exponential cross needs s, t >= 1");
    FamilySpec f;
    f.kind = Kind::ExpCross;
    f.lambda = std::move(lambda);
    f.s = s;
    f.t = t;
    return f;
}

FamilySpec FamilySpec::bipencil(int d1) {
    if (d1 < 2) fail("InvalidParams", "bipencil needs d1 >= 2");
    FamilySpec f;
    f.kind = Kind::Bipencil;
    f.d1 = d1;
    return f;
}

FamilySpec FamilySpec::tricolumnar(int d1) {
    if (d1 < 2) fail("InvalidParams", "tricolumnar array needs d1 >= 2");
    FamilySpec f;
    f.kind = Kind::Tricolumnar;
    f.d1 = d1;
    return f;
}

FamilySpec FamilySpec::z5_12() {
    FamilySpec f;
    f.kind = Kind::Z5_12;
    return f;
}

FamilySpec FamilySpec::z5_13() {
    FamilySpec f;
    f.kind = Kind::Z5_13;
    return f;
}

std::string FamilySpec::name() const {
    switch (kind) {
        case Kind::Polygon: return "polygon(" + std::to_string(sides) + ")";
        case Kind::ExpCross: {
            std::ostringstream os;
            os << "exp-cross(lambda=" << lambda << ", s=" << s << ", t=" << t << ")";
            return os.str();
        }
        case Kind::Bipencil: return "bipencil(" + std::to_string(d1) + ")";
        case Kind::Tricolumnar: return "tricolumnar(" + std::to_string(d1) + ")";
        case Kind::Z5_12: return "Z5-12";
        case Kind::Z5_13: return "Z5-13";
    }
    return "?";
}

namespace {

Configuration exp_cross_config(const Rational& lambda, int s, int t) {
    std::vector<Point> pts;
    Rational power = 1;
    for (int i = 0; i <= s; ++i) {
        pts.push_back({FieldScalar(power), FieldScalar(Rational(0))});
        pts.push_back({FieldScalar(-power), FieldScalar(Rational(0))});
        power *= lambda;
    }
    power = 1;
    for (int j = 0; j <= t; ++j) {
        pts.push_back({FieldScalar(Rational(0)), FieldScalar(power)});
        pts.push_back({FieldScalar(Rational(0)), FieldScalar(-power)});
        power *= lambda;
    }
    return Configuration(1, std::move(pts));
}

Configuration bipencil_config(int d1, bool with_diagonal) {
    std::vector<Point> pts;
    for (int k = 1; k <= d1; ++k) {
        pts.push_back({FieldScalar(Rational(0)), FieldScalar(Rational(k))});
        pts.push_back({FieldScalar(Rational(0)), FieldScalar(Rational(-k))});
    }
    pts.push_back({FieldScalar(Rational(1)), FieldScalar(Rational(0))});
    pts.push_back({FieldScalar(Rational(-1)), FieldScalar(Rational(0))});
    if (with_diagonal) {
        pts.push_back({FieldScalar(Rational(1)), FieldScalar(Rational(1))});
        pts.push_back({FieldScalar(Rational(-1)), FieldScalar(Rational(-1))});
    }
    return Configuration(1, std::move(pts));
}

Configuration z5_config(bool with_center) {
    const FieldScalar tau = FieldScalar::golden();
    const FieldScalar one(Rational(1));
    const FieldScalar zero(Rational(0));
    std::vector<Point> pts;
    auto pm = [&](const FieldScalar& x, const FieldScalar& y) {
        pts.push_back({x, y});
        pts.push_back({-x, -y});
    };
    pm(zero, one);
    pm(zero, tau);
    pm(one, zero);
    pm(tau, zero);
    pm(one, one);
    pm(tau, tau);
    if (with_center) pts.push_back({zero, zero});
    return Configuration(5, std::move(pts));
}

}  // namespace

Configuration gen_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::ExpCross:
            return exp_cross_config(spec.lambda, spec.s, spec.t);
        case FamilySpec::Kind::Bipencil:
            return bipencil_config(spec.d1, false);
        case FamilySpec::Kind::Tricolumnar:
            return bipencil_config(spec.d1, true);
        case FamilySpec::Kind::Z5_12:
            return z5_config(false);
        case FamilySpec::Kind::Z5_13:
            return z5_config(true);
        case FamilySpec::Kind::Polygon: {
            if (spec.sides == 4) {
                std::vector<Point> pts = {{FieldScalar(Rational(1)), FieldScalar(Rational(0))},
                                          {FieldScalar(Rational(0)), FieldScalar(Rational(1))},
                                          {FieldScalar(Rational(-1)), FieldScalar(Rational(0))},
                                          {FieldScalar(Rational(0)), FieldScalar(Rational(-1))}};
                return Configuration(1, std::move(pts));
            }
            if (spec.sides == 8) {
                const FieldScalar h(Rational(0), Rational(1, 2), 2);  // sqrt(2)/2
                const FieldScalar one(Rational(1));
                const FieldScalar zero(Rational(0));
                std::vector<Point> pts = {{one, zero},  {h, h},   {zero, one},  {-h, h},
                                          {-one, zero}, {-h, -h}, {zero, -one}, {h, -h}};
                return Configuration(2, std::move(pts));
            }
            fail("InvalidParams",
                 "polygon coordinates exist in a quadratic field only for 4 or 8 sides; "
                 "use the rational-angle sweep");
        }
    }
    fail("InvalidParams", "unknown family");
}

HalfPeriod polygon_sequence(int m) {
    if (m < 2) fail("InvalidParams", "need m >= 2 (a 2m-gon)");
    const int N = 2 * m;
    const int full = 4 * m;  // full circle in units of pi/(2m)
    // cos of an angle in these units decreases with the folded distance to 0.
    auto fold = [&](int g) {
        g = ((g % full) + full) % full;
        return std::min(g, full - g);
    };
    // Vertex k sits at angle 2k units.
    std::vector<int> order(static_cast<std::size_t>(N));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int sa = fold(2 * a - m), sb = fold(2 * b - m);  // descending fold = ascending sin
        if (sa != sb) return sa > sb;
        return fold(2 * a) > fold(2 * b);  // ascending cos
    });

    std::vector<std::vector<int>> index_rows{order};
    for (int r = 0; r < N; ++r) {
        const int s = (m + r) % N;  // vertices j, k tie when j + k = s (mod 2m)
        std::vector<int> row = index_rows.back();
        std::vector<int> pos(static_cast<std::size_t>(N));
        for (int q = 0; q < N; ++q) pos[static_cast<std::size_t>(row[static_cast<std::size_t>(q)])] = q;
        for (int j = 0; j < N; ++j) {
            int k = ((s - j) % N + N) % N;
            if (j >= k) continue;
            int a = pos[static_cast<std::size_t>(j)], b = pos[static_cast<std::size_t>(k)];
            if (std::abs(a - b) != 1)
                fail("InternalInconsistency", "tied polygon pair not adjacent");
            std::swap(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]);
        }
        index_rows.push_back(std::move(row));
    }

    // Vertices k and k+m are antipodal; label canonically from the first row.
    std::vector<Label> label_of(static_cast<std::size_t>(N));
    for (int i = 0; i < m; ++i) {
        int idx = order[static_cast<std::size_t>(i)];
        int mirror = order[static_cast<std::size_t>(N - 1 - i)];
        if ((idx + m) % N != mirror)
            fail("InternalInconsistency", "antipode not at mirrored position");
        label_of[static_cast<std::size_t>(idx)] = i + 1;
        label_of[static_cast<std::size_t>(mirror)] = -(i + 1);
    }
    std::vector<Row> rows;
    for (const auto& ir : index_rows) {
        Row row;
        for (int i : ir) row.push_back(label_of[static_cast<std::size_t>(i)]);
        rows.push_back(std::move(row));
    }
    return validated(rows);
}

Configuration affine_image(const Configuration& cfg, const Rational& a, const Rational& b,
                           const Rational& c, const Rational& d, const Rational& e,
                           const Rational& f) {
    if (a * d - b * c == 0) fail("InvalidParams", "affine map must be invertible");
    std::vector<Point> pts;
    pts.reserve(cfg.points.size());
    for (const Point& p : cfg.points)
        pts.push_back({p.x * FieldScalar(a) + p.y * FieldScalar(b) + FieldScalar(e),
                       p.x * FieldScalar(c) + p.y * FieldScalar(d) + FieldScalar(f)});
    return Configuration(cfg.disc, std::move(pts));
}

}  // namespace dirseq
