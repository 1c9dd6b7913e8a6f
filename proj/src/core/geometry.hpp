#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace rtri {

using pidx = std::uint64_t; // canonical point index enc(x1)*q + enc(x2)

inline constexpr pidx no_point = ~pidx(0);

struct Point {
    fe x1 = 0;
    fe x2 = 0;
};

// The set {v : v1^2 + v2^2 = 1}, sorted by point index. Closed under
// negation and the quarter turn (a,b) -> (-b,a).
struct UnitCircle {
    std::vector<Point> vecs;
    std::size_t size() const { return vecs.size(); }
};

// F_q^2 workspace: the field, its unit circle, and the apex constants.
// Immutable once built; every geometry and search operation runs against one.
class Plane {
public:
    explicit Plane(Field field);

    const Field& field() const { return field_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t point_count() const { return q_ * q_; }
    const UnitCircle& circle() const { return circle_; }

    // root of s^2 = 3 with the smaller encoding, absent when 3 is a non-square
    std::optional<fe> sqrt3() const { return sqrt3_; }
    bool triangles_exist() const { return sqrt3_.has_value(); }

    pidx index_of(Point pt) const { return pt.x1 * q_ + pt.x2; }
    Point point_at(pidx i) const { return Point{i / q_, i % q_}; }

    fe distance(Point x, Point y) const;

    std::uint64_t ordered_unit_pairs() const { return q_ * q_ * circle_.size(); }
    std::uint64_t unordered_unit_pairs() const { return ordered_unit_pairs() / 2; }

    // exact count via the two-apexes / three-edges identity; 0 without sqrt3
    std::uint64_t triangle_count() const;

    // both points completing the unit pair (x, y) to unit equilateral
    // triangles, in formula order (midpoint + (s/2)R(y-x), midpoint - ...).
    // Preconditions checked: d(x,y) = 1 (NotUnitPair), s != 0 and s^2 = 3
    // (InvalidS).
    std::pair<Point, Point> apexes(Point x, Point y, fe s) const;
    std::pair<Point, Point> apexes(Point x, Point y) const; // s = sqrt3, NoTriangles if absent

    // Streams each unit equilateral triangle exactly once as an ascending
    // index triple (i < j < k), in lexicographic order.
    void enumerate_triangles(const std::function<void(pidx, pidx, pidx)>& emit) const;

    // enumeration-based count (parallel); equals triangle_count()
    std::uint64_t count_triangles_enumerated(int threads) const;

private:
    Field field_;
    std::uint64_t q_;
    UnitCircle circle_;
    std::optional<fe> sqrt3_;

    friend struct PlaneScan;
};

// Scan support shared by the geometry and rainbow kernels: per circle vector
// v, the halved vector v/2 and the apex offset (s/2)*R(v) are constant, so a
// canonical pair scan needs only modular additions per step.
struct PlaneScan {
    const Plane* plane;
    std::uint64_t q;
    std::uint64_t p;
    bool prime_field;        // k == 1 fast path
    bool has_apexes;
    std::vector<std::array<fe, 2>> vec;   // circle vectors
    std::vector<std::array<fe, 2>> half;  // v * inv(2)
    std::vector<std::array<fe, 2>> off;   // (s * inv(2)) * (-v2, v1)

    explicit PlaneScan(const Plane& pl);

    // Calls fn(ix, iy, iz0, iz1) for every ordered unit pair with ix < iy.
    // iz0/iz1 are the apex indices of the pair, or no_point when the field
    // has no unit triangles. Apexes are not filtered against iy.
    template <class Fn>
    void scan(std::uint64_t x_begin, std::uint64_t x_end, Fn&& fn) const {
        if (prime_field)
            scan_impl<true>(x_begin, x_end, fn);
        else
            scan_impl<false>(x_begin, x_end, fn);
    }

    // Pair-only variant, no apex work: fn(ix, iy) for ordered pairs ix < iy.
    template <class Fn>
    void scan_pairs(std::uint64_t x_begin, std::uint64_t x_end, Fn&& fn) const {
        if (prime_field)
            scan_pairs_impl<true>(x_begin, x_end, fn);
        else
            scan_pairs_impl<false>(x_begin, x_end, fn);
    }

private:
    template <bool Prime, class Fn>
    void scan_impl(std::uint64_t x_begin, std::uint64_t x_end, Fn&& fn) const {
        const Field& f = plane->field();
        const std::size_t nv = vec.size();
        for (std::uint64_t ix = x_begin; ix < x_end; ++ix) {
            const fe x1 = ix / q, x2 = ix % q;
            for (std::size_t vi = 0; vi < nv; ++vi) {
                fe y1, y2;
                if constexpr (Prime) {
                    y1 = mod_add(x1, vec[vi][0]);
                    y2 = mod_add(x2, vec[vi][1]);
                } else {
                    y1 = f.add(x1, vec[vi][0]);
                    y2 = f.add(x2, vec[vi][1]);
                }
                const pidx iy = y1 * q + y2;
                if (iy <= ix) continue;
                pidx iz0 = no_point, iz1 = no_point;
                if (has_apexes) {
                    fe m1, m2, a1, a2, b1, b2;
                    if constexpr (Prime) {
                        m1 = mod_add(x1, half[vi][0]);
                        m2 = mod_add(x2, half[vi][1]);
                        a1 = mod_add(m1, off[vi][0]);
                        a2 = mod_add(m2, off[vi][1]);
                        b1 = mod_sub(m1, off[vi][0]);
                        b2 = mod_sub(m2, off[vi][1]);
                    } else {
                        m1 = f.add(x1, half[vi][0]);
                        m2 = f.add(x2, half[vi][1]);
                        a1 = f.add(m1, off[vi][0]);
                        a2 = f.add(m2, off[vi][1]);
                        b1 = f.sub(m1, off[vi][0]);
                        b2 = f.sub(m2, off[vi][1]);
                    }
                    iz0 = a1 * q + a2;
                    iz1 = b1 * q + b2;
                }
                fn(ix, iy, iz0, iz1);
            }
        }
    }

    template <bool Prime, class Fn>
    void scan_pairs_impl(std::uint64_t x_begin, std::uint64_t x_end, Fn&& fn) const {
        const Field& f = plane->field();
        const std::size_t nv = vec.size();
        for (std::uint64_t ix = x_begin; ix < x_end; ++ix) {
            const fe x1 = ix / q, x2 = ix % q;
            for (std::size_t vi = 0; vi < nv; ++vi) {
                fe y1, y2;
                if constexpr (Prime) {
                    y1 = mod_add(x1, vec[vi][0]);
                    y2 = mod_add(x2, vec[vi][1]);
                } else {
                    y1 = f.add(x1, vec[vi][0]);
                    y2 = f.add(x2, vec[vi][1]);
                }
                const pidx iy = y1 * q + y2;
                if (iy > ix) fn(ix, iy);
            }
        }
    }

    fe mod_add(fe a, fe b) const {
        fe s = a + b;
        return s >= p ? s - p : s;
    }
    fe mod_sub(fe a, fe b) const { return a >= b ? a - b : a + p - b; }
};

} // namespace rtri
