#include "geometry.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace rtri {

Plane::Plane(Field field) : field_(std::move(field)), q_(field_.q()) {
    // per-abscissa root extraction: for each x1 solve x2^2 = 1 - x1^2
    const Field& f = field_;
    for (fe x1 = 0; x1 < q_; ++x1) {
        fe rhs = f.sub(1, f.mul(x1, x1));
        auto roots = f.sqrt(rhs);
        if (!roots) continue;
        if (roots->first == roots->second) {
            circle_.vecs.push_back(Point{x1, roots->first});
        } else {
            circle_.vecs.push_back(Point{x1, roots->first});
            circle_.vecs.push_back(Point{x1, roots->second});
        }
    }
    std::sort(circle_.vecs.begin(), circle_.vecs.end(),
              [&](Point a, Point b) { return index_of(a) < index_of(b); });

    auto r3 = f.sqrt(f.from_int(3));
    if (r3) sqrt3_ = r3->first;
}

fe Plane::distance(Point x, Point y) const {
    fe d1 = field_.sub(x.x1, y.x1);
    fe d2 = field_.sub(x.x2, y.x2);
    return field_.add(field_.mul(d1, d1), field_.mul(d2, d2));
}

std::uint64_t Plane::triangle_count() const {
    if (!sqrt3_) return 0;
    // each unordered unit pair spans two triangles, each triangle has three
    // edges: count = 2/3 * (q^2 * |circle| / 2) = q^2 * |circle| / 3
    return q_ * q_ * circle_.size() / 3;
}

std::pair<Point, Point> Plane::apexes(Point x, Point y, fe s) const {
    const Field& f = field_;
    if (distance(x, y) != 1)
        fail(Status::not_unit_pair, "apexes of a pair not at distance 1");
    if (s == 0 || f.mul(s, s) != f.from_int(3))
        fail(Status::invalid_s, "apex parameter does not satisfy s^2 = 3");
    const fe inv2 = f.inv(f.from_int(2));
    const fe h = f.mul(s, inv2);
    const fe v1 = f.sub(y.x1, x.x1), v2 = f.sub(y.x2, x.x2);
    const fe m1 = f.mul(f.add(x.x1, y.x1), inv2);
    const fe m2 = f.mul(f.add(x.x2, y.x2), inv2);
    const fe r1 = f.mul(h, f.neg(v2)), r2 = f.mul(h, v1);
    Point a{f.add(m1, r1), f.add(m2, r2)};
    Point b{f.sub(m1, r1), f.sub(m2, r2)};
    return {a, b};
}

std::pair<Point, Point> Plane::apexes(Point x, Point y) const {
    if (!sqrt3_) fail(Status::no_triangles, "field has no unit equilateral triangles");
    return apexes(x, y, *sqrt3_);
}

PlaneScan::PlaneScan(const Plane& pl)
    : plane(&pl), q(pl.q()), p(pl.field().p()),
      prime_field(pl.field().k() == 1), has_apexes(pl.triangles_exist()) {
    const Field& f = pl.field();
    const fe inv2 = f.inv(f.from_int(2));
    const fe h = has_apexes ? f.mul(*pl.sqrt3(), inv2) : 0;
    for (const Point& v : pl.circle().vecs) {
        vec.push_back({v.x1, v.x2});
        half.push_back({f.mul(v.x1, inv2), f.mul(v.x2, inv2)});
        if (has_apexes)
            off.push_back({f.mul(h, f.neg(v.x2)), f.mul(h, v.x1)});
        else
            off.push_back({0, 0});
    }
}

void Plane::enumerate_triangles(const std::function<void(pidx, pidx, pidx)>& emit) const {
    PlaneScan scan(*this);
    std::vector<std::pair<pidx, pidx>> with_x; // (j, k) for current smallest vertex
    for (std::uint64_t ix = 0; ix < point_count(); ++ix) {
        with_x.clear();
        scan.scan(ix, ix + 1, [&](pidx a, pidx b, pidx z0, pidx z1) {
            for (pidx z : {z0, z1}) {
                if (z == no_point || z <= b) continue;
                if (z == a || z == b)
                    fail(Status::internal, "degenerate triangle from apex construction");
                with_x.emplace_back(b, z);
            }
        });
        std::sort(with_x.begin(), with_x.end());
        for (auto [j, k] : with_x) emit(ix, j, k);
    }
}

std::uint64_t Plane::count_triangles_enumerated(int threads) const {
    PlaneScan scan(*this);
    const unsigned nthreads = resolve_threads(threads);
    std::vector<std::uint64_t> partial(nthreads, 0);
    const std::uint64_t total = point_count();
    const std::uint64_t chunk = std::max<std::uint64_t>(256, total / (nthreads * 16) + 1);
    parallel_chunks(total, nthreads, chunk, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        std::uint64_t n = 0;
        scan.scan(b, e, [&](pidx, pidx iy, pidx z0, pidx z1) {
            if (z0 != no_point && z0 > iy) ++n;
            if (z1 != no_point && z1 > iy) ++n;
        });
        partial[slot] += n;
    });
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

} // namespace rtri
