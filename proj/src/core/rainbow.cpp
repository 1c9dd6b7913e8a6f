#include "rainbow.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "parallel.hpp"

namespace rtri {

namespace {

void require_covering(const Plane& plane, const Coloring& c) {
    if (c.ground_size() != plane.point_count())
        fail(Status::incomplete_coloring, "coloring does not cover F_q^2");
}

using Triple = std::array<pidx, 3>;

constexpr Triple no_triple{no_point, no_point, no_point};

WitnessTriangle make_witness(const Coloring& c, Triple t) {
    WitnessTriangle w;
    w.vertices = t;
    for (int i = 0; i < 3; ++i) w.colors[i] = c.color_of(t[i]);
    return w;
}

// canonically least triangle of the plane, as an ascending triple
std::optional<Triple> first_triangle(const Plane& plane) {
    if (!plane.triangles_exist()) return std::nullopt;
    PlaneScan scan(plane);
    for (std::uint64_t ix = 0; ix < plane.point_count(); ++ix) {
        Triple best = no_triple;
        scan.scan(ix, ix + 1, [&](pidx a, pidx b, pidx z0, pidx z1) {
            for (pidx z : {z0, z1}) {
                if (z == no_point || z <= b) continue;
                Triple cand{a, b, z};
                if (cand < best) best = cand;
            }
        });
        if (best != no_triple) return best;
    }
    return std::nullopt;
}

} // namespace

bool verify_witness(const Plane& plane, const Coloring& c, const WitnessTriangle& w) {
    const auto& v = w.vertices;
    if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) return false;
    for (int i = 0; i < 3; ++i) {
        if (v[i] >= plane.point_count()) return false;
        if (c.color_of(v[i]) != w.colors[i]) return false;
    }
    if (w.colors[0] == w.colors[1] || w.colors[0] == w.colors[2] ||
        w.colors[1] == w.colors[2])
        return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (plane.distance(plane.point_at(v[i]), plane.point_at(v[j])) != 1)
                return false;
    return true;
}

std::uint64_t mono_unit_pairs(const Plane& plane, const Coloring& c, int threads) {
    require_covering(plane, c);
    PlaneScan scan(plane);
    const std::uint32_t* col = c.assignment().data();
    const unsigned nthreads = resolve_threads(threads);
    // per-class tallies per worker; T is their grand total
    std::vector<std::vector<std::uint64_t>> tallies(
        nthreads, std::vector<std::uint64_t>(c.color_bound(), 0));
    const std::uint64_t total = plane.point_count();
    const std::uint64_t chunk = std::max<std::uint64_t>(256, total / (nthreads * 16) + 1);
    parallel_chunks(total, nthreads, chunk, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        auto& tally = tallies[slot];
        scan.scan_pairs(b, e, [&](pidx ix, pidx iy) {
            if (col[ix] == col[iy]) ++tally[col[ix]];
        });
    });
    std::uint64_t sum = 0;
    for (const auto& tally : tallies)
        for (std::uint64_t v : tally) sum += v;
    return sum;
}

RainbowReport find_rainbow(const Plane& plane, const Coloring& c, SearchMode mode,
                           int threads) {
    require_covering(plane, c);
    PlaneScan scan(plane);
    const std::uint32_t* col = c.assignment().data();
    const unsigned nthreads = resolve_threads(threads);
    const std::uint64_t total = plane.point_count();
    const std::uint64_t chunk = std::max<std::uint64_t>(256, total / (nthreads * 16) + 1);

    RainbowReport report;

    if (mode == SearchMode::count_all) {
        struct Acc {
            std::uint64_t tri = 0, rainbow = 0, mono = 0;
            Triple best = no_triple;
        };
        std::vector<Acc> accs(nthreads);
        parallel_chunks(total, nthreads, chunk,
                        [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
            Acc& acc = accs[slot];
            scan.scan(b, e, [&](pidx ix, pidx iy, pidx z0, pidx z1) {
                const std::uint32_t cx = col[ix], cy = col[iy];
                if (cx == cy) ++acc.mono;
                for (pidx z : {z0, z1}) {
                    if (z == no_point || z <= iy) continue;
                    ++acc.tri;
                    if (cx != cy) {
                        const std::uint32_t cz = col[z];
                        if (cz != cx && cz != cy) {
                            ++acc.rainbow;
                            Triple cand{ix, iy, z};
                            if (cand < acc.best) acc.best = cand;
                        }
                    }
                }
            });
        });
        Triple best = no_triple;
        for (const Acc& a : accs) {
            report.total_triangles += a.tri;
            report.rainbow_count += a.rainbow;
            report.mono_pairs += a.mono;
            if (a.best < best) best = a.best;
        }
        if (report.rainbow_count > 0) report.witness = make_witness(c, best);
        return report;
    }

    // first-witness: pruned scan for the least witness only; the counts come
    // from the exact identity and a pair-only pass
    std::atomic<std::uint64_t> best_x{no_point};
    std::mutex best_mutex;
    Triple best = no_triple;
    parallel_chunks(total, nthreads, chunk,
                    [&](std::uint64_t b, std::uint64_t e, unsigned) {
        if (b > best_x.load(std::memory_order_relaxed)) return;
        Triple local = no_triple;
        scan.scan(b, e, [&](pidx ix, pidx iy, pidx z0, pidx z1) {
            if (ix > best_x.load(std::memory_order_relaxed) || ix > local[0]) return;
            const std::uint32_t cx = col[ix], cy = col[iy];
            if (cx == cy) return;
            for (pidx z : {z0, z1}) {
                if (z == no_point || z <= iy) continue;
                const std::uint32_t cz = col[z];
                if (cz != cx && cz != cy) {
                    Triple cand{ix, iy, z};
                    if (cand < local) local = cand;
                }
            }
        });
        if (local != no_triple) {
            std::lock_guard<std::mutex> lock(best_mutex);
            if (local < best) {
                best = local;
                std::uint64_t prev = best_x.load(std::memory_order_relaxed);
                while (prev > local[0] &&
                       !best_x.compare_exchange_weak(prev, local[0])) {
                }
            }
        }
    });
    report.total_triangles = plane.triangle_count();
    report.mono_pairs = mono_unit_pairs(plane, c, threads);
    if (best != no_triple) {
        report.rainbow_count = 1;
        report.witness = make_witness(c, best);
    }
    return report;
}

WitnessTriangle find_rainbow_size2(const Plane& plane, const Coloring& c) {
    require_covering(plane, c);
    if (!plane.triangles_exist())
        fail(Status::no_triangles, "field has no unit equilateral triangles");
    if (!c.sorted_classes().empty() && c.sorted_classes().front().second > 2)
        fail(Status::class_too_large, "a color class has more than two points");

    auto seed_triple = first_triangle(plane);
    if (!seed_triple) fail(Status::internal, "triangles exist but none found");
    const Triple tri = *seed_triple;

    auto colors_distinct = [&](const Triple& t) {
        std::uint32_t a = c.color_of(t[0]), b = c.color_of(t[1]), d = c.color_of(t[2]);
        return a != b && a != d && b != d;
    };

    if (colors_distinct(tri)) return make_witness(c, tri);

    // locate the repeated-color pair (a1 < a2) and the odd vertex b
    pidx a1 = 0, a2 = 0, b = 0;
    if (c.color_of(tri[0]) == c.color_of(tri[1])) {
        a1 = tri[0]; a2 = tri[1]; b = tri[2];
    } else if (c.color_of(tri[0]) == c.color_of(tri[2])) {
        a1 = tri[0]; a2 = tri[2]; b = tri[1];
    } else {
        a1 = tri[1]; a2 = tri[2]; b = tri[0];
    }

    // the apex of (a_i, b) other than the remaining original vertex
    auto other_apex = [&](pidx ai, pidx skip) {
        auto [u, v] = plane.apexes(plane.point_at(ai), plane.point_at(b));
        pidx iu = plane.index_of(u), iv = plane.index_of(v);
        return iu == skip ? iv : iu;
    };
    const pidx c1 = other_apex(a1, a2);
    const pidx c2 = other_apex(a2, a1);

    for (auto [ai, ci] : {std::pair{a1, c1}, std::pair{a2, c2}}) {
        Triple cand{ai, b, ci};
        std::sort(cand.begin(), cand.end());
        WitnessTriangle w = make_witness(c, cand);
        if (verify_witness(plane, c, w)) return w;
    }
    fail(Status::internal, "size-2 construction failed to produce a rainbow triangle");
}

SubsetPairStats subset_unit_pairs(const Plane& plane, const std::vector<pidx>& points) {
    SubsetPairStats stats;
    stats.subset_size = points.size();
    if (points.empty()) {
        stats.ratio = Rational(0);
        return stats;
    }
    std::vector<bool> member(plane.point_count(), false);
    for (pidx pt : points) {
        if (pt >= plane.point_count())
            fail(Status::bad_argument, "point index outside F_q^2");
        if (member[pt]) fail(Status::bad_argument, "duplicate point in subset");
        member[pt] = true;
    }
    const Field& f = plane.field();
    const std::uint64_t q = plane.q();
    std::uint64_t count = 0;
    for (pidx pt : points) {
        const fe x1 = pt / q, x2 = pt % q;
        for (const Point& v : plane.circle().vecs) {
            const fe y1 = f.add(x1, v.x1), y2 = f.add(x2, v.x2);
            if (member[y1 * q + y2]) ++count; // ordered count
        }
    }
    stats.ordered_pairs = count;
    stats.ratio = Rational::make(
        static_cast<__int128>(q) * count,
        static_cast<__int128>(points.size()) * points.size());
    return stats;
}

PipelineReport theorem_pipeline(const Plane& plane, const Coloring& c,
                                std::optional<Rational> u, int threads) {
    require_covering(plane, c);
    if (c.class_count() == 0) fail(Status::empty_coloring, "coloring has no classes");
    if (!plane.triangles_exist())
        fail(Status::no_triangles, "field has no unit equilateral triangles");

    PipelineReport rep(c);
    // The packing fills groups to the 10*m*l cap, so it lands near k = u/10;
    // reaching the k ~ sqrt(q) regime therefore needs u = 10*ceil(sqrt(q)).
    // With u = sqrt(q) itself, k <= 2 for every q <= 400 and no rainbow
    // triangle can survive the coarsening.
    rep.u = u ? *u : Rational(10 * static_cast<std::int64_t>(isqrt_ceil(plane.q())));

    FairifyResult fair = greedy_fairify(c);
    rep.fairified = std::move(fair.coloring);
    rep.merge_steps = std::move(fair.steps);
    rep.t = fair.t;

    CoarsenResult coarse = coarsen(rep.fairified, rep.u);
    rep.coarsened = std::move(coarse.coloring);
    rep.coarsen_trace = std::move(coarse.trace);
    rep.k = rep.coarsen_trace.k;

    rep.search = find_rainbow(plane, rep.coarsened, SearchMode::first_witness, threads);

    rep.chain_ok = refines(rep.original, rep.fairified) &&
                   refines(rep.fairified, rep.coarsened);
    rep.k_bound_ok =
        Rational(static_cast<std::int64_t>(rep.k)) <= Rational(101, 10) * rep.u + Rational(1);

    if (rep.search.witness) {
        WitnessTriangle w = *rep.search.witness;
        for (int i = 0; i < 3; ++i) w.colors[i] = rep.original.color_of(w.vertices[i]);
        if (!verify_witness(plane, rep.original, w))
            fail(Status::internal, "pipeline witness failed re-verification in the original coloring");
        rep.witness = w;
    }

    rep.max_class_fraction =
        Rational(static_cast<std::int64_t>(c.sorted_classes().front().second),
                 static_cast<std::int64_t>(c.ground_size()));
    rep.hypothesis_suspect = !rep.witness && rep.max_class_fraction > Rational(1, 2);
    return rep;
}

BoundCheckReport no_rainbow_bound_check(const Plane& plane, const Coloring& c, int threads) {
    RainbowReport r = find_rainbow(plane, c, SearchMode::count_all, threads);
    BoundCheckReport out;
    out.mono_pairs = r.mono_pairs;
    out.total_triangles = r.total_triangles;
    out.rainbow_count = r.rainbow_count;
    out.bound_holds = r.rainbow_count > 0 || 2 * r.mono_pairs >= r.total_triangles;
    return out;
}

} // namespace rtri
