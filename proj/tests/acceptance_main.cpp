// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// hard criterion fails. Criterion 11's speedup measurement is reported but
// never failed on (machine-dependent; this box may have a single core).

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/coloring_io.hpp"
#include "core/experiments.hpp"
#include "core/generators.hpp"
#include "core/rainbow.hpp"
#include "core/report_io.hpp"
#include "oracles.hpp"

using namespace rtri;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::pair<std::uint64_t, unsigned>> oracle_q_set() {
    std::vector<std::pair<std::uint64_t, unsigned>> qs;
    for (std::uint64_t p = 5; p <= 199; ++p)
        if (is_prime_u64(p)) qs.push_back({p, 1});
    qs.push_back({5, 2});   // 25
    qs.push_back({7, 2});   // 49
    qs.push_back({11, 2});  // 121
    return qs;
}

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.note = what;
    }
}

// ---- criteria -----------------------------------------------------------

Outcome criterion_1_circle_oracle() {
    Outcome o;
    auto start = Clock::now();
    for (auto [p, k] : oracle_q_set()) {
        Field f = Field::make(p, k, nullptr, 1);
        Plane pl(f);
        std::vector<pidx> got;
        for (const Point& v : pl.circle().vecs) got.push_back(pl.index_of(v));
        expect(o, got == oracle::circle_brute(f),
               "circle mismatch at q=" + std::to_string(f.q()));
    }
    double elapsed = seconds_since(start);
    expect(o, elapsed < 10.0, "runtime " + std::to_string(elapsed) + "s >= 10s");
    o.note += " (all odd primes 5..199 and 25,49,121 in " + std::to_string(elapsed) + "s)";
    return o;
}

Outcome criterion_2_pair_ratio() {
    Outcome o;
    for (auto [p, k] : oracle_q_set()) {
        Field f = Field::make(p, k, nullptr, 1);
        Plane pl(f);
        const std::uint64_t q = f.q();
        const std::uint64_t count = pl.ordered_unit_pairs();
        const std::uint64_t q3 = q * q * q;
        // |count/q^3 - 1| <= 2/q  <=>  |count - q^3| <= 2 q^2
        const std::uint64_t diff = count > q3 ? count - q3 : q3 - count;
        expect(o, diff <= 2 * q * q, "ratio out of tolerance at q=" + std::to_string(q));
    }
    return o;
}

Outcome criterion_3_apex_exactness() {
    Outcome o;
    for (std::uint64_t p : {11, 13}) {
        Field f = Field::make(p, 1);
        Plane pl(f);
        fe s = *pl.sqrt3();
        for (pidx ix = 0; ix < pl.point_count(); ++ix) {
            Point x = pl.point_at(ix);
            for (const Point& v : pl.circle().vecs) {
                Point y{f.add(x.x1, v.x1), f.add(x.x2, v.x2)};
                auto [a, b] = pl.apexes(x, y, s);
                pidx ia = pl.index_of(a), ib = pl.index_of(b);
                pidx iy = pl.index_of(y);
                bool ok = ia != ib && ia != ix && ia != iy && ib != ix && ib != iy &&
                          pl.distance(a, x) == 1 && pl.distance(a, y) == 1 &&
                          pl.distance(b, x) == 1 && pl.distance(b, y) == 1;
                expect(o, ok, "apex defect at q=" + std::to_string(p));
            }
        }
    }
    for (std::uint64_t p : {5, 7}) {
        Field f = Field::make(p, 1);
        expect(o, !Plane(f).triangles_exist(),
               "sqrt3 unexpectedly present at q=" + std::to_string(p));
        expect(o, oracle::triangles_brute(f).empty(),
               "brute-force triangles at q=" + std::to_string(p));
    }
    return o;
}

Outcome criterion_4_triangle_identity() {
    Outcome o;
    for (auto [p, k] : {std::pair{11u, 1u}, {13u, 1u}, {5u, 2u}}) {
        Plane pl(Field::make(p, k, nullptr, 1));
        expect(o, 3 * pl.triangle_count() == 2 * pl.unordered_unit_pairs(),
               "identity 3T = 2P fails at q=" + std::to_string(pl.q()));
    }
    const std::uint64_t expected[] = {484, 676};
    int at = 0;
    for (std::uint64_t p : {11, 13}) {
        Field f = Field::make(p, 1);
        Plane pl(f);
        std::vector<std::array<pidx, 3>> got;
        pl.enumerate_triangles([&](pidx i, pidx j, pidx l) { got.push_back({i, j, l}); });
        auto brute = oracle::triangles_brute(f);
        expect(o, got == brute, "enumeration differs from oracle at q=" + std::to_string(p));
        expect(o, got.size() == expected[at], "count mismatch at q=" + std::to_string(p));
        ++at;
    }
    return o;
}

Outcome criterion_5_size2() {
    Outcome o;
    auto start = Clock::now();
    Field f = Field::make(13, 1);
    Plane pl(f);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Coloring c = generate(f, {GeneratorKind::max2, 0, seed});
        WitnessTriangle w = find_rainbow_size2(pl, c);
        expect(o, verify_witness(pl, c, w),
               "unverified witness at seed " + std::to_string(seed));
    }
    double elapsed = seconds_since(start);
    expect(o, elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s >= 5s");
    o.note += " (100 seeded max2 colorings in " + std::to_string(elapsed) + "s)";
    return o;
}

Outcome criterion_6_degenerate_example() {
    Outcome o;
    auto start = Clock::now();
    for (std::uint64_t q : {11, 13, 17}) {
        Field f = Field::make(q, 1);
        Plane pl(f);
        Coloring c = generate(f, {GeneratorKind::degenerate_example, 0, 0});
        RainbowReport r = find_rainbow(pl, c, SearchMode::count_all);
        expect(o, r.rainbow_count == 0, "rainbow found at q=" + std::to_string(q));
        expect(o, oracle::rainbow_brute(f, c) == 0,
               "oracle disagrees at q=" + std::to_string(q));
        BoundCheckReport b = no_rainbow_bound_check(pl, c);
        expect(o, b.bound_holds, "T >= triangles/2 fails at q=" + std::to_string(q));
    }
    // q = 101 by circle-based search only. Note: chi(3) = -1 at q = 17 and
    // q = 101, so those two cases hold vacuously (no triangles exist); the
    // q = 109 run below is the non-vacuous large-prime counterpart.
    for (std::uint64_t q : {101, 109}) {
        Field f = Field::make(q, 1);
        Plane pl(f);
        Coloring c = generate(f, {GeneratorKind::degenerate_example, 0, 0});
        RainbowReport r = find_rainbow(pl, c, SearchMode::count_all);
        expect(o, r.rainbow_count == 0, "rainbow found at q=" + std::to_string(q));
        BoundCheckReport b = no_rainbow_bound_check(pl, c);
        expect(o, b.bound_holds, "T >= triangles/2 fails at q=" + std::to_string(q));
    }
    double elapsed = seconds_since(start);
    expect(o, elapsed < 30.0, "runtime " + std::to_string(elapsed) + "s >= 30s");
    o.note += " (q in {11,13,17} exhaustive, q=101 circle-based/vacuous, q=109 supplementary)";
    return o;
}

// seeded profile families for criterion 7
std::vector<std::uint64_t> profile_for(std::uint64_t variant, Rng& rng) {
    std::vector<std::uint64_t> sizes;
    const std::uint64_t classes = 3 + rng.below(60);
    switch (variant % 3) {
        case 0: // geometric, capped to keep the ground set desk-sized
            for (std::uint64_t i = 0, sz = 1 + rng.below(4); i < classes; ++i) {
                sizes.push_back(sz);
                sz = std::min<std::uint64_t>(sz * (13 + rng.below(7)) / 10 + 1, 20000);
            }
            break;
        case 1: // uniform
            for (std::uint64_t i = 0; i < classes; ++i)
                sizes.push_back(1 + rng.below(500));
            break;
        default: // adversarial two-scale
            for (std::uint64_t i = 0; i < classes; ++i)
                sizes.push_back(i < classes / 4 + 1 ? 1000 + rng.below(500)
                                                    : 1 + rng.below(3));
            break;
    }
    return sizes;
}

Outcome criterion_7_greedy_fairify() {
    Outcome o;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        Rng rng = Rng::substream(7000, trial);
        auto sizes = profile_for(trial, rng);
        Coloring c = coloring_from_sizes(sizes);
        std::uint64_t s = c.ground_size();
        FairifyResult res = greedy_fairify(c);
        auto prof = res.coloring.class_size_profile();
        std::uint64_t total = 0;
        for (auto sz : prof) total += sz;
        expect(o, prof.front() <= 10 * prof.back(),
               "ratio > 10 at trial " + std::to_string(trial));
        expect(o, total == s, "element count changed at trial " + std::to_string(trial));
        expect(o, refines(c, res.coloring),
               "refinement broken at trial " + std::to_string(trial));
        expect(o, res.steps.size() <= c.class_count() - 1,
               "too many merges at trial " + std::to_string(trial));
    }
    o.note += " (500 seeded profiles)";
    return o;
}

Outcome criterion_8_coarsen() {
    Outcome o;
    std::uint64_t fallback_count = 0;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        Rng rng = Rng::substream(8000, trial);
        const std::uint64_t t = 3 + rng.below(80);
        const std::uint64_t s = t * (20 + rng.below(200));
        auto sizes = fair_sizes(s, t, rng);
        Coloring c = coloring_from_sizes(sizes);

        Rational u;
        switch (trial % 3) {
            case 0: u = Rational(2); break;
            case 1: u = Rational(static_cast<std::int64_t>(isqrt_ceil(t))); break;
            default: u = Rational(static_cast<std::int64_t>(t), 2); break;
        }

        CoarsenResult res = coarsen(c, u);
        expect(o, refines(c, res.coloring), "refinement broken at trial " + std::to_string(trial));
        expect(o, res.trace.k <= t, "k > t at trial " + std::to_string(trial));
        auto prof = res.coloring.class_size_profile();
        std::uint64_t total = 0;
        for (auto sz : prof) total += sz;
        expect(o, total == s, "element count changed at trial " + std::to_string(trial));

        if (res.trace.branch == CoarsenBranch::fallback_merge) ++fallback_count;
        if (Rational(static_cast<std::int64_t>(t)) > u) {
            Rational ml = res.trace.m * res.trace.ell;
            for (auto sz : prof) {
                Rational size(static_cast<std::int64_t>(sz));
                expect(o, Rational(10) * size >= ml,
                       "class below 0.1*m*l at trial " + std::to_string(trial));
                expect(o, Rational(10) * size <= Rational(101) * ml,
                       "class above 10.1*m*l at trial " + std::to_string(trial));
            }
        }
    }
    o.note += " (500 trials, fallback merges: " + std::to_string(fallback_count) + ")";
    return o;
}

// the criterion-9 protocol at an arbitrary prime; k_cap_base = ceil(sqrt(q))
// of the criterion's wording
Outcome pipeline_protocol(std::uint64_t q, std::int64_t k_cap_base) {
    Outcome o;
    auto start = Clock::now();
    Field f = Field::make(q, 1);
    Plane pl(f);
    const Rational k_cap = Rational(101, 10) * Rational(k_cap_base) + Rational(1);
    int runs = 0;
    for (std::uint64_t colors : {20, 50, 101}) {
        for (std::uint64_t seed = 0; seed < 7; ++seed) {
            Coloring c = generate(f, {GeneratorKind::fair_random, colors, seed});
            PipelineReport rep = theorem_pipeline(pl, c, std::nullopt, 0);
            expect(o, rep.witness.has_value(),
                   "no witness (colors " + std::to_string(colors) + ", seed " +
                       std::to_string(seed) + ")");
            if (rep.witness)
                expect(o, verify_witness(pl, rep.original, *rep.witness),
                       "witness fails re-verification in the original coloring");
            expect(o, rep.chain_ok, "refinement chain broken");
            expect(o, refines(rep.original, rep.coarsened), "original does not refine coarsened");
            expect(o, Rational(static_cast<std::int64_t>(rep.k)) <= k_cap,
                   "k exceeds 10.1*ceil(sqrt(q)) + 1");
            ++runs;
        }
    }
    double elapsed = seconds_since(start);
    expect(o, elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s >= 60s");
    o.note += " (" + std::to_string(runs) + " runs in " + std::to_string(elapsed) + "s)";
    return o;
}

Outcome criterion_9_pipeline() {
    // As stated: q = 101. 3 is a quadratic non-residue mod 101 (101 = 5 mod
    // 12), so F_101^2 contains no unit equilateral triangle at all, no
    // coloring of it can have a rainbow one, and theorem_pipeline correctly
    // refuses with NoTriangles. The criterion is recorded as failed; the
    // identical protocol at q = 109 (same ceil(sqrt(q)) = 11, 3 a square)
    // exercises everything the criterion intended.
    Outcome o;
    try {
        o = pipeline_protocol(101, 11);
    } catch (const Error& e) {
        o.pass = false;
        o.note = std::string("unattainable as specified: ") + e.what() +
                 "; chi(3) = -1 in F_101, the plane has no unit equilateral triangles";
    }
    Outcome supplement = pipeline_protocol(109, 11);
    o.note += supplement.pass
                  ? "; supplementary q=109 protocol: PASS" + supplement.note
                  : "; supplementary q=109 protocol FAILED - " + supplement.note;
    o.pass = o.pass && supplement.pass;
    return o;
}

Outcome criterion_10_vinh() {
    Outcome o;
    Field f = Field::make(101, 1);
    Plane pl(f);
    VinhOptions opts{1016, 20, 0};
    Rational max_ratio(0);
    for (const VinhRecord& rec : run_vinh(pl, opts))
        if (rec.stats.ratio > max_ratio) max_ratio = rec.stats.ratio;
    expect(o, max_ratio <= Rational(4), "max ratio " + max_ratio.str() + " > 4");

    std::vector<pidx> whole(pl.point_count());
    for (pidx i = 0; i < whole.size(); ++i) whole[i] = i;
    SubsetPairStats stats = subset_unit_pairs(pl, whole);
    expect(o,
           stats.ratio == Rational(static_cast<std::int64_t>(pl.circle().size()), 101),
           "whole-plane ratio is not circle_size/q");
    o.note += " (max ratio " + max_ratio.str() + " over 20 trials at n=1016)";
    return o;
}

Outcome criterion_11_determinism_and_parallelism() {
    Outcome o;
    auto start = Clock::now();

    // criterion-1-style report: circle listings
    for (std::uint64_t p : {13, 101}) {
        Plane pl(Field::make(p, 1));
        std::ostringstream rep;
        for (const Point& v : pl.circle().vecs) rep << pl.index_of(v) << "\n";
        std::ostringstream again;
        for (const Point& v : pl.circle().vecs) again << pl.index_of(v) << "\n";
        expect(o, rep.str() == again.str(), "circle report not stable");
    }

    // criterion-4-style: enumerated counts across thread counts
    for (std::uint64_t p : {11, 13}) {
        Plane pl(Field::make(p, 1));
        expect(o, pl.count_triangles_enumerated(1) == pl.count_triangles_enumerated(4),
               "triangle count differs across thread counts");
    }

    // criterion-6-style: rendered rainbow reports across thread counts
    for (std::uint64_t q : {11, 13, 17, 101}) {
        Field f = Field::make(q, 1);
        Plane pl(f);
        Coloring c = generate(f, {GeneratorKind::degenerate_example, 0, 0});
        std::string r1 = render_rainbow_report(find_rainbow(pl, c, SearchMode::count_all, 1),
                                               ReportFormat::text);
        std::string r4 = render_rainbow_report(find_rainbow(pl, c, SearchMode::count_all, 4),
                                               ReportFormat::text);
        expect(o, r1 == r4, "rainbow report differs across thread counts at q=" + std::to_string(q));
    }

    // criterion-9-style: rendered pipeline reports across thread counts
    // (q = 109: the plane criterion 9's protocol actually runs on)
    {
        Field f = Field::make(109, 1);
        Plane pl(f);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            Coloring c = generate(f, {GeneratorKind::fair_random, 50, seed});
            std::string r1 = render_pipeline_report(theorem_pipeline(pl, c, std::nullopt, 1),
                                                    ReportFormat::text);
            std::string r4 = render_pipeline_report(theorem_pipeline(pl, c, std::nullopt, 4),
                                                    ReportFormat::text);
            expect(o, r1 == r4, "pipeline report differs across thread counts");
        }
    }

    // q = 503: 3 is a square there (oracle-checked), 4-thread enumeration
    Field f503 = Field::make(503, 1);
    Plane pl503(f503);
    expect(o, f503.chi(3) == 1, "chi(3) != 1 at q=503");
    expect(o, pl503.triangles_exist(), "no sqrt3 at q=503");
    fe s3 = *pl503.sqrt3();
    expect(o, f503.mul(s3, s3) == 3, "sqrt3 does not square to 3 at q=503");
    {
        // the identity count and the enumeration share the circle, so check
        // the circle itself against the O(q^2) scan here
        std::vector<pidx> got;
        for (const Point& v : pl503.circle().vecs) got.push_back(pl503.index_of(v));
        expect(o, got == oracle::circle_brute(f503), "circle oracle mismatch at q=503");
    }

    auto t4_start = Clock::now();
    std::uint64_t count4 = pl503.count_triangles_enumerated(4);
    double t4 = seconds_since(t4_start);
    auto t1_start = Clock::now();
    std::uint64_t count1 = pl503.count_triangles_enumerated(1);
    double t1 = seconds_since(t1_start);
    expect(o, count1 == count4, "q=503 counts differ across thread counts");
    expect(o, count4 == pl503.triangle_count(), "q=503 enumerated count != identity count");
    expect(o, t4 < 30.0, "q=503 4-thread run took " + std::to_string(t4) + "s >= 30s");

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  " (q=503: %llu triangles, 1-thread %.2fs, 4-thread %.2fs, speedup %.2fx"
                  " - reported, not gated)",
                  static_cast<unsigned long long>(count4), t1, t4, t1 / (t4 > 0 ? t4 : 1));
    o.note += buf;
    (void)start;
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "circle oracle equivalence", criterion_1_circle_oracle},
        {2, "pair-count ratio within 2/q", criterion_2_pair_ratio},
        {3, "apex exactness and triangle-free fields", criterion_3_apex_exactness},
        {4, "triangle-count identity and enumeration oracle", criterion_4_triangle_identity},
        {5, "size-2 constructive finder", criterion_5_size2},
        {6, "degenerate example has no rainbow triangle", criterion_6_degenerate_example},
        {7, "greedy fairify invariants", criterion_7_greedy_fairify},
        {8, "coarsen packing invariants", criterion_8_coarsen},
        {9, "theorem pipeline at q=101", criterion_9_pipeline},
        {10, "vinh bound empirics", criterion_10_vinh},
        {11, "determinism and parallelism", criterion_11_determinism_and_parallelism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        double elapsed = seconds_since(start);
        std::printf("[%s] criterion %2d: %s [%.2fs]%s%s\n", o.pass ? "PASS" : "FAIL",
                    c.id, c.name, elapsed, o.note.empty() ? "" : " -", o.note.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed (criterion 9 is unattainable as specified: "
                    "F_101^2 has no unit equilateral triangles; its protocol is run "
                    "at q=109 instead, see the line above)\n",
                    failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
