#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coloring.hpp"
#include "geometry.hpp"

namespace rtri {

struct WitnessTriangle {
    std::array<pidx, 3> vertices;       // ascending point indices
    std::array<std::uint32_t, 3> colors; // under the coloring the report names
};

struct RainbowReport {
    std::uint64_t total_triangles = 0;
    std::uint64_t rainbow_count = 0; // in first-witness mode: 1 if found, else 0
    std::uint64_t mono_pairs = 0;    // T: same-colored unordered unit pairs
    std::optional<WitnessTriangle> witness; // canonically least rainbow triangle
};

enum class SearchMode { count_all, first_witness };

// Unit-pair driven search over the whole plane. count_all deduplicates by
// ascending index triple and reports exact counts; first_witness stops at the
// canonically least witness (counts still exact: the triangle total comes
// from the pair identity and T from a dedicated pair scan).
RainbowReport find_rainbow(const Plane& plane, const Coloring& c, SearchMode mode,
                           int threads = 1);

// Constructive finder for colorings with class sizes <= 2: checks the first
// triangle, and if it has a repeated color, one of the two re-apexed
// candidate triangles is rainbow. Always returns a verified witness.
WitnessTriangle find_rainbow_size2(const Plane& plane, const Coloring& c);

std::uint64_t mono_unit_pairs(const Plane& plane, const Coloring& c, int threads = 1);

struct SubsetPairStats {
    std::uint64_t subset_size = 0;
    std::uint64_t ordered_pairs = 0;
    Rational ratio; // q * count / n^2
};

// Exact unit-pair count inside an explicit point set. This samples the
// quantity behind u_n; it does not maximize over subsets.
SubsetPairStats subset_unit_pairs(const Plane& plane, const std::vector<pidx>& points);

struct PipelineReport {
    explicit PipelineReport(const Coloring& c) : original(c), fairified(c), coarsened(c) {}

    Coloring original;
    Coloring fairified;
    Coloring coarsened;
    std::uint64_t t = 0;
    std::uint64_t k = 0;
    Rational u;
    std::vector<MergeStep> merge_steps;
    CoarsenTrace coarsen_trace;
    RainbowReport search;                    // stage-3 run on the coarsened coloring
    std::optional<WitnessTriangle> witness;  // re-colored and verified in the original
    bool chain_ok = false;                   // original refines fairified refines coarsened
    bool k_bound_ok = false;                 // k <= 10.1*u + 1
    Rational max_class_fraction;             // largest original class / q^2
    bool hypothesis_suspect = false;         // no witness and a majority class
};

// The fairify -> coarsen -> first-witness search composition, with the
// witness mapped back to the original coloring. u defaults to
// 10 * ceil(sqrt(q)), which steers the packing (k near u/10) to about
// sqrt(q) groups.
PipelineReport theorem_pipeline(const Plane& plane, const Coloring& c,
                                std::optional<Rational> u = std::nullopt, int threads = 1);

struct BoundCheckReport {
    std::uint64_t mono_pairs = 0;
    std::uint64_t total_triangles = 0;
    std::uint64_t rainbow_count = 0;
    bool bound_holds = false; // rainbow_count > 0 or 2*T >= total
};

// Pigeonhole check: with no rainbow triangle every triangle owns a
// same-colored edge and every edge lies in exactly two triangles.
BoundCheckReport no_rainbow_bound_check(const Plane& plane, const Coloring& c,
                                        int threads = 1);

// re-verification from raw data: distinct vertices, pairwise distance 1,
// pairwise distinct colors
bool verify_witness(const Plane& plane, const Coloring& c, const WitnessTriangle& w);

} // namespace rtri
