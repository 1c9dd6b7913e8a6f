#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rainbow.hpp"

namespace rtri {

// q -> (p, k); rejects values that are not powers of a single prime >= 5
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

enum class SweepTask { counts, pipeline, vinh };

SweepTask parse_sweep_task(const std::string& name);
const char* sweep_task_name(SweepTask t);

struct SweepOptions {
    std::vector<std::uint64_t> q_list;
    std::vector<SweepTask> tasks;
    std::uint64_t seed = 0;
    std::uint64_t color_count = 0; // pipeline coloring; 0 = default q
    int threads = 1;
};

struct ExperimentRecord {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned k_field = 0;
    std::uint64_t circle_size = 0;
    std::uint64_t ordered_pairs = 0;
    std::uint64_t triangles = 0;
    std::uint64_t coloring_seed = 0;
    std::uint64_t color_count = 0;
    std::uint64_t pipeline_t = 0;
    std::uint64_t pipeline_k = 0;
    bool rainbow_found = false;
    std::uint64_t elapsed_millis = 0;
};

extern const char* const sweep_csv_header;

std::vector<ExperimentRecord> run_sweep(const SweepOptions& opts);
std::string sweep_csv(const SweepOptions& opts);

struct VinhOptions {
    std::uint64_t subset_size = 0;
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
};

struct VinhRecord {
    std::uint32_t trial = 0;
    SubsetPairStats stats;
};

extern const char* const vinh_csv_header;

// ceil(q^{3/2}), the subset-size scale of the Vinh bound's hypothesis
std::uint64_t vinh_default_subset(std::uint64_t q);

// Seeded uniform subsets (partial Fisher-Yates over point indices, one RNG
// substream per trial); exact counts and exact ratios.
std::vector<VinhRecord> run_vinh(const Plane& plane, const VinhOptions& opts);
std::string vinh_csv(const Plane& plane, const VinhOptions& opts);

} // namespace rtri
