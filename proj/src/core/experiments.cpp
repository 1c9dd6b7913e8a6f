#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "rng.hpp"

namespace rtri {

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) fail(Status::not_prime, "q must exceed 1");
    if (is_prime_u64(q)) {
        if (q < 5) fail(Status::char_too_small, "q = " + std::to_string(q) + " has characteristic < 5");
        return {q, 1};
    }
    // q = p^k: the candidate p is the integer k-th root for some k >= 2
    for (unsigned k = 2; k < 64; ++k) {
        std::uint64_t p = static_cast<std::uint64_t>(
            std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
        for (std::uint64_t cand = p > 2 ? p - 2 : 2; cand <= p + 2; ++cand) {
            if (cand < 2) continue;
            std::uint64_t pw = 1;
            bool overflow = false;
            for (unsigned i = 0; i < k; ++i) {
                if (pw > q / cand) { overflow = true; break; }
                pw *= cand;
            }
            if (!overflow && pw == q && is_prime_u64(cand)) {
                if (cand < 5)
                    fail(Status::char_too_small,
                         "q = " + std::to_string(q) + " has characteristic < 5");
                return {cand, k};
            }
        }
        if (p <= 2) break;
    }
    fail(Status::not_prime, "q = " + std::to_string(q) + " is not a prime power");
}

SweepTask parse_sweep_task(const std::string& name) {
    if (name == "counts") return SweepTask::counts;
    if (name == "pipeline") return SweepTask::pipeline;
    if (name == "vinh") return SweepTask::vinh;
    fail(Status::bad_argument, "unknown sweep task: " + name);
}

const char* sweep_task_name(SweepTask t) {
    switch (t) {
        case SweepTask::counts: return "counts";
        case SweepTask::pipeline: return "pipeline";
        case SweepTask::vinh: return "vinh";
    }
    return "unknown";
}

const char* const sweep_csv_header =
    "q,p,k_field,circle_size,ordered_pairs,triangles,coloring_seed,color_count,"
    "pipeline_t,pipeline_k,rainbow_found,elapsed_millis";

const char* const vinh_csv_header = "trial,n,unit_pairs,ratio_num,ratio_den";

std::uint64_t vinh_default_subset(std::uint64_t q) {
    return isqrt_ceil(q * q * q);
}

std::vector<ExperimentRecord> run_sweep(const SweepOptions& opts) {
    // rows ordered by (q, task); one row per cell, substream per row index
    std::vector<std::uint64_t> qs = opts.q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::vector<SweepTask> tasks = opts.tasks;
    std::sort(tasks.begin(), tasks.end());
    tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

    std::vector<ExperimentRecord> rows;
    std::uint64_t row_index = 0;
    for (std::uint64_t q : qs) {
        auto [p, k] = factor_prime_power(q);
        Field field = Field::make(p, k, nullptr, opts.seed);
        Plane plane(field);
        for (SweepTask task : tasks) {
            const auto start = std::chrono::steady_clock::now();
            ExperimentRecord rec;
            rec.q = q;
            rec.p = p;
            rec.k_field = k;
            rec.circle_size = plane.circle().size();
            rec.ordered_pairs = plane.ordered_unit_pairs();
            rec.triangles = plane.triangle_count();

            if (task == SweepTask::pipeline) {
                std::uint64_t colors = opts.color_count ? opts.color_count : q;
                std::uint64_t sub_seed =
                    Rng::substream(opts.seed, row_index).next();
                GeneratorSpec gspec{GeneratorKind::fair_random, colors, sub_seed};
                Coloring coloring = generate(field, gspec);
                rec.coloring_seed = sub_seed;
                rec.color_count = colors;
                if (plane.triangles_exist()) {
                    PipelineReport rep =
                        theorem_pipeline(plane, coloring, std::nullopt, opts.threads);
                    rec.pipeline_t = rep.t;
                    rec.pipeline_k = rep.k;
                    rec.rainbow_found = rep.witness.has_value();
                }
            } else if (task == SweepTask::vinh) {
                VinhOptions vopts;
                vopts.subset_size =
                    std::min<std::uint64_t>(plane.point_count(), vinh_default_subset(q));
                vopts.trials = 5;
                vopts.seed = Rng::substream(opts.seed, row_index).next();
                rec.coloring_seed = vopts.seed;
                run_vinh(plane, vopts);
            }

            const auto stop = std::chrono::steady_clock::now();
            rec.elapsed_millis = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
            rows.push_back(rec);
            ++row_index;
        }
    }
    return rows;
}

std::string sweep_csv(const SweepOptions& opts) {
    std::vector<ExperimentRecord> rows = run_sweep(opts);
    std::ostringstream os;
    os << sweep_csv_header << "\n";
    for (const ExperimentRecord& r : rows) {
        os << r.q << ',' << r.p << ',' << r.k_field << ',' << r.circle_size << ','
           << r.ordered_pairs << ',' << r.triangles << ',' << r.coloring_seed << ','
           << r.color_count << ',' << r.pipeline_t << ',' << r.pipeline_k << ','
           << (r.rainbow_found ? 1 : 0) << ',' << r.elapsed_millis << "\n";
    }
    return os.str();
}

std::vector<VinhRecord> run_vinh(const Plane& plane, const VinhOptions& opts) {
    if (opts.subset_size > plane.point_count())
        fail(Status::subset_too_large, "subset size exceeds q^2");
    std::vector<VinhRecord> out;
    for (std::uint32_t trial = 0; trial < opts.trials; ++trial) {
        Rng rng = Rng::substream(opts.seed, trial);
        std::vector<pidx> subset = rng.sample_indices(plane.point_count(), opts.subset_size);
        VinhRecord rec;
        rec.trial = trial;
        rec.stats = subset_unit_pairs(plane, subset);
        out.push_back(rec);
    }
    return out;
}

std::string vinh_csv(const Plane& plane, const VinhOptions& opts) {
    std::vector<VinhRecord> rows = run_vinh(plane, opts);
    std::ostringstream os;
    os << vinh_csv_header << "\n";
    for (const VinhRecord& r : rows)
        os << r.trial << ',' << r.stats.subset_size << ',' << r.stats.ordered_pairs << ','
           << r.stats.ratio.num << ',' << r.stats.ratio.den << "\n";
    return os.str();
}

} // namespace rtri
