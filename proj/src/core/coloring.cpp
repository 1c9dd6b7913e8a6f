#include "coloring.hpp"

#include <algorithm>

#include "errors.hpp"

namespace rtri {

namespace {

bool class_order(const std::pair<std::uint32_t, std::uint64_t>& a,
                 const std::pair<std::uint32_t, std::uint64_t>& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
}

} // namespace

Coloring::Coloring(std::uint64_t ground_size, std::vector<std::uint32_t> assignment,
                   std::uint32_t color_bound)
    : ground_(ground_size), bound_(color_bound), colors_(std::move(assignment)) {
    if (colors_.size() != ground_)
        fail(Status::bad_argument, "assignment length differs from ground size");
    std::vector<std::uint64_t> sizes(bound_, 0);
    for (std::uint32_t c : colors_) {
        if (c >= bound_) fail(Status::bad_argument, "color id exceeds declared bound");
        ++sizes[c];
    }
    for (std::uint32_t id = 0; id < bound_; ++id)
        if (sizes[id] > 0) classes_.emplace_back(id, sizes[id]);
    std::sort(classes_.begin(), classes_.end(), class_order);
}

Coloring Coloring::from_assignment(std::vector<std::uint32_t> assignment) {
    std::uint32_t bound = 0;
    for (std::uint32_t c : assignment) bound = std::max(bound, c + 1);
    std::uint64_t n = assignment.size();
    return Coloring(n, std::move(assignment), bound);
}

std::vector<std::uint64_t> Coloring::class_size_profile() const {
    std::vector<std::uint64_t> out;
    out.reserve(classes_.size());
    for (const auto& [id, size] : classes_) out.push_back(size);
    return out;
}

std::vector<std::uint64_t> Coloring::members_of(std::uint32_t color) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 0; e < ground_; ++e)
        if (colors_[e] == color) out.push_back(e);
    return out;
}

FairnessResult is_fair(const Coloring& c, const FairnessParams& params) {
    if (c.class_count() == 0) fail(Status::empty_coloring, "coloring has no classes");
    FairnessResult res;
    res.n = params.n ? *params.n
                     : Rational(static_cast<std::int64_t>(c.ground_size()),
                                static_cast<std::int64_t>(c.class_count()));
    const Rational lo = params.lower * res.n;
    const Rational hi = params.upper * res.n;
    res.fair = true;
    for (const auto& [id, size] : c.sorted_classes()) {
        Rational sz(static_cast<std::int64_t>(size));
        if (sz < lo || sz > hi) {
            res.fair = false;
            if (!res.violating || size < res.violating->second ||
                (size == res.violating->second && id < res.violating->first))
                res.violating = {id, size};
        }
    }
    return res;
}

bool refines(const Coloring& fine, const Coloring& coarse) {
    if (fine.ground_size() != coarse.ground_size())
        fail(Status::ground_set_mismatch, "colorings cover different ground sets");
    std::vector<std::int64_t> image(fine.color_bound(), -1);
    for (std::uint64_t e = 0; e < fine.ground_size(); ++e) {
        std::uint32_t fc = fine.color_of(e);
        std::int64_t cc = coarse.color_of(e);
        if (image[fc] == -1)
            image[fc] = cc;
        else if (image[fc] != cc)
            return false;
    }
    return true;
}

FairifyResult greedy_fairify(const Coloring& c) {
    if (c.class_count() == 0) fail(Status::empty_coloring, "coloring has no classes");

    // (id, size) kept sorted by (size desc, id asc); merges take the last two
    std::vector<std::pair<std::uint32_t, std::uint64_t>> entries = c.sorted_classes();
    std::vector<std::int64_t> merged_into(c.color_bound(), -1);
    std::vector<MergeStep> steps;

    for (;;) {
        const std::uint64_t a = entries.front().second;
        const std::uint64_t smallest = entries.back().second;
        if (10 * smallest >= a) break; // all sizes in [0.1a, 10a]
        auto absorbed = entries.back();
        entries.pop_back();
        auto kept = entries.back();
        entries.pop_back();
        steps.push_back({kept.first, absorbed.first, kept.second, absorbed.second, a});
        merged_into[absorbed.first] = kept.first;
        std::pair<std::uint32_t, std::uint64_t> merged{kept.first, kept.second + absorbed.second};
        entries.insert(std::lower_bound(entries.begin(), entries.end(), merged, class_order),
                       merged);
    }

    // resolve representative chains, then relabel by final sorted order
    std::vector<std::uint32_t> rep(c.color_bound());
    for (std::uint32_t id = 0; id < c.color_bound(); ++id) {
        std::uint32_t r = id;
        while (merged_into[r] != -1) r = static_cast<std::uint32_t>(merged_into[r]);
        rep[id] = r;
    }
    std::vector<std::uint32_t> new_id(c.color_bound(), 0);
    for (std::size_t i = 0; i < entries.size(); ++i)
        new_id[entries[i].first] = static_cast<std::uint32_t>(i);

    std::vector<std::uint32_t> assignment(c.ground_size());
    for (std::uint64_t e = 0; e < c.ground_size(); ++e)
        assignment[e] = new_id[rep[c.color_of(e)]];

    FairifyResult out{
        Coloring(c.ground_size(), std::move(assignment),
                 static_cast<std::uint32_t>(entries.size())),
        std::move(steps), entries.size()};
    return out;
}

const char* coarsen_branch_name(CoarsenBranch b) {
    switch (b) {
        case CoarsenBranch::identity: return "identity";
        case CoarsenBranch::clean: return "clean";
        case CoarsenBranch::leftover7: return "leftover-7ml";
        case CoarsenBranch::fallback_merge: return "fallback-merge";
    }
    return "unknown";
}

CoarsenResult coarsen(const Coloring& c, Rational u) {
    if (c.class_count() == 0) fail(Status::empty_coloring, "coloring has no classes");
    if (u.num <= 0) fail(Status::nonpositive_u, "u must be positive");

    const std::int64_t s = static_cast<std::int64_t>(c.ground_size());
    const std::int64_t t = static_cast<std::int64_t>(c.class_count());

    CoarsenTrace trace;
    trace.m = Rational(s, t);
    trace.ell = Rational(t) / u;

    if (Rational(t) <= u) {
        trace.branch = CoarsenBranch::identity;
        trace.k = static_cast<std::uint64_t>(t);
        for (const auto& [id, size] : c.sorted_classes()) {
            trace.groups.push_back({id});
            trace.group_sizes.push_back(size);
        }
        return {c, std::move(trace)};
    }

    const Rational ml = trace.m * trace.ell; // = s/u
    const Rational cap10 = Rational(10) * ml;
    const Rational bar = ml / Rational(10);
    const Rational cap7 = Rational(7) * ml;

    const auto& classes = c.sorted_classes();

    // greedy packing, largest classes first
    std::vector<std::vector<std::uint32_t>> groups;
    std::vector<std::uint64_t> group_sizes;
    std::vector<std::uint32_t> cur;
    std::uint64_t cur_size = 0;
    for (const auto& [id, size] : classes) {
        if (!cur.empty() && Rational(static_cast<std::int64_t>(cur_size + size)) > cap10) {
            groups.push_back(std::move(cur));
            group_sizes.push_back(cur_size);
            cur.clear();
            cur_size = 0;
        }
        cur.push_back(id);
        cur_size += size;
    }
    if (!cur.empty()) {
        groups.push_back(std::move(cur));
        group_sizes.push_back(cur_size);
    }

    // k' = last group with size >= 0.1*m*l
    std::size_t kprime = groups.size();
    while (kprime > 0 &&
           Rational(static_cast<std::int64_t>(group_sizes[kprime - 1])) < bar)
        --kprime;

    if (kprime == groups.size()) {
        trace.branch = CoarsenBranch::clean;
    } else if (kprime == 0) {
        // everything is below the bar (possible only for u < 0.1): one group
        std::vector<std::uint32_t> all;
        for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
        std::uint64_t total = 0;
        for (auto gs : group_sizes) total += gs;
        groups.assign(1, std::move(all));
        group_sizes.assign(1, total);
        trace.branch = CoarsenBranch::fallback_merge;
    } else {
        // re-pack group k' at the 7*m*l threshold; everything after it and
        // the unpacked remainder form the final group
        std::vector<std::uint32_t> repacked, remainder;
        std::uint64_t repacked_size = 0, remainder_size = 0;
        auto size_of = [&](std::uint32_t id) {
            for (const auto& [cid, csz] : classes)
                if (cid == id) return csz;
            fail(Status::internal, "class id lost during packing");
        };
        for (std::uint32_t id : groups[kprime - 1]) {
            std::uint64_t sz = size_of(id);
            if (remainder.empty() &&
                Rational(static_cast<std::int64_t>(repacked_size + sz)) <= cap7) {
                repacked.push_back(id);
                repacked_size += sz;
            } else {
                remainder.push_back(id);
                remainder_size += sz;
            }
        }
        for (std::size_t g = kprime; g < groups.size(); ++g) {
            remainder.insert(remainder.end(), groups[g].begin(), groups[g].end());
            remainder_size += group_sizes[g];
        }
        groups.resize(kprime - 1);
        group_sizes.resize(kprime - 1);
        trace.branch = CoarsenBranch::leftover7;
        if (!repacked.empty()) {
            groups.push_back(std::move(repacked));
            group_sizes.push_back(repacked_size);
        }
        if (Rational(static_cast<std::int64_t>(remainder_size)) < bar && !groups.empty()) {
            groups.back().insert(groups.back().end(), remainder.begin(), remainder.end());
            group_sizes.back() += remainder_size;
            trace.branch = CoarsenBranch::fallback_merge;
        } else {
            groups.push_back(std::move(remainder));
            group_sizes.push_back(remainder_size);
        }
    }

    trace.k = groups.size();
    trace.groups = groups;
    trace.group_sizes = group_sizes;

    std::vector<std::uint32_t> group_of(c.color_bound(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::uint32_t id : groups[g]) group_of[id] = static_cast<std::uint32_t>(g);
    std::vector<std::uint32_t> assignment(c.ground_size());
    for (std::uint64_t e = 0; e < c.ground_size(); ++e)
        assignment[e] = group_of[c.color_of(e)];

    return {Coloring(c.ground_size(), std::move(assignment),
                     static_cast<std::uint32_t>(groups.size())),
            std::move(trace)};
}

} // namespace rtri
