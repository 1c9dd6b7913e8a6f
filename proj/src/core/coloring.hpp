#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rtri {

// Total coloring of the ground set [0, s): every element carries exactly one
// color id in [0, color_bound). Empty ids are permitted in the range; the
// class list covers the nonempty ones, sorted by (size descending, id
// ascending).
class Coloring {
public:
    Coloring(std::uint64_t ground_size, std::vector<std::uint32_t> assignment,
             std::uint32_t color_bound);

    // bound inferred as max id + 1
    static Coloring from_assignment(std::vector<std::uint32_t> assignment);

    std::uint64_t ground_size() const { return ground_; }
    std::uint32_t color_bound() const { return bound_; }
    std::uint32_t color_of(std::uint64_t elem) const { return colors_[elem]; }
    const std::vector<std::uint32_t>& assignment() const { return colors_; }

    std::size_t class_count() const { return classes_.size(); }

    // (color id, size), size descending then id ascending
    const std::vector<std::pair<std::uint32_t, std::uint64_t>>& sorted_classes() const {
        return classes_;
    }

    std::vector<std::uint64_t> class_size_profile() const;
    std::vector<std::uint64_t> members_of(std::uint32_t color) const;

    bool operator==(const Coloring& o) const {
        return ground_ == o.ground_ && bound_ == o.bound_ && colors_ == o.colors_;
    }

private:
    std::uint64_t ground_;
    std::uint32_t bound_;
    std::vector<std::uint32_t> colors_;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> classes_;
};

struct FairnessParams {
    Rational lower{1, 10};
    Rational upper{10};
    std::optional<Rational> n; // reference size, default s / class count
};

struct FairnessResult {
    bool fair = false;
    Rational n;
    // smallest violating class (ties by id) when not fair
    std::optional<std::pair<std::uint32_t, std::uint64_t>> violating;
};

FairnessResult is_fair(const Coloring& c, const FairnessParams& params = {});

// every class of `fine` contained in a class of `coarse`
bool refines(const Coloring& fine, const Coloring& coarse);

struct MergeStep {
    std::uint32_t kept;      // representative id of the surviving class
    std::uint32_t absorbed;  // representative id of the class merged into it
    std::uint64_t kept_size;
    std::uint64_t absorbed_size;
    std::uint64_t max_size;  // the `a` the check ran against
};

struct FairifyResult {
    Coloring coloring;
    std::vector<MergeStep> steps;
    std::uint64_t t = 0; // final class count
};

// Repeatedly merges the two smallest classes until every size lies in
// [0.1a, 10a] for a = current max size. Output ids are 0..t-1 in
// (size descending, representative ascending) order.
FairifyResult greedy_fairify(const Coloring& c);

enum class CoarsenBranch { identity, clean, leftover7, fallback_merge };

const char* coarsen_branch_name(CoarsenBranch b);

struct CoarsenTrace {
    Rational m;   // s / t
    Rational ell; // t / u
    CoarsenBranch branch = CoarsenBranch::identity;
    std::uint64_t k = 0;
    std::vector<std::vector<std::uint32_t>> groups; // input class ids per output group
    std::vector<std::uint64_t> group_sizes;
};

struct CoarsenResult {
    Coloring coloring;
    CoarsenTrace trace;
};

// Greedy packing of classes (largest first) into groups capped at 10*m*l,
// with the 7*m*l re-pack for the leftover tail and a final merge whenever the
// trailing group stays under 0.1*m*l. Identity when t <= u. Output ids are
// group construction order.
CoarsenResult coarsen(const Coloring& c, Rational u);

} // namespace rtri
