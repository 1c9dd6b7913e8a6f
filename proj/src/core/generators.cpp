#include "generators.hpp"

#include <algorithm>

namespace rtri {

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "uniform-random") return GeneratorKind::uniform_random;
    if (name == "fair-random") return GeneratorKind::fair_random;
    if (name == "max2") return GeneratorKind::max2;
    if (name == "degenerate-example") return GeneratorKind::degenerate_example;
    if (name == "monochrome") return GeneratorKind::monochrome;
    if (name == "all-distinct") return GeneratorKind::all_distinct;
    fail(Status::bad_argument, "unknown generator kind: " + name);
}

const char* generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::uniform_random: return "uniform-random";
        case GeneratorKind::fair_random: return "fair-random";
        case GeneratorKind::max2: return "max2";
        case GeneratorKind::degenerate_example: return "degenerate-example";
        case GeneratorKind::monochrome: return "monochrome";
        case GeneratorKind::all_distinct: return "all-distinct";
    }
    fail(Status::bad_argument, "unknown generator kind");
}

std::vector<std::uint64_t> fair_sizes(std::uint64_t s, std::uint64_t classes, Rng& rng) {
    if (classes == 0) fail(Status::bad_color_count, "color count must be positive");
    // integer bounds equivalent to size in [0.1*s/c, 10*s/c]
    using u128 = unsigned __int128;
    const std::uint64_t lo = static_cast<std::uint64_t>(
        (static_cast<u128>(s) + 10 * static_cast<u128>(classes) - 1) / (10 * static_cast<u128>(classes)));
    std::uint64_t hi = s; // sizes never exceed s
    if (10 * static_cast<u128>(s) / classes < s)
        hi = static_cast<std::uint64_t>(10 * static_cast<u128>(s) / classes);
    if (static_cast<u128>(lo) * classes > s || static_cast<u128>(hi) * classes < s || lo > hi)
        fail(Status::bad_color_count,
             "no fair profile with " + std::to_string(classes) + " classes over " +
                 std::to_string(s) + " elements");

    std::vector<std::uint64_t> sizes(classes, s / classes);
    for (std::uint64_t i = 0; i < s % classes; ++i) ++sizes[i];

    // seeded jitter preserving the sum and the bounds exactly
    for (std::uint64_t step = 0; step < 4 * classes; ++step) {
        std::uint64_t i = rng.below(classes);
        std::uint64_t j = rng.below(classes);
        if (i == j) continue;
        std::uint64_t room = std::min(sizes[i] - lo, hi - sizes[j]);
        if (room == 0) continue;
        std::uint64_t delta = rng.below(room + 1);
        sizes[i] -= delta;
        sizes[j] += delta;
    }
    return sizes;
}

Coloring coloring_from_sizes(const std::vector<std::uint64_t>& sizes, Rng* rng) {
    std::uint64_t s = 0;
    for (std::uint64_t sz : sizes) {
        if (sz == 0) fail(Status::bad_argument, "empty class in size profile");
        s += sz;
    }
    std::vector<std::uint64_t> order(s);
    for (std::uint64_t i = 0; i < s; ++i) order[i] = i;
    if (rng) rng->shuffle(order);
    std::vector<std::uint32_t> assignment(s);
    std::uint64_t at = 0;
    for (std::uint32_t color = 0; color < sizes.size(); ++color)
        for (std::uint64_t n = 0; n < sizes[color]; ++n) assignment[order[at++]] = color;
    return Coloring(s, std::move(assignment), static_cast<std::uint32_t>(sizes.size()));
}

namespace {

Coloring generate_degenerate(const Field& field) {
    if (field.q() < 3) fail(Status::field_too_small, "degenerate example needs q >= 3");
    if (field.k() != 1)
        fail(Status::bad_argument, "degenerate example is defined over prime fields (k = 1)");
    const std::uint64_t q = field.q();
    const std::uint64_t half = q / 2;

    // axis points (2i, 0): the non-blue singletons
    std::vector<fe> axis(half);
    for (std::uint64_t i = 1; i <= half; ++i) axis[i - 1] = field.from_int(2 * i);

    // pairwise distances among them must avoid 1: (2(i-j))^2 = 1 has no
    // solution in the index range
    for (std::uint64_t i = 0; i < half; ++i)
        for (std::uint64_t j = i + 1; j < half; ++j) {
            fe d = field.sub(axis[i], axis[j]);
            if (field.mul(d, d) == 1)
                fail(Status::internal, "degenerate example produced a unit pair");
        }

    std::vector<std::uint32_t> assignment(q * q, 0); // blue = 0
    for (std::uint64_t i = 1; i <= half; ++i)
        assignment[axis[i - 1] * q + 0] = static_cast<std::uint32_t>(i);
    return Coloring(q * q, std::move(assignment), static_cast<std::uint32_t>(half + 1));
}

} // namespace

Coloring generate(const Field& field, const GeneratorSpec& spec) {
    const std::uint64_t s = field.q() * field.q();
    switch (spec.kind) {
        case GeneratorKind::monochrome:
            return Coloring(s, std::vector<std::uint32_t>(s, 0), 1);

        case GeneratorKind::all_distinct: {
            if (s > 0xFFFFFFFFULL)
                fail(Status::bad_argument, "all-distinct coloring needs q^2 < 2^32");
            std::vector<std::uint32_t> assignment(s);
            for (std::uint64_t e = 0; e < s; ++e) assignment[e] = static_cast<std::uint32_t>(e);
            return Coloring(s, std::move(assignment), static_cast<std::uint32_t>(s));
        }

        case GeneratorKind::degenerate_example:
            return generate_degenerate(field);

        case GeneratorKind::max2: {
            Rng rng = Rng::substream(spec.seed, 0);
            std::vector<std::uint64_t> order(s);
            for (std::uint64_t i = 0; i < s; ++i) order[i] = i;
            rng.shuffle(order);
            std::vector<std::uint32_t> assignment(s);
            for (std::uint64_t i = 0; i < s; ++i)
                assignment[order[i]] = static_cast<std::uint32_t>(i / 2);
            return Coloring(s, std::move(assignment), static_cast<std::uint32_t>((s + 1) / 2));
        }

        case GeneratorKind::uniform_random: {
            if (spec.color_count == 0 || spec.color_count > s)
                fail(Status::bad_color_count, "color count must be in [1, q^2]");
            Rng rng = Rng::substream(spec.seed, 0);
            std::vector<std::uint32_t> assignment(s);
            for (std::uint64_t e = 0; e < s; ++e)
                assignment[e] = static_cast<std::uint32_t>(rng.below(spec.color_count));
            return Coloring(s, std::move(assignment),
                            static_cast<std::uint32_t>(spec.color_count));
        }

        case GeneratorKind::fair_random: {
            if (spec.color_count == 0 || spec.color_count > s)
                fail(Status::bad_color_count, "color count must be in [1, q^2]");
            Rng rng = Rng::substream(spec.seed, 0);
            auto sizes = fair_sizes(s, spec.color_count, rng);
            return coloring_from_sizes(sizes, &rng);
        }
    }
    fail(Status::bad_argument, "unknown generator kind");
}

} // namespace rtri
