#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "field.hpp"
#include "rng.hpp"

namespace rtri {

enum class GeneratorKind {
    uniform_random,
    fair_random,
    max2,
    degenerate_example,
    monochrome,
    all_distinct,
};

GeneratorKind parse_generator_kind(const std::string& name); // BadArgument on unknown
const char* generator_kind_name(GeneratorKind kind);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::uniform_random;
    std::uint64_t color_count = 1; // uniform-random and fair-random only
    std::uint64_t seed = 0;
};

// Deterministic colorings of F_q^2: byte-identical output for a fixed
// (field, spec) on any platform.
Coloring generate(const Field& field, const GeneratorSpec& spec);

// Class sizes for an abstract fair coloring: `classes` integers, each within
// [0.1*s/classes, 10*s/classes], summing to s. Shared by the fair-random
// generator and the coloring test suites.
std::vector<std::uint64_t> fair_sizes(std::uint64_t s, std::uint64_t classes, Rng& rng);

// Coloring over [0, s) realizing the given class sizes; assignment order is
// a seeded shuffle when rng is provided, contiguous slices otherwise.
Coloring coloring_from_sizes(const std::vector<std::uint64_t>& sizes, Rng* rng = nullptr);

} // namespace rtri
