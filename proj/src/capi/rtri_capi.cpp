#include "rtri.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "core/coloring.hpp"
#include "core/coloring_io.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/field.hpp"
#include "core/generators.hpp"
#include "core/geometry.hpp"
#include "core/rainbow.hpp"
#include "core/report_io.hpp"

using namespace rtri;

struct rtri_field {
    Field field;
    mutable std::once_flag plane_once;
    mutable std::unique_ptr<Plane> plane_ptr;

    explicit rtri_field(Field f) : field(std::move(f)) {}

    const Plane& plane() const {
        std::call_once(plane_once, [this] { plane_ptr = std::make_unique<Plane>(field); });
        return *plane_ptr;
    }
};

struct rtri_coloring {
    Coloring coloring;
};

struct rtri_report {
    // rainbow search, pipeline, bound check, or a bare witness (size2)
    std::variant<RainbowReport, PipelineReport, BoundCheckReport, WitnessTriangle> body;
};

namespace {

thread_local std::string g_last_error;

int map_status(Status s) {
    switch (s) {
        case Status::ok: return RTRI_OK;
        case Status::not_prime: return RTRI_E_NOT_PRIME;
        case Status::char_too_small: return RTRI_E_CHAR_TOO_SMALL;
        case Status::reducible_modulus: return RTRI_E_REDUCIBLE_MODULUS;
        case Status::division_by_zero: return RTRI_E_DIVISION_BY_ZERO;
        case Status::mixed_fields: return RTRI_E_MIXED_FIELDS;
        case Status::bad_argument: return RTRI_E_BAD_ARGUMENT;
        case Status::parse_error: return RTRI_E_PARSE;
        case Status::coverage_error: return RTRI_E_COVERAGE;
        case Status::field_mismatch: return RTRI_E_FIELD_MISMATCH;
        case Status::ground_set_mismatch: return RTRI_E_GROUND_SET_MISMATCH;
        case Status::empty_coloring: return RTRI_E_EMPTY_COLORING;
        case Status::nonpositive_u: return RTRI_E_NONPOSITIVE_U;
        case Status::incomplete_coloring: return RTRI_E_INCOMPLETE_COLORING;
        case Status::no_triangles: return RTRI_E_NO_TRIANGLES;
        case Status::class_too_large: return RTRI_E_CLASS_TOO_LARGE;
        case Status::not_unit_pair: return RTRI_E_NOT_UNIT_PAIR;
        case Status::invalid_s: return RTRI_E_INVALID_S;
        case Status::bad_color_count: return RTRI_E_BAD_COLOR_COUNT;
        case Status::field_too_small: return RTRI_E_FIELD_TOO_SMALL;
        case Status::subset_too_large: return RTRI_E_SUBSET_TOO_LARGE;
        case Status::io_error: return RTRI_E_IO;
        case Status::internal: return RTRI_E_INTERNAL;
    }
    return RTRI_E_INTERNAL;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return RTRI_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return RTRI_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RTRI_E_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) fail(Status::bad_argument, what);
}

Rational make_rational(int64_t num, int64_t den, const char* what) {
    if (den == 0) fail(Status::bad_argument, std::string(what) + ": zero denominator");
    return Rational(num, den);
}

ReportFormat to_format(int format) {
    if (format == 0) return ReportFormat::text;
    if (format == 1) return ReportFormat::json;
    fail(Status::bad_argument, "format must be 0 (text) or 1 (json)");
}

} // namespace

extern "C" {

const char* rtri_version(void) { return "1.0.0"; }

const char* rtri_status_name(int status) {
    switch (status) {
        case RTRI_OK: return "ok";
        case RTRI_E_NOT_PRIME: return "NotPrime";
        case RTRI_E_CHAR_TOO_SMALL: return "CharacteristicTooSmall";
        case RTRI_E_REDUCIBLE_MODULUS: return "ReducibleModulus";
        case RTRI_E_DIVISION_BY_ZERO: return "DivisionByZero";
        case RTRI_E_MIXED_FIELDS: return "MixedFields";
        case RTRI_E_BAD_ARGUMENT: return "BadArgument";
        case RTRI_E_PARSE: return "ParseError";
        case RTRI_E_COVERAGE: return "CoverageError";
        case RTRI_E_FIELD_MISMATCH: return "FieldMismatch";
        case RTRI_E_GROUND_SET_MISMATCH: return "GroundSetMismatch";
        case RTRI_E_EMPTY_COLORING: return "EmptyColoring";
        case RTRI_E_NONPOSITIVE_U: return "NonpositiveU";
        case RTRI_E_INCOMPLETE_COLORING: return "IncompleteColoring";
        case RTRI_E_NO_TRIANGLES: return "NoTriangles";
        case RTRI_E_CLASS_TOO_LARGE: return "ClassTooLarge";
        case RTRI_E_NOT_UNIT_PAIR: return "NotUnitPair";
        case RTRI_E_INVALID_S: return "InvalidS";
        case RTRI_E_BAD_COLOR_COUNT: return "BadColorCount";
        case RTRI_E_FIELD_TOO_SMALL: return "FieldTooSmall";
        case RTRI_E_SUBSET_TOO_LARGE: return "SubsetTooLarge";
        case RTRI_E_IO: return "IoError";
        case RTRI_E_INTERNAL: return "InternalError";
    }
    return "unknown";
}

const char* rtri_last_error(void) { return g_last_error.c_str(); }

void rtri_string_free(char* s) { std::free(s); }

/* ---- field ------------------------------------------------------------ */

int rtri_field_create(uint64_t p, uint32_t k, const uint64_t* modulus,
                      size_t modulus_len, uint64_t seed, rtri_field** out) {
    return guarded([&] {
        require(out != nullptr, "null output handle");
        std::vector<uint64_t> mod;
        if (modulus) mod.assign(modulus, modulus + modulus_len);
        Field f = Field::make(p, k, modulus ? &mod : nullptr, seed);
        *out = new rtri_field(std::move(f));
    });
}

void rtri_field_destroy(rtri_field* f) { delete f; }

uint64_t rtri_field_p(const rtri_field* f) { return f->field.p(); }
uint32_t rtri_field_k(const rtri_field* f) { return f->field.k(); }
uint64_t rtri_field_q(const rtri_field* f) { return f->field.q(); }

int rtri_field_modulus(const rtri_field* f, uint64_t* buf, size_t buf_len) {
    return guarded([&] {
        require(f && buf, "null argument");
        const auto& m = f->field.modulus();
        require(buf_len >= m.size(), "modulus buffer too small");
        std::copy(m.begin(), m.end(), buf);
    });
}

int rtri_field_header(const rtri_field* f, char** out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = dup_string(f->field.header_line());
    });
}

#define RTRI_BINOP(name, expr)                                              \
    int name(const rtri_field* f, uint64_t a, uint64_t b, uint64_t* out) {  \
        return guarded([&] {                                                \
            require(f && out, "null argument");                             \
            *out = (expr);                                                  \
        });                                                                 \
    }

RTRI_BINOP(rtri_field_add, f->field.add(a, b))
RTRI_BINOP(rtri_field_sub, f->field.sub(a, b))
RTRI_BINOP(rtri_field_mul, f->field.mul(a, b))
#undef RTRI_BINOP

int rtri_field_neg(const rtri_field* f, uint64_t a, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->field.neg(a);
    });
}

int rtri_field_inv(const rtri_field* f, uint64_t a, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->field.inv(a);
    });
}

int rtri_field_pow(const rtri_field* f, uint64_t a, uint64_t n, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->field.pow(a, n);
    });
}

int rtri_field_chi(const rtri_field* f, uint64_t e, int* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->field.chi(e);
    });
}

int rtri_field_sqrt(const rtri_field* f, uint64_t e, int* exists, uint64_t* r0,
                    uint64_t* r1) {
    return guarded([&] {
        require(f && exists && r0 && r1, "null argument");
        auto roots = f->field.sqrt(e);
        *exists = roots.has_value() ? 1 : 0;
        *r0 = roots ? roots->first : 0;
        *r1 = roots ? roots->second : 0;
    });
}

/* ---- plane geometry ---------------------------------------------------- */

int rtri_circle_size(const rtri_field* f, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->plane().circle().size();
    });
}

int rtri_circle_points(const rtri_field* f, uint64_t* buf, size_t buf_len,
                       size_t* written) {
    return guarded([&] {
        require(f && buf && written, "null argument");
        const Plane& pl = f->plane();
        require(buf_len >= pl.circle().size(), "circle buffer too small");
        size_t n = 0;
        for (const Point& v : pl.circle().vecs) buf[n++] = pl.index_of(v);
        *written = n;
    });
}

int rtri_distance(const rtri_field* f, uint64_t x_idx, uint64_t y_idx, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        const Plane& pl = f->plane();
        require(x_idx < pl.point_count() && y_idx < pl.point_count(),
                "point index out of range");
        *out = pl.distance(pl.point_at(x_idx), pl.point_at(y_idx));
    });
}

int rtri_ordered_unit_pairs(const rtri_field* f, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->plane().ordered_unit_pairs();
    });
}

int rtri_sqrt3(const rtri_field* f, int* exists, uint64_t* root) {
    return guarded([&] {
        require(f && exists && root, "null argument");
        auto s = f->plane().sqrt3();
        *exists = s.has_value() ? 1 : 0;
        *root = s.value_or(0);
    });
}

int rtri_triangles_exist(const rtri_field* f, int* exists) {
    return guarded([&] {
        require(f && exists, "null argument");
        *exists = f->plane().triangles_exist() ? 1 : 0;
    });
}

int rtri_triangle_count(const rtri_field* f, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->plane().triangle_count();
    });
}

int rtri_triangle_count_enumerated(const rtri_field* f, int threads, uint64_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = f->plane().count_triangles_enumerated(threads);
    });
}

int rtri_apexes(const rtri_field* f, uint64_t x_idx, uint64_t y_idx,
                uint64_t* apex0, uint64_t* apex1) {
    return guarded([&] {
        require(f && apex0 && apex1, "null argument");
        const Plane& pl = f->plane();
        require(x_idx < pl.point_count() && y_idx < pl.point_count(),
                "point index out of range");
        auto [a, b] = pl.apexes(pl.point_at(x_idx), pl.point_at(y_idx));
        *apex0 = pl.index_of(a);
        *apex1 = pl.index_of(b);
    });
}

/* ---- colorings --------------------------------------------------------- */

int rtri_coloring_create(uint64_t len, const uint32_t* assignment,
                         uint32_t color_bound, rtri_coloring** out) {
    return guarded([&] {
        require(assignment && out, "null argument");
        std::vector<uint32_t> a(assignment, assignment + len);
        *out = new rtri_coloring{Coloring(len, std::move(a), color_bound)};
    });
}

int rtri_coloring_generate(const rtri_field* f, const char* kind,
                           uint64_t color_count, uint64_t seed, rtri_coloring** out) {
    return guarded([&] {
        require(f && kind && out, "null argument");
        GeneratorSpec spec{parse_generator_kind(kind), color_count, seed};
        *out = new rtri_coloring{generate(f->field, spec)};
    });
}

int rtri_coloring_load(const char* path, rtri_field** field_out, rtri_coloring** out) {
    return guarded([&] {
        require(path && field_out && out, "null argument");
        auto [field, coloring] = load_coloring_file(path);
        *field_out = new rtri_field(std::move(field));
        *out = new rtri_coloring{std::move(coloring)};
    });
}

int rtri_coloring_save(const rtri_field* f, const rtri_coloring* c, const char* path) {
    return guarded([&] {
        require(f && c && path, "null argument");
        save_coloring_file(f->field, c->coloring, path);
    });
}

void rtri_coloring_destroy(rtri_coloring* c) { delete c; }

uint64_t rtri_coloring_ground_size(const rtri_coloring* c) {
    return c->coloring.ground_size();
}

uint32_t rtri_coloring_color_bound(const rtri_coloring* c) {
    return c->coloring.color_bound();
}

uint64_t rtri_coloring_class_count(const rtri_coloring* c) {
    return c->coloring.class_count();
}

int rtri_coloring_color_of(const rtri_coloring* c, uint64_t elem, uint32_t* out) {
    return guarded([&] {
        require(c && out, "null argument");
        require(elem < c->coloring.ground_size(), "element out of range");
        *out = c->coloring.color_of(elem);
    });
}

int rtri_coloring_profile(const rtri_coloring* c, uint64_t* buf, size_t buf_len,
                          size_t* written) {
    return guarded([&] {
        require(c && buf && written, "null argument");
        auto profile = c->coloring.class_size_profile();
        require(buf_len >= profile.size(), "profile buffer too small");
        std::copy(profile.begin(), profile.end(), buf);
        *written = profile.size();
    });
}

int rtri_coloring_is_fair(const rtri_coloring* c, int64_t lower_num, int64_t lower_den,
                          int64_t upper_num, int64_t upper_den, int64_t n_num,
                          int64_t n_den, int* fair, uint32_t* violating_class,
                          uint64_t* violating_size) {
    return guarded([&] {
        require(c && fair, "null argument");
        FairnessParams params;
        params.lower = make_rational(lower_num, lower_den, "lower bound");
        params.upper = make_rational(upper_num, upper_den, "upper bound");
        if (n_num != 0) params.n = make_rational(n_num, n_den, "reference size");
        FairnessResult res = is_fair(c->coloring, params);
        *fair = res.fair ? 1 : 0;
        if (!res.fair && res.violating) {
            if (violating_class) *violating_class = res.violating->first;
            if (violating_size) *violating_size = res.violating->second;
        }
    });
}

int rtri_refines(const rtri_coloring* fine, const rtri_coloring* coarse, int* out) {
    return guarded([&] {
        require(fine && coarse && out, "null argument");
        *out = refines(fine->coloring, coarse->coloring) ? 1 : 0;
    });
}

int rtri_fairify(const rtri_coloring* c, int format, rtri_coloring** out,
                 char** trace_out) {
    return guarded([&] {
        require(c && out, "null argument");
        FairifyResult res = greedy_fairify(c->coloring);
        if (trace_out) *trace_out = dup_string(render_fairify_trace(res, to_format(format)));
        *out = new rtri_coloring{std::move(res.coloring)};
    });
}

int rtri_coarsen(const rtri_coloring* c, int64_t u_num, int64_t u_den, int format,
                 rtri_coloring** out, char** trace_out) {
    return guarded([&] {
        require(c && out, "null argument");
        if (u_den == 0) fail(Status::nonpositive_u, "u has zero denominator");
        CoarsenResult res = coarsen(c->coloring, Rational(u_num, u_den));
        if (trace_out)
            *trace_out = dup_string(render_coarsen_trace(res.trace, to_format(format)));
        *out = new rtri_coloring{std::move(res.coloring)};
    });
}

/* ---- rainbow search ---------------------------------------------------- */

int rtri_find_rainbow(const rtri_field* f, const rtri_coloring* c, int mode,
                      int threads, rtri_report** out) {
    return guarded([&] {
        require(f && c && out, "null argument");
        require(mode == 0 || mode == 1, "mode must be 0 (count-all) or 1 (first-witness)");
        SearchMode m = mode == 0 ? SearchMode::count_all : SearchMode::first_witness;
        *out = new rtri_report{find_rainbow(f->plane(), c->coloring, m, threads)};
    });
}

int rtri_find_rainbow_size2(const rtri_field* f, const rtri_coloring* c,
                            rtri_report** out) {
    return guarded([&] {
        require(f && c && out, "null argument");
        *out = new rtri_report{find_rainbow_size2(f->plane(), c->coloring)};
    });
}

int rtri_bound_check(const rtri_field* f, const rtri_coloring* c, int threads,
                     rtri_report** out) {
    return guarded([&] {
        require(f && c && out, "null argument");
        *out = new rtri_report{no_rainbow_bound_check(f->plane(), c->coloring, threads)};
    });
}

int rtri_pipeline(const rtri_field* f, const rtri_coloring* c, int64_t u_num,
                  int64_t u_den, int threads, rtri_report** out) {
    return guarded([&] {
        require(f && c && out, "null argument");
        std::optional<Rational> u;
        if (u_num != 0) {
            if (u_den == 0) fail(Status::nonpositive_u, "u has zero denominator");
            u = Rational(u_num, u_den);
        }
        *out = new rtri_report{theorem_pipeline(f->plane(), c->coloring, u, threads)};
    });
}

int rtri_mono_unit_pairs(const rtri_field* f, const rtri_coloring* c, int threads,
                         uint64_t* out) {
    return guarded([&] {
        require(f && c && out, "null argument");
        *out = mono_unit_pairs(f->plane(), c->coloring, threads);
    });
}

int rtri_subset_unit_pairs(const rtri_field* f, const uint64_t* points, size_t n,
                           uint64_t* count) {
    return guarded([&] {
        require(f && count, "null argument");
        require(points != nullptr || n == 0, "null point list");
        std::vector<pidx> pts(points, points + n);
        *count = subset_unit_pairs(f->plane(), pts).ordered_pairs;
    });
}

void rtri_report_destroy(rtri_report* r) { delete r; }

uint64_t rtri_report_total_triangles(const rtri_report* r) {
    if (auto* rr = std::get_if<RainbowReport>(&r->body)) return rr->total_triangles;
    if (auto* pr = std::get_if<PipelineReport>(&r->body)) return pr->search.total_triangles;
    if (auto* br = std::get_if<BoundCheckReport>(&r->body)) return br->total_triangles;
    return 0;
}

uint64_t rtri_report_rainbow_count(const rtri_report* r) {
    if (auto* rr = std::get_if<RainbowReport>(&r->body)) return rr->rainbow_count;
    if (auto* pr = std::get_if<PipelineReport>(&r->body)) return pr->search.rainbow_count;
    if (auto* br = std::get_if<BoundCheckReport>(&r->body)) return br->rainbow_count;
    if (std::get_if<WitnessTriangle>(&r->body)) return 1;
    return 0;
}

uint64_t rtri_report_mono_pairs(const rtri_report* r) {
    if (auto* rr = std::get_if<RainbowReport>(&r->body)) return rr->mono_pairs;
    if (auto* pr = std::get_if<PipelineReport>(&r->body)) return pr->search.mono_pairs;
    if (auto* br = std::get_if<BoundCheckReport>(&r->body)) return br->mono_pairs;
    return 0;
}

uint64_t rtri_report_t(const rtri_report* r) {
    if (auto* pr = std::get_if<PipelineReport>(&r->body)) return pr->t;
    return 0;
}

uint64_t rtri_report_k(const rtri_report* r) {
    if (auto* pr = std::get_if<PipelineReport>(&r->body)) return pr->k;
    return 0;
}

int rtri_report_bound_holds(const rtri_report* r) {
    if (auto* br = std::get_if<BoundCheckReport>(&r->body)) return br->bound_holds ? 1 : 0;
    return 0;
}

int rtri_report_witness(const rtri_report* r, int* found, uint64_t* vertices,
                        uint32_t* colors) {
    return guarded([&] {
        require(r && found, "null argument");
        const WitnessTriangle* w = nullptr;
        if (auto* rr = std::get_if<RainbowReport>(&r->body))
            w = rr->witness ? &*rr->witness : nullptr;
        else if (auto* pr = std::get_if<PipelineReport>(&r->body))
            w = pr->witness ? &*pr->witness : nullptr;
        else if (auto* wt = std::get_if<WitnessTriangle>(&r->body))
            w = wt;
        *found = w ? 1 : 0;
        if (w && vertices)
            for (int i = 0; i < 3; ++i) vertices[i] = w->vertices[i];
        if (w && colors)
            for (int i = 0; i < 3; ++i) colors[i] = w->colors[i];
    });
}

int rtri_report_stage_coloring(const rtri_report* r, int stage, rtri_coloring** out) {
    return guarded([&] {
        require(r && out, "null argument");
        auto* pr = std::get_if<PipelineReport>(&r->body);
        require(pr != nullptr, "stage colorings exist only on pipeline reports");
        require(stage == 1 || stage == 2, "stage must be 1 (fairified) or 2 (coarsened)");
        *out = new rtri_coloring{stage == 1 ? pr->fairified : pr->coarsened};
    });
}

int rtri_report_render(const rtri_report* r, int format, char** out) {
    return guarded([&] {
        require(r && out, "null argument");
        ReportFormat fmt = to_format(format);
        std::string s;
        if (auto* rr = std::get_if<RainbowReport>(&r->body))
            s = render_rainbow_report(*rr, fmt);
        else if (auto* pr = std::get_if<PipelineReport>(&r->body))
            s = render_pipeline_report(*pr, fmt);
        else if (auto* br = std::get_if<BoundCheckReport>(&r->body))
            s = render_bound_check(*br, fmt);
        else if (auto* wt = std::get_if<WitnessTriangle>(&r->body))
            s = render_witness_report(*wt, fmt);
        *out = dup_string(s);
    });
}

/* ---- experiments ------------------------------------------------------- */

int rtri_sweep_csv(const uint64_t* q_list, size_t q_count, const char* tasks,
                   uint64_t seed, uint64_t color_count, int threads, char** out) {
    return guarded([&] {
        require(out && tasks, "null argument");
        require(q_list != nullptr || q_count == 0, "null q list");
        SweepOptions opts;
        opts.q_list.assign(q_list, q_list + q_count);
        std::string spec(tasks);
        size_t start = 0;
        while (start <= spec.size() && !spec.empty()) {
            size_t comma = spec.find(',', start);
            std::string tok = spec.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
            if (!tok.empty()) opts.tasks.push_back(parse_sweep_task(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        require(!opts.tasks.empty(), "no sweep tasks given");
        opts.seed = seed;
        opts.color_count = color_count;
        opts.threads = threads;
        *out = dup_string(sweep_csv(opts));
    });
}

int rtri_vinh_csv(const rtri_field* f, uint64_t subset_size, uint32_t trials,
                  uint64_t seed, char** out) {
    return guarded([&] {
        require(f && out, "null argument");
        VinhOptions opts{subset_size, trials, seed};
        *out = dup_string(vinh_csv(f->plane(), opts));
    });
}

} // extern "C"
