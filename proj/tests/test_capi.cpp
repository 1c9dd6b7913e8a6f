// Exercises the shared-library surface the way an external client would:
// only include/rtri.h, opaque handles, status codes.

#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "rtri.h"

namespace {

struct FieldHandle {
    rtri_field* f = nullptr;
    ~FieldHandle() { rtri_field_destroy(f); }
};

struct ColoringHandle {
    rtri_coloring* c = nullptr;
    ~ColoringHandle() { rtri_coloring_destroy(c); }
};

struct ReportHandle {
    rtri_report* r = nullptr;
    ~ReportHandle() { rtri_report_destroy(r); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    rtri_string_free(s);
    return out;
}

std::string temp_path(const char* name) {
    return std::string("capi_tmp_") + name;
}

} // namespace

TEST_CASE("field lifecycle and error codes") {
    FieldHandle f;
    CHECK(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    CHECK(rtri_field_q(f.f) == 13);
    CHECK(rtri_field_p(f.f) == 13);
    CHECK(rtri_field_k(f.f) == 1);

    rtri_field* bad = nullptr;
    CHECK(rtri_field_create(4, 1, nullptr, 0, 0, &bad) == RTRI_E_NOT_PRIME);
    CHECK(rtri_field_create(3, 1, nullptr, 0, 0, &bad) == RTRI_E_CHAR_TOO_SMALL);
    CHECK(std::string(rtri_last_error()).size() > 0);
    uint64_t sq_mod[3] = {0, 0, 1};
    CHECK(rtri_field_create(5, 2, sq_mod, 3, 0, &bad) == RTRI_E_REDUCIBLE_MODULUS);
    CHECK(std::string(rtri_status_name(RTRI_E_NOT_PRIME)) == "NotPrime");
}

TEST_CASE("field arithmetic through the C surface") {
    FieldHandle f;
    REQUIRE(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    uint64_t out = 0;
    CHECK(rtri_field_inv(f.f, 2, &out) == RTRI_OK);
    CHECK(out == 7);
    CHECK(rtri_field_inv(f.f, 0, &out) == RTRI_E_DIVISION_BY_ZERO);
    CHECK(rtri_field_pow(f.f, 4, 2, &out) == RTRI_OK);
    CHECK(out == 3);
    int chi = 0;
    CHECK(rtri_field_chi(f.f, 3, &chi) == RTRI_OK);
    CHECK(chi == 1);
    int exists = 0;
    uint64_t r0 = 0, r1 = 0;
    CHECK(rtri_field_sqrt(f.f, 3, &exists, &r0, &r1) == RTRI_OK);
    CHECK(exists == 1);
    CHECK(r0 == 4);
    CHECK(r1 == 9);
    char* header = nullptr;
    CHECK(rtri_field_header(f.f, &header) == RTRI_OK);
    CHECK(take(header) == "field p=13 k=1");

    FieldHandle ext;
    uint64_t good_mod[3] = {2, 0, 1};
    REQUIRE(rtri_field_create(5, 2, good_mod, 3, 0, &ext.f) == RTRI_OK);
    CHECK(rtri_field_q(ext.f) == 25);
    uint64_t mod_out[3] = {9, 9, 9};
    CHECK(rtri_field_modulus(ext.f, mod_out, 3) == RTRI_OK);
    CHECK(mod_out[0] == 2);
    CHECK(mod_out[2] == 1);
    CHECK(rtri_field_modulus(ext.f, mod_out, 2) == RTRI_E_BAD_ARGUMENT);
}

TEST_CASE("geometry through the C surface") {
    FieldHandle f;
    REQUIRE(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    uint64_t circle = 0, pairs = 0, tris = 0, tris_enum = 0;
    CHECK(rtri_circle_size(f.f, &circle) == RTRI_OK);
    CHECK(circle == 12);
    CHECK(rtri_ordered_unit_pairs(f.f, &pairs) == RTRI_OK);
    CHECK(pairs == 2028);
    CHECK(rtri_triangle_count(f.f, &tris) == RTRI_OK);
    CHECK(tris == 676);
    CHECK(rtri_triangle_count_enumerated(f.f, 2, &tris_enum) == RTRI_OK);
    CHECK(tris_enum == 676);

    std::vector<uint64_t> pts(circle);
    size_t written = 0;
    CHECK(rtri_circle_points(f.f, pts.data(), pts.size(), &written) == RTRI_OK);
    CHECK(written == 12);
    uint64_t d = 0;
    for (uint64_t pt : pts) {
        CHECK(rtri_distance(f.f, pt, 0, &d) == RTRI_OK);
        CHECK(d == 1);
    }

    int exists = 0;
    uint64_t root = 0;
    CHECK(rtri_sqrt3(f.f, &exists, &root) == RTRI_OK);
    CHECK(exists == 1);
    CHECK(root == 4);

    // apexes of ((0,0),(1,0)): points (7,2) and (7,11) -> indices 7*13+2, 7*13+11
    uint64_t a0 = 0, a1 = 0;
    CHECK(rtri_apexes(f.f, 0, 13, &a0, &a1) == RTRI_OK);
    CHECK(a0 == 7 * 13 + 2);
    CHECK(a1 == 7 * 13 + 11);
    CHECK(rtri_apexes(f.f, 0, 26, &a0, &a1) == RTRI_E_NOT_UNIT_PAIR);

    FieldHandle f7;
    REQUIRE(rtri_field_create(7, 1, nullptr, 0, 0, &f7.f) == RTRI_OK);
    CHECK(rtri_triangles_exist(f7.f, &exists) == RTRI_OK);
    CHECK(exists == 0);
    CHECK(rtri_triangle_count(f7.f, &tris) == RTRI_OK);
    CHECK(tris == 0);
}

TEST_CASE("colorings, searches and reports through the C surface") {
    FieldHandle f;
    REQUIRE(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);

    ColoringHandle distinct;
    REQUIRE(rtri_coloring_generate(f.f, "all-distinct", 0, 0, &distinct.c) == RTRI_OK);
    CHECK(rtri_coloring_ground_size(distinct.c) == 169);
    CHECK(rtri_coloring_class_count(distinct.c) == 169);

    ReportHandle rep;
    REQUIRE(rtri_find_rainbow(f.f, distinct.c, 0, 1, &rep.r) == RTRI_OK);
    CHECK(rtri_report_total_triangles(rep.r) == 676);
    CHECK(rtri_report_rainbow_count(rep.r) == 676);
    CHECK(rtri_report_mono_pairs(rep.r) == 0);
    int found = 0;
    uint64_t verts[3];
    uint32_t colors[3];
    CHECK(rtri_report_witness(rep.r, &found, verts, colors) == RTRI_OK);
    CHECK(found == 1);
    CHECK(verts[0] < verts[1]);
    CHECK(verts[1] < verts[2]);

    char* text = nullptr;
    CHECK(rtri_report_render(rep.r, 0, &text) == RTRI_OK);
    std::string rendered = take(text);
    CHECK(rendered.find("total_triangles=676") != std::string::npos);
    char* json = nullptr;
    CHECK(rtri_report_render(rep.r, 1, &json) == RTRI_OK);
    CHECK(take(json).find("\"rainbow_count\":676") != std::string::npos);

    // size2 on a max2 coloring
    ColoringHandle max2;
    REQUIRE(rtri_coloring_generate(f.f, "max2", 0, 7, &max2.c) == RTRI_OK);
    ReportHandle w;
    REQUIRE(rtri_find_rainbow_size2(f.f, max2.c, &w.r) == RTRI_OK);
    CHECK(rtri_report_witness(w.r, &found, verts, colors) == RTRI_OK);
    CHECK(found == 1);
    CHECK(colors[0] != colors[1]);

    // unknown generator kind
    rtri_coloring* bad = nullptr;
    CHECK(rtri_coloring_generate(f.f, "bogus", 0, 0, &bad) == RTRI_E_BAD_ARGUMENT);
}

TEST_CASE("coloring save/load round trip via files") {
    FieldHandle f;
    REQUIRE(rtri_field_create(11, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    ColoringHandle degen;
    REQUIRE(rtri_coloring_generate(f.f, "degenerate-example", 0, 0, &degen.c) == RTRI_OK);

    std::string path = temp_path("degen11.txt");
    REQUIRE(rtri_coloring_save(f.f, degen.c, path.c_str()) == RTRI_OK);

    rtri_field* f2 = nullptr;
    rtri_coloring* c2 = nullptr;
    REQUIRE(rtri_coloring_load(path.c_str(), &f2, &c2) == RTRI_OK);
    FieldHandle fh{f2};
    ColoringHandle ch{c2};
    CHECK(rtri_field_q(f2) == 11);
    CHECK(rtri_coloring_class_count(c2) == rtri_coloring_class_count(degen.c));
    uint32_t col_a = 0, col_b = 0;
    for (uint64_t e = 0; e < 121; e += 7) {
        CHECK(rtri_coloring_color_of(degen.c, e, &col_a) == RTRI_OK);
        CHECK(rtri_coloring_color_of(c2, e, &col_b) == RTRI_OK);
        CHECK(col_a == col_b);
    }
    std::remove(path.c_str());

    CHECK(rtri_coloring_load("does_not_exist.txt", &f2, &c2) == RTRI_E_IO);
}

TEST_CASE("fairify, coarsen and pipeline through the C surface") {
    FieldHandle f;
    REQUIRE(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    ColoringHandle c;
    REQUIRE(rtri_coloring_generate(f.f, "uniform-random", 9, 4, &c.c) == RTRI_OK);

    ColoringHandle fair;
    char* trace = nullptr;
    REQUIRE(rtri_fairify(c.c, 0, &fair.c, &trace) == RTRI_OK);
    CHECK(take(trace).find("t=") == 0);
    int ref = 0;
    CHECK(rtri_refines(c.c, fair.c, &ref) == RTRI_OK);
    CHECK(ref == 1);

    ColoringHandle coarse;
    char* ctrace = nullptr;
    REQUIRE(rtri_coarsen(fair.c, 2, 1, 1, &coarse.c, &ctrace) == RTRI_OK);
    CHECK(take(ctrace).find("\"k\":") != std::string::npos);
    CHECK(rtri_refines(fair.c, coarse.c, &ref) == RTRI_OK);
    CHECK(ref == 1);
    rtri_coloring* nope = nullptr;
    CHECK(rtri_coarsen(fair.c, 0, 1, 0, &nope, nullptr) == RTRI_E_NONPOSITIVE_U);

    int fair_flag = 0;
    uint32_t bad_class = 0;
    uint64_t bad_size = 0;
    CHECK(rtri_coloring_is_fair(fair.c, 1, 10, 10, 1, 0, 1, &fair_flag, &bad_class,
                                &bad_size) == RTRI_OK);
    CHECK(fair_flag == 1);

    ReportHandle pipe;
    REQUIRE(rtri_pipeline(f.f, c.c, 0, 1, 2, &pipe.r) == RTRI_OK);
    CHECK(rtri_report_t(pipe.r) > 0);
    CHECK(rtri_report_k(pipe.r) > 0);
    int found = 0;
    CHECK(rtri_report_witness(pipe.r, &found, nullptr, nullptr) == RTRI_OK);
    CHECK(found == 1);
    rtri_coloring* stage = nullptr;
    REQUIRE(rtri_report_stage_coloring(pipe.r, 2, &stage) == RTRI_OK);
    ColoringHandle stage_h{stage};
    CHECK(rtri_coloring_class_count(stage) == rtri_report_k(pipe.r));

    uint64_t T = 0;
    CHECK(rtri_mono_unit_pairs(f.f, c.c, 1, &T) == RTRI_OK);
    ReportHandle bound;
    REQUIRE(rtri_bound_check(f.f, c.c, 1, &bound.r) == RTRI_OK);
    CHECK(rtri_report_mono_pairs(bound.r) == T);
    CHECK(rtri_report_bound_holds(bound.r) == 1);
}

TEST_CASE("experiments through the C surface") {
    FieldHandle f;
    REQUIRE(rtri_field_create(13, 1, nullptr, 0, 0, &f.f) == RTRI_OK);
    char* csv = nullptr;
    REQUIRE(rtri_vinh_csv(f.f, 169, 1, 0, &csv) == RTRI_OK);
    std::string vinh = take(csv);
    CHECK(vinh.find("trial,n,unit_pairs,ratio_num,ratio_den") == 0);
    CHECK(vinh.find("0,169,2028,12,13") != std::string::npos);

    // unit square {(0,0),(1,0),(0,1),(1,1)}: the four sides, both directions
    uint64_t subset[4] = {0, 13, 1, 14};
    uint64_t count = 0;
    CHECK(rtri_subset_unit_pairs(f.f, subset, 4, &count) == RTRI_OK);
    CHECK(count == 8);

    uint64_t qs[2] = {11, 13};
    char* sweep = nullptr;
    REQUIRE(rtri_sweep_csv(qs, 2, "counts", 0, 0, 1, &sweep) == RTRI_OK);
    std::string s = take(sweep);
    CHECK(s.find("11,11,1,12,1452,484") != std::string::npos);
    CHECK(s.find("13,13,1,12,2028,676") != std::string::npos);
    CHECK(rtri_sweep_csv(qs, 2, "nonsense", 0, 0, 1, &sweep) == RTRI_E_BAD_ARGUMENT);
}
