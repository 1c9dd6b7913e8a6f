// rtri command-line tool. Talks to the shared library exclusively through
// the C API in rtri.h.
//
// Exit codes: 0 success / witness found; 1 searched and none exists;
// 2 usage or parse error; 3 inadmissible field.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtri.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_none = 1;
constexpr int exit_usage = 2;
constexpr int exit_bad_field = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

int exit_code_for_status(int status) {
    switch (status) {
        case RTRI_E_NOT_PRIME:
        case RTRI_E_CHAR_TOO_SMALL:
        case RTRI_E_REDUCIBLE_MODULUS:
            return exit_bad_field;
        default:
            return exit_usage;
    }
}

void check(int status) {
    if (status == RTRI_OK) return;
    die(exit_code_for_status(status),
        std::string(rtri_status_name(status)) + ": " + rtri_last_error());
}

using FieldPtr = std::unique_ptr<rtri_field, decltype(&rtri_field_destroy)>;
using ColoringPtr = std::unique_ptr<rtri_coloring, decltype(&rtri_coloring_destroy)>;
using ReportPtr = std::unique_ptr<rtri_report, decltype(&rtri_report_destroy)>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    rtri_string_free(s);
    return out;
}

// flags shared by every subcommand
struct Common {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::string modulus;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out_path;
    int threads = 0;
    std::string in_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "field characteristic (prime >= 5)");
    cmd->add_option("--k", c.k, "extension degree (default 1)");
    cmd->add_option("--modulus", c.modulus, "monic modulus c0,c1,...,ck (k > 1)");
    cmd->add_option("--seed", c.seed, "RNG seed (default 0)");
    cmd->add_option("--format", c.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", c.out_path, "output path (default standard output)");
    cmd->add_option("--threads", c.threads, "worker threads (0 = auto)");
    cmd->add_option("--in", c.in_path, "input coloring file");
}

std::vector<std::uint64_t> parse_u64_list(const std::string& spec, const char* what) {
    std::vector<std::uint64_t> out;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoull(tok));
        } catch (...) {
            die(exit_usage, std::string("bad ") + what + " entry: " + tok);
        }
    }
    return out;
}

// "a" or "a/b"
std::pair<std::int64_t, std::int64_t> parse_rational(const std::string& spec) {
    auto slash = spec.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(spec), 1};
        return {std::stoll(spec.substr(0, slash)), std::stoll(spec.substr(slash + 1))};
    } catch (...) {
        die(exit_usage, "bad rational: " + spec);
    }
}

std::uint64_t isqrt_ceil_u64(std::uint64_t x) {
    std::uint64_t r = 0;
    while (r * r < x) ++r;
    return r;
}

FieldPtr field_from_flags(const Common& c) {
    if (c.p == 0) die(exit_usage, "--p is required (or use --in with a coloring file)");
    rtri_field* f = nullptr;
    if (c.modulus.empty()) {
        check(rtri_field_create(c.p, c.k, nullptr, 0, c.seed, &f));
    } else {
        auto mod = parse_u64_list(c.modulus, "modulus");
        check(rtri_field_create(c.p, c.k, mod.data(), mod.size(), c.seed, &f));
    }
    return FieldPtr(f, rtri_field_destroy);
}

// coloring from --in, with its field; --p flags, when also given, must agree
std::pair<FieldPtr, ColoringPtr> coloring_from_file(const Common& c) {
    if (c.in_path.empty()) die(exit_usage, "--in <coloring file> is required");
    rtri_field* f = nullptr;
    rtri_coloring* col = nullptr;
    check(rtri_coloring_load(c.in_path.c_str(), &f, &col));
    FieldPtr field(f, rtri_field_destroy);
    ColoringPtr coloring(col, rtri_coloring_destroy);
    if (c.p != 0 && (rtri_field_p(f) != c.p || rtri_field_k(f) != c.k))
        die(exit_usage, "FieldMismatch: --p/--k disagree with the coloring header");
    return {std::move(field), std::move(coloring)};
}

void write_output(const Common& c, const std::string& content) {
    if (c.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) die(exit_usage, "cannot open " + c.out_path);
    out << content;
    if (!out) die(exit_usage, "write failed: " + c.out_path);
}

int format_id(const Common& c) { return c.format == "json" ? 1 : 0; }

std::string render_report(const rtri_report* rep, const Common& c) {
    char* s = nullptr;
    check(rtri_report_render(rep, format_id(c), &s));
    return take_string(s);
}

void save_coloring_to(const Common& c, const rtri_field* f, const rtri_coloring* col) {
    const std::string path = c.out_path.empty() ? "/dev/stdout" : c.out_path;
    check(rtri_coloring_save(f, col, path.c_str()));
}

// ---- subcommand bodies --------------------------------------------------

int run_circle(const Common& c, bool list) {
    FieldPtr f = field_from_flags(c);
    std::uint64_t size = 0;
    check(rtri_circle_size(f.get(), &size));
    std::vector<std::uint64_t> pts;
    if (list) {
        pts.resize(size);
        std::size_t written = 0;
        check(rtri_circle_points(f.get(), pts.data(), pts.size(), &written));
    }
    std::ostringstream os;
    if (c.format == "json") {
        os << "{\"q\":" << rtri_field_q(f.get()) << ",\"circle_size\":" << size;
        if (list) {
            os << ",\"points\":[";
            for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
            os << "]";
        }
        os << "}\n";
    } else {
        os << "q=" << rtri_field_q(f.get()) << "\n";
        os << "circle_size=" << size << "\n";
        for (std::uint64_t pt : pts) os << pt << "\n";
    }
    write_output(c, os.str());
    return exit_ok;
}

int run_pairs(const Common& c) {
    FieldPtr f = field_from_flags(c);
    std::uint64_t size = 0, pairs = 0;
    check(rtri_circle_size(f.get(), &size));
    check(rtri_ordered_unit_pairs(f.get(), &pairs));
    std::uint64_t q = rtri_field_q(f.get());
    std::ostringstream os;
    if (c.format == "json") {
        os << "{\"q\":" << q << ",\"circle_size\":" << size
           << ",\"ordered_pairs\":" << pairs << ",\"q_cubed\":" << q * q * q << "}\n";
    } else {
        os << "q=" << q << "\n";
        os << "circle_size=" << size << "\n";
        os << "ordered_pairs=" << pairs << "\n";
        os << "q_cubed=" << q * q * q << "\n";
    }
    write_output(c, os.str());
    return exit_ok;
}

int run_triangles(const Common& c, const std::string& method) {
    FieldPtr f = field_from_flags(c);
    std::uint64_t count = 0;
    if (method == "enum")
        check(rtri_triangle_count_enumerated(f.get(), c.threads, &count));
    else
        check(rtri_triangle_count(f.get(), &count));
    std::ostringstream os;
    if (c.format == "json")
        os << "{\"q\":" << rtri_field_q(f.get()) << ",\"triangles\":" << count
           << ",\"method\":\"" << method << "\"}\n";
    else
        os << "triangles=" << count << "\n";
    write_output(c, os.str());
    return exit_ok;
}

int run_sqrt3(const Common& c) {
    FieldPtr f = field_from_flags(c);
    int exists = 0;
    std::uint64_t root = 0;
    check(rtri_sqrt3(f.get(), &exists, &root));
    std::ostringstream os;
    if (c.format == "json")
        os << "{\"sqrt3\":" << (exists ? std::to_string(root) : "null") << "}\n";
    else
        os << "sqrt3=" << (exists ? std::to_string(root) : "none") << "\n";
    write_output(c, os.str());
    return exists ? exit_ok : exit_none;
}

int run_find_rainbow(const Common& c, const std::string& mode) {
    auto [f, col] = coloring_from_file(c);
    rtri_report* rep = nullptr;
    check(rtri_find_rainbow(f.get(), col.get(), mode == "first-witness" ? 1 : 0,
                            c.threads, &rep));
    ReportPtr report(rep, rtri_report_destroy);
    write_output(c, render_report(rep, c));
    return rtri_report_rainbow_count(rep) > 0 ? exit_ok : exit_none;
}

int run_rainbow_size2(const Common& c) {
    auto [f, col] = coloring_from_file(c);
    rtri_report* rep = nullptr;
    int status = rtri_find_rainbow_size2(f.get(), col.get(), &rep);
    if (status == RTRI_E_NO_TRIANGLES) {
        std::cerr << "NoTriangles: " << rtri_last_error() << "\n";
        return exit_none;
    }
    check(status);
    ReportPtr report(rep, rtri_report_destroy);
    write_output(c, render_report(rep, c));
    return exit_ok;
}

int run_fairify(const Common& c, const std::string& trace_path) {
    auto [f, col] = coloring_from_file(c);
    rtri_coloring* out = nullptr;
    char* trace = nullptr;
    check(rtri_fairify(col.get(), format_id(c), &out,
                       trace_path.empty() ? nullptr : &trace));
    ColoringPtr fairified(out, rtri_coloring_destroy);
    if (!trace_path.empty()) {
        std::string text = take_string(trace);
        std::ofstream ts(trace_path, std::ios::binary);
        if (!ts) die(exit_usage, "cannot open " + trace_path);
        ts << text;
    }
    save_coloring_to(c, f.get(), fairified.get());
    return exit_ok;
}

int run_coarsen(const Common& c, const std::string& u_spec, const std::string& trace_path) {
    auto [f, col] = coloring_from_file(c);
    auto [u_num, u_den] = parse_rational(u_spec);
    rtri_coloring* out = nullptr;
    char* trace = nullptr;
    check(rtri_coarsen(col.get(), u_num, u_den, format_id(c), &out,
                       trace_path.empty() ? nullptr : &trace));
    ColoringPtr coarsened(out, rtri_coloring_destroy);
    if (!trace_path.empty()) {
        std::string text = take_string(trace);
        std::ofstream ts(trace_path, std::ios::binary);
        if (!ts) die(exit_usage, "cannot open " + trace_path);
        ts << text;
    }
    save_coloring_to(c, f.get(), coarsened.get());
    return exit_ok;
}

int run_pipeline(const Common& c, const std::string& u_spec, const std::string& stages_prefix) {
    auto [f, col] = coloring_from_file(c);
    std::int64_t u_num = 0, u_den = 1;
    if (!u_spec.empty()) std::tie(u_num, u_den) = parse_rational(u_spec);
    rtri_report* rep = nullptr;
    int status = rtri_pipeline(f.get(), col.get(), u_num, u_den, c.threads, &rep);
    if (status == RTRI_E_NO_TRIANGLES) {
        std::cerr << "NoTriangles: " << rtri_last_error() << "\n";
        return exit_none;
    }
    check(status);
    ReportPtr report(rep, rtri_report_destroy);
    if (!stages_prefix.empty()) {
        for (int stage = 1; stage <= 2; ++stage) {
            rtri_coloring* sc = nullptr;
            check(rtri_report_stage_coloring(rep, stage, &sc));
            ColoringPtr stage_col(sc, rtri_coloring_destroy);
            std::string path = stages_prefix + (stage == 1 ? ".fair" : ".coarse");
            check(rtri_coloring_save(f.get(), sc, path.c_str()));
        }
    }
    write_output(c, render_report(rep, c));
    int found = 0;
    check(rtri_report_witness(rep, &found, nullptr, nullptr));
    return found ? exit_ok : exit_none;
}

int run_gen(const Common& c, const std::string& kind, std::uint64_t colors) {
    FieldPtr f = field_from_flags(c);
    rtri_coloring* col = nullptr;
    check(rtri_coloring_generate(f.get(), kind.c_str(), colors, c.seed, &col));
    ColoringPtr coloring(col, rtri_coloring_destroy);
    save_coloring_to(c, f.get(), coloring.get());
    return exit_ok;
}

int run_vinh(const Common& c, std::uint64_t n, std::uint32_t trials, bool n_given) {
    FieldPtr f = field_from_flags(c);
    std::uint64_t q = rtri_field_q(f.get());
    if (!n_given) {
        n = isqrt_ceil_u64(q * q * q); // ceil(q^{3/2})
        if (n > q * q) n = q * q;
    }
    char* csv = nullptr;
    check(rtri_vinh_csv(f.get(), n, trials, c.seed, &csv));
    write_output(c, take_string(csv));
    return exit_ok;
}

int run_sweep(const Common& c, const std::string& q_spec, const std::string& tasks,
              std::uint64_t colors) {
    auto q_list = parse_u64_list(q_spec, "q");
    char* csv = nullptr;
    check(rtri_sweep_csv(q_list.data(), q_list.size(), tasks.c_str(), c.seed, colors,
                         c.threads, &csv));
    write_output(c, take_string(csv));
    return exit_ok;
}

int run_verify(const Common& c, const std::string& witness_spec, bool check_fair) {
    auto [f, col] = coloring_from_file(c);
    std::uint64_t q = rtri_field_q(f.get());
    std::ostringstream os;
    os << "q=" << q << "\n";
    os << "ground=" << rtri_coloring_ground_size(col.get()) << "\n";
    os << "classes=" << rtri_coloring_class_count(col.get()) << "\n";
    int code = exit_ok;

    if (check_fair) {
        int fair = 0;
        std::uint32_t bad_class = 0;
        std::uint64_t bad_size = 0;
        check(rtri_coloring_is_fair(col.get(), 1, 10, 10, 1, 0, 1, &fair, &bad_class,
                                    &bad_size));
        os << "fair=" << fair << "\n";
        if (!fair) {
            os << "violating_class=" << bad_class << "\n";
            os << "violating_size=" << bad_size << "\n";
            code = exit_none;
        }
    }

    if (!witness_spec.empty()) {
        auto v = parse_u64_list(witness_spec, "witness");
        if (v.size() != 3) die(exit_usage, "--witness needs three point indices");
        bool ok = v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = i + 1; j < 3 && ok; ++j) {
                std::uint64_t d = 0;
                check(rtri_distance(f.get(), v[i], v[j], &d));
                if (d != 1) ok = false;
            }
        std::uint32_t colors[3];
        for (int i = 0; i < 3 && ok; ++i)
            check(rtri_coloring_color_of(col.get(), v[i], &colors[i]));
        if (ok)
            ok = colors[0] != colors[1] && colors[0] != colors[2] && colors[1] != colors[2];
        os << "witness_ok=" << (ok ? 1 : 0) << "\n";
        if (!ok) code = exit_none;
    }

    write_output(c, os.str());
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow unit equilateral triangles over F_q^2"};
    app.require_subcommand(1);

    Common common;

    auto* circle = app.add_subcommand("circle", "unit circle of F_q^2");
    bool circle_list = false;
    circle->add_flag("--list", circle_list, "list circle points as indices");

    auto* pairs = app.add_subcommand("pairs", "ordered unit-distance pair count");

    auto* triangles = app.add_subcommand("triangles", "unit equilateral triangle count");
    std::string tri_method = "identity";
    triangles->add_option("--method", tri_method, "identity|enum")
        ->check(CLI::IsMember({"identity", "enum"}));

    auto* sqrt3 = app.add_subcommand("sqrt3", "root of s^2 = 3, when it exists");

    auto* find_rainbow = app.add_subcommand("find-rainbow", "search a coloring for rainbow triangles");
    std::string fr_mode = "count-all";
    find_rainbow->add_option("--mode", fr_mode, "count-all|first-witness")
        ->check(CLI::IsMember({"count-all", "first-witness"}));

    auto* size2 = app.add_subcommand("rainbow-size2", "constructive finder for class sizes <= 2");

    auto* fairify = app.add_subcommand("fairify", "greedy fair coarsening of a coloring");
    std::string fairify_trace;
    fairify->add_option("--trace", fairify_trace, "write the merge trace to this path");

    auto* coarsen = app.add_subcommand("coarsen", "pack classes down to about u groups");
    std::string coarsen_u, coarsen_trace;
    coarsen->add_option("--u", coarsen_u, "target u, integer or a/b")->required();
    coarsen->add_option("--trace", coarsen_trace, "write the packing trace to this path");

    auto* pipeline = app.add_subcommand("pipeline", "fairify, coarsen, then first-witness search");
    std::string pipeline_u, pipeline_stages;
    pipeline->add_option("--u", pipeline_u, "coarsening target (default 10*ceil(sqrt(q)))");
    pipeline->add_option("--save-stages", pipeline_stages,
                         "write stage colorings to <prefix>.fair/.coarse");

    auto* degen = app.add_subcommand("example-degenerate",
                                     "the blue/non-blue coloring with no rainbow triangle");

    auto* vinh = app.add_subcommand("vinh", "unit-pair counts of random subsets");
    std::uint64_t vinh_n = 0;
    std::uint32_t vinh_trials = 20;
    auto* vinh_n_opt = vinh->add_option("--n", vinh_n, "subset size (default ~q^1.5)");
    vinh->add_option("--trials", vinh_trials, "number of seeded trials (default 20)");

    auto* sweep = app.add_subcommand("sweep", "per-q experiment records as CSV");
    std::string sweep_q, sweep_tasks = "counts";
    std::uint64_t sweep_colors = 0;
    sweep->add_option("--q", sweep_q, "comma list of prime powers")->required();
    sweep->add_option("--tasks", sweep_tasks, "comma list of counts,pipeline,vinh");
    sweep->add_option("--colors", sweep_colors, "pipeline color count (default q)");

    auto* gen = app.add_subcommand("gen", "generate a coloring file");
    std::string gen_kind = "uniform-random";
    std::uint64_t gen_colors = 2;
    gen->add_option("--kind", gen_kind,
                    "uniform-random|fair-random|max2|degenerate-example|monochrome|all-distinct");
    gen->add_option("--colors", gen_colors, "color count (random kinds)");

    auto* verify = app.add_subcommand("verify", "validate a coloring file");
    std::string verify_witness;
    bool verify_fair = false;
    verify->add_option("--witness", verify_witness, "check three point indices i,j,k");
    verify->add_flag("--fair", verify_fair, "check fairness with the default bounds");

    for (CLI::App* cmd : {circle, pairs, triangles, sqrt3, find_rainbow, size2, fairify,
                          coarsen, pipeline, degen, vinh, sweep, gen, verify})
        add_common(cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (circle->parsed()) return run_circle(common, circle_list);
        if (pairs->parsed()) return run_pairs(common);
        if (triangles->parsed()) return run_triangles(common, tri_method);
        if (sqrt3->parsed()) return run_sqrt3(common);
        if (find_rainbow->parsed()) return run_find_rainbow(common, fr_mode);
        if (size2->parsed()) return run_rainbow_size2(common);
        if (fairify->parsed()) return run_fairify(common, fairify_trace);
        if (coarsen->parsed()) return run_coarsen(common, coarsen_u, coarsen_trace);
        if (pipeline->parsed()) return run_pipeline(common, pipeline_u, pipeline_stages);
        if (degen->parsed()) return run_gen(common, "degenerate-example", 0);
        if (vinh->parsed()) return run_vinh(common, vinh_n, vinh_trials, vinh_n_opt->count() > 0);
        if (sweep->parsed()) return run_sweep(common, sweep_q, sweep_tasks, sweep_colors);
        if (gen->parsed()) return run_gen(common, gen_kind, gen_colors);
        if (verify->parsed()) return run_verify(common, verify_witness, verify_fair);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
