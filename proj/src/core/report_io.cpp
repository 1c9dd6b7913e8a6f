#include "report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace rtri {

using ojson = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    fail(Status::bad_argument, "unknown report format: " + name);
}

std::string render_witness(const WitnessTriangle& w) {
    std::ostringstream os;
    os << w.vertices[0] << ',' << w.vertices[1] << ',' << w.vertices[2];
    return os.str();
}

namespace {

std::string witness_colors(const WitnessTriangle& w) {
    std::ostringstream os;
    os << w.colors[0] << ',' << w.colors[1] << ',' << w.colors[2];
    return os.str();
}

ojson witness_json(const std::optional<WitnessTriangle>& w) {
    if (!w) return nullptr;
    ojson j;
    j["vertices"] = {w->vertices[0], w->vertices[1], w->vertices[2]};
    j["colors"] = {w->colors[0], w->colors[1], w->colors[2]};
    return j;
}

} // namespace

std::string render_witness_report(const WitnessTriangle& w, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["witness"] = witness_json(w);
        return j.dump() + "\n";
    }
    return "witness=" + render_witness(w) + "\nwitness_colors=" + witness_colors(w) + "\n";
}

std::string render_rainbow_report(const RainbowReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["total_triangles"] = r.total_triangles;
        j["rainbow_count"] = r.rainbow_count;
        j["mono_pairs"] = r.mono_pairs;
        j["witness"] = witness_json(r.witness);
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "total_triangles=" << r.total_triangles << "\n";
    os << "rainbow_count=" << r.rainbow_count << "\n";
    os << "mono_pairs=" << r.mono_pairs << "\n";
    os << "witness=" << (r.witness ? render_witness(*r.witness) : "none") << "\n";
    if (r.witness) os << "witness_colors=" << witness_colors(*r.witness) << "\n";
    return os.str();
}

std::string render_pipeline_report(const PipelineReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["total_triangles"] = r.search.total_triangles;
        j["rainbow_count"] = r.search.rainbow_count;
        j["mono_pairs"] = r.search.mono_pairs;
        j["t"] = r.t;
        j["k"] = r.k;
        j["u"] = r.u.str();
        j["witness"] = witness_json(r.witness);
        j["coarsen_branch"] = coarsen_branch_name(r.coarsen_trace.branch);
        j["chain_ok"] = r.chain_ok;
        j["k_bound_ok"] = r.k_bound_ok;
        j["max_class_fraction"] = r.max_class_fraction.str();
        j["hypothesis_suspect"] = r.hypothesis_suspect;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "total_triangles=" << r.search.total_triangles << "\n";
    os << "rainbow_count=" << r.search.rainbow_count << "\n";
    os << "mono_pairs=" << r.search.mono_pairs << "\n";
    os << "t=" << r.t << "\n";
    os << "k=" << r.k << "\n";
    os << "u=" << r.u.str() << "\n";
    os << "witness=" << (r.witness ? render_witness(*r.witness) : "none") << "\n";
    if (r.witness) os << "witness_colors=" << witness_colors(*r.witness) << "\n";
    os << "coarsen_branch=" << coarsen_branch_name(r.coarsen_trace.branch) << "\n";
    os << "chain_ok=" << (r.chain_ok ? 1 : 0) << "\n";
    os << "k_bound_ok=" << (r.k_bound_ok ? 1 : 0) << "\n";
    os << "max_class_fraction=" << r.max_class_fraction.str() << "\n";
    os << "hypothesis_suspect=" << (r.hypothesis_suspect ? 1 : 0) << "\n";
    return os.str();
}

std::string render_bound_check(const BoundCheckReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["total_triangles"] = r.total_triangles;
        j["rainbow_count"] = r.rainbow_count;
        j["mono_pairs"] = r.mono_pairs;
        j["bound_holds"] = r.bound_holds;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "total_triangles=" << r.total_triangles << "\n";
    os << "rainbow_count=" << r.rainbow_count << "\n";
    os << "mono_pairs=" << r.mono_pairs << "\n";
    os << "bound_holds=" << (r.bound_holds ? 1 : 0) << "\n";
    return os.str();
}

std::string render_fairify_trace(const FairifyResult& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["t"] = r.t;
        j["merges"] = ojson::array();
        for (const MergeStep& s : r.steps) {
            ojson m;
            m["kept"] = s.kept;
            m["absorbed"] = s.absorbed;
            m["kept_size"] = s.kept_size;
            m["absorbed_size"] = s.absorbed_size;
            m["max_size"] = s.max_size;
            j["merges"].push_back(m);
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "t=" << r.t << "\n";
    os << "merges=" << r.steps.size() << "\n";
    for (const MergeStep& s : r.steps)
        os << "merge kept=" << s.kept << " absorbed=" << s.absorbed
           << " kept_size=" << s.kept_size << " absorbed_size=" << s.absorbed_size
           << " max_size=" << s.max_size << "\n";
    return os.str();
}

std::string render_coarsen_trace(const CoarsenTrace& t, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ojson j;
        j["k"] = t.k;
        j["m"] = t.m.str();
        j["ell"] = t.ell.str();
        j["branch"] = coarsen_branch_name(t.branch);
        j["group_sizes"] = t.group_sizes;
        j["groups"] = t.groups;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "k=" << t.k << "\n";
    os << "m=" << t.m.str() << "\n";
    os << "ell=" << t.ell.str() << "\n";
    os << "branch=" << coarsen_branch_name(t.branch) << "\n";
    for (std::size_t g = 0; g < t.groups.size(); ++g) {
        os << "group " << g << " size=" << t.group_sizes[g] << " classes=";
        for (std::size_t i = 0; i < t.groups[g].size(); ++i) {
            if (i) os << ',';
            os << t.groups[g][i];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace rtri
