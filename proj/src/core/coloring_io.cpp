#include "coloring_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace rtri {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    fail(Status::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(line, std::string("expected unsigned integer for ") + what);
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size())
        parse_fail(line, std::string("integer out of range for ") + what);
    return v;
}

} // namespace

void save_coloring(const Field& field, const Coloring& c, std::ostream& out) {
    if (c.ground_size() != field.q() * field.q())
        fail(Status::field_mismatch, "coloring ground set is not q^2");
    out << field.header_line() << "\n";
    out << "colors " << c.color_bound() << "\n";
    for (std::uint64_t e = 0; e < c.ground_size(); ++e)
        out << e << ' ' << c.color_of(e) << "\n";
}

void save_coloring_file(const Field& field, const Coloring& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Status::io_error, "cannot open " + path + " for writing");
    save_coloring(field, c, out);
    out.flush();
    if (!out) fail(Status::io_error, "write failed: " + path);
}

std::pair<Field, Coloring> load_coloring(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](bool allow_comments) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (allow_comments && (line.empty() || line[0] == '#')) continue;
            return true;
        }
        return false;
    };

    // header: field p=<p> k=<k> [modulus=...]
    if (!next_line(true)) parse_fail(lineno + 1, "missing field header");
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != "field") parse_fail(lineno, "expected 'field' header");
    std::uint64_t p = 0;
    unsigned k = 0;
    bool have_p = false, have_k = false;
    std::vector<std::uint64_t> modulus;
    bool have_modulus = false;
    while (hs >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) parse_fail(lineno, "malformed field attribute: " + word);
        std::string key = word.substr(0, eq), val = word.substr(eq + 1);
        if (key == "p") {
            p = parse_u64(val, lineno, "p");
            have_p = true;
        } else if (key == "k") {
            k = static_cast<unsigned>(parse_u64(val, lineno, "k"));
            have_k = true;
        } else if (key == "modulus") {
            std::istringstream ms(val);
            std::string tok;
            while (std::getline(ms, tok, ','))
                modulus.push_back(parse_u64(tok, lineno, "modulus coefficient"));
            have_modulus = true;
        } else {
            parse_fail(lineno, "unknown field attribute: " + key);
        }
    }
    if (!have_p || !have_k) parse_fail(lineno, "field header needs p= and k=");
    Field field = Field::make(p, k, have_modulus ? &modulus : nullptr, 0);

    if (!next_line(true)) parse_fail(lineno + 1, "missing colors header");
    std::istringstream cs(line);
    cs >> word;
    if (word != "colors") parse_fail(lineno, "expected 'colors' header");
    std::string count_tok;
    if (!(cs >> count_tok)) parse_fail(lineno, "missing color count");
    std::uint64_t declared = parse_u64(count_tok, lineno, "color count");
    if (cs >> word) parse_fail(lineno, "trailing tokens after color count");
    if (declared == 0 || declared > 0xFFFFFFFFULL)
        parse_fail(lineno, "color count out of range");

    const std::uint64_t s = field.q() * field.q();
    std::vector<std::uint32_t> assignment(s, 0);
    std::vector<bool> seen(s, false);
    std::uint64_t filled = 0;
    while (filled < s) {
        if (!next_line(false)) {
            // first missing index makes the clearest coverage report
            for (std::uint64_t e = 0; e < s; ++e)
                if (!seen[e])
                    fail(Status::coverage_error,
                         "point index " + std::to_string(e) + " missing");
            break;
        }
        std::istringstream ls(line);
        std::string idx_tok, color_tok;
        if (!(ls >> idx_tok >> color_tok)) parse_fail(lineno, "expected '<index> <color>'");
        if (ls >> word) parse_fail(lineno, "trailing tokens on data line");
        std::uint64_t idx = parse_u64(idx_tok, lineno, "point index");
        std::uint64_t color = parse_u64(color_tok, lineno, "color id");
        if (idx >= s) parse_fail(lineno, "point index " + std::to_string(idx) + " out of range");
        if (seen[idx])
            fail(Status::coverage_error, "line " + std::to_string(lineno) +
                                             ": duplicate point index " + std::to_string(idx));
        if (color >= declared)
            parse_fail(lineno, "color id " + std::to_string(color) +
                                   " not below declared count " + std::to_string(declared));
        seen[idx] = true;
        assignment[idx] = static_cast<std::uint32_t>(color);
        ++filled;
    }
    if (next_line(true)) parse_fail(lineno, "unexpected content after data block");

    return {std::move(field),
            Coloring(s, std::move(assignment), static_cast<std::uint32_t>(declared))};
}

std::pair<Field, Coloring> load_coloring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Status::io_error, "cannot open " + path);
    return load_coloring(in);
}

} // namespace rtri
