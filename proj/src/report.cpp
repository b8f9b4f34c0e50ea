#include "hsk/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace hsk {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, json or csv)");
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::size_t Report::passed() const {
    std::size_t k = 0;
    for (const auto& c : checks)
        if (c.pass) ++k;
    return k;
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

static std::string format_ms(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

static std::string render_text(const Report& r, bool timings) {
    std::string out;
    out += "# " + r.version + "\n";
    out += "# command: " + r.command + "\n";
    out += "# seed: " + std::to_string(r.seed) + "\n";
    for (const auto& c : r.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        for (const auto& [k, v] : c.exact) out += " | " + k + "=" + v;
        if (c.has_residual)
            out += " | residual=" + format_sci(c.residual) + " tol=" + format_sci(c.tol);
        if (timings) out += " | wall_ms=" + format_ms(c.wall_ms);
        if (!c.note.empty()) out += "\n       " + c.note;
        out += "\n";
    }
    out += "# checks: " + std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) +
           " passed\n";
    return out;
}

static std::string render_json(const Report& r, bool timings) {
    nlohmann::ordered_json j;
    j["version"] = r.version;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        nlohmann::ordered_json je = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.exact) je[k] = v;
        jc["exact"] = je;
        if (c.has_residual) {
            jc["residual"] = format_sci(c.residual);
            jc["tol"] = format_sci(c.tol);
        }
        if (!c.note.empty()) jc["note"] = c.note;
        if (timings) jc["wall_ms"] = format_ms(c.wall_ms);
        j["checks"].push_back(jc);
    }
    j["passed"] = r.passed();
    j["total"] = r.checks.size();
    return j.dump(2) + "\n";
}

static std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    q += '"';
    return q;
}

static std::string render_csv(const Report& r, bool timings) {
    std::string out = "name,status,residual,tol,exact,note";
    if (timings) out += ",wall_ms";
    out += "\n";
    for (const auto& c : r.checks) {
        std::string exact;
        for (const auto& [k, v] : c.exact) {
            if (!exact.empty()) exact += "; ";
            exact += k + "=" + v;
        }
        out += csv_escape(c.name);
        out += c.pass ? ",pass," : ",fail,";
        out += c.has_residual ? format_sci(c.residual) : "";
        out += ",";
        out += c.has_residual ? format_sci(c.tol) : "";
        out += "," + csv_escape(exact) + "," + csv_escape(c.note);
        if (timings) out += "," + format_ms(c.wall_ms);
        out += "\n";
    }
    return out;
}

std::string render(const Report& r, Format fmt, bool include_timings) {
    switch (fmt) {
        case Format::Text: return render_text(r, include_timings);
        case Format::Json: return render_json(r, include_timings);
        case Format::Csv: return render_csv(r, include_timings);
    }
    throw std::logic_error("unreachable format");
}

}  // namespace hsk
