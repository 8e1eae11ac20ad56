#pragma once

// Uniform result stream for the verification suites.
//
// A report is a list of assertion lines plus free-form header notes.  The
// canonical text rendering is one TSV line per assertion,
//
//   suite<TAB>instance<TAB>PASS|FAIL<TAB>detail
//
// preceded by '#'-prefixed note lines.  A JSON mirror carries the same data.
// Rendering stable-sorts by suite name so that merged reports print in a
// canonical order no matter how they were produced; lines within one suite
// keep their insertion order (tables stay tables).

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace dinfty {

struct ReportLine {
    std::string suite;
    std::string instance;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<std::string> notes;
    std::vector<ReportLine> lines;

    void note(std::string text) { notes.push_back(std::move(text)); }

    void add(std::string suite, std::string instance, bool pass, std::string detail) {
        lines.push_back({std::move(suite), std::move(instance), pass, std::move(detail)});
    }

    void merge(const Report& other) {
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }

    int fail_count() const {
        int n = 0;
        for (const auto& l : lines)
            if (!l.pass) ++n;
        return n;
    }

    bool pass() const { return fail_count() == 0; }

    std::vector<ReportLine> sorted_lines() const {
        std::vector<ReportLine> out = lines;
        std::stable_sort(out.begin(), out.end(),
                         [](const ReportLine& a, const ReportLine& b) { return a.suite < b.suite; });
        return out;
    }
};

// Notes prepended to every suite report.  The second one records that a
// window is a finite stand-in for an infinite category: maximal-within-window
// Ext-orthogonal sets are checked against pairwise/local consequences only,
// and no claim is made that they extend to honestly maximal subcategories.
inline std::vector<std::string> standard_notes(int window) {
    return {
        "window N=" + std::to_string(window) +
            ": all quantifiers range over objects with vertex support inside {0.." +
            std::to_string(window) + "} (preinjectives carried at shift -1)",
        "window-maximal Ext-orthogonal sets approximate infinite maximal ones; "
        "suites verify pairwise/local consequences, not global maximality",
    };
}

inline void render_tsv(const Report& r, std::ostream& os) {
    for (const auto& n : r.notes) os << "# " << n << "\n";
    for (const auto& l : r.sorted_lines())
        os << l.suite << "\t" << l.instance << "\t" << (l.pass ? "PASS" : "FAIL") << "\t"
           << l.detail << "\n";
}

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["notes"] = r.notes;
    j["lines"] = nlohmann::json::array();
    for (const auto& l : r.sorted_lines())
        j["lines"].push_back({{"suite", l.suite},
                              {"instance", l.instance},
                              {"status", l.pass ? "PASS" : "FAIL"},
                              {"detail", l.detail}});
    j["failures"] = r.fail_count();
    j["pass"] = r.pass();
    return j;
}

inline void render_json(const Report& r, std::ostream& os) { os << to_json(r).dump(2) << "\n"; }

}  // namespace dinfty
