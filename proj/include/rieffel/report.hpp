#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace rieffel {

// One verification record.  Field order in the JSON-lines output is fixed
// (check, anchor, backend, params, residual, tol, pass[, seconds]) so that
// reports are byte-comparable; "seconds" is emitted only when timing was
// requested, since wall-clock values are inherently non-reproducible.
struct CheckRecord {
    std::string check;                 // machine id, e.g. "canonical_morphism"
    std::string anchor;                // identity being checked, e.g. "M(F[]G)=M(F)<>M(G)"
    std::string backend;
    nlohmann::ordered_json params;     // pinned inputs: N, d, seed, ...
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double seconds = -1.0;             // < 0 means "not recorded"
};

using Report = std::vector<CheckRecord>;

std::string to_jsonl(const Report& r);
Report parse_jsonl(const std::string& text);

std::string to_csv(const Report& r);

// Minimal self-contained plot: residual vs record index per check name,
// log-scale polylines with the tolerance drawn as a dashed line.
std::string to_svg(const Report& r);

std::string render(const Report& r, const std::string& format);  // jsonl|csv|svg

int count_failures(const Report& r);

} // namespace rieffel
