#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopkit/manifold.hpp"
#include "loopkit/report.hpp"

namespace loopkit {

struct DocumentOptions {
    int max_degree = kDefaultMaxDegree; // largest loop degree N; spheres up to N + 1
    ReportOptions report;
    std::optional<std::vector<Letter>> seed_order;
};

// The full pipeline for one validated descriptor. Inputs of rank <= 2 get
// the classification branch only; the other sections are null.
nlohmann::ordered_json build_report_document(const ValidatedManifold &v,
                                             const DocumentOptions &opts = {});

std::string render_report_text(const nlohmann::ordered_json &doc);

nlohmann::ordered_json violations_json(const std::vector<Violation> &violations);

// One row per standard Lyndon word: degree, word, bracketing, sphere.
nlohmann::ordered_json lie_basis_json(const std::vector<LyndonBasisEntry> &basis);
std::string render_lie_basis_text(const std::vector<LyndonBasisEntry> &basis);

} // namespace loopkit
