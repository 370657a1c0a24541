#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxforge/hierarchy.hpp"

namespace laxforge {

// Directory holding the shipped reference data; LAXFORGE_REFDIR overrides
// the build-time default.
std::string reference_dir();

struct EntryDiff {
    std::string id;           // "M 1 7", "q3_t", "slot 2", ...
    bool match = false;
    std::string classification;  // empty when match
    std::string detail;
};

struct DiffSection {
    std::string title;
    std::vector<EntryDiff> entries;
    int matches() const {
        int n = 0;
        for (const auto& e : entries) n += e.match ? 1 : 0;
        return n;
    }
    int mismatches() const { return static_cast<int>(entries.size()) - matches(); }
};

// Published operator tables: lines "M 1 1 = -1/2*D + Tqr(1,1) + ...".
std::map<std::pair<int, int>, OpEntry> load_reference_operator(const std::string& filename);

// Published flow equations: lines "q1_t = ...", parsed through the
// canonical grammar (Dx(...) evaluates while parsing).
std::map<std::string, DiffPoly> load_reference_flows(const std::string& filename);

// Published component equations: lines "Ut1 - Vx1 + [U1,V1] + 2*[U2,V3] ... = 0".
struct ReferenceComponent {
    int label = 0;
    std::vector<BracketTerm> brackets;
};
std::vector<ReferenceComponent> load_reference_components(const std::string& filename);

DiffSection diff_operator(const RecursionOperator& derived,
                          const std::map<std::pair<int, int>, OpEntry>& reference,
                          const std::string& title);

DiffSection diff_flows(const PDESystem& derived, const std::map<std::string, DiffPoly>& reference,
                       const std::string& title);

DiffSection diff_components(const std::vector<ComponentEquation>& derived,
                            const std::vector<ReferenceComponent>& reference,
                            const std::string& title);

// Polynomial comparison with classification; exposed for the report code.
EntryDiff classify_poly_diff(const std::string& id, const DiffPoly& derived,
                             const DiffPoly& reference);

}  // namespace laxforge
