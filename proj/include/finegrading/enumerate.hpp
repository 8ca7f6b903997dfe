#pragma once

#include "finegrading/invariants.hpp"
#include "finegrading/liealg.hpp"

namespace fgr {

/// One classification row: universal grading group, type, and provenance
/// (the invariant class that produced the grading).
struct GradingReport {
    std::string family;  // "sl", "so", "sp"
    long n = 0;
    FinAbGroup universal_group;
    std::vector<long> type;
    long component_count = 0;
    std::string provenance;
    bool unverified_count = false;  // no paper-backed golden value for this n
};

/// A report together with the constructed Lie grading (over the universal
/// grading group) and, for form-based classes, the defining FormSpec.
struct EmittedGrading {
    GradingReport report;
    LieGrading grading;
    std::optional<FormSpec> spec;
};

struct PipelineOptions {
    bool with_gradings = true;  // construct and verify gradings (not just counts)
    long max_n = 16;            // combinatorial safety bound
};

/// Fine gradings of sl_n (n >= 2): inner classes (graded division supports
/// with the Q^m exclusions) plus outer classes (canonicalized I-tuples).
std::vector<EmittedGrading> fine_gradings_sl(long n, const PipelineOptions& opts = {});

/// Fine gradings of sp_n (n even >= 6): I2 classes over symplectic
/// involutions.
std::vector<EmittedGrading> fine_gradings_sp(long n, const PipelineOptions& opts = {});

/// Fine gradings of so_n (n >= 5, n not in {6, 8}): I2 classes over
/// orthogonal involutions. n = 8 is allowed only in pre-merge mode (the
/// matrix-level list of 15 classes, before the triality merge).
std::vector<EmittedGrading> fine_gradings_so(long n, const PipelineOptions& opts = {},
                                             bool pre_merge = false);

std::string group_str(const FinAbGroup& g);

}  // namespace fgr
