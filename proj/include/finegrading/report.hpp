#pragma once

#include "finegrading/d4.hpp"

namespace fgr {

/// Deterministic machine-readable renderings of classification output:
/// JSON {family, n, count, reports:[{group, type, provenance, tuple}]} and an
/// aligned TSV table with columns (family, n, D, tuple, group, type).
std::string reports_to_json(const std::string& family, long n,
                            const std::vector<EmittedGrading>& rows);
std::string reports_to_table(const std::string& family, long n,
                             const std::vector<EmittedGrading>& rows);

std::string d4_to_json(const std::vector<D4Row>& rows);
std::string d4_to_table(const std::vector<D4Row>& rows);

/// FormSpec serialization: division factors, involution kind, labels, nus.
std::string form_spec_to_json(const FormSpec& spec);

/// "D" and "tuple" columns recovered from a provenance key.
std::pair<std::string, std::string> provenance_parts(const std::string& prov);

/// Exact homogeneous-component bases of a grading, as a text dump.
std::string grading_bases_dump(const MatGrading& g);

}  // namespace fgr
