#include "finegrading/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace fgr {

namespace {

using nlohmann::json;

json type_json(const std::vector<long>& t) { return json(t); }

}  // namespace

std::pair<std::string, std::string> provenance_parts(const std::string& prov) {
    if (prov.empty() || prov.front() != '[') return {prov, ""};
    std::string body = prov.substr(1, prov.size() - 2);
    if (body.front() == '(') {
        // "[(D,kind),(tuple)]"
        size_t close = body.find("),(");
        if (close == std::string::npos) return {body, ""};
        return {body.substr(0, close + 1), body.substr(close + 2)};
    }
    size_t comma = body.find(",(");
    if (comma == std::string::npos) return {body, ""};
    return {body.substr(0, comma), body.substr(comma + 1)};
}

std::string reports_to_json(const std::string& family, long n,
                            const std::vector<EmittedGrading>& rows) {
    json out;
    out["family"] = family;
    out["n"] = n;
    out["count"] = rows.size();
    out["reports"] = json::array();
    for (const auto& r : rows) {
        json item;
        item["group"] = r.report.universal_group.str();
        item["type"] = type_json(r.report.type);
        item["provenance"] = r.report.provenance;
        item["tuple"] = provenance_parts(r.report.provenance).second;
        if (r.report.unverified_count) item["unverified_count"] = true;
        out["reports"].push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

std::string reports_to_table(const std::string& family, long n,
                             const std::vector<EmittedGrading>& rows) {
    std::ostringstream os;
    os << "family\tn\tD\ttuple\tgroup\ttype\n";
    for (const auto& r : rows) {
        auto [d, tuple] = provenance_parts(r.report.provenance);
        os << family << "\t" << n << "\t" << d << "\t" << tuple << "\t"
           << r.report.universal_group.str() << "\t" << type_str(r.report.type);
        if (r.report.unverified_count) os << "\t(unverified count)";
        os << "\n";
    }
    return os.str();
}

std::string d4_to_json(const std::vector<D4Row>& rows) {
    json out;
    out["family"] = "so";
    out["n"] = 8;
    out["count"] = rows.size();
    out["reports"] = json::array();
    for (const auto& r : rows) {
        json item;
        item["index"] = r.index;
        item["group"] = r.group.str();
        item["type"] = type_json(r.type);
        item["provenance"] = r.provenance;
        out["reports"].push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

std::string d4_to_table(const std::vector<D4Row>& rows) {
    std::ostringstream os;
    os << "index\tgroup\ttype\tprovenance\n";
    for (const auto& r : rows)
        os << r.index << "\t" << r.group.str() << "\t" << type_str(r.type) << "\t" << r.provenance
           << "\n";
    return os.str();
}

std::string form_spec_to_json(const FormSpec& spec) {
    json out;
    out["division"] = {{"m", spec.division.factors.size()}, {"factors", spec.division.factors}};
    out["involution"] = kind_str(spec.tau.kind());
    json labels = json::array();
    for (const auto& h : spec.d_labels) {
        json coords = json::array();
        for (const auto& c : h.coords()) coords.push_back(c.get_si());
        labels.push_back(std::move(coords));
    }
    out["d_labels"] = std::move(labels);
    json nus = json::array();
    for (const auto& nu : spec.nus) {
        auto [n, k] = nu.root_of_unity_exponent();
        nus.push_back({{"n", n}, {"k", k}});
    }
    out["nus"] = std::move(nus);
    return out.dump(2) + "\n";
}

std::string grading_bases_dump(const MatGrading& g) {
    std::ostringstream os;
    os << "group " << g.group().str() << "\n";
    os << "components " << g.component_count() << "\n";
    for (const auto& [lab, basis] : g.components()) {
        os << "label " << lab.str() << " dim " << basis.size() << "\n";
        for (const auto& m : basis) os << m.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace fgr
