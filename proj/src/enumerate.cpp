#include "finegrading/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fgr {

namespace {

bool is_prime_power(long q) {
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q prime
}

// multisets of prime powers (non-decreasing) whose product divides n
void inner_multisets(long n, long min_factor, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
    out.push_back(cur);
    for (long q = min_factor; q <= n; ++q) {
        if (n % q != 0 || !is_prime_power(q)) continue;
        cur.push_back(q);
        inner_multisets(n / q, q, cur, out);
        cur.pop_back();
    }
}

std::string inner_name(const std::vector<long>& factors) {
    if (factors.empty()) return "[F]";
    std::ostringstream os;
    os << "[";
    size_t i = 0;
    bool first = true;
    while (i < factors.size()) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!first) os << " x ";
        first = false;
        std::string base = factors[i] == 2 ? "Q" : "A_" + std::to_string(factors[i]);
        os << base;
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    os << "]";
    return os.str();
}

// non-decreasing label tuples of length p over [0, size)
void tuples_over(HLabel size, int p, std::vector<HLabel>& cur,
                 std::vector<std::vector<HLabel>>& out) {
    if (int(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (HLabel h = cur.empty() ? 0 : cur.back(); h < size; ++h) {
        cur.push_back(h);
        tuples_over(size, p, cur, out);
        cur.pop_back();
    }
}

FormSpec class_spec(int r, const std::vector<HLabel>& labels, long s, GradedInvolution::Kind kind,
                    const CycNum& nu) {
    DivisionAlgebra d = division_algebra(std::vector<long>(size_t(r), 2));
    FormSpec spec{d, GradedInvolution::reference(d, kind), {}, {}, {}};
    for (HLabel h : labels) spec.d_labels.push_back(bits_to_label(spec.division, h));
    for (long j = 0; j < s; ++j) spec.nus.push_back(nu);
    return spec;
}

// provenance for a form class: reference involution of the pipeline's kind
// together with the representative labels (the canonical state's sign table
// need not have the reference kind, so the display is built from these)
std::string star_display(int r, GradedInvolution::Kind kind, const std::vector<HLabel>& labels) {
    std::ostringstream os;
    std::string dname = r == 0 ? "F" : (r == 1 ? "Q" : "Q^" + std::to_string(r));
    std::string tname;
    if (r == 0)
        tname = "id";
    else if (kind == GradedInvolution::Kind::Orthogonal)
        tname = r == 1 ? "tau_o" : "tau_o^" + std::to_string(r);
    else if (r == 1)
        tname = "tau_s";
    else
        tname = r == 2 ? "tau_s x tau_o" : "tau_s x tau_o^" + std::to_string(r - 1);
    os << "[(" << dname << "," << tname << "),(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << render_label_bits(r, labels[i]);
    }
    os << ")]";
    return os.str();
}

GradingReport make_report(const std::string& family, long n, const LieGrading& lie,
                          const std::string& provenance) {
    GradingReport r;
    r.family = family;
    r.n = n;
    r.universal_group = lie.group();
    r.type = type_of(lie);
    r.component_count = lie.component_count();
    r.provenance = provenance;
    return r;
}

struct Candidate {
    long dsize;  // |Supp D|
    std::string provenance;
    EmittedGrading emitted;
};

std::vector<EmittedGrading> finalize(std::vector<Candidate> cands) {
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.dsize != b.dsize) return a.dsize < b.dsize;
        return a.provenance < b.provenance;
    });
    std::vector<EmittedGrading> out;
    for (auto& c : cands) out.push_back(std::move(c.emitted));
    return out;
}

// outer classes for K(R,*) pipelines: canonical I2 tuples of symmetric labels
// over the reference involution of the requested kind
std::vector<Candidate> star_classes(const std::string& family, long n,
                                    GradedInvolution::Kind kind) {
    std::vector<Candidate> cands;
    for (int r = 0; (long(1) << r) <= n; ++r) {
        const long block = long(1) << r;
        if (n % block != 0) continue;
        const long rank = n / block;
        if (r == 0) {
            if (kind == GradedInvolution::Kind::Symplectic) {
                // no skew elements in F: hyperbolic blocks with nu = i
                FormSpec spec = class_spec(0, {}, rank / 2, GradedInvolution::Kind::Orthogonal,
                                           CycNum::root_of_unity(4, 1));
                auto k = skew_part(refined_grading(spec).grading, build_phi(spec).m);
                auto uni = universal_group_of(k);
                cands.push_back({1, "[(F,id),()]",
                                 {make_report(family, n, uni.relabeled, "[(F,id),()]"),
                                  std::move(uni.relabeled), std::move(spec)}});
            } else {
                for (long p = rank % 2 == 0 ? 0 : 1; p <= rank; p += 2) {
                    long s = (rank - p) / 2;
                    if (p == 2 && s == 0) continue;  // degenerate, not fine
                    std::ostringstream prov;
                    prov << "[(F,id),(";
                    for (long i = 0; i < p; ++i) prov << (i ? ",0" : "0");
                    prov << ")]";
                    std::vector<HLabel> labels(size_t(p), 0);
                    FormSpec spec =
                        class_spec(0, labels, s, GradedInvolution::Kind::Orthogonal, CycNum(1));
                    auto k = skew_part(refined_grading(spec).grading, build_phi(spec).m);
                    auto uni = universal_group_of(k);
                    cands.push_back({1, prov.str(),
                                     {make_report(family, n, uni.relabeled, prov.str()),
                                      std::move(uni.relabeled), std::move(spec)}});
                }
            }
            continue;
        }
        // D = Q^r with the reference involution of the right kind
        DivisionAlgebra d = division_algebra(std::vector<long>(size_t(r), 2));
        GradedInvolution tau = GradedInvolution::reference(d, kind);
        std::uint64_t sign = sign_bits_of(d, tau);
        std::vector<HLabel> sym;
        for (HLabel h = 0; h < (HLabel(1) << (2 * r)); ++h)
            if (!((sign >> h) & 1)) sym.push_back(h);
        // representative = first enumerated tuple of each class (its labels are
        // symmetric for the reference involution, unlike the canonical state's)
        std::map<std::string, std::pair<std::vector<HLabel>, std::string>> classes;
        for (long p = rank % 2 == 0 ? 0 : 1; p <= rank; p += 2) {
            long s = (rank - p) / 2;
            std::vector<std::vector<HLabel>> idx;
            std::vector<HLabel> cur;
            tuples_over(HLabel(sym.size()), int(p), cur, idx);
            for (const auto& t : idx) {
                std::vector<HLabel> labels;
                for (HLabel i : t) labels.push_back(sym[i]);
                if (p == 2 && s == 0 && labels[0] == labels[1]) continue;  // not fine
                auto cls = canonicalize_I2({r, labels, sign});
                classes.emplace(cls.key, std::make_pair(labels, star_display(r, kind, labels)));
            }
        }
        for (const auto& [_, rep] : classes) {
            const auto& [labels, display] = rep;
            long s = (rank - long(labels.size())) / 2;
            FormSpec spec = class_spec(r, labels, s, kind, CycNum(1));
            auto k = skew_part(refined_grading(spec).grading, build_phi(spec).m);
            auto uni = universal_group_of(k);
            cands.push_back({block * block, display,
                             {make_report(family, n, uni.relabeled, display),
                              std::move(uni.relabeled), std::move(spec)}});
        }
    }
    return cands;
}

}  // namespace

std::vector<EmittedGrading> fine_gradings_sl(long n, const PipelineOptions& opts) {
    if (n < 2) throw std::runtime_error("fine_gradings_sl: n >= 2 required");
    if (n > opts.max_n) throw std::runtime_error("fine_gradings_sl: n exceeds the configured bound");
    std::vector<Candidate> cands;
    const bool unverified = (n % 2 == 1 && n > 3);

    if (n == 2) {
        // both fine gradings of Mat_2 restrict: the Cartan and division gradings
        auto cart = universal_group_of(sl_restriction(cartan_grading(2)));
        cands.push_back({1, "[F]", {make_report("sl", 2, cart.relabeled, "[F]"), cart.relabeled}});
        auto div = universal_group_of(sl_restriction(pauli_grading(2)));
        cands.push_back({4, "[Q]", {make_report("sl", 2, div.relabeled, "[Q]"), div.relabeled}});
        return finalize(std::move(cands));
    }

    // inner classes: graded division supports, excluding [Q^m] with 2^m in {n, n/2}
    std::vector<std::vector<long>> multisets;
    std::vector<long> cur;
    inner_multisets(n, 2, cur, multisets);
    for (const auto& factors : multisets) {
        bool all2 = std::all_of(factors.begin(), factors.end(), [](long f) { return f == 2; });
        long size = 1;
        for (long f : factors) size *= f;
        if (all2 && !factors.empty() && (size == n || 2 * size == n)) continue;
        if (all2 && factors.empty() && (1 == n || 2 == n)) continue;  // m = 0 case of the rule
        DivisionAlgebra d = division_algebra(factors);
        long mc = n / size;
        MatGrading assoc = mc == 1 ? d.grading : tensor_grading(cartan_grading(mc), d.grading);
        auto uni = universal_group_of(sl_restriction(assoc));
        GradingReport rep = make_report("sl", n, uni.relabeled, inner_name(factors));
        rep.unverified_count = unverified;
        cands.push_back({size * size, inner_name(factors), {std::move(rep), uni.relabeled}});
    }

    // outer classes: canonicalized I-tuples over Q^r with (p+2s) 2^r = n
    for (int r = 0; (long(1) << r) <= n; ++r) {
        const long block = long(1) << r;
        if (n % block != 0) continue;
        const long rank = n / block;
        std::map<std::string, CanonicalClass> classes;
        for (long p = rank % 2; p <= rank; p += 2) {
            long s = (rank - p) / 2;
            std::vector<std::vector<HLabel>> idx;
            std::vector<HLabel> cur2;
            tuples_over(HLabel(1) << (2 * r), int(p), cur2, idx);
            for (const auto& labels : idx) {
                if (p == 2 && s == 0 && labels[0] == labels[1]) continue;  // not fine
                auto cls = canonicalize_I({r, labels});
                classes.emplace(cls.key, cls);
            }
        }
        for (const auto& [_, cls] : classes) {
            long s = (rank - long(cls.labels.size())) / 2;
            FormSpec spec =
                class_spec(r, cls.labels, s, GradedInvolution::Kind::Orthogonal, CycNum(1));
            auto lie = outer_sl_grading(spec);
            GradingReport rep = make_report("sl", n, lie, cls.display());
            rep.unverified_count = unverified;
            cands.push_back(
                {block * block, cls.display(), {std::move(rep), std::move(lie), std::move(spec)}});
        }
    }
    return finalize(std::move(cands));
}

std::vector<EmittedGrading> fine_gradings_sp(long n, const PipelineOptions& opts) {
    if (n % 2 != 0 || n < 6) {
        if (n == 4)
            throw std::runtime_error("fine_gradings_sp: sp4 = so5 is handled by the so pipeline");
        throw std::runtime_error("fine_gradings_sp: even n >= 6 required");
    }
    if (n > opts.max_n) throw std::runtime_error("fine_gradings_sp: n exceeds the configured bound");
    return finalize(star_classes("sp", n, GradedInvolution::Kind::Symplectic));
}

std::vector<EmittedGrading> fine_gradings_so(long n, const PipelineOptions& opts, bool pre_merge) {
    if (n < 5) throw std::runtime_error("fine_gradings_so: n >= 5 required");
    if (n == 6)
        throw std::runtime_error(
            "fine_gradings_so: so6 = sl4 (the restriction map on automorphisms is not onto); "
            "use the sl pipeline with n = 4");
    if (n == 8 && !pre_merge)
        throw std::runtime_error(
            "fine_gradings_so: so8 has outer order-3 automorphisms (triality); use the d4 table, "
            "or pre-merge mode for the matrix-level class list");
    if (n > opts.max_n) throw std::runtime_error("fine_gradings_so: n exceeds the configured bound");
    return finalize(star_classes("so", n, GradedInvolution::Kind::Orthogonal));
}

std::string group_str(const FinAbGroup& g) { return g.str(); }

}  // namespace fgr
