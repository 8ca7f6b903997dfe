#include "finegrading/invariants.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgr {

int beta_bits(int m, HLabel a, HLabel b) {
    int acc = 0;
    for (int t = 0; t < m; ++t) {
        int ax = (a >> (2 * t)) & 1, ay = (a >> (2 * t + 1)) & 1;
        int bx = (b >> (2 * t)) & 1, by = (b >> (2 * t + 1)) & 1;
        acc ^= (ax & by) ^ (ay & bx);
    }
    return acc;
}

std::vector<HLabel> transvection_table(int m, HLabel v) {
    const HLabel size = HLabel(1) << (2 * m);
    std::vector<HLabel> t(size);
    for (HLabel x = 0; x < size; ++x) t[x] = beta_bits(m, x, v) ? (x ^ v) : x;
    return t;
}

const std::vector<std::vector<HLabel>>& symplectic_group(int m) {
    static std::map<int, std::vector<std::vector<HLabel>>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m > 2) throw std::runtime_error("symplectic_group: full enumeration limited to m <= 2");
    const HLabel size = HLabel(1) << (2 * m);
    std::vector<std::vector<HLabel>> gens;
    for (HLabel v = 1; v < size; ++v) gens.push_back(transvection_table(m, v));
    std::vector<HLabel> id(size);
    for (HLabel x = 0; x < size; ++x) id[x] = x;
    std::set<std::vector<HLabel>> seen{id};
    std::queue<std::vector<HLabel>> work;
    work.push(id);
    while (!work.empty()) {
        auto cur = work.front();
        work.pop();
        for (const auto& g : gens) {
            std::vector<HLabel> nxt(size);
            for (HLabel x = 0; x < size; ++x) nxt[x] = g[cur[x]];
            if (seen.insert(nxt).second) work.push(nxt);
        }
    }
    auto& out = cache[m];
    out.assign(seen.begin(), seen.end());
    return out;
}

namespace {

std::vector<HLabel> sorted(std::vector<HLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// I-orbit state: sorted label multiset
using IState = std::vector<HLabel>;
// I2-orbit state: (sign table, sorted labels)
using I2State = std::pair<std::uint64_t, std::vector<HLabel>>;

std::string encode_i(int m, const IState& s) {
    std::ostringstream os;
    os << "I:" << m << ":";
    for (HLabel h : s) os << h << ",";
    return os.str();
}

std::string encode_i2(int m, const I2State& s) {
    std::ostringstream os;
    os << "I2:" << m << ":" << s.first << ":";
    for (HLabel h : s.second) os << h << ",";
    return os.str();
}

}  // namespace

CanonicalClass canonicalize_I(const ITuple& t) {
    const int m = t.m;
    const HLabel size = HLabel(1) << (2 * m);
    std::vector<std::vector<HLabel>> tvs;
    for (HLabel v = 1; v < size; ++v) tvs.push_back(transvection_table(m, v));

    IState start = sorted(t.labels);
    std::set<IState> seen{start};
    std::queue<IState> work;
    work.push(start);
    IState best = start;
    while (!work.empty()) {
        IState cur = work.front();
        work.pop();
        if (cur < best) best = cur;
        auto push = [&](IState s) {
            if (seen.insert(s).second) work.push(std::move(s));
        };
        for (HLabel z = 1; z < size; ++z) {
            IState nxt = cur;
            for (auto& h : nxt) h ^= z;
            push(sorted(std::move(nxt)));
        }
        for (const auto& tv : tvs) {
            IState nxt = cur;
            for (auto& h : nxt) h = tv[h];
            push(sorted(std::move(nxt)));
        }
    }
    CanonicalClass c;
    c.m = m;
    c.labels = best;
    c.is_i2 = false;
    c.key = encode_i(m, best);
    return c;
}

CanonicalClass canonicalize_I2(const I2Tuple& t) {
    const int m = t.m;
    const HLabel size = HLabel(1) << (2 * m);
    for (HLabel h : t.labels)
        if (((t.sign_bits >> h) & 1) != ((t.sign_bits >> t.labels[0]) & 1))
            throw std::runtime_error("mixed symmetric/skew tuple");

    std::vector<std::vector<HLabel>> tvs;
    for (HLabel v = 1; v < size; ++v) tvs.push_back(transvection_table(m, v));

    I2State start{t.sign_bits, sorted(t.labels)};
    std::set<I2State> seen{start};
    std::queue<I2State> work;
    work.push(start);
    I2State best = start;
    while (!work.empty()) {
        I2State cur = work.front();
        work.pop();
        if (cur < best) best = cur;
        auto push = [&](I2State s) {
            if (seen.insert(s).second) work.push(std::move(s));
        };
        // twist by z: labels shift, sign'(h) = sign(h) xor beta(z, h)
        for (HLabel z = 1; z < size; ++z) {
            I2State nxt;
            nxt.second = cur.second;
            for (auto& h : nxt.second) h ^= z;
            std::sort(nxt.second.begin(), nxt.second.end());
            nxt.first = 0;
            for (HLabel h = 0; h < size; ++h) {
                int s = int((cur.first >> h) & 1) ^ beta_bits(m, z, h);
                if (s) nxt.first |= std::uint64_t(1) << h;
            }
            push(std::move(nxt));
        }
        // symplectic map: labels permute, sign'(phi(h)) = sign(h)
        for (const auto& tv : tvs) {
            I2State nxt;
            nxt.second = cur.second;
            for (auto& h : nxt.second) h = tv[h];
            std::sort(nxt.second.begin(), nxt.second.end());
            nxt.first = 0;
            for (HLabel h = 0; h < size; ++h)
                if ((cur.first >> h) & 1) nxt.first |= std::uint64_t(1) << tv[h];
            push(std::move(nxt));
        }
    }
    CanonicalClass c;
    c.m = m;
    c.labels = best.second;
    c.sign_bits = best.first;
    c.is_i2 = true;
    c.key = encode_i2(m, best);
    return c;
}

bool equivalent(const ITuple& a, const ITuple& b) {
    if (a.m != b.m) throw std::runtime_error("equivalent: division algebras differ");
    return canonicalize_I(a).key == canonicalize_I(b).key;
}

bool equivalent(const I2Tuple& a, const I2Tuple& b) {
    if (a.m != b.m) throw std::runtime_error("equivalent: division algebras differ");
    return canonicalize_I2(a).key == canonicalize_I2(b).key;
}

HLabel label_to_bits(const DivisionAlgebra& d, const GrpElt& h) {
    auto exps = d.exponents(h);
    HLabel bits = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i]) bits |= HLabel(1) << i;
    return bits;
}

GrpElt bits_to_label(const DivisionAlgebra& d, HLabel h) {
    std::vector<long> exps(2 * d.factors.size(), 0);
    for (size_t i = 0; i < exps.size(); ++i) exps[i] = (h >> i) & 1;
    return d.label(exps);
}

std::uint64_t sign_bits_of(const DivisionAlgebra& d, const GradedInvolution& tau) {
    const int m = int(d.factors.size());
    std::uint64_t bits = 0;
    for (HLabel h = 0; h < (HLabel(1) << (2 * m)); ++h)
        if (tau.sign(bits_to_label(d, h)) < 0) bits |= std::uint64_t(1) << h;
    return bits;
}

std::string render_label_bits(int m, HLabel h) {
    if (m == 0) return "0";
    std::string s;
    for (int t = 0; t < m; ++t) {
        if (t) s += "|";
        s += char('0' + ((h >> (2 * t)) & 1));
        s += char('0' + ((h >> (2 * t + 1)) & 1));
    }
    return s;
}

std::string CanonicalClass::display() const {
    std::ostringstream os;
    std::string dname = m == 0 ? "F" : (m == 1 ? "Q" : "Q^" + std::to_string(m));
    if (is_i2) {
        // kind from the sign table: count of -1's
        long minus = 0;
        for (HLabel h = 0; h < (HLabel(1) << (2 * m)); ++h)
            if ((sign_bits >> h) & 1) ++minus;
        long total = long(1) << (2 * m);
        std::string kind = (total - 2 * minus > 0) ? "orthogonal" : "symplectic";
        os << "[(" << dname << "," << kind << "),(";
    } else {
        os << "[" << dname << ",(";
    }
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << render_label_bits(m, labels[i]);
    }
    os << ")]";
    return os.str();
}

GradedAutomorphism realize_symplectic(const DivisionAlgebra& d, const std::vector<HLabel>& phi) {
    const int m = int(d.factors.size());
    const HLabel size = HLabel(1) << (2 * m);
    if (phi.size() != size) throw std::runtime_error("realize_symplectic: table size mismatch");
    // generator images: unit-scaled representatives at the mapped labels
    std::vector<CycMatrix> gen_img(2 * m);
    for (int i = 0; i < 2 * m; ++i)
        gen_img[i] = unit_rep(d.grading, bits_to_label(d, phi[HLabel(1) << i]));
    GradedAutomorphism a;
    a.images.resize(size);
    for (HLabel h = 0; h < size; ++h) {
        CycMatrix img = CycMatrix::identity(d.matrix_size());
        for (int i = 0; i < 2 * m; ++i)
            if ((h >> i) & 1) img = img * gen_img[i];
        a.images[h] = img;
    }
    return a;
}

namespace {

// scalar c with x = c * y, for y a nonzero scalar multiple of an invertible
// homogeneous representative; nullopt if not proportional
std::optional<CycNum> proportionality(const CycMatrix& x, const CycMatrix& y) {
    CycNum c;
    bool found = false;
    for (size_t i = 0; i < y.rows(); ++i)
        for (size_t j = 0; j < y.cols(); ++j) {
            if (y.at(i, j).is_zero()) {
                if (!x.at(i, j).is_zero()) return std::nullopt;
                continue;
            }
            CycNum r = x.at(i, j) * y.at(i, j).inverse();
            if (!found) {
                c = r;
                found = true;
            } else if (r != c) {
                return std::nullopt;
            }
        }
    if (!found) return std::nullopt;
    return c;
}

}  // namespace

bool verify_automorphism(const DivisionAlgebra& d, const GradedAutomorphism& a, bool all_pairs) {
    const int m = int(d.factors.size());
    const HLabel size = HLabel(1) << (2 * m);
    auto rep = [&](HLabel h) { return d.rep(d.exponents(bits_to_label(d, h))); };
    auto check_pair = [&](HLabel g, HLabel h) {
        // rep_g rep_h = c rep_{g^h}; the images must satisfy the same relation
        CycMatrix lhs = rep(g) * rep(h);
        auto c = proportionality(lhs, rep(g ^ h));
        if (!c) return false;
        CycMatrix li = a.images[g] * a.images[h];
        CycMatrix ri = a.images[g ^ h].scaled(*c);
        return li == ri;
    };
    if (all_pairs) {
        for (HLabel g = 0; g < size; ++g)
            for (HLabel h = 0; h < size; ++h)
                if (!check_pair(g, h)) return false;
        return true;
    }
    for (int i = 0; i < 2 * m; ++i)
        for (HLabel h = 0; h < size; ++h)
            if (!check_pair(HLabel(1) << i, h) || !check_pair(h, HLabel(1) << i)) return false;
    return true;
}

namespace {

bool multiset_match(std::vector<HLabel> a, std::vector<HLabel> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// verify at matrix level that Phi(z d_i) lands in the line of d'_{pi(i)}
bool witness_maps_tuple(const DivisionAlgebra& d, const GradedAutomorphism& aut,
                        const std::vector<HLabel>& phi, HLabel z, const std::vector<HLabel>& a,
                        const std::vector<HLabel>& b) {
    auto urep = [&](HLabel h) { return unit_rep(d.grading, bits_to_label(d, h)); };
    std::vector<bool> used(b.size(), false);
    for (HLabel ai : a) {
        // Phi(z * d_i): compute the product then map through the images
        CycMatrix zd = urep(z) * urep(ai);
        auto c = proportionality(zd, d.rep(d.exponents(bits_to_label(d, z ^ ai))));
        if (!c) return false;
        CycMatrix img = aut.images[z ^ ai].scaled(*c);
        // find an unused target label whose line contains the image
        bool placed = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j] || b[j] != phi[z ^ ai]) continue;
            if (proportionality(img, urep(b[j]))) {
                used[j] = true;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return true;
}

}  // namespace

bool matrix_equivalent_I(const DivisionAlgebra& d, const std::vector<HLabel>& a,
                         const std::vector<HLabel>& b) {
    if (a.size() != b.size()) return false;
    const int m = int(d.factors.size());
    const HLabel size = HLabel(1) << (2 * m);
    for (const auto& phi : symplectic_group(m))
        for (HLabel z = 0; z < size; ++z) {
            std::vector<HLabel> mapped;
            for (HLabel ai : a) mapped.push_back(phi[ai ^ z]);
            if (!multiset_match(mapped, b)) continue;
            GradedAutomorphism aut = realize_symplectic(d, phi);
            if (!verify_automorphism(d, aut, /*all_pairs=*/m <= 1)) continue;
            if (witness_maps_tuple(d, aut, phi, z, a, b)) return true;
        }
    return false;
}

bool matrix_equivalent_I2(const DivisionAlgebra& d, const GradedInvolution& tau,
                          const std::vector<HLabel>& a, const std::vector<HLabel>& b) {
    if (a.size() != b.size()) return false;
    const int m = int(d.factors.size());
    const HLabel size = HLabel(1) << (2 * m);
    std::uint64_t sign = sign_bits_of(d, tau);
    for (const auto& phi : symplectic_group(m))
        for (HLabel z = 0; z < size; ++z) {
            std::vector<HLabel> mapped;
            for (HLabel ai : a) mapped.push_back(phi[ai ^ z]);
            if (!multiset_match(mapped, b)) continue;
            // sign transport: sign'(phi(h)) = sign(h) xor beta(z, h) must equal sign
            bool ok = true;
            for (HLabel h = 0; h < size && ok; ++h) {
                int sz = int((sign >> h) & 1) ^ beta_bits(m, z, h);
                if (sz != int((sign >> phi[h]) & 1)) ok = false;
            }
            if (!ok) continue;
            GradedAutomorphism aut = realize_symplectic(d, phi);
            if (!verify_automorphism(d, aut, /*all_pairs=*/m <= 1)) continue;
            if (!witness_maps_tuple(d, aut, phi, z, a, b)) continue;
            // matrix-level transport: Phi tau^z = tau Phi on all representatives
            GradedInvolution twisted = tau.twist(bits_to_label(d, z));
            bool transport = true;
            for (HLabel h = 0; h < size && transport; ++h) {
                CycMatrix r = d.rep(d.exponents(bits_to_label(d, h)));
                CycMatrix lhs = twisted.apply(r);
                // push lhs through the automorphism: lhs = c * rep_h
                auto c = proportionality(lhs, r);
                if (!c) {
                    transport = false;
                    break;
                }
                CycMatrix phil = aut.images[h].scaled(*c);
                CycMatrix rhs = tau.apply(aut.images[h]);
                if (phil != rhs) transport = false;
            }
            if (transport) return true;
        }
    return false;
}

namespace {

// enumerate all non-decreasing label tuples of length p over [0, size)
void enumerate_tuples(HLabel size, int p, std::vector<HLabel>& cur,
                      std::vector<std::vector<HLabel>>& out) {
    if (int(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    HLabel start = cur.empty() ? 0 : cur.back();
    for (HLabel h = start; h < size; ++h) {
        cur.push_back(h);
        enumerate_tuples(size, p, cur, out);
        cur.pop_back();
    }
}

// canonical key by direct minimization over the full group (m <= 2); agrees
// with the breadth-first orbit closure of canonicalize_I
std::vector<HLabel> fullgroup_min_I(int m, const std::vector<HLabel>& labels) {
    const HLabel size = HLabel(1) << (2 * m);
    std::vector<HLabel> best = sorted(labels);
    std::vector<HLabel> mapped(labels.size());
    for (const auto& phi : symplectic_group(m))
        for (HLabel z = 0; z < size; ++z) {
            for (size_t i = 0; i < labels.size(); ++i) mapped[i] = phi[labels[i] ^ z];
            std::sort(mapped.begin(), mapped.end());
            if (mapped < best) best = mapped;
        }
    return best;
}

I2State fullgroup_min_I2(int m, const std::vector<HLabel>& labels, std::uint64_t sign) {
    const HLabel size = HLabel(1) << (2 * m);
    I2State best{sign, sorted(labels)};
    std::vector<HLabel> mapped(labels.size());
    for (const auto& phi : symplectic_group(m))
        for (HLabel z = 0; z < size; ++z) {
            for (size_t i = 0; i < labels.size(); ++i) mapped[i] = phi[labels[i] ^ z];
            std::sort(mapped.begin(), mapped.end());
            std::uint64_t ns = 0;
            for (HLabel h = 0; h < size; ++h) {
                int s = int((sign >> h) & 1) ^ beta_bits(m, z, h);
                if (s) ns |= std::uint64_t(1) << phi[h];
            }
            I2State cand{ns, mapped};
            if (cand < best) best = cand;
        }
    return best;
}

// lazily verified realizations, one per symplectic table
class RealizationCache {
public:
    explicit RealizationCache(const DivisionAlgebra& d) : d_(d) {}
    const GradedAutomorphism* get(size_t phi_index) {
        const int m = int(d_.factors.size());
        if (auts_.size() <= phi_index) auts_.resize(symplectic_group(m).size());
        auto& slot = auts_[phi_index];
        if (!slot.checked) {
            slot.checked = true;
            slot.aut = realize_symplectic(d_, symplectic_group(m)[phi_index]);
            slot.ok = verify_automorphism(d_, slot.aut, /*all_pairs=*/m <= 1);
        }
        return slot.ok ? &slot.aut : nullptr;
    }

private:
    struct Slot {
        bool checked = false;
        bool ok = false;
        GradedAutomorphism aut;
    };
    const DivisionAlgebra& d_;
    std::vector<Slot> auts_;
};

}  // namespace

CrossValidation cross_validate_I(int m, int max_p) {
    CrossValidation cv;
    const HLabel size = HLabel(1) << (2 * m);
    DivisionAlgebra d = division_algebra(std::vector<long>(m, 2));
    const auto& sp = symplectic_group(m);
    RealizationCache cache(d);

    std::vector<std::vector<HLabel>> tuples;
    for (int p = 0; p <= max_p; ++p) {
        std::vector<HLabel> cur;
        enumerate_tuples(size, p, cur, tuples);
    }
    // matrix witness for a (phi, z) pair mapping tuple a onto tuple b
    auto matrix_witness = [&](const std::vector<HLabel>& a, const std::vector<HLabel>& b) {
        std::vector<HLabel> mapped(a.size());
        for (size_t pi = 0; pi < sp.size(); ++pi)
            for (HLabel z = 0; z < size; ++z) {
                for (size_t i = 0; i < a.size(); ++i) mapped[i] = sp[pi][a[i] ^ z];
                if (!multiset_match(mapped, b)) continue;
                const GradedAutomorphism* aut = cache.get(pi);
                if (!aut) continue;
                if (witness_maps_tuple(d, *aut, sp[pi], z, a, b)) return true;
            }
        return false;
    };

    std::map<std::vector<HLabel>, std::vector<HLabel>> reps;  // canonical -> representative
    long sampled = 0;
    for (const auto& t : tuples) {
        ++cv.tuples;
        auto key = fullgroup_min_I(m, t);
        // spot agreement between the direct minimum and the orbit closure
        if (sampled < 25 && (cv.tuples % 97) == 0) {
            ++sampled;
            if (canonicalize_I({m, t}).labels != key) ++cv.disagreements;
        }
        auto it = reps.find(key);
        if (it == reps.end()) {
            reps.emplace(key, t);
            ++cv.classes;
            continue;
        }
        if (!matrix_witness(t, it->second)) ++cv.disagreements;
    }
    std::vector<std::vector<HLabel>> rep_list;
    for (const auto& [_, t] : reps) rep_list.push_back(t);
    for (size_t i = 0; i < rep_list.size(); ++i)
        for (size_t j = i + 1; j < rep_list.size(); ++j)
            if (rep_list[i].size() == rep_list[j].size() && matrix_witness(rep_list[i], rep_list[j]))
                ++cv.disagreements;
    return cv;
}

CrossValidation cross_validate_I2(int m, int max_p, GradedInvolution::Kind kind) {
    CrossValidation cv;
    const HLabel size = HLabel(1) << (2 * m);
    DivisionAlgebra d = division_algebra(std::vector<long>(m, 2));
    GradedInvolution tau = GradedInvolution::reference(d, kind);
    std::uint64_t sign = sign_bits_of(d, tau);
    const auto& sp = symplectic_group(m);
    RealizationCache cache(d);

    std::vector<HLabel> sym;  // the enumerations' normal form uses symmetric labels
    for (HLabel h = 0; h < size; ++h)
        if (!((sign >> h) & 1)) sym.push_back(h);
    std::vector<std::vector<HLabel>> tuples;
    for (int p = 0; p <= max_p; ++p) {
        std::vector<std::vector<HLabel>> raw;
        std::vector<HLabel> cur;
        enumerate_tuples(HLabel(sym.size()), p, cur, raw);
        for (auto& t : raw) {
            std::vector<HLabel> lab;
            for (HLabel i : t) lab.push_back(sym[i]);
            tuples.push_back(std::move(lab));
        }
    }
    auto matrix_witness = [&](const std::vector<HLabel>& a, const std::vector<HLabel>& b) {
        std::vector<HLabel> mapped(a.size());
        for (size_t pi = 0; pi < sp.size(); ++pi)
            for (HLabel z = 0; z < size; ++z) {
                for (size_t i = 0; i < a.size(); ++i) mapped[i] = sp[pi][a[i] ^ z];
                if (!multiset_match(mapped, b)) continue;
                bool ok = true;  // sign transport back to the reference table
                for (HLabel h = 0; h < size && ok; ++h) {
                    int sz = int((sign >> h) & 1) ^ beta_bits(m, z, h);
                    if (sz != int((sign >> sp[pi][h]) & 1)) ok = false;
                }
                if (!ok) continue;
                const GradedAutomorphism* aut = cache.get(pi);
                if (!aut) continue;
                if (witness_maps_tuple(d, *aut, sp[pi], z, a, b)) return true;
            }
        return false;
    };

    std::map<I2State, std::vector<HLabel>> reps;
    long sampled = 0;
    for (const auto& t : tuples) {
        ++cv.tuples;
        I2State key = fullgroup_min_I2(m, t, sign);
        if (sampled < 25 && (cv.tuples % 53) == 0) {
            ++sampled;
            auto cls = canonicalize_I2({m, t, sign});
            if (cls.labels != key.second || cls.sign_bits != key.first) ++cv.disagreements;
        }
        auto it = reps.find(key);
        if (it == reps.end()) {
            reps.emplace(key, t);
            ++cv.classes;
            continue;
        }
        if (!matrix_witness(t, it->second)) ++cv.disagreements;
    }
    std::vector<std::vector<HLabel>> rep_list;
    for (const auto& [_, t] : reps) rep_list.push_back(t);
    for (size_t i = 0; i < rep_list.size(); ++i)
        for (size_t j = i + 1; j < rep_list.size(); ++j)
            if (rep_list[i].size() == rep_list[j].size() && matrix_witness(rep_list[i], rep_list[j]))
                ++cv.disagreements;
    return cv;
}

std::optional<std::vector<std::pair<char, HLabel>>> find_sign_transport(int m, std::uint64_t from,
                                                                        std::uint64_t to) {
    const HLabel size = HLabel(1) << (2 * m);
    std::map<std::uint64_t, std::pair<std::uint64_t, std::pair<char, HLabel>>> parent;
    std::queue<std::uint64_t> work;
    parent.emplace(from, std::make_pair(from, std::make_pair('i', HLabel(0))));
    work.push(from);
    while (!work.empty() && !parent.count(to)) {
        std::uint64_t cur = work.front();
        work.pop();
        for (HLabel z = 1; z < size; ++z) {
            std::uint64_t nxt = 0;
            for (HLabel h = 0; h < size; ++h) {
                int s = int((cur >> h) & 1) ^ beta_bits(m, z, h);
                if (s) nxt |= std::uint64_t(1) << h;
            }
            if (!parent.count(nxt)) {
                parent.emplace(nxt, std::make_pair(cur, std::make_pair('z', z)));
                work.push(nxt);
            }
        }
        for (HLabel v = 1; v < size; ++v) {
            auto tv = transvection_table(m, v);
            std::uint64_t nxt = 0;
            for (HLabel h = 0; h < size; ++h)
                if ((cur >> h) & 1) nxt |= std::uint64_t(1) << tv[h];
            if (!parent.count(nxt)) {
                parent.emplace(nxt, std::make_pair(cur, std::make_pair('t', v)));
                work.push(nxt);
            }
        }
    }
    if (!parent.count(to)) return std::nullopt;
    std::vector<std::pair<char, HLabel>> path;
    std::uint64_t cur = to;
    while (cur != from) {
        auto& [prev, mv] = parent.at(cur);
        path.push_back(mv);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace fgr
