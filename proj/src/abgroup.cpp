#include "finegrading/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fgr {

struct FinAbGroup::Impl {
    long free_rank = 0;
    std::vector<Integer> torsion;
    long num_generators = 0;
    // coord_count x num_generators: presentation generators in normalized coords
    std::vector<std::vector<Integer>> basis_map;
};

namespace {

const std::vector<Integer> kEmptyTorsion{};

void row_sub(std::vector<std::vector<Integer>>& m, size_t dst, size_t src, const Integer& q) {
    if (q == 0) return;
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<Integer>> a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<Integer>> u(rows, std::vector<Integer>(rows, Integer(0)));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto col_add = [&](size_t dst, size_t src, const Integer& q) {
        if (q == 0) return;
        for (size_t i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
    };

    size_t t = 0;
    const size_t steps = std::min(rows, cols);
    while (t < steps) {
        // pick the absolutely smallest nonzero entry in the trailing block as pivot
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi == rows || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // trailing block is zero
        std::swap(a[t], a[pi]);
        std::swap(u[t], u[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(a, i, t, q);
                row_sub(u, i, t, q);
                if (a[i][t] != 0) {  // remainder strictly smaller: promote it
                    std::swap(a[t], a[i]);
                    std::swap(u[t], u[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_add(j, t, -q);
                if (a[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // normalize signs
    for (size_t i = 0; i < steps; ++i)
        if (a[i][i] < 0) {
            for (auto& x : a[i]) x = -x;
            for (auto& x : u[i]) x = -x;
        }
    // enforce the divisibility chain d1 | d2 | ...
    bool chain_ok = false;
    while (!chain_ok) {
        chain_ok = true;
        for (size_t i = 0; i + 1 < steps; ++i) {
            const Integer &d = a[i][i], &e = a[i + 1][i + 1];
            if (d == 0 && e != 0) {  // zeros must trail
                std::swap(a[i], a[i + 1]);
                std::swap(u[i], u[i + 1]);
                for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][i + 1]);
                chain_ok = false;
                continue;
            }
            if (d == 0 || e == 0 || e % d == 0) continue;
            // diag(d, e) with d not dividing e: merge the two columns and
            // re-run gcd elimination on the 2x2 block, yielding (gcd, lcm)
            col_add(i, i + 1, 1);  // a[i+1][i] = e now
            while (a[i][i + 1] != 0 || a[i + 1][i] != 0) {
                if (a[i][i] == 0) {
                    std::swap(a[i], a[i + 1]);
                    std::swap(u[i], u[i + 1]);
                }
                if (a[i + 1][i] != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i + 1][i].get_mpz_t(), a[i][i].get_mpz_t());
                    row_sub(a, i + 1, i, q);
                    row_sub(u, i + 1, i, q);
                    if (a[i + 1][i] != 0) {
                        std::swap(a[i], a[i + 1]);
                        std::swap(u[i], u[i + 1]);
                        continue;
                    }
                }
                if (a[i][i + 1] != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i][i + 1].get_mpz_t(), a[i][i].get_mpz_t());
                    col_add(i + 1, i, -q);
                    if (a[i][i + 1] != 0)
                        for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][i + 1]);
                }
            }
            if (a[i][i] < 0) {
                for (auto& x2 : a[i]) x2 = -x2;
                for (auto& x2 : u[i]) x2 = -x2;
            }
            if (a[i + 1][i + 1] < 0) {
                for (auto& x2 : a[i + 1]) x2 = -x2;
                for (auto& x2 : u[i + 1]) x2 = -x2;
            }
            chain_ok = false;
        }
    }
    SmithResult r;
    r.diag.resize(steps);
    for (size_t i = 0; i < steps; ++i) r.diag[i] = a[i][i];
    r.left = std::move(u);
    return r;
}

FinAbGroup FinAbGroup::normalize(const Presentation& p) {
    const long n = p.num_generators;
    // A = relations transposed: n x k, quotient of Z^n by the column span
    std::vector<std::vector<Integer>> a(n);
    const size_t k = p.relations.size();
    for (long i = 0; i < n; ++i) {
        a[i].resize(k);
        for (size_t j = 0; j < k; ++j) {
            if (long(p.relations[j].size()) != n)
                throw std::runtime_error("Presentation: relation length mismatch");
            a[i][j] = p.relations[j][i];
        }
    }
    SmithResult s = smith_normal_form(std::move(a));

    auto impl = std::make_shared<Impl>();
    impl->num_generators = n;
    std::vector<size_t> free_rows, torsion_rows;
    for (long i = 0; i < n; ++i) {
        Integer d = (size_t(i) < s.diag.size()) ? s.diag[i] : Integer(0);
        if (d == 0)
            free_rows.push_back(i);
        else if (d == 1)
            continue;  // trivial factor dropped
        else {
            torsion_rows.push_back(i);
            impl->torsion.push_back(d);
        }
    }
    impl->free_rank = long(free_rows.size());
    for (size_t i : free_rows) impl->basis_map.push_back(s.left[i]);
    for (size_t i : torsion_rows) impl->basis_map.push_back(s.left[i]);
    return FinAbGroup(std::move(impl));
}

FinAbGroup FinAbGroup::free_group(long rank) {
    Presentation p;
    p.num_generators = rank;
    return normalize(p);
}

FinAbGroup FinAbGroup::torsion_group(const std::vector<long>& orders) {
    Presentation p;
    p.num_generators = long(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) {
        std::vector<Integer> rel(orders.size(), Integer(0));
        rel[i] = orders[i];
        p.relations.push_back(std::move(rel));
    }
    return normalize(p);
}

long FinAbGroup::free_rank() const { return impl_ ? impl_->free_rank : 0; }

const std::vector<Integer>& FinAbGroup::torsion() const {
    return impl_ ? impl_->torsion : kEmptyTorsion;
}

long FinAbGroup::coord_count() const { return free_rank() + long(torsion().size()); }

Integer FinAbGroup::order() const {
    if (!is_finite()) throw std::runtime_error("FinAbGroup::order: infinite group");
    Integer o = 1;
    for (const auto& d : torsion()) o *= d;
    return o;
}

GrpElt FinAbGroup::zero() const {
    return GrpElt(*this, std::vector<Integer>(coord_count(), Integer(0)));
}

GrpElt FinAbGroup::element(std::vector<Integer> coords) const {
    if (long(coords.size()) != coord_count())
        throw std::runtime_error("FinAbGroup::element: coordinate count mismatch");
    const auto& tor = torsion();
    for (size_t i = 0; i < tor.size(); ++i) {
        Integer& c = coords[free_rank() + i];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), tor[i].get_mpz_t());
    }
    return GrpElt(*this, std::move(coords));
}

GrpElt FinAbGroup::generator(size_t i) const {
    std::vector<Integer> c(coord_count(), Integer(0));
    if (long(i) >= coord_count()) throw std::runtime_error("FinAbGroup::generator: out of range");
    c[i] = 1;
    return element(std::move(c));
}

GrpElt FinAbGroup::from_presentation(const std::vector<Integer>& gen_coords) const {
    if (!impl_) {
        if (!gen_coords.empty()) throw std::runtime_error("from_presentation: trivial group");
        return zero();
    }
    if (long(gen_coords.size()) != impl_->num_generators)
        throw std::runtime_error("from_presentation: generator count mismatch");
    std::vector<Integer> c(coord_count(), Integer(0));
    for (long i = 0; i < coord_count(); ++i)
        for (long j = 0; j < impl_->num_generators; ++j)
            c[i] += impl_->basis_map[i][j] * gen_coords[j];
    return element(std::move(c));
}

bool FinAbGroup::isomorphic_to(const FinAbGroup& o) const {
    return free_rank() == o.free_rank() && torsion() == o.torsion();
}

std::vector<GrpElt> FinAbGroup::elements() const {
    if (!is_finite()) throw std::runtime_error("FinAbGroup::elements: infinite group");
    const auto& tor = torsion();
    std::vector<GrpElt> out;
    std::vector<Integer> c(tor.size(), Integer(0));
    while (true) {
        out.push_back(element(c));
        size_t i = tor.size();
        while (i > 0) {
            --i;
            c[i] += 1;
            if (c[i] < tor[i]) break;
            c[i] = 0;
            if (i == 0) return out;
        }
        if (tor.empty()) return out;
    }
}

std::string FinAbGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank() == 1) {
        os << "Z";
        first = false;
    } else if (free_rank() > 1) {
        os << "Z^" << free_rank();
        first = false;
    }
    for (const auto& d : torsion()) {
        if (!first) os << " x ";
        os << "Z_" << d;
        first = false;
    }
    if (first) os << "Z^0";
    return os.str();
}

void GrpElt::check_same(const GrpElt& o) const {
    if (owner_.same_group(o.owner_)) return;
    if (owner_.free_rank() == o.owner_.free_rank() && owner_.torsion() == o.owner_.torsion()) return;
    throw std::runtime_error("GrpElt: mixed owner groups");
}

bool GrpElt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
}

GrpElt GrpElt::operator+(const GrpElt& o) const {
    check_same(o);
    std::vector<Integer> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return owner_.element(std::move(c));
}

GrpElt GrpElt::operator-(const GrpElt& o) const { return *this + (-o); }

GrpElt GrpElt::operator-() const {
    std::vector<Integer> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return owner_.element(std::move(c));
}

GrpElt GrpElt::times(const Integer& k) const {
    std::vector<Integer> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = k * c_[i];
    return owner_.element(std::move(c));
}

std::optional<Integer> GrpElt::element_order() const {
    for (long i = 0; i < owner_.free_rank(); ++i)
        if (c_[i] != 0) return std::nullopt;
    Integer m = 1;
    const auto& tor = owner_.torsion();
    for (size_t i = 0; i < tor.size(); ++i) {
        const Integer& c = c_[owner_.free_rank() + i];
        Integer g = gcd(c, tor[i]);
        Integer o = tor[i] / g;
        m = lcm(m, o);
    }
    return m;
}

bool GrpElt::operator==(const GrpElt& o) const {
    check_same(o);
    return c_ == o.c_;
}

bool GrpElt::operator<(const GrpElt& o) const {
    for (size_t i = 0; i < std::min(c_.size(), o.c_.size()); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return c_.size() < o.c_.size();
}

std::string GrpElt::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

bool lattice_contains(const std::vector<std::vector<Integer>>& cols, const std::vector<Integer>& v) {
    const size_t m = v.size();
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(cols.size(), Integer(0)));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m) throw std::runtime_error("lattice_contains: length mismatch");
        for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
    }
    SmithResult s = smith_normal_form(std::move(a));
    std::vector<Integer> w(m, Integer(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) w[i] += s.left[i][j] * v[j];
    for (size_t i = 0; i < m; ++i) {
        Integer d = (i < s.diag.size()) ? s.diag[i] : Integer(0);
        if (d == 0) {
            if (w[i] != 0) return false;
        } else if (w[i] % d != 0) {
            return false;
        }
    }
    return true;
}

bool subgroup_contains(const std::vector<GrpElt>& gens, const GrpElt& elt) {
    const FinAbGroup& g = elt.owner();
    std::vector<std::vector<Integer>> cols;
    for (const auto& x : gens) cols.push_back(x.coords());
    const auto& tor = g.torsion();
    for (size_t i = 0; i < tor.size(); ++i) {
        std::vector<Integer> c(g.coord_count(), Integer(0));
        c[g.free_rank() + i] = tor[i];
        cols.push_back(std::move(c));
    }
    return lattice_contains(cols, elt.coords());
}

}  // namespace fgr
