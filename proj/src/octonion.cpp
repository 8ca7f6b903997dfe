#include "finegrading/octonion.hpp"

#include <stdexcept>

namespace fgr {

namespace {

// structure constants: prod[i][j] = sum_k table[i][j][k] b_k, entries in {-1,0,1}
struct MulTable {
    int t[8][8][8] = {};
    MulTable() {
        auto set = [&](int i, int j, int k, int c) { t[i][j][k] = c; };
        const int e1 = 0, e2 = 1, u = 2, v = 5;
        set(e1, e1, e1, 1);
        set(e2, e2, e2, 1);
        for (int i = 0; i < 3; ++i) {
            set(e1, u + i, u + i, 1);   // e1 u_i = u_i
            set(u + i, e2, u + i, 1);   // u_i e2 = u_i
            set(e2, v + i, v + i, 1);   // e2 v_i = v_i
            set(v + i, e1, v + i, 1);   // v_i e1 = v_i
            set(u + i, v + i, e1, -1);  // u_i v_i = -e1
            set(v + i, u + i, e2, -1);  // v_i u_i = -e2
            int j = (i + 1) % 3, k = (i + 2) % 3;
            set(u + i, u + j, v + k, 1);   // u_i u_{i+1} = v_{i+2}
            set(u + j, u + i, v + k, -1);  // u_{i+1} u_i = -v_{i+2}
            set(v + i, v + j, u + k, 1);   // v_i v_{i+1} = u_{i+2}
            set(v + j, v + i, u + k, -1);
        }
    }
};

const MulTable& table() {
    static MulTable t;
    return t;
}

}  // namespace

CycMatrix oct_basis_vector(int i) {
    CycMatrix x(8, 1);
    x.at(i, 0) = CycNum(1);
    return x;
}

CycMatrix oct_unit() {
    CycMatrix x(8, 1);
    x.at(0, 0) = CycNum(1);
    x.at(1, 0) = CycNum(1);
    return x;
}

CycMatrix oct_mul(const CycMatrix& x, const CycMatrix& y) {
    const auto& t = table();
    CycMatrix r(8, 1);
    for (int i = 0; i < 8; ++i) {
        if (x.at(i, 0).is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.at(j, 0).is_zero()) continue;
            CycNum c = x.at(i, 0) * y.at(j, 0);
            for (int k = 0; k < 8; ++k) {
                if (t.t[i][j][k] == 0) continue;
                r.at(k, 0) += t.t[i][j][k] > 0 ? c : -c;
            }
        }
    }
    return r;
}

const CycMatrix& oct_polar_matrix() {
    static CycMatrix q = [] {
        CycMatrix m(8, 8);
        m.at(0, 1) = m.at(1, 0) = CycNum(1);
        for (int i = 0; i < 3; ++i) m.at(2 + i, 5 + i) = m.at(5 + i, 2 + i) = CycNum(1);
        return m;
    }();
    return q;
}

CycNum oct_polar(const CycMatrix& x, const CycMatrix& y) {
    CycNum acc;
    const CycMatrix& q = oct_polar_matrix();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (q.at(i, j).is_zero()) continue;
            acc += x.at(i, 0) * y.at(j, 0) * q.at(i, j);
        }
    return acc;
}

CycNum oct_norm(const CycMatrix& x) {
    // q hyperbolic: q(x) = x_{e1} x_{e2} + sum_i x_{u_i} x_{v_i}
    CycNum acc = x.at(0, 0) * x.at(1, 0);
    for (int i = 0; i < 3; ++i) acc += x.at(2 + i, 0) * x.at(5 + i, 0);
    return acc;
}

CycMatrix oct_conj(const CycMatrix& x) {
    CycNum tr = x.at(0, 0) + x.at(1, 0);  // q(x, 1)
    CycMatrix r = -x;
    r.at(0, 0) += tr;
    r.at(1, 0) += tr;
    return r;
}

bool is_octonion_automorphism(const CycMatrix& f) {
    if (f.rows() != 8 || f.cols() != 8 || !f.is_invertible()) return false;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CycMatrix lhs = f * oct_mul(oct_basis_vector(i), oct_basis_vector(j));
            CycMatrix rhs = oct_mul(f * oct_basis_vector(i), f * oct_basis_vector(j));
            if (lhs != rhs) return false;
        }
    return true;
}

CycMatrix octonion_tau() {
    CycMatrix f(8, 8);
    f.at(0, 0) = f.at(1, 1) = CycNum(1);
    for (int i = 0; i < 3; ++i) {
        f.at(2 + (i + 1) % 3, 2 + i) = CycNum(1);
        f.at(5 + (i + 1) % 3, 5 + i) = CycNum(1);
    }
    return f;
}

CycMatrix octonion_tau_omega() {
    CycNum w = CycNum::root_of_unity(3, 1), w2 = CycNum::root_of_unity(3, 2);
    return CycMatrix::diagonal({CycNum(1), CycNum(1), CycNum(1), w, w2, CycNum(1), w2, w});
}

CycMatrix octonion_exchange() {
    CycMatrix f(8, 8);
    f.at(0, 1) = f.at(1, 0) = CycNum(1);
    for (int i = 0; i < 3; ++i) f.at(2 + i, 5 + i) = f.at(5 + i, 2 + i) = CycNum(1);
    return f;
}

CycMatrix eta_mul(const CycMatrix& x, const CycMatrix& y, const CycMatrix& eta) {
    static CycMatrix checked;  // last automorphism validated
    if (eta != checked) {
        if (!is_octonion_automorphism(eta) || eta * eta * eta != CycMatrix::identity(8))
            throw std::runtime_error("eta_mul: eta must be an automorphism with eta^3 = id");
        checked = eta;
    }
    return oct_mul(eta * oct_conj(x), eta * eta * oct_conj(y));
}

const std::vector<CycMatrix>& so8_basis() {
    static std::vector<CycMatrix> basis = [] {
        // q(f x, y) + q(x, f y) = 0  <=>  Q f + f^T Q = 0
        const CycMatrix& q = oct_polar_matrix();
        CycMatrix sys(64, 64);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 8; ++k)
                    for (int l = 0; l < 8; ++l) {
                        // coefficient of f_{kl} in (Q f + f^T Q)_{ij}
                        CycNum c;
                        if (l == i) c += q.at(k, j);  // (f^T Q)_{ij} = sum_k f_{ki} Q_{kj}
                        if (l == j) c += q.at(i, k);  // (Q f)_{ij} = sum_k Q_{ik} f_{kj}
                        if (!c.is_zero()) sys.at(i * 8 + j, k * 8 + l) = c;
                    }
        auto null = nullspace(sys);
        std::vector<CycMatrix> out;
        for (const auto& v : null) out.push_back(CycMatrix::unvec(v, 8, 8));
        if (out.size() != 28) throw std::runtime_error("so8_basis: dimension != 28");
        return out;
    }();
    return basis;
}

const std::vector<CycMatrix>& derivation_basis() {
    static std::vector<CycMatrix> basis = [] {
        // Leibniz system: d(b_i b_j) - d(b_i) b_j - b_i d(b_j) = 0, with the
        // unknowns d_{ml} (d b_l = sum_m d_{ml} b_m) in column m*8+l
        CycMatrix sys(512, 64);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                CycMatrix bij = oct_mul(oct_basis_vector(i), oct_basis_vector(j));
                for (int m = 0; m < 8; ++m) {
                    // d(b_i b_j) = sum_l (b_i b_j)_l d_{ml} at output m
                    for (int l = 0; l < 8; ++l)
                        if (!bij.at(l, 0).is_zero())
                            sys.at((i * 8 + j) * 8 + m, m * 8 + l) += bij.at(l, 0);
                    // -d(b_i) b_j = -sum_m d_{mi} (b_m b_j)
                    CycMatrix t1 = oct_mul(oct_basis_vector(m), oct_basis_vector(j));
                    CycMatrix t2 = oct_mul(oct_basis_vector(i), oct_basis_vector(m));
                    for (int k = 0; k < 8; ++k) {
                        if (!t1.at(k, 0).is_zero())
                            sys.at((i * 8 + j) * 8 + k, m * 8 + i) -= t1.at(k, 0);
                        if (!t2.at(k, 0).is_zero())
                            sys.at((i * 8 + j) * 8 + k, m * 8 + j) -= t2.at(k, 0);
                    }
                }
            }
        auto null = nullspace(sys);
        std::vector<CycMatrix> out;
        for (const auto& v : null) out.push_back(CycMatrix::unvec(v, 8, 8));
        if (out.size() != 14) throw std::runtime_error("derivation_basis: dimension != 14");
        return out;
    }();
    return basis;
}

std::vector<CycMatrix> cartan_h() {
    auto diag = [](std::vector<long> d) {
        std::vector<CycNum> c;
        for (long x : d) c.push_back(CycNum(x));
        return CycMatrix::diagonal(c);
    };
    return {diag({1, -1, 0, 0, 0, 0, 0, 0}), diag({0, 0, 1, 0, 0, -1, 0, 0}),
            diag({0, 0, 0, 1, 0, 0, -1, 0}), diag({0, 0, 0, 0, 1, 0, 0, -1})};
}

std::vector<CycNum> so_coords(const CycMatrix& d) {
    static Echelon ech = [] {
        Echelon e(64);
        for (const auto& b : so8_basis()) e.add(b.vec());
        return e;
    }();
    auto c = ech.coordinates(d.vec());
    if (!c) throw std::runtime_error("so_coords: element outside so(C,q)");
    return *c;
}

CycMatrix so_from_coords(const std::vector<CycNum>& c) {
    CycMatrix d(8, 8);
    const auto& basis = so8_basis();
    for (size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) d = d + basis[i].scaled(c[i]);
    return d;
}

TrialityTriple triality_lift(const CycMatrix& d0, const CycMatrix& eta) {
    // unknowns: coordinates of d1, d2 over so8_basis; equations indexed by
    // basis pairs (x, y) and output coordinates
    const auto& basis = so8_basis();
    so_coords(d0);  // membership check
    CycMatrix sys(512, 56);
    CycMatrix rhs(512, 1);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CycMatrix lhs = d0 * eta_mul(oct_basis_vector(i), oct_basis_vector(j), eta);
            for (int k = 0; k < 8; ++k) rhs.at((i * 8 + j) * 8 + k, 0) = lhs.at(k, 0);
            for (size_t t = 0; t < 28; ++t) {
                CycMatrix c1 = eta_mul(basis[t] * oct_basis_vector(i), oct_basis_vector(j), eta);
                CycMatrix c2 = eta_mul(oct_basis_vector(i), basis[t] * oct_basis_vector(j), eta);
                for (int k = 0; k < 8; ++k) {
                    sys.at((i * 8 + j) * 8 + k, t) = c1.at(k, 0);
                    sys.at((i * 8 + j) * 8 + k, 28 + t) = c2.at(k, 0);
                }
            }
        }
    auto sol = solve_matrix(sys, rhs);
    if (!sol) throw std::runtime_error("triality_lift: input not in so(C,q)");
    std::vector<CycNum> c1(28), c2(28);
    for (size_t t = 0; t < 28; ++t) {
        c1[t] = sol->at(t, 0);
        c2[t] = sol->at(28 + t, 0);
    }
    return {d0, so_from_coords(c1), so_from_coords(c2)};
}

const CycMatrix& theta_matrix() {
    static CycMatrix theta = [] {
        // lift all 28 basis elements at once against the eta = id system
        const auto& basis = so8_basis();
        CycMatrix eta = CycMatrix::identity(8);
        CycMatrix sys(512, 56);
        CycMatrix rhs(512, 28);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                for (size_t t = 0; t < 28; ++t) {
                    CycMatrix c1 = eta_mul(basis[t] * oct_basis_vector(i), oct_basis_vector(j), eta);
                    CycMatrix c2 = eta_mul(oct_basis_vector(i), basis[t] * oct_basis_vector(j), eta);
                    CycMatrix l = basis[t] * eta_mul(oct_basis_vector(i), oct_basis_vector(j), eta);
                    for (int k = 0; k < 8; ++k) {
                        sys.at((i * 8 + j) * 8 + k, t) = c1.at(k, 0);
                        sys.at((i * 8 + j) * 8 + k, 28 + t) = c2.at(k, 0);
                        rhs.at((i * 8 + j) * 8 + k, t) = l.at(k, 0);
                    }
                }
            }
        auto sol = solve_matrix(sys, rhs);
        if (!sol) throw std::runtime_error("theta_matrix: triality system inconsistent");
        // theta(d0) = d2: rows 28..55 of the solution
        CycMatrix m(28, 28);
        for (size_t i = 0; i < 28; ++i)
            for (size_t j = 0; j < 28; ++j) m.at(i, j) = sol->at(28 + i, j);
        return m;
    }();
    return theta;
}

CycMatrix theta_apply(const CycMatrix& d0) {
    auto c = so_coords(d0);
    std::vector<CycNum> out(28);
    const CycMatrix& th = theta_matrix();
    for (size_t i = 0; i < 28; ++i)
        for (size_t j = 0; j < 28; ++j) {
            if (th.at(i, j).is_zero() || c[j].is_zero()) continue;
            out[i] += th.at(i, j) * c[j];
        }
    return so_from_coords(out);
}

CycMatrix so_conjugation_matrix(const CycMatrix& p) {
    const auto& basis = so8_basis();
    CycMatrix pinv = p.inverse();
    CycMatrix m(28, 28);
    for (size_t j = 0; j < 28; ++j) {
        auto c = so_coords(p * basis[j] * pinv);
        for (size_t i = 0; i < 28; ++i) m.at(i, j) = c[i];
    }
    return m;
}

}  // namespace fgr
