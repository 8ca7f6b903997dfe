#include "finegrading/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fgr {

namespace {

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// poly arithmetic on dense coefficient vectors, constant term first
void poly_trim(std::vector<Rational>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

// remainder of a modulo the monic polynomial m
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& m) {
    poly_trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (a, b not both 0)
struct XGcd {
    std::vector<Rational> g, u, v;
};

std::vector<Rational> poly_scale(std::vector<Rational> a, const Rational& s) {
    for (auto& x : a) x *= s;
    return a;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// quotient and remainder of a by b (b nonzero)
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                    const std::vector<Rational>& b) {
    poly_trim(a);
    if (a.size() < b.size()) return {{}, a};
    std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
    Rational invlead = 1 / b.back();
    for (size_t shift = q.size(); shift-- > 0;) {
        Rational c = a[shift + b.size() - 1] * invlead;
        if (c == 0) continue;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    }
    a.resize(b.size() - 1);
    poly_trim(a);
    return {q, a};
}

XGcd poly_xgcd(std::vector<Rational> a, std::vector<Rational> b) {
    std::vector<Rational> u0{Rational(1)}, v0, u1, v1{Rational(1)};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        auto u2 = poly_sub(u0, poly_mul(q, u1));
        auto v2 = poly_sub(v0, poly_mul(q, v1));
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    Rational lead = a.back();
    return {poly_scale(a, 1 / lead), poly_scale(u0, 1 / lead), poly_scale(v0, 1 / lead)};
}

std::vector<Rational> phi_as_rational(long n) {
    const auto& zi = cyclotomic_polynomial(n);
    std::vector<Rational> r(zi.size());
    for (size_t i = 0; i < zi.size(); ++i) r[i] = Rational(zi[i]);
    return r;
}

}  // namespace

long euler_phi(long n) {
    long r = n;
    for (long p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by prod of Phi_d, d | n, d < n (exact integer division)
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phid = cyclotomic_polynomial(d);
        // divide num by phid (monic, exact)
        std::vector<Integer> q(num.size() - phid.size() + 1, Integer(0));
        std::vector<Integer> rem = num;
        for (size_t shift = rem.size() - phid.size() + 1; shift-- > 0;) {
            Integer c = rem[shift + phid.size() - 1];
            q[shift] = c;
            if (c != 0)
                for (size_t i = 0; i < phid.size(); ++i) rem[shift + i] -= c * phid[i];
        }
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

CycNum::CycNum() : n_(1), c_{Rational(0)} {}
CycNum::CycNum(long v) : n_(1), c_{Rational(v)} {}
CycNum::CycNum(const Integer& v) : n_(1), c_{Rational(v)} {}
CycNum::CycNum(const Rational& v) : n_(1), c_{v} { c_[0].canonicalize(); }

bool CycNum::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool CycNum::is_one() const { return n_ == 1 && c_[0] == 1; }

const Rational& CycNum::rational_value() const {
    if (n_ != 1) throw std::runtime_error("CycNum: not rational");
    return c_[0];
}

bool CycNum::operator<(const CycNum& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CycNum CycNum::root_of_unity(long n, long k) {
    if (n < 1) throw std::runtime_error("root_of_unity: n must be positive");
    k %= n;
    if (k < 0) k += n;
    CycNum r;
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = 1;
    r.n_ = n;
    r.reduce_and_minimize(std::move(poly));
    return r;
}

void CycNum::reduce_and_minimize(std::vector<Rational> poly) {
    long phi = euler_phi(n_);
    poly = poly_rem(std::move(poly), phi_as_rational(n_));
    poly.resize(phi, Rational(0));
    c_ = std::move(poly);
    minimize();
}

std::vector<Rational> CycNum::promoted(long m) const {
    // coordinates in the power basis of Q(zeta_m), where n_ | m
    long step = m / n_;
    std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    poly = poly_rem(std::move(poly), phi_as_rational(m));
    poly.resize(euler_phi(m), Rational(0));
    return poly;
}

bool CycNum::try_rewrite(long m) {
    // attempt to express the value in Q(zeta_m) for m | n_, m < n_
    long phin = euler_phi(n_);
    long phim = euler_phi(m);
    // columns: zeta_m^j = zeta_{n}^{j n/m} in the big basis
    std::vector<std::vector<Rational>> cols(phim);
    for (long j = 0; j < phim; ++j) {
        std::vector<Rational> poly(j * (n_ / m) + 1, Rational(0));
        poly[j * (n_ / m)] = 1;
        poly = poly_rem(std::move(poly), phi_as_rational(n_));
        poly.resize(phin, Rational(0));
        cols[j] = std::move(poly);
    }
    // solve cols * x = c_ by Gaussian elimination
    std::vector<std::vector<Rational>> aug(phin, std::vector<Rational>(phim + 1, Rational(0)));
    for (long i = 0; i < phin; ++i) {
        for (long j = 0; j < phim; ++j) aug[i][j] = cols[j][i];
        aug[i][phim] = c_[i];
    }
    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col < phim && row < phin; ++col) {
        long pr = -1;
        for (long i = row; i < phin; ++i)
            if (aug[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        Rational inv = 1 / aug[row][col];
        for (long j = col; j <= phim; ++j) aug[row][j] *= inv;
        for (long i = 0; i < phin; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (long j = col; j <= phim; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (long i = row; i < phin; ++i)
        if (aug[i][phim] != 0) return false;  // inconsistent: not in the subfield
    std::vector<Rational> x(phim, Rational(0));
    for (long i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][phim];
    n_ = m;
    c_ = std::move(x);
    return true;
}

void CycNum::minimize() {
    if (n_ == 1) return;
    bool changed = true;
    while (changed && n_ > 1) {
        changed = false;
        for (long p : prime_divisors(n_)) {
            long m = n_ / p;
            while (m % 4 == 2) m /= 2;  // Q(zeta_{2u}) = Q(zeta_u) for odd u
            if (m == n_) continue;
            if (try_rewrite(m)) {
                changed = true;
                break;
            }
        }
    }
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    long m = std::lcm(n_, o.n_);
    std::vector<Rational> a = promoted(m);
    std::vector<Rational> b = o.promoted(m);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    n_ = m;
    c_ = std::move(a);
    minimize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.n_ == 1) {
        if (o.c_[0] == 0) {
            *this = CycNum();
            return *this;
        }
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        if (s == 0) {
            *this = CycNum();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    long m = std::lcm(n_, o.n_);
    std::vector<Rational> a = promoted(m);
    std::vector<Rational> b = o.promoted(m);
    n_ = m;
    reduce_and_minimize(poly_mul(a, b));
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero");
    if (n_ == 1) {
        CycNum r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    std::vector<Rational> a(c_.begin(), c_.end());
    poly_trim(a);
    XGcd x = poly_xgcd(a, phi_as_rational(n_));
    if (x.g.size() != 1) throw std::runtime_error("CycNum: inverse failed (non-unit gcd)");
    // u * a = g = 1 mod Phi_n  (g normalized monic => constant 1)
    CycNum r;
    r.n_ = n_;
    r.reduce_and_minimize(std::move(x.u));
    return r;
}

CycNum CycNum::conjugate() const {
    if (n_ == 1) return *this;
    std::vector<Rational> poly(n_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = (n_ - long(i)) % n_;
        poly[e] += c_[i];
    }
    CycNum r;
    r.n_ = n_;
    r.reduce_and_minimize(std::move(poly));
    return r;
}

CycNum CycNum::pow(long e) const {
    if (e == 0) return CycNum(1);
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

long CycNum::root_of_unity_order() const {
    if (is_zero()) return 0;
    long bound = std::lcm<long>(2, n_);
    CycNum p = *this;
    for (long m = 1; m <= bound; ++m) {
        if (p.is_one()) return m;
        p *= *this;
    }
    return 0;
}

std::pair<long, long> CycNum::root_of_unity_exponent() const {
    long m = root_of_unity_order();
    if (m == 0) throw std::runtime_error("square root restricted to roots of unity");
    if (m == 1) return {1, 0};
    for (long k = 1; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        if (*this == root_of_unity(m, k)) return {m, k};
    }
    throw std::runtime_error("CycNum: exponent recovery failed");
}

CycNum CycNum::sqrt_root_of_unity() const {
    auto [m, k] = root_of_unity_exponent();
    return root_of_unity(2 * m, k);
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[0];
        } else {
            os << c_[i] << "*z(" << n_ << ")^" << i;
        }
    }
    return os.str();
}

CycNum CycNum::parse(const std::string& s) {
    CycNum total;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        int sign = 1;
        if (!first || s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '+') {
                ++pos;
            } else if (s[pos] == '-') {
                sign = -1;
                ++pos;
            } else if (!first) {
                throw std::runtime_error("CycNum::parse: expected '+' or '-'");
            }
        }
        first = false;
        skip_ws();
        // rational coefficient
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        Rational coeff(1);
        if (pos > start) {
            coeff = Rational(s.substr(start, pos - start));
            coeff.canonicalize();
        }
        if (sign < 0) coeff = -coeff;
        skip_ws();
        long n = 1, k = 0;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            if (pos >= s.size() || s[pos] != '(') throw std::runtime_error("CycNum::parse: expected '('");
            ++pos;
            size_t st = pos;
            while (pos < s.size() && s[pos] != ')') ++pos;
            n = std::stol(s.substr(st, pos - st));
            ++pos;  // ')'
            k = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                st = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                k = std::stol(s.substr(st, pos - st));
            }
        }
        total += CycNum(coeff) * root_of_unity(n, k);
        skip_ws();
    }
    return total;
}

}  // namespace fgr
