#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fgr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of the union of cyclotomic fields Q(zeta_N) over Q.
///
/// A value is stored in the power basis 1, z, ..., z^{phi(N)-1} of Q(zeta_N),
/// reduced modulo the N-th cyclotomic polynomial, with N minimal for the
/// value (and N never congruent to 2 mod 4). Two values are equal iff their
/// (conductor, coefficient) records are identical, so equality is cheap and
/// canonical.
class CycNum {
public:
    CycNum();  // zero
    CycNum(long v);
    CycNum(const Rational& v);
    CycNum(const Integer& v);

    /// zeta_n^k, conductor-minimized.
    static CycNum root_of_unity(long n, long k);
    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(1); }

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return n_ == 1; }
    /// Value as a rational; requires is_rational().
    const Rational& rational_value() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    /// Arbitrary total order (conductor, then coefficients); used for map keys
    /// and deterministic pivoting, no numeric meaning.
    bool operator<(const CycNum& o) const;

    /// Multiplicative inverse; throws "division by zero" on zero.
    CycNum inverse() const;
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    /// Complex conjugation, the Galois map zeta -> zeta^{-1}.
    CycNum conjugate() const;

    CycNum pow(long e) const;

    /// Multiplicative order if this is a root of unity, 0 otherwise.
    long root_of_unity_order() const;
    bool is_root_of_unity() const { return root_of_unity_order() > 0; }

    /// Canonical exponent pair (n, k) with *this == zeta_n^k, gcd(k,n)=1 or k=0.
    /// Requires is_root_of_unity().
    std::pair<long, long> root_of_unity_exponent() const;

    /// Deterministic square root of a root of unity: zeta_n^k -> zeta_{2n}^k,
    /// so that sqrt(1) = 1. Throws "square root restricted to roots of unity".
    CycNum sqrt_root_of_unity() const;

    /// Rendering "a0 + a1*z(N)^1 + ..." (terms with nonzero coefficients).
    std::string str() const;
    /// Parse the same syntax.
    static CycNum parse(const std::string& s);

private:
    long n_;                   // conductor (1, or >= 3 and != 2 mod 4)
    std::vector<Rational> c_;  // phi(n_) coefficients

    void reduce_and_minimize(std::vector<Rational> poly);
    void minimize();
    bool try_rewrite(long m);
    std::vector<Rational> promoted(long m) const;  // coords in Q(zeta_m), n_ | m
};

long euler_phi(long n);
/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

}  // namespace fgr
