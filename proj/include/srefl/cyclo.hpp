#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "srefl/rational.hpp"

namespace srefl {

/// Element of the cyclotomic field Q(zeta_m), stored as the canonical
/// residue of a rational polynomial modulo the m-th cyclotomic polynomial.
/// The coefficient vector always has length deg(Phi_m), so equality is
/// coefficient-wise. Elements are immutable after construction.
class CycloNumber {
public:
    CycloNumber() : m_(1), coeffs_(1, Rational(0)) {}

    /// Canonical residue of `raw` (coefficients of 1, x, x^2, ...) mod Phi_m.
    CycloNumber(std::vector<Rational> raw, long m);

    static CycloNumber from_rational(const Rational& r, long m = 1);
    static CycloNumber zero(long m = 1) { return from_rational(0, m); }
    static CycloNumber one(long m = 1) { return from_rational(1, m); }
    /// zeta_m^k
    static CycloNumber zeta(long m, long k = 1);

    long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws unless the element lies in Q.
    Rational to_rational() const;

    /// Image in Q(zeta_n) for any multiple n of the conductor.
    CycloNumber promoted(long n) const;

    CycloNumber operator-() const;
    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator/(const CycloNumber& o) const;
    CycloNumber inverse() const;

    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    /// Complex conjugate (zeta -> zeta^-1).
    CycloNumber conj() const;

    /// Numerical embedding zeta_m -> exp(2 pi i / m).
    std::complex<double> approx() const;

    std::string str() const;

private:
    long m_;
    std::vector<Rational> coeffs_;  // length deg(Phi_m)

    CycloNumber(long m) : m_(m) {}
    void reduce(std::vector<Rational> raw);
};

/// Integer coefficients of Phi_m, low degree first (cached).
const std::vector<Integer>& cyclotomic_polynomial(long m);

inline CycloNumber operator*(const Rational& r, const CycloNumber& x) {
    return CycloNumber::from_rational(r, x.conductor()) * x;
}

}  // namespace srefl
