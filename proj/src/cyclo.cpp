#include "srefl/cyclo.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace srefl {

namespace {

// Exact division of integer polynomials, low degree first. Used only where
// the division is known to be exact (x^m - 1 by products of Phi_d).
std::vector<Integer> poly_div_exact(std::vector<Integer> num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Integer c = num[i] / den.back();
        q[i - den.size() + 1] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i - den.size() + 1 + j] -= c * den[j];
    }
    return q;
}

std::map<long, std::vector<Integer>>& phi_cache() {
    static std::map<long, std::vector<Integer>> cache;
    return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache().find(m);
    if (it != phi_cache().end()) return it->second;
    // x^m - 1 = prod_{d | m} Phi_d, recursing on proper divisors.
    std::function<const std::vector<Integer>&(long)> get = [&](long n) -> const std::vector<Integer>& {
        auto jt = phi_cache().find(n);
        if (jt != phi_cache().end()) return jt->second;
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0) num = poly_div_exact(std::move(num), get(d));
        return phi_cache().emplace(n, std::move(num)).first->second;
    };
    return get(m);
}

CycloNumber::CycloNumber(std::vector<Rational> raw, long m) : m_(m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    reduce(std::move(raw));
}

void CycloNumber::reduce(std::vector<Rational> raw) {
    const auto& phi = cyclotomic_polynomial(m_);
    const size_t deg = phi.size() - 1;  // deg(Phi_m)
    // Phi_m is monic, so plain remainder division works over Q.
    for (long i = static_cast<long>(raw.size()) - 1; i >= static_cast<long>(deg); --i) {
        Rational c = raw[i];
        if (c == 0) continue;
        for (size_t j = 0; j < phi.size(); ++j)
            raw[i - deg + j] -= c * Rational(phi[j]);
    }
    raw.resize(deg, Rational(0));
    coeffs_ = std::move(raw);
}

CycloNumber CycloNumber::from_rational(const Rational& r, long m) {
    CycloNumber x(m);
    x.coeffs_.assign(cyclotomic_polynomial(m).size() - 1, Rational(0));
    x.coeffs_[0] = r;
    return x;
}

CycloNumber CycloNumber::zeta(long m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = 1;
    return CycloNumber(std::move(raw), m);
}

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloNumber::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

CycloNumber CycloNumber::promoted(long n) const {
    if (n == m_) return *this;
    if (n % m_ != 0)
        throw std::invalid_argument("conductor " + std::to_string(n) +
                                    " is not a multiple of " + std::to_string(m_));
    // zeta_m = zeta_n^(n/m)
    const long step = n / m_;
    std::vector<Rational> raw(static_cast<size_t>((coeffs_.size() - 1) * step + 1), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return CycloNumber(std::move(raw), n);
}

namespace {
long common_conductor(long a, long b) { return std::lcm(a, b); }
}  // namespace

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    if (m_ != o.m_) {
        long n = common_conductor(m_, o.m_);
        return promoted(n) + o.promoted(n);
    }
    CycloNumber r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    if (m_ != o.m_) {
        long n = common_conductor(m_, o.m_);
        return promoted(n) * o.promoted(n);
    }
    std::vector<Rational> raw(2 * coeffs_.size(), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return CycloNumber(std::move(raw), m_);
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // Extended Euclid in Q[x] for gcd(this, Phi_m) = 1.
    const auto& phi_int = cyclotomic_polynomial(m_);
    std::vector<Rational> r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of *this

    auto deg = [](const std::vector<Rational>& p) -> long {
        return static_cast<long>(p.size()) - 1;
    };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(rem.size(), Rational(0));
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (rem[i] == 0) continue;
            Rational c = rem[i] / r1.back();
            q[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_new = s0 - q * s1
        std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        while (snew.size() > 1 && snew.back() == 0) snew.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
        if (r1.empty()) throw std::domain_error("element not invertible modulo Phi_m");
    }
    // r1 is a nonzero constant: this * s1 = r1 (mod Phi_m)
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return CycloNumber(std::move(s1), m_);
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const { return *this * o.inverse(); }

bool CycloNumber::operator==(const CycloNumber& o) const {
    if (m_ == o.m_) return coeffs_ == o.coeffs_;
    long n = common_conductor(m_, o.m_);
    return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

CycloNumber CycloNumber::conj() const {
    // zeta^i -> zeta^(m - i)
    std::vector<Rational> raw(m_, Rational(0));
    raw[0] = coeffs_[0];
    for (size_t i = 1; i < coeffs_.size(); ++i) raw[m_ - i] = coeffs_[i];
    return CycloNumber(std::move(raw), m_);
}

std::complex<double> CycloNumber::approx() const {
    std::complex<double> z(0.0, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m_);
        z += to_double(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i > 0) os << "*z" << m_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace srefl
