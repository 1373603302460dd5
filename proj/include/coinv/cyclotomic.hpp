#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coinv/numeric.hpp"

namespace coinv::chartab {

class Cyclotomic;

/// The n-th cyclotomic field Q(zeta_n), represented as Q[z] modulo the
/// n-th cyclotomic polynomial. Phi_n is obtained once per order by
/// exact division of z^n - 1 by the lower-order cyclotomic factors.
/// Instances are immutable and shared through get().
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
 public:
    static std::shared_ptr<const CyclotomicField> get(int order);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Monic Phi_n as integer coefficients, constant term first.
    const std::vector<BigInt>& phi() const { return phi_; }

    Cyclotomic zero() const;
    Cyclotomic one() const;
    Cyclotomic rational(const Rational& r) const;
    /// zeta_n^e, any integer exponent.
    Cyclotomic root_power(long e) const;

    /// (zeta^h + zeta^-h), i.e. 2 cos(2 pi h / n).
    Cyclotomic two_cos(long h) const;

 private:
    explicit CyclotomicField(int order);

    int order_;
    std::vector<BigInt> phi_;
    // zeta^m reduced mod Phi_n, for 0 <= m < n.
    std::vector<std::vector<Rational>> zeta_powers_;

    friend class Cyclotomic;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of a cyclotomic field: the canonical residue mod Phi_n.
/// Value semantics; operations on mismatched fields throw.
class Cyclotomic {
 public:
    Cyclotomic() = default;  // unusable placeholder, is_zero() = true

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The constant coefficient; throws when the value is not rational.
    Rational rational_value() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic operator-() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Complex conjugation: zeta -> zeta^(n-1).
    Cyclotomic conj() const;
    /// The Galois map zeta -> zeta^a; requires gcd(a, n) = 1.
    Cyclotomic galois(long a) const;
    /// Multiplicative inverse via the extended Euclidean algorithm.
    Cyclotomic inverse() const;
    /// Image in Q(zeta_m) for n | m, sending zeta_n to zeta_m^(m/n).
    Cyclotomic embed(const FieldPtr& target) const;

    /// "1/2 - z^2" with z standing for zeta_n.
    std::string to_string() const;

 private:
    Cyclotomic(FieldPtr field, std::vector<Rational> coeffs);

    FieldPtr field_;
    std::vector<Rational> coeffs_;

    friend class CyclotomicField;
};

}  // namespace coinv::chartab
