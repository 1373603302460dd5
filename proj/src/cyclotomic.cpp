#include "coinv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace coinv::chartab {

namespace {

// Exact division of integer polynomials; the divisor is monic here so
// the quotient stays integral. Coefficients are constant-term first.
std::vector<BigInt> divide_exact(std::vector<BigInt> num,
                                 const std::vector<BigInt>& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        throw std::logic_error("polynomial division underflow");
    std::vector<BigInt> quot(num.size() - dn, BigInt(0));
    for (std::size_t i = num.size(); i-- > den.size() - 1;) {
        std::size_t q = i - dn;
        if (q >= quot.size()) continue;
        BigInt c = num[i];
        if (c == 0) continue;
        quot[q] = c;
        for (std::size_t k = 0; k <= dn; ++k) num[q + k] -= c * den[k];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("polynomial division not exact");
    return quot;
}

std::vector<BigInt> cyclotomic_polynomial(int n) {
    // z^n - 1 divided by Phi_d over all proper divisors d of n.
    std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, BigInt(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    return poly;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder mod a monic integer polynomial.
void reduce_mod(std::vector<Rational>& p, const std::vector<BigInt>& phi) {
    const std::size_t d = phi.size() - 1;
    while (p.size() > d) {
        Rational lead = p.back();
        std::size_t shift = p.size() - 1 - d;
        if (lead != 0)
            for (std::size_t k = 0; k <= d; ++k) {
                p[shift + k] -= lead * Rational(phi[k]);
                p[shift + k].canonicalize();
            }
        p.pop_back();
    }
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    phi_ = cyclotomic_polynomial(order);
    zeta_powers_.resize(static_cast<std::size_t>(order));
    for (int m = 0; m < order; ++m) {
        std::vector<Rational> p(static_cast<std::size_t>(m) + 1, Rational(0));
        p.back() = 1;
        reduce_mod(p, phi_);
        p.resize(static_cast<std::size_t>(degree()), Rational(0));
        zeta_powers_[static_cast<std::size_t>(m)] = std::move(p);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[order];
    if (!slot) slot.reset(new CyclotomicField(order));
    return slot;
}

Cyclotomic CyclotomicField::zero() const {
    return Cyclotomic(shared_from_this(),
                      std::vector<Rational>(static_cast<std::size_t>(degree()),
                                            Rational(0)));
}

Cyclotomic CyclotomicField::one() const { return rational(Rational(1)); }

Cyclotomic CyclotomicField::rational(const Rational& r) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
    c[0] = r;
    c[0].canonicalize();
    return Cyclotomic(shared_from_this(), std::move(c));
}

Cyclotomic CyclotomicField::root_power(long e) const {
    long m = e % order_;
    if (m < 0) m += order_;
    return Cyclotomic(shared_from_this(), zeta_powers_[static_cast<std::size_t>(m)]);
}

Cyclotomic CyclotomicField::two_cos(long h) const {
    return root_power(h) + root_power(-h);
}

Cyclotomic::Cyclotomic(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!field_) return Rational(0);
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational: " + to_string());
    Rational r = coeffs_[0];
    r.canonicalize();
    return r;
}

namespace {
const FieldPtr& common_field(const Cyclotomic& a, const Cyclotomic& b) {
    if (!a.field() || !b.field() || a.field() != b.field())
        throw std::invalid_argument("cyclotomic field mismatch");
    return a.field();
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    common_field(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
        coeffs_[i].canonicalize();
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    common_field(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
        coeffs_[i].canonicalize();
    }
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    common_field(*this, o);
    std::vector<Rational> prod(coeffs_.size() * 2, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            if (o.coeffs_[k] == 0) continue;
            prod[i + k] += coeffs_[i] * o.coeffs_[k];
        }
    }
    reduce_mod(prod, field_->phi());
    prod.resize(coeffs_.size(), Rational(0));
    for (Rational& c : prod) c.canonicalize();
    return Cyclotomic(field_, std::move(prod));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (Rational& c : out.coeffs_) {
        c *= r;
        c.canonicalize();
    }
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    common_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::conj() const { return galois(field_->order() - 1); }

Cyclotomic Cyclotomic::galois(long a) const {
    const int n = field_->order();
    long am = a % n;
    if (am < 0) am += n;
    if (std::gcd(am, static_cast<long>(n)) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the order");
    Cyclotomic out = field_->zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += field_->root_power(am * static_cast<long>(i)) * coeffs_[i];
    }
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // Extended Euclid in Q[z] against Phi_n; Phi_n is irreducible so
    // the gcd is a nonzero constant.
    std::vector<Rational> r0, r1 = coeffs_, s0, s1 = {Rational(1)};
    for (const BigInt& c : field_->phi()) r0.emplace_back(c);
    trim(r1);
    while (!r1.empty()) {
        // r0 = q * r1 + r; track s so that s * self == r (mod Phi).
        std::vector<Rational> rem = r0, q;
        std::size_t d1 = r1.size() - 1;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational lead = rem.back() / r1.back();
            lead.canonicalize();
            std::size_t shift = rem.size() - 1 - d1;
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] = lead;
            for (std::size_t k = 0; k < r1.size(); ++k) {
                rem[shift + k] -= lead * r1[k];
                rem[shift + k].canonicalize();
            }
            rem.pop_back();
            trim(rem);
            if (rem.empty()) break;
        }
        // s_next = s0 - q * s1
        std::vector<Rational> s_next = s0;
        if (s_next.size() < q.size() + s1.size())
            s_next.resize(q.size() + s1.size() - 1 + 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t k = 0; k < s1.size(); ++k) {
                s_next[i + k] -= q[i] * s1[k];
                s_next[i + k].canonicalize();
            }
        }
        trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (r0.size() != 1)
        throw std::logic_error("element not invertible mod Phi_n");
    Rational scale = Rational(1) / r0[0];
    std::vector<Rational> inv = s0;
    reduce_mod(inv, field_->phi());
    inv.resize(coeffs_.size(), Rational(0));
    for (Rational& c : inv) {
        c *= scale;
        c.canonicalize();
    }
    return Cyclotomic(field_, std::move(inv));
}

Cyclotomic Cyclotomic::embed(const FieldPtr& target) const {
    const int n = field_->order();
    const int m = target->order();
    if (m % n != 0)
        throw std::invalid_argument("embedding target order must be a multiple");
    const long stride = m / n;
    Cyclotomic out = target->zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += target->root_power(stride * static_cast<long>(i)) * coeffs_[i];
    }
    return out;
}

std::string Cyclotomic::to_string() const {
    if (!field_ || is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = i == 0   ? ""
                           : i == 1 ? "z"
                                    : "z^" + std::to_string(i);
        if (mono.empty()) {
            out += coinv::to_string(c);
        } else {
            if (c != 1) out += coinv::to_string(c) + " ";
            out += mono;
        }
    }
    return out;
}

}  // namespace coinv::chartab
