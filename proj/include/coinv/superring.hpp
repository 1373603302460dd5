#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinv/cyclotomic.hpp"
#include "coinv/grading_poly.hpp"
#include "coinv/numeric.hpp"

namespace coinv::superring {

using symfunc::Multidegree;

/// Shape of the polynomial ring: k bosonic and j fermionic variable
/// sets, each of width vars_per_set (2 for the dihedral rings, 1 for
/// cyclic ones), plus the group order n the straightening rules refer
/// to. Immutable and shared.
class RingContext {
 public:
    static std::shared_ptr<const RingContext> dihedral(int n, int k, int j);
    static std::shared_ptr<const RingContext> cyclic(int n, int k, int j);

    int n() const { return n_; }
    int k() const { return k_; }
    int j() const { return j_; }
    int width() const { return width_; }
    bool is_cyclic() const { return width_ == 1; }

    int num_bosonic() const { return k_ * width_; }
    int num_fermionic() const { return j_ * width_; }
    int num_sets() const { return k_ + j_; }

    int bosonic_index(int set, int idx) const { return set * width_ + idx; }
    int fermionic_index(int set, int idx) const { return set * width_ + idx; }

    std::string bosonic_name(int g) const;
    std::string fermionic_name(int g) const;

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.j_ == b.j_ &&
               a.width_ == b.width_;
    }

 private:
    RingContext(int n, int k, int j, int width);
    int n_, k_, j_, width_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

/// Monomial: dense bosonic exponents plus a fermionic bitmask in the
/// canonical generator order. The mask encodes a product of distinct
/// fermionic generators written in ascending order; reorderings are
/// absorbed as signs by the arithmetic below.
struct SuperMonomial {
    std::vector<int> bos;
    std::uint64_t ferm = 0;

    int total_degree() const;
    int bosonic_degree() const;
    int fermionic_degree() const { return std::popcount(ferm); }
    bool is_constant() const { return total_degree() == 0; }

    friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

SuperMonomial constant_monomial(const RingContext& ctx);
SuperMonomial bosonic_monomial(const RingContext& ctx, int gen, int exp = 1);
SuperMonomial fermionic_monomial(const RingContext& ctx, int gen);
Multidegree multidegree(const RingContext& ctx, const SuperMonomial& m);
std::string monomial_to_string(const RingContext& ctx, const SuperMonomial& m);

/// Sign of merging two ascending fermionic products A * B into one
/// ascending product; +1/-1, or 0 when they share a generator.
int merge_sign(std::uint64_t a, std::uint64_t b);

/// c * product as a canonical monomial; nullopt when a fermionic
/// square makes it vanish. The sign multiplies into the caller's
/// coefficient.
std::optional<std::pair<int, SuperMonomial>> monomial_product(
    const SuperMonomial& a, const SuperMonomial& b);

/// Quotient m / d ignoring sign (exact division of the underlying
/// factor multiset); nullopt when d does not divide m.
std::optional<SuperMonomial> monomial_quotient(const SuperMonomial& m,
                                               const SuperMonomial& d);

template <class C>
bool scalar_is_zero(const C& c) {
    if constexpr (std::is_same_v<C, Rational>)
        return c == 0;
    else
        return c.is_zero();
}

/// Supercommutative polynomial over an exact scalar. Bosonic
/// generators are central; fermionic generators anticommute and
/// square to zero. Value semantics throughout.
template <class C>
class SuperPoly {
 public:
    SuperPoly() = default;
    explicit SuperPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static SuperPoly monomial(ContextPtr ctx, SuperMonomial m, C coeff) {
        SuperPoly p(std::move(ctx));
        p.add_term(std::move(m), std::move(coeff));
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const std::map<SuperMonomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const C* find(const SuperMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(SuperMonomial m, C coeff) {
        if (scalar_is_zero(coeff)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(coeff));
            return;
        }
        it->second += coeff;
        if (scalar_is_zero(it->second)) terms_.erase(it);
    }

    SuperPoly& operator+=(const SuperPoly& o) {
        check_context(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    SuperPoly& operator-=(const SuperPoly& o) {
        check_context(o);
        for (const auto& [m, c] : o.terms_) {
            C neg = c;
            neg = neg * Rational(-1);
            add_term(m, std::move(neg));
        }
        return *this;
    }

    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }

    SuperPoly scaled(const Rational& r) const {
        SuperPoly out(ctx_);
        if (r == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
        return out;
    }

    SuperPoly scaled_by(const C& s) const {
        SuperPoly out(ctx_);
        for (const auto& [m, c] : terms_) out.add_term(m, c * s);
        return out;
    }

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        a.check_context(b);
        return a.terms_ == b.terms_;
    }

    void check_context(const SuperPoly& o) const {
        if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
            throw std::invalid_argument("mixed ring contexts");
    }

    std::string to_string() const;

 private:
    ContextPtr ctx_;
    std::map<SuperMonomial, C> terms_;
};

/// Supercommutative product; signs come from sorting the fermionic
/// factors into canonical order, repeated fermionic generators kill
/// the term.
template <class C>
SuperPoly<C> mul(const SuperPoly<C>& a, const SuperPoly<C>& b) {
    a.check_context(b);
    SuperPoly<C> out(a.context());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto prod = monomial_product(ma, mb);
            if (!prod) continue;
            C c = ca * cb;
            if (prod->first < 0) c = c * Rational(-1);
            out.add_term(prod->second, std::move(c));
        }
    return out;
}

using RationalPoly = SuperPoly<Rational>;
using CyclotomicPoly = SuperPoly<chartab::Cyclotomic>;

/// First-order polarization operator E_ell, 1 <= ell <= k+j-1: moves
/// one degree from a variable set into the next one (bosonic chains
/// for ell < k, the bosonic-to-fermionic bridge at ell = k, fermionic
/// chains above). Fermionic derivatives anticommute past the odd
/// factors they skip.
RationalPoly polarize(int ell, const RationalPoly& p);

/// d/d(bosonic gen): returns exponent * shifted monomial.
std::optional<std::pair<int, SuperMonomial>> bosonic_derivative(
    const SuperMonomial& m, int gen);
/// d/d(fermionic gen): sign is (-1)^(number of factors in front).
std::optional<std::pair<int, SuperMonomial>> fermionic_derivative(
    const SuperMonomial& m, int gen);

/// All monomials of the given per-set multidegree, in canonical order.
std::vector<SuperMonomial> monomials_of_multidegree(const RingContext& ctx,
                                                    const Multidegree& d);
/// All multidegrees with the given total degree (fermionic entries are
/// capped by the set width).
std::vector<Multidegree> multidegrees_of_total(const RingContext& ctx,
                                               int total);

}  // namespace coinv::superring
