#include "coinv/superring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace coinv::superring {

RingContext::RingContext(int n, int k, int j, int width)
    : n_(n), k_(k), j_(j), width_(width) {
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    if (j * width > 64)
        throw std::invalid_argument("too many fermionic generators");
}

std::shared_ptr<const RingContext> RingContext::dihedral(int n, int k, int j) {
    if (n < 2) throw std::invalid_argument("dihedral context needs n >= 2");
    return std::shared_ptr<const RingContext>(new RingContext(n, k, j, 2));
}

std::shared_ptr<const RingContext> RingContext::cyclic(int n, int k, int j) {
    if (n < 1) throw std::invalid_argument("cyclic context needs n >= 1");
    return std::shared_ptr<const RingContext>(new RingContext(n, k, j, 1));
}

std::string RingContext::bosonic_name(int g) const {
    int set = g / width_ + 1, idx = g % width_ + 1;
    if (width_ == 1) return "x_" + std::to_string(set);
    return "x" + std::to_string(idx) + "_" + std::to_string(set);
}

std::string RingContext::fermionic_name(int g) const {
    int set = g / width_ + 1, idx = g % width_ + 1;
    if (width_ == 1) return "t_" + std::to_string(set);
    return "t" + std::to_string(idx) + "_" + std::to_string(set);
}

int SuperMonomial::total_degree() const {
    return bosonic_degree() + fermionic_degree();
}

int SuperMonomial::bosonic_degree() const {
    return std::accumulate(bos.begin(), bos.end(), 0);
}

SuperMonomial constant_monomial(const RingContext& ctx) {
    SuperMonomial m;
    m.bos.assign(static_cast<std::size_t>(ctx.num_bosonic()), 0);
    return m;
}

SuperMonomial bosonic_monomial(const RingContext& ctx, int gen, int exp) {
    SuperMonomial m = constant_monomial(ctx);
    m.bos.at(static_cast<std::size_t>(gen)) = exp;
    return m;
}

SuperMonomial fermionic_monomial(const RingContext& ctx, int gen) {
    if (gen < 0 || gen >= ctx.num_fermionic())
        throw std::invalid_argument("fermionic generator out of range");
    SuperMonomial m = constant_monomial(ctx);
    m.ferm = std::uint64_t(1) << gen;
    return m;
}

Multidegree multidegree(const RingContext& ctx, const SuperMonomial& m) {
    Multidegree d(static_cast<std::size_t>(ctx.num_sets()), 0);
    for (int g = 0; g < ctx.num_bosonic(); ++g)
        d[static_cast<std::size_t>(g / ctx.width())] += m.bos[static_cast<std::size_t>(g)];
    for (int g = 0; g < ctx.num_fermionic(); ++g)
        if (m.ferm >> g & 1)
            d[static_cast<std::size_t>(ctx.k() + g / ctx.width())] += 1;
    return d;
}

std::string monomial_to_string(const RingContext& ctx, const SuperMonomial& m) {
    std::string out;
    auto append = [&](const std::string& name, int exp) {
        if (!out.empty()) out += " ";
        out += name;
        if (exp > 1) out += "^" + std::to_string(exp);
    };
    for (int g = 0; g < ctx.num_bosonic(); ++g)
        if (m.bos[static_cast<std::size_t>(g)] > 0)
            append(ctx.bosonic_name(g), m.bos[static_cast<std::size_t>(g)]);
    for (int g = 0; g < ctx.num_fermionic(); ++g)
        if (m.ferm >> g & 1) append(ctx.fermionic_name(g), 1);
    return out.empty() ? "1" : out;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    // Count pairs (x in a, y in b) with x > y.
    int inversions = 0;
    std::uint64_t bb = b;
    while (bb) {
        int y = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (y + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::optional<std::pair<int, SuperMonomial>> monomial_product(
    const SuperMonomial& a, const SuperMonomial& b) {
    int sign = merge_sign(a.ferm, b.ferm);
    if (sign == 0) return std::nullopt;
    SuperMonomial m = a;
    for (std::size_t i = 0; i < m.bos.size(); ++i) m.bos[i] += b.bos[i];
    m.ferm |= b.ferm;
    return std::make_pair(sign, std::move(m));
}

std::optional<SuperMonomial> monomial_quotient(const SuperMonomial& m,
                                               const SuperMonomial& d) {
    if ((m.ferm & d.ferm) != d.ferm) return std::nullopt;
    SuperMonomial q = m;
    for (std::size_t i = 0; i < q.bos.size(); ++i) {
        q.bos[i] -= d.bos[i];
        if (q.bos[i] < 0) return std::nullopt;
    }
    q.ferm = m.ferm & ~d.ferm;
    return q;
}

template <class C>
std::string SuperPoly<C>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs;
        if constexpr (std::is_same_v<C, Rational>)
            cs = coinv::to_string(c);
        else
            cs = "(" + c.to_string() + ")";
        if (!out.empty()) out += " + ";
        if (m.is_constant())
            out += cs;
        else if (cs == "1")
            out += monomial_to_string(*ctx_, m);
        else
            out += cs + " " + monomial_to_string(*ctx_, m);
    }
    return out;
}

template std::string SuperPoly<Rational>::to_string() const;
template std::string SuperPoly<chartab::Cyclotomic>::to_string() const;

std::optional<std::pair<int, SuperMonomial>> bosonic_derivative(
    const SuperMonomial& m, int gen) {
    int e = m.bos.at(static_cast<std::size_t>(gen));
    if (e == 0) return std::nullopt;
    SuperMonomial out = m;
    out.bos[static_cast<std::size_t>(gen)] -= 1;
    return std::make_pair(e, std::move(out));
}

std::optional<std::pair<int, SuperMonomial>> fermionic_derivative(
    const SuperMonomial& m, int gen) {
    if (!(m.ferm >> gen & 1)) return std::nullopt;
    SuperMonomial out = m;
    out.ferm &= ~(std::uint64_t(1) << gen);
    int in_front = std::popcount(m.ferm & ((std::uint64_t(1) << gen) - 1));
    return std::make_pair(in_front % 2 == 0 ? 1 : -1, std::move(out));
}

RationalPoly polarize(int ell, const RationalPoly& p) {
    const ContextPtr& ctx = p.context();
    if (!ctx) throw std::invalid_argument("polarize needs a ring context");
    const int k = ctx->k(), j = ctx->j(), w = ctx->width();
    if (ell < 1 || ell > k + j - 1)
        throw std::invalid_argument("polarization operator index out of range");
    RationalPoly out(ctx);
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < w; ++i) {
            if (ell < k) {
                // x^(ell+1) d/dx^(ell)
                auto d = bosonic_derivative(m, ctx->bosonic_index(ell - 1, i));
                if (!d) continue;
                SuperMonomial t = d->second;
                t.bos[static_cast<std::size_t>(ctx->bosonic_index(ell, i))] += 1;
                out.add_term(std::move(t), c * d->first);
            } else if (ell == k) {
                // theta^(1) d/dx^(k); the new factor multiplies from
                // the left.
                auto d = bosonic_derivative(m, ctx->bosonic_index(k - 1, i));
                if (!d) continue;
                auto prod = monomial_product(
                    fermionic_monomial(*ctx, ctx->fermionic_index(0, i)),
                    d->second);
                if (!prod) continue;
                out.add_term(prod->second, c * (d->first * prod->first));
            } else {
                // theta^(ell-k+1) d/dtheta^(ell-k), again multiplying
                // from the left.
                auto d = fermionic_derivative(m, ctx->fermionic_index(ell - k - 1, i));
                if (!d) continue;
                auto prod = monomial_product(
                    fermionic_monomial(*ctx, ctx->fermionic_index(ell - k, i)),
                    d->second);
                if (!prod) continue;
                out.add_term(prod->second, c * (d->first * prod->first));
            }
        }
    }
    return out;
}

namespace {
void compositions(int total, int slots, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        compositions(total - v, slots - 1, cur, emit);
        cur.pop_back();
    }
}
}  // namespace

std::vector<SuperMonomial> monomials_of_multidegree(const RingContext& ctx,
                                                    const Multidegree& d) {
    if (static_cast<int>(d.size()) != ctx.num_sets())
        throw std::invalid_argument("multidegree length mismatch");
    std::vector<SuperMonomial> out{constant_monomial(ctx)};
    // Bosonic sets: spread d over the set's variables.
    for (int s = 0; s < ctx.k(); ++s) {
        std::vector<SuperMonomial> next;
        std::vector<int> cur;
        compositions(d[static_cast<std::size_t>(s)], ctx.width(), cur,
                     [&](const std::vector<int>& exps) {
                         for (const SuperMonomial& base : out) {
                             SuperMonomial m = base;
                             for (int i = 0; i < ctx.width(); ++i)
                                 m.bos[static_cast<std::size_t>(
                                     ctx.bosonic_index(s, i))] =
                                     exps[static_cast<std::size_t>(i)];
                             next.push_back(std::move(m));
                         }
                     });
        out = std::move(next);
    }
    // Fermionic sets: subsets of the set's bits of the right size.
    for (int s = 0; s < ctx.j(); ++s) {
        int want = d[static_cast<std::size_t>(ctx.k() + s)];
        if (want < 0 || want > ctx.width()) return {};
        std::vector<std::uint64_t> masks;
        for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << ctx.width()); ++sub)
            if (std::popcount(sub) == want)
                masks.push_back(sub << ctx.fermionic_index(s, 0));
        std::vector<SuperMonomial> next;
        for (const SuperMonomial& base : out)
            for (std::uint64_t mask : masks) {
                SuperMonomial m = base;
                m.ferm |= mask;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multidegree> multidegrees_of_total(const RingContext& ctx,
                                               int total) {
    std::vector<Multidegree> out;
    Multidegree cur;
    auto rec = [&](auto&& self, int set, int remaining) -> void {
        if (set == ctx.num_sets()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int cap = set < ctx.k() ? remaining : std::min(remaining, ctx.width());
        for (int v = 0; v <= cap; ++v) {
            cur.push_back(v);
            self(self, set + 1, remaining - v);
            cur.pop_back();
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace coinv::superring
