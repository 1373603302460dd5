#include "coinv/chartab.hpp"

#include <stdexcept>

namespace coinv::chartab {

namespace {
int mod(int e, int n) {
    int m = e % n;
    return m < 0 ? m + n : m;
}
}  // namespace

GroupElement GroupElement::rotation(int e, int n) { return {false, mod(e, n)}; }
GroupElement GroupElement::reflect(int e, int n) { return {true, mod(e, n)}; }

std::string GroupElement::to_string() const {
    std::string s;
    if (exponent == 1)
        s = "r";
    else if (exponent != 0)
        s = "r^" + std::to_string(exponent);
    if (reflection) s += s.empty() ? "f" : " f";
    return s.empty() ? "1" : s;
}

GroupElement compose(const GroupElement& a, const GroupElement& b, int n) {
    // (rho^e1 phi^f1)(rho^e2 phi^f2): moving rho^e2 past phi flips its sign.
    int e = a.reflection ? a.exponent - b.exponent : a.exponent + b.exponent;
    return {a.reflection != b.reflection, mod(e, n)};
}

GroupElement inverse(const GroupElement& g, int n) {
    if (g.reflection) return g;  // reflections are involutions
    return {false, mod(-g.exponent, n)};
}

std::vector<GroupElement> all_elements(int n) {
    std::vector<GroupElement> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) out.push_back({false, e});
    for (int e = 0; e < n; ++e) out.push_back({true, e});
    return out;
}

std::vector<ConjClass> conjugacy_classes(int n) {
    std::vector<ConjClass> out;
    out.push_back({GroupElement::identity(), 1});
    if (n % 2 == 0) {
        for (int e = 1; e < n / 2; ++e) out.push_back({{false, e}, 2});
        out.push_back({{false, n / 2}, 1});
        // rho^a phi ~ rho^(a+2t) phi: even and odd exponents split.
        out.push_back({{true, 0}, n / 2});
        out.push_back({{true, 1}, n / 2});
    } else {
        for (int e = 1; e <= (n - 1) / 2; ++e) out.push_back({{false, e}, 2});
        out.push_back({{true, 0}, n});
    }
    return out;
}

std::string CharLabel::to_string() const {
    switch (kind) {
        case Kind::Chi1: return "chi1";
        case Kind::Chi2: return "chi2";
        case Kind::Chi3: return "chi3";
        case Kind::Chi4: return "chi4";
        case Kind::TwoDim: return "chi^" + std::to_string(index);
        case Kind::Cyclic: return "chi_" + std::to_string(index);
    }
    return "?";
}

void validate_label(const CharLabel& label, int n) {
    switch (label.kind) {
        case CharLabel::Kind::Chi1:
        case CharLabel::Kind::Chi2:
            if (n < 2) throw std::invalid_argument("dihedral label needs n >= 2");
            return;
        case CharLabel::Kind::Chi3:
        case CharLabel::Kind::Chi4:
            if (n < 2 || n % 2 != 0)
                throw std::invalid_argument(label.to_string() +
                                            " only exists for even n");
            return;
        case CharLabel::Kind::TwoDim:
            if (n < 2 || label.index < 1 || label.index > n - 1)
                throw std::invalid_argument("chi^h needs 1 <= h <= n-1");
            return;
        case CharLabel::Kind::Cyclic:
            if (label.index < 0 || label.index >= n)
                throw std::invalid_argument("cyclic label needs 0 <= i < n");
            return;
    }
}

bool is_irreducible(const CharLabel& label, int n) {
    validate_label(label, n);
    if (label.kind == CharLabel::Kind::TwoDim)
        return label.index <= (n - 1) / 2;
    return true;
}

int char_dimension(const CharLabel& label, int n) {
    validate_label(label, n);
    return label.kind == CharLabel::Kind::TwoDim ? 2 : 1;
}

std::vector<CharLabel> irreducible_labels(int n) {
    std::vector<CharLabel> out{CharLabel::chi1(), CharLabel::chi2()};
    if (n % 2 == 0) {
        out.push_back(CharLabel::chi3());
        out.push_back(CharLabel::chi4());
    }
    for (int h = 1; h <= (n - 1) / 2; ++h) out.push_back(CharLabel::two_dim(h));
    return out;
}

Cyclotomic dihedral_char_value(const CharLabel& label, const GroupElement& g,
                               int n) {
    validate_label(label, n);
    auto field = CyclotomicField::get(n);
    if (label.kind == CharLabel::Kind::TwoDim) {
        if (g.reflection) return field->zero();
        return field->two_cos(static_cast<long>(label.index) * g.exponent);
    }
    if (label.kind == CharLabel::Kind::Cyclic)
        throw std::invalid_argument("cyclic label on a dihedral group");
    // Linear characters: chi1 = (1,1), chi2 = (1,-1), chi3 = (-1,1),
    // chi4 = (-1,-1) on (rho, phi), extended multiplicatively.
    int on_rho = (label.kind == CharLabel::Kind::Chi3 ||
                  label.kind == CharLabel::Kind::Chi4)
                     ? -1
                     : 1;
    int on_phi = (label.kind == CharLabel::Kind::Chi2 ||
                  label.kind == CharLabel::Kind::Chi4)
                     ? -1
                     : 1;
    int v = (on_rho == -1 && g.exponent % 2 != 0) ? -1 : 1;
    if (g.reflection) v *= on_phi;
    return field->rational(v);
}

Cyclotomic cyclic_char_value(int i, long ell, int n) {
    validate_label(CharLabel::cyclic(i), n);
    return CyclotomicField::get(n)->root_power(static_cast<long>(i) * ell);
}

Rational inner_product(const std::vector<Cyclotomic>& f,
                       const std::vector<Cyclotomic>& h, int n) {
    std::size_t order = 2 * static_cast<std::size_t>(n);
    if (f.size() == static_cast<std::size_t>(n)) order = f.size();  // cyclic
    if (f.size() != order || h.size() != order)
        throw std::invalid_argument(
            "class functions must cover the whole group");
    auto field = CyclotomicField::get(n);
    Cyclotomic acc = field->zero();
    for (std::size_t i = 0; i < order; ++i) acc += f[i] * h[i].conj();
    acc = acc * Rational(1, static_cast<long>(order));
    return acc.rational_value();
}

std::vector<Cyclotomic> character_values(const CharLabel& label, int n) {
    std::vector<Cyclotomic> out;
    for (const GroupElement& g : all_elements(n))
        out.push_back(dihedral_char_value(label, g, n));
    return out;
}

std::vector<Cyclotomic> cyclic_character_values(int i, int n) {
    std::vector<Cyclotomic> out;
    for (int l = 0; l < n; ++l) out.push_back(cyclic_char_value(i, l, n));
    return out;
}

}  // namespace coinv::chartab
