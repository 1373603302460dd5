#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coinv/chartab.hpp"
#include "coinv/grading_poly.hpp"
#include "coinv/linalg.hpp"
#include "coinv/straighten.hpp"
#include "coinv/superring.hpp"

namespace coinv::oracle {

using chartab::CharLabel;
using chartab::Cyclotomic;
using chartab::GroupElement;
using superring::ContextPtr;
using superring::CyclotomicPoly;
using superring::Multidegree;
using superring::RationalPoly;
using superring::SuperMonomial;

/// Per-multidegree dimensions of a graded quotient.
using GradedDims = std::map<Multidegree, std::int64_t>;

std::string multidegree_to_string(const Multidegree& d);

/// Exact action on the x-coordinate ring. Rotation matrices need both
/// cos and sin of 2 pi e / n, so dihedral actions live over
/// Q(zeta_lcm(4,n)); the diagonal cyclic action lives over Q(zeta_n).
class GroupAction {
 public:
    static GroupAction dihedral(int n, int k, int j);
    static GroupAction cyclic(int n, int k, int j);

    const ContextPtr& context() const { return ctx_; }
    const chartab::FieldPtr& field() const { return field_; }
    bool is_cyclic() const { return ctx_->is_cyclic(); }
    int n() const { return ctx_->n(); }
    int group_size() const { return is_cyclic() ? n() : 2 * n(); }
    std::vector<GroupElement> elements() const;

    /// Substitutes the degree-1 generator images of g.
    CyclotomicPoly act(const GroupElement& g, const CyclotomicPoly& p) const;
    CyclotomicPoly act_monomial(const GroupElement& g, const SuperMonomial& m) const;

    /// Group-averaging projection (1/|G|) sum_g act(g, .).
    CyclotomicPoly reynolds(const CyclotomicPoly& p) const;

    CyclotomicPoly lift(const RationalPoly& p) const;
    /// Asserts every coefficient is rational and converts. The average
    /// over the full group always is, which doubles as a self-check of
    /// the cyclotomic arithmetic.
    RationalPoly to_rational(const CyclotomicPoly& p) const;

 private:
    GroupAction(ContextPtr ctx, chartab::FieldPtr field);
    struct Images {
        std::vector<CyclotomicPoly> bosonic, fermionic;
    };
    Images images_for(const GroupElement& g) const;

    ContextPtr ctx_;
    chartab::FieldPtr field_;
};

/// Graded dimensions of the coinvariant quotient, computed from
/// scratch in diagonal coordinates z = x1 + i x2, w = x1 - i x2 per
/// variable set: rho scales monomials by powers of zeta_n and phi
/// swaps the pair, so Reynolds images of monomials have at most two
/// terms and all elimination stays rational. Requires cap >= n + 1;
/// components of total degree in (n, cap] are reported as computed,
/// not truncated.
GradedDims quotient_hilbert_oracle(int n, int k, int j, int degree_cap);
GradedDims cyclic_quotient_hilbert_oracle(int n, int k, int j, int degree_cap);

/// Lazy per-multidegree spans of the invariant ideal in x-coordinates:
/// Reynolds images of all lower-degree monomials times complementary
/// monomials. Row spaces are kept as fraction-free echelons.
class IdealComponents {
 public:
    explicit IdealComponents(const GroupAction& action);

    const std::vector<SuperMonomial>& monomials(const Multidegree& d);
    const FractionFreeEchelon& echelon(const Multidegree& d);
    std::int64_t quotient_dim(const Multidegree& d);
    std::vector<Rational> vectorize(const Multidegree& d, const RationalPoly& p);

    const GroupAction& action() const { return action_; }

 private:
    /// A row basis of the invariant subspace of multidegree d.
    const std::vector<RationalPoly>& invariants(const Multidegree& d);

    const GroupAction& action_;
    std::map<Multidegree, std::vector<SuperMonomial>> monomials_;
    std::map<Multidegree, std::vector<RationalPoly>> invariants_;
    std::map<Multidegree, FractionFreeEchelon> echelons_;
};

/// Trace of g on the quotient component of multidegree d, expressed in
/// the certified monomial basis via the straightening normal form.
Cyclotomic character_trace_oracle(const GroupAction& action,
                                  const GroupElement& g, const Multidegree& d);

/// All traces of g per multidegree (dropping empty components).
std::map<Multidegree, Cyclotomic> trace_map(const GroupAction& action,
                                            const GroupElement& g);

struct CertifyEntry {
    Multidegree d;
    std::int64_t basis_count = 0;
    std::int64_t diagonal_dim = 0;  // z,w-path quotient dimension
    std::int64_t x_dim = 0;         // x-path quotient dimension
    bool ok = false;
};

struct CertifyReport {
    int n = 0, k = 0, j = 0;
    bool cyclic = false;
    bool pass = false;
    std::int64_t total_monomials = 0;
    int samples = 0;
    std::vector<CertifyEntry> entries;
    std::vector<std::string> failures;
};

/// Certifies the monomial basis against both oracle paths: counts per
/// multidegree match the diagonal-coordinate dimensions, the basis is
/// independent modulo the x-coordinate ideal spans, reduce fixes every
/// basis element, kills every ideal generator, and sends `samples`
/// random monomials to representatives that differ from them by ideal
/// members (rank test).
CertifyReport certify_basis(int n, int k, int j, int samples = 200,
                            std::uint64_t seed = 0xC01Eul);
CertifyReport cyclic_certify_basis(int n, int k, int j, int samples = 50,
                                   std::uint64_t seed = 0xC01Eul);

struct HilbertComparison {
    bool pass = false;
    std::vector<std::string> mismatches;
};

/// Coefficient-by-coefficient comparison of a closed-form Hilbert
/// series against oracle dimensions; flags nonzero components above
/// total degree n separately.
HilbertComparison compare_hilbert(const symfunc::GradingPoly& closed,
                                  const GradedDims& dims, int n);

struct TraceComparison {
    bool pass = false;
    std::vector<std::string> mismatches;
};

/// Compares oracle traces against a closed-form character series
/// evaluation for every conjugacy-class representative.
TraceComparison compare_traces(int n, int k, int j);
TraceComparison cyclic_compare_traces(int n, int k, int j);

/// Graded multiplicity of chi2 recovered from oracle traces by the
/// class-function inner product.
symfunc::GradingPoly chi2_multiplicity_oracle(int n, int k, int j);

struct SpanComparison {
    Multidegree d;
    std::size_t generator_rank = 0;
    std::size_t reynolds_rank = 0;
};

/// Compares the span of the explicit generator families against the
/// Reynolds span per multidegree, up to the given total degree. The
/// generator families are only known to lie inside the ideal, so this
/// is reported as data rather than asserted.
std::vector<SpanComparison> generator_span_report(int n, int k, int j,
                                                  int degree_cap);

}  // namespace coinv::oracle
