#include "coinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "coinv/oracle.hpp"
#include "coinv/series.hpp"
#include "coinv/straighten.hpp"
#include "coinv/symfunc.hpp"

namespace coinv::cli {

using json = nlohmann::ordered_json;
using series::CharacterSeries;
using symfunc::GradingPoly;
using symfunc::Multidegree;

namespace {

bool cyclic_group(const RunConfig& c) { return c.group == "cyclic"; }

void validate(const RunConfig& c) {
    if (c.group != "dihedral" && c.group != "cyclic")
        throw std::invalid_argument("group must be dihedral or cyclic");
    if (c.k < 0 || c.j < 0) throw std::invalid_argument("k and j must be >= 0");
    if (cyclic_group(c) ? c.n < 1 : c.n < 2)
        throw std::invalid_argument(cyclic_group(c) ? "cyclic mode needs n >= 1"
                                                    : "dihedral mode needs n >= 2");
    if (c.format != "text" && c.format != "json")
        throw std::invalid_argument("format must be text or json");
    if (c.degree_cap && *c.degree_cap < c.n + 1)
        throw std::invalid_argument("degree cap must be at least n + 1");
}

json coefficient_json(const BigInt& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

json poly_json(const GradingPoly& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exponents"] = e;
        t["coefficient"] = coefficient_json(c);
        terms.push_back(std::move(t));
    }
    json out;
    out["variables"] = names;
    out["terms"] = std::move(terms);
    return out;
}

json header_json(const RunConfig& c) {
    json out;
    out["command"] = c.command;
    out["group"] = c.group;
    out["n"] = c.n;
    out["k"] = c.k;
    out["j"] = c.j;
    return out;
}

// Per-multidegree label multiplicities of a character series.
std::map<Multidegree, std::map<std::string, BigInt>> expansion_of(
    const CharacterSeries& s) {
    std::map<Multidegree, std::map<std::string, BigInt>> out;
    for (const auto& term : s.terms()) {
        GradingPoly p = symfunc::super_schur(term.shape, s.k(), s.j());
        for (const auto& [d, c] : p.terms())
            out[d][term.label.to_string()] += c * term.coeff;
    }
    return out;
}

int run_series_command(const RunConfig& c, const VerifyOptions&,
                       std::ostream& out) {
    const bool cyc = cyclic_group(c);
    std::vector<std::string> names = symfunc::grading_names(c.k, c.j);

    if (c.command == "dim") {
        BigInt d = cyc ? series::cyclic_dimension(c.n, c.k, c.j)
                       : series::dimension(c.n, c.k, c.j);
        if (c.format == "json") {
            json o = header_json(c);
            o["value"] = coefficient_json(d);
            out << o.dump(2) << "\n";
        } else {
            out << d.get_str() << "\n";
        }
        return 0;
    }

    if (c.command == "hilb" || c.command == "catalan") {
        GradingPoly p;
        if (c.command == "catalan") {
            if (cyc)
                throw std::invalid_argument(
                    "the sign-character series is dihedral-only");
            p = series::catalan_series(c.n, c.k, c.j);
        } else {
            p = cyc ? series::cyclic_hilbert(c.n, c.k, c.j)
                    : series::hilbert_series(c.n, c.k, c.j);
        }
        if (c.format == "json") {
            json o = header_json(c);
            o["polynomial"] = poly_json(p, names);
            out << o.dump(2) << "\n";
        } else {
            out << p.to_string(names) << "\n";
        }
        return 0;
    }

    if (c.command == "char") {
        CharacterSeries s = cyc ? series::cyclic_character_series(c.n, c.k, c.j)
                                : series::character_series(c.n, c.k, c.j);
        if (c.format == "json") {
            json o = header_json(c);
            json terms = json::array();
            for (const auto& t : s.terms()) {
                json jt;
                jt["coefficient"] = coefficient_json(t.coeff);
                jt["shape"] = t.shape.parts();
                jt["label"] = t.label.to_string();
                terms.push_back(std::move(jt));
            }
            o["terms"] = std::move(terms);
            if (c.expand) {
                json exp = json::array();
                for (const auto& [d, labels] : expansion_of(s)) {
                    json e;
                    e["degree"] = d;
                    json l;
                    for (const auto& [name, mult] : labels)
                        l[name] = coefficient_json(mult);
                    e["labels"] = std::move(l);
                    exp.push_back(std::move(e));
                }
                o["expansion"] = std::move(exp);
            }
            out << o.dump(2) << "\n";
        } else {
            out << s.to_string() << "\n";
            if (c.expand)
                for (const auto& [d, labels] : expansion_of(s)) {
                    out << "  " << oracle::multidegree_to_string(d) << ":";
                    for (const auto& [name, mult] : labels) {
                        out << " ";
                        if (mult != 1) out << mult.get_str() << " ";
                        out << name;
                    }
                    out << "\n";
                }
        }
        return 0;
    }

    if (c.command == "basis") {
        auto ctx = cyc ? superring::RingContext::cyclic(c.n, c.k, c.j)
                       : superring::RingContext::dihedral(c.n, c.k, c.j);
        std::vector<superring::SuperMonomial> basis =
            cyc ? superring::cyclic_basis_enumerate(ctx)
                : superring::basis_enumerate(ctx);
        if (c.format == "json") {
            json o = header_json(c);
            json monos = json::array();
            for (const auto& m : basis)
                monos.push_back(superring::monomial_to_string(*ctx, m));
            o["count"] = basis.size();
            o["monomials"] = std::move(monos);
            out << o.dump(2) << "\n";
        } else {
            for (const auto& m : basis)
                out << superring::monomial_to_string(*ctx, m) << "\n";
        }
        return 0;
    }

    throw std::invalid_argument("unknown command: " + c.command);
}

struct CellResult {
    int n = 0, k = 0, j = 0;
    bool hilbert_pass = false;
    bool basis_pass = false;
    bool traces_pass = true;
    bool traces_run = false;
    std::int64_t basis_size = 0;
    std::vector<oracle::CertifyEntry> dims;  // per-multidegree dimensions
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // informational, never fail the run

    bool pass() const { return hilbert_pass && basis_pass && traces_pass; }
};

CellResult run_cell(bool cyclic, int n, int k, int j, int cap, bool traces,
                    bool span_report, int samples) {
    CellResult r;
    r.n = n;
    r.k = k;
    r.j = j;

    GradingPoly closed = cyclic ? series::cyclic_hilbert(n, k, j)
                                : series::hilbert_series(n, k, j);
    oracle::GradedDims dims =
        cyclic ? oracle::cyclic_quotient_hilbert_oracle(n, k, j, cap)
               : oracle::quotient_hilbert_oracle(n, k, j, cap);
    oracle::HilbertComparison hc = oracle::compare_hilbert(closed, dims, n);
    r.hilbert_pass = hc.pass;
    for (auto& m : hc.mismatches) r.failures.push_back("hilbert: " + m);

    oracle::CertifyReport cert = cyclic
                                     ? oracle::cyclic_certify_basis(n, k, j, samples)
                                     : oracle::certify_basis(n, k, j, samples);
    r.basis_pass = cert.pass;
    r.basis_size = cert.total_monomials;
    r.dims = cert.entries;
    for (auto& m : cert.failures) r.failures.push_back("basis: " + m);

    if (traces) {
        r.traces_run = true;
        oracle::TraceComparison tc = cyclic ? oracle::cyclic_compare_traces(n, k, j)
                                            : oracle::compare_traces(n, k, j);
        r.traces_pass = tc.pass;
        for (auto& m : tc.mismatches) r.failures.push_back("traces: " + m);
    }

    if (span_report && !cyclic) {
        std::size_t differing = 0;
        for (const auto& entry : oracle::generator_span_report(n, k, j, cap))
            if (entry.generator_rank != entry.reynolds_rank) {
                ++differing;
                r.notes.push_back(
                    "generator span at " + oracle::multidegree_to_string(entry.d) +
                    ": rank " + std::to_string(entry.generator_rank) + " vs " +
                    std::to_string(entry.reynolds_rank) + " from Reynolds images");
            }
        if (differing == 0)
            r.notes.push_back(
                "generator families span every ideal component up to degree " +
                std::to_string(cap));
    }
    return r;
}

int run_verify(const RunConfig& c, const VerifyOptions& v, std::ostream& out) {
    const bool cyc = cyclic_group(c);
    std::vector<int> orders = v.orders;
    if (orders.empty()) orders = {2, 3, 4};
    std::vector<std::pair<int, int>> configs = v.configs;
    if (configs.empty()) configs = {{1, 0}, {0, 1}, {1, 1}, {2, 0}};

    struct Cell {
        int n, k, j;
    };
    std::vector<Cell> cells;
    for (int n : orders) {
        if (cyc ? n < 1 : n < 2)
            throw std::invalid_argument("group order out of range in sweep");
        if (c.degree_cap && *c.degree_cap < n + 1)
            throw std::invalid_argument("degree cap below n + 1 for n = " +
                                        std::to_string(n));
        for (auto [k, j] : configs) {
            if (k < 0 || j < 0)
                throw std::invalid_argument("negative k or j in sweep");
            cells.push_back({n, k, j});
        }
    }

    std::vector<CellResult> results(cells.size());
    const int threads =
        std::max(1, std::min<int>(c.threads, static_cast<int>(cells.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& cell = cells[i];
            int cap = c.degree_cap ? *c.degree_cap : cell.n + 2;
            try {
                results[i] = run_cell(cyc, cell.n, cell.k, cell.j, cap,
                                      v.traces, v.span_report, v.samples);
            } catch (const std::exception& e) {
                // Exceptions must not escape the worker threads.
                results[i].n = cell.n;
                results[i].k = cell.k;
                results[i].j = cell.j;
                results[i].failures.push_back(std::string("exception: ") +
                                              e.what());
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    bool all_pass = true;
    for (const CellResult& r : results) all_pass = all_pass && r.pass();

    if (c.format == "json") {
        json o;
        o["command"] = "verify";
        o["group"] = c.group;
        json jcells = json::array();
        for (const CellResult& r : results) {
            json jc;
            jc["n"] = r.n;
            jc["k"] = r.k;
            jc["j"] = r.j;
            jc["hilbert"] = r.hilbert_pass ? "pass" : "fail";
            jc["basis"] = r.basis_pass ? "pass" : "fail";
            jc["traces"] =
                r.traces_run ? (r.traces_pass ? "pass" : "fail") : "skipped";
            jc["basis_size"] = r.basis_size;
            json jdims = json::array();
            for (const oracle::CertifyEntry& e : r.dims) {
                json jd;
                jd["degree"] = e.d;
                jd["dimension"] = e.diagonal_dim;
                jd["basis"] = e.basis_count;
                jdims.push_back(std::move(jd));
            }
            jc["dims"] = std::move(jdims);
            jc["failures"] = r.failures;
            if (!r.notes.empty()) jc["notes"] = r.notes;
            jcells.push_back(std::move(jc));
        }
        o["cells"] = std::move(jcells);
        o["status"] = all_pass ? "pass" : "fail";
        out << o.dump(2) << "\n";
    } else {
        for (const CellResult& r : results) {
            out << "n=" << r.n << " k=" << r.k << " j=" << r.j << ": hilbert "
                << (r.hilbert_pass ? "ok" : "FAIL") << ", basis "
                << (r.basis_pass ? "ok" : "FAIL") << " (" << r.basis_size
                << " monomials)";
            if (r.traces_run)
                out << ", traces " << (r.traces_pass ? "ok" : "FAIL");
            out << "\n";
            for (const std::string& f : r.failures) out << "  ! " << f << "\n";
            for (const std::string& note : r.notes) out << "  - " << note << "\n";
        }
        out << (all_pass ? "verify: all checks passed"
                         : "verify: FAILURES detected")
            << "\n";
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config, const VerifyOptions& verify, std::ostream& out,
        std::ostream& err) {
    try {
        validate(config);
        if (config.command == "verify") return run_verify(config, verify, out);
        return run_series_command(config, verify, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_entry(int argc, const char* const* argv) {
    CLI::App app{"Exact series, bases and brute-force verification for "
                 "dihedral and cyclic coinvariant rings"};
    app.require_subcommand(1);

    RunConfig config;
    VerifyOptions verify;
    if (const char* env = std::getenv("COINV_THREADS")) {
        config.threads = std::max(1, std::atoi(env));
    } else {
        config.threads = std::max(
            1, static_cast<int>(std::thread::hardware_concurrency()));
    }

    std::vector<std::string> kj_specs;
    auto add_common = [&](CLI::App* sub, bool needs_kj) {
        sub->add_option("--group", config.group, "dihedral or cyclic")
            ->check(CLI::IsMember({"dihedral", "cyclic"}));
        sub->add_option("--format", config.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_kj) {
            sub->add_option("--n", config.n, "group order")->required();
            sub->add_option("--k", config.k, "bosonic variable sets");
            sub->add_option("--j", config.j, "fermionic variable sets");
        }
    };

    add_common(app.add_subcommand("char", "multigraded character series"), true);
    app.get_subcommand("char")->add_flag("--expand", config.expand,
                                         "also print the multidegree expansion");
    add_common(app.add_subcommand("hilb", "multigraded Hilbert series"), true);
    add_common(app.add_subcommand("dim", "total dimension"), true);
    add_common(app.add_subcommand("basis", "monomial basis"), true);
    add_common(app.add_subcommand("catalan", "sign-character series"), true);

    CLI::App* ver = app.add_subcommand(
        "verify", "brute-force oracle sweep against the closed forms");
    ver->add_option("--group", config.group, "dihedral or cyclic")
        ->check(CLI::IsMember({"dihedral", "cyclic"}));
    ver->add_option("--format", config.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--n", verify.orders, "group orders to sweep");
    ver->add_option("--kj", kj_specs,
                    "variable-set cells as k,j (repeatable)");
    int cap = 0;
    ver->add_option("--degree-cap", cap, "oracle degree cap (default n + 2)");
    ver->add_flag("--traces", verify.traces,
                  "also check character traces against the oracle");
    ver->add_flag("--span-report", verify.span_report,
                  "report generator-family vs Reynolds spans (informational)");
    ver->add_option("--samples", verify.samples,
                    "random monomials per cell in basis certification");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (const std::string& spec : kj_specs) {
        auto comma = spec.find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --kj expects k,j\n";
            return 1;
        }
        try {
            verify.configs.emplace_back(std::stoi(spec.substr(0, comma)),
                                        std::stoi(spec.substr(comma + 1)));
        } catch (const std::exception&) {
            std::cerr << "error: --kj expects integers k,j\n";
            return 1;
        }
    }

    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "verify") {
        config.n = verify.orders.empty() ? 2 : verify.orders.front();
        if (cap != 0) config.degree_cap = cap;
    }
    try {
        return run(config, verify, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace coinv::cli
