/*
 * qseries — exact q-series expansion and verification at the command line.
 *
 * Subcommands: expand, verify, positivity, decompose, suite. Exit codes are
 * 0 for all-pass, 1 for a mathematical failure (with a witness in the
 * report), 2 for usage errors; they are never conflated. All data output is
 * deterministic; wall-clock timings appear only in the suite's summary
 * fields.
 */

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qseries/verify.hpp"

using namespace qseries;

namespace {

// ---------------------------------------------------------------------------
// shared plumbing

struct Range {
    long lo = 0;
    long hi = 0;
    long count() const { return hi - lo + 1; }
};

/* Inclusive "a..b", or a bare "a". */
Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, dots));
            r.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected an integer or a..b, got \"" + text + "\"");
    }
    if (r.lo > r.hi)
        throw CLI::ValidationError("range", "empty range \"" + text + "\"");
    return r;
}

int default_jobs() {
    if (const char* env = std::getenv("QSERIES_WORKERS")) {
        long v = std::atol(env);
        if (v >= 1)
            return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/* Runs fn(i) for i in [0, count) on `jobs` threads; results land by index,
 * so output order never depends on scheduling. The first exception (by
 * index) is rethrown. */
std::vector<std::vector<VerifyReport>>
parallel_map(long count, int jobs, const std::function<std::vector<VerifyReport>(long)>& fn) {
    std::vector<std::vector<VerifyReport>> results(static_cast<size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i)
            results[static_cast<size_t>(i)] = fn(i);
        return results;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                results[static_cast<size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<long>(jobs, count); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty())
            return;
        file.open(path);
        if (!file)
            throw CLI::ValidationError("--output", "cannot open \"" + path + "\"");
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::string render_params(const std::map<std::string, long>& params,
                          const std::map<std::string, std::string>& extra = {}) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    for (const auto& [k, v] : extra) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}

/* Report sink shared by verify/positivity/decompose: collects, renders in
 * the chosen format, and remembers whether anything failed. */
int emit_reports(const std::vector<VerifyReport>& reports, const std::string& format,
                 Output& out) {
    long failures = 0;
    for (const auto& r : reports)
        if (!r.passed())
            ++failures;

    if (format == "json") {
        json j;
        j["checks"] = json::array();
        for (const auto& r : reports)
            j["checks"].push_back(r.to_json());
        j["summary"] = {{"checks", reports.size()}, {"failures", failures}};
        out.stream() << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << VerifyReport::csv_header() << "\n";
        for (const auto& r : reports)
            out.stream() << r.to_csv_row() << "\n";
    } else {
        for (const auto& r : reports)
            out.stream() << r.to_line() << "\n";
        out.stream() << "# summary checks=" << reports.size() << " failures=" << failures
                     << "\n";
    }
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// expand

struct ExpandOptions {
    std::string series;
    long k = 1;
    long n = 1;
    std::string form = "product";
    long order = 0;
    std::string format = "plain";
    std::string output;
};

TruncSeries expand_series(const ExpandOptions& o, std::map<std::string, long>& params,
                          std::map<std::string, std::string>& sparams) {
    if (o.series == "f") {
        std::optional<FkForm> form = fk_form_from_string(o.form);
        if (!form)
            throw CLI::ValidationError("--form", "unknown form \"" + o.form + "\"");
        params["k"] = o.k;
        sparams["form"] = o.form;
        return f_k1(o.k, *form, o.order);
    }
    if (o.series == "ratio") {
        params["n"] = o.n;
        return ratio(o.n, o.order);
    }
    if (o.series == "ratio-cor") {
        params["n"] = o.n;
        return ratio_corollary(o.n, o.order);
    }
    if (o.series == "nu")
        return nu(o.order);
    if (o.series == "mock-theta")
        return mock_theta_triple(o.order)[2];
    throw CLI::ValidationError("--series", "unknown series \"" + o.series + "\"");
}

int run_expand(const ExpandOptions& o) {
    std::map<std::string, long> params;
    std::map<std::string, std::string> sparams;
    TruncSeries s = expand_series(o, params, sparams);

    Output out;
    out.open(o.output);
    if (o.format == "json") {
        json arr = json::array();
        for (long e = 0; e <= o.order; ++e)
            arr.push_back(s.coefficient(e).str());
        out.stream() << arr.dump() << "\n";
    } else if (o.format == "csv") {
        out.stream() << "exponent,coefficient\n";
        for (long e = 0; e <= o.order; ++e)
            out.stream() << e << "," << s.coefficient(e).str() << "\n";
    } else {
        out.stream() << "# series=" << o.series << " params=" << render_params(params, sparams)
                     << " order=" << o.order << "\n";
        for (long e = 0; e <= o.order; ++e)
            out.stream() << e << " " << s.coefficient(e).str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string identity;
    std::string m_range = "0..0";
    std::string k_range = "1..1";
    std::string order = "";
    std::string format = "plain";
    std::string output;
    int jobs = default_jobs();
};

std::vector<VerifyReport> verify_identity(const std::string& identity, long param, long order) {
    std::vector<VerifyReport> out;
    auto pair_report = [&](const char* id, std::pair<TruncSeries, TruncSeries> sides,
                           std::map<std::string, long> params) {
        out.push_back(assert_equal(sides.first, sides.second, order, id, std::move(params)));
    };

    if (identity == "one-sub") {
        Decomposition d = one_substitution(param, order);
        out.push_back(check_decomposition(d, order, false, "one-sub", {{"m", param}}));
    } else if (identity == "chu") {
        pair_report("chu", chu_vandermonde_instance(param, order), {{"m", param}});
    } else if (identity == "heine") {
        pair_report("heine", heine_instance(param, order), {{"k", param}});
    } else if (identity == "fine") {
        pair_report("fine", fine_instance(param, order), {{"k", param}});
    } else if (identity == "poch-reversal") {
        for (long i = 0; i <= param; ++i)
            pair_report("poch-reversal", pochhammer_reversal(param, i, order),
                        {{"m", param}, {"i", i}});
    } else if (identity == "binom-rewrite") {
        for (long n = 0; n <= param - 2; ++n)
            pair_report("binom-rewrite", binomial_rewrite(param, n, order),
                        {{"k", param}, {"n", n}});
    } else if (identity == "form-agreement") {
        TruncSeries product = f_k1(param, FkForm::Product, order);
        out.push_back(assert_equal(product, f_k1(param, FkForm::BBK, order), order,
                                   "form-agreement(product,bbk)", {{"k", param}}));
        out.push_back(assert_equal(product, f_k1(param, FkForm::Phi, order), order,
                                   "form-agreement(product,phi)", {{"k", param}}));
        if (param >= 2)
            out.push_back(assert_equal(product, f_k1(param, FkForm::CW, order), order,
                                       "form-agreement(product,cw)", {{"k", param}}));
        else
            out.push_back(assert_equal(product, f_k1(1, FkForm::Lambert, order), order,
                                       "form-agreement(product,lambert)", {{"k", param}}));
    } else if (identity == "mock-theta") {
        auto [u, p, r] = mock_theta_triple(order);
        out.push_back(assert_equal(u, p, order, "mock-theta(unitized,product)"));
        out.push_back(assert_equal(p, r, order, "mock-theta(product,quotient)"));
    } else {
        throw CLI::ValidationError("--identity", "unknown identity \"" + identity + "\"");
    }
    return out;
}

int run_verify(const VerifyOptions& o) {
    const bool m_indexed = (o.identity == "one-sub" || o.identity == "chu" ||
                            o.identity == "poch-reversal");
    const bool k_indexed = (o.identity == "heine" || o.identity == "fine" ||
                            o.identity == "binom-rewrite" || o.identity == "form-agreement");
    if (!m_indexed && !k_indexed && o.identity != "mock-theta")
        verify_identity(o.identity, 0, 0); // throws the usage error

    std::optional<long> fixed_order;
    if (o.order != "auto") {
        if (o.order.empty())
            throw CLI::ValidationError("--order", "required (an integer, or auto for one-sub)");
        fixed_order = std::stol(o.order);
    } else if (o.identity != "one-sub") {
        throw CLI::ValidationError("--order", "auto is defined only for one-sub");
    }

    Range range{0, 0};
    if (m_indexed)
        range = parse_range(o.m_range);
    else if (k_indexed)
        range = parse_range(o.k_range);

    auto runner = [&](long i) {
        long param = range.lo + i;
        long order = fixed_order ? *fixed_order : 4 * param + 10;
        return verify_identity(o.identity, param, order);
    };
    std::vector<VerifyReport> reports;
    for (auto& batch : parallel_map(range.count(), o.jobs, runner))
        for (auto& r : batch)
            reports.push_back(std::move(r));

    Output out;
    out.open(o.output);
    return emit_reports(reports, o.format, out);
}

// ---------------------------------------------------------------------------
// positivity

struct PositivityOptions {
    std::string series;
    std::string k_range = "1..1";
    std::string n_range = "0..0";
    long order = 100;
    std::string format = "plain";
    std::string output;
    int jobs = default_jobs();
};

int run_positivity(const PositivityOptions& o) {
    std::vector<VerifyReport> reports;
    auto strict = [&](const TruncSeries& s, const char* id, std::map<std::string, long> params) {
        return assert_positive(s, 0, o.order, true, id, std::move(params));
    };

    if (o.series == "f") {
        Range ks = parse_range(o.k_range);
        auto runner = [&](long i) {
            long k = ks.lo + i;
            return std::vector<VerifyReport>{
                strict(f_k1(k, FkForm::BBK, o.order), "positive(f)", {{"k", k}})};
        };
        for (auto& batch : parallel_map(ks.count(), o.jobs, runner))
            reports.push_back(std::move(batch[0]));
    } else if (o.series == "ratio" || o.series == "ratio-cor") {
        Range ns = parse_range(o.n_range);
        if (o.series == "ratio" && ns.lo < 1)
            throw CLI::ValidationError("--n", "ratio needs n >= 1");
        auto runner = [&](long i) {
            long n = ns.lo + i;
            TruncSeries s = (o.series == "ratio") ? ratio(n, o.order)
                                                  : ratio_corollary(n, o.order);
            return std::vector<VerifyReport>{
                strict(s, o.series == "ratio" ? "positive(ratio)" : "positive(ratio-cor)",
                       {{"n", n}})};
        };
        for (auto& batch : parallel_map(ns.count(), o.jobs, runner))
            reports.push_back(std::move(batch[0]));
    } else if (o.series == "nu") {
        reports.push_back(strict(nu(o.order), "positive(nu)", {}));
    } else if (o.series == "mock-theta") {
        reports.push_back(strict(mock_theta_triple(o.order)[1], "positive(mock-theta)", {}));
    } else {
        throw CLI::ValidationError("--series", "unknown series \"" + o.series + "\"");
    }

    Output out;
    out.open(o.output);
    return emit_reports(reports, o.format, out);
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeOptions {
    std::string target;
    long n = 1;
    long k = 2;
    long m = 0;
    long order = 100;
    std::string certify;
    bool recheck = false;
    std::string format = "plain";
    std::string output;
};

int run_decompose(const DecomposeOptions& o) {
    Decomposition d{TruncSeries::zero(0), {}, {}};
    std::map<std::string, long> params;
    bool nonneg = true; // the substitution-of-one summands genuinely alternate
    json statement;

    if (o.target == "ratio") {
        d = decompose_ratio(o.n, o.order);
        params["n"] = o.n;
        statement["identity"] = "ratio-decomposition";
    } else if (o.target == "cw") {
        d = decompose_cw(o.k, o.order);
        params["k"] = o.k;
        statement["identity"] = "cw-decomposition";
    } else if (o.target == "one-sub") {
        d = one_substitution(o.m, o.order);
        params["m"] = o.m;
        nonneg = false;
        statement["identity"] = "substitution-of-one";
    } else {
        throw CLI::ValidationError("--target", "unknown target \"" + o.target + "\"");
    }
    statement["params"] = params;

    std::vector<VerifyReport> reports;
    reports.push_back(check_decomposition(d, o.order, nonneg, "decompose(" + o.target + ")",
                                          params));

    int rc = 0;
    if (!o.certify.empty()) {
        if (!reports.back().passed()) {
            rc = 1;
        } else {
            try {
                Certificate cert = emit_certificate(d, o.order, statement);
                std::ofstream f(o.certify);
                if (!f)
                    throw CLI::ValidationError("--certify", "cannot open \"" + o.certify + "\"");
                f << cert.to_json().dump(2) << "\n";
                if (o.recheck) {
                    std::ifstream in(o.certify);
                    json loaded = json::parse(in);
                    VerifyReport rr;
                    rr.check_id = "certificate-recheck";
                    rr.params = params;
                    rr.order = o.order;
                    if (!recheck_certificate(loaded)) {
                        rr.status = VerifyStatus::FirstMismatch;
                        rc = 1;
                    }
                    reports.push_back(std::move(rr));
                }
            } catch (const UncertifiableDecomposition& e) {
                std::cerr << "uncertifiable: " << e.what() << "\n";
                rc = 1;
            }
        }
    }

    Output out;
    out.open(o.output);
    int emit_rc = emit_reports(reports, o.format, out);
    return rc != 0 ? rc : emit_rc;
}

// ---------------------------------------------------------------------------
// suite

struct SuiteOptions {
    std::string profile = "desk";
    std::string format = "plain";
    std::string output;
    int jobs = default_jobs();
};

struct SuiteCheck {
    std::string name;
    long checks = 0;
    long failures = 0;
    double wall_ms = 0;
    std::string first_failure;
};

int run_suite(const SuiteOptions& o) {
    const bool quick = (o.profile == "quick");
    if (!quick && o.profile != "desk")
        throw CLI::ValidationError("--profile", "unknown profile \"" + o.profile + "\"");

    struct Spec {
        std::string name;
        std::function<std::vector<VerifyReport>()> run;
    };
    const long formN = quick ? 60 : 300;
    const long formK = quick ? 4 : 12;
    const long posN = quick ? 80 : 500;
    const long posK = quick ? 8 : 50;
    const long oneM = quick ? 12 : 60;
    const long ratN = quick ? 8 : 40;
    const long ratOrd = quick ? 60 : 200;
    const long mockN = quick ? 60 : 300;
    const long chuM = quick ? 10 : 40;
    const long hfOrd = quick ? 60 : 200;
    const long hfK = quick ? 5 : 12;
    const long revM = quick ? 8 : 25;
    const long brK = quick ? 8 : 25;

    std::vector<Spec> specs;
    specs.push_back({"form-agreement", [&] {
        std::vector<VerifyReport> rs;
        auto batches = parallel_map(formK, o.jobs, [&](long i) {
            return verify_identity("form-agreement", i + 1, formN);
        });
        for (auto& b : batches)
            for (auto& r : b)
                rs.push_back(std::move(r));
        return rs;
    }});
    specs.push_back({"strict-positivity", [&] {
        std::vector<VerifyReport> rs;
        auto batches = parallel_map(posK, o.jobs, [&](long i) {
            long k = i + 1;
            return std::vector<VerifyReport>{assert_positive(
                f_k1(k, FkForm::BBK, posN), 0, posN, true, "positive(f)", {{"k", k}})};
        });
        for (auto& b : batches)
            rs.push_back(std::move(b[0]));
        return rs;
    }});
    specs.push_back({"one-substitution", [&] {
        std::vector<VerifyReport> rs;
        auto batches = parallel_map(oneM + 1, o.jobs, [&](long m) {
            return verify_identity("one-sub", m, 4 * m + 10);
        });
        for (auto& b : batches)
            rs.push_back(std::move(b[0]));
        return rs;
    }});
    specs.push_back({"ratio-decomposition", [&] {
        std::vector<VerifyReport> rs;
        auto batches = parallel_map(ratN, o.jobs, [&](long i) {
            long n = i + 1;
            std::vector<VerifyReport> out;
            Decomposition d = decompose_ratio(n, ratOrd);
            out.push_back(check_decomposition(d, ratOrd, true, "ratio-decomposition",
                                              {{"n", n}}));
            TruncSeries lead = div(TruncSeries::constant(1, ratOrd),
                                   pochhammer(PochSpec::finite(qpow(1), 2, n), ratOrd));
            out.push_back(assert_equal(d.summands[0], lead, ratOrd, "ratio-summand0",
                                       {{"n", n}}));
            out.push_back(assert_positive(d.target, 0, ratOrd, true, "positive(ratio)",
                                          {{"n", n}}));
            return out;
        });
        for (auto& b : batches)
            for (auto& r : b)
                rs.push_back(std::move(r));
        return rs;
    }});
    specs.push_back({"ratio-corollary", [&] {
        std::vector<VerifyReport> rs;
        auto batches = parallel_map(ratN + 1, o.jobs, [&](long n) {
            std::vector<VerifyReport> out;
            TruncSeries rc = ratio_corollary(n, ratOrd);
            out.push_back(assert_positive(rc, 0, ratOrd, true, "positive(ratio-cor)",
                                          {{"n", n}}));
            if (n >= 1) {
                TruncSeries back = mul_binomial(mul_binomial(rc, -1, 2 * n + 1), -1, 2 * n + 1);
                out.push_back(assert_equal(back, ratio(n, ratOrd), ratOrd,
                                           "ratio-cor*(1-q^{2n+1})^2", {{"n", n}}));
            }
            return out;
        });
        for (auto& b : batches)
            for (auto& r : b)
                rs.push_back(std::move(r));
        return rs;
    }});
    specs.push_back({"mock-theta", [&] {
        std::vector<VerifyReport> rs = verify_identity("mock-theta", 0, mockN);
        rs.push_back(assert_positive(mock_theta_triple(mockN)[1], 0, mockN, true,
                                     "positive(mock-theta)"));
        return rs;
    }});
    specs.push_back({"transformations", [&] {
        std::vector<VerifyReport> rs;
        for (long m = 0; m <= chuM; ++m)
            for (auto& r : verify_identity("chu", m, 4 * m + 10))
                rs.push_back(std::move(r));
        auto heine = parallel_map(hfK, o.jobs, [&](long i) {
            return verify_identity("heine", i + 1, hfOrd);
        });
        for (auto& b : heine)
            for (auto& r : b)
                rs.push_back(std::move(r));
        auto fine = parallel_map(hfK - 1, o.jobs, [&](long i) {
            return verify_identity("fine", i + 2, hfOrd);
        });
        for (auto& b : fine)
            for (auto& r : b)
                rs.push_back(std::move(r));
        for (long m = 0; m <= revM; ++m)
            for (auto& r : verify_identity("poch-reversal", m, 4 * m + 10))
                rs.push_back(std::move(r));
        for (long k = 2; k <= brK; ++k)
            for (auto& r : verify_identity("binom-rewrite", k, 20))
                rs.push_back(std::move(r));
        return rs;
    }});

    std::vector<SuiteCheck> results;
    bool all_pass = true;
    for (const auto& spec : specs) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<VerifyReport> rs = spec.run();
        auto t1 = std::chrono::steady_clock::now();
        SuiteCheck c;
        c.name = spec.name;
        c.checks = static_cast<long>(rs.size());
        c.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        for (const auto& r : rs)
            if (!r.passed()) {
                ++c.failures;
                if (c.first_failure.empty())
                    c.first_failure = r.to_line();
            }
        all_pass = all_pass && (c.failures == 0);
        results.push_back(std::move(c));
    }

    Output out;
    out.open(o.output);
    if (o.format == "json") {
        json j;
        j["profile"] = o.profile;
        j["checks"] = json::array();
        for (const auto& c : results) {
            json e;
            e["check"] = c.name;
            e["status"] = c.failures == 0 ? "Pass" : "Fail";
            e["checks"] = c.checks;
            e["failures"] = c.failures;
            if (!c.first_failure.empty())
                e["first_failure"] = c.first_failure;
            e["wall_ms"] = c.wall_ms;
            j["checks"].push_back(e);
        }
        j["summary"] = {{"all_pass", all_pass}};
        out.stream() << j.dump(2) << "\n";
    } else {
        for (const auto& c : results) {
            out.stream() << (c.failures == 0 ? "PASS" : "FAIL") << " " << c.name
                         << " checks=" << c.checks << " failures=" << c.failures
                         << " wall_ms=" << static_cast<long>(c.wall_ms) << "\n";
            if (!c.first_failure.empty())
                out.stream() << "  first failure: " << c.first_failure << "\n";
        }
        out.stream() << "# suite profile=" << o.profile << " "
                     << (all_pass ? "all-pass" : "FAILURES") << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine: expansions, identities, positivity"};
    app.require_subcommand(1);

    ExpandOptions eo;
    CLI::App* expand = app.add_subcommand("expand", "print coefficients of a series");
    expand->add_option("--series", eo.series, "f | ratio | ratio-cor | nu | mock-theta")
        ->required();
    expand->add_option("--k", eo.k, "k for --series f");
    expand->add_option("--n", eo.n, "n for ratio / ratio-cor");
    expand->add_option("--form", eo.form, "product | bbk | cw | lambert | phi");
    expand->add_option("--order", eo.order, "truncation order (inclusive)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    expand->add_option("--format", eo.format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    expand->add_option("--output", eo.output, "write to a file instead of stdout");

    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "check a named identity over a range");
    verify->add_option("--identity", vo.identity,
                       "one-sub | chu | heine | fine | poch-reversal | binom-rewrite | "
                       "form-agreement | mock-theta")
        ->required();
    verify->add_option("--m", vo.m_range, "m range a..b");
    verify->add_option("--k", vo.k_range, "k range a..b");
    verify->add_option("--order", vo.order, "order, or auto (one-sub: 4m+10)");
    verify->add_option("--format", vo.format)->check(CLI::IsMember({"plain", "json", "csv"}));
    verify->add_option("--output", vo.output);
    verify->add_option("--jobs", vo.jobs, "worker threads (default $QSERIES_WORKERS)");

    PositivityOptions po;
    CLI::App* positivity =
        app.add_subcommand("positivity", "strict positivity scans over parameter ranges");
    positivity->add_option("--series", po.series, "f | ratio | ratio-cor | nu | mock-theta")
        ->required();
    positivity->add_option("--k", po.k_range, "k range for f");
    positivity->add_option("--n", po.n_range, "n range for ratio / ratio-cor");
    positivity->add_option("--order", po.order)->required()->check(CLI::NonNegativeNumber);
    positivity->add_option("--format", po.format)
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    positivity->add_option("--output", po.output);
    positivity->add_option("--jobs", po.jobs);

    DecomposeOptions dopt;
    CLI::App* decompose =
        app.add_subcommand("decompose", "check a decomposition, optionally emit a certificate");
    decompose->add_option("--target", dopt.target, "ratio | cw | one-sub")->required();
    decompose->add_option("--n", dopt.n, "n for ratio");
    decompose->add_option("--k", dopt.k, "k for cw");
    decompose->add_option("--m", dopt.m, "m for one-sub");
    decompose->add_option("--order", dopt.order)->required()->check(CLI::NonNegativeNumber);
    decompose->add_option("--certify", dopt.certify, "write the certificate JSON here");
    decompose->add_flag("--recheck", dopt.recheck,
                        "re-validate the written certificate independently");
    decompose->add_option("--format", dopt.format)
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    decompose->add_option("--output", dopt.output);

    std::string recheck_path;
    CLI::App* recheck =
        app.add_subcommand("recheck", "re-validate a stored certificate file independently");
    recheck->add_option("--certificate", recheck_path, "certificate JSON file")->required();

    SuiteOptions so;
    CLI::App* suite = app.add_subcommand("suite", "run the full verification battery");
    suite->add_option("--profile", so.profile, "desk | quick");
    suite->add_option("--format", so.format)->check(CLI::IsMember({"plain", "json"}));
    suite->add_option("--output", so.output);
    suite->add_option("--jobs", so.jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*expand) {
            // parse-time rejection: the CW form only exists for k >= 2
            if (eo.series == "f" && eo.form == "cw" && eo.k < 2) {
                std::cerr << "the cw form needs k >= 2\n";
                return 2;
            }
            return run_expand(eo);
        }
        if (*verify)
            return run_verify(vo);
        if (*positivity)
            return run_positivity(po);
        if (*decompose)
            return run_decompose(dopt);
        if (*recheck) {
            std::ifstream in(recheck_path);
            if (!in) {
                std::cerr << "cannot open \"" << recheck_path << "\"\n";
                return 2;
            }
            json cert;
            try {
                cert = json::parse(in);
            } catch (const json::exception& e) {
                std::cerr << "bad certificate JSON: " << e.what() << "\n";
                return 2;
            }
            bool ok = recheck_certificate(cert);
            std::cout << (ok ? "PASS" : "FAIL") << " certificate-recheck file=" << recheck_path
                      << "\n";
            return ok ? 0 : 1;
        }
        if (*suite)
            return run_suite(so);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const SeriesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
