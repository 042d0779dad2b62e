#include "qseries/verify.hpp"

#include <algorithm>
#include <sstream>

namespace qseries {

namespace {

std::string render_params(const std::map<std::string, long>& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first)
            os << ",";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

std::string_view to_string(VerifyStatus status) {
    switch (status) {
    case VerifyStatus::Pass: return "Pass";
    case VerifyStatus::FirstMismatch: return "FirstMismatch";
    case VerifyStatus::NegativeCoefficient: return "NegativeCoefficient";
    case VerifyStatus::ZeroCoefficient: return "ZeroCoefficient";
    }
    return "?";
}

json VerifyReport::to_json() const {
    json j;
    j["check_id"] = check_id;
    j["params"] = json::object();
    for (const auto& [k, v] : params)
        j["params"][k] = v;
    j["order"] = order;
    j["status"] = std::string(to_string(status));
    if (witness_exponent)
        j["witness_exponent"] = *witness_exponent;
    if (lhs_value)
        j["lhs_value"] = *lhs_value;
    if (rhs_value)
        j["rhs_value"] = *rhs_value;
    return j;
}

std::string VerifyReport::to_line() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << " " << check_id;
    std::string p = render_params(params);
    if (!p.empty())
        os << " " << p;
    os << " order=" << order;
    if (!passed()) {
        os << " status=" << to_string(status);
        if (witness_exponent)
            os << " witness=q^" << *witness_exponent;
        if (lhs_value)
            os << " lhs=" << *lhs_value;
        if (rhs_value)
            os << " rhs=" << *rhs_value;
    }
    return os.str();
}

std::string VerifyReport::csv_header() {
    return "check_id,params,order,status,witness_exponent,lhs_value,rhs_value";
}

std::string VerifyReport::to_csv_row() const {
    std::ostringstream os;
    os << check_id << "," << render_params(params).c_str() << "," << order << ","
       << to_string(status) << ",";
    if (witness_exponent)
        os << *witness_exponent;
    os << ",";
    if (lhs_value)
        os << *lhs_value;
    os << ",";
    if (rhs_value)
        os << *rhs_value;
    return os.str();
}

VerifyReport assert_equal(const TruncSeries& lhs, const TruncSeries& rhs, long order,
                          std::string check_id, std::map<std::string, long> params) {
    VerifyReport r;
    r.check_id = std::move(check_id);
    r.params = std::move(params);
    r.order = order;
    std::optional<long> diff = first_difference(lhs, rhs, order); // throws InsufficientPrecision
    if (diff) {
        r.status = VerifyStatus::FirstMismatch;
        r.witness_exponent = *diff;
        r.lhs_value = lhs.coefficient(*diff).str();
        r.rhs_value = rhs.coefficient(*diff).str();
    }
    return r;
}

VerifyReport assert_positive(const TruncSeries& s, long from, long to, bool strict,
                             std::string check_id, std::map<std::string, long> params) {
    if (to > s.order())
        throw InsufficientPrecision("assert_positive: range end " + std::to_string(to) +
                                    " above stored order " + std::to_string(s.order()));
    std::optional<long> ev = s.effective_valuation();
    if (ev && *ev < 0)
        throw NotAPowerSeries("assert_positive: nonzero coefficient at q^" + std::to_string(*ev));

    VerifyReport r;
    r.check_id = std::move(check_id);
    r.params = std::move(params);
    r.order = to;
    for (long e = std::max<long>(0, from); e <= to; ++e) {
        const Coefficient& c = s.coefficient(e);
        if (c.sign() < 0) {
            r.status = VerifyStatus::NegativeCoefficient;
            r.witness_exponent = e;
            r.lhs_value = c.str();
            return r;
        }
        if (strict && c.is_zero()) {
            r.status = VerifyStatus::ZeroCoefficient;
            r.witness_exponent = e;
            r.lhs_value = c.str();
            return r;
        }
    }
    return r;
}

VerifyReport check_decomposition(const Decomposition& d, long order, bool require_nonneg,
                                 std::string check_id, std::map<std::string, long> params) {
    if (d.target.order() < order)
        throw InsufficientPrecision("check_decomposition: target order " +
                                    std::to_string(d.target.order()) + " below requested " +
                                    std::to_string(order));
    for (const TruncSeries& s : d.summands)
        if (s.order() < order)
            throw InsufficientPrecision("check_decomposition: summand order " +
                                        std::to_string(s.order()) + " below requested " +
                                        std::to_string(order));

    TruncSeries sum = TruncSeries::zero(order);
    for (const TruncSeries& s : d.summands)
        add_in_place(sum, s);

    VerifyReport r;
    r.check_id = std::move(check_id);
    r.params = std::move(params);
    r.order = order;
    std::optional<long> diff = first_difference(sum, d.target, order);
    if (diff) {
        r.status = VerifyStatus::FirstMismatch;
        r.witness_exponent = *diff;
        r.lhs_value = sum.coefficient(*diff).str();
        r.rhs_value = d.target.coefficient(*diff).str();
        return r;
    }

    if (require_nonneg) {
        for (size_t j = 0; j < d.summands.size(); ++j) {
            const TruncSeries& s = d.summands[j];
            for (long e = s.valuation(); e <= order; ++e) {
                const Coefficient& c = s.coefficient(e);
                if (c.sign() < 0) {
                    r.status = VerifyStatus::NegativeCoefficient;
                    r.witness_exponent = e;
                    r.lhs_value = c.str();
                    r.params["summand"] = static_cast<long>(j);
                    return r;
                }
            }
        }
    }
    return r;
}

json Certificate::to_json() const {
    json j;
    j["statement"] = statement;
    j["order"] = order;
    j["target"] = target;
    j["summands"] = summands;
    return j;
}

Certificate Certificate::from_json(const json& j) {
    Certificate c;
    c.statement = j.at("statement");
    c.order = j.at("order").get<long>();
    c.target = j.at("target").get<std::vector<std::string>>();
    c.summands = j.at("summands").get<std::vector<std::vector<std::string>>>();
    return c;
}

Certificate emit_certificate(const Decomposition& d, long order, json statement) {
    VerifyReport check = check_decomposition(d, order, /*require_nonneg=*/true);
    if (!check.passed())
        throw UncertifiableDecomposition("emit_certificate: decomposition fails: " +
                                         check.to_line());

    auto table = [order](const TruncSeries& s) {
        std::optional<long> ev = s.effective_valuation();
        if (ev && *ev < 0)
            throw UncertifiableDecomposition(
                "emit_certificate: series reaches below exponent 0");
        std::vector<std::string> t;
        t.reserve(static_cast<size_t>(order + 1));
        for (long e = 0; e <= order; ++e)
            t.push_back(s.coefficient(e).str());
        return t;
    };

    Certificate c;
    c.statement = std::move(statement);
    if (!c.statement.contains("labels")) {
        c.statement["labels"] = d.labels;
    }
    c.order = order;
    c.target = table(d.target);
    for (const TruncSeries& s : d.summands)
        c.summands.push_back(table(s));
    return c;
}

bool recheck_certificate(const json& cert) {
    const long order = cert.at("order").get<long>();
    const auto target = cert.at("target").get<std::vector<std::string>>();
    const auto summands = cert.at("summands").get<std::vector<std::vector<std::string>>>();
    if (static_cast<long>(target.size()) != order + 1)
        return false;

    auto parse = [](const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0 || v.get_den() == 0)
            throw SeriesError("recheck_certificate: bad coefficient \"" + s + "\"");
        v.canonicalize();
        return v;
    };

    for (const auto& row : summands)
        if (row.size() != target.size())
            return false;

    for (size_t e = 0; e < target.size(); ++e) {
        mpq_class sum = 0;
        for (const auto& row : summands) {
            mpq_class v = parse(row[e]);
            if (sgn(v) < 0)
                return false; // certified summands must be nonnegative
            sum += v;
        }
        if (sum != parse(target[e]))
            return false;
    }
    return true;
}

} // namespace qseries
