#include "maxgraph/params.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace maxgraph {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SignDomain: return "SignDomain";
    case ErrorKind::BranchPointEvaluation: return "BranchPointEvaluation";
    case ErrorKind::DegenerateGauss: return "DegenerateGauss";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::PathThroughSingularity: return "PathThroughSingularity";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::DegenerateSingularity: return "DegenerateSingularity";
    case ErrorKind::AmbiguousDirection: return "AmbiguousDirection";
    case ErrorKind::NotOnHyperboloid: return "NotOnHyperboloid";
    case ErrorKind::WeldFailure: return "WeldFailure";
    case ErrorKind::IOFailure: return "IOFailure";
    case ErrorKind::OrderingInfeasible: return "OrderingInfeasible";
    case ErrorKind::NotClosedOnCurve: return "NotClosedOnCurve";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

SurfaceParams SurfaceParams::validate(const RawParams& raw) {
    if (raw.m < 1)
        throw Error(ErrorKind::LengthMismatch, "m must be at least 1");
    if (raw.n < 0)
        throw Error(ErrorKind::LengthMismatch, "n must be nonnegative");
    auto check_len = [](const char* name, std::size_t got, std::size_t want) {
        if (got != want) {
            std::ostringstream os;
            os << "|" << name << "| = " << got << ", expected " << want;
            throw Error(ErrorKind::LengthMismatch, os.str());
        }
    };
    check_len("a", raw.a.size(), 2 * static_cast<std::size_t>(raw.m));
    check_len("b", raw.b.size(), 2 * static_cast<std::size_t>(raw.n));
    check_len("alpha", raw.alpha.size(), static_cast<std::size_t>(raw.m));
    check_len("beta", raw.beta.size(), static_cast<std::size_t>(raw.n));

    for (double x : raw.a)
        if (!std::isfinite(x))
            throw Error(ErrorKind::OrderingViolation, "non-finite a coordinate");
    for (double x : raw.b)
        if (!std::isfinite(x))
            throw Error(ErrorKind::OrderingViolation, "non-finite b coordinate");

    if (!(raw.a[0] > 0.0))
        throw Error(ErrorKind::OrderingViolation, "a_1 must be positive");
    for (std::size_t j = 1; j < raw.a.size(); ++j) {
        if (!(raw.a[j - 1] < raw.a[j])) {
            std::ostringstream os;
            os << "need a_" << j << " < a_" << j + 1 << " (got " << raw.a[j - 1] << ", " << raw.a[j] << ")";
            throw Error(ErrorKind::OrderingViolation, os.str());
        }
    }
    if (!raw.b.empty() && !(raw.b[0] < 0.0))
        throw Error(ErrorKind::OrderingViolation, "b_1 must be negative");
    for (std::size_t k = 1; k < raw.b.size(); ++k) {
        if (!(raw.b[k] < raw.b[k - 1])) {
            std::ostringstream os;
            os << "need b_" << k + 1 << " < b_" << k << " (got " << raw.b[k] << ", " << raw.b[k - 1] << ")";
            throw Error(ErrorKind::OrderingViolation, os.str());
        }
    }
    for (int s : raw.alpha)
        if (s != 1 && s != -1)
            throw Error(ErrorKind::SignDomain, "alpha entries must be +1 or -1");
    for (int s : raw.beta)
        if (s != 1 && s != -1)
            throw Error(ErrorKind::SignDomain, "beta entries must be +1 or -1");

    SurfaceParams p;
    p.m_ = raw.m;
    p.n_ = raw.n;
    p.a_ = raw.a;
    p.b_ = raw.b;
    p.alpha_ = raw.alpha;
    p.beta_ = raw.beta;
    return p;
}

std::vector<double> SurfaceParams::branch_points() const {
    std::vector<double> pts(a_.begin(), a_.end());
    pts.insert(pts.end(), b_.begin(), b_.end());
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Factor k of w^2 on the positive axis is ((z - a_{2k}) / (z - a_{2k-1}))^alpha_k, so
// alpha = +1 puts the pole at a_{2k-1}; on the negative axis beta = +1 puts it at b_{2k}.
std::vector<double> SurfaceParams::poles() const {
    std::vector<double> out;
    for (int k = 1; k <= m_; ++k)
        out.push_back(alpha(k) == 1 ? a(2 * k - 1) : a(2 * k));
    for (int k = 1; k <= n_; ++k)
        out.push_back(beta(k) == 1 ? b(2 * k) : b(2 * k - 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> SurfaceParams::zeros() const {
    std::vector<double> out;
    for (int k = 1; k <= m_; ++k)
        out.push_back(alpha(k) == 1 ? a(2 * k) : a(2 * k - 1));
    for (int k = 1; k <= n_; ++k)
        out.push_back(beta(k) == 1 ? b(2 * k - 1) : b(2 * k));
    std::sort(out.begin(), out.end());
    return out;
}

double SurfaceParams::min_gap() const {
    auto pts = branch_points();
    pts.push_back(0.0);
    std::sort(pts.begin(), pts.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i)
        gap = std::min(gap, pts[i] - pts[i - 1]);
    return gap;
}

double SurfaceParams::local_gap(double x) const {
    auto pts = branch_points();
    pts.push_back(0.0);
    double gap = std::numeric_limits<double>::infinity();
    for (double q : pts)
        if (q != x)
            gap = std::min(gap, std::abs(q - x));
    return gap;
}

RawParams SurfaceParams::raw() const {
    return RawParams{m_, n_, a_, b_, alpha_, beta_};
}

nlohmann::json to_json(const SurfaceParams& p) {
    return nlohmann::json{
        {"m", p.m()},
        {"n", p.n()},
        {"a", std::vector<double>(p.a_points().begin(), p.a_points().end())},
        {"b", std::vector<double>(p.b_points().begin(), p.b_points().end())},
        {"alpha", std::vector<int>(p.alphas().begin(), p.alphas().end())},
        {"beta", std::vector<int>(p.betas().begin(), p.betas().end())},
    };
}

RawParams raw_params_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw Error(ErrorKind::InvalidArgument, "parameter document must be a JSON object");
    RawParams raw;
    try {
        raw.m = j.at("m").get<int>();
        raw.n = j.value("n", 0);
        raw.a = j.at("a").get<std::vector<double>>();
        if (j.contains("b"))
            raw.b = j.at("b").get<std::vector<double>>();
        raw.alpha = j.at("alpha").get<std::vector<int>>();
        if (j.contains("beta"))
            raw.beta = j.at("beta").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed parameters: ") + e.what());
    }
    return raw;
}

}  // namespace maxgraph
