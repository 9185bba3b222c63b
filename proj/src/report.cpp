#include "brauerkit/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace brauerkit {

namespace {

using nlohmann::json;

RingPtr job_poly_ring(const JobSpec& job) {
    std::vector<std::string> vars = job.vars;
    for (const auto& p : job.params) vars.push_back(p);
    return Ring::poly(Ring::integers(), vars);
}

bool wants(const JobSpec& job, const std::string& out) {
    return std::find(job.outputs.begin(), job.outputs.end(), out) != job.outputs.end();
}

}  // namespace

CompleteIntersectionK3 build_ci(const JobSpec& job) {
    if (job.kind != JobSpec::Kind::CompleteIntersection)
        throw PreconditionError("build_ci: job kind mismatch");
    if (job.vars.size() < 4 || job.vars.size() > 6)
        throw PreconditionError("build_ci: need x0..xn with n in {3,4,5}");
    RingPtr R = job_poly_ring(job);
    std::vector<MultiPoly> polys;
    for (const auto& src : job.polys) polys.push_back(parse_poly(src, R));
    int n = static_cast<int>(job.vars.size()) - 1;
    return CompleteIntersectionK3::make(R, n, std::move(polys), job.params);
}

DoublePlaneK3 build_dp(const JobSpec& job) {
    if (job.kind != JobSpec::Kind::DoublePlane)
        throw PreconditionError("build_dp: job kind mismatch");
    if (job.vars.size() != 3) throw PreconditionError("build_dp: need exactly x0,x1,x2");
    if (job.polys.size() != 1) throw PreconditionError("build_dp: need exactly one sextic");
    RingPtr R = job_poly_ring(job);
    return DoublePlaneK3::make(R, parse_poly(job.polys[0], R), job.params);
}

WeierstrassModel build_ew(const JobSpec& job) {
    if (job.kind != JobSpec::Kind::EllipticWeierstrass)
        throw PreconditionError("build_ew: job kind mismatch");
    if (job.vars.size() != 1)
        throw PreconditionError("build_ew: need exactly one fibration variable (t)");
    if (job.prime == 0) throw PreconditionError("build_ew: the artin route requires a prime");
    std::vector<std::string> vars = job.vars;
    for (const auto& p : job.params) vars.push_back(p);
    RingPtr R = Ring::poly(Ring::prime_field(job.prime), vars, 0);
    auto coeff = [&](int i) {
        auto it = job.weierstrass.find(i);
        if (it == job.weierstrass.end()) return MultiPoly(R);
        return parse_poly(it->second, R);
    };
    return WeierstrassModel::make(R, 0, coeff(1), coeff(2), coeff(3), coeff(4), coeff(6));
}

JobResult run_job(const JobSpec& job) {
    const int N = job.effective_order();
    std::ostringstream text;
    json m;
    m["schema"] = "brauerkit/1";
    m["prime"] = job.prime;
    m["order"] = N;
    m["hmax"] = job.hmax;

    auto emit = [&](const std::string& key, const std::string& value) {
        text << key << ": " << value << "\n";
        m["results"][key] = value;
    };

    switch (job.kind) {
        case JobSpec::Kind::CompleteIntersection:
        case JobSpec::Kind::DoublePlane: {
            bool is_ci = job.kind == JobSpec::Kind::CompleteIntersection;
            m["kind"] = is_ci ? "complete_intersection" : "double_plane";
            std::optional<CompleteIntersectionK3> ci;
            std::optional<DoublePlaneK3> dp;
            if (is_ci) ci = build_ci(job);
            else dp = build_dp(job);
            TruncSeries log = is_ci ? ci_log(*ci, N - 1) : dp_log(*dp, N - 1);
            if (wants(job, "log")) emit("log", log.to_string());
            if (wants(job, "fgl")) {
                FormalGroupLaw G = brauer_fgl_from_log(log, job.prime, job.precision);
                emit("fgl", G.series().to_string());
            }
            if (wants(job, "p_series") || wants(job, "height")) {
                if (job.prime == 0)
                    throw PreconditionError("p_series/height outputs require a prime");
                TruncSeries ps = p_series_from_log(log, job.prime);
                if (wants(job, "p_series")) emit("p_series", ps.to_string());
                if (wants(job, "height")) {
                    HeightResult h = height_from_p_series(ps, job.prime, false);
                    emit("height", h.to_string());
                }
            }
            if (wants(job, "landweber")) {
                ExactnessReport rep = is_ci ? exactness_report(*ci, job.prime, job.hmax)
                                            : exactness_report(*dp, job.prime, job.hmax);
                emit("landweber", rep.verdict.to_string());
                for (size_t k = 0; k < rep.vs.v.size(); ++k)
                    m["results"]["v" + std::to_string(k + 1)] = rep.vs.v[k].to_string();
                text << rep.to_string();
                m["results"]["landweber_report"] = rep.to_string();
            }
            break;
        }
        case JobSpec::Kind::EllipticWeierstrass: {
            m["kind"] = "elliptic_weierstrass";
            WeierstrassModel W = build_ew(job);
            K3ShapeReport shape = validate_k3(W);
            emit("k3_shape", shape.is_k3_shape ? "true" : "false");
            {
                Discriminant D = discriminant(W);
                emit("discriminant", D.delta.to_string());
                emit("vt_discriminant", std::to_string(D.t_adic_valuation));
            }
            if (wants(job, "log"))
                throw PreconditionError(
                    "the artin route works in characteristic p; no logarithm is available");
            std::optional<ArtinResult> law;
            if (wants(job, "fgl") || wants(job, "p_series") || wants(job, "height")) {
                law = artin_family(W, N);
                if (wants(job, "fgl")) emit("fgl", law->law.series().to_string());
                emit("artin_iterations", std::to_string(law->iterations));
            }
            if (wants(job, "p_series") || wants(job, "height")) {
                TruncSeries ps = p_series(law->law, job.prime);
                if (wants(job, "p_series")) emit("p_series", ps.to_string());
                if (wants(job, "height")) {
                    HeightResult h = height_from_p_series(ps, job.prime, law->law.is_additive());
                    emit("height", h.to_string());
                }
            }
            if (wants(job, "landweber")) {
                ExactnessReport rep = exactness_report(W, job.prime, job.hmax);
                emit("landweber", rep.verdict.to_string());
                for (size_t k = 0; k < rep.vs.v.size(); ++k)
                    m["results"]["v" + std::to_string(k + 1)] = rep.vs.v[k].to_string();
                if (rep.top_v_residue_at_origin)
                    m["results"]["v" + std::to_string(job.hmax) + "_residue_at_origin"] =
                        rep.top_v_residue_at_origin->to_string();
                text << rep.to_string();
                m["results"]["landweber_report"] = rep.to_string();
            }
            break;
        }
    }
    return JobResult{text.str(), m.dump(2) + "\n"};
}

}  // namespace brauerkit
