#include "stick/serialize.hpp"

#include "stick/error.hpp"

namespace stick {

namespace {

Json ints(const IntVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(x.get_str());
    return a;
}

mpz_class int_from(const Json& j)
{
    mpz_class v;
    if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
        throw Error(ErrorCode::ParseError, "expected a decimal integer string, got " + j.dump());
    return v;
}

IntVector ints_from(const Json& j)
{
    IntVector v;
    for (const auto& x : j)
        v.push_back(int_from(x));
    return v;
}

Json rational(const mpq_class& q)
{
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpq_class rational_from(const Json& j)
{
    mpz_class den = int_from(j.at("den"));
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in JSON rational");
    mpq_class q(int_from(j.at("num")), den);
    q.canonicalize();
    return q;
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Json to_json(const SolveOutcome& o)
{
    if (const auto* s = std::get_if<Solution>(&o))
        return Json{{"kind", "solution"}, {"x", ints(s->x)}};
    if (const auto* r = std::get_if<RationalInfeasible>(&o))
        return Json{{"kind", "rational_infeasible"}, {"dual", ints(r->dual)}};
    const auto& n = std::get<NonIntegral>(o);
    return Json{{"kind", "non_integral"},
                {"pivot", n.pivot},
                {"value", rational(n.value)},
                {"dual", ints(n.dual)},
                {"denominator", n.denominator.get_str()}};
}

SolveOutcome solve_outcome_from_json(const Json& j)
{
    return guarded([&]() -> SolveOutcome {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "solution")
            return Solution{ints_from(j.at("x"))};
        if (kind == "rational_infeasible")
            return RationalInfeasible{ints_from(j.at("dual"))};
        if (kind == "non_integral")
            return NonIntegral{j.at("pivot").get<std::size_t>(), rational_from(j.at("value")),
                               ints_from(j.at("dual")), int_from(j.at("denominator"))};
        throw Error(ErrorCode::ParseError, "unknown outcome kind '" + kind + "'");
    });
}

Json to_json(const MembershipResult& r)
{
    if (const auto* in = std::get_if<InS>(&r))
        return Json{{"member", true}, {"coefficients", ints(in->coefficients)}};
    return Json{{"member", false}, {"certificate", to_json(std::get<NotInS>(r).certificate)}};
}

MembershipResult membership_from_json(const Json& j)
{
    return guarded([&]() -> MembershipResult {
        if (j.at("member").get<bool>())
            return InS{ints_from(j.at("coefficients"))};
        return NotInS{solve_outcome_from_json(j.at("certificate"))};
    });
}

Json to_json(const ResidueGenerationVerdict& v)
{
    Json reason{{"kind", to_string(v.reason.kind)}};
    if (v.reason.kind == ReasonKind::ThetaInS || v.reason.kind == ReasonKind::ThetaNotInS) {
        reason["representatives"] = v.reason.representatives;
        reason["variants_tested"] = v.reason.variants_tested;
    }
    Json j{{"ell", v.ell},
           {"f", v.f},
           {"status", to_string(v.status)},
           {"reason", reason},
           {"assumptions", v.assumptions}};
    if (v.reason.membership)
        j["certificate"] = to_json(*v.reason.membership);
    return j;
}

ResidueGenerationVerdict verdict_from_json(const Json& j)
{
    return guarded([&] {
        ResidueGenerationVerdict v;
        v.ell = j.at("ell").get<std::int64_t>();
        v.f = j.at("f").get<std::int64_t>();
        v.status = parse_rstatus(j.at("status").get<std::string>());
        const Json& r = j.at("reason");
        v.reason.kind = parse_reason_kind(r.at("kind").get<std::string>());
        if (r.contains("representatives"))
            v.reason.representatives = r.at("representatives").get<std::vector<std::int64_t>>();
        if (r.contains("variants_tested"))
            v.reason.variants_tested = r.at("variants_tested").get<std::size_t>();
        v.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        if (j.contains("certificate"))
            v.reason.membership = membership_from_json(j.at("certificate"));
        return v;
    });
}

Json to_json(const NormVerdict& v)
{
    Json trace = Json::array();
    for (const auto& f : v.trace) {
        Json t{{"prime", f.prime ? Json(f.prime->get_str()) : Json(nullptr)},
               {"rule", to_string(f.rule)},
               {"detail", f.detail}};
        if (!f.rejected.empty())
            t["rejected"] = f.rejected;
        if (f.s)
            t["s"] = f.s->get_str();
        if (f.t)
            t["t"] = f.t->get_str();
        trace.push_back(std::move(t));
    }
    return Json{{"ell", v.ell},
                {"a", rational(v.a)},
                {"status", to_string(v.status)},
                {"trace", trace},
                {"assumptions", v.assumptions}};
}

NormVerdict norm_verdict_from_json(const Json& j)
{
    return guarded([&] {
        NormVerdict v;
        v.ell = j.at("ell").get<std::int64_t>();
        v.a = rational_from(j.at("a"));
        v.status = parse_norm_status(j.at("status").get<std::string>());
        for (const auto& t : j.at("trace")) {
            RuleFiring f;
            if (!t.at("prime").is_null())
                f.prime = int_from(t.at("prime"));
            f.rule = parse_norm_rule(t.at("rule").get<std::string>());
            f.detail = t.at("detail").get<std::string>();
            if (t.contains("rejected"))
                f.rejected = t.at("rejected").get<std::vector<std::string>>();
            if (t.contains("s"))
                f.s = int_from(t.at("s"));
            if (t.contains("t"))
                f.t = int_from(t.at("t"));
            v.trace.push_back(std::move(f));
        }
        v.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        return v;
    });
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace stick
