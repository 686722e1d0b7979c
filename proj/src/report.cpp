#include <json.hpp>

#include "bcpell/identities.hpp"

namespace bcpell {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_json(const Value& v)
{
    if (const auto* a = std::get_if<BigInt>(&v))
        return to_decimal(*a);
    ordered_json arr = ordered_json::array();
    for (const auto& c : std::get<BicomplexZ>(v).components())
        arr.push_back(to_decimal(c));
    return arr;
}

ordered_json params_json(const Params& p)
{
    ordered_json obj = ordered_json::object();
    for (std::size_t k = 0; k < p.arity(); ++k)
        obj[std::string(1, p.name(k))] = p.value(k);
    return obj;
}

} // namespace

std::string report_to_json(const VerificationReport& report)
{
    ordered_json root;
    root["artifact_version"] = report.artifact_version;
    ordered_json outcomes = ordered_json::array();
    for (const auto& o : report.outcomes) {
        ordered_json entry;
        entry["id"] = o.id;
        entry["paper_ref"] = o.paper_ref;
        entry["status"] = to_string(o.status);
        entry["checked_points"] = o.checked_points;
        if (o.first_counterexample) {
            const auto& cx = *o.first_counterexample;
            entry["counterexample"] = {{"params", params_json(cx.params)},
                                       {"lhs", value_json(cx.lhs)},
                                       {"rhs", value_json(cx.rhs)},
                                       {"residual", value_json(cx.residual)}};
        } else {
            entry["counterexample"] = nullptr;
        }
        outcomes.push_back(std::move(entry));
    }
    root["outcomes"] = std::move(outcomes);
    root["summary"] = {{"holds", report.summary.holds}, {"fails", report.summary.fails}};
    return root.dump(2) + "\n";
}

} // namespace bcpell
