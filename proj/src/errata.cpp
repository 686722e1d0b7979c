#include "bcpell/errata.hpp"

#include <map>
#include <sstream>

namespace bcpell {

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs)
{
    std::vector<BigInt> out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

const std::string stmt_suffix = "-stmt";
const std::string proof_suffix = "-proof";

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

std::vector<PublishedListing> published_listings()
{
    return {
        {"Pell numbers", SequenceKind::pell, big({1, 2, 5, 12, 29, 70, 169, 408, 985, 2378})},
        {"Pell-Lucas numbers", SequenceKind::pell_lucas, big({2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726})},
        {"modified Pell numbers", SequenceKind::modified_pell, big({1, 3, 7, 17, 41, 99, 329, 577, 1393, 3363})},
    };
}

std::vector<ListingDiscrepancy> listing_discrepancies(const std::vector<PublishedListing>& listings)
{
    std::vector<ListingDiscrepancy> out;
    for (const auto& l : listings) {
        for (std::size_t k = 0; k < l.values.size(); ++k) {
            const auto position = static_cast<Index>(k + 1);
            BigInt computed = seq(l.kind, position);
            if (computed != l.values[k])
                out.push_back({l.label, l.kind, position, l.values[k], std::move(computed)});
        }
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> split_verdicts(const VerificationReport& report)
{
    std::map<std::string, Status> stmt, proof;
    for (const auto& o : report.outcomes) {
        if (ends_with(o.id, stmt_suffix))
            stmt[o.id.substr(0, o.id.size() - stmt_suffix.size())] = o.status;
        else if (ends_with(o.id, proof_suffix))
            proof[o.id.substr(0, o.id.size() - proof_suffix.size())] = o.status;
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [base, s] : stmt) {
        const auto it = proof.find(base);
        if (it != proof.end() && it->second != s)
            out.emplace_back(base + stmt_suffix, base + proof_suffix);
    }
    return out;
}

std::string render_errata(const VerificationReport& report, const std::vector<ListingDiscrepancy>& listings)
{
    std::ostringstream os;
    std::size_t entries = 0;

    for (const auto& o : report.outcomes) {
        if (o.status != Status::fails)
            continue;
        ++entries;
        os << o.id << "  FAILS  " << o.paper_ref << '\n';
        if (o.first_counterexample) {
            const auto& cx = *o.first_counterexample;
            os << "    first counterexample " << cx.params << '\n'
               << "      lhs      = " << value_to_text(cx.lhs) << '\n'
               << "      rhs      = " << value_to_text(cx.rhs) << '\n'
               << "      residual = " << value_to_text(cx.residual) << '\n';
        }
    }

    for (const auto& [stmt, proof] : split_verdicts(report)) {
        ++entries;
        const auto* s = &report.outcomes.front();
        const auto* p = s;
        for (const auto& o : report.outcomes) {
            if (o.id == stmt)
                s = &o;
            if (o.id == proof)
                p = &o;
        }
        os << "split verdict: " << stmt << ' ' << to_string(s->status) << ", " << proof << ' '
           << to_string(p->status) << '\n';
    }

    for (const auto& d : listings) {
        ++entries;
        os << "listing: " << d.label << " at position " << d.position << " prints " << d.printed
           << ", recurrence gives " << d.computed << '\n';
    }

    if (entries == 0)
        os << "no discrepancies\n";
    return os.str();
}

} // namespace bcpell
