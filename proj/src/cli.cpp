#include "bcpell/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcpell/bpell.hpp"
#include "bcpell/errata.hpp"
#include "bcpell/identities.hpp"

namespace bcpell {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* const nmax_env = "BICOMPLEX_PELL_NMAX";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> format_names{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

std::optional<Index> env_n_max()
{
    const char* raw = std::getenv(nmax_env);
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(raw, &used);
        if (used != std::string(raw).size())
            throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(nmax_env) + " is not an integer: '" + raw + "'");
    }
}

std::optional<Index> effective_n_max(const std::optional<Index>& flag)
{
    return flag ? flag : env_n_max();
}

std::size_t default_parallelism()
{
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------

int cmd_seq(const std::string& kind_name, Index from, Index to, OutputFormat format, std::ostream& out)
{
    SequenceKind kind;
    try {
        kind = parse_sequence_kind(kind_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (from > to)
        throw UsageError("seq: from (" + std::to_string(from) + ") must not exceed to (" + std::to_string(to) + ")");

    switch (format) {
    case OutputFormat::text:
        for (Index n = from; n <= to; ++n)
            out << n << ' ' << seq(kind, n) << '\n';
        break;
    case OutputFormat::csv:
        out << "n,value\n";
        for (Index n = from; n <= to; ++n)
            out << n << ',' << seq(kind, n) << '\n';
        break;
    case OutputFormat::json: {
        ordered_json rows = ordered_json::array();
        for (Index n = from; n <= to; ++n)
            rows.push_back({{"n", n}, {"value", to_decimal(seq(kind, n))}});
        ordered_json root;
        root["sequence"] = std::string(to_string(kind));
        root["values"] = std::move(rows);
        out << root.dump(2) << '\n';
        break;
    }
    }
    return exit_holds;
}

int cmd_bp(const std::string& which, Index n, OutputFormat format, std::ostream& out)
{
    const BicomplexZ value = which == "bp" ? bp(n) : bpl(n);
    switch (format) {
    case OutputFormat::text:
        out << value << '\n';
        break;
    case OutputFormat::csv:
        out << "n,1,i,j,ij\n" << n;
        for (const auto& c : value.components())
            out << ',' << c;
        out << '\n';
        break;
    case OutputFormat::json: {
        ordered_json root;
        root["kind"] = which;
        root["n"] = n;
        ordered_json arr = ordered_json::array();
        for (const auto& c : value.components())
            arr.push_back(to_decimal(c));
        root["value"] = std::move(arr);
        out << root.dump(2) << '\n';
        break;
    }
    }
    return exit_holds;
}

std::vector<IdentitySpec> selected_specs(const std::vector<std::string>& ids, const std::optional<Index>& n_max)
{
    auto all = register_all();
    std::vector<IdentitySpec> chosen;
    if (ids.empty()) {
        chosen = std::move(all);
    } else {
        for (const auto& id : ids) {
            const auto* spec = find_identity(all, id);
            if (spec == nullptr) {
                std::ostringstream msg;
                msg << "unknown identity '" << id << "'; valid ids:";
                for (const auto& s : all)
                    msg << ' ' << s.id;
                throw UsageError(msg.str());
            }
            if (find_identity(chosen, id) == nullptr)
                chosen.push_back(*spec);
        }
    }
    try {
        return apply_override(std::move(chosen), DomainOverride{n_max});
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_check(const std::vector<std::string>& ids, const std::optional<Index>& n_max_flag, std::size_t parallel,
              const std::string& report_path, bool full_scan, std::ostream& out)
{
    if (parallel == 0)
        throw UsageError("--parallel must be positive");
    const auto specs = selected_specs(ids, effective_n_max(n_max_flag));
    const auto report = run_all(specs, parallel, VerifyOptions{full_scan});

    for (const auto& o : report.outcomes) {
        out << o.id << "  " << to_string(o.status) << "  " << o.checked_points << " points\n";
        if (full_scan) {
            for (const auto& cx : o.all_counterexamples)
                out << "    " << cx.params << " residual " << value_to_text(cx.residual) << '\n';
        } else if (o.first_counterexample) {
            out << "    first counterexample " << o.first_counterexample->params << " residual "
                << value_to_text(o.first_counterexample->residual) << '\n';
        }
    }
    out << "summary: " << report.summary.holds << " hold, " << report.summary.fails << " fail\n";

    if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open report file '" + report_path + "'");
        file << report_to_json(report);
        if (!file)
            throw std::runtime_error("failed writing report file '" + report_path + "'");
    }
    return report.summary.fails == 0 ? exit_holds : exit_fails;
}

int cmd_errata(const std::optional<Index>& n_max_flag, std::size_t parallel, std::ostream& out)
{
    const auto specs = selected_specs({}, effective_n_max(n_max_flag));
    const auto report = run_all(specs, parallel);
    out << render_errata(report, listing_discrepancies(published_listings()));
    return exit_holds;
}

int cmd_binet(const std::optional<Index>& n_max_flag, std::ostream& out)
{
    const Index n_max = effective_n_max(n_max_flag).value_or(300);
    if (n_max < 0)
        throw UsageError("binet: --n-max must be non-negative");
    std::size_t mismatches = 0;
    for (Index n = 0; n <= n_max; ++n) {
        if (binet_bp(n) != bp(n)) {
            ++mismatches;
            out << "BP mismatch at n=" << n << '\n';
        }
        if (binet_bpl(n) != bpl(n)) {
            ++mismatches;
            out << "BPL mismatch at n=" << n << '\n';
        }
    }
    out << "binet: n in [0, " << n_max << "]: " << (mismatches == 0 ? "all equal" : "MISMATCH") << '\n';
    return mismatches == 0 ? exit_holds : exit_fails;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bicomplex Pell and Pell-Lucas numbers: sequences, values and identity verification", "bcpell"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    std::string seq_kind;
    Index seq_from = 0, seq_to = 0;
    auto* seq_cmd = app.add_subcommand("seq", "Print sequence terms for indices from..to");
    seq_cmd->add_option("kind", seq_kind, "pell | pell-lucas | modified")->required();
    seq_cmd->add_option("from", seq_from, "First index")->required();
    seq_cmd->add_option("to", seq_to, "Last index")->required();
    add_format(seq_cmd);

    Index bp_n = 0;
    auto* bp_cmd = app.add_subcommand("bp", "Print the bicomplex Pell number at index n");
    bp_cmd->add_option("n", bp_n, "Index")->required();
    add_format(bp_cmd);
    auto* bpl_cmd = app.add_subcommand("bpl", "Print the bicomplex Pell-Lucas number at index n");
    bpl_cmd->add_option("n", bp_n, "Index")->required();
    add_format(bpl_cmd);

    std::vector<std::string> check_ids;
    bool check_all = false;
    bool full_scan = false;
    std::optional<Index> n_max;
    std::size_t parallel = default_parallelism();
    std::string report_path;
    auto* check_cmd = app.add_subcommand("check", "Verify identities exactly over their domains");
    check_cmd->add_option("--id", check_ids, "Identity id (repeatable)");
    check_cmd->add_flag("--all", check_all, "Verify every registered identity (default)");
    check_cmd->add_option("--n-max", n_max, "Ceiling for n and m in every domain");
    check_cmd->add_option("--parallel", parallel, "Worker threads");
    check_cmd->add_option("--report", report_path, "Write the JSON report here");
    check_cmd->add_flag("--full-scan", full_scan, "List every counterexample, not only the first");

    auto* errata_cmd = app.add_subcommand("errata", "List identities and listings that disagree with exact evaluation");
    errata_cmd->add_option("--n-max", n_max, "Ceiling for n and m in every domain");
    errata_cmd->add_option("--parallel", parallel, "Worker threads");

    auto* binet_cmd = app.add_subcommand("binet", "Compare Binet forms with the recurrence for n in [0, N]");
    binet_cmd->add_option("--n-max", n_max, "N (default 300)");

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());

    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_holds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_holds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    const OutputFormat format = format_names.at(format_name);
    try {
        if (*seq_cmd)
            return cmd_seq(seq_kind, seq_from, seq_to, format, out);
        if (*bp_cmd)
            return cmd_bp("bp", bp_n, format, out);
        if (*bpl_cmd)
            return cmd_bp("bpl", bp_n, format, out);
        if (*check_cmd) {
            if (check_all)
                check_ids.clear();
            return cmd_check(check_ids, n_max, parallel, report_path, full_scan, out);
        }
        if (*errata_cmd)
            return cmd_errata(n_max, parallel, out);
        if (*binet_cmd)
            return cmd_binet(n_max, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace bcpell
