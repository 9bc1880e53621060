#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "abaci/serialize.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_prime(int p) {
    if (!is_prime(p))
        throw usage_error("--p must be prime, got " + std::to_string(p));
}

std::string quotient_str(const abaci::PQuotient& q) {
    std::string out;
    for (const auto& c : q.components()) {
        if (!out.empty()) out += " | ";
        out += "(" + c.str() + ")";
    }
    return out;
}

int cmd_inspect(const std::string& text, int p, const std::string& format,
                bool conjectured) {
    require_prime(p);
    abaci::Partition lambda = abaci::parse_partition(text);
    auto block = abaci::block_descriptor(lambda, p);
    auto quotient = abaci::p_quotient(lambda, p);
    auto factors =
        lambda.empty() ? std::vector<abaci::Partition>{}
                       : abaci::restriction_factors(lambda);
    bool pxp = abaci::is_p_by_p(lambda, p);
    int bound = abaci::complexity_upper_bound(lambda, p);

    if (format == "json") {
        json j{{"partition", lambda},
               {"partition_text", lambda.str()},
               {"size", lambda.size()},
               {"p", p},
               {"core", block.core},
               {"weight", block.weight},
               {"quotient", quotient},
               {"block", block},
               {"defect_p_rank", abaci::defect_p_rank(block)},
               {"is_pxp", pxp},
               {"is_pxp_recursive", abaci::is_p_by_p_recursive(lambda, p)},
               {"complexity_upper_bound", bound}};
        json jf = json::array();
        for (const auto& f : factors)
            jf.push_back(json{{"partition", f},
                              {"partition_text", f.str()},
                              {"weight", abaci::p_weight(f, p)}});
        j["restriction_factors"] = jf;
        if (conjectured) j["conjectured_complexity"] = bound;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "partition:              " << lambda.str() << "\n"
              << "size:                   " << lambda.size() << "\n"
              << "p:                      " << p << "\n"
              << "p-core:                 " << block.core.str() << "\n"
              << "p-weight:               " << block.weight << "\n"
              << "p-quotient:             " << quotient_str(quotient) << "\n"
              << "defect p-rank:          " << abaci::defect_p_rank(block)
              << "\n"
              << "p-by-p:                 " << (pxp ? "yes" : "no") << "\n"
              << "p-by-p (recursive):     "
              << (abaci::is_p_by_p_recursive(lambda, p) ? "yes" : "no") << "\n"
              << "complexity upper bound: " << bound << "\n";
    if (conjectured)
        std::cout << "conjectured complexity: " << bound
                  << "  (conjectural, unproven)\n";
    std::cout << "restriction factors:\n";
    for (const auto& f : factors)
        std::cout << "  " << f.str() << "  (weight "
                  << abaci::p_weight(f, p) << ")\n";
    return kExitOk;
}

int cmd_render(const std::string& text, int p, int beads, bool ascii) {
    require_prime(p);
    abaci::Partition lambda = abaci::parse_partition(text);
    auto disp = abaci::abacus_display(lambda, p, beads);
    std::cout << abaci::render_ascii(
        disp, ascii ? abaci::ascii_style() : abaci::RenderStyle{});
    return kExitOk;
}

int cmd_enumerate(int d, int p, const std::string& filter,
                  const std::string& format) {
    if (filter != "all") require_prime(p);
    auto all = abaci::partitions_of(d);
    std::vector<abaci::Partition> kept;
    for (const auto& lambda : all) {
        bool keep = true;
        if (filter == "pxp")
            keep = abaci::is_p_by_p(lambda, p);
        else if (filter == "pxp-recursive")
            keep = abaci::is_p_by_p_recursive(lambda, p);
        else if (filter == "core-empty")
            keep = abaci::p_core(lambda, p).empty();
        if (keep) kept.push_back(lambda);
    }
    if (format == "json") {
        json j{{"d", d}, {"filter", filter}, {"count", kept.size()}};
        json jp = json::array();
        for (const auto& lambda : kept) jp.push_back(lambda.str());
        j["partitions"] = jp;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& lambda : kept) std::cout << lambda.str() << "\n";
        std::cout << "count " << kept.size() << "\n";
    }
    return kExitOk;
}

int cmd_verify(int p, int d_max, const std::string& format,
               const std::string& out_path, int threads) {
    require_prime(p);
    abaci::VerifyOptions opts;
    opts.threads = threads;
    opts.collect_rows = !out_path.empty() || format == "csv";
    auto summary = abaci::verify_range(p, d_max, opts);

    std::cout << "p=" << summary.p << " d=1.." << summary.d_max << ": checked "
              << summary.partitions_checked << " partitions, "
              << summary.counterexamples.size() << " counterexamples ("
              << summary.wall_seconds << "s)\n";
    for (const auto& rep : summary.counterexamples)
        std::cout << "COUNTEREXAMPLE " << rep.partition.str() << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw usage_error("cannot open output file " + out_path);
        if (format == "csv")
            out << abaci::campaign_to_csv(summary);
        else
            out << json(summary).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << abaci::campaign_to_csv(summary);
    } else if (format == "json") {
        std::cout << json(summary).dump(2) << "\n";
    }
    return summary.verified() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abacus calculus for integer partitions: p-cores, "
                 "p-quotients, blocks, and weight-drop verification"};
    app.require_subcommand(1);

    std::string text, format = "text", filter = "all", out_path;
    int p = 2, beads = 0, d = 0, d_max = 0, threads = 0;
    bool ascii = false, conjectured = false;

    auto* inspect = app.add_subcommand("inspect", "report all attributes");
    inspect->add_option("partition", text, "partition text, e.g. 3,3,2");
    inspect->add_option("--p", p, "prime")->required();
    inspect->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));
    inspect->add_flag("--conjectured", conjectured,
                      "also print the conjectured exact complexity");

    auto* render = app.add_subcommand("render", "draw the abacus display");
    render->add_option("partition", text, "partition text");
    render->add_option("--p", p, "prime")->required();
    render->add_option("--beads", beads, "bead count (default: auto)");
    render->add_flag("--ascii", ascii, "use O/. instead of unicode glyphs");

    auto* enumerate =
        app.add_subcommand("enumerate", "list partitions of d (reverse-lex)");
    enumerate->add_option("--d", d, "degree")->required();
    enumerate->add_option("--p", p, "prime (needed by non-trivial filters)");
    enumerate->add_option("--filter", filter)
        ->check(CLI::IsMember({"all", "pxp", "pxp-recursive", "core-empty"}));
    enumerate->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify =
        app.add_subcommand("verify", "exhaustive weight-drop verification");
    verify->add_option("--p", p, "prime")->required();
    verify->add_option("--max-d", d_max, "verify all degrees 1..max-d")
        ->required();
    verify->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "write JSON/CSV report to file");
    verify->add_option("--threads", threads, "0 = all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*inspect) return cmd_inspect(text, p, format, conjectured);
        if (*render) return cmd_render(text, p, beads, ascii);
        if (*enumerate) return cmd_enumerate(d, p, filter, format);
        if (*verify) return cmd_verify(p, d_max, format, out_path, threads);
    } catch (const abaci::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const abaci::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
