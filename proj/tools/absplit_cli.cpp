// absplit: stable splitting of real abelian varieties in SH(R)_Lambda.
//
//   absplit split      --input variety.json [--format text|json]
//   absplit verify     --input variety.json [--format text|json] [--depth quick|full] [--seed N]
//   absplit components --input variety.json [--format text|json]
//   absplit oracle     --input variety.json [--format text|json]
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.

#include "absplit/absplit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace absplit;
using namespace absplit::assembly;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_split(const VarietyInput& v, Format fmt) {
    const SplittingExpression e = assemble_splitting(v);
    if (fmt == Format::json) {
        std::cout << render(e, fmt) << "\n";
    } else {
        std::cout << "X_+ ~ " << render_text(e) << "\n";
        std::cout << "g = " << e.g << ", n(X) = " << e.n_components << ", Lambda = " << to_string(e.lambda)
                  << ", status = " << to_string(e.status) << "\n";
        for (const auto& n : e.notes) std::cout << "note: " << n << "\n";
    }
    return e.claims_splitting() ? 0 : 1;
}

int cmd_verify(const VarietyInput& v, Format fmt, const VerifyOptions& opt) {
    const Report rep = verify_all(v, opt);
    if (fmt == Format::json) {
        auto j = to_json(rep.expression, rep.statuses());
        nlohmann::ordered_json rt = nlohmann::ordered_json::object();
        for (const auto& s : rep.suites) rt[s.name] = s.runtime_ms;
        j["runtimes_ms"] = rt;
        nlohmann::ordered_json failures = nlohmann::ordered_json::array();
        for (const auto& s : rep.suites)
            for (const auto* c : s.checks.failures()) failures.push_back({{"suite", s.name}, {"check", c->name}, {"detail", c->detail}});
        j["failures"] = failures;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "X_+ ~ " << render_text(rep.expression) << "\n";
        for (const auto& s : rep.suites) {
            std::cout << "[" << to_string(s.status) << "] " << s.name << " (" << s.runtime_ms << " ms)";
            if (!s.note.empty()) std::cout << " - " << s.note;
            std::cout << "\n";
            for (const auto& c : s.checks.checks)
                if (!c.passed) std::cout << "    FAIL " << c.name << ": " << c.detail << "\n";
        }
        std::cout << "homology-level certification of the real-points splitting\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_components(const VarietyInput& v, Format fmt) {
    const ResolvedVariety r = resolve(v);
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["n_components"] = r.n;
    if (r.cm_data) {
        const auto gamma = real_locus::gamma_possibilities(*r.cm_data);
        j["possible_counts"] = gamma;
        j["always_connected"] = real_locus::all_components_connected_iff(*r.cm_data);
        nlohmann::ordered_json primes = nlohmann::ordered_json::array();
        for (const auto& p : r.cm_data->primes_over_two) {
            nlohmann::ordered_json q;
            q["ord_disc"] = p.ord_disc;
            q["residue_degree"] = p.residue_degree;
            q["ord_two"] = p.ord_two;
            q["epsilon"] = p.epsilon ? nlohmann::ordered_json(*p.epsilon) : nlohmann::ordered_json(nullptr);
            primes.push_back(q);
        }
        j["primes_over_two"] = primes;
    }
    if (fmt == Format::json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "g = " << r.g << ", n(X) = " << r.n << "\n";
        if (r.cm_data) {
            std::cout << "possible counts over all epsilon choices: " << j["possible_counts"].dump() << "\n";
            std::cout << "connected for every choice: " << (j["always_connected"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

int cmd_oracle(const VarietyInput& v, Format fmt) {
    const ResolvedVariety r = resolve(v);
    const auto cert = topology::certify_splitting(r.g, r.n);
    if (fmt == Format::json) {
        nlohmann::ordered_json j;
        j["g"] = r.g;
        j["n_components"] = r.n;
        j["suspension_homology"] = cert.suspension_homology;
        j["wedge_homology"] = cert.wedge_homology;
        j["passed"] = cert.passed();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reduced homology of suspension: (" << join(cert.suspension_homology) << ")\n";
        std::cout << "reduced homology of wedge:      (" << join(cert.wedge_homology) << ")\n";
        for (const auto& c : cert.checks.checks)
            std::cout << "[" << (c.passed ? "pass" : "fail") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    return cert.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable splitting of real abelian varieties in SH(R)_Lambda"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string depth = "full";
    std::uint64_t seed = 1;
    bool corrupt = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "Input document (JSON), '-' for stdin")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto* split = app.add_subcommand("split", "Compute the splitting expression");
    add_common(split);
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    add_common(verify);
    verify->add_option("--depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", seed, "Seed for randomized property checks");
    verify->add_flag("--inject-corrupt-projector", corrupt, "Negative control: perturb pi_1 before checking")
        ->group("");
    auto* components = app.add_subcommand("components", "Real-locus component count only");
    add_common(components);
    auto* oracle = app.add_subcommand("oracle", "Topology oracle only");
    add_common(oracle);

    CLI11_PARSE(app, argc, argv);

    try {
        const VarietyInput v = parse_variety_input(read_file(input));
        const Format fmt = parse_format(format);
        if (split->parsed()) return cmd_split(v, fmt);
        if (verify->parsed()) return cmd_verify(v, fmt, {parse_depth(depth), seed, corrupt});
        if (components->parsed()) return cmd_components(v, fmt);
        if (oracle->parsed()) return cmd_oracle(v, fmt);
    } catch (const IncompleteInput& e) {
        std::cerr << "incomplete input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
