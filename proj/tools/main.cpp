// Command-line surface: exact subgroup-lattice statistics for finite
// abelian groups. Results stream to stdout, progress to stderr.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error, 3 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "sublat/beta.hpp"
#include "sublat/density.hpp"
#include "sublat/pgroup.hpp"
#include "sublat/suites.hpp"
#include "sublat/textio.hpp"

namespace {

using nlohmann::json;
using namespace sublat;

using Clock = std::chrono::steady_clock;

json rat_json(const Rat& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void emit_json(const std::string& command, const json& inputs, const json& results, bool pass,
               Clock::time_point start) {
    json doc{{"command", command},
             {"inputs", inputs},
             {"results", results},
             {"pass", pass},
             {"elapsed_ms", elapsed_ms(start)}};
    std::cout << doc.dump(2) << "\n";
}

std::vector<Int> parse_prime_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (item.empty()) throw std::invalid_argument("empty entry in prime list");
        out.emplace_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_count(const std::string& spec_text, const std::string& format, Clock::time_point start) {
    AbelianGroupSpec spec = parse_group_spec(spec_text);
    if (spec.components().size() != 1) {
        std::cerr << "count expects exactly one p-component, got '" << spec_text << "'\n";
        return 2;
    }
    const PGroupType& t = spec.components().front();
    CountReport report = count_report(t);
    Rat b = beta_of_type(t);

    if (format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < report.s.size(); ++k) {
            json coeffs = json::array();
            for (const Int& c : report.s_poly[k].coefficients()) coeffs.push_back(c.get_str());
            rows.push_back(json{{"k", k}, {"s", report.s[k].get_str()}, {"coefficients", coeffs}});
        }
        json result{{"type", t.to_string()},
                    {"order", t.order().get_str()},
                    {"s_table", rows},
                    {"total", report.total.get_str()},
                    {"beta", rat_json(b)},
                    {"beta_decimal", decimal_string(b)}};
        emit_json("count", json{{"spec", spec_text}}, json::array({result}), true, start);
    } else if (format == "csv") {
        std::cout << "k,s_k,coefficients\n";
        for (std::size_t k = 0; k < report.s.size(); ++k) {
            std::string coeffs;
            for (const Int& c : report.s_poly[k].coefficients())
                coeffs += (coeffs.empty() ? "" : " ") + c.get_str();
            std::cout << k << "," << report.s[k].get_str() << "," << csv_escape(coeffs) << "\n";
        }
        std::cout << "total," << report.total.get_str() << ",\n";
        std::cout << "beta," << csv_escape(rat_string(b)) << "," << decimal_string(b) << "\n";
    } else {
        std::cout << "group " << t.to_string() << "  (order " << t.order().get_str() << ")\n";
        std::cout << "  k    s_k             s_k(q) at q = p\n";
        for (std::size_t k = 0; k < report.s.size(); ++k) {
            std::string sk = report.s[k].get_str();
            std::cout << "  " << k << std::string(k < 10 ? 4 : 3, ' ') << sk
                      << std::string(sk.size() < 15 ? 16 - sk.size() : 1, ' ')
                      << report.s_poly[k].to_string() << "\n";
        }
        std::cout << "total |L| = " << report.total.get_str() << "\n";
        std::cout << "beta      = " << rat_string(b) << " = " << decimal_string(b) << "\n";
        std::cerr << "elapsed " << elapsed_ms(start) << "ms\n";
    }
    return 0;
}

int run_beta(const std::string& spec_text, const std::string& format, Clock::time_point start) {
    AbelianGroupSpec spec = parse_group_spec(spec_text);
    Rat b = beta(spec);
    Rat a = alpha(spec);

    if (format == "json") {
        json result{{"group", spec.to_string()},
                    {"order", spec.order().get_str()},
                    {"beta", rat_json(b)},
                    {"beta_decimal", decimal_string(b)},
                    {"alpha", rat_json(a)},
                    {"alpha_decimal", decimal_string(a)}};
        emit_json("beta", json{{"spec", spec_text}}, json::array({result}), true, start);
    } else if (format == "csv") {
        std::cout << "group,order,beta,beta_decimal,alpha,alpha_decimal\n";
        std::cout << csv_escape(spec.to_string()) << "," << spec.order().get_str() << ","
                  << csv_escape(rat_string(b)) << "," << decimal_string(b) << ","
                  << csv_escape(rat_string(a)) << "," << decimal_string(a) << "\n";
    } else {
        std::cout << "group " << (spec.trivial() ? "(trivial)" : spec.to_string()) << "  (order "
                  << spec.order().get_str() << ")\n";
        std::cout << "beta  = " << rat_string(b) << " = " << decimal_string(b) << "\n";
        std::cout << "alpha = " << rat_string(a) << " = " << decimal_string(a) << "\n";
        std::cerr << "elapsed " << elapsed_ms(start) << "ms\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& p_list, unsigned n_max, unsigned cap,
               std::size_t max_subgroups, unsigned threads, const std::string& format,
               Clock::time_point start) {
    std::vector<Int> ps = parse_prime_list(p_list);
    ProgressFn progress = [](const std::string& line) { std::cerr << line << "\n"; };

    VerificationReport report;
    if (suite == "congruence") report = suite_congruence(ps, n_max, progress);
    else if (suite == "congruence2") report = suite_congruence2(ps, n_max, progress);
    else if (suite == "duality") report = suite_duality(n_max, progress);
    else if (suite == "unimodal") report = suite_unimodal(n_max, progress);
    else if (suite == "rank2mono") report = suite_rank2mono(ps, n_max, progress);
    else if (suite == "secondmin") report = suite_secondmin(ps, n_max, progress);
    else if (suite == "thirdmin") report = suite_thirdmin(ps, n_max, progress);
    else if (suite == "hereditary") report = suite_hereditary(ps, n_max, progress);
    else if (suite == "image") report = suite_image(ps, n_max, progress);
    else if (suite == "frattini") report = suite_frattini(ps, n_max, progress);
    else if (suite == "oracle") {
        OracleLimits limits;
        limits.max_order = cap;
        limits.max_subgroups = max_subgroups;
        if (threads == 0) threads = std::min(4u, std::thread::hardware_concurrency());
        report = suite_oracle(ps, limits, std::max(1u, threads), progress);
    } else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
    }

    bool pass = report.all_pass();
    std::size_t skipped = 0;
    for (const CheckResult& c : report.checks) skipped += c.skipped ? 1 : 0;

    if (format == "json") {
        json rows = json::array();
        for (const CheckResult& c : report.checks)
            rows.push_back(json{{"name", c.name},
                                {"pass", c.pass || c.skipped},
                                {"skipped", c.skipped},
                                {"detail", c.detail}});
        json inputs{{"suite", suite}, {"p", p_list}, {"n_max", n_max}};
        if (suite == "oracle") {
            inputs["cap"] = cap;
            inputs["max_subgroups"] = max_subgroups;
        }
        emit_json("verify", inputs, rows, pass, start);
    } else if (format == "csv") {
        std::cout << "name,pass,skipped,detail\n";
        for (const CheckResult& c : report.checks)
            std::cout << csv_escape(c.name) << "," << ((c.pass || c.skipped) ? "true" : "false")
                      << "," << (c.skipped ? "true" : "false") << "," << csv_escape(c.detail)
                      << "\n";
    } else {
        for (const CheckResult& c : report.checks) {
            if (!c.pass && !c.skipped)
                std::cout << "[FAIL] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                          << "\n";
            else if (c.skipped)
                std::cout << "[skip] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                          << "\n";
            else if (!c.detail.empty())
                std::cout << "[ ok ] " << c.name << ": " << c.detail << "\n";
        }
        std::cout << "suite " << suite << ": " << report.checks.size() << " checks, "
                  << (pass ? "all passed" : "FAILURES above") << " (" << skipped << " skipped)\n";
        std::cerr << "elapsed " << elapsed_ms(start) << "ms\n";
    }
    return pass ? 0 : 1;
}

int run_approx(const std::string& target_text, const std::string& eps_text, unsigned max_primes,
               const std::string& max_prime_text, const std::string& format,
               Clock::time_point start) {
    Rat target = rat_from_string(target_text);
    Rat eps = rat_from_string(eps_text);
    ApproxLimits limits;
    limits.max_primes = max_primes;
    limits.max_prime = Int(max_prime_text);

    auto emit = [&](const ApproxResult& r, bool pass) {
        if (format == "json") {
            json result{{"group", r.group.to_string()},
                        {"order", r.group.order().get_str()},
                        {"achieved", rat_json(r.achieved)},
                        {"achieved_decimal", decimal_string(r.achieved)},
                        {"error", rat_json(r.error)},
                        {"error_decimal", decimal_string(r.error)},
                        {"primes_used", r.primes_used},
                        {"largest_prime", r.largest_prime.get_str()}};
            json inputs{{"target", rat_json(target)},
                        {"eps", rat_json(eps)},
                        {"max_primes", max_primes},
                        {"max_prime", max_prime_text}};
            emit_json("approx", inputs, json::array({result}), pass, start);
        } else if (format == "csv") {
            std::cout << "group,achieved,achieved_decimal,error,error_decimal,primes_used,"
                         "largest_prime\n";
            std::cout << csv_escape(r.group.to_string()) << "," << csv_escape(rat_string(r.achieved))
                      << "," << decimal_string(r.achieved) << "," << csv_escape(rat_string(r.error))
                      << "," << decimal_string(r.error) << "," << r.primes_used << ","
                      << r.largest_prime.get_str() << "\n";
        } else {
            std::cout << "target   " << rat_string(target) << " = " << decimal_string(target)
                      << "   eps " << rat_string(eps) << "\n";
            std::cout << "group    "
                      << (r.group.trivial() ? "(trivial)" : r.group.to_string()) << "\n";
            std::cout << "achieved " << rat_string(r.achieved) << " = "
                      << decimal_string(r.achieved) << "\n";
            std::cout << "error    " << rat_string(r.error) << " = " << decimal_string(r.error)
                      << (pass ? "  (within eps)" : "  (LIMITS EXHAUSTED, best so far)") << "\n";
            std::cout << "primes used " << r.primes_used << ", largest "
                      << r.largest_prime.get_str() << "\n";
            std::cerr << "elapsed " << elapsed_ms(start) << "ms\n";
        }
    };

    try {
        ApproxResult r = approximate(target, eps, limits);
        emit(r, true);
        return 0;
    } catch (const approx_resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        emit(e.best_so_far, false);
        return 3;
    }
}

int run_table(const std::string& p_text, unsigned n, const std::string& format,
              Clock::time_point start) {
    Int p(p_text);
    Int order = int_pow(p, n);

    struct Row {
        Partition type;
        Int lattice;
        Rat value;
        bool duplicate = false;
    };
    std::vector<Row> rows;
    std::map<Int, unsigned> lattice_multiplicity;
    for (const Partition& d : partitions_of(n)) {
        Int L = lattice_size(PGroupType(p, d));
        ++lattice_multiplicity[L];
        rows.push_back({d, L, rat_of(L, order)});
    }
    for (Row& r : rows) r.duplicate = lattice_multiplicity[r.lattice] > 1;

    auto type_label = [&](const Partition& d) { return PGroupType(p, d).to_string(); };

    if (format == "json") {
        json out = json::array();
        for (const Row& r : rows)
            out.push_back(json{{"type", type_label(r.type)},
                               {"lattice_size", r.lattice.get_str()},
                               {"beta", rat_json(r.value)},
                               {"beta_decimal", decimal_string(r.value)},
                               {"duplicate_beta", r.duplicate}});
        emit_json("table", json{{"p", p_text}, {"n", n}}, out, true, start);
    } else if (format == "csv") {
        std::cout << "type,lattice_size,beta_num,beta_den,beta_decimal,duplicate_beta\n";
        for (const Row& r : rows)
            std::cout << csv_escape(type_label(r.type)) << "," << r.lattice.get_str() << ","
                      << r.value.get_num().get_str() << "," << r.value.get_den().get_str() << ","
                      << decimal_string(r.value) << "," << (r.duplicate ? "true" : "false")
                      << "\n";
    } else {
        std::cout << "abelian p-groups of order " << p_text << "^" << n << " = "
                  << order.get_str() << ", types in decreasing partition order\n";
        for (const Row& r : rows) {
            std::string label = type_label(r.type);
            std::string lat = r.lattice.get_str();
            std::cout << "  " << label << std::string(label.size() < 24 ? 24 - label.size() : 1, ' ')
                      << "|L| " << lat << std::string(lat.size() < 10 ? 10 - lat.size() : 1, ' ')
                      << "beta " << rat_string(r.value) << " = " << decimal_string(r.value)
                      << (r.duplicate ? "  [shared beta]" : "") << "\n";
        }
        std::cerr << "elapsed " << elapsed_ms(start) << "ms\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subgroup-lattice statistics for finite abelian groups"};
    app.require_subcommand(1);

    std::string format = "human";
    std::string spec_text;
    std::string suite, p_list = "2,3,5", p_single = "2", target_text, eps_text = "1/1000";
    std::string max_prime_text = "100000000";
    unsigned n_max = 8, n_value = 1, cap = 512, max_primes = 64, threads = 0;
    std::size_t max_subgroups = 1000000;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"human", "csv", "json"}));
    };

    CLI::App* count = app.add_subcommand("count", "s_k table, |L| and beta of one p-group");
    count->add_option("spec", spec_text, "Group descriptor, e.g. 2:[1,3]")->required();
    add_format(count);

    CLI::App* beta_cmd = app.add_subcommand("beta", "beta and alpha of a finite abelian group");
    beta_cmd->add_option("spec", spec_text, "Group descriptor, e.g. 2:[1,3];3:[2]");
    add_format(beta_cmd);

    CLI::App* verify = app.add_subcommand("verify", "Run a theorem verification suite");
    verify->add_option("suite", suite,
                       "One of: congruence, congruence2, duality, unimodal, rank2mono, "
                       "secondmin, thirdmin, hereditary, image, frattini, oracle")
        ->required();
    verify->add_option("--p", p_list, "Comma-separated primes (ignored by duality/unimodal)");
    verify->add_option("--n-max", n_max, "Largest exponent sum");
    verify->add_option("--cap", cap, "Oracle: largest group order to enumerate");
    verify->add_option("--max-subgroups", max_subgroups,
                       "Oracle: skip types with more predicted subgroups");
    verify->add_option("--threads", threads, "Oracle: worker threads (0 = auto)");
    add_format(verify);

    CLI::App* approx = app.add_subcommand("approx", "Build a group with beta within eps of a target");
    approx->add_option("--target", target_text, "Target value (decimal or rational)")->required();
    approx->add_option("--eps", eps_text, "Tolerance (decimal or rational)");
    approx->add_option("--max-primes", max_primes, "Factor count cap");
    approx->add_option("--max-prime", max_prime_text, "Prime stream cap");
    add_format(approx);

    CLI::App* table = app.add_subcommand("table", "beta table for all types of order p^n");
    table->add_option("--p", p_single, "Prime")->required();
    table->add_option("--n", n_value, "Exponent sum")->required()->check(CLI::PositiveNumber);
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = Clock::now();
    try {
        if (count->parsed()) return run_count(spec_text, format, start);
        if (beta_cmd->parsed()) return run_beta(spec_text, format, start);
        if (verify->parsed())
            return run_verify(suite, p_list, n_max, cap, max_subgroups, threads, format, start);
        if (approx->parsed())
            return run_approx(target_text, eps_text, max_primes, max_prime_text, format, start);
        if (table->parsed()) return run_table(p_single, n_value, format, start);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
