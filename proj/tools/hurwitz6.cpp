// Command-line front end: braid-orbit classification of tuples of double
// transpositions in A6, lifting invariants to the Valentiner cover, and the
// reproduction / property suites.  Batch only; machine-readable output.
//
// Output envelope: {"config": ..., "payload": ..., "elapsed_ms": ...};
// the payload is deterministic for a fixed config (including the seed).
// Exit codes: 0 ok, 1 a requested check failed, 2 bad usage.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hurwitz/lifting.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/reduce.hpp"
#include "hurwitz/report.hpp"
#include "json.hpp"

using nlohmann::ordered_json;
using namespace hurwitz;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

struct Emit {
    std::string format = "json";
    ordered_json config;

    void operator()(const ordered_json& payload, const std::string& alt_text,
                    const std::string& alt_csv, double elapsed) const {
        if (format == "json") {
            ordered_json env;
            env["config"] = config;
            env["payload"] = payload;
            env["elapsed_ms"] = elapsed;
            std::cout << env.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << alt_csv;
        } else {
            std::cout << alt_text;
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid orbits of A6 double-transposition tuples and Valentiner lifts"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    std::string format = "json";
    app.add_option("--workers", workers, "worker threads (default: HURWITZ_WORKERS or hardware)");
    app.add_option("--format", format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* cmd_class = app.add_subcommand("class-list", "the 45 double transpositions in order");

    std::string tuple_str;
    auto* cmd_lift = app.add_subcommand("lift", "lifting invariant of a product-one tuple");
    cmd_lift->add_option("--tuple", tuple_str, "whitespace-separated cycle notation")->required();

    std::string mode_str = "inner";
    auto* cmd_orbit = app.add_subcommand("orbit", "braid orbit of a tuple");
    cmd_orbit->add_option("--tuple", tuple_str, "whitespace-separated cycle notation")->required();
    cmd_orbit->add_option("--mode", mode_str, "canonicalization: inner|abs|none")
        ->check(CLI::IsMember({"inner", "abs", "none"}));

    int k = 5;
    std::string group_str = "a6";
    bool allow_k7 = false, allow_k8 = false, k7_full_scan = false;
    auto* cmd_classify = app.add_subcommand("classify", "orbit classification of all length-k tuples");
    cmd_classify->add_option("--k", k, "tuple length (5..8)")->required();
    cmd_classify->add_option("--mode", mode_str, "equivalence: inner|abs")
        ->check(CLI::IsMember({"inner", "abs"}));
    cmd_classify->add_option("--group", group_str, "monodromy: a6|g24|g60")
        ->check(CLI::IsMember({"a6", "g24", "g60"}));
    cmd_classify->add_flag("--allow-k7", allow_k7, "opt in to the k=7 computation");
    cmd_classify->add_flag("--allow-k8", allow_k8, "opt in to the k=8 computation");
    cmd_classify->add_flag("--k7-full-scan", k7_full_scan,
                           "re-verify the k=7 count by the full enumeration scan");

    std::vector<std::string> codes;
    int depth = 0;
    auto* cmd_repro = app.add_subcommand("reproduce", "re-run the published search procedures");
    cmd_repro->add_option("--code", codes, "b3|b4|b5|b6|b8|b9|all (repeatable)")
        ->check(CLI::IsMember({"b3", "b4", "b5", "b6", "b8", "b9", "all"}));
    cmd_repro->add_option("--depth", depth, "override every braid search depth");

    uint64_t seed = 12345;
    auto* cmd_verify = app.add_subcommand("verify", "seeded property suite");
    cmd_verify->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (workers <= 0) workers = default_workers();

    Emit emit;
    emit.format = format;
    emit.config["workers"] = workers;

    try {
        double t0 = now_ms();
        if (*cmd_class) {
            emit.config["subcommand"] = "class-list";
            const Universe& u = Universe::get();
            ordered_json payload = ordered_json::array();
            std::string text, csv = "index,permutation\n";
            for (int c = 0; c < Universe::kClassSize; ++c) {
                std::string p = cycle_string(u.class_perm(uint8_t(c)));
                payload.push_back(p);
                text += p + "\n";
                csv += std::to_string(c + 1) + ",\"" + p + "\"\n";
            }
            emit(payload, text, csv, now_ms() - t0);
            return 0;
        }
        if (*cmd_lift) {
            emit.config["subcommand"] = "lift";
            emit.config["tuple"] = tuple_str;
            Tuple t = parse_tuple(tuple_str);
            LiftValue lv = lifting_invariant(t);
            ordered_json payload;
            payload["exponent"] = lv.exponent;
            payload["order"] = lv.order();
            payload["kernel_element"] = cycle_string(lv.element);
            std::string text = "exponent " + std::to_string(lv.exponent) + ", order " +
                               std::to_string(lv.order()) + ", kernel element " +
                               cycle_string(lv.element) + "\n";
            std::string csv = "exponent,order,kernel_element\n" + std::to_string(lv.exponent) +
                              "," + std::to_string(lv.order()) + ",\"" + cycle_string(lv.element) +
                              "\"\n";
            emit(payload, text, csv, now_ms() - t0);
            return 0;
        }
        if (*cmd_orbit) {
            emit.config["subcommand"] = "orbit";
            emit.config["tuple"] = tuple_str;
            emit.config["mode"] = mode_str;
            Canon canon = mode_str == "inner" ? Canon::inner
                                              : (mode_str == "abs" ? Canon::abs : Canon::none);
            Tuple t = parse_tuple(tuple_str);
            std::vector<uint64_t> keys = braid_orbit(t, canon, workers);
            Tuple rep = Tuple::from_key(keys.front(), t.k);
            ordered_json payload;
            payload["size"] = keys.size();
            payload["representative"] = tuple_string(rep);
            std::string text = "orbit size " + std::to_string(keys.size()) +
                               "\nrepresentative: " + tuple_string(rep) + "\n";
            std::string csv = "size,representative\n" + std::to_string(keys.size()) + ",\"" +
                              tuple_string(rep) + "\"\n";
            emit(payload, text, csv, now_ms() - t0);
            return 0;
        }
        if (*cmd_classify) {
            emit.config["subcommand"] = "classify";
            emit.config["k"] = k;
            emit.config["mode"] = mode_str;
            emit.config["group"] = group_str;
            Canon canon = mode_str == "abs" ? Canon::abs : Canon::inner;
            GroupSel sel = group_str == "g24" ? GroupSel::g24()
                                              : (group_str == "g60" ? GroupSel::g60() : GroupSel::a6());
            ClassifyOptions opt{workers, allow_k7, allow_k8, k7_full_scan};
            OrbitReport rep = classify(k, canon, sel, opt);
            emit(report_to_json(rep), report_to_text(rep), report_to_csv(rep), now_ms() - t0);
            return 0;
        }
        if (*cmd_repro) {
            emit.config["subcommand"] = "reproduce";
            emit.config["codes"] = codes.empty() ? std::vector<std::string>{"all"} : codes;
            ReproduceOptions opt;
            opt.workers = workers;
            if (depth > 0)
                opt.depth_b4 = opt.depth_b5 = opt.depth_b6 = opt.depth_b8 = opt.depth_b9 = depth;
            std::vector<CheckResult> rs = reproduce(codes, opt);
            emit(checks_to_json(rs), checks_to_text(rs), checks_to_csv(rs), now_ms() - t0);
            for (const auto& c : rs)
                if (!c.pass) return 1;
            return 0;
        }
        if (*cmd_verify) {
            emit.config["subcommand"] = "verify";
            emit.config["seed"] = seed;
            VerifyOptions opt;
            opt.workers = workers;
            opt.seed = seed;
            std::vector<CheckResult> rs = verify_properties(opt);
            emit(checks_to_json(rs), checks_to_text(rs), checks_to_csv(rs), now_ms() - t0);
            for (const auto& c : rs)
                if (!c.pass) return 1;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
