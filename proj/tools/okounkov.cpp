/**
 * @file okounkov.cpp
 * @brief Batch front end: model validation, volume and body queries, global
 *        cone dumps, Fujita sweeps, theorem verification, and the self-test.
 *
 * Exit codes: 0 success / verified, 1 assertion or theorem-check failure,
 * 2 usage or parse error, 3 resource cap (a larger bound or resolution would
 * be needed). Exact rationals are the source of truth in every artifact;
 * decimal columns are informational only. Identical invocations produce
 * byte-identical output; OKOUNKOV_THREADS caps worker threads.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "okounkov/selftest.hpp"

namespace {

using namespace okounkov;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

long long parse_ll(const std::string& text) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(text, &pos);
        if (pos != text.size()) throw parse_error("not an integer: '" + text + "'");
        return value;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("not an integer: '" + text + "'");
    }
}

/// "1/2:1/2" -> (1/2, 1/2)
QVec parse_direction(const std::string& text) {
    QVec a;
    for (const auto& part : split(text, ':')) a.push_back(parse_rat(part));
    return a;
}

/// Each --a occurrence may carry a comma list: "1:0,0:1".
std::vector<QVec> parse_directions(const std::vector<std::string>& flags) {
    std::vector<QVec> dirs;
    for (const auto& flag : flags)
        for (const auto& one : split(flag, ',')) dirs.push_back(parse_direction(one));
    return dirs;
}

/// "40:0" -> degree (40, 0)
MultiDegree parse_degree(const std::string& text) {
    MultiDegree m;
    for (const auto& part : split(text, ':')) m.push_back(parse_ll(part));
    return m;
}

/// "1..8" (inclusive range) or "1,2,5".
std::vector<long long> parse_p_list(const std::string& text) {
    std::vector<long long> ps;
    auto range = text.find("..");
    if (range != std::string::npos) {
        long long lo = parse_ll(text.substr(0, range));
        long long hi = parse_ll(text.substr(range + 2));
        if (lo > hi) throw parse_error("empty p range: '" + text + "'");
        for (long long p = lo; p <= hi; ++p) ps.push_back(p);
    } else {
        for (const auto& part : split(text, ',')) ps.push_back(parse_ll(part));
    }
    for (long long p : ps)
        if (p < 1) throw parse_error("p must be positive, got " + std::to_string(p));
    return ps;
}

GradedSemigroup load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read model file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_model(text.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw parse_error("cannot open output file: " + out_path);
    out << text;
}

int cmd_validate(const std::string& model_path) {
    GradedSemigroup s = load_model(model_path);
    std::ostringstream os;
    if (s.mode() == GradedSemigroup::Mode::generators) {
        os << "valid generators model: d=" << s.d() << " r=" << s.r() << " bound=" << s.bound()
           << " generators=" << s.generators().size() << "\n";
    } else {
        os << "valid toric model: d=" << s.d() << " r=" << s.r() << " bound=" << s.bound()
           << " polytopes=" << s.polytopes().size() << "\n";
    }
    std::cout << os.str();
    return 0;
}

int cmd_hilbert(const std::string& model_path, const std::vector<std::string>& degree_flags,
                const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    std::ostringstream os;
    for (const auto& flag : degree_flags)
        for (const auto& one : split(flag, ',')) {
            MultiDegree m = parse_degree(one);
            os << vec_to_string(m, ":") << " " << s.hilbert(m) << "\n";
        }
    emit(os.str(), out_path);
    return 0;
}

int cmd_body(const std::string& model_path, const std::string& dir_flag,
             const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    Polytope fiber = body_or_empty(s, parse_direction(dir_flag));
    std::ostringstream os;
    for (const auto& v : fiber.vertices) os << vec_to_string(v, " ") << "\n";
    emit(os.str(), out_path);
    return 0;
}

int cmd_volume(const std::string& model_path, const std::vector<std::string>& dir_flags,
               long long k_max, const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    std::vector<QVec> dirs = parse_directions(dir_flags);
    std::ostringstream os;
    if (k_max > 0) {
        if (dirs.size() != 1)
            throw parse_error("--kmax expects exactly one direction");
        for (const auto& [k, est] : volume_counting(s, dirs[0], k_max))
            os << k << " " << to_string(est) << "\n";
    } else {
        auto exact = [&](const QVec& a) {
            try {
                return volume_geometric(s, a);
            } catch (const empty_cone&) {
                return Rat(0);
            }
        };
        if (dirs.size() == 1) {
            os << to_string(exact(dirs[0])) << "\n";
        } else {
            for (const auto& a : dirs)
                os << direction_to_string(a) << " " << to_string(exact(a)) << "\n";
        }
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_cone(const std::string& model_path, const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    const ConvexCone& cone = global_cone(s);
    std::ostringstream os;
    for (const auto& b : cone.lineality) os << "line " << vec_to_string(b, " ") << "\n";
    for (const auto& ray : cone.rays) os << "ray " << vec_to_string(ray, " ") << "\n";
    emit(os.str(), out_path);
    return 0;
}

int cmd_sweep(const std::string& model_path, const std::string& p_flag,
              const std::vector<std::string>& dir_flags, const std::string& format,
              const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    FujitaReport report = sweep(s, parse_p_list(p_flag), parse_directions(dir_flags));
    emit(format == "json" ? to_json(report) : to_csv(report), out_path);
    return 0;
}

int cmd_verify(const std::string& model_path, const std::string& epsilon_flag,
               const std::string& p_flag, long long n_max, const std::string& format,
               const std::string& out_path) {
    GradedSemigroup s = load_model(model_path);
    Rat epsilon = parse_rat(epsilon_flag);
    if (epsilon <= 0 || epsilon >= 1) throw parse_error("--epsilon must lie in (0,1)");
    FujitaReport report = verify_theorem(s, epsilon, n_max, parse_p_list(p_flag));
    emit(format == "csv" ? to_csv(report) : to_json(report), out_path);
    std::cerr << "fujita-verify: verdict=" << (report.verdict ? "pass" : "fail")
              << " p0=" << (report.p0 ? std::to_string(*report.p0) : std::string("NotReached"))
              << " N=" << report.resolution << "\n";
    return report.verdict ? 0 : 1;
}

/// 3: retryable resource caps. 2: malformed inputs or queries. 1: everything
/// that means "the mathematics did not check out".
int classify(const std::exception& e) {
    if (dynamic_cast<const beyond_bound*>(&e) || dynamic_cast<const resolution_exceeded*>(&e))
        return 3;
    if (dynamic_cast<const parse_error*>(&e) || dynamic_cast<const dimension_mismatch*>(&e) ||
        dynamic_cast<const empty_input*>(&e) || dynamic_cast<const negative_entry*>(&e) ||
        dynamic_cast<const zero_degree_generator*>(&e) || dynamic_cast<const bound_too_small*>(&e) ||
        dynamic_cast<const not_full_dimensional*>(&e) ||
        dynamic_cast<const non_integral_direction*>(&e) || dynamic_cast<const empty_ray*>(&e) ||
        dynamic_cast<const empty_polytope*>(&e) || dynamic_cast<const empty_cone*>(&e))
        return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::string self_path = argc > 0 && argv[0] ? argv[0] : "";

    CLI::App app{"Okounkov bodies of multigraded series: volumes, fibers, Fujita verification"};
    app.require_subcommand(1);

    std::string model_path, out_path, format = "csv", p_flag, epsilon_flag, body_dir;
    std::vector<std::string> dir_flags, degree_flags;
    long long n_max = 8, k_max = 0;

    auto* validate = app.add_subcommand("validate", "Parse and validate a model file");
    validate->add_option("--model", model_path, "Model JSON path")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Count semigroup points in graded pieces");
    hilbert->add_option("--model", model_path, "Model JSON path")->required();
    hilbert->add_option("--m", degree_flags, "Multidegree, colon-separated (repeatable)")->required();
    hilbert->add_option("--out", out_path, "Write output here instead of stdout");

    auto* body = app.add_subcommand("body", "Vertices of the fiber body over a direction");
    body->add_option("--model", model_path, "Model JSON path")->required();
    body->add_option("--a", body_dir, "Direction, colon-separated rationals")->required();
    body->add_option("--out", out_path, "Write output here instead of stdout");

    auto* volume = app.add_subcommand("volume", "Exact volume (or counting table with --kmax)");
    volume->add_option("--model", model_path, "Model JSON path")->required();
    volume->add_option("--a", dir_flags, "Direction(s), colon-separated rationals")->required();
    volume->add_option("--kmax", k_max, "Emit counting estimates up to this k");
    volume->add_option("--out", out_path, "Write output here instead of stdout");

    auto* cone = app.add_subcommand("cone", "Extreme rays of the global cone");
    cone->add_option("--model", model_path, "Model JSON path")->required();
    cone->add_option("--out", out_path, "Write output here instead of stdout");

    auto* sweep_cmd = app.add_subcommand("fujita-sweep", "Truncation ratio table over p and directions");
    sweep_cmd->add_option("--model", model_path, "Model JSON path")->required();
    sweep_cmd->add_option("--p", p_flag, "p list: '1..8' or '1,2,5'")->required();
    sweep_cmd->add_option("--a", dir_flags, "Direction(s) (repeatable, comma lists allowed)")->required();
    sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", out_path, "Write output here instead of stdout");

    auto* verify = app.add_subcommand("fujita-verify", "Full theorem verification with a report");
    verify->add_option("--model", model_path, "Model JSON path")->required();
    verify->add_option("--epsilon", epsilon_flag, "Tolerance in (0,1), e.g. 1/5")->required();
    verify->add_option("--p", p_flag, "p list: '1..8' or '1,2,5'")->required();
    verify->add_option("--nmax", n_max, "Grid resolution cap (doubling schedule)");
    verify->add_option("--format", format, "json (default) or csv")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out_path, "Write output here instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(model_path);
        if (*hilbert) return cmd_hilbert(model_path, degree_flags, out_path);
        if (*body) return cmd_body(model_path, body_dir, out_path);
        if (*volume) {
            if (volume->count("--kmax") && k_max < 1) throw parse_error("--kmax must be positive");
            return cmd_volume(model_path, dir_flags, k_max, out_path);
        }
        if (*cone) return cmd_cone(model_path, out_path);
        if (*sweep_cmd) return cmd_sweep(model_path, p_flag, dir_flags, format, out_path);
        if (*verify) {
            if (n_max < 1) throw parse_error("--nmax must be positive");
            std::string fmt = verify->count("--format") ? format : "json";
            return cmd_verify(model_path, epsilon_flag, p_flag, n_max, fmt, out_path);
        }
        if (*selftest)
            return okounkov::selftest::run_selftest(std::cout, self_path) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "okounkov: " << e.what() << "\n";
        return classify(e);
    }
    return 2;
}
