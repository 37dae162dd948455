// Command-line front end: positivity classification, witnesses, completions,
// cyclic shifts, counterexample generation with certificates, and the
// stratification experiments, all in exact arithmetic with JSON/CSV reports.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 resource bound,
// 4 witness requires an interval dimension set, 5 witness requires a
// Plucker-positive flag.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "flagpos/flagpos.hpp"

namespace {

using namespace flagpos;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceBound = 3;
constexpr int kExitNonIntervalK = 4;
constexpr int kExitNotPositive = 5;

int stratification_bound() {
    if (const char* env = std::getenv("FLAGPOS_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ArgumentError("FLAGPOS_MAX_N must be an integer");
        }
    }
    return 5;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

Flag load_flag(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open flag file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ArgumentError("malformed JSON in " + path + ": " + e.what());
    }
    return flag_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw ArgumentError("cannot open output file: " + out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
    }
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

Parity parse_eps(int eps) { return parity_of(eps); }

struct CheckLog {
    bool all_passed = true;
    void check(const std::string& label, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << label << "\n";
        all_passed = all_passed && ok;
    }
    int exit_code() const { return all_passed ? kExitOk : kExitCheckFailure; }
};

// all (k, l) consecutive in K with l - k >= 2 and n >= k + 3
std::vector<std::pair<int, int>> gap_pairs(int n, const std::vector<int>& K) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < K.size(); ++i)
        if (K[i + 1] - K[i] >= 2 && n >= K[i] + 3) out.emplace_back(K[i], K[i + 1]);
    return out;
}

std::vector<std::vector<int>> dimension_sets(int n, const std::string& spec) {
    std::vector<std::vector<int>> sets;
    if (spec == "all") {
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> K;
            for (int k = 1; k <= n - 1; ++k)
                if (mask & (1u << (k - 1))) K.push_back(k);
            sets.push_back(std::move(K));
        }
    } else {
        sets.push_back(parse_int_list(spec));
    }
    return sets;
}

bool is_integer_interval(const std::vector<int>& K) {
    return K.empty() || K.back() - K.front() + 1 == static_cast<int>(K.size());
}

int run_verify_converse(int n, const std::vector<int>& K, int k_opt, int l_opt) {
    auto pairs = gap_pairs(n, K);
    if (k_opt > 0 && l_opt > 0) pairs = {{k_opt, l_opt}};
    if (pairs.empty())
        throw ArgumentError("verify converse: no consecutive pair with a gap of at least two fits n");
    CheckLog log;
    for (auto [k, l] : pairs) {
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        const auto [flag, cert] = converse_counterexample(n, K, k, l);
        log.check("counterexample " + tag + " is nonnegative but not positive",
                  classify_plucker(flag).plucker == PluckerClass::kNonnegNotPositive);
        const Flag skipped(n, {k + 1}, flag.rep);
        log.check("counterexample " + tag + " has a negative left-justified minor of order k+1",
                  !plucker(skipped, k + 1).all_nonnegative());
        log.check("counterexample " + tag + " certificate validates", validate_certificate(flag, cert));
    }
    return log.exit_code();
}

int run_verify_cyclic(int n, const std::vector<int>& K, int eps_opt, const Rat& t) {
    std::vector<Parity> parities{Parity::kEven, Parity::kOdd};
    if (eps_opt >= 0) parities = {parse_eps(eps_opt)};
    CheckLog log;
    for (Parity eps : parities) {
        const std::string tag =
            "n=" + std::to_string(n) + " eps=" + (eps == Parity::kEven ? "even" : "odd");
        const auto [w, x, cert] = cyclic_counterexample(n, K, eps);
        std::vector<int> full(n - 1);
        for (int i = 0; i < n - 1; ++i) full[i] = i + 1;
        const Flag w_complete(n, full, w.rep);
        log.check("base flag " + tag + " is nonnegative at every order",
                  classify_plucker(w_complete).plucker != PluckerClass::kNotNonneg);
        log.check("shifted flag " + tag + " certificate validates", validate_certificate(x, cert));
        const Flag moved(n, w.K, gauss_kernel_matrix(n, t) * w.rep);
        log.check("perturbed base flag " + tag + " is strictly positive",
                  classify_plucker(moved).plucker == PluckerClass::kPositive);
    }
    return log.exit_code();
}

int run_verify_decompositions(int n, const std::string& k_spec, const std::string& out_path) {
    const int bound = stratification_bound();
    CheckLog log;
    Json reports = Json::array();
    for (const auto& K : dimension_sets(n, k_spec)) {
        const InjectivityReport report = injectivity_experiment(n, K, bound);
        reports.push_back(injectivity_report_to_json(report));
        std::string tag = "n=" + std::to_string(n) + " K={";
        for (std::size_t i = 0; i < K.size(); ++i) tag += (i ? "," : "") + std::to_string(K[i]);
        tag += "}";
        const bool expected = is_integer_interval(K);
        log.check("cells-to-strata map for " + tag + (expected ? " is injective" : " has collisions"),
                  report.injective == expected);
        for (std::size_t i = 0; i < report.collisions.size() && i < 3; ++i) {
            const auto& [a, b] = report.collisions[i];
            std::cout << "      collision: (" << a.v.str() << ", " << a.w.str() << ") and ("
                      << b.v.str() << ", " << b.w.str() << ")\n";
        }
    }
    if (!out_path.empty()) emit_json(reports, out_path);
    return log.exit_code();
}

int run_verify_minkowski(int n, const std::string& k_spec, int samples, std::uint64_t seed) {
    const int bound = stratification_bound();
    if (n > bound)
        throw ResourceError("verify minkowski: n exceeds the configured bound of " + std::to_string(bound));
    CheckLog log;
    for (const auto& K : dimension_sets(n, k_spec)) {
        std::string tag = "n=" + std::to_string(n) + " K={";
        for (std::size_t i = 0; i < K.size(); ++i) tag += (i ? "," : "") + std::to_string(K[i]);
        tag += "}";
        const auto cells = enumerate_cells(n, K);
        std::vector<std::size_t> chosen;
        if (n <= 4 || static_cast<int>(cells.size()) <= samples) {
            for (std::size_t i = 0; i < cells.size(); ++i) chosen.push_back(i);
        } else {
            Rng rng(seed);
            for (int s = 0; s < samples; ++s)
                chosen.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<int>(cells.size()) - 1)));
        }
        bool ok = true;
        for (std::size_t idx : chosen) ok = ok && minkowski_check(cells[idx]);
        log.check("interval polytopes decompose as minkowski sums for " + tag + " (" +
                      std::to_string(chosen.size()) + " cells)",
                  ok);
    }
    return log.exit_code();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact positivity computations on partial flag varieties"};
    app.require_subcommand(1);

    std::string flag_path, out_path, format = "json", kind = "converse", k_spec;
    std::string v_spec, w_spec, theorem;
    int n = 0, k_arg = 0, l_arg = 0, eps_arg = -1, samples = 100;
    std::uint64_t seed = 0;
    std::string t_text = "1/2";
    std::string refinement_path;

    auto* pluecker = app.add_subcommand("pluecker", "Plucker vectors and sign classification of a flag");
    pluecker->add_option("flag", flag_path, "flag JSON file")->required();
    pluecker->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "positivity classification with witness or certificate");
    classify->add_option("flag", flag_path)->required();
    classify->add_option("--refinement", refinement_path, "interval-K refinement flag JSON");
    classify->add_option("--out", out_path);

    auto* witness = app.add_subcommand("witness", "totally positive witness matrix for a positive flag");
    witness->add_option("flag", flag_path)->required();
    witness->add_option("--out", out_path);

    auto* complete = app.add_subcommand("complete", "complete an interval flag positively");
    complete->add_option("flag", flag_path)->required();
    complete->add_option("--out", out_path);

    auto* shift = app.add_subcommand("shift", "signed left cyclic shift");
    shift->add_option("flag", flag_path)->required();
    shift->add_option("--eps", eps_arg, "parity: 0 even, 1 odd")->required();
    shift->add_option("--out", out_path);

    auto* counter = app.add_subcommand("counterexample", "construct an obstructed flag with certificate");
    counter->add_option("--kind", kind)->check(CLI::IsMember({"converse", "cyclic"}));
    counter->add_option("--n", n)->required();
    counter->add_option("--K", k_spec)->required();
    counter->add_option("--k", k_arg);
    counter->add_option("--l", l_arg);
    counter->add_option("--eps", eps_arg);
    counter->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run a theorem-level check suite");
    verify->add_option("theorem", theorem)
        ->check(CLI::IsMember({"converse", "cyclic", "decompositions", "minkowski"}))
        ->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--K", k_spec, "comma list, or 'all'")->required();
    verify->add_option("--k", k_arg);
    verify->add_option("--l", l_arg);
    verify->add_option("--eps", eps_arg);
    verify->add_option("--t", t_text, "perturbation parameter p/q in [0,1)");
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_option("--out", out_path);

    auto* strata = app.add_subcommand("strata", "cell-to-stratum report");
    strata->add_option("--n", n)->required();
    strata->add_option("--K", k_spec)->required();
    strata->add_option("--out", out_path);
    strata->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* bip = app.add_subcommand("bip", "Bruhat interval polytope vertices of a cell");
    bip->add_option("--n", n)->required();
    bip->add_option("--K", k_spec)->required();
    bip->add_option("--v", v_spec, "one-line notation, comma list")->required();
    bip->add_option("--w", w_spec, "one-line notation, comma list")->required();
    bip->add_option("--out", out_path);
    bip->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (pluecker->parsed()) {
        const Flag flag = load_flag(flag_path);
        Json report;
        report["n"] = flag.n;
        report["K"] = flag.K;
        Json vectors = Json::object();
        for (int k : flag.K) vectors[std::to_string(k)] = plucker_to_json(plucker(flag, k));
        report["plucker"] = std::move(vectors);
        report["class"] = plucker_class_name(classify_plucker(flag).plucker);
        emit_json(report, out_path);
        return kExitOk;
    }

    if (classify->parsed()) {
        const Flag flag = load_flag(flag_path);
        std::optional<Flag> refinement;
        if (!refinement_path.empty()) refinement = load_flag(refinement_path);
        emit_json(positivity_to_json(is_lusztig_positive(flag, refinement)), out_path);
        return kExitOk;
    }

    if (witness->parsed()) {
        const Flag flag = load_flag(flag_path);
        if (!flag.interval_K()) {
            std::cerr << "witness: dimension set is not an interval of integers\n";
            return kExitNonIntervalK;
        }
        if (classify_plucker(flag).plucker != PluckerClass::kPositive) {
            std::cerr << "witness: flag is not Plucker-positive\n";
            return kExitNotPositive;
        }
        const Mat g = tp_witness_complete(complete_flag(flag));
        if (!is_totally_positive(g)) return kExitCheckFailure;
        emit_json(mat_to_json(g), out_path);
        return kExitOk;
    }

    if (complete->parsed()) {
        const Flag flag = load_flag(flag_path);
        if (!flag.interval_K()) {
            std::cerr << "complete: dimension set is not an interval of integers\n";
            return kExitNonIntervalK;
        }
        if (classify_plucker(flag).plucker != PluckerClass::kPositive) {
            std::cerr << "complete: flag is not Plucker-positive\n";
            return kExitNotPositive;
        }
        emit_json(flag_to_json(complete_flag(flag)), out_path);
        return kExitOk;
    }

    if (shift->parsed()) {
        const Flag flag = load_flag(flag_path);
        emit_json(flag_to_json(cyclic_shift(flag, parse_eps(eps_arg))), out_path);
        return kExitOk;
    }

    if (counter->parsed()) {
        const std::vector<int> K = parse_int_list(k_spec);
        Json report;
        if (kind == "converse") {
            auto pairs = gap_pairs(n, K);
            if (k_arg > 0 && l_arg > 0) pairs = {{k_arg, l_arg}};
            if (pairs.empty()) throw ArgumentError("counterexample: no usable consecutive pair in K");
            const auto [flag, cert] = converse_counterexample(n, K, pairs.front().first, pairs.front().second);
            report["flag"] = flag_to_json(flag);
            report["certificate"] = certificate_to_json(cert);
            report["class"] = plucker_class_name(classify_plucker(flag).plucker);
        } else {
            const Parity eps = parse_eps(eps_arg < 0 ? 1 : eps_arg);
            const auto [w, x, cert] = cyclic_counterexample(n, K, eps);
            report["flag"] = flag_to_json(w);
            report["shifted"] = flag_to_json(x);
            report["certificate"] = certificate_to_json(cert);
        }
        emit_json(report, out_path);
        return kExitOk;
    }

    if (verify->parsed()) {
        if (theorem == "converse") return run_verify_converse(n, parse_int_list(k_spec), k_arg, l_arg);
        if (theorem == "cyclic") return run_verify_cyclic(n, parse_int_list(k_spec), eps_arg, parse_rat(t_text));
        if (theorem == "decompositions") return run_verify_decompositions(n, k_spec, out_path);
        return run_verify_minkowski(n, k_spec, samples, seed);
    }

    if (strata->parsed()) {
        const InjectivityReport report = injectivity_experiment(n, parse_int_list(k_spec), stratification_bound());
        if (format == "csv")
            emit(injectivity_report_to_csv(report), out_path);
        else
            emit_json(injectivity_report_to_json(report), out_path);
        return kExitOk;
    }

    if (bip->parsed()) {
        const CellIndex cell(n, Perm(parse_int_list(v_spec)), Perm(parse_int_list(w_spec)), parse_int_list(k_spec));
        const LatticePolytope poly = bip_vertices(cell);
        if (format == "csv")
            emit(polytope_to_csv(poly), out_path);
        else
            emit_json(polytope_to_json(poly), out_path);
        return kExitOk;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResourceBound;
    } catch (const ArgumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const StateError& e) {
        std::cerr << "state error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
