// Command-line front door for the bounded-multiplicity sumset library:
// compute H^(r)A, evaluate lower-bound formulas, build extremal instances,
// explore subsequence sums, and run verification campaigns.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hfold/bounds.hpp"
#include "hfold/report_io.hpp"
#include "hfold/structure.hpp"
#include "hfold/subseq.hpp"
#include "hfold/verify.hpp"

namespace {

using hfold::Int;
using hfold::report::Json;

// 0 = clean, 1 = a mathematical violation was found, 2 = usage error.
int g_exit = 0;

std::string format_runs(const std::vector<Int>& vals) {
    if (vals.empty())
        return "{}";
    std::string out = "{";
    std::size_t i = 0;
    while (i < vals.size()) {
        std::size_t j = i;
        while (j + 1 < vals.size() && vals[j + 1] == vals[j] + 1)
            ++j;
        if (i)
            out += ", ";
        if (j > i + 1)
            out += std::to_string(vals[i]) + ".." + std::to_string(vals[j]);
        else if (j == i + 1)
            out += std::to_string(vals[i]) + ", " + std::to_string(vals[j]);
        else
            out += std::to_string(vals[i]);
        i = j + 1;
    }
    return out + "}";
}

hfold::IntSet parse_set(const std::string& text) {
    return hfold::IntSet::normalized(hfold::report::parse_int_list(text));
}

hfold::HSpec parse_hs(const std::string& text) {
    return hfold::HSpec::normalized(hfold::report::parse_int_list(text));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void run_sumset(const std::string& set_text, std::optional<Int> h,
                const std::string& hs_text, Int r, const std::string& format) {
    const hfold::IntSet a = parse_set(set_text);
    hfold::Sums sums;
    if (!hs_text.empty()) {
        sums = hfold::union_sumset(a, parse_hs(hs_text), r);
    } else if (h) {
        sums = hfold::fold_sumset(a, {*h, r});
    } else {
        throw hfold::ConfigError("one of --h or --H is required");
    }
    if (format == "json") {
        Json j;
        j["set"] = sums;
        j["cardinality"] = sums.size();
        if (!sums.empty()) {
            j["min"] = sums.front();
            j["max"] = sums.back();
        }
        print_json(j);
        return;
    }
    std::cout << format_runs(sums) << "\n";
    std::cout << "cardinality: " << sums.size() << "\n";
    if (!sums.empty())
        std::cout << "min: " << sums.front() << "  max: " << sums.back() << "\n";
}

void run_bound(Int k, Int r, const std::string& hs_text, bool zero,
               const std::string& format) {
    const hfold::HSpec hs = parse_hs(hs_text);
    const auto rep = hfold::bounds::classify_regime(k, r, hs, zero);
    if (format == "json") {
        Json j;
        j["regime"] = std::string(hfold::bounds::to_string(rep.regime));
        if (rep.split_index)
            j["split_index"] = *rep.split_index;
        j["value"] = rep.value;
        Json terms = Json::array();
        for (const auto& term : rep.terms) {
            Json t;
            t["label"] = term.label;
            t["value"] = term.value;
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        j["hypotheses_ok"] = rep.hypotheses_ok;
        j["violations"] = rep.violations;
        print_json(j);
        return;
    }
    std::cout << "regime: " << hfold::bounds::to_string(rep.regime);
    if (rep.split_index)
        std::cout << " (split at index " << *rep.split_index << ")";
    std::cout << "\nvalue: " << rep.value << "\n";
    std::cout << "terms:\n";
    for (const auto& term : rep.terms)
        std::cout << "  " << term.label << ": " << term.value << "\n";
    if (rep.hypotheses_ok) {
        std::cout << "hypotheses: ok\n";
    } else {
        std::cout << "hypotheses: violated\n";
        for (const auto& v : rep.violations)
            std::cout << "  - " << v << "\n";
    }
}

void finish_extremal(const hfold::structure::ExtremalInstance& inst,
                     const std::string& format) {
    hfold::Sums sums;
    try {
        sums = hfold::union_sumset(inst.a, inst.hs, inst.r);
    } catch (const hfold::EmptyResultError&) {
    }
    const Int got = static_cast<Int>(sums.size());
    const bool ok = got == inst.expected_cardinality;
    if (!ok)
        g_exit = 1;
    if (format == "json") {
        Json j;
        j["kind"] = std::string(hfold::structure::to_string(inst.kind));
        j["a"] = inst.a.elements();
        j["h"] = inst.hs.values();
        j["r"] = inst.r;
        j["expected"] = inst.expected_cardinality;
        j["computed"] = got;
        j["verified"] = ok;
        print_json(j);
        return;
    }
    std::cout << "kind: " << hfold::structure::to_string(inst.kind) << "\n";
    std::cout << "A = " << format_runs(inst.a.elements()) << "\n";
    std::cout << "H = " << format_runs(inst.hs.values()) << "\n";
    std::cout << "r = " << inst.r << "\n";
    std::cout << "expected: " << inst.expected_cardinality
              << "  computed: " << got << "  "
              << (ok ? "verified" : "MISMATCH") << "\n";
}

void run_subseq(const std::string& base_text, Int r, Int alpha, bool subset,
                const std::string& format) {
    const hfold::IntSet base = parse_set(base_text);
    const Int k = base.size();
    hfold::Sums sums;
    if (subset) {
        sums = hfold::subseq::subset_sum_set(base, alpha);
        r = 1;
    } else {
        sums = hfold::subseq::subsequence_sum_set({base, r}, alpha);
    }
    const Int got = static_cast<Int>(sums.size());
    std::optional<Int> bound;
    try {
        bound = alpha == 1
                    ? hfold::subseq::full_sum_lower(k, r, base.contains_zero())
                    : hfold::subseq::partial_sum_lower(k, r, alpha,
                                                       base.contains_zero());
    } catch (const hfold::HypothesisError&) {
    }
    std::string status = "n/a";
    if (bound) {
        status = got < *bound ? "violated" : (got == *bound ? "tight" : "held");
        if (got < *bound)
            g_exit = 1;
    }
    const auto step = hfold::subseq::dilated_interval_step(base);
    if (format == "json") {
        Json j;
        j["set"] = sums;
        j["cardinality"] = got;
        j["bound"] = bound ? Json(*bound) : Json(nullptr);
        j["bound_status"] = status;
        j["interval_step"] = step ? Json(*step) : Json(nullptr);
        print_json(j);
        return;
    }
    std::cout << format_runs(sums) << "\n";
    std::cout << "cardinality: " << got << "\n";
    if (bound)
        std::cout << "lower bound: " << *bound << " (" << status << ")\n";
    else
        std::cout << "lower bound: not applicable at this size\n";
    if (step)
        std::cout << "base is a dilated interval with step " << *step << "\n";
}

void print_record_human(const hfold::verify::InstanceRecord& rec) {
    std::cout << "A = " << format_runs(rec.a.elements())
              << "  H = " << format_runs(rec.hs.values()) << "  r = " << rec.r
              << "\n";
    std::cout << "claim: " << rec.claim << "  regime: " << rec.regime << "\n";
    std::cout << "formula: " << rec.formula << "  enumerated: " << rec.enumerated
              << "\n";
    std::cout << "verdict: " << hfold::verify::to_string(rec.verdict);
    if (rec.conclusion_violated)
        std::cout << " (conclusion violated)";
    std::cout << "\n";
    if (!rec.detail.empty())
        std::cout << "detail: " << rec.detail << "\n";
}

void run_check(const std::string& set_text, const std::string& hs_text, Int r,
               const std::string& claim_text, const std::string& format) {
    hfold::verify::Instance inst;
    inst.a = parse_set(set_text);
    inst.hs = parse_hs(hs_text);
    inst.r = r;
    hfold::verify::InstanceRecord rec;
    if (claim_text.empty() || claim_text == "direct") {
        rec = hfold::verify::check_direct(inst);
    } else {
        const auto claim = hfold::structure::claim_from_string(claim_text);
        if (!claim)
            throw hfold::ConfigError("unknown claim: '" + claim_text + "'");
        rec = hfold::verify::check_inverse(inst, *claim);
    }
    if (rec.verdict == hfold::verify::Verdict::Violated || rec.conclusion_violated)
        g_exit = 1;
    else if (rec.verdict == hfold::verify::Verdict::Error)
        g_exit = 2;
    if (format == "json")
        print_json(hfold::report::record_json(rec));
    else
        print_record_human(rec);
}

void run_verify(const hfold::verify::GridConfig& cfg, const std::string& out_path,
                const std::string& csv_path, const std::string& format) {
    std::vector<hfold::verify::InstanceRecord> all;
    const auto rep =
        hfold::verify::run_campaign(cfg, csv_path.empty() ? nullptr : &all);
    const Int violations =
        static_cast<Int>(rep.counterexamples.size());
    if (violations > 0)
        g_exit = 1;

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw hfold::ConfigError("cannot write to '" + out_path + "'");
        out << hfold::report::report_file_json(rep).dump(2) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out)
            throw hfold::ConfigError("cannot write to '" + csv_path + "'");
        out << hfold::report::render_csv(all);
    }

    if (format == "json") {
        print_json(hfold::report::report_file_json(rep));
        return;
    }
    std::cout << "instances: " << rep.instances_checked << "\n";
    for (const auto& [claim, tally] : rep.tallies) {
        std::cout << claim << ": checked " << tally.checked << ", inapplicable "
                  << tally.inapplicable << ", held " << tally.held << ", tight "
                  << tally.tight << ", violated " << tally.violated;
        if (claim != "direct")
            std::cout << ", conclusion held " << tally.conclusion_held
                      << ", conclusion violated " << tally.conclusion_violated;
        if (tally.errors)
            std::cout << ", errors " << tally.errors;
        std::cout << "\n";
    }
    if (!rep.counterexamples.empty()) {
        std::cout << "counterexamples (" << rep.counterexamples.size() << "):\n";
        for (const auto& rec : rep.counterexamples) {
            std::cout << "----\n";
            print_record_human(rec);
        }
    }
    if (!rep.error_records.empty())
        std::cout << "instance errors: " << rep.error_records.size()
                  << " (see report file)\n";
    std::cout << "wall time: " << rep.wall_ms << " ms, workers: "
              << rep.workers_used << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-multiplicity sumsets H^(r)A: computation, "
                 "lower bounds, extremal families, verification"};
    app.require_subcommand(1);
    // --h is a real option below, so help must not claim -h
    app.set_help_flag("--help", "print help");

    // sumset
    auto* sum_cmd = app.add_subcommand("sumset", "compute h^(r)A or H^(r)A");
    sum_cmd->set_help_flag("--help", "print help");
    std::string sum_set, sum_hs, sum_format = "human";
    Int sum_h = 0, sum_r = 1;
    bool sum_h_given = false;
    sum_cmd->add_option("--set", sum_set, "base set, e.g. 1,2,4 or 1..5")
        ->required();
    auto* hopt = sum_cmd->add_option("--h", sum_h, "single fold count");
    sum_cmd->add_option("--H", sum_hs, "fold counts, e.g. 2,3")->excludes(hopt);
    sum_cmd->add_option("--r", sum_r, "repetition bound (default 1)");
    sum_cmd->add_option("--format", sum_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    sum_cmd->callback([&] {
        sum_h_given = hopt->count() > 0;
        run_sumset(sum_set, sum_h_given ? std::optional<Int>(sum_h) : std::nullopt,
                   sum_hs, sum_r, sum_format);
    });

    // bound
    auto* bound_cmd =
        app.add_subcommand("bound", "evaluate the lower-bound formula for H^(r)A");
    Int bound_k = 0, bound_r = 1;
    std::string bound_hs, bound_format = "human";
    bool bound_zero = false;
    bound_cmd->add_option("--k", bound_k, "size of A")->required();
    bound_cmd->add_option("--r", bound_r, "repetition bound")->required();
    bound_cmd->add_option("--H", bound_hs, "fold counts")->required();
    bound_cmd->add_flag("--zero", bound_zero, "A contains 0");
    bound_cmd->add_option("--format", bound_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    bound_cmd->callback(
        [&] { run_bound(bound_k, bound_r, bound_hs, bound_zero, bound_format); });

    // extremal
    auto* ext_cmd = app.add_subcommand(
        "extremal", "build an extremal family instance and verify it");
    std::string ext_kind, ext_set, ext_hs, ext_format = "human";
    Int ext_k = 0, ext_r = 1, ext_a1 = 0, ext_a2 = 0;
    std::string ext_pair = "bottom";
    bool ext_zero = false;
    ext_cmd->add_option("--kind", ext_kind,
                        "DirectTight|FullRangeTight|HighTight|ZeroDirectTight|"
                        "ZeroFullRangeTight|ZeroHighTight|NonApGap|NonApSmall")
        ->required();
    ext_cmd->add_option("--k", ext_k, "size of A (closed-form kinds)");
    ext_cmd->add_option("--r", ext_r, "repetition bound");
    ext_cmd->add_option("--set", ext_set, "base set (NonApGap)");
    ext_cmd->add_option("--pair", ext_pair, "bottom|top h-pair (NonApGap)")
        ->check(CLI::IsMember({"bottom", "top"}));
    ext_cmd->add_option("--a1", ext_a1, "first generator (NonApSmall)");
    ext_cmd->add_option("--a2", ext_a2, "second generator (NonApSmall)");
    ext_cmd->add_option("--H", ext_hs, "fold counts (NonApSmall)");
    ext_cmd->add_flag("--zero", ext_zero, "include 0 (NonApSmall)");
    ext_cmd->add_option("--format", ext_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    ext_cmd->callback([&] {
        using hfold::structure::ExtremalKind;
        hfold::structure::ExtremalInstance inst;
        if (ext_kind == "NonApGap") {
            inst = hfold::structure::build_non_ap_gap(parse_set(ext_set), ext_r,
                                                      ext_pair == "bottom");
        } else if (ext_kind == "NonApSmall") {
            inst = hfold::structure::build_non_ap_small(ext_a1, ext_a2,
                                                        parse_hs(ext_hs), ext_zero);
        } else {
            std::optional<ExtremalKind> kind;
            for (ExtremalKind cand :
                 {ExtremalKind::DirectTight, ExtremalKind::FullRangeTight,
                  ExtremalKind::HighTight, ExtremalKind::ZeroDirectTight,
                  ExtremalKind::ZeroFullRangeTight, ExtremalKind::ZeroHighTight})
                if (hfold::structure::to_string(cand) == ext_kind)
                    kind = cand;
            if (!kind)
                throw hfold::ConfigError("unknown kind: '" + ext_kind + "'");
            inst = hfold::structure::build_extremal(*kind, ext_k, ext_r);
        }
        finish_extremal(inst, ext_format);
    });

    // subseq
    auto* sub_cmd = app.add_subcommand(
        "subseq", "subsequence sums of the base repeated r times");
    std::string sub_base, sub_format = "human";
    Int sub_r = 1, sub_alpha = 1;
    bool sub_subset = false;
    sub_cmd->add_option("--base", sub_base, "base set")->required();
    sub_cmd->add_option("--r", sub_r, "repetitions per term (default 1)");
    sub_cmd->add_option("--alpha", sub_alpha, "minimum subsequence length");
    sub_cmd->add_flag("--subset", sub_subset, "subset sums (each term once)");
    sub_cmd->add_option("--format", sub_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    sub_cmd->callback(
        [&] { run_subseq(sub_base, sub_r, sub_alpha, sub_subset, sub_format); });

    // check: single-instance replay
    auto* check_cmd = app.add_subcommand(
        "check", "re-run one instance against the direct bound or a claim");
    std::string chk_set, chk_hs, chk_claim, chk_format = "human";
    Int chk_r = 1;
    check_cmd->add_option("--set", chk_set, "base set")->required();
    check_cmd->add_option("--H", chk_hs, "fold counts")->required();
    check_cmd->add_option("--r", chk_r, "repetition bound");
    check_cmd->add_option("--claim", chk_claim,
                          "claim name, or 'direct' (default)");
    check_cmd->add_option("--format", chk_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    check_cmd->callback(
        [&] { run_check(chk_set, chk_hs, chk_r, chk_claim, chk_format); });

    // verify
    auto* ver_cmd =
        app.add_subcommand("verify", "run a verification campaign over a grid");
    std::string ver_config, ver_out, ver_csv, ver_format = "human";
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string ov_k, ov_elements, ov_r, ov_t, ov_hwin, ov_regimes, ov_claims,
        ov_direct, ov_max, ov_sample, ov_seed;
    Int ov_workers = 0;
    bool ov_require_zero = false, ov_dedupe = false;
    ver_cmd->add_option("--config", ver_config, "config file (key = value)");
    auto* o_k = ver_cmd->add_option("--k", ov_k, "k range, e.g. 3..6");
    auto* o_el = ver_cmd->add_option("--elements", ov_elements, "element window");
    auto* o_r = ver_cmd->add_option("--r", ov_r, "r range");
    auto* o_t = ver_cmd->add_option("--t", ov_t, "t range (|H|)");
    auto* o_hw = ver_cmd->add_option("--h-window", ov_hwin,
                                     "full|main|zero-main|lo..hi");
    auto* o_rg = ver_cmd->add_option("--regimes", ov_regimes, "regime filter");
    auto* o_cl = ver_cmd->add_option("--claims", ov_claims, "inverse claims");
    auto* o_di = ver_cmd->add_option("--direct", ov_direct,
                                     "check the direct bound (true|false)");
    auto* o_rz = ver_cmd->add_flag("--require-zero", ov_require_zero,
                                   "every A must contain 0");
    auto* o_dd = ver_cmd->add_flag("--dedupe", ov_dedupe,
                                   "skip dilations of smaller sets");
    auto* o_mx = ver_cmd->add_option("--max-instances", ov_max, "instance cap");
    auto* o_wk = ver_cmd->add_option("--workers", ov_workers, "worker threads");
    auto* o_sm = ver_cmd->add_option("--sample", ov_sample,
                                     "sampled mode: number of draws");
    auto* o_sd = ver_cmd->add_option("--seed", ov_seed, "sampling seed");
    ver_cmd->add_option("--out", ver_out, "write the JSON report here");
    ver_cmd->add_option("--csv", ver_csv, "write per-instance CSV here");
    ver_cmd->add_option("--format", ver_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    ver_cmd->callback([&] {
        hfold::verify::GridConfig cfg;
        if (const char* env = std::getenv("HFOLD_WORKERS"))
            cfg.workers = static_cast<int>(std::strtol(env, nullptr, 10));
        if (!ver_config.empty()) {
            std::ifstream in(ver_config);
            if (!in)
                throw hfold::ConfigError("cannot read '" + ver_config + "'");
            cfg = hfold::report::parse_grid_config(in, cfg);
        }
        auto apply = [&](const CLI::Option* opt, const char* key,
                         const std::string& value) {
            if (opt->count())
                hfold::report::apply_config_entry(cfg, key, value);
        };
        apply(o_k, "k", ov_k);
        apply(o_el, "elements", ov_elements);
        apply(o_r, "r", ov_r);
        apply(o_t, "t", ov_t);
        apply(o_hw, "h_window", ov_hwin);
        apply(o_rg, "regimes", ov_regimes);
        apply(o_cl, "claims", ov_claims);
        apply(o_di, "direct", ov_direct);
        apply(o_mx, "max_instances", ov_max);
        apply(o_sm, "sample", ov_sample);
        apply(o_sd, "seed", ov_seed);
        if (o_rz->count())
            cfg.require_zero = true;
        if (o_dd->count())
            cfg.dedupe_dilation = true;
        if (o_wk->count())
            cfg.workers = static_cast<int>(ov_workers);
        if (cfg.sample > 0 && o_sd->count() == 0 && ver_config.empty())
            throw hfold::ConfigError("sampled mode requires an explicit --seed");
        run_verify(cfg, ver_out, ver_csv, ver_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hfold::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
