#include "hfold/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>

namespace hfold::report {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Int parse_int(std::string_view s) {
    s = trim(s);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("not an integer: '" + std::string(s) + "'");
    return value;
}

bool parse_bool(std::string_view s) {
    s = trim(s);
    if (s == "true" || s == "1")
        return true;
    if (s == "false" || s == "0")
        return false;
    throw ConfigError("not a boolean: '" + std::string(s) + "'");
}

std::string range_text(Int lo, Int hi) {
    return std::to_string(lo) + ".." + std::to_string(hi);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

} // namespace

std::pair<Int, Int> parse_range(std::string_view text) {
    text = trim(text);
    const auto pos = text.find("..");
    if (pos == std::string_view::npos) {
        const Int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, pos)), parse_int(text.substr(pos + 2))};
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    for (std::string_view part : split(text, ',')) {
        part = trim(part);
        if (part.empty())
            continue;
        const auto [lo, hi] = parse_range(part);
        if (hi < lo)
            throw ConfigError("descending range: '" + std::string(part) + "'");
        for (Int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

Json config_json(const verify::GridConfig& cfg) {
    Json j;
    j["k"] = range_text(cfg.k_lo, cfg.k_hi);
    j["elements"] = range_text(cfg.elem_lo, cfg.elem_hi);
    j["r"] = range_text(cfg.r_lo, cfg.r_hi);
    j["t"] = range_text(cfg.t_lo, cfg.t_hi);
    j["h_window"] = cfg.h_mode == verify::HWindowMode::Explicit
                        ? range_text(cfg.h_lo, cfg.h_hi)
                        : std::string(verify::to_string(cfg.h_mode));
    Json regimes = Json::array();
    for (const auto r : cfg.regime_filter)
        regimes.push_back(std::string(bounds::to_string(r)));
    j["regimes"] = std::move(regimes);
    j["direct"] = cfg.check_direct;
    Json claims = Json::array();
    for (const auto c : cfg.inverse_claims)
        claims.push_back(std::string(structure::to_string(c)));
    j["claims"] = std::move(claims);
    j["require_zero"] = cfg.require_zero;
    j["dedupe"] = cfg.dedupe_dilation;
    j["max_instances"] = cfg.max_instances;
    j["sample"] = cfg.sample;
    j["seed"] = cfg.seed;
    return j;
}

Json record_json(const verify::InstanceRecord& rec) {
    Json j;
    j["ordinal"] = rec.ordinal;
    j["r"] = rec.r;
    j["k"] = rec.a.size();
    j["a"] = rec.a.elements();
    j["h"] = rec.hs.values();
    j["claim"] = rec.claim;
    j["regime"] = rec.regime;
    j["formula"] = rec.formula;
    j["enumerated"] = rec.enumerated;
    j["verdict"] = std::string(verify::to_string(rec.verdict));
    j["conclusion_violated"] = rec.conclusion_violated;
    j["detail"] = rec.detail;
    return j;
}

Json report_body_json(const verify::VerifyReport& rep) {
    Json j;
    j["config"] = config_json(rep.config);
    j["instances_checked"] = rep.instances_checked;
    Json tallies;
    for (const auto& [claim, tally] : rep.tallies) {
        Json t;
        t["checked"] = tally.checked;
        t["inapplicable"] = tally.inapplicable;
        t["held"] = tally.held;
        t["tight"] = tally.tight;
        t["violated"] = tally.violated;
        t["conclusion_held"] = tally.conclusion_held;
        t["conclusion_violated"] = tally.conclusion_violated;
        t["errors"] = tally.errors;
        tallies[claim] = std::move(t);
    }
    j["tallies"] = std::move(tallies);
    Json cex = Json::array();
    for (const auto& rec : rep.counterexamples)
        cex.push_back(record_json(rec));
    j["counterexamples"] = std::move(cex);
    Json errs = Json::array();
    for (const auto& rec : rep.error_records)
        errs.push_back(record_json(rec));
    j["errors"] = std::move(errs);
    return j;
}

Json report_file_json(const verify::VerifyReport& rep) {
    Json j;
    j["body"] = report_body_json(rep);
    Json run;
    run["wall_ms"] = rep.wall_ms;
    run["workers"] = rep.workers_used;
    j["run"] = std::move(run);
    return j;
}

std::string render_csv(const std::vector<verify::InstanceRecord>& recs) {
    std::string out = "r,k,A,H,claim,regime,formula,enumerated,verdict\n";
    auto quoted = [](const std::vector<Int>& vals) {
        std::string s = "\"";
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(vals[i]);
        }
        return s + "\"";
    };
    for (const auto& rec : recs) {
        out += std::to_string(rec.r);
        out += ',';
        out += std::to_string(rec.a.size());
        out += ',';
        out += quoted(rec.a.elements());
        out += ',';
        out += quoted(rec.hs.values());
        out += ',';
        out += rec.claim;
        out += ',';
        out += rec.regime;
        out += ',';
        out += std::to_string(rec.formula);
        out += ',';
        out += std::to_string(rec.enumerated);
        out += ',';
        out += std::string(verify::to_string(rec.verdict));
        out += '\n';
    }
    return out;
}

void apply_config_entry(verify::GridConfig& cfg, std::string_view key,
                        std::string_view value) {
    key = trim(key);
    value = trim(value);
    auto as_range = [&](Int& lo, Int& hi) { std::tie(lo, hi) = parse_range(value); };
    if (key == "k") {
        as_range(cfg.k_lo, cfg.k_hi);
    } else if (key == "elements") {
        as_range(cfg.elem_lo, cfg.elem_hi);
    } else if (key == "r") {
        as_range(cfg.r_lo, cfg.r_hi);
    } else if (key == "t") {
        as_range(cfg.t_lo, cfg.t_hi);
    } else if (key == "h_window") {
        if (const auto m = verify::h_window_mode_from_string(value);
            m && *m != verify::HWindowMode::Explicit) {
            cfg.h_mode = *m;
        } else {
            cfg.h_mode = verify::HWindowMode::Explicit;
            as_range(cfg.h_lo, cfg.h_hi);
        }
    } else if (key == "regimes") {
        cfg.regime_filter.clear();
        for (std::string_view part : split(value, ',')) {
            part = trim(part);
            if (part.empty())
                continue;
            const auto r = bounds::regime_from_string(part);
            if (!r)
                throw ConfigError("unknown regime: '" + std::string(part) + "'");
            cfg.regime_filter.push_back(*r);
        }
    } else if (key == "direct") {
        cfg.check_direct = parse_bool(value);
    } else if (key == "claims") {
        cfg.inverse_claims.clear();
        for (std::string_view part : split(value, ',')) {
            part = trim(part);
            if (part.empty())
                continue;
            const auto c = structure::claim_from_string(part);
            if (!c)
                throw ConfigError("unknown claim: '" + std::string(part) + "'");
            cfg.inverse_claims.push_back(*c);
        }
    } else if (key == "require_zero") {
        cfg.require_zero = parse_bool(value);
    } else if (key == "dedupe") {
        cfg.dedupe_dilation = parse_bool(value);
    } else if (key == "max_instances") {
        cfg.max_instances = parse_int(value);
    } else if (key == "workers") {
        cfg.workers = static_cast<int>(parse_int(value));
    } else if (key == "sample") {
        cfg.sample = parse_int(value);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(value));
    } else {
        throw ConfigError("unknown config key: '" + std::string(key) + "'");
    }
}

verify::GridConfig parse_grid_config(std::istream& in, verify::GridConfig base) {
    verify::GridConfig cfg = std::move(base);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = trim(sv);
        if (sv.empty())
            continue;
        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        apply_config_entry(cfg, sv.substr(0, eq), sv.substr(eq + 1));
    }
    return cfg;
}

} // namespace hfold::report
