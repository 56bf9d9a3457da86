#include "hfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

namespace hfold::verify {

namespace {

std::string join_lines(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a2c62da9b73dULL;
    return z ^ (z >> 31);
}

// Unbiased draw from [0, n), independent of any stdlib distribution so
// reports are reproducible everywhere.
std::uint64_t draw_below(std::uint64_t& state, std::uint64_t n) {
    const std::uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = splitmix64(state);
    } while (x >= limit);
    return x % n;
}

Int binom(Int n, Int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int c = 1;
    for (Int i = 1; i <= k; ++i) {
        Int next;
        if (__builtin_mul_overflow(c, n - k + i, &next))
            throw CapExceededError("grid size overflows a 64-bit count");
        c = next / i; // exact: c holds C(n-k+i-1, i-1) * (n-k+i) here
    }
    return c;
}

// The H window for one (k, r) cell; empty when hi < lo.
std::pair<Int, Int> h_window(const GridConfig& cfg, Int k, Int r) {
    switch (cfg.h_mode) {
    case HWindowMode::Explicit: return {cfg.h_lo, cfg.h_hi};
    case HWindowMode::FullRange: return {1, checked_mul(k, r)};
    case HWindowMode::BelowMain:
        return {1, checked_sub(checked_mul(k - 1, r), 1)};
    case HWindowMode::BelowZeroMain:
        return {1, checked_sub(checked_mul(k - 2, r), 1)};
    }
    return {1, 0};
}

bool gcd_normalized(const IntSet& a) {
    Int g = 0;
    for (Int v : a)
        g = std::gcd(g, v - a.min());
    return a.size() <= 1 || g == 1;
}

bool keep_instance(const GridConfig& cfg, const IntSet& a, const HSpec& hs, Int r) {
    if (cfg.require_zero && !a.contains_zero())
        return false;
    if (cfg.dedupe_dilation && !gcd_normalized(a))
        return false;
    if (!cfg.regime_filter.empty()) {
        try {
            const auto regime =
                bounds::select_regime(a.size(), r, hs, a.contains_zero());
            if (std::find(cfg.regime_filter.begin(), cfg.regime_filter.end(),
                          regime) == cfg.regime_filter.end())
                return false;
        } catch (const UnclassifiableError&) {
            return false;
        }
    }
    return true;
}

// Visits k-combinations of {0, ..., n-1} in lexicographic order.
template <typename F>
void for_each_combination(Int n, Int k, F&& visit) {
    if (k < 0 || k > n)
        return;
    std::vector<Int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), Int{0});
    for (;;) {
        visit(idx);
        Int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (Int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Lexicographic unrank of a k-subset of {0, ..., n-1}.
std::vector<Int> unrank_combination(Int n, Int k, Int rank) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(k));
    Int v = 0;
    for (Int picked = 0; picked < k; ++picked) {
        for (;; ++v) {
            const Int below = binom(n - v - 1, k - picked - 1);
            if (rank < below) {
                out.push_back(v);
                ++v;
                break;
            }
            rank -= below;
        }
    }
    return out;
}

} // namespace

std::string_view to_string(HWindowMode m) {
    switch (m) {
    case HWindowMode::Explicit: return "explicit";
    case HWindowMode::FullRange: return "full";
    case HWindowMode::BelowMain: return "main";
    case HWindowMode::BelowZeroMain: return "zero-main";
    }
    return "?";
}

std::optional<HWindowMode> h_window_mode_from_string(std::string_view s) {
    for (HWindowMode m : {HWindowMode::Explicit, HWindowMode::FullRange,
                          HWindowMode::BelowMain, HWindowMode::BelowZeroMain})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Held: return "held";
    case Verdict::Tight: return "tight";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::Error: return "error";
    }
    return "?";
}

void validate(const GridConfig& cfg) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (cfg.k_lo < 1 || cfg.k_lo > cfg.k_hi)
        fail("k range must be a nonempty range of positive sizes");
    if (cfg.elem_lo > cfg.elem_hi)
        fail("element window is empty");
    if (checked_sub(cfg.elem_hi, cfg.elem_lo) + 1 < cfg.k_hi)
        fail("element window cannot hold k distinct values");
    if (cfg.r_lo < 1 || cfg.r_lo > cfg.r_hi)
        fail("r range must be a nonempty range of positive values");
    if (cfg.t_lo < 1 || cfg.t_lo > cfg.t_hi)
        fail("t range must be a nonempty range of positive sizes");
    if (cfg.h_mode == HWindowMode::Explicit && (cfg.h_lo < 1 || cfg.h_lo > cfg.h_hi))
        fail("explicit h window must be a nonempty range of positive values");
    if (cfg.require_zero && (cfg.elem_lo > 0 || cfg.elem_hi < 0))
        fail("require_zero needs 0 inside the element window");
    if (cfg.max_instances < 1)
        fail("instance cap must be positive");
    if (cfg.workers < 1)
        fail("worker count must be positive");
    if (cfg.sample < 0)
        fail("sample count cannot be negative");
    if (!cfg.check_direct && cfg.inverse_claims.empty())
        fail("nothing to check: direct checks disabled and no claims listed");
}

Int count_instances(const GridConfig& cfg) {
    Int total = 0;
    const Int width = checked_sub(cfg.elem_hi, cfg.elem_lo) + 1;
    for (Int r = cfg.r_lo; r <= cfg.r_hi; ++r)
        for (Int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
            const auto [hlo, hhi] = h_window(cfg, k, r);
            if (hhi < hlo)
                continue;
            const Int hw = hhi - hlo + 1;
            const Int a_count = binom(width, k);
            for (Int t = cfg.t_lo; t <= cfg.t_hi; ++t) {
                const Int h_count = binom(hw, t);
                Int cell;
                if (__builtin_mul_overflow(a_count, h_count, &cell) ||
                    __builtin_add_overflow(total, cell, &total))
                    throw CapExceededError("grid size overflows a 64-bit count");
                (void)cell;
            }
        }
    return total;
}

std::vector<Instance> enumerate_instances(const GridConfig& cfg) {
    validate(cfg);
    const Int raw = count_instances(cfg);
    if (cfg.sample == 0 && raw > cfg.max_instances)
        throw CapExceededError("grid holds " + std::to_string(raw) +
                               " raw instances, above the cap of " +
                               std::to_string(cfg.max_instances));
    if (cfg.sample > cfg.max_instances)
        throw CapExceededError("sample count exceeds the instance cap");

    std::vector<Instance> kept;
    auto consider = [&](std::vector<Int> a_vals, std::vector<Int> h_vals, Int r) {
        IntSet a = IntSet::from_sorted(std::move(a_vals));
        HSpec hs = HSpec::normalized(std::move(h_vals));
        if (!keep_instance(cfg, a, hs, r))
            return;
        Instance inst;
        inst.ordinal = static_cast<Int>(kept.size());
        inst.a = std::move(a);
        inst.hs = std::move(hs);
        inst.r = r;
        kept.push_back(std::move(inst));
    };

    if (cfg.sample > 0) {
        // Floyd's algorithm: cfg.sample distinct raw ordinals, then walk
        // them in order and materialize each by unranking.
        const std::uint64_t n = static_cast<std::uint64_t>(raw);
        const std::uint64_t m =
            std::min(n, static_cast<std::uint64_t>(cfg.sample));
        std::set<std::uint64_t> picks;
        std::uint64_t state = cfg.seed;
        for (std::uint64_t j = n - m; j < n; ++j) {
            const std::uint64_t x = draw_below(state, j + 1);
            if (!picks.insert(x).second)
                picks.insert(j);
        }
        auto it = picks.begin();
        Int base = 0;
        const Int width = checked_sub(cfg.elem_hi, cfg.elem_lo) + 1;
        for (Int r = cfg.r_lo; r <= cfg.r_hi && it != picks.end(); ++r)
            for (Int k = cfg.k_lo; k <= cfg.k_hi && it != picks.end(); ++k) {
                const auto [hlo, hhi] = h_window(cfg, k, r);
                if (hhi < hlo)
                    continue;
                const Int hw = hhi - hlo + 1;
                const Int a_count = binom(width, k);
                for (Int t = cfg.t_lo; t <= cfg.t_hi && it != picks.end(); ++t) {
                    const Int h_count = binom(hw, t);
                    const Int cell = a_count * h_count;
                    while (it != picks.end() &&
                           static_cast<Int>(*it) < base + cell) {
                        const Int local = static_cast<Int>(*it) - base;
                        auto a_idx =
                            unrank_combination(width, k, local / h_count);
                        auto h_idx =
                            unrank_combination(hw, t, local % h_count);
                        std::vector<Int> a_vals, h_vals;
                        for (Int i : a_idx)
                            a_vals.push_back(cfg.elem_lo + i);
                        for (Int i : h_idx)
                            h_vals.push_back(hlo + i);
                        consider(std::move(a_vals), std::move(h_vals), r);
                        ++it;
                    }
                    base += cell;
                }
            }
        return kept;
    }

    const Int width = checked_sub(cfg.elem_hi, cfg.elem_lo) + 1;
    for (Int r = cfg.r_lo; r <= cfg.r_hi; ++r)
        for (Int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
            const auto [hlo, hhi] = h_window(cfg, k, r);
            if (hhi < hlo)
                continue;
            const Int hw = hhi - hlo + 1;
            for (Int t = cfg.t_lo; t <= cfg.t_hi; ++t)
                for_each_combination(width, k, [&](const std::vector<Int>& ai) {
                    std::vector<Int> a_vals;
                    a_vals.reserve(ai.size());
                    for (Int i : ai)
                        a_vals.push_back(cfg.elem_lo + i);
                    for_each_combination(hw, t, [&](const std::vector<Int>& hi) {
                        std::vector<Int> h_vals;
                        h_vals.reserve(hi.size());
                        for (Int i : hi)
                            h_vals.push_back(hlo + i);
                        consider(a_vals, std::move(h_vals), r);
                    });
                });
        }
    return kept;
}

InstanceRecord check_direct(const Instance& inst, const FoldOptions& opt) {
    InstanceRecord rec;
    rec.ordinal = inst.ordinal;
    rec.a = inst.a;
    rec.hs = inst.hs;
    rec.r = inst.r;
    rec.claim = "direct";
    rec.regime = "-";
    try {
        const auto brep = bounds::classify_regime(inst.a.size(), inst.r, inst.hs,
                                                  inst.a.contains_zero());
        rec.regime = std::string(bounds::to_string(brep.regime));
        rec.formula = brep.value;
        try {
            rec.enumerated =
                static_cast<Int>(union_sumset(inst.a, inst.hs, inst.r, opt).size());
        } catch (const EmptyResultError&) {
            rec.enumerated = 0;
        }
        // The bound regimes assume positive elements (nonnegative when 0 is
        // a member); the engine itself has no such restriction.
        auto violations = brep.violations;
        if (inst.a.min() < 0)
            violations.push_back("A must not contain negative elements");
        if (!violations.empty()) {
            rec.verdict = Verdict::Inapplicable;
            rec.detail = join_lines(violations);
        } else if (rec.enumerated < rec.formula) {
            rec.verdict = Verdict::Violated;
            rec.detail = "enumerated cardinality fell below the formula";
        } else {
            rec.verdict =
                rec.enumerated == rec.formula ? Verdict::Tight : Verdict::Held;
        }
    } catch (const UnclassifiableError& e) {
        rec.verdict = Verdict::Inapplicable;
        rec.detail = e.what();
    } catch (const Error& e) {
        rec.verdict = Verdict::Error;
        rec.detail = e.what();
    }
    return rec;
}

InstanceRecord check_inverse(const Instance& inst, structure::ClaimKind claim,
                             const FoldOptions& opt) {
    InstanceRecord rec;
    rec.ordinal = inst.ordinal;
    rec.a = inst.a;
    rec.hs = inst.hs;
    rec.r = inst.r;
    rec.claim = std::string(structure::to_string(claim));
    rec.regime = "-";
    try {
        const auto irep =
            structure::inverse_verdict(inst.a, inst.hs, inst.r, claim, opt);
        rec.formula = irep.bound;
        rec.enumerated = irep.cardinality;
        if (!irep.hypotheses_ok) {
            rec.verdict = Verdict::Inapplicable;
            rec.detail = join_lines(irep.violations);
        } else if (!irep.equality) {
            if (rec.enumerated < rec.formula) {
                rec.verdict = Verdict::Violated;
                rec.detail = "enumerated cardinality fell below the claimed bound";
            } else {
                rec.verdict = Verdict::Held;
            }
        } else {
            rec.verdict = Verdict::Tight;
            if (!irep.conclusion_ok) {
                rec.conclusion_violated = true;
                rec.detail = join_lines(irep.conclusion_failures);
            }
        }
    } catch (const Error& e) {
        rec.verdict = Verdict::Error;
        rec.detail = e.what();
    }
    return rec;
}

VerifyReport run_campaign(const GridConfig& cfg,
                          std::vector<InstanceRecord>* all_records) {
    const auto started = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.config = cfg;
    const std::vector<Instance> insts = enumerate_instances(cfg);
    rep.instances_checked = static_cast<Int>(insts.size());

    const int workers = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(std::max(1, cfg.workers)),
        std::max<std::size_t>(insts.size(), 1)));
    rep.workers_used = workers;

    std::vector<std::vector<InstanceRecord>> parts(
        static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        const std::size_t n = insts.size();
        const std::size_t lo = n * static_cast<std::size_t>(w) /
                               static_cast<std::size_t>(workers);
        const std::size_t hi = n * (static_cast<std::size_t>(w) + 1) /
                               static_cast<std::size_t>(workers);
        auto& out = parts[static_cast<std::size_t>(w)];
        for (std::size_t i = lo; i < hi; ++i) {
            if (cfg.check_direct)
                out.push_back(check_direct(insts[i], cfg.fold));
            for (structure::ClaimKind claim : cfg.inverse_claims)
                out.push_back(check_inverse(insts[i], claim, cfg.fold));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& th : pool)
            th.join();
    }

    for (auto& part : parts)
        for (auto& rec : part) {
            ClaimTally& tally = rep.tallies[rec.claim];
            ++tally.checked;
            switch (rec.verdict) {
            case Verdict::Inapplicable: ++tally.inapplicable; break;
            case Verdict::Held: ++tally.held; break;
            case Verdict::Tight:
                ++tally.tight;
                if (rec.claim != "direct") {
                    if (rec.conclusion_violated)
                        ++tally.conclusion_violated;
                    else
                        ++tally.conclusion_held;
                }
                break;
            case Verdict::Violated: ++tally.violated; break;
            case Verdict::Error: ++tally.errors; break;
            }
            if (rec.verdict == Verdict::Violated || rec.conclusion_violated)
                rep.counterexamples.push_back(rec);
            else if (rec.verdict == Verdict::Error)
                rep.error_records.push_back(rec);
            if (all_records)
                all_records->push_back(std::move(rec));
        }
    std::stable_sort(rep.counterexamples.begin(), rep.counterexamples.end(),
                     [](const InstanceRecord& x, const InstanceRecord& y) {
                         return x.ordinal < y.ordinal;
                     });

    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    return rep;
}

} // namespace hfold::verify
