#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "hfold/report_io.hpp"
#include "hfold/verify.hpp"

using namespace hfold;
using namespace hfold::verify;

namespace {

IntSet set(std::vector<Int> v) { return IntSet::normalized(std::move(v)); }
HSpec hspec(std::vector<Int> v) { return HSpec::normalized(std::move(v)); }

GridConfig tiny_grid() {
    GridConfig cfg;
    cfg.k_lo = cfg.k_hi = 3;
    cfg.elem_lo = 1;
    cfg.elem_hi = 4;
    cfg.r_lo = cfg.r_hi = 1;
    cfg.t_lo = cfg.t_hi = 2;
    cfg.h_mode = HWindowMode::Explicit;
    cfg.h_lo = 1;
    cfg.h_hi = 2;
    return cfg;
}

Instance make_inst(std::vector<Int> a, std::vector<Int> h, Int r) {
    Instance inst;
    inst.a = set(std::move(a));
    inst.hs = hspec(std::move(h));
    inst.r = r;
    return inst;
}

} // namespace

TEST_CASE("enumeration is lexicographic with dense ordinals") {
    const auto cfg = tiny_grid();
    CHECK(count_instances(cfg) == 4);
    const auto insts = enumerate_instances(cfg);
    REQUIRE(insts.size() == 4);
    for (std::size_t i = 0; i < insts.size(); ++i)
        CHECK(insts[i].ordinal == static_cast<Int>(i));
    CHECK(insts.front().a.elements() == std::vector<Int>{1, 2, 3});
    CHECK(insts.front().hs.values() == std::vector<Int>{1, 2});
    CHECK(insts[1].a.elements() == std::vector<Int>{1, 2, 4});
    CHECK(insts[2].a.elements() == std::vector<Int>{1, 3, 4});
    CHECK(insts.back().a.elements() == std::vector<Int>{2, 3, 4});
}

TEST_CASE("dilation dedupe keeps only difference-normalized bases") {
    auto cfg = tiny_grid();
    cfg.elem_hi = 6;
    cfg.dedupe_dilation = true;
    const auto insts = enumerate_instances(cfg);
    auto has = [&](std::vector<Int> a) {
        return std::any_of(insts.begin(), insts.end(), [&](const Instance& i) {
            return i.a.elements() == a;
        });
    };
    CHECK(has({1, 2, 3}));
    CHECK(has({1, 2, 4}));
    CHECK(!has({2, 4, 6})); // dilation of {1,2,3}
    CHECK(!has({1, 3, 5})); // differences share a factor of 2
    CHECK(static_cast<Int>(insts.size()) < count_instances(cfg));
    // ordinals renumbered densely after filtering
    for (std::size_t i = 0; i < insts.size(); ++i)
        CHECK(insts[i].ordinal == static_cast<Int>(i));
}

TEST_CASE("regime filter drops everything when nothing matches") {
    auto cfg = tiny_grid(); // k = 3, max(H) = 2 <= (k-1)r - 1 = 1? no: window [1,2]
    cfg.regime_filter = {bounds::Regime::ZeroMain};
    CHECK(enumerate_instances(cfg).empty());
}

TEST_CASE("sampled enumeration is deterministic and a subset of the grid") {
    auto cfg = tiny_grid();
    cfg.elem_hi = 8;
    cfg.r_hi = 2;
    cfg.sample = 7;
    cfg.seed = 42;
    const auto one = enumerate_instances(cfg);
    const auto two = enumerate_instances(cfg);
    REQUIRE(one.size() == 7);
    REQUIRE(two.size() == 7);
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].a.elements() == two[i].a.elements());
        CHECK(one[i].hs.values() == two[i].hs.values());
        CHECK(one[i].r == two[i].r);
        CHECK(one[i].ordinal == static_cast<Int>(i));
    }
    // every sampled instance exists in the exhaustive stream
    auto full_cfg = cfg;
    full_cfg.sample = 0;
    const auto full = enumerate_instances(full_cfg);
    for (const auto& s : one)
        CHECK(std::any_of(full.begin(), full.end(), [&](const Instance& f) {
            return f.r == s.r && f.a.elements() == s.a.elements() &&
                   f.hs.values() == s.hs.values();
        }));
    // a sample larger than the grid degrades to the whole grid
    cfg.sample = 1'000'000;
    cfg.max_instances = 2'000'000;
    CHECK(enumerate_instances(cfg).size() == full.size());
}

TEST_CASE("instance cap") {
    auto cfg = tiny_grid();
    cfg.max_instances = 3;
    CHECK_THROWS_AS(enumerate_instances(cfg), CapExceededError);
    cfg.sample = 5; // sampling bypasses the raw-grid cap ...
    CHECK_THROWS_AS(enumerate_instances(cfg), CapExceededError); // ... but not a cap below the sample
    cfg.max_instances = 5;
    CHECK_NOTHROW(enumerate_instances(cfg));
}

TEST_CASE("config validation") {
    auto cfg = tiny_grid();
    cfg.k_lo = 5; // k range inverted
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = tiny_grid();
    cfg.elem_hi = 2; // window narrower than k
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = tiny_grid();
    cfg.require_zero = true; // zero outside [1,4]
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = tiny_grid();
    cfg.check_direct = false; // no direct checks, no claims
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = tiny_grid();
    cfg.workers = 0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = tiny_grid();
    cfg.h_mode = HWindowMode::Explicit;
    cfg.h_lo = 3;
    cfg.h_hi = 2;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("direct checks on known instances") {
    auto rec = check_direct(make_inst({1, 2, 3, 4, 5}, {2, 3}, 2));
    CHECK(rec.claim == "direct");
    CHECK(rec.regime == "MainTheorem");
    CHECK(rec.formula == 13);
    CHECK(rec.enumerated == 13);
    CHECK(rec.verdict == Verdict::Tight);

    rec = check_direct(make_inst({1, 2, 4, 8, 16}, {2, 3}, 2));
    CHECK(rec.verdict == Verdict::Held);
    CHECK(rec.enumerated > rec.formula);

    // the zero-window formula over-counts here: a genuine recorded violation
    rec = check_direct(make_inst({0, 1, 2, 3, 4, 5}, {3, 4}, 2));
    CHECK(rec.regime == "ZeroMain");
    CHECK(rec.formula == 19);
    CHECK(rec.enumerated == 18);
    CHECK(rec.verdict == Verdict::Violated);

    // negative elements: the bound regimes do not apply
    rec = check_direct(make_inst({-1, 1, 2, 3, 4}, {2, 3}, 2));
    CHECK(rec.verdict == Verdict::Inapplicable);

    // min(H) beyond kr: no regime claims this window
    rec = check_direct(make_inst({1, 2, 3, 4, 5}, {11, 12}, 2));
    CHECK(rec.verdict == Verdict::Inapplicable);
    CHECK(!rec.detail.empty());
}

TEST_CASE("inverse checks on known instances") {
    auto rec = check_inverse(make_inst({1, 2, 3, 4, 5, 6}, {2, 3}, 2),
                             structure::ClaimKind::Main);
    CHECK(rec.claim == "main");
    CHECK(rec.verdict == Verdict::Tight);
    CHECK(!rec.conclusion_violated);

    rec = check_inverse(make_inst({1, 2, 3, 4, 5, 6}, {2, 4}, 2),
                        structure::ClaimKind::Main);
    CHECK(rec.verdict == Verdict::Held);

    rec = check_inverse(make_inst({1, 2, 3, 4, 5}, {2, 3}, 2),
                        structure::ClaimKind::Main);
    CHECK(rec.verdict == Verdict::Inapplicable); // k = 5 < 6

    // the zero-window claim inherits the over-counted bound
    rec = check_inverse(make_inst({0, 1, 2, 3, 4, 5, 6}, {3, 4}, 2),
                        structure::ClaimKind::ZeroMain);
    CHECK(rec.formula == 23);
    CHECK(rec.enumerated == 22);
    CHECK(rec.verdict == Verdict::Violated);
}

TEST_CASE("campaign reports are byte-identical across worker counts") {
    GridConfig cfg = tiny_grid();
    cfg.elem_hi = 7;
    cfg.r_hi = 2;
    cfg.h_mode = HWindowMode::FullRange;
    cfg.inverse_claims = {structure::ClaimKind::Main};

    auto c1 = cfg;
    c1.workers = 1;
    auto c3 = cfg;
    c3.workers = 3;
    const auto r1 = run_campaign(c1);
    const auto r3 = run_campaign(c3);
    CHECK(r1.workers_used == 1);
    CHECK(r3.workers_used == 3);
    CHECK(report::report_body_json(r1).dump(2) == report::report_body_json(r3).dump(2));
}

TEST_CASE("campaign tallies account for every record") {
    GridConfig cfg = tiny_grid();
    cfg.elem_hi = 6;
    cfg.r_hi = 2;
    cfg.h_mode = HWindowMode::FullRange;
    std::vector<InstanceRecord> records;
    const auto rep = run_campaign(cfg, &records);
    CHECK(rep.instances_checked ==
          static_cast<Int>(enumerate_instances(cfg).size()));
    REQUIRE(rep.tallies.count("direct") == 1);
    const auto& tal = rep.tallies.at("direct");
    CHECK(tal.checked == rep.instances_checked);
    CHECK(tal.checked ==
          tal.held + tal.tight + tal.violated + tal.inapplicable + tal.errors);
    CHECK(static_cast<Int>(records.size()) == tal.checked);
    // recheck independently
    Int tight = 0, held = 0;
    for (const auto& inst : enumerate_instances(cfg)) {
        const auto rec = check_direct(inst);
        tight += rec.verdict == Verdict::Tight;
        held += rec.verdict == Verdict::Held;
    }
    CHECK(tal.tight == tight);
    CHECK(tal.held == held);
}

TEST_CASE("counterexamples replay to the same verdict") {
    GridConfig cfg;
    cfg.k_lo = cfg.k_hi = 6;
    cfg.elem_lo = 0;
    cfg.elem_hi = 5;
    cfg.r_lo = cfg.r_hi = 2;
    cfg.t_lo = cfg.t_hi = 2;
    cfg.h_mode = HWindowMode::BelowZeroMain;
    cfg.require_zero = true;
    const auto rep = run_campaign(cfg);
    REQUIRE(!rep.counterexamples.empty());
    // known head of the list: H = {3,4} with formula 19 vs enumerated 18
    bool found = false;
    for (const auto& ce : rep.counterexamples) {
        const auto again = check_direct(Instance{ce.ordinal, ce.a, ce.hs, ce.r});
        CHECK(again.verdict == ce.verdict);
        CHECK(again.formula == ce.formula);
        CHECK(again.enumerated == ce.enumerated);
        if (ce.hs.values() == std::vector<Int>{3, 4} && ce.formula == 19 &&
            ce.enumerated == 18)
            found = true;
    }
    CHECK(found);
    // counterexamples arrive in enumeration order
    CHECK(std::is_sorted(rep.counterexamples.begin(), rep.counterexamples.end(),
                         [](const InstanceRecord& x, const InstanceRecord& y) {
                             return x.ordinal < y.ordinal;
                         }));
}

TEST_CASE("sampled campaigns reproduce for a fixed seed") {
    auto cfg = tiny_grid();
    cfg.elem_hi = 8;
    cfg.sample = 9;
    cfg.seed = 1234;
    const auto a = run_campaign(cfg);
    const auto b = run_campaign(cfg);
    CHECK(report::report_body_json(a).dump() == report::report_body_json(b).dump());
    CHECK(a.instances_checked == 9);
}

TEST_CASE("report JSON round-trips") {
    auto cfg = tiny_grid();
    cfg.inverse_claims = {structure::ClaimKind::SingleFold};
    cfg.t_lo = cfg.t_hi = 1;
    const auto rep = run_campaign(cfg);
    const auto file = report::report_file_json(rep);
    CHECK(file.contains("body"));
    CHECK(file.contains("run"));
    CHECK(file["run"].contains("wall_ms"));
    const auto reparsed = nlohmann::ordered_json::parse(file.dump());
    CHECK(reparsed.dump() == file.dump());
    const auto& body = file["body"];
    CHECK(body["config"]["k"] == "3..3");
    CHECK(!body["config"].contains("workers")); // run facts stay out of the body
}

TEST_CASE("CSV rendering") {
    std::vector<InstanceRecord> records;
    auto cfg = tiny_grid();
    run_campaign(cfg, &records);
    const std::string csv = report::render_csv(records);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "r,k,A,H,claim,regime,formula,enumerated,verdict");
    std::size_t rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == records.size());
}

TEST_CASE("config text round-trips through the parser") {
    std::istringstream in(
        "# campaign grid\n"
        "k = 3..4\n"
        "elements = 0..6\n"
        "r = 1..2\n"
        "t = 2\n"
        "h_window = zero-main\n"
        "require_zero = true\n"
        "dedupe = true\n"
        "claims = zero-main\n"
        "direct = false\n"
        "max_instances = 50000\n"
        "sample = 10\n"
        "seed = 99\n");
    const auto cfg = report::parse_grid_config(in);
    CHECK(cfg.k_lo == 3);
    CHECK(cfg.k_hi == 4);
    CHECK(cfg.elem_lo == 0);
    CHECK(cfg.elem_hi == 6);
    CHECK(cfg.r_hi == 2);
    CHECK(cfg.h_mode == HWindowMode::BelowZeroMain);
    CHECK(cfg.require_zero);
    CHECK(cfg.dedupe_dilation);
    CHECK(!cfg.check_direct);
    REQUIRE(cfg.inverse_claims.size() == 1);
    CHECK(cfg.inverse_claims[0] == structure::ClaimKind::ZeroMain);
    CHECK(cfg.max_instances == 50000);
    CHECK(cfg.sample == 10);
    CHECK(cfg.seed == 99);

    std::istringstream bad("k = 3\nunknown_key = 1\n");
    CHECK_THROWS_AS(report::parse_grid_config(bad), ConfigError);
    std::istringstream bad2("k = \n");
    CHECK_THROWS_AS(report::parse_grid_config(bad2), ConfigError);
}

TEST_CASE("range and list parsing") {
    CHECK(report::parse_range("5") == std::pair<Int, Int>{5, 5});
    CHECK(report::parse_range("3..6") == std::pair<Int, Int>{3, 6});
    CHECK(report::parse_int_list("1,4,7..9") ==
          std::vector<Int>{1, 4, 7, 8, 9});
    CHECK(report::parse_int_list("1,,2") ==
          std::vector<Int>{1, 2}); // empty parts are tolerated
    CHECK_THROWS_AS(report::parse_range("x"), ConfigError);
    CHECK_THROWS_AS(report::parse_int_list("1,x"), ConfigError);
    CHECK_THROWS_AS(report::parse_int_list("9..5"), ConfigError);
}
