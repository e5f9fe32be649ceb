#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "test_helpers.hpp"
#include "uavsec/config.hpp"

using namespace uavsec;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

const std::string kMinimalConfig =
    "strategy.kind = direct_only\n"
    "nodes.base_station.primary.position = 0,0,50\n"
    "nodes.eavesdropper.position = 300,0,0\n";

bool has_default(const ScenarioConfig& config, const std::string& prefix) {
    return std::any_of(config.applied_defaults.begin(), config.applied_defaults.end(),
                       [&](const std::string& d) { return d.starts_with(prefix); });
}

} // namespace

TEST_CASE("minimal config gets defaults applied and echoed", "[config]") {
    const ScenarioConfig config = parse_config(kMinimalConfig);
    CHECK(config.channel.carrier_frequency_hz == 2e9);
    CHECK(has_default(config, "channel.carrier_frequency_hz = 2e+09"));
    CHECK(has_default(config, "channel.los_c = 9.61"));
    CHECK(has_default(config, "mobility.dx_m = 15"));
    CHECK(has_default(config, "fading.g2g.mode = monte_carlo"));
    CHECK(has_default(config, "seed = 1"));
    CHECK(config.g2g_fading.kind == FadingKind::MonteCarlo);
    CHECK(config.g2g_fading.realizations == 1000);
    CHECK(config.a2g_fading.kind == FadingKind::MeanOnly);
    CHECK(config.nodes.base_stations.size() == 1);
    CHECK(config.nodes.base_stations[0].tx_power_w == 0.1);
    CHECK(config.mobility.iot_start == config.nodes.iot_start);
    CHECK(config.output.threshold_mbps == 50.0);
}

TEST_CASE("bundled presets load the tabulated scenario", "[config]") {
    SECTION("handover preset") {
        const ScenarioConfig c = load_config(test_helpers::preset_path("table1_handover.cfg"));
        REQUIRE(c.nodes.base_stations.size() == 2);
        CHECK(c.nodes.base_stations[0].id == "primary");
        CHECK(c.nodes.base_stations[0].position == Position3D{0, 0, 50});
        CHECK(c.nodes.base_stations[1].position == Position3D{1400, 0, 50});
        CHECK(c.nodes.base_stations[0].tx_power_w == 0.1);
        CHECK(c.nodes.eavesdropper == Position3D{300, 0, 0});
        CHECK(c.nodes.iot_start == Position3D{0, 0, 0});
        CHECK(c.nodes.uav_tx_power_w == 0.01);
        CHECK(c.mobility.dx == 15.0);
        CHECK(c.mobility.uav_height == 20.0);
        CHECK(c.mobility.n_steps == 100);
        CHECK(c.channel.bandwidth_hz == 10e6);
        CHECK_THAT(c.channel.noise_power_w(), WithinRel(1e-12, 1e-12));
        CHECK(c.strategy.kind == StrategyKind::Handover);
        CHECK(c.g2g_fading.kind == FadingKind::MonteCarlo);
        CHECK(c.g2g_fading.realizations == 1000);
        // carrier frequency is not tabulated: the default applies and is flagged
        CHECK(has_default(c, "channel.carrier_frequency_hz"));
    }
    SECTION("relay preset") {
        const ScenarioConfig c = load_config(test_helpers::preset_path("table1_relay.cfg"));
        CHECK(c.strategy.kind == StrategyKind::UavRelay);
        CHECK(c.strategy.speed_rate == 1.0);
        CHECK(c.nodes.base_stations.size() == 1);
    }
}

TEST_CASE("validation errors carry the field path", "[config]") {
    SECTION("zero step size") {
        const std::string text = kMinimalConfig + "mobility.dx_m = 0\n";
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("mobility.dx_m"));
    }
    SECTION("negative power") {
        const std::string text = kMinimalConfig + "nodes.uav.tx_power_w = -1\n";
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("nodes.uav.tx_power_w"));
    }
    SECTION("excess-loss ordering") {
        const std::string text = kMinimalConfig + "channel.eta_nlos_db = 0.5\n";
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("channel.eta_nlos_db"));
    }
    SECTION("handover needs two stations") {
        std::string text = kMinimalConfig;
        text.replace(text.find("direct_only"), 11, "handover");
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("strategy.kind"));
    }
    SECTION("airborne device start") {
        const std::string text = kMinimalConfig + "nodes.iot_start.position = 0,0,5\n";
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("nodes.iot_start.position"));
    }
    SECTION("monte carlo realization counts must agree") {
        const std::string text = kMinimalConfig +
                                 "fading.g2g.mode = monte_carlo\nfading.g2g.realizations = 10\n"
                                 "fading.a2g.mode = monte_carlo\nfading.a2g.realizations = 20\n";
        CHECK_THROWS_WITH(parse_config(text), ContainsSubstring("fading.a2g.realizations"));
    }
}

TEST_CASE("strict parsing", "[config]") {
    SECTION("unknown keys are rejected") {
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "channel.frequency = 1\n"),
                          ContainsSubstring("unknown config key"));
    }
    SECTION("duplicate keys are rejected") {
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "seed = 1\nseed = 2\n"),
                          ContainsSubstring("duplicate key"));
    }
    SECTION("missing '=' reports the line number") {
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "mobility.dx_m 15\n"),
                          ContainsSubstring("line 4"));
    }
    SECTION("bad numbers name the field") {
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "mobility.dx_m = fifteen\n"),
                          ContainsSubstring("mobility.dx_m"));
    }
    SECTION("bad positions name the field") {
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "nodes.iot_start.position = 0,0\n"),
                          ContainsSubstring("nodes.iot_start.position"));
    }
    SECTION("bad enum values") {
        CHECK_THROWS_WITH(parse_config("strategy.kind = tunnel\n"),
                          ContainsSubstring("strategy.kind"));
        CHECK_THROWS_WITH(parse_config(kMinimalConfig + "fading.g2g.mode = fancy\n"),
                          ContainsSubstring("fading.g2g.mode"));
    }
    SECTION("required keys") {
        CHECK_THROWS_WITH(parse_config("nodes.base_station.a.position = 0,0,50\n"
                                       "nodes.eavesdropper.position = 1,0,0\n"),
                          ContainsSubstring("strategy.kind"));
        CHECK_THROWS_WITH(parse_config("strategy.kind = direct_only\n"
                                       "nodes.eavesdropper.position = 1,0,0\n"),
                          ContainsSubstring("base station"));
        CHECK_THROWS_WITH(parse_config("strategy.kind = direct_only\n"
                                       "nodes.base_station.a.position = 0,0,50\n"),
                          ContainsSubstring("nodes.eavesdropper.position"));
    }
    SECTION("comments and blank lines are tolerated") {
        const ScenarioConfig c = parse_config("# leading comment\n\n" + kMinimalConfig +
                                              "mobility.dx_m = 5   # trailing comment\n");
        CHECK(c.mobility.dx == 5.0);
    }
    SECTION("missing file") {
        CHECK_THROWS_AS(load_config("/nonexistent/uavsec.cfg"), ConfigError);
    }
}

TEST_CASE("dump and reload round-trips the scenario", "[config]") {
    ScenarioConfig original = test_helpers::urban_config(StrategyKind::UavRelay);
    original.strategy.speed_rate = 0.75;
    original.mobility.speed_rate = 0.75;
    original.seed = 987654321;
    original.g2g_fading = {FadingKind::MonteCarlo, 250};
    original.relay_half_duplex_penalty = true;
    original.output.path = "out/testtrace.csv";
    original.output.threshold_mbps = 42.0;

    const std::string dumped = dump_config(original);
    const ScenarioConfig reloaded = parse_config(dumped);
    CHECK(dump_config(reloaded) == dumped);
    CHECK(reloaded.applied_defaults.empty());
    CHECK(reloaded.seed == original.seed);
    CHECK(reloaded.strategy.speed_rate == 0.75);
    CHECK(reloaded.relay_half_duplex_penalty);
    CHECK(reloaded.output.path == original.output.path);
    CHECK(compute_config_hash(reloaded) == compute_config_hash(original));
}

TEST_CASE("config hashes distinguish scenarios", "[config]") {
    const ScenarioConfig a = parse_config(kMinimalConfig);
    const ScenarioConfig b = parse_config(kMinimalConfig + "seed = 2\n");
    CHECK(a.config_hash != 0);
    CHECK(a.config_hash != b.config_hash);
    CHECK(a.config_hash == parse_config(kMinimalConfig).config_hash);
}
