#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "crsn/report.hpp"
#include "crsn/sweep.hpp"

using namespace crsn;

#ifndef CRSN_CONFIG_DIR
#define CRSN_CONFIG_DIR "configs"
#endif

namespace {

ScenarioConfig table2() {
  return load_config(std::string(CRSN_CONFIG_DIR) + "/table2.json");
}

ScenarioConfig desk_config() {
  ScenarioConfig c = table2();
  c.node_count = 30;
  c.cluster_count = 3;
  c.channel_count = 4;
  c.coop_set_size = 2;
  c.periods = 2;
  c.seeds = 2;
  return c;
}

}  // namespace

TEST_CASE("seed derivation separates streams") {
  CHECK(derive_seed(1, 0, 0, 0) != derive_seed(1, 1, 0, 0));
  CHECK(derive_seed(1, 0, 0, 0) != derive_seed(2, 0, 0, 0));
  CHECK(derive_seed(1, 2, 3, 4) == derive_seed(1, 2, 3, 4));
}

TEST_CASE("bundled table2 config loads with its documented values") {
  const ScenarioConfig c = table2();
  CHECK(c.node_count == 200);
  CHECK(c.cluster_count == 10);
  CHECK(c.channel_count == 15);
  CHECK(c.radius_m == doctest::Approx(250.0));
  CHECK(c.data_bits_mean == doctest::Approx(5e3));
  CHECK(c.bandwidth_hz_mean == doctest::Approx(2e6));
  CHECK(c.member_power_w == doctest::Approx(0.02));
  CHECK(c.head_power_w == doctest::Approx(0.04));
  CHECK(c.max_power_w == doctest::Approx(0.2));
  CHECK(c.circuit_power_w == doctest::Approx(0.005));
  CHECK(c.rx_energy_j_per_bit == doctest::Approx(5e-9));
  CHECK(c.sense_energy_j == doctest::Approx(1.31e-4));
  CHECK(c.switch_energy_j == doctest::Approx(1e-5));
  CHECK(c.p_on == doctest::Approx(0.6));
  CHECK(c.false_alarm_prob == doctest::Approx(0.05));
  CHECK(c.cad_mean_s == doctest::Approx(0.1));
  CHECK(c.aggregation_rate == doctest::Approx(0.7));
  CHECK(c.path_loss_exponent == doctest::Approx(3.0));
}

TEST_CASE("config loader rejects unknown keys and missing fields") {
  const std::string path = "/tmp/crsn_bad_config.json";
  {
    std::ofstream out(path);
    out << R"({"name":"bad","topology":{"node_count":10,"radius_m":100,"cluster_count":2,)"
        << R"("data_kb_mean":5,"bogus_key":1},"channels":{},"cognitive":{},"link":{},)"
        << R"("experiment":{}})";
  }
  CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("bogus_key"),
                       std::runtime_error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config("/tmp/definitely_missing_crsn.json"), std::runtime_error);
}

TEST_CASE("sweep spec arithmetic") {
  SweepSpec s{SweepVariable::LossRate, 0.0, 0.5, 0.05};
  CHECK(s.points().size() == 11);
  CHECK(s.points().front() == doctest::Approx(0.0));
  CHECK(s.points().back() == doctest::Approx(0.5));
}

TEST_CASE("topology sampling is deterministic and in the disc") {
  const ScenarioConfig c = desk_config();
  auto rng1 = make_stream(5, 0xD15C, 0, 0);
  auto rng2 = make_stream(5, 0xD15C, 0, 0);
  const Network a = sample_topology(c, rng1);
  const Network b = sample_topology(c, rng2);
  REQUIRE(a.nodes.size() == static_cast<size_t>(c.node_count));
  REQUIRE(a.clusters.size() == static_cast<size_t>(c.cluster_count));
  size_t members = 0;
  for (size_t i = 0; i < a.clusters.size(); ++i) {
    members += a.clusters[i].member_ids.size();
    CHECK(a.clusters[i].head_id == b.clusters[i].head_id);
  }
  CHECK(members + a.clusters.size() == a.nodes.size());
  for (size_t j = 0; j < a.nodes.size(); ++j) {
    CHECK(a.nodes[j].link_gain.size() == static_cast<size_t>(c.channel_count) + 1);
    for (const auto& [ch, g] : a.nodes[j].link_gain) {
      CHECK(g == b.nodes[j].link_gain.at(ch));
      CHECK(g >= 0);
    }
  }
}

TEST_CASE("exponential fading has unit mean") {
  std::mt19937_64 rng(99);
  std::exponential_distribution<double> fading(1.0);
  double sum = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += fading(rng);
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("identical (config, seed) gives byte-identical transcripts") {
  const ScenarioConfig c = desk_config();
  const auto r1 = run_scenario(c, 42);
  const auto r2 = run_scenario(c, 42);
  CHECK(transcript_csv(r1) == transcript_csv(r2));
  const auto r3 = run_scenario(c, 43);
  CHECK(transcript_csv(r1) != transcript_csv(r3));
}

TEST_CASE("report totals equal the sum of their ledgers") {
  const ScenarioConfig c = desk_config();
  const auto report = run_scenario(c, 7);
  for (StrategyKind kind : c.strategies) {
    double total = 0;
    for (const auto& p : report.periods) {
      if (p.strategy != kind) continue;
      for (const auto& l : p.intra_ledgers) total += l.total();
      total += p.inter_ledger.total();
    }
    CHECK(report.total_j(kind) == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("zero periods produce an empty report carrying the digest") {
  ScenarioConfig c = desk_config();
  c.periods = 0;
  const auto report = run_scenario(c, 1);
  CHECK(report.periods.empty());
  CHECK(report.config_digest == config_digest(c));
}

TEST_CASE("config digest reacts to any field change") {
  ScenarioConfig c = desk_config();
  const std::string base = config_digest(c);
  ScenarioConfig d = c;
  d.intra_loss += 0.01;
  CHECK(config_digest(d) != base);
  d = c;
  d.channel_count += 1;
  CHECK(config_digest(d) != base);
  d = c;
  d.strategies.pop_back();
  CHECK(config_digest(d) != base);
}

TEST_CASE("sweep point application") {
  ScenarioConfig c = desk_config();
  c.sweep = {SweepVariable::DataScale, 1, 3, 1};
  const auto scaled = apply_sweep_point(c, 2.0);
  CHECK(scaled.data_bits_mean == doctest::Approx(2 * c.data_bits_mean));
  CHECK(scaled.data_bits_var == doctest::Approx(4 * c.data_bits_var));
  c.sweep.variable = SweepVariable::ChannelCount;
  CHECK(apply_sweep_point(c, 7.0).channel_count == 7);
  c.sweep.variable = SweepVariable::LossRateInter;
  CHECK(apply_sweep_point(c, 0.3).inter_loss == doctest::Approx(0.3));
  CHECK(apply_sweep_point(c, 0.3).intra_loss == doctest::Approx(c.intra_loss));
}

TEST_CASE("csv formatting is locale-independent and stable") {
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1e-9) == "1e-09");
  CHECK(format_number(123456789012.0) == "123456789012");
}

TEST_CASE("atomic writes leave no temp file behind") {
  const std::string path = "/tmp/crsn_atomic_test.txt";
  write_file_atomic(path, "hello\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "hello\n");
  CHECK_FALSE(std::ifstream(path + ".tmp").good());
  std::remove(path.c_str());
}
