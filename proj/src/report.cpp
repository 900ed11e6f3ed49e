#include "crsn/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace crsn {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string transcript_csv_header() {
  return "scenario_digest,seed,period,phase,cluster_id,strategy,channel_id,"
         "sensing_j,switching_j,tx_j,rx_j,bits_delivered,interference_events\n";
}

namespace {

void append_row(std::ostringstream& os, const SimulationReport& report,
                const PeriodRecord& period, const char* phase,
                const TranscriptRecord& row) {
  os << report.config_digest << ',' << report.seed << ',' << period.period << ',' << phase
     << ',' << row.cluster_id << ',' << strategy_name(period.strategy) << ','
     << row.channel_id << ',' << format_number(row.ledger.sensing_j) << ','
     << format_number(row.ledger.switching_j) << ',' << format_number(row.ledger.tx_j) << ','
     << format_number(row.ledger.rx_j) << ',' << format_number(row.ledger.bits_delivered)
     << ',' << row.ledger.interference_events << '\n';
}

}  // namespace

std::string transcript_csv(const SimulationReport& report) {
  std::ostringstream os;
  os << transcript_csv_header();
  for (const auto& period : report.periods) {
    for (const auto& row : period.intra_transcript) append_row(os, report, period, "intra", row);
    for (const auto& row : period.inter_transcript) append_row(os, report, period, "inter", row);
  }
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  if (rows.empty()) return os.str();
  os << rows.front().sweep_name << ",strategy,mean_energy_j,ci95_j\n";
  for (const auto& row : rows)
    os << format_number(row.sweep_value) << ',' << row.strategy << ','
       << format_number(row.mean_energy_j) << ',' << format_number(row.ci95_j) << '\n';
  return os.str();
}

std::string run_manifest_json(const ScenarioConfig& config,
                              const std::vector<std::uint64_t>& seeds) {
  std::ostringstream os;
  os << "{\n"
     << "  \"scenario\": \"" << config.name << "\",\n"
     << "  \"digest\": \"" << config_digest(config) << "\",\n"
     << "  \"periods\": " << config.periods << ",\n"
     << "  \"seeds\": [";
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (i) os << ", ";
    os << seeds[i];
  }
  os << "]\n}\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write output file: " + tmp);
    out << content;
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing output file: " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace crsn
