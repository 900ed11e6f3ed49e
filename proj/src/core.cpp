#include "crsn/core.hpp"

#include <sstream>

namespace crsn {

std::vector<std::string> validate_scenario(const Network& net,
                                           const std::vector<Channel>& channels,
                                           const CognitiveParams& params) {
  std::vector<std::string> report;
  auto fail = [&report](const std::string& msg) { report.push_back(msg); };

  bool have_c0 = false;
  for (const auto& ch : channels) {
    if (!ch.licensed()) have_c0 = true;
  }
  if (!have_c0) fail("no license-free channel C0 configured");

  size_t min_members = static_cast<size_t>(-1);
  for (size_t i = 0; i < net.clusters.size(); ++i) {
    const auto& cluster = net.clusters[i];
    min_members = std::min(min_members, cluster.member_ids.size());
    for (int m : cluster.member_ids) {
      if (m < 0 || static_cast<size_t>(m) >= net.nodes.size()) {
        std::ostringstream os;
        os << "cluster " << i << ": member " << m << " out of range";
        fail(os.str());
        continue;
      }
      if (!cluster.packet_loss_c0.count(m)) {
        std::ostringstream os;
        os << "cluster " << i << ": member " << m << " missing C0 packet loss";
        fail(os.str());
      }
      if (cluster.residual_bits.count(m) &&
          cluster.residual_bits.at(m) > net.node(m).data_bits + 1e-9) {
        std::ostringstream os;
        os << "cluster " << i << ": member " << m << " residual exceeds generated data";
        fail(os.str());
      }
    }
    if (cluster.head_id < 0 || static_cast<size_t>(cluster.head_id) >= net.nodes.size()) {
      std::ostringstream os;
      os << "cluster " << i << ": head out of range";
      fail(os.str());
    }
  }
  if (!net.clusters.empty() && static_cast<size_t>(params.coop_set_size) > min_members) {
    std::ostringstream os;
    os << "cooperative sensing set size " << params.coop_set_size
       << " exceeds smallest cluster size " << min_members;
    fail(os.str());
  }
  return report;
}

}  // namespace crsn
