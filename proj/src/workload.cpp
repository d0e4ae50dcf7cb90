#include "cloudletsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cloudletsim/errors.hpp"

namespace cloudletsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const TraceTable::Row& TraceTable::at(int avatar, int slot) const {
  const auto& seq = rows_[static_cast<std::size_t>(avatar) % rows_.size()];
  return seq[static_cast<std::size_t>(slot) % seq.size()];
}

TraceTable parse_trace(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw TraceError(name + ": empty trace file");
  if (trim(line) != "avatar_id,slot,u_cpu,u_mem,u_disk")
    throw TraceError(name + ":1: expected header avatar_id,slot,u_cpu,u_mem,u_disk");

  // avatar -> slot -> row; densified after the scan.
  std::map<long, std::map<long, TraceTable::Row>> parsed;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 5)
      throw TraceError(name + ":" + std::to_string(line_no) +
                       ": expected 5 comma-separated fields");
    long avatar, slot;
    TraceTable::Row row{};
    try {
      std::size_t pos = 0;
      avatar = std::stol(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument(fields[0]);
      slot = std::stol(fields[1], &pos);
      if (pos != fields[1].size()) throw std::invalid_argument(fields[1]);
      row.u_cpu = std::stod(fields[2], &pos);
      if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
      row.u_mem = std::stod(fields[3], &pos);
      if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
      row.u_disk = std::stod(fields[4], &pos);
      if (pos != fields[4].size()) throw std::invalid_argument(fields[4]);
    } catch (const std::exception&) {
      throw TraceError(name + ":" + std::to_string(line_no) +
                       ": malformed row '" + t + "'");
    }
    if (avatar < 0 || slot < 0)
      throw TraceError(name + ":" + std::to_string(line_no) +
                       ": negative avatar_id or slot");
    for (double u : {row.u_cpu, row.u_mem, row.u_disk}) {
      if (!(u >= 0.0 && u <= 1.0))
        throw TraceError(name + ":" + std::to_string(line_no) +
                         ": utilization outside [0,1]");
    }
    if (!parsed[avatar].emplace(slot, row).second)
      throw TraceError(name + ":" + std::to_string(line_no) +
                       ": duplicate (avatar_id, slot)");
  }
  if (parsed.empty()) throw TraceError(name + ": trace has no data rows");

  TraceTable table;
  long expect_avatar = 0;
  for (const auto& [avatar, slots] : parsed) {
    if (avatar != expect_avatar++)
      throw TraceError(name + ": avatar ids must be dense from 0 (missing " +
                       std::to_string(expect_avatar - 1) + ")");
    std::vector<TraceTable::Row> seq;
    long expect_slot = 0;
    for (const auto& [slot, row] : slots) {
      if (slot != expect_slot++)
        throw TraceError(name + ": avatar " + std::to_string(avatar) +
                         " slots must be dense from 0");
      seq.push_back(row);
    }
    table.rows_.push_back(std::move(seq));
  }
  return table;
}

TraceTable load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError(path + ": cannot open trace file");
  return parse_trace(in, path);
}

double sample_bandwidth_util(Rng& rng, double mu_mbps, double sigma,
                             double capacity_mbps) {
  const double demand =
      std::clamp(rng.normal(mu_mbps, sigma), 0.0, capacity_mbps);
  return demand / capacity_mbps;
}

double sample_dirty_rate(Rng& rng, double max_pages) {
  return rng.uniform(0.0, max_pages);
}

double dirty_rate_bits_per_s(double pages_per_slot, double page_size_bits,
                             double slot_seconds) {
  return pages_per_slot * page_size_bits / slot_seconds;
}

WorkloadModel::WorkloadModel(const WorkloadParams& params, int num_avatars,
                             Rng& setup_rng, std::optional<TraceTable> trace)
    : params_(params), trace_(std::move(trace)) {
  mu_.reserve(static_cast<std::size_t>(num_avatars));
  sigma_.reserve(static_cast<std::size_t>(num_avatars));
  for (int i = 0; i < num_avatars; ++i) {
    mu_.push_back(setup_rng.uniform(params_.bw_mu_range_lo, params_.bw_mu_range_hi));
    sigma_.push_back(std::sqrt(
        setup_rng.uniform(params_.bw_var_range_lo, params_.bw_var_range_hi)));
  }
  if (params_.dirty_rate_mode == DirtyRateMode::kFixed) {
    fixed_dirty_.reserve(static_cast<std::size_t>(num_avatars));
    for (int i = 0; i < num_avatars; ++i)
      fixed_dirty_.push_back(sample_dirty_rate(setup_rng, params_.dirty_max_pages));
  }
}

AvatarWorkload WorkloadModel::sample(int avatar, int slot, Rng& rng) const {
  AvatarWorkload w;
  if (trace_) {
    const TraceTable::Row& row = trace_->at(avatar, slot);
    w.u_cpu = row.u_cpu;
    w.u_mem = row.u_mem;
    w.u_disk = row.u_disk;
  } else {
    w.u_cpu = rng.uniform(params_.u_cpu_lo, params_.u_cpu_hi);
    w.u_mem = rng.uniform(params_.u_mem_lo, params_.u_mem_hi);
    w.u_disk = rng.uniform(params_.u_disk_lo, params_.u_disk_hi);
  }
  w.bw_mu_mbps = mu_[static_cast<std::size_t>(avatar)];
  w.bw_sigma = sigma_[static_cast<std::size_t>(avatar)];
  w.u_net = sample_bandwidth_util(rng, w.bw_mu_mbps, w.bw_sigma,
                                  params_.avatar.bw_capacity_mbps);
  w.dirty_rate_pages_per_slot =
      params_.dirty_rate_mode == DirtyRateMode::kFixed
          ? fixed_dirty_[static_cast<std::size_t>(avatar)]
          : sample_dirty_rate(rng, params_.dirty_max_pages);
  return w;
}

}  // namespace cloudletsim
