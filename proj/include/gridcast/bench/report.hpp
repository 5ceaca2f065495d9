#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridcast/crossval.hpp"

namespace gridcast::bench {

/// One ledger file may hold several schemes; rows are grouped per scheme in
/// file order.
std::vector<crossval::TrialLedger> read_ledger_csv(const std::filesystem::path& path);

struct ReportSummary {
  std::size_t ledgers = 0;
  std::size_t radar_rows = 0;
  std::size_t timing_rows = 0;
  bool size_sweep = false;
};

/// Renders radar.csv/svg and timing.csv from `<run_dir>/ledgers/*.csv`, and
/// size_sweep.svg when size_sweep.csv is present.
ReportSummary make_report(const std::filesystem::path& run_dir);

}  // namespace gridcast::bench
