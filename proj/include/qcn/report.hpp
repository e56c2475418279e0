#pragma once

#include <string>
#include <vector>

#include "qcn/coded.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/system.hpp"

namespace qcn {

/// The layout from the description's [coding] section, else the striped layout.
CodedLayout coded_layout_for(const SystemDescription& desc, const StorageSystem& base);

struct CompareRow {
  std::string label;
  TrafficPattern pattern;
  int rx = 1;
  Rational uncoded = 0;
  Rational coded = 0;
  /// 100 (coded - uncoded) / uncoded on the 4-decimal rounded volumes; 0 when both are 0.
  Rational pct_delta = 0;
  bool delta_infinite = false;
};

struct CompareTable {
  std::vector<CompareRow> rows;
  Rational average = 0;
  bool average_infinite = false;
};

/// Seven rows: single unicast, multiple unicast, multiple unicast with T-MPR,
/// broadcast, broadcast with T-MPR, multicast, multicast with T-MPR.
CompareTable compare_volumes(const StorageSystem& base, const CodedLayout& layout, RegionOptions options = {});

/// "pattern<TAB>uncoded<TAB>coded<TAB>pct_delta" rows plus an average row.
std::string format_compare(const CompareTable& table);

}  // namespace qcn
