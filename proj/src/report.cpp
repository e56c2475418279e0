#include "qcn/report.hpp"

#include <sstream>

#include "qcn/conflict_graph.hpp"

namespace qcn {

CodedLayout coded_layout_for(const SystemDescription& desc, const StorageSystem& base) {
  if (desc.coding) return layout_from_description(desc);
  return striped_layout(base);
}

CompareTable compare_volumes(const StorageSystem& base, const CodedLayout& layout, RegionOptions options) {
  const int T = base.num_chunks();
  struct Spec {
    const char* label;
    TrafficPattern pattern;
    bool mpr;
  };
  const Spec specs[] = {
      {"single_unicast", TrafficPattern::SingleUnicast, false},
      {"multiple_unicast", TrafficPattern::MultipleUnicast, false},
      {"multiple_unicast_mpr", TrafficPattern::MultipleUnicast, true},
      {"broadcast", TrafficPattern::Broadcast, false},
      {"broadcast_mpr", TrafficPattern::Broadcast, true},
      {"multicast", TrafficPattern::Multicast, false},
      {"multicast_mpr", TrafficPattern::Multicast, true},
  };
  CompareTable table;
  Rational sum = 0;
  for (const auto& s : specs) {
    CompareRow row;
    row.label = s.label;
    row.pattern = s.pattern;
    row.rx = s.mpr ? T : 1;
    StorageSystem uncoded = base.with_uniform_reception(row.rx);
    StorageSystem coded = coded_transform(uncoded, layout).system;
    row.uncoded = RateRegion(build_conflict_graph(uncoded, s.pattern), options).volume();
    row.coded = RateRegion(build_conflict_graph(coded, s.pattern), options).volume();
    Rational u = round_half_even(row.uncoded, 4);
    Rational c = round_half_even(row.coded, 4);
    if (u == 0) {
      // rounding can hide a tiny nonzero volume; fall back to exact values
      u = row.uncoded;
      c = row.coded;
    }
    if (u != 0)
      row.pct_delta = Rational(100 * (c - u) / u);
    else if (c != 0)
      row.delta_infinite = true;
    if (row.delta_infinite)
      table.average_infinite = true;
    else
      sum += row.pct_delta;
    table.rows.push_back(row);
  }
  table.average = Rational(sum / static_cast<int>(table.rows.size()));
  return table;
}

std::string format_compare(const CompareTable& table) {
  std::ostringstream os;
  os << "pattern\tuncoded\tcoded\tpct_delta\n";
  for (const auto& r : table.rows)
    os << r.label << "\t" << to_decimal(r.uncoded, 4) << "\t" << to_decimal(r.coded, 4) << "\t"
       << (r.delta_infinite ? std::string("inf") : to_decimal(r.pct_delta, 1)) << "\n";
  os << "average\t\t\t" << (table.average_infinite ? std::string("inf") : to_decimal(table.average, 1)) << "\n";
  return os.str();
}

}  // namespace qcn
