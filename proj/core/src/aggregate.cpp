#include "shc/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "shc/dimacs.hpp"
#include "shc/error.hpp"

namespace shc {

std::optional<GroupBy> group_by_from_string(std::string_view s) noexcept {
  if (s == "algo") return GroupBy::Algo;
  if (s == "regime") return GroupBy::AlgoRegime;
  if (s == "n") return GroupBy::AlgoNBucket;
  if (s == "rho") return GroupBy::AlgoRhoBucket;
  if (s == "k") return GroupBy::AlgoK;
  return std::nullopt;
}

std::string_view to_string(GroupBy g) noexcept {
  switch (g) {
    case GroupBy::Algo: return "algo";
    case GroupBy::AlgoRegime: return "regime";
    case GroupBy::AlgoNBucket: return "n";
    case GroupBy::AlgoRhoBucket: return "rho";
    case GroupBy::AlgoK: return "k";
  }
  return "unknown";
}

std::size_t histogram_bin(double alpha) noexcept {
  if (!(alpha > 0.0)) return 0;
  const auto bin = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(kHistogramBins)));
  return std::min(bin, kHistogramBins - 1);
}

namespace {

struct GroupKey {
  std::string algo;
  double order = 0.0;
  std::string label;

  bool operator<(const GroupKey& o) const {
    if (algo != o.algo) return algo < o.algo;
    return order < o.order;
  }
};

GroupKey key_of(const ExperimentRecord& r, GroupBy g) {
  switch (g) {
    case GroupBy::Algo:
      return {r.algo, 0.0, ""};
    case GroupBy::AlgoRegime:
      return {r.algo, static_cast<double>(r.regime), std::string(to_string(r.regime))};
    case GroupBy::AlgoNBucket: {
      const std::size_t lo = r.n / kNBucketWidth * kNBucketWidth;
      return {r.algo, static_cast<double>(lo), std::to_string(lo)};
    }
    case GroupBy::AlgoRhoBucket: {
      auto idx = static_cast<std::size_t>(std::floor(r.rho * static_cast<double>(kRhoBuckets)));
      idx = std::min(idx, kRhoBuckets - 1);
      const double lo = static_cast<double>(idx) / static_cast<double>(kRhoBuckets);
      return {r.algo, lo, format_real(lo)};
    }
    case GroupBy::AlgoK:
      return {r.algo, static_cast<double>(r.k), std::to_string(r.k)};
  }
  return {r.algo, 0.0, ""};
}

std::string_view key_column(GroupBy g) {
  switch (g) {
    case GroupBy::Algo: return "";
    case GroupBy::AlgoRegime: return "regime";
    case GroupBy::AlgoNBucket: return "n_bucket";
    case GroupBy::AlgoRhoBucket: return "rho_bucket";
    case GroupBy::AlgoK: return "k";
  }
  return "";
}

std::string format_optional(const std::optional<double>& x) { return x ? format_real(*x) : "NA"; }

}  // namespace

SummaryTable aggregate(std::span<const ExperimentRecord> records, GroupBy group_by) {
  if (records.empty()) throw Error(ErrorCode::EmptyGroup, "no records to aggregate");

  struct Acc {
    std::size_t count = 0;
    double alpha = 0.0;
    double acd = 0.0;
    std::size_t complete = 0;
    double acd_complete = 0.0;
    std::array<std::size_t, kHistogramBins> hist{};
  };
  std::map<GroupKey, Acc> groups;
  std::set<std::string> algos;
  for (const auto& r : records) {
    auto& a = groups[key_of(r, group_by)];
    ++a.count;
    a.alpha += r.alpha;
    a.acd += r.acd;
    if (r.happy == r.n) {
      ++a.complete;
      a.acd_complete += r.acd;
    }
    ++a.hist[histogram_bin(r.alpha)];
    algos.insert(r.algo);
  }

  if (group_by == GroupBy::AlgoRegime) {
    for (const auto& algo : algos) {
      for (Regime reg : {Regime::Mild, Regime::Intermediate, Regime::Tight}) {
        groups.try_emplace(GroupKey{algo, static_cast<double>(reg), std::string(to_string(reg))});
      }
    }
  }

  SummaryTable table;
  table.group_by = group_by;
  for (const auto& [key, a] : groups) {
    SummaryRow row;
    row.algo = key.algo;
    row.key = key.label;
    row.count = a.count;
    row.histogram = a.hist;
    if (a.count == 0) {
      row.empty_group = true;
    } else {
      row.mean_alpha = a.alpha / static_cast<double>(a.count);
      row.mean_acd = a.acd / static_cast<double>(a.count);
      if (a.complete > 0) row.mean_acd_complete = a.acd_complete / static_cast<double>(a.complete);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(std::ostream& out, const SummaryTable& table, bool with_histogram) {
  const auto key_col = key_column(table.group_by);
  out << "algo";
  if (!key_col.empty()) out << ',' << key_col;
  out << ",count,mean_alpha,mean_acd,mean_acd_complete";
  if (with_histogram) {
    for (std::size_t b = 0; b < kHistogramBins; ++b) out << ",hist_" << b;
  }
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.algo;
    if (!key_col.empty()) out << ',' << row.key;
    out << ',' << row.count;
    if (row.empty_group) {
      out << ",NA,NA,NA";
    } else {
      out << ',' << format_real(row.mean_alpha) << ',' << format_real(row.mean_acd) << ','
          << format_optional(row.mean_acd_complete);
    }
    if (with_histogram) {
      for (std::size_t c : row.histogram) out << ',' << c;
    }
    out << '\n';
  }
}

WelchMatrix welch_matrix(std::span<const ExperimentRecord> records) {
  std::map<std::string, std::vector<std::pair<std::string, double>>> by_algo;
  for (const auto& r : records) by_algo[r.algo].emplace_back(r.instance_id, r.alpha);

  WelchMatrix m;
  std::vector<std::vector<double>> samples;
  for (auto& [algo, values] : by_algo) {
    std::sort(values.begin(), values.end());
    m.algos.push_back(algo);
    std::vector<double> alphas;
    for (const auto& [id, a] : values) alphas.push_back(a);
    samples.push_back(std::move(alphas));
  }
  const std::size_t a = m.algos.size();
  m.cells.assign(a, std::vector<WelchResult>(a));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      if (samples[i].size() < 2 || samples[j].size() < 2) {
        m.cells[i][j] = WelchResult{0.0, 0.0, std::nan("")};
      } else {
        m.cells[i][j] = welch_t_test(samples[i], samples[j]);
      }
    }
  }
  return m;
}

void write_welch_csv(std::ostream& out, const WelchMatrix& m) {
  out << "algo";
  for (const auto& a : m.algos) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < m.algos.size(); ++i) {
    out << m.algos[i];
    for (const auto& cell : m.cells[i]) {
      out << ',' << (std::isnan(cell.p_value) ? std::string("NA") : format_real(cell.p_value));
    }
    out << '\n';
  }
}

}  // namespace shc
