#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "repchar/pipeline.hpp"

namespace repchar {

// Deterministic row order for all output formats: by dimension, then
// lexicographically by Dynkin label.
inline std::vector<std::pair<DynkinLabel, TableRow>> ordered_rows(
    const MultiplicityTable& table) {
  std::vector<std::pair<DynkinLabel, TableRow>> rows(table.rows.begin(),
                                                     table.rows.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second.dimension, a.first.q) <
           std::tie(b.second.dimension, b.first.q);
  });
  return rows;
}

inline nlohmann::ordered_json table_to_json(const MultiplicityTable& table,
                                            int spin_filter = -1) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& [label, row] : ordered_rows(table)) {
    if (spin_filter >= 0 &&
        row.multiplicities[static_cast<std::size_t>(spin_filter)] == 0)
      continue;
    nlohmann::ordered_json r;
    r["dynkin"] = {label.q[0], label.q[1], label.q[2], label.q[3]};
    r["dimension"] = static_cast<std::int64_t>(row.dimension);
    r["statistics"] = row.fermionic ? "fermion" : "boson";
    std::vector<std::int64_t> mults;
    for (const auto& m : row.multiplicities)
      mults.push_back(static_cast<std::int64_t>(m));
    r["multiplicities"] = mults;
    doc["rows"].push_back(std::move(r));
  }
  doc["checks"]["grand_total"] =
      static_cast<std::int64_t>(table.weighted_total());
  doc["checks"]["rows"] = table.rows.size();
  return doc;
}

inline std::string table_to_csv(const MultiplicityTable& table,
                                int spin_filter = -1) {
  std::ostringstream os;
  os << "q1,q2,q3,q4,dimension,statistics";
  for (int n = 0; n < kNumSpins; ++n) os << ",spin" << n;
  os << "\n";
  for (const auto& [label, row] : ordered_rows(table)) {
    if (spin_filter >= 0 &&
        row.multiplicities[static_cast<std::size_t>(spin_filter)] == 0)
      continue;
    os << label.q[0] << "," << label.q[1] << "," << label.q[2] << ","
       << label.q[3] << "," << row.dimension << ","
       << (row.fermionic ? "fermion" : "boson");
    for (const auto& m : row.multiplicities) os << "," << m;
    os << "\n";
  }
  return os.str();
}

inline std::string table_to_markdown(const MultiplicityTable& table,
                                     int spin_filter = -1) {
  std::ostringstream os;
  os << "| representation | dimension | statistics |";
  for (int n = 0; n < kNumSpins; ++n) os << " " << n << " |";
  os << "\n|---|---|---|";
  for (int n = 0; n < kNumSpins; ++n) os << "---|";
  os << "\n";
  for (const auto& [label, row] : ordered_rows(table)) {
    if (spin_filter >= 0 &&
        row.multiplicities[static_cast<std::size_t>(spin_filter)] == 0)
      continue;
    os << "| " << label.to_string() << " | " << row.dimension << " | "
       << (row.fermionic ? "fermion" : "boson") << " |";
    for (const auto& m : row.multiplicities) {
      os << " ";
      if (m != 0) os << m;
      os << " |";
    }
    os << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json sector_report_to_json(const SectorReport& r) {
  nlohmann::ordered_json doc;
  doc["sectors"] = nlohmann::ordered_json::array();
  for (int n = 0; n < kNumSpins; ++n) {
    nlohmann::ordered_json s;
    s["spin"] = n;
    s["boson_count"] =
        static_cast<std::int64_t>(r.boson_count[static_cast<std::size_t>(n)]);
    s["fermion_count"] =
        static_cast<std::int64_t>(r.fermion_count[static_cast<std::size_t>(n)]);
    doc["sectors"].push_back(std::move(s));
  }
  doc["grand_total"] = static_cast<std::int64_t>(r.grand_total);
  return doc;
}

// ---------------------------------------------------------------------------
// Golden table.  Shipped as a machine-readable JSON file; the env var
// REPCHAR_GOLDEN_DIR overrides the compiled-in default directory.

inline std::string golden_dir() {
  if (const char* env = std::getenv("REPCHAR_GOLDEN_DIR")) return env;
#ifdef REPCHAR_DATA_DIR
  return REPCHAR_DATA_DIR;
#else
  return "data";
#endif
}

inline MultiplicityTable load_golden_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  MultiplicityTable table;
  for (const auto& r : doc.at("rows")) {
    const auto& d = r.at("dynkin");
    DynkinLabel label(d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>(),
                      d.at(3).get<int>());
    TableRow row;
    row.dimension = Integer(r.at("dimension").get<std::int64_t>());
    row.fermionic = r.at("statistics").get<std::string>() == "fermion";
    const auto& mults = r.at("multiplicities");
    for (int n = 0; n < kNumSpins; ++n)
      row.multiplicities[static_cast<std::size_t>(n)] =
          Integer(mults.at(static_cast<std::size_t>(n)).get<std::int64_t>());
    table.rows.emplace(label, std::move(row));
  }
  return table;
}

inline MultiplicityTable load_golden_table() {
  return load_golden_table(golden_dir() + "/table1_golden.json");
}

// Order-insensitive comparison; returns a human-readable list of
// discrepancies, empty when the tables agree exactly.
inline std::vector<std::string> diff_tables(const MultiplicityTable& got,
                                            const MultiplicityTable& want) {
  std::vector<std::string> out;
  for (const auto& [label, wrow] : want.rows) {
    auto it = got.rows.find(label);
    if (it == got.rows.end()) {
      out.push_back("missing row " + label.to_string());
      continue;
    }
    const TableRow& grow = it->second;
    if (grow.dimension != wrow.dimension)
      out.push_back("dimension mismatch at " + label.to_string());
    if (grow.fermionic != wrow.fermionic)
      out.push_back("statistics mismatch at " + label.to_string());
    if (grow.multiplicities != wrow.multiplicities)
      out.push_back("multiplicity mismatch at " + label.to_string());
  }
  for (const auto& [label, grow] : got.rows)
    if (!want.rows.count(label))
      out.push_back("unexpected row " + label.to_string());
  return out;
}

}  // namespace repchar
