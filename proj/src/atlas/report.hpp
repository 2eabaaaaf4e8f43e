#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "atlas/classify.hpp"

namespace atlas {

const char* convention_name(Convention c);
Convention parse_convention(const std::string& s);

/// JSONL archive: a header line {"config": ...} followed by one record per
/// class in rep order.  Byte-identical for identical configurations.
std::string to_jsonl(const ClassReport& report);
ClassReport from_jsonl(std::istream& in);
void write_jsonl(const ClassReport& report, const std::filesystem::path& path);
ClassReport load_jsonl(const std::filesystem::path& path);

enum class TableKind { VTable, VStarTable, SpectrumTable, Counts };

/// CSV shaped like the golden tables in tables/.
///   VTable         m,coset,v,apn            closed-surface classes
///   VStarTable     m,coset,v,vstar          closed classes sharing v
///   SpectrumTable  m,coset,rl,spectrum      APN classes
///   Counts         m,classes
std::string to_csv(const ClassReport& report, TableKind kind);
std::string to_markdown(const ClassReport& report);

struct VerifyOutcome {
  std::size_t rows_checked = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
  bool ok() const { return mismatches.empty(); }
};

/// Compares the report against table1.csv, table3.csv, table5.csv and
/// class_counts.csv in `dir`, restricted to the report's m.  Golden coset
/// labels are matched through their C* class, so any member may be listed.
VerifyOutcome verify_golden(const ClassReport& report, const std::filesystem::path& dir);

}  // namespace atlas
