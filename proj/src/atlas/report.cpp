#include "atlas/report.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "atlas/cosets.hpp"
#include "atlas/error.hpp"
#include "atlas/notation.hpp"

namespace atlas {

using ojson = nlohmann::ordered_json;

const char* convention_name(Convention c) {
  return c == Convention::Direct ? "direct" : "inverse";
}

Convention parse_convention(const std::string& s) {
  if (s == "direct") return Convention::Direct;
  if (s == "inverse") return Convention::Inverse;
  throw Error(Errc::InvalidArgument, "convention must be direct or inverse, got '" + s + "'");
}

namespace {

ojson config_json(const ClassReport& r) {
  const SurveyConfig& c = r.config;
  ojson j;
  j["m"] = c.m;
  j["poly"] = r.poly;
  j["poly_override"] = c.poly ? ojson(*c.poly) : ojson(nullptr);
  j["convention"] = convention_name(c.convention);
  j["weights_max_m"] = c.weights_max_m;
  j["iso_max_m"] = c.iso_max_m;
  j["iso_nodes"] = c.iso_nodes;
  j["orient_max_m"] = c.orient_max_m;
  j["time_budget_s"] = c.time_budget_s;
  return j;
}

template <class Map>
ojson pairs_json(const Map& m) {
  ojson a = ojson::array();
  for (const auto& [k, v] : m) a.push_back({k, v});
  return a;
}

template <class Map>
Map pairs_from(const ojson& a) {
  Map m;
  for (const auto& p : a) m[p.at(0).get<std::uint64_t>()] = p.at(1).get<std::uint64_t>();
  return m;
}

ojson record_json(const ClassReport& r, const ClassRecord& c) {
  ojson j;
  j["m"] = r.config.m;
  j["poly"] = r.poly;
  j["rep"] = c.rep;
  j["coset_size"] = c.coset_size;
  j["closed_surface"] = c.closed_surface;
  j["apn"] = c.apn;
  j["v"] = c.v;
  j["vstar"] = pairs_json(c.vstar.histogram);
  j["spectrum"] = {{"lines", c.spectrum.lines}, {"sizes", pairs_json(c.spectrum.sizes)}};
  j["orientable"] = c.orientable ? ojson(*c.orientable) : ojson(nullptr);
  j["decided_by"] = c.decided_by ? ojson(decided_by_name(*c.decided_by)) : ojson(nullptr);
  j["group"] = c.group ? ojson(*c.group) : ojson(nullptr);
  return j;
}

ClassRecord record_from(const ojson& j) {
  ClassRecord c;
  c.rep = j.at("rep").get<std::uint64_t>();
  c.coset_size = j.at("coset_size").get<std::uint64_t>();
  c.closed_surface = j.at("closed_surface").get<bool>();
  c.apn = j.at("apn").get<bool>();
  c.v = j.at("v").get<std::uint64_t>();
  c.vstar.histogram = pairs_from<std::map<std::uint64_t, std::uint64_t>>(j.at("vstar"));
  c.spectrum.lines = j.at("spectrum").at("lines").get<std::uint64_t>();
  c.spectrum.sizes =
      pairs_from<std::map<std::uint64_t, std::uint64_t>>(j.at("spectrum").at("sizes"));
  if (!j.at("orientable").is_null()) c.orientable = j["orientable"].get<bool>();
  if (!j.at("decided_by").is_null()) c.decided_by = parse_decided_by(j["decided_by"].get<std::string>());
  if (!j.at("group").is_null()) c.group = j["group"].get<std::uint32_t>();
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else if (ch != '\r') {
      out.back() += ch;
    }
  }
  return out;
}

// Rows of a golden CSV whose first column equals m, header stripped.
std::vector<std::vector<std::string>> golden_rows(const std::filesystem::path& file, unsigned m,
                                                  std::size_t columns) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::IoError, "cannot read " + file.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cells = csv_split(line);
    if (cells.size() != columns) {
      throw Error(Errc::ParseError, file.filename().string() + ": bad row '" + line + "'");
    }
    if (cells[0] == std::to_string(m)) rows.push_back(std::move(cells));
  }
  return rows;
}

std::uint64_t to_u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ParseError, "expected an integer, got '" + s + "'");
}

std::vector<const ClassRecord*> closed_by_v(const ClassReport& r) {
  std::vector<const ClassRecord*> out;
  for (const auto& c : r.records) {
    if (c.closed_surface) out.push_back(&c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ClassRecord* a, const ClassRecord* b) { return a->v < b->v; });
  return out;
}

std::vector<const ClassRecord*> shared_v(const ClassReport& r) {
  std::map<std::uint64_t, int> seen;
  const auto closed = closed_by_v(r);
  for (const auto* c : closed) ++seen[c->v];
  std::vector<const ClassRecord*> out;
  for (const auto* c : closed) {
    if (seen[c->v] > 1) out.push_back(c);
  }
  return out;
}

std::vector<const ClassRecord*> apn_by_lines(const ClassReport& r) {
  std::vector<const ClassRecord*> out;
  for (const auto& c : r.records) {
    if (c.apn) out.push_back(&c);
  }
  std::stable_sort(out.begin(), out.end(), [](const ClassRecord* a, const ClassRecord* b) {
    return a->spectrum.lines < b->spectrum.lines;
  });
  return out;
}

}  // namespace

std::string to_jsonl(const ClassReport& report) {
  ojson head;
  head["config"] = config_json(report);
  head["reps_total"] = report.reps_total;
  head["complete"] = report.complete;
  std::string out = head.dump() + "\n";
  for (const auto& c : report.records) out += record_json(report, c).dump() + "\n";
  return out;
}

ClassReport from_jsonl(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty archive");
  ClassReport r;
  try {
    const ojson head = ojson::parse(line);
    const ojson& c = head.at("config");
    r.config.m = c.at("m").get<unsigned>();
    r.poly = c.at("poly").get<Elem>();
    if (!c.at("poly_override").is_null()) r.config.poly = c["poly_override"].get<Elem>();
    r.config.convention = parse_convention(c.at("convention").get<std::string>());
    r.config.weights_max_m = c.at("weights_max_m").get<unsigned>();
    r.config.iso_max_m = c.at("iso_max_m").get<unsigned>();
    r.config.iso_nodes = c.at("iso_nodes").get<std::uint64_t>();
    r.config.orient_max_m = c.at("orient_max_m").get<unsigned>();
    r.config.time_budget_s = c.at("time_budget_s").get<double>();
    r.reps_total = head.at("reps_total").get<std::uint64_t>();
    r.complete = head.at("complete").get<bool>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      r.records.push_back(record_from(ojson::parse(line)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("archive: ") + e.what());
  }
  return r;
}

void write_jsonl(const ClassReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << to_jsonl(report);
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

ClassReport load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  return from_jsonl(in);
}

std::string to_csv(const ClassReport& report, TableKind kind) {
  const std::string m = std::to_string(report.config.m);
  std::ostringstream out;
  switch (kind) {
    case TableKind::VTable:
      out << "m,coset,v,apn\n";
      for (const auto* c : closed_by_v(report)) {
        out << m << ',' << format_coset(c->rep) << ',' << c->v << ',' << int(c->apn) << '\n';
      }
      break;
    case TableKind::VStarTable:
      out << "m,coset,v,vstar\n";
      for (const auto* c : shared_v(report)) {
        out << m << ',' << format_coset(c->rep) << ',' << c->v << ','
            << csv_field(format_vstar(c->vstar)) << '\n';
      }
      break;
    case TableKind::SpectrumTable:
      out << "m,coset,rl,spectrum\n";
      for (const auto* c : apn_by_lines(report)) {
        out << m << ',' << format_coset(c->rep) << ',' << c->spectrum.lines << ','
            << csv_field(format_spectrum(c->spectrum, true)) << '\n';
      }
      break;
    case TableKind::Counts:
      out << "m,classes\n" << m << ',' << report.group_count() << '\n';
      break;
  }
  return out.str();
}

std::string to_markdown(const ClassReport& report) {
  std::ostringstream out;
  out << "# Monomial self-embeddings, m = " << report.config.m << "\n\n";
  out << "- primitive polynomial: 0x" << std::hex << report.poly << std::dec << "\n";
  out << "- convention: " << convention_name(report.config.convention) << "\n";
  out << "- coset classes examined: " << report.records.size() << " of " << report.reps_total
      << (report.complete ? "" : " (time budget exhausted)") << "\n";
  out << "- closed-surface classes: " << report.closed_count() << "\n";
  out << "- isomorphism classes: " << report.group_count() << "\n\n";
  const auto closed = closed_by_v(report);
  if (!closed.empty()) {
    out << "## Closed surfaces\n\n";
    out << "| class | v | V* | APN | orientable | decided by | group |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto* c : closed) {
      out << "| " << format_coset(c->rep) << " | " << c->v << " | " << format_vstar(c->vstar)
          << " | " << (c->apn ? "yes" : "no") << " | "
          << (c->orientable ? (*c->orientable ? "yes" : "no") : "-") << " | "
          << (c->decided_by ? decided_by_name(*c->decided_by) : "-") << " | "
          << (c->group ? std::to_string(*c->group) : "-") << " |\n";
    }
    out << "\n";
  }
  const auto apn = apn_by_lines(report);
  if (!apn.empty()) {
    out << "## APN classes\n\n| class | rl(1) | spectrum |\n|---|---|---|\n";
    for (const auto* c : apn) {
      out << "| " << format_coset(c->rep) << " | " << c->spectrum.lines << " | "
          << format_spectrum(c->spectrum) << " |\n";
    }
  }
  return out.str();
}

VerifyOutcome verify_golden(const ClassReport& report, const std::filesystem::path& dir) {
  const unsigned m = report.config.m;
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  VerifyOutcome out;
  if (!report.complete) {
    out.mismatches.push_back("survey incomplete: " + std::to_string(report.records.size()) +
                             " of " + std::to_string(report.reps_total) + " classes");
  }
  std::map<std::uint64_t, const ClassRecord*> by_rep;
  for (const auto& c : report.records) by_rep[c.rep] = &c;

  auto canonical = [&](const std::string& label, const char* table) -> std::optional<std::uint64_t> {
    try {
      return coset_star(n, parse_coset(label)).rep;
    } catch (const Error& e) {
      out.mismatches.push_back(std::string(table) + ": " + label + ": " + e.what());
      return std::nullopt;
    }
  };
  auto lookup = [&](std::uint64_t rep, const std::string& label,
                    const char* table) -> const ClassRecord* {
    const auto it = by_rep.find(rep);
    if (it == by_rep.end()) {
      out.mismatches.push_back(std::string(table) + ": " + label + " not in survey");
      return nullptr;
    }
    return it->second;
  };

  // Closed surfaces with v and the APN flag; the row sets must coincide.
  {
    std::set<std::uint64_t> listed;
    for (const auto& row : golden_rows(dir / "table1.csv", m, 4)) {
      ++out.rows_checked;
      const auto rep = canonical(row[1], "table1");
      if (!rep) continue;
      listed.insert(*rep);
      const ClassRecord* c = lookup(*rep, row[1], "table1");
      if (!c) continue;
      const auto v = to_u64(row[2]);
      const bool apn = to_u64(row[3]) != 0;
      if (!c->closed_surface) out.mismatches.push_back("table1: " + row[1] + " is not a closed surface");
      if (c->v != v) {
        out.mismatches.push_back("table1: " + row[1] + " v " + std::to_string(c->v) +
                                 ", expected " + row[2]);
      }
      if (c->apn != apn) out.mismatches.push_back("table1: " + row[1] + " APN flag differs");
    }
    for (const auto& c : report.records) {
      if (c.closed_surface && !listed.count(c.rep)) {
        out.mismatches.push_back("table1: unlisted closed surface " + format_coset(c.rep));
      }
    }
  }
  // Multiplicity histograms of classes tied on v.
  {
    std::set<std::uint64_t> listed;
    for (const auto& row : golden_rows(dir / "table3.csv", m, 4)) {
      ++out.rows_checked;
      const auto rep = canonical(row[1], "table3");
      if (!rep) continue;
      listed.insert(*rep);
      const ClassRecord* c = lookup(*rep, row[1], "table3");
      if (!c) continue;
      if (c->v != to_u64(row[2])) out.mismatches.push_back("table3: " + row[1] + " v differs");
      if (c->vstar != parse_vstar(row[3])) {
        out.mismatches.push_back("table3: " + row[1] + " V* " + format_vstar(c->vstar) +
                                 ", expected " + row[3]);
      }
      if (m == 11 && (*rep == coset_star(n, 21).rep || *rep == coset_star(n, 687).rep)) {
        out.notes.push_back("m=11 " + row[1] + ": " + format_vstar(c->vstar) +
                            "; the count 627 is the one that matches (a count of 628 for this "
                            "pair does not)");
      }
    }
    if (!listed.empty()) {
      for (const auto* c : shared_v(report)) {
        if (!listed.count(c->rep)) {
          out.mismatches.push_back("table3: unlisted tied class " + format_coset(c->rep));
        }
      }
    }
  }
  // Rotation spectra of APN classes.
  {
    std::set<std::uint64_t> listed;
    for (const auto& row : golden_rows(dir / "table5.csv", m, 4)) {
      ++out.rows_checked;
      const auto rep = canonical(row[1], "table5");
      if (!rep) continue;
      listed.insert(*rep);
      const ClassRecord* c = lookup(*rep, row[1], "table5");
      if (!c) continue;
      const ReducedSpectrum want = parse_spectrum(row[3]);
      if (!c->apn) out.mismatches.push_back("table5: " + row[1] + " is not APN");
      if (want.lines != to_u64(row[2])) {
        out.mismatches.push_back("table5: " + row[1] + " rl column disagrees with its spectrum");
      }
      if (reduce(c->spectrum) != want) {
        out.mismatches.push_back("table5: " + row[1] + " spectrum " +
                                 format_spectrum(c->spectrum, true) + ", expected " + row[3]);
      }
    }
    if (!listed.empty()) {
      for (const auto* c : apn_by_lines(report)) {
        if (!listed.count(c->rep)) {
          out.mismatches.push_back("table5: unlisted APN class " + format_coset(c->rep));
        }
      }
    }
  }
  for (const auto& row : golden_rows(dir / "class_counts.csv", m, 2)) {
    ++out.rows_checked;
    if (report.group_count() != to_u64(row[1])) {
      out.mismatches.push_back("class_counts: " + std::to_string(report.group_count()) +
                               " classes, expected " + row[1]);
    }
  }
  return out;
}

}  // namespace atlas
