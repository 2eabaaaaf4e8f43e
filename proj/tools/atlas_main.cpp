// atlas: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 computational failure (JSON error record on
// stderr) or golden mismatch, 2 usage error.

#include <atlas/atlas.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

struct Failure {
  atlas_status status;
  std::string message;
};

void check(atlas_status s) {
  if (s != ATLAS_OK) throw Failure{s, atlas_last_error()};
}

struct FieldDeleter {
  void operator()(atlas_field* f) const { atlas_field_destroy(f); }
};
struct PermDeleter {
  void operator()(atlas_perm* p) const { atlas_perm_destroy(p); }
};
struct TextDeleter {
  void operator()(atlas_text* t) const { atlas_text_destroy(t); }
};
struct ReportDeleter {
  void operator()(atlas_report* r) const { atlas_report_destroy(r); }
};
struct WeightsDeleter {
  void operator()(atlas_weights* w) const { atlas_weights_destroy(w); }
};
using FieldPtr = std::unique_ptr<atlas_field, FieldDeleter>;
using PermPtr = std::unique_ptr<atlas_perm, PermDeleter>;
using TextPtr = std::unique_ptr<atlas_text, TextDeleter>;
using ReportPtr = std::unique_ptr<atlas_report, ReportDeleter>;
using WeightsPtr = std::unique_ptr<atlas_weights, WeightsDeleter>;

std::string take(atlas_text* t) {
  TextPtr p(t);
  return atlas_text_str(p.get());
}

// Shared field selection flags.
struct FieldArgs {
  unsigned m = 0;
  std::string poly;
  std::string convention = "inverse";

  void add(CLI::App* cmd) {
    cmd->add_option("--m", m, "Field degree m (n = 2^m - 1)")->required()->check(CLI::Range(2, 22));
    cmd->add_option("--poly", poly, "Primitive polynomial as a bitmask, e.g. 0x25");
    cmd->add_option("--convention", convention, "White system convention")
        ->check(CLI::IsMember({"direct", "inverse"}));
  }

  uint32_t poly_value() const {
    if (poly.empty()) return 0;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(poly, &pos, 0);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != poly.size() || v == 0 || v > 0xffffffffUL) {
      throw CLI::ValidationError("--poly", "expected an integer bitmask, got '" + poly + "'");
    }
    return static_cast<uint32_t>(v);
  }

  atlas_convention conv() const {
    return convention == "direct" ? ATLAS_CONVENTION_DIRECT : ATLAS_CONVENTION_INVERSE;
  }

  FieldPtr field() const {
    atlas_field* f = nullptr;
    check(atlas_field_create(m, poly_value(), &f));
    return FieldPtr(f);
  }
};

PermPtr monomial(const FieldPtr& f, uint64_t t) {
  atlas_perm* p = nullptr;
  check(atlas_perm_monomial(f.get(), t, &p));
  return PermPtr(p);
}

template <class T, class Call>
std::vector<T> fetch(Call&& call) {
  size_t len = 0;
  const atlas_status s = call(nullptr, 0, &len);
  if (s != ATLAS_OK && s != ATLAS_BUFFER_TOO_SMALL) check(s);
  std::vector<T> out(len);
  check(call(out.data(), out.size(), &len));
  return out;
}

constexpr std::size_t kMaxListed = 40;

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ATLAS_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

const char* yes_no(int b) { return b ? "yes" : "no"; }

struct SurveyArgs {
  unsigned jobs = default_jobs();
  double time_budget = 0;
  uint64_t iso_nodes = 0;
  std::optional<unsigned> weights_max_m, iso_max_m, orient_max_m;

  void add(CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads (default: ATLAS_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget", time_budget, "Seconds before stopping with a partial report");
    cmd->add_option("--iso-nodes", iso_nodes, "Node budget per isomorphism search");
    cmd->add_option("--weights-max-m", weights_max_m, "Largest m for weight distributions");
    cmd->add_option("--iso-max-m", iso_max_m, "Largest m for isomorphism search");
    cmd->add_option("--orient-max-m", orient_max_m, "Largest m for orientability");
  }

  atlas_survey_config config(const FieldArgs& fa) const {
    atlas_survey_config c;
    atlas_survey_config_init(&c, fa.m);
    c.poly = fa.poly_value();
    c.convention = fa.conv();
    c.time_budget_s = time_budget;
    if (iso_nodes) c.iso_nodes = iso_nodes;
    if (weights_max_m) c.weights_max_m = *weights_max_m;
    if (iso_max_m) c.iso_max_m = *iso_max_m;
    if (orient_max_m) c.orient_max_m = *orient_max_m;
    return c;
  }
};

// Runs the survey; a partial report is still returned alongside the
// budget failure so callers can persist it.
ReportPtr run_survey(const atlas_survey_config& cfg, unsigned jobs,
                     std::optional<Failure>& partial) {
  atlas_report* r = nullptr;
  const atlas_status s = atlas_survey(&cfg, jobs, &r);
  if (s == ATLAS_BUDGET_EXCEEDED && r) {
    partial = Failure{s, atlas_last_error()};
  } else {
    check(s);
  }
  return ReportPtr(r);
}

std::string render(const ReportPtr& r, atlas_format fmt) {
  atlas_text* t = nullptr;
  check(atlas_report_render(r.get(), fmt, &t));
  return take(t);
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw Failure{ATLAS_IO_ERROR, "cannot write " + path.string()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-embeddings of Hamming Steiner triple systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "atlas 1.0.0");

  int rc = 0;
  std::function<void()> action;

  // field
  FieldArgs field_args;
  std::vector<uint32_t> mul_args, pow_args;
  std::optional<uint32_t> log_arg;
  auto* field_cmd = app.add_subcommand("field", "Field parameters and arithmetic");
  field_args.add(field_cmd);
  field_cmd->add_option("--mul", mul_args, "Multiply two elements")->expected(2);
  field_cmd->add_option("--pow", pow_args, "Raise element to a power: X T")->expected(2);
  field_cmd->add_option("--log", log_arg, "Discrete logarithm of an element");
  field_cmd->callback([&] {
    action = [&] {
      auto f = field_args.field();
      atlas_field_info info;
      check(atlas_field_get_info(f.get(), &info));
      char poly[16];
      std::snprintf(poly, sizeof poly, "0x%x", info.poly);
      std::cout << "m: " << info.m << "\npoly: " << poly << "\nn: " << info.order
                << "\nchecksum: " << info.checksum << "\n";
      uint32_t r = 0;
      if (!mul_args.empty()) {
        check(atlas_field_mul(f.get(), mul_args[0], mul_args[1], &r));
        std::cout << "mul: " << r << "\n";
      }
      if (!pow_args.empty()) {
        check(atlas_field_pow(f.get(), pow_args[0], pow_args[1], &r));
        std::cout << "pow: " << r << "\n";
      }
      if (log_arg) {
        check(atlas_field_log(f.get(), *log_arg, &r));
        std::cout << "log: " << r << "\n";
      }
    };
  });

  // cosets
  FieldArgs coset_args;
  std::optional<uint64_t> coset_t;
  auto* coset_cmd = app.add_subcommand("cosets", "Cyclotomic cosets C_t and classes C*_t");
  coset_args.add(coset_cmd);
  coset_cmd->add_option("--t", coset_t, "Exponent; omit to list every class");
  coset_cmd->callback([&] {
    action = [&] {
      const uint64_t n = (uint64_t{1} << coset_args.m) - 1;
      if (coset_t) {
        const auto c = fetch<uint64_t>(
            [&](uint64_t* b, size_t cap, size_t* len) { return atlas_coset(n, *coset_t, b, cap, len); });
        uint64_t rep = 0;
        const auto cs = fetch<uint64_t>([&](uint64_t* b, size_t cap, size_t* len) {
          return atlas_coset_star(n, *coset_t, &rep, b, cap, len);
        });
        std::cout << "C_" << *coset_t << ": {" << join(c) << "}\n";
        std::cout << "C*_" << rep << ": {" << join(cs) << "}\n";
      } else {
        const auto reps = fetch<uint64_t>(
            [&](uint64_t* b, size_t cap, size_t* len) { return atlas_class_reps(n, b, cap, len); });
        for (uint64_t r : reps) {
          const auto cs = fetch<uint64_t>([&](uint64_t* b, size_t cap, size_t* len) {
            return atlas_coset_star(n, r, nullptr, b, cap, len);
          });
          std::cout << "C*_" << r << " size " << cs.size() << ": {";
          if (cs.size() <= kMaxListed) {
            std::cout << join(cs);
          } else {
            std::cout << join(std::vector<uint64_t>(cs.begin(), cs.begin() + kMaxListed)) << ", ...";
          }
          std::cout << "}\n";
        }
      }
    };
  });

  // triples
  FieldArgs triple_args;
  uint32_t triple_p = 1;
  std::optional<uint64_t> triple_t;
  std::string triple_format = "text";
  auto* triple_cmd = app.add_subcommand("triples", "Triples through a point");
  triple_args.add(triple_cmd);
  triple_cmd->add_option("--point,--p", triple_p, "Point label (default 1)");
  triple_cmd->add_option("--t", triple_t, "Also give the white third point under x^t");
  triple_cmd->add_option("--format", triple_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  triple_cmd->callback([&] {
    action = [&] {
      auto f = triple_args.field();
      const auto pairs = fetch<uint32_t>([&](uint32_t* b, size_t cap, size_t* len) {
        return atlas_triples_at(f.get(), triple_p, b, cap, len);
      });
      PermPtr perm;
      if (triple_t) perm = monomial(f, *triple_t);
      std::vector<uint32_t> white;
      for (std::size_t i = 0; perm && i < pairs.size(); i += 2) {
        uint32_t w = 0;
        check(atlas_image_third(f.get(), perm.get(), triple_p, pairs[i], triple_args.conv(), &w));
        white.push_back(w);
      }
      if (triple_format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < pairs.size(); i += 2) {
          nlohmann::ordered_json row{{"p", triple_p}, {"q", pairs[i]}, {"r", pairs[i + 1]}};
          if (perm) row["white"] = white[i / 2];
          out.push_back(row);
        }
        std::cout << out.dump() << "\n";
        return;
      }
      const bool csv = triple_format == "csv";
      if (csv) std::cout << (perm ? "p,q,r,white\n" : "p,q,r\n");
      for (std::size_t i = 0; i < pairs.size(); i += 2) {
        if (csv) {
          std::cout << triple_p << "," << pairs[i] << "," << pairs[i + 1];
          if (perm) std::cout << "," << white[i / 2];
        } else {
          std::cout << "{" << triple_p << "," << pairs[i] << "," << pairs[i + 1] << "}";
          if (perm) std::cout << "  white {" << triple_p << "," << pairs[i] << "," << white[i / 2] << "}";
        }
        std::cout << "\n";
      }
    };
  });

  // rotation / spectrum / invariants / apn / code / orient share --t and --a
  FieldArgs rot_args;
  uint64_t rot_t = 0;
  uint32_t rot_a = 1;
  auto* rot_cmd = app.add_subcommand("rotation", "Rotation lines at a point");
  rot_args.add(rot_cmd);
  rot_cmd->add_option("--t", rot_t, "Exponent of x^t")->required();
  rot_cmd->add_option("--point,--a", rot_a, "Point label");
  rot_cmd->callback([&] {
    action = [&] {
      auto f = rot_args.field();
      auto p = monomial(f, rot_t);
      atlas_text* t = nullptr;
      check(atlas_rotation_lines_text(f.get(), p.get(), rot_a, rot_args.conv(), &t));
      std::cout << take(t);
    };
  });

  FieldArgs spec_args;
  uint64_t spec_t = 0;
  uint32_t spec_a = 1;
  bool spec_compact = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "Rotation line spectrum at a point");
  spec_args.add(spec_cmd);
  spec_cmd->add_option("--t", spec_t, "Exponent of x^t")->required();
  spec_cmd->add_option("--point,--a", spec_a, "Point label");
  spec_cmd->add_flag("--compact", spec_compact, "Omit spaces");
  spec_cmd->callback([&] {
    action = [&] {
      auto f = spec_args.field();
      auto p = monomial(f, spec_t);
      atlas_text* t = nullptr;
      check(atlas_spectrum_text(f.get(), p.get(), spec_a, spec_args.conv(), spec_compact, &t));
      std::cout << take(t) << "\n";
      auto sizes = fetch<uint64_t>([&](uint64_t* b, size_t cap, size_t* len) {
        return atlas_rotation_line_sizes(f.get(), p.get(), spec_a, spec_args.conv(), b, cap, len);
      });
      std::sort(sizes.begin(), sizes.end());
      const char* sep = spec_compact ? "," : ", ";
      std::cout << "full: (" << sizes.size() << (spec_compact ? ";" : "; ") << join(sizes, sep)
                << ")\n";
    };
  });

  FieldArgs inv_args;
  uint64_t inv_t = 0;
  uint32_t inv_a = 1;
  bool inv_tilde = false;
  auto* inv_cmd = app.add_subcommand("invariants", "v and V* at a point");
  inv_args.add(inv_cmd);
  inv_cmd->add_option("--t", inv_t, "Exponent of x^t")->required();
  inv_cmd->add_option("--point,--a", inv_a, "Point label");
  inv_cmd->add_flag("--tilde", inv_tilde, "Also print the third points in line order");
  inv_cmd->callback([&] {
    action = [&] {
      auto f = inv_args.field();
      auto p = monomial(f, inv_t);
      uint64_t v = 0;
      check(atlas_v_value(f.get(), p.get(), inv_a, inv_args.conv(), &v));
      atlas_text* t = nullptr;
      check(atlas_v_star_text(f.get(), p.get(), inv_a, inv_args.conv(), &t));
      std::cout << "v: " << v << "\nvstar: " << take(t) << "\n";
      if (inv_tilde) {
        const auto z = fetch<uint32_t>([&](uint32_t* b, size_t cap, size_t* len) {
          return atlas_v_tilde(f.get(), p.get(), inv_a, inv_args.conv(), b, cap, len);
        });
        std::cout << "vtilde: " << join(z, ",") << "\n";
      }
    };
  });

  FieldArgs apn_args;
  uint64_t apn_t = 0;
  auto* apn_cmd = app.add_subcommand("apn", "APN test through v and by differential count");
  apn_args.add(apn_cmd);
  apn_cmd->add_option("--t", apn_t, "Exponent of x^t")->required();
  apn_cmd->callback([&] {
    action = [&] {
      auto f = apn_args.field();
      auto p = monomial(f, apn_t);
      int by_v = 0, oracle = 0;
      check(atlas_apn_by_v(f.get(), p.get(), &by_v));
      check(atlas_apn_oracle(f.get(), p.get(), &oracle));
      std::cout << "apn_by_v: " << yes_no(by_v) << "\napn_oracle: " << yes_no(oracle) << "\n";
      if (by_v != oracle) throw Failure{ATLAS_CONSISTENCY_ERROR, "APN tests disagree"};
    };
  });

  FieldArgs code_args;
  uint64_t code_t = 0;
  bool code_weights = false, code_extended = false, code_quad = false;
  unsigned code_jobs = default_jobs();
  auto* code_cmd = app.add_subcommand("code", "The code C_F of x^t");
  code_args.add(code_cmd);
  code_cmd->add_option("--t", code_t, "Exponent of x^t")->required();
  code_cmd->add_flag("--weights", code_weights, "Print the weight distribution as w,count CSV");
  code_cmd->add_flag("--extended", code_extended, "Use the extended code C*_F for --weights");
  code_cmd->add_flag("--quadruple", code_quad, "Weight-4 count of C*_F against solution counting");
  code_cmd->add_option("--jobs", code_jobs, "Worker threads")->check(CLI::PositiveNumber);
  code_cmd->callback([&] {
    action = [&] {
      auto f = code_args.field();
      auto p = monomial(f, code_t);
      if (code_weights) {
        // Machine-readable on its own: the CSV is the whole output.
        atlas_weights* w = nullptr;
        check(atlas_weight_distribution(f.get(), p.get(), code_extended, code_jobs, &w));
        WeightsPtr wp(w);
        std::cout << "w,count\n";
        for (size_t i = 0; i < atlas_weights_size(w); ++i) {
          std::cout << i << "," << atlas_weights_count(w, i) << "\n";
        }
        return;
      }
      unsigned r = 0;
      check(atlas_code_rank(f.get(), p.get(), &r));
      std::cout << "rank: " << r << "\n";
      if (code_args.m <= 14) {
        int d = 0;
        check(atlas_min_distance(f.get(), p.get(), &d));
        std::cout << "distance: " << (d == 5 ? std::string(">=5") : std::to_string(d)) << "\n";
      }
      if (code_quad) {
        atlas_quadruple q;
        check(atlas_quadruple_check(f.get(), p.get(), &q));
        std::cout << "A4: " << q.lhs << "\nsolution_sum: " << q.solution_sum
                  << "\nrhs: " << q.rhs_times3 / 3 << (q.rhs_times3 % 3 ? " (not integral)" : "")
                  << "\nagrees: " << yes_no(q.agrees) << "\n";
      }
    };
  });

  FieldArgs orient_args;
  uint64_t orient_t = 0;
  auto* orient_cmd = app.add_subcommand("orient", "Euler characteristic and orientability");
  orient_args.add(orient_cmd);
  orient_cmd->add_option("--t", orient_t, "Exponent of x^t")->required();
  orient_cmd->callback([&] {
    action = [&] {
      auto f = orient_args.field();
      auto p = monomial(f, orient_t);
      atlas_surface s;
      check(atlas_surface_report(f.get(), p.get(), orient_args.conv(), &s));
      std::cout << "V: " << s.vertices << "\nE: " << s.edges << "\nF: " << s.faces
                << "\nchi: " << s.chi << "\norientable: " << yes_no(s.orientable) << "\n"
                << (s.orientable ? "genus: " : "crosscaps: ") << s.genus_or_crosscaps << "\n";
    };
  });

  FieldArgs iso_args;
  uint64_t iso_t1 = 0, iso_t2 = 0, iso_nodes = 0;
  bool iso_witness = false;
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism search between x^t1 and x^t2");
  iso_args.add(iso_cmd);
  iso_cmd->add_option("--t1", iso_t1, "First exponent")->required();
  iso_cmd->add_option("--t2", iso_t2, "Second exponent")->required();
  iso_cmd->add_option("--nodes", iso_nodes, "Search node budget");
  iso_cmd->add_flag("--witness", iso_witness, "Print the witness as an element map");
  iso_cmd->callback([&] {
    action = [&] {
      auto f = iso_args.field();
      auto p1 = monomial(f, iso_t1);
      auto p2 = monomial(f, iso_t2);
      std::vector<uint32_t> phi(std::size_t{1} << iso_args.m);
      atlas_iso r;
      check(atlas_iso_search(f.get(), p1.get(), p2.get(), iso_args.conv(), iso_nodes, &r,
                             phi.data(), phi.size()));
      std::cout << "verdict: " << (r.isomorphic ? "isomorphic" : "not_isomorphic") << "\n";
      if (r.isomorphic) {
        std::cout << "colour_reversing: " << yes_no(r.colour_reversing) << "\n";
      }
      std::cout << "nodes: " << r.nodes << "\n";
      if (r.isomorphic && iso_witness) std::cout << "witness: " << join(phi, ",") << "\n";
    };
  });

  // classify
  FieldArgs cls_args;
  SurveyArgs cls_survey;
  std::string cls_format = "md";
  std::string cls_out;
  auto* cls_cmd = app.add_subcommand("classify", "Survey all monomial classes for one m");
  cls_args.add(cls_cmd);
  cls_survey.add(cls_cmd);
  cls_cmd->add_option("--report", cls_format, "Output format")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  cls_cmd->add_option("--out", cls_out, "Directory for output files (default: stdout)");
  cls_cmd->callback([&] {
    action = [&] {
      std::optional<Failure> partial;
      auto report = run_survey(cls_survey.config(cls_args), cls_survey.jobs, partial);
      const std::string tag = "_m" + std::to_string(cls_args.m);
      std::vector<std::pair<std::string, std::string>> files;
      if (cls_format == "json") {
        files.emplace_back("survey" + tag + ".jsonl", render(report, ATLAS_FORMAT_JSONL));
      } else if (cls_format == "md") {
        files.emplace_back("report" + tag + ".md", render(report, ATLAS_FORMAT_MARKDOWN));
      } else {
        files.emplace_back("table1" + tag + ".csv", render(report, ATLAS_FORMAT_CSV_V));
        files.emplace_back("table3" + tag + ".csv", render(report, ATLAS_FORMAT_CSV_VSTAR));
        files.emplace_back("table5" + tag + ".csv", render(report, ATLAS_FORMAT_CSV_SPECTRUM));
        files.emplace_back("class_counts" + tag + ".csv", render(report, ATLAS_FORMAT_CSV_COUNTS));
      }
      if (cls_out.empty()) {
        for (const auto& [name, body] : files) std::cout << body;
      } else {
        std::filesystem::create_directories(cls_out);
        if (cls_format != "json") {
          files.emplace_back("survey" + tag + ".jsonl", render(report, ATLAS_FORMAT_JSONL));
        }
        for (const auto& [name, body] : files) {
          write_file(std::filesystem::path(cls_out) / name, body);
          std::cerr << "wrote " << (std::filesystem::path(cls_out) / name).string() << "\n";
        }
      }
      if (partial) throw *partial;
    };
  });

  // verify
  std::string golden_dir;
  std::vector<unsigned> verify_m;
  std::string verify_archive;
  FieldArgs verify_field;
  SurveyArgs verify_survey;
  auto* verify_cmd = app.add_subcommand("verify", "Compare fresh tables with golden CSVs");
  verify_cmd->add_option("--golden", golden_dir, "Directory with the golden CSV files")
      ->required()
      ->check(CLI::ExistingDirectory);
  verify_cmd->add_option("--m", verify_m, "Degrees to check")->check(CLI::Range(3, 22));
  verify_cmd->add_option("--archive", verify_archive, "Check a saved JSONL survey instead")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--convention", verify_field.convention, "White system convention")
      ->check(CLI::IsMember({"direct", "inverse"}));
  verify_survey.add(verify_cmd);
  verify_cmd->callback([&] {
    if (verify_m.empty() == verify_archive.empty()) {
      throw CLI::ValidationError("verify", "give either --m or --archive");
    }
    action = [&] {
      std::vector<ReportPtr> reports;
      if (!verify_archive.empty()) {
        atlas_report* r = nullptr;
        check(atlas_report_load_jsonl(verify_archive.c_str(), &r));
        reports.emplace_back(r);
      }
      for (unsigned m : verify_m) {
        verify_field.m = m;
        std::optional<Failure> partial;
        reports.push_back(run_survey(verify_survey.config(verify_field), verify_survey.jobs, partial));
      }
      bool all_ok = true;
      for (const auto& r : reports) {
        atlas_report_info info;
        check(atlas_report_get_info(r.get(), &info));
        int ok = 0;
        uint64_t rows = 0;
        atlas_text* log = nullptr;
        check(atlas_verify_golden(r.get(), golden_dir.c_str(), &ok, &rows, &log));
        std::cout << take(log);
        std::cout << "m=" << info.m << ": " << rows << " golden rows, " << info.closed
                  << " closed-surface classes, " << info.groups << " isomorphism classes: "
                  << (ok ? "ok" : "MISMATCH") << "\n";
        all_ok = all_ok && ok;
      }
      rc = all_ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (action) action();
  } catch (const Failure& f) {
    nlohmann::ordered_json rec;
    rec["error"] = atlas_status_name(f.status);
    rec["code"] = static_cast<int>(f.status);
    rec["message"] = f.message;
    std::cerr << rec.dump() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json rec;
    rec["error"] = "InternalError";
    rec["code"] = static_cast<int>(ATLAS_INTERNAL_ERROR);
    rec["message"] = e.what();
    std::cerr << rec.dump() << "\n";
    return 1;
  }
  return rc;
}
