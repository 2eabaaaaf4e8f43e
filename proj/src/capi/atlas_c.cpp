#include "atlas/atlas.h"

#include <new>
#include <string>
#include <vector>

#include "atlas/classify.hpp"
#include "atlas/codes.hpp"
#include "atlas/cosets.hpp"
#include "atlas/error.hpp"
#include "atlas/invariants.hpp"
#include "atlas/iso.hpp"
#include "atlas/labels.hpp"
#include "atlas/notation.hpp"
#include "atlas/report.hpp"
#include "atlas/rotation.hpp"
#include "atlas/surface.hpp"

struct atlas_text {
  std::string s;
};
struct atlas_field {
  atlas::Field f;
};
struct atlas_perm {
  atlas::Permutation p;
};
struct atlas_weights {
  std::vector<std::string> counts;
};
struct atlas_report {
  atlas::ClassReport r;
};

namespace {

thread_local std::string last_error;

atlas_status fail(atlas_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
atlas_status guard(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const atlas::Error& e) {
    return fail(static_cast<atlas_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ATLAS_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ATLAS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ATLAS_INTERNAL_ERROR, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw atlas::Error(atlas::Errc::InvalidArgument, what);
}

atlas::Convention conv_of(atlas_convention c) {
  require(c == ATLAS_CONVENTION_INVERSE || c == ATLAS_CONVENTION_DIRECT, "unknown convention");
  return c == ATLAS_CONVENTION_DIRECT ? atlas::Convention::Direct : atlas::Convention::Inverse;
}

atlas::Label label(const atlas_field* f, uint32_t i) {
  if (i < 1 || i > f->f.order()) {
    throw atlas::Error(atlas::Errc::OutOfRange,
                       "label " + std::to_string(i) + " outside [1, " +
                           std::to_string(f->f.order()) + "]");
  }
  return atlas::Label{i};
}

void same_field(const atlas_field* f, const atlas_perm* p) {
  require(f && p, "null handle");
  if (p->p.m() != f->f.m()) {
    throw atlas::Error(atlas::Errc::DegreeMismatch, "permutation and field degrees differ");
  }
}

// Copies `src` into a caller buffer, reporting the needed length.
template <class T, class U>
atlas_status emit(const std::vector<U>& src, T* buf, size_t cap, size_t* len) {
  require(len != nullptr, "null length pointer");
  *len = src.size();
  if (buf == nullptr || cap < src.size()) {
    return src.empty() ? ATLAS_OK : fail(ATLAS_BUFFER_TOO_SMALL, "buffer too small");
  }
  for (size_t i = 0; i < src.size(); ++i) buf[i] = static_cast<T>(src[i]);
  return ATLAS_OK;
}

void element(const atlas_field* field, uint32_t x) {
  require(field != nullptr, "null field");
  if (x >= field->f.size()) {
    throw atlas::Error(atlas::Errc::OutOfRange, "element " + std::to_string(x) + " not in field");
  }
}

atlas_status text_out(std::string s, atlas_text** out) {
  require(out != nullptr, "null output pointer");
  *out = new atlas_text{std::move(s)};
  return ATLAS_OK;
}

}  // namespace

extern "C" {

const char* atlas_status_name(atlas_status status) {
  switch (status) {
    case ATLAS_OK: return "Ok";
    case ATLAS_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case ATLAS_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status >= ATLAS_INVALID_ARGUMENT && status <= ATLAS_PARSE_ERROR) {
    return atlas::errc_name(static_cast<atlas::Errc>(static_cast<int>(status)));
  }
  return "Unknown";
}

const char* atlas_last_error(void) { return last_error.c_str(); }

const char* atlas_text_str(const atlas_text* text) { return text ? text->s.c_str() : ""; }
size_t atlas_text_len(const atlas_text* text) { return text ? text->s.size() : 0; }
void atlas_text_destroy(atlas_text* text) { delete text; }

atlas_status atlas_field_create(unsigned m, uint32_t poly, atlas_field** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    auto f = atlas::Field::build(m, poly ? std::optional<uint32_t>(poly) : std::nullopt);
    *out = new atlas_field{std::move(f)};
    return ATLAS_OK;
  });
}

void atlas_field_destroy(atlas_field* field) { delete field; }

atlas_status atlas_field_get_info(const atlas_field* field, atlas_field_info* out) {
  return guard([&] {
    require(field && out, "null argument");
    *out = {field->f.m(), field->f.poly(), field->f.order(), field->f.checksum()};
    return ATLAS_OK;
  });
}

atlas_status atlas_default_poly(unsigned m, uint32_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = atlas::default_poly(m);
    return ATLAS_OK;
  });
}

atlas_status atlas_field_mul(const atlas_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  return guard([&] {
    element(field, a);
    element(field, b);
    require(out != nullptr, "null output pointer");
    *out = field->f.mul(a, b);
    return ATLAS_OK;
  });
}

atlas_status atlas_field_pow(const atlas_field* field, uint32_t x, uint64_t t, uint32_t* out) {
  return guard([&] {
    element(field, x);
    require(out != nullptr, "null output pointer");
    *out = field->f.pow(x, t);
    return ATLAS_OK;
  });
}

atlas_status atlas_field_log(const atlas_field* field, uint32_t x, uint32_t* out) {
  return guard([&] {
    element(field, x);
    require(out != nullptr, "null output pointer");
    *out = field->f.dlog(x);
    return ATLAS_OK;
  });
}

atlas_status atlas_field_inv_exponent(const atlas_field* field, uint64_t t, uint64_t* out) {
  return guard([&] {
    require(field && out, "null argument");
    *out = field->f.inv_exponent(t);
    return ATLAS_OK;
  });
}

atlas_status atlas_perm_monomial(const atlas_field* field, uint64_t t, atlas_perm** out) {
  return guard([&] {
    require(field && out, "null argument");
    *out = new atlas_perm{atlas::Permutation::monomial(field->f, t)};
    return ATLAS_OK;
  });
}

atlas_status atlas_perm_from_table(const atlas_field* field, const uint32_t* table, size_t len,
                                   atlas_perm** out) {
  return guard([&] {
    require(field && table && out, "null argument");
    std::vector<atlas::Elem> t(table, table + len);
    *out = new atlas_perm{atlas::Permutation::from_table(field->f, std::move(t))};
    return ATLAS_OK;
  });
}

atlas_status atlas_perm_inverse(const atlas_perm* perm, atlas_perm** out) {
  return guard([&] {
    require(perm && out, "null argument");
    *out = new atlas_perm{perm->p.inverse()};
    return ATLAS_OK;
  });
}

void atlas_perm_destroy(atlas_perm* perm) { delete perm; }

atlas_status atlas_perm_apply(const atlas_perm* perm, uint32_t x, uint32_t* out) {
  return guard([&] {
    require(perm && out, "null argument");
    if (x >= perm->p.size()) throw atlas::Error(atlas::Errc::OutOfRange, "element out of range");
    *out = perm->p(x);
    return ATLAS_OK;
  });
}

atlas_status atlas_third_point(const atlas_field* field, uint32_t p, uint32_t q, uint32_t* out) {
  return guard([&] {
    require(field && out, "null argument");
    *out = atlas::third_point(field->f, label(field, p), label(field, q)).index;
    return ATLAS_OK;
  });
}

atlas_status atlas_image_third(const atlas_field* field, const atlas_perm* perm, uint32_t p,
                               uint32_t q, atlas_convention conv, uint32_t* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::image_third(field->f, perm->p, label(field, p), label(field, q), conv_of(conv))
               .index;
    return ATLAS_OK;
  });
}

atlas_status atlas_triples_at(const atlas_field* field, uint32_t p, uint32_t* pairs, size_t cap,
                              size_t* len) {
  return guard([&] {
    require(field != nullptr, "null field");
    std::vector<uint32_t> flat;
    for (const auto& [q, r] : atlas::triples_at(field->f, label(field, p))) {
      flat.push_back(q.index);
      flat.push_back(r.index);
    }
    return emit(flat, pairs, cap, len);
  });
}

atlas_status atlas_successor(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                             uint32_t x, atlas_convention conv, uint32_t* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::successor(field->f, perm->p, label(field, a), label(field, x), conv_of(conv))
               .index;
    return ATLAS_OK;
  });
}

atlas_status atlas_rotation_line_sizes(const atlas_field* field, const atlas_perm* perm,
                                       uint32_t a, atlas_convention conv, uint64_t* sizes,
                                       size_t cap, size_t* len) {
  return guard([&] {
    same_field(field, perm);
    std::vector<uint64_t> out;
    for (const auto& line : atlas::rotation_lines(field->f, perm->p, label(field, a), conv_of(conv))) {
      out.push_back(line.size());
    }
    return emit(out, sizes, cap, len);
  });
}

atlas_status atlas_rotation_lines_text(const atlas_field* field, const atlas_perm* perm,
                                       uint32_t a, atlas_convention conv, atlas_text** out) {
  return guard([&] {
    same_field(field, perm);
    std::string s;
    for (const auto& line : atlas::rotation_lines(field->f, perm->p, label(field, a), conv_of(conv))) {
      s += atlas::format_line(line) + "\n";
    }
    return text_out(std::move(s), out);
  });
}

atlas_status atlas_spectrum_text(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                                 atlas_convention conv, int compact, atlas_text** out) {
  return guard([&] {
    same_field(field, perm);
    const auto s = atlas::spectrum(field->f, perm->p, label(field, a), conv_of(conv));
    return text_out(atlas::format_spectrum(s, compact != 0), out);
  });
}

atlas_status atlas_is_closed_surface(const atlas_field* field, const atlas_perm* perm,
                                     atlas_convention conv, int* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::is_closed_surface(field->f, perm->p, conv_of(conv)) ? 1 : 0;
    return ATLAS_OK;
  });
}

atlas_status atlas_pinch_count(const atlas_field* field, const atlas_perm* perm,
                               atlas_convention conv, uint64_t* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::pinch_count(field->f, perm->p, conv_of(conv));
    return ATLAS_OK;
  });
}

atlas_status atlas_v_value(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                           atlas_convention conv, uint64_t* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::v_value(field->f, perm->p, label(field, a), conv_of(conv));
    return ATLAS_OK;
  });
}

atlas_status atlas_v_direct(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                            uint64_t* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::v_direct(field->f, perm->p, label(field, a));
    return ATLAS_OK;
  });
}

atlas_status atlas_v_tilde(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                           atlas_convention conv, uint32_t* points, size_t cap, size_t* len) {
  return guard([&] {
    same_field(field, perm);
    std::vector<uint32_t> out;
    for (auto l : atlas::v_tilde(field->f, perm->p, label(field, a), conv_of(conv))) {
      out.push_back(l.index);
    }
    return emit(out, points, cap, len);
  });
}

atlas_status atlas_v_star(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                          atlas_convention conv, uint64_t* pairs, size_t cap, size_t* len) {
  return guard([&] {
    same_field(field, perm);
    std::vector<uint64_t> out;
    for (const auto& [mult, count] :
         atlas::v_star(field->f, perm->p, label(field, a), conv_of(conv)).histogram) {
      out.push_back(mult);
      out.push_back(count);
    }
    return emit(out, pairs, cap, len);
  });
}

atlas_status atlas_v_star_text(const atlas_field* field, const atlas_perm* perm, uint32_t a,
                               atlas_convention conv, atlas_text** out) {
  return guard([&] {
    same_field(field, perm);
    return text_out(
        atlas::format_vstar(atlas::v_star(field->f, perm->p, label(field, a), conv_of(conv))),
        out);
  });
}

atlas_status atlas_apn_by_v(const atlas_field* field, const atlas_perm* perm, int* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::apn_by_v(field->f, perm->p) ? 1 : 0;
    return ATLAS_OK;
  });
}

atlas_status atlas_apn_oracle(const atlas_field* field, const atlas_perm* perm, int* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::apn_oracle(field->f, perm->p) ? 1 : 0;
    return ATLAS_OK;
  });
}

atlas_status atlas_coset(uint64_t n, uint64_t i, uint64_t* members, size_t cap, size_t* len) {
  return guard([&] { return emit(atlas::coset(n, i), members, cap, len); });
}

atlas_status atlas_coset_star(uint64_t n, uint64_t t, uint64_t* rep, uint64_t* members,
                              size_t cap, size_t* len) {
  return guard([&] {
    const auto c = atlas::coset_star(n, t);
    if (rep) *rep = c.rep;
    return emit(c.members, members, cap, len);
  });
}

atlas_status atlas_class_reps(uint64_t n, uint64_t* reps, size_t cap, size_t* len) {
  return guard([&] {
    std::vector<uint64_t> out;
    for (const auto& c : atlas::class_reps(n).classes) out.push_back(c.rep);
    return emit(out, reps, cap, len);
  });
}

atlas_status atlas_code_rank(const atlas_field* field, const atlas_perm* perm, unsigned* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = atlas::rank(atlas::build_parity(field->f, perm->p));
    return ATLAS_OK;
  });
}

atlas_status atlas_min_distance(const atlas_field* field, const atlas_perm* perm, int* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    *out = static_cast<int>(atlas::min_distance_upto5(field->f, perm->p));
    return ATLAS_OK;
  });
}

atlas_status atlas_weight_distribution(const atlas_field* field, const atlas_perm* perm,
                                       int extended, unsigned jobs, atlas_weights** out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    const auto wd = atlas::weight_distribution(field->f, perm->p, extended != 0,
                                               jobs == 0 ? 1 : jobs);
    auto* w = new atlas_weights;
    for (const auto& c : wd.counts) w->counts.push_back(c.get_str());
    *out = w;
    return ATLAS_OK;
  });
}

void atlas_weights_destroy(atlas_weights* w) { delete w; }

size_t atlas_weights_size(const atlas_weights* w) { return w ? w->counts.size() : 0; }

const char* atlas_weights_count(const atlas_weights* w, size_t i) {
  if (!w || i >= w->counts.size()) return nullptr;
  return w->counts[i].c_str();
}

atlas_status atlas_quadruple_check(const atlas_field* field, const atlas_perm* perm,
                                   atlas_quadruple* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    const auto q = atlas::quadruple_check(field->f, perm->p);
    *out = {q.lhs, q.solution_sum, q.rhs_times3, q.agrees() ? 1 : 0};
    return ATLAS_OK;
  });
}

atlas_status atlas_surface_report(const atlas_field* field, const atlas_perm* perm,
                                  atlas_convention conv, atlas_surface* out) {
  return guard([&] {
    same_field(field, perm);
    require(out != nullptr, "null output pointer");
    const auto s = atlas::surface_report(field->f, perm->p, conv_of(conv));
    *out = {s.vertices, s.edges,         s.faces, s.chi, s.chi_formula, s.orientable ? 1 : 0,
            s.genus_or_crosscaps};
    return ATLAS_OK;
  });
}

atlas_status atlas_iso_search(const atlas_field* field, const atlas_perm* f1,
                              const atlas_perm* f2, atlas_convention conv, uint64_t node_budget,
                              atlas_iso* out, uint32_t* witness, size_t witness_cap) {
  return guard([&] {
    same_field(field, f1);
    same_field(field, f2);
    require(out != nullptr, "null output pointer");
    const auto r = atlas::iso_search(field->f, f1->p, f2->p, conv_of(conv),
                                     node_budget ? node_budget : atlas::kDefaultIsoNodes);
    *out = {r.verdict == atlas::IsoVerdict::Isomorphic ? 1 : 0, r.colour_reversing ? 1 : 0,
            r.nodes};
    if (witness && out->isomorphic) {
      if (witness_cap < r.witness.size()) return fail(ATLAS_BUFFER_TOO_SMALL, "witness buffer too small");
      std::copy(r.witness.begin(), r.witness.end(), witness);
    }
    return ATLAS_OK;
  });
}

atlas_status atlas_is_isomorphism(const atlas_field* field, const atlas_perm* f1,
                                  const atlas_perm* f2, atlas_convention conv,
                                  const uint32_t* phi, size_t len, int colour_reversing,
                                  int* out) {
  return guard([&] {
    same_field(field, f1);
    same_field(field, f2);
    require(phi && out, "null argument");
    *out = atlas::is_isomorphism(field->f, f1->p, f2->p, conv_of(conv),
                                 std::span<const uint32_t>(phi, len), colour_reversing != 0)
               ? 1
               : 0;
    return ATLAS_OK;
  });
}

void atlas_survey_config_init(atlas_survey_config* cfg, unsigned m) {
  if (!cfg) return;
  const atlas::SurveyConfig d;
  *cfg = {m, 0, ATLAS_CONVENTION_INVERSE, d.weights_max_m, d.iso_max_m,
          d.iso_nodes, d.orient_max_m, d.time_budget_s};
}

atlas_status atlas_survey(const atlas_survey_config* cfg, unsigned jobs, atlas_report** out) {
  return guard([&] {
    require(cfg && out, "null argument");
    atlas::SurveyConfig c;
    c.m = cfg->m;
    if (cfg->poly) c.poly = cfg->poly;
    c.convention = conv_of(cfg->convention);
    c.weights_max_m = cfg->weights_max_m;
    c.iso_max_m = cfg->iso_max_m;
    c.iso_nodes = cfg->iso_nodes;
    c.orient_max_m = cfg->orient_max_m;
    c.time_budget_s = cfg->time_budget_s;
    *out = new atlas_report{atlas::survey(c, jobs == 0 ? 1 : jobs)};
    if (!(*out)->r.complete) {
      return fail(ATLAS_BUDGET_EXCEEDED,
                  "time budget exhausted after " + std::to_string((*out)->r.records.size()) +
                      " of " + std::to_string((*out)->r.reps_total) + " classes");
    }
    return ATLAS_OK;
  });
}

void atlas_report_destroy(atlas_report* report) { delete report; }

atlas_status atlas_report_get_info(const atlas_report* report, atlas_report_info* out) {
  return guard([&] {
    require(report && out, "null argument");
    const auto& r = report->r;
    *out = {r.config.m,    r.poly,          r.records.size(), r.reps_total,
            r.closed_count(), r.group_count(), r.complete ? 1 : 0};
    return ATLAS_OK;
  });
}

atlas_status atlas_report_record(const atlas_report* report, size_t index,
                                 atlas_class_record* out) {
  return guard([&] {
    require(report && out, "null argument");
    if (index >= report->r.records.size()) {
      throw atlas::Error(atlas::Errc::OutOfRange, "record index out of range");
    }
    const auto& c = report->r.records[index];
    *out = {c.rep,
            c.coset_size,
            c.closed_surface ? 1 : 0,
            c.apn ? 1 : 0,
            c.v,
            c.spectrum.lines,
            c.orientable ? (*c.orientable ? 1 : 0) : -1,
            c.decided_by ? atlas::decided_by_name(*c.decided_by) : nullptr,
            c.group.value_or(0)};
    return ATLAS_OK;
  });
}

atlas_status atlas_report_render(const atlas_report* report, atlas_format format,
                                 atlas_text** out) {
  return guard([&] {
    require(report != nullptr, "null report");
    switch (format) {
      case ATLAS_FORMAT_JSONL: return text_out(atlas::to_jsonl(report->r), out);
      case ATLAS_FORMAT_MARKDOWN: return text_out(atlas::to_markdown(report->r), out);
      case ATLAS_FORMAT_CSV_V: return text_out(atlas::to_csv(report->r, atlas::TableKind::VTable), out);
      case ATLAS_FORMAT_CSV_VSTAR:
        return text_out(atlas::to_csv(report->r, atlas::TableKind::VStarTable), out);
      case ATLAS_FORMAT_CSV_SPECTRUM:
        return text_out(atlas::to_csv(report->r, atlas::TableKind::SpectrumTable), out);
      case ATLAS_FORMAT_CSV_COUNTS:
        return text_out(atlas::to_csv(report->r, atlas::TableKind::Counts), out);
    }
    return fail(ATLAS_INVALID_ARGUMENT, "unknown format");
  });
}

atlas_status atlas_report_write_jsonl(const atlas_report* report, const char* path) {
  return guard([&] {
    require(report && path, "null argument");
    atlas::write_jsonl(report->r, path);
    return ATLAS_OK;
  });
}

atlas_status atlas_report_load_jsonl(const char* path, atlas_report** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new atlas_report{atlas::load_jsonl(path)};
    return ATLAS_OK;
  });
}

atlas_status atlas_report_equal(const atlas_report* a, const atlas_report* b, int* out) {
  return guard([&] {
    require(a && b && out, "null argument");
    *out = a->r == b->r ? 1 : 0;
    return ATLAS_OK;
  });
}

atlas_status atlas_verify_golden(const atlas_report* report, const char* dir, int* ok,
                                 uint64_t* rows_checked, atlas_text** log) {
  return guard([&] {
    require(report && dir && ok, "null argument");
    const auto v = atlas::verify_golden(report->r, dir);
    *ok = v.ok() ? 1 : 0;
    if (rows_checked) *rows_checked = v.rows_checked;
    if (log) {
      std::string s;
      for (const auto& m : v.mismatches) s += "mismatch: " + m + "\n";
      for (const auto& n : v.notes) s += "note: " + n + "\n";
      *log = new atlas_text{std::move(s)};
    }
    return ATLAS_OK;
  });
}

}  // extern "C"
