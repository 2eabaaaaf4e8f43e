#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atlas/invariants.hpp"
#include "atlas/iso.hpp"
#include "atlas/perm.hpp"

namespace atlas {

/// Which separator put a closed-surface class in a group of its own.
enum class DecidedBy { V, VStar, Weights, Iso, Undecided };

const char* decided_by_name(DecidedBy d);
DecidedBy parse_decided_by(const std::string& s);

struct SurveyConfig {
  unsigned m = 0;
  std::optional<Elem> poly;      // nullopt: default primitive polynomial
  Convention convention = Convention::Inverse;
  unsigned weights_max_m = 13;
  unsigned iso_max_m = 11;
  std::uint64_t iso_nodes = kDefaultIsoNodes;
  unsigned orient_max_m = 13;
  double time_budget_s = 0;      // 0: unlimited

  bool operator==(const SurveyConfig&) const = default;
};

struct ClassRecord {
  std::uint64_t rep = 0;
  std::uint64_t coset_size = 0;
  bool closed_surface = false;
  bool apn = false;
  std::uint64_t v = 0;
  VStar vstar;
  Spectrum spectrum;
  std::optional<bool> orientable;      // closed surfaces up to orient_max_m
  std::optional<DecidedBy> decided_by; // closed surfaces only
  std::optional<std::uint32_t> group;  // 1-based isomorphism class
  bool operator==(const ClassRecord&) const = default;
};

struct ClassReport {
  SurveyConfig config;
  Elem poly = 0;                       // polynomial actually used
  std::vector<ClassRecord> records;    // ascending rep
  std::uint64_t reps_total = 0;
  bool complete = true;                // false when the time budget ran out
  bool operator==(const ClassReport&) const = default;

  std::uint32_t group_count() const;
  std::uint64_t closed_count() const;
};

/// Survey of all monomial classes C*_t (t coprime to 2^m - 1, t outside the
/// linear class).  `jobs` only affects speed; the report is identical for
/// any worker count.  An exhausted time budget yields complete == false.
ClassReport survey(const SurveyConfig& config, unsigned jobs = 1);

}  // namespace atlas
