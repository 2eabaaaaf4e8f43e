#include "atlas/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "atlas/codes.hpp"
#include "atlas/cosets.hpp"
#include "atlas/error.hpp"
#include "atlas/surface.hpp"

namespace atlas {

const char* decided_by_name(DecidedBy d) {
  switch (d) {
    case DecidedBy::V: return "v";
    case DecidedBy::VStar: return "vstar";
    case DecidedBy::Weights: return "weights";
    case DecidedBy::Iso: return "iso";
    case DecidedBy::Undecided: return "undecided";
  }
  return "?";
}

DecidedBy parse_decided_by(const std::string& s) {
  for (DecidedBy d : {DecidedBy::V, DecidedBy::VStar, DecidedBy::Weights, DecidedBy::Iso,
                      DecidedBy::Undecided}) {
    if (s == decided_by_name(d)) return d;
  }
  throw Error(Errc::ParseError, "unknown separator '" + s + "'");
}

std::uint32_t ClassReport::group_count() const {
  std::uint32_t g = 0;
  for (const auto& r : records) {
    if (r.group) g = std::max(g, *r.group);
  }
  return g;
}

std::uint64_t ClassReport::closed_count() const {
  std::uint64_t c = 0;
  for (const auto& r : records) c += r.closed_surface;
  return c;
}

namespace {

ClassRecord examine(const Field& field, const CosetClass& cls, const SurveyConfig& cfg) {
  const Permutation f = Permutation::monomial(field, cls.rep);
  const InvariantRecord inv = invariants_at_one(field, f, cfg.convention);
  ClassRecord rec;
  rec.rep = cls.rep;
  rec.coset_size = cls.members.size();
  rec.closed_surface = inv.closed_surface;
  rec.apn = inv.apn;
  rec.v = inv.v;
  rec.vstar = inv.vstar;
  rec.spectrum = inv.spectrum;
  if (rec.closed_surface && cfg.m <= cfg.orient_max_m) {
    rec.orientable = surface_report(field, f, cfg.convention).orientable;
  }
  return rec;
}

// Groups are formed by union-find over record indices; ties the invariants
// cannot break are only ever merged by an explicit isomorphism witness.
class Grouping {
 public:
  Grouping(const Field& field, const SurveyConfig& cfg, std::vector<ClassRecord>& records,
           unsigned jobs)
      : field_(field), cfg_(cfg), rec_(records), jobs_(jobs), parent_(records.size()) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  void run() {
    std::map<std::uint64_t, std::vector<std::size_t>> by_v;
    for (std::size_t i = 0; i < rec_.size(); ++i) {
      if (rec_[i].closed_surface) by_v[rec_[i].v].push_back(i);
    }
    for (auto& [v, tied] : by_v) {
      if (tied.size() == 1) {
        rec_[tied[0]].decided_by = DecidedBy::V;
        continue;
      }
      std::map<VStar, std::vector<std::size_t>> by_vstar;
      for (std::size_t i : tied) by_vstar[rec_[i].vstar].push_back(i);
      for (auto& [vs, still] : by_vstar) {
        if (still.size() == 1) {
          rec_[still[0]].decided_by = DecidedBy::VStar;
        } else if (cfg_.m <= cfg_.weights_max_m) {
          split_by_weights(still);
        } else {
          split_by_iso(still);
        }
      }
    }
    number_groups();
  }

 private:
  void split_by_weights(const std::vector<std::size_t>& tied) {
    std::vector<std::pair<WeightDistribution, std::vector<std::size_t>>> parts;
    for (std::size_t i : tied) {
      const Permutation f = Permutation::monomial(field_, rec_[i].rep);
      WeightDistribution wd = weight_distribution(field_, f, false, jobs_);
      auto it = std::find_if(parts.begin(), parts.end(),
                             [&](const auto& p) { return p.first == wd; });
      if (it == parts.end()) {
        parts.emplace_back(std::move(wd), std::vector<std::size_t>{i});
      } else {
        it->second.push_back(i);
      }
    }
    for (auto& [wd, part] : parts) {
      if (part.size() == 1) {
        rec_[part[0]].decided_by = DecidedBy::Weights;
      } else {
        split_by_iso(part);
      }
    }
  }

  void split_by_iso(const std::vector<std::size_t>& tied) {
    if (cfg_.m > cfg_.iso_max_m) {
      for (std::size_t i : tied) rec_[i].decided_by = DecidedBy::Undecided;
      return;
    }
    std::vector<bool> unsure(tied.size(), false);
    for (std::size_t a = 0; a < tied.size(); ++a) {
      for (std::size_t b = a + 1; b < tied.size(); ++b) {
        if (find(tied[a]) == find(tied[b])) continue;
        const Permutation f1 = Permutation::monomial(field_, rec_[tied[a]].rep);
        const Permutation f2 = Permutation::monomial(field_, rec_[tied[b]].rep);
        try {
          const IsoResult r = iso_search(field_, f1, f2, cfg_.convention, cfg_.iso_nodes);
          if (r.verdict == IsoVerdict::Isomorphic) parent_[find(tied[b])] = find(tied[a]);
        } catch (const Error& e) {
          if (e.code() != Errc::Timeout) throw;
          unsure[a] = unsure[b] = true;
        }
      }
    }
    for (std::size_t a = 0; a < tied.size(); ++a) {
      rec_[tied[a]].decided_by = unsure[a] ? DecidedBy::Undecided : DecidedBy::Iso;
    }
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  void number_groups() {
    std::map<std::size_t, std::uint32_t> ids;
    for (std::size_t i = 0; i < rec_.size(); ++i) {
      if (!rec_[i].closed_surface) continue;
      const auto next_id = static_cast<std::uint32_t>(ids.size() + 1);
      rec_[i].group = ids.try_emplace(find(i), next_id).first->second;
    }
  }

  const Field& field_;
  const SurveyConfig& cfg_;
  std::vector<ClassRecord>& rec_;
  unsigned jobs_;
  std::vector<std::size_t> parent_;
};

}  // namespace

ClassReport survey(const SurveyConfig& config, unsigned jobs) {
  if (config.m < 3) throw Error(Errc::OutOfRange, "survey needs m >= 3");
  const Field field = Field::build(config.m, config.poly);
  const ClassSet set = class_reps(field.order());
  const auto& classes = set.classes;

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (config.time_budget_s <= 0) return false;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    return spent.count() > config.time_budget_s;
  };

  std::vector<std::optional<ClassRecord>> slots(classes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      if (out_of_time()) {
        stop = true;
        return;
      }
      const std::size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      try {
        slots[i] = examine(field, classes[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, classes.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  ClassReport report;
  report.config = config;
  report.poly = field.poly();
  report.reps_total = classes.size();
  for (auto& s : slots) {
    if (s) {
      report.records.push_back(std::move(*s));
    } else {
      report.complete = false;
    }
  }
  Grouping(field, config, report.records, std::max(1u, jobs)).run();
  return report;
}

}  // namespace atlas
