#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "npcoh/closed_form.hpp"
#include "npcoh/engine.hpp"
#include "npcoh/milnor.hpp"

namespace npcoh {

enum class AnalysisMode { closed_form, brute_force, verify };

AnalysisMode mode_from_name(const std::string& name);
std::string mode_name(AnalysisMode m);

struct AnalysisRequest {
  Polynomial f;
  WeightSystem weights;
  std::vector<std::string> var_names;  // for rendering; defaults if empty
  std::vector<long> ps;                // non-empty, deduplicated on run
  AnalysisMode mode = AnalysisMode::closed_form;
  std::optional<std::pair<long, long>> window;  // override [lo, hi]
};

struct ProfileData {
  long lo = 0;
  long hi = 0;
  std::map<long, long> dims;  // non-zero degrees only
  bool stabilized = false;
  long total = 0;
  bool operator==(const ProfileData&) const = default;
};

struct EntryReport {
  int k = 0;
  std::string kind;  // "finite" | "infinite" | "sentinel"
  long dim = 0;      // meaningful only when kind == "finite"
  std::vector<std::string> generators;
  std::optional<ProfileData> profile;
  std::string verdict;  // "" outside verify mode
  bool operator==(const EntryReport&) const = default;
};

struct PerPReport {
  long p = 0;
  std::map<long, long> r;  // j -> r_j for j in 2..q-1
  long s = 0;
  std::vector<EntryReport> entries;  // k = 0..n
  std::vector<std::string> verdicts;  // one per k in verify mode, else empty
  bool operator==(const PerPReport&) const = default;
};

struct AnalysisResult {
  int n = 0;
  std::vector<long> weights;
  long N = 0;
  long codimension = 0;
  std::vector<std::string> basis;
  std::vector<PerPReport> reports;  // ascending p
  bool operator==(const AnalysisResult&) const = default;
};

bool has_mismatch(const AnalysisResult& r);

AnalysisResult run_analysis(const AnalysisRequest& req);

std::string emit_json(const AnalysisResult& r);
AnalysisResult parse_json(const std::string& text);

// Aligned, human-readable tables.
std::string render_text(const AnalysisResult& r);

}  // namespace npcoh
