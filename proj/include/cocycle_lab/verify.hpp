#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocycle_lab/reference_tables.hpp"

namespace cocycle_lab {

/// One checked statement. Every claim belongs to exactly one acceptance criterion.
struct Claim {
  std::string id;
  int criterion;
  std::string statement;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<Claim> claims;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const;
  /// criterion -> every claim of that criterion passed.
  std::map<int, bool> by_criterion() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Tokens selecting what runs: a group ("cocycles", "braidings", "hopf"),
  /// a criterion number ("7" or "c07"), or a claim-id prefix. Empty runs everything.
  std::vector<std::string> only;
  /// Reference tables to check against; the built-in transcription when null.
  const reference::ReferenceData* data = nullptr;
};

inline constexpr int kCriteriaCount = 15;
std::string criterion_title(int criterion);
std::string criterion_group(int criterion);

VerificationReport verify_paper(const VerifyOptions& options = {});

}  // namespace cocycle_lab
