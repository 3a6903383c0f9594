#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "morsespine/harness.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/partition.hpp"

namespace morsespine {

enum class Verdict { Pass, PassStrong, Fail, Inconclusive };
const char* toString(Verdict v);
inline bool isPassing(Verdict v) { return v == Verdict::Pass || v == Verdict::PassStrong; }

struct VerifyOptions {
  std::vector<int> ranks{2};
  int maxVertices = 3;
  int vertexBound = 6;
  int sigmaMin = 4;
  int sigmaMax = 6;
  BlowUpCaps caps;
  CompatMode compat = CompatMode::Paper;
  SbuMode sbu = SbuMode::Strict;
  HeightConvention height = HeightConvention::Literal;
  int minBasepointDegree = 1;
  int jobs = 1;
};

struct VerificationReport {
  std::string lemmaId;
  std::string instance;                // canonical instance key
  nlohmann::ordered_json instanceData;  // graph file JSON or Σ-spec
  std::string expected;
  std::optional<HomologyProfile> profile;
  std::string classification;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;
  nlohmann::ordered_json reproducer;  // set on FAIL
  double seconds = 0.0;
};

struct LemmaInfo {
  std::string id;
  std::string statement;
};

/// Every lemma id accepted by verifyLemma, in run order ("all" excluded).
const std::vector<LemmaInfo>& lemmaRegistry();

/// Runs one lemma, or the whole registry for "all". Reports are ordered by
/// lemma, then by instance. Throws UnknownLemma.
std::vector<VerificationReport> verifyLemma(const std::string& lemmaId, const VerifyOptions& options);

struct LemmaSummary {
  std::size_t pass = 0, passStrong = 0, fail = 0, inconclusive = 0;
  std::size_t total() const { return pass + passStrong + fail + inconclusive; }
};

struct VerificationSummary {
  std::map<std::string, LemmaSummary> perLemma;
  bool anyFail() const;
};

VerificationSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace morsespine
