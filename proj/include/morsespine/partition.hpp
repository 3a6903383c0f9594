#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace morsespine {

/// Label sets over {1..n} as bitmasks; bit (l-1) stands for label l.
using LabelSet = std::uint32_t;
inline constexpr int kMaxLabels = 31;

LabelSet labelSet(const std::vector<int>& labels);
LabelSet firstLabels(int k);  // {1..k}
std::vector<int> labelsOf(LabelSet s);
int labelCount(LabelSet s);

enum class CompatMode { Paper, Classical };
const char* toString(CompatMode m);
CompatMode compatModeFromString(const std::string& s);

/// Unordered partition {a, aBar} of {1..n} into two blocks of size >= 2,
/// normalized so that a is the block holding label 1.
class TwoBlockPartition {
 public:
  /// `block` may be either side; it is normalized. Throws InvalidPartition.
  TwoBlockPartition(int groundSize, LabelSet block);

  /// Parses "1,3|2,4", "(1, 3 | 2, 4)" or "{1,3|2,4}".
  static TwoBlockPartition parse(const std::string& text);

  int groundSize() const { return n_; }
  LabelSet a() const { return a_; }
  LabelSet aBar() const { return full() & ~a_; }
  /// |aBar|
  int size() const { return labelCount(aBar()); }
  LabelSet full() const { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }

  /// "(1,3|2,4)"
  std::string toString() const;

  auto operator<=>(const TwoBlockPartition&) const = default;

 private:
  int n_;
  LabelSet a_;
};

/// Every partition of {1..n} into two blocks of size >= 2, ordered by the
/// bitmask of their 1-block.
std::vector<TwoBlockPartition> allPartitions(int n);

/// Paper mode: a_u ⊊ a_v or aBar_u ⊊ aBar_v. Classical mode additionally
/// accepts aBar_u ∩ aBar_v = ∅. Throws SamePartition when u == v.
bool isCompatible(const TwoBlockPartition& u, const TwoBlockPartition& v,
                  CompatMode mode = CompatMode::Paper);

/// S ⊄ a and S ⊄ aBar.
bool splits(const TwoBlockPartition& v, LabelSet s);

}  // namespace morsespine
