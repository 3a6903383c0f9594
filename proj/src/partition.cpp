#include "morsespine/partition.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "morsespine/error.hpp"

namespace morsespine {

LabelSet labelSet(const std::vector<int>& labels) {
  LabelSet s = 0;
  for (int l : labels) {
    if (l < 1 || l > kMaxLabels) throw InvalidPartition("label out of range: " + std::to_string(l));
    s |= 1u << (l - 1);
  }
  return s;
}

LabelSet firstLabels(int k) { return k <= 0 ? 0u : ((1u << k) - 1u); }

std::vector<int> labelsOf(LabelSet s) {
  std::vector<int> out;
  for (int l = 1; s != 0; ++l, s >>= 1)
    if (s & 1u) out.push_back(l);
  return out;
}

int labelCount(LabelSet s) { return std::popcount(s); }

const char* toString(CompatMode m) { return m == CompatMode::Paper ? "paper" : "classical"; }

CompatMode compatModeFromString(const std::string& s) {
  if (s == "paper") return CompatMode::Paper;
  if (s == "classical") return CompatMode::Classical;
  throw ParseError("unknown compatibility mode '" + s + "' (expected paper or classical)");
}

TwoBlockPartition::TwoBlockPartition(int groundSize, LabelSet block) : n_(groundSize), a_(block) {
  if (n_ < 4 || n_ > kMaxLabels) throw InvalidPartition("ground set size must be in [4, 31]");
  if ((a_ & ~full()) != 0) throw InvalidPartition("block contains labels outside {1..n}");
  if (!(a_ & 1u)) a_ = full() & ~a_;
  if (labelCount(a()) < 2 || labelCount(aBar()) < 2)
    throw InvalidPartition("both blocks need at least two labels");
}

TwoBlockPartition TwoBlockPartition::parse(const std::string& text) {
  std::vector<int> left, right;
  bool seenBar = false;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    (seenBar ? right : left).push_back(std::stoi(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch == '|') {
      flush();
      if (seenBar) throw ParseError("partition has more than one '|': " + text);
      seenBar = true;
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '{' || ch == '}') {
      flush();
    } else {
      throw ParseError("unexpected character in partition: " + text);
    }
  }
  flush();
  if (!seenBar) throw ParseError("partition needs a '|': " + text);
  const LabelSet a = labelSet(left);
  const LabelSet b = labelSet(right);
  if (a & b) throw InvalidPartition("blocks overlap: " + text);
  const int n = labelCount(a | b);
  if ((a | b) != firstLabels(n)) throw InvalidPartition("blocks must cover {1..n}: " + text);
  return TwoBlockPartition(n, a);
}

std::string TwoBlockPartition::toString() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (int l : labelsOf(a())) {
    out << (first ? "" : ",") << l;
    first = false;
  }
  out << '|';
  first = true;
  for (int l : labelsOf(aBar())) {
    out << (first ? "" : ",") << l;
    first = false;
  }
  out << ')';
  return out.str();
}

std::vector<TwoBlockPartition> allPartitions(int n) {
  std::vector<TwoBlockPartition> out;
  if (n < 4) return out;
  const LabelSet full = firstLabels(n);
  for (LabelSet rest = 0; rest < (1u << (n - 1)); ++rest) {
    const LabelSet a = 1u | (rest << 1);
    const int size = labelCount(a);
    if (size >= 2 && n - size >= 2) out.emplace_back(n, a & full);
  }
  return out;
}

namespace {
bool properSubset(LabelSet x, LabelSet y) { return x != y && (x & ~y) == 0; }
}  // namespace

bool isCompatible(const TwoBlockPartition& u, const TwoBlockPartition& v, CompatMode mode) {
  if (u.groundSize() != v.groundSize())
    throw InvalidPartition("partitions over different ground sets");
  if (u == v) throw SamePartition("compatibility of a partition with itself");
  if (properSubset(u.a(), v.a()) || properSubset(u.aBar(), v.aBar())) return true;
  return mode == CompatMode::Classical && (u.aBar() & v.aBar()) == 0;
}

bool splits(const TwoBlockPartition& v, LabelSet s) {
  return (s & ~v.a()) != 0 && (s & ~v.aBar()) != 0;
}

}  // namespace morsespine
