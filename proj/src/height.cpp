#include "morsespine/height.hpp"

#include <algorithm>
#include <sstream>

#include "morsespine/error.hpp"

namespace morsespine {

const char* toString(HeightConvention c) {
  return c == HeightConvention::Literal ? "literal" : "reduced";
}

HeightConvention heightConventionFromString(const std::string& s) {
  if (s == "literal") return HeightConvention::Literal;
  if (s == "reduced") return HeightConvention::ReducedDegree;
  throw ParseError("unknown height convention '" + s + "' (expected literal or reduced)");
}

std::int64_t HeightVector::at(std::size_t i) const {
  if (i < head.size()) return head[i];
  // head has odd length, so odd indices are n_i and even ones d_i
  return (i % 2 == 1) ? tail.first : tail.second;
}

HeightVector height(const BasepointedGraph& g, HeightConvention convention) {
  const int levels = g.maxLevel();
  const int offset = convention == HeightConvention::ReducedDegree ? 2 : 0;

  std::vector<std::int64_t> count(levels + 1, 0);
  std::vector<std::int64_t> weight(levels + 1, 0);
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    const std::int64_t w = g.degree(v) - offset;
    ++count[g.level(v)];
    weight[g.level(v)] += w;
    total += w;
  }

  HeightVector h;
  h.head.reserve(1 + 2 * levels);
  std::int64_t d0 = 0;
  for (VertexId v = 0; v < g.vertexCount(); ++v)
    if (v != g.basepoint()) d0 += g.degree(v) - 2;
  h.head.push_back(d0);
  for (int i = 1; i <= levels; ++i) {
    h.head.push_back(-count[i]);
    h.head.push_back(total - weight[i]);
  }
  h.tail = {0, total};
  return h;
}

std::strong_ordering compareHeights(const HeightVector& a, const HeightVector& b) {
  const std::size_t n = std::max(a.head.size(), b.head.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.at(i) <=> b.at(i); c != 0) return c;
  }
  // Aligned past both heads: the remaining sequences are the tails repeated.
  const std::size_t parity = n % 2;
  if (parity == 1) {
    if (auto c = a.tail.first <=> b.tail.first; c != 0) return c;
    return a.tail.second <=> b.tail.second;
  }
  if (auto c = a.tail.second <=> b.tail.second; c != 0) return c;
  return a.tail.first <=> b.tail.first;
}

std::string toString(const HeightVector& h) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < h.head.size(); ++i) out << (i ? ", " : "") << h.head[i];
  out << ") tail (" << h.tail.first << ',' << h.tail.second << ')';
  return out.str();
}

}  // namespace morsespine
