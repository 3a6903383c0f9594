#include "morsespine/collapse.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace morsespine {

SimplicialComplex freeFaceCollapse(const SimplicialComplex& x) {
  const int dim = x.dimension();
  if (dim < 1) return x;

  std::vector<std::size_t> offset(dim + 2, 0);
  for (int d = 0; d <= dim; ++d) offset[d + 1] = offset[d] + x.simplices(d).size();
  const std::size_t total = offset[dim + 1];

  std::vector<int> dimensionOf(total);
  std::vector<std::vector<std::size_t>> faces(total), cofaces(total);
  Simplex face;
  for (int d = 0; d <= dim; ++d) {
    const auto& cells = x.simplices(d);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t id = offset[d] + i;
      dimensionOf[id] = d;
      if (d == 0) continue;
      for (std::size_t k = 0; k < cells[i].size(); ++k) {
        face.assign(cells[i].begin(), cells[i].end());
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        const std::size_t fid = offset[d - 1] + *x.indexOf(face);
        faces[id].push_back(fid);
        cofaces[fid].push_back(id);
      }
    }
  }

  std::vector<char> alive(total, 1);
  std::vector<int> liveCofaces(total);
  for (std::size_t id = 0; id < total; ++id) liveCofaces[id] = static_cast<int>(cofaces[id].size());

  // (dimension, id): pop the highest-dimensional free face, smallest id first
  using Entry = std::pair<int, std::size_t>;
  auto later = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  for (std::size_t id = 0; id < total; ++id)
    if (liveCofaces[id] == 1) queue.emplace(dimensionOf[id], id);

  auto release = [&](std::size_t id) {
    if (alive[id] && --liveCofaces[id] == 1) queue.emplace(dimensionOf[id], id);
  };
  while (!queue.empty()) {
    const std::size_t sigma = queue.top().second;
    queue.pop();
    if (!alive[sigma] || liveCofaces[sigma] != 1) continue;
    std::size_t tau = total;
    for (std::size_t c : cofaces[sigma])
      if (alive[c]) tau = c;
    alive[sigma] = 0;
    alive[tau] = 0;
    for (std::size_t f : faces[tau])
      if (f != sigma) release(f);
    for (std::size_t f : faces[sigma]) release(f);
  }

  std::vector<Simplex> kept;
  for (int d = 0; d <= dim; ++d) {
    const auto& cells = x.simplices(d);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (alive[offset[d] + i]) kept.push_back(cells[i]);
  }
  return SimplicialComplex::fromClosedSimplices(x.vertexCount(), std::move(kept));
}

bool collapsesToPoint(const SimplicialComplex& x) {
  const auto core = freeFaceCollapse(x);
  return core.dimension() == 0 && core.simplices(0).size() == 1;
}

}  // namespace morsespine
