// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "wmnroute/errors.hpp"
#include "wmnroute/routing.hpp"

namespace wmnroute {

AllPairsTable route_floyd_warshall(const Graph& graph, double bound, simd::Isa isa) {
  if (!(bound >= 0.0)) throw InvalidQuery("delay bound must be nonnegative");
  const simd::Kernels& k = simd::kernels(isa);
  const std::size_t n = graph.node_count();

  AllPairsTable t;
  t.n = n;
  t.bound = bound;
  t.rate.assign(n * n, 0.0);
  t.delay.assign(n * n, kUnreachable);
  t.parent.assign(n * n, -1);
  t.route.assign(n * n, RopeArena::kNone);
  for (std::size_t i = 0; i < n; ++i) {
    t.rate[i * n + i] = kInfiniteRate;
    t.delay[i * n + i] = 0.0;
    t.route[i * n + i] = RopeArena::kEmpty;
  }
  // A direct link over the bound starts out as no entry. No entry then ever
  // exceeds the bound, and round k only reads row k and column k.
  for (std::size_t a = 0; a < graph.arc_count(); ++a) {
    const Link& arc = graph.arcs()[a];
    if (!(arc.delay <= bound)) continue;
    const std::size_t at = index_of(arc.from) * n + index_of(arc.to);
    t.rate[at] = arc.rate;
    t.delay[at] = arc.delay;
    t.parent[at] = static_cast<std::int32_t>(index_of(arc.from));
    t.route[at] = t.ropes.leaf(static_cast<ArcId>(a));
  }

  std::vector<std::uint32_t> updated(n);
  for (std::size_t via = 0; via < n; ++via) {
    const double* pivot_rate = &t.rate[via * n];
    const double* pivot_delay = &t.delay[via * n];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t ik = i * n + via;
      // R(i,k) == 0: no change through k. Row k itself cannot improve.
      if (i == via || t.rate[ik] == 0.0) continue;
      simd::RowRelax row;
      row.via_rate = t.rate[ik];
      row.via_delay = t.delay[ik];
      row.pivot_rate = pivot_rate;
      row.pivot_delay = pivot_delay;
      row.rate = &t.rate[i * n];
      row.delay = &t.delay[i * n];
      row.n = n;
      row.bound = bound;
      const std::size_t count = k.relax_row(row, updated.data());
      for (std::size_t c = 0; c < count; ++c) {
        const std::size_t j = updated[c];
        t.route[i * n + j] = t.ropes.concat(t.route[ik], t.route[via * n + j]);
        t.parent[i * n + j] = t.parent[via * n + j];
      }
    }
  }
  return t;
}

}  // namespace wmnroute
