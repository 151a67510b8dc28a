// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wmnroute/routing.hpp"

namespace wmnroute::detail {

/// Source label rate +inf and delay 0; all others rate 0, delay +inf.
LabelTable initial_labels(const Graph& graph, NodeId source, double bound);

/// One relaxation of arc u -> v with the delay-feasibility guard and the
/// "higher rate or violated bound" replacement rule. Returns true when v's
/// label changed.
bool relax(const Graph& graph, LabelTable& table, ArcId arc_id);

}  // namespace wmnroute::detail
