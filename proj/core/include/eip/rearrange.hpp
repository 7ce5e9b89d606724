#pragma once

#include "eip/config.hpp"

namespace eip {

// Replaces the nonempty sections orthogonal to `axis` (1-based) by daisies
// of the same cardinalities, sorted by size onto consecutive levels 1..n.
// Never increases the edge perimeter. Sections are embedded canonically
// (all free coordinates starting at 1) so the output is deterministic.
Config decreasing_rearrangement(const Config& c, int axis);

// Whether every (d-1)-dimensional section along every axis attains the
// minimal perimeter for its cardinality.
bool sections_are_minimizers(const Config& c);

}  // namespace eip
