#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "incrtree/model.hpp"
#include "incrtree/rational.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// Guard against runaway enumerations; the predicted tree count must not
// exceed max_trees. Sized so materialized enumerations stay well under 2 GB.
struct EnumLimits {
  std::uint64_t max_trees = 1u << 21;
};

using TreeVisitor = std::function<void(const IncreasingTree&)>;

// Every d-ary increasing tree of size n exactly once, by inserting label
// m into every free slot of every tree of size m-1. Depth-first, free slots
// visited in (vertex ascending, slot ascending) order; the order is
// deterministic and golden tests rely on it. The visited tree is reused
// storage: copy it if it must outlive the callback.
void enumerate_dary(int d, int n, const TreeVisitor& visit,
                    const EnumLimits& limits = {});

// Every PORT (plane increasing tree) of size n; insertion positions visited
// in (vertex ascending, gap left-to-right) order.
void enumerate_plane(int n, const TreeVisitor& visit,
                     const EnumLimits& limits = {});

// Every canonical recursive tree of size n (rightmost insertion only).
void enumerate_recursive(int n, const TreeVisitor& visit,
                         const EnumLimits& limits = {});

// Enumerates the model's support: dary / plane (gport) / recursive.
void enumerate_model(const ModelParams& model, int n, const TreeVisitor& visit,
                     const EnumLimits& limits = {});

// Expected number of trees the corresponding enumeration visits.
BigInt enumeration_count(const ModelParams& model, unsigned n);

std::vector<IncreasingTree> enumerate_dary_all(int d, int n,
                                               const EnumLimits& limits = {});
std::vector<IncreasingTree> enumerate_plane_all(int n,
                                                const EnumLimits& limits = {});

}  // namespace incrtree
