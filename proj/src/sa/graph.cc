// Copyright 2026 The FedPoP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fedpop/sa/graph.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fedpop/status.h"

namespace fedpop::sa {

NeighborGraph NeighborGraph::ForClients(uint32_t n) {
  if (n <= kCompleteGraphLimit) return Complete(n);
  const auto log_n = static_cast<uint32_t>(std::ceil(std::log2(n)));
  return Harary(n, std::min(n - 1, 2 * log_n + 2));
}

NeighborGraph NeighborGraph::Complete(uint32_t n) {
  if (n < 2) throw Error(ErrorCode::kParameter, "graph needs at least 2 clients");
  NeighborGraph g;
  g.adjacency_.resize(n);
  g.degree_ = n - 1;
  for (uint32_t i = 1; i <= n; ++i) {
    for (uint32_t j = 1; j <= n; ++j) {
      if (i != j) g.adjacency_[i - 1].push_back(j);
    }
  }
  return g;
}

NeighborGraph NeighborGraph::Harary(uint32_t n, uint32_t k) {
  if (n < 2 || k < 1 || k >= n) {
    throw Error(ErrorCode::kParameter, "Harary graph needs 1 <= k < n");
  }
  if (k == n - 1) return Complete(n);
  if (k % 2 == 1 && n % 2 == 1) {
    throw Error(ErrorCode::kParameter, "odd degree requires an even client count");
  }
  std::vector<std::set<uint32_t>> adj(n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t step = 1; step <= k / 2; ++step) {
      adj[i].insert((i + step) % n);
      adj[i].insert((i + n - step) % n);
    }
    if (k % 2 == 1) adj[i].insert((i + n / 2) % n);
  }
  NeighborGraph g;
  g.degree_ = k;
  g.adjacency_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j : adj[i]) g.adjacency_[i].push_back(j + 1);
  }
  return g;
}

const std::vector<uint32_t>& NeighborGraph::neighbors(uint32_t i) const {
  if (i < 1 || i > size()) throw Error(ErrorCode::kParameter, "client index out of range");
  return adjacency_[i - 1];
}

bool NeighborGraph::Adjacent(uint32_t i, uint32_t j) const {
  const auto& n = neighbors(i);
  return std::binary_search(n.begin(), n.end(), j);
}

bool NeighborGraph::Connected() const {
  if (adjacency_.empty()) return false;
  std::vector<bool> seen(size(), false);
  std::vector<uint32_t> stack = {1};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t w : neighbors(v)) {
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == size();
}

}  // namespace fedpop::sa
