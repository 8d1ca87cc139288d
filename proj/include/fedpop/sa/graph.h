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

#ifndef FEDPOP_SA_GRAPH_H_
#define FEDPOP_SA_GRAPH_H_

#include <cstdint>
#include <vector>

namespace fedpop::sa {

// Undirected neighbor graph over clients 1..n.
class NeighborGraph {
 public:
  NeighborGraph() = default;

  // Complete graph for n <= kCompleteGraphLimit, otherwise a Harary graph
  // of degree min(n-1, 2*ceil(log2 n) + 2).
  static NeighborGraph ForClients(uint32_t n);
  static NeighborGraph Complete(uint32_t n);
  // k-regular circulant (Harary) graph; odd k requires even n.
  static NeighborGraph Harary(uint32_t n, uint32_t k);

  static constexpr uint32_t kCompleteGraphLimit = 100;

  uint32_t size() const { return static_cast<uint32_t>(adjacency_.size()); }
  uint32_t degree() const { return degree_; }
  // Sorted neighbor indices of client i (1-based).
  const std::vector<uint32_t>& neighbors(uint32_t i) const;
  bool Adjacent(uint32_t i, uint32_t j) const;
  bool Connected() const;

 private:
  std::vector<std::vector<uint32_t>> adjacency_;
  uint32_t degree_ = 0;
};

}  // namespace fedpop::sa

#endif  // FEDPOP_SA_GRAPH_H_
