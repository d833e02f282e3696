#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sparseprime/linalg.hpp"

namespace sparseprime::detail {

struct BlockTransversal {
  // (block, index within block) of each chosen vector, sorted by block.
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  // Blocks of a subset attaining the Rado bound; empty when every block is
  // covered.
  std::vector<std::size_t> tight_blocks;
};

// Maximum common independent set of the linear matroid on the vectors of all
// blocks and the partition matroid with one element per block. Zero vectors
// are never chosen.
BlockTransversal max_block_transversal(
    const std::vector<std::vector<LatticePoint>>& blocks, std::size_t n);

}  // namespace sparseprime::detail
