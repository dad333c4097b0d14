#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symdyn/words.hpp"

namespace symdyn {

// One way of cutting a window into consecutive blocks of a fixed length.
struct TilePhase {
  std::size_t phase = 0;   // bilateral index of every tile start, mod tile length
  std::int64_t start = 0;  // bilateral index of the first tile
  std::size_t offset = 0;  // array position of the first tile
  Word tokens;             // token i = index of the matching block

  friend bool operator==(const TilePhase&, const TilePhase&) = default;
};

inline constexpr std::size_t min_tiles_per_phase = 3;

/// Tile the maximal sub-window aligned at each residue j in [0, L) by
/// `blocks`. A phase is reported only when every full tile matches some block
/// and there are at least three tiles. Duplicate blocks resolve to the lowest
/// index.
inline std::vector<TilePhase> parse_phases(const Window& win, const std::vector<Word>& blocks,
                                           std::size_t block_length) {
  if (block_length == 0) fail(ErrorKind::domain, "block length must be positive");
  for (const Word& b : blocks) {
    if (b.size() != block_length) {
      fail(ErrorKind::domain, "ragged block lengths in tiling alphabet");
    }
  }
  if (win.size() < min_tiles_per_phase * block_length) {
    fail(ErrorKind::insufficient_window,
         "window of length " + std::to_string(win.size()) + " is shorter than three tiles of length " +
             std::to_string(block_length));
  }
  std::map<Word, Letter> token_of;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    token_of.emplace(blocks[i], static_cast<Letter>(i));
  }

  std::vector<TilePhase> out;
  const std::int64_t L = static_cast<std::int64_t>(block_length);
  for (std::size_t j = 0; j < block_length; ++j) {
    // array position p has bilateral index p - origin; need p - origin = j mod L
    const std::int64_t raw = (static_cast<std::int64_t>(j) + static_cast<std::int64_t>(win.origin)) % L;
    const std::size_t offset = static_cast<std::size_t>(raw);
    const std::size_t tiles = (win.size() - offset) / block_length;
    if (tiles < min_tiles_per_phase) continue;

    TilePhase parse{j, static_cast<std::int64_t>(offset) - static_cast<std::int64_t>(win.origin), offset, {}};
    parse.tokens.reserve(tiles);
    bool ok = true;
    Word tile(block_length);
    for (std::size_t t = 0; t < tiles && ok; ++t) {
      const auto first = win.letters.begin() + static_cast<std::ptrdiff_t>(offset + t * block_length);
      std::copy(first, first + L, tile.begin());
      auto it = token_of.find(tile);
      if (it == token_of.end()) {
        ok = false;
      } else {
        parse.tokens.push_back(it->second);
      }
    }
    if (ok) out.push_back(std::move(parse));
  }
  return out;
}

}  // namespace symdyn
