// Copyright 2026 the textprep authors.
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

#ifndef TEXTPREP_DECOMP_DB_H_
#define TEXTPREP_DECOMP_DB_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "textprep/ids.h"

namespace textprep {

enum class Granularity { kCharacter, kIdeograph, kStroke };
enum class IdcMode { kWith, kWithout };

// One of the five output shapes: character (identity) or one of the four
// sub-character configurations (ideograph/stroke x with/without IDCs).
struct DecompConfig {
  Granularity granularity = Granularity::kCharacter;
  IdcMode idcs = IdcMode::kWithout;

  bool is_identity() const { return granularity == Granularity::kCharacter; }
  bool operator==(const DecompConfig&) const = default;
};

inline constexpr int kNumSubConfigs = 4;

// Index in [0,4) for the sub-character configurations; the identity
// configuration has no index.
int SubConfigIndex(const DecompConfig& cfg);
DecompConfig SubConfigAt(int index);

Granularity ParseGranularity(const std::string& s);  // throws ConfigError
IdcMode ParseIdcMode(const std::string& s);
std::string ToString(Granularity g);
std::string ToString(IdcMode m);

struct LoadOptions {
  // Assign duplication markers while building reverse indices. Disabled
  // only to inspect how a database would collide without them.
  bool assign_markers = true;
};

// A set of characters whose raw flattened sequences coincide under one
// configuration. Ordinal duplication markers keep the index injective.
struct CollisionClass {
  int config = 0;                // SubConfigIndex
  std::u32string key;            // shared raw flattened sequence
  std::vector<char32_t> chars;   // members, ascending codepoint
};

struct ValidationReport {
  // (character, offending leaf) pairs for leaves outside the inventory.
  std::vector<std::pair<char32_t, char32_t>> leaves_outside_inventory;
  // Inventory members (ideographs and unclear symbols) with no stroke entry.
  std::vector<char32_t> missing_stroke_coverage;
  // Characters whose stored tree has an operator with the wrong number of
  // children (possible only for programmatically constructed databases).
  std::vector<char32_t> arity_violations;
  // Keys still shared by several characters after the marker pass.
  std::vector<CollisionClass> residual_collisions;

  std::size_t char_count = 0;
  std::size_t ideograph_count = 0;
  std::size_t unclear_count = 0;
  std::size_t stroke_entry_count = 0;

  bool is_clean() const {
    return leaves_outside_inventory.empty() && missing_stroke_coverage.empty() &&
           arity_violations.empty() && residual_collisions.empty();
  }
  std::string Summary() const;
};

// Transparent hashing so reverse lookups can use substrings without copies.
struct U32Hash {
  using is_transparent = void;
  std::size_t operator()(std::u32string_view s) const {
    std::size_t h = 1469598103934665603ull;
    for (char32_t c : s) {
      h ^= static_cast<std::size_t>(c);
      h *= 1099511628211ull;
    }
    return h;
  }
};
struct U32Eq {
  using is_transparent = void;
  bool operator()(std::u32string_view a, std::u32string_view b) const {
    return a == b;
  }
};
using ReverseIndex = std::unordered_map<std::u32string, char32_t, U32Hash, U32Eq>;

// The loaded decomposition database: character trees, ideograph inventory,
// stroke table, and per-configuration forward/reverse token indices.
// Immutable once loaded; safe to share across threads.
class DecompositionDb {
 public:
  // Parses the IDS and stroke sources (one record per line, `#` comments,
  // optional `#!` header block) and builds all four reverse indices.
  static DecompositionDb Load(std::istream& ids_source,
                              std::istream& strokes_source,
                              const LoadOptions& options = {});
  // Convenience: directory containing ids.txt and strokes.txt.
  static DecompositionDb LoadFromDir(const std::string& dir,
                                     const LoadOptions& options = {});

  const IdsTree* FindChar(char32_t c) const;
  bool IsIdeograph(char32_t cp) const { return ideographs_.count(cp) > 0; }
  bool IsUnclear(char32_t cp) const { return unclear_.count(cp) > 0; }
  bool IsInventory(char32_t cp) const {
    return IsIdeograph(cp) || IsUnclear(cp);
  }
  bool IsStrokeCp(char32_t cp) const {
    return stroke_alphabet_set_.count(cp) > 0;
  }
  char32_t marker() const { return marker_; }

  // Stroke transcription of an inventory member; empty when missing.
  const std::u32string& StrokesOf(char32_t cp) const;

  // Marker-adjusted flattened sequence of a character under one
  // sub-character configuration; nullptr when the character is unknown.
  const std::u32string* Flat(char32_t c, const DecompConfig& cfg) const;

  const ReverseIndex& Reverse(const DecompConfig& cfg) const {
    return reverse_[SubConfigIndex(cfg)];
  }
  std::size_t MaxKeyLength(const DecompConfig& cfg) const {
    return max_key_len_[SubConfigIndex(cfg)];
  }

  // True when the codepoint belongs to the decomposition token space of
  // the configuration; such codepoints are never composition passthrough.
  bool IsMaterial(char32_t cp, const DecompConfig& cfg) const;

  // Rebuilds the four indices. Load() already does this; tests use it to
  // produce the marker-free variant of a database.
  void BuildReverseIndices(bool assign_markers);

  ValidationReport Validate() const;

  // SHA-256 over the canonical content (records sorted, comments ignored),
  // so cosmetic edits do not invalidate decomposed corpora.
  const std::string& content_hash() const { return content_hash_; }

  std::size_t char_count() const { return char_map_.size(); }
  std::size_t ideograph_count() const { return ideographs_.size(); }
  std::size_t unclear_count() const { return unclear_.size(); }

  // Collision classes observed while assigning markers, sorted by
  // (config, key); singleton classes are not recorded.
  const std::vector<CollisionClass>& marker_classes() const {
    return marker_classes_;
  }
  bool markers_assigned() const { return markers_assigned_; }

 private:
  friend class DbBuilder;

  std::u32string FlattenRaw(const IdsTree& tree, const DecompConfig& cfg) const;

  std::unordered_map<char32_t, IdsTree> char_map_;
  std::unordered_set<char32_t> ideographs_;
  std::unordered_set<char32_t> unclear_;
  std::unordered_map<char32_t, std::u32string> strokes_;
  std::unordered_set<char32_t> stroke_alphabet_set_;
  std::u32string stroke_alphabet_;
  char32_t marker_ = 0;
  bool inventory_declared_ = false;

  std::array<std::unordered_map<char32_t, std::u32string>, kNumSubConfigs> flat_;
  std::array<ReverseIndex, kNumSubConfigs> reverse_;
  std::array<std::size_t, kNumSubConfigs> max_key_len_ = {0, 0, 0, 0};
  std::vector<CollisionClass> marker_classes_;
  bool markers_assigned_ = true;

  std::string content_hash_;
};

}  // namespace textprep

#endif  // TEXTPREP_DECOMP_DB_H_
