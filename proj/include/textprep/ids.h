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

#ifndef TEXTPREP_IDS_H_
#define TEXTPREP_IDS_H_

#include <string>
#include <string_view>
#include <vector>

namespace textprep {

// Arity of an Ideographic Description Character, or 0 for anything else.
// The IDC block U+2FF0..U+2FFB is accepted in full; U+2FF2 and U+2FF3 are
// the two ternary operators.
int IdcArity(char32_t cp);
inline bool IsIdc(char32_t cp) { return IdcArity(cp) != 0; }

// Structure tree of one character: a bare component, or an IDC operator
// applied to two or three subtrees.
struct IdsTree {
  char32_t value = 0;             // component codepoint, or IDC operator
  std::vector<IdsTree> children;  // empty for leaves

  bool is_leaf() const { return children.empty(); }
  bool operator==(const IdsTree&) const = default;
};

// Parses a prefix-notation IDS string (operator followed by its operands,
// no separators). Throws StructuralError on arity mismatch or trailing
// codepoints; `context` is prepended to messages.
IdsTree ParseIds(std::u32string_view ids, const std::string& context = "");

// Inverse of ParseIds.
std::u32string SerializeIds(const IdsTree& tree);

// Leaf codepoints in left-to-right order.
void CollectLeaves(const IdsTree& tree, std::vector<char32_t>* out);
std::vector<char32_t> Leaves(const IdsTree& tree);

}  // namespace textprep

#endif  // TEXTPREP_IDS_H_
