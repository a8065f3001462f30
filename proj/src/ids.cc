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

#include "textprep/ids.h"

#include "textprep/errors.h"
#include "textprep/unicode.h"

namespace textprep {

int IdcArity(char32_t cp) {
  if (cp < 0x2FF0 || cp > 0x2FFB) return 0;
  return (cp == 0x2FF2 || cp == 0x2FF3) ? 3 : 2;
}

namespace {

IdsTree ParseOne(std::u32string_view ids, std::size_t* pos,
                 const std::string& context) {
  if (*pos >= ids.size()) {
    throw StructuralError(context + "IDS ends before operator " +
                          "received all operands");
  }
  char32_t cp = ids[*pos];
  ++*pos;
  int arity = IdcArity(cp);
  IdsTree node;
  node.value = cp;
  if (arity == 0) return node;
  node.children.reserve(arity);
  for (int i = 0; i < arity; ++i) {
    node.children.push_back(ParseOne(ids, pos, context));
  }
  return node;
}

}  // namespace

IdsTree ParseIds(std::u32string_view ids, const std::string& context) {
  if (ids.empty()) {
    throw StructuralError(context + "empty IDS string");
  }
  std::size_t pos = 0;
  IdsTree tree = ParseOne(ids, &pos, context);
  if (pos != ids.size()) {
    throw StructuralError(context + "trailing codepoints after IDS tree (" +
                          CodepointName(ids[pos]) + " at index " +
                          std::to_string(pos) + ")");
  }
  return tree;
}

std::u32string SerializeIds(const IdsTree& tree) {
  std::u32string out;
  out.push_back(tree.value);
  for (const IdsTree& child : tree.children) {
    out += SerializeIds(child);
  }
  return out;
}

void CollectLeaves(const IdsTree& tree, std::vector<char32_t>* out) {
  if (tree.is_leaf()) {
    out->push_back(tree.value);
    return;
  }
  for (const IdsTree& child : tree.children) {
    CollectLeaves(child, out);
  }
}

std::vector<char32_t> Leaves(const IdsTree& tree) {
  std::vector<char32_t> out;
  CollectLeaves(tree, &out);
  return out;
}

}  // namespace textprep
