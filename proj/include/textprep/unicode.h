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

#ifndef TEXTPREP_UNICODE_H_
#define TEXTPREP_UNICODE_H_

#include <string>
#include <string_view>

namespace textprep {

// Throws ParseError on ill-formed UTF-8.
std::u32string DecodeUtf8(std::string_view s);

std::string EncodeUtf8(std::u32string_view s);
std::string EncodeUtf8(char32_t cp);

// Canonical composition (NFC). All database and corpus text is normalized
// on load so that compatibility variants of the same character cannot end
// up as distinct map keys.
std::string NormalizeNfc(const std::string& s);

// CJK unified ideograph blocks (base, extensions, compatibility).
bool IsCjkIdeograph(char32_t cp);

// Formats a codepoint as U+XXXX for error messages.
std::string CodepointName(char32_t cp);

}  // namespace textprep

#endif  // TEXTPREP_UNICODE_H_
