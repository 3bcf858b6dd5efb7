// Copyright 2026 The fluxwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXWIRE_SRC_TEXT_IO_HPP_
#define FLUXWIRE_SRC_TEXT_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fluxwire::text_io {

std::string_view trim(std::string_view s);
// Splits on '\n', strips '\r', keeps empty lines.
std::vector<std::string_view> lines(std::string_view text);
std::vector<std::string_view> fields(std::string_view line);
std::vector<std::string_view> split(std::string_view text, char sep);
// Whole-token integer parse; throws Error(kParse) mentioning `what`.
std::int64_t parse_int(std::string_view token, std::string_view what);
// KEY=VALUE lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> parse_key_values(
    std::string_view text);

}  // namespace fluxwire::text_io

#endif  // FLUXWIRE_SRC_TEXT_IO_HPP_
