// Copyright 2026 The cosp Authors.
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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosp/domain.hpp"

namespace cosp {

/// Truncates a raw model output at the first stop token ("\n\n\n" or "Q:")
/// and trims surrounding whitespace. An empty result is allowed.
std::string postprocess(std::string_view raw);

/// Canonical decimal text: sign, no thousands separators, no trailing
/// fractional zeros, no trailing point, "-0" folded to "0". Accepts an
/// optional leading "$", commas, a trailing "%" or ".". Returns nullopt when
/// the text is not a decimal number. Idempotent on its own output.
std::optional<std::string> canonicalize_numeric(std::string_view text);

/// Case-folds and collapses whitespace runs to single spaces.
std::string normalize_free_text(std::string_view text);

/// Builds a canonical Answer of the given kind, or nullopt when the text
/// does not parse (bad number, label not among options, not yes/no, empty).
std::optional<Answer> make_answer(TaskKind kind, std::string_view text,
                                  std::span<const std::string> options = {});

/// Extracts the final answer from post-processed model text. If the kind's
/// answer cue is present the remainder after its last occurrence is parsed;
/// otherwise the last parseable value in the whole text is used (last
/// number / standalone option label / yes-no). Absence is a value.
std::optional<Answer> extract_answer(std::string_view text, TaskKind kind,
                                     std::span<const std::string> options,
                                     const PromptTemplate& tpl);
std::optional<Answer> extract_answer(std::string_view text, const Question& question,
                                     const PromptTemplate& tpl);

/// Counts of equal-canonical answers plus the number of paths whose
/// extraction failed. counted() + failures equals the number of inputs.
struct AnswerHistogram {
  std::map<Answer, int> counts;
  int failures = 0;

  int counted() const;
  int total() const { return counted() + failures; }
  bool empty() const { return counts.empty(); }
  void add(const std::optional<Answer>& answer);
};

/// Histograms the extracted answers of paths that must all share one
/// question id.
AnswerHistogram histogram(std::span<const ReasoningPath> paths);

/// `winner` is the lexicographically smallest answer among those with the
/// maximum count; `tied` lists every argmax answer in ascending order.
struct PluralityResult {
  Answer winner;
  std::vector<Answer> tied;
};

/// Plurality vote over a histogram with at least one counted answer.
PluralityResult plurality(const AnswerHistogram& h);

}  // namespace cosp
