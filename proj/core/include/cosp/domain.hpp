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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cosp {

enum class TaskKind { kNumeric, kMultipleChoice, kBoolean, kFreeText };

std::string to_string(TaskKind kind);
std::optional<TaskKind> task_kind_from_string(std::string_view name);

/// A final answer in canonical text form. Construction goes through the
/// answers module (make_answer / canonicalize_numeric) so `value` is always
/// canonical; equality and ordering compare (kind, value), and the ordering
/// is what deterministic tie-breaks use.
struct Answer {
  TaskKind kind = TaskKind::kFreeText;
  std::string value;

  friend bool operator==(const Answer&, const Answer&) = default;
  friend auto operator<=>(const Answer&, const Answer&) = default;
};

/// One test item. `options` carries the multiple-choice labels (>= 2,
/// unique); `late` marks a question that only becomes available at Stage 2
/// (online mode).
struct Question {
  std::string id;
  std::string text;
  TaskKind kind = TaskKind::kFreeText;
  std::vector<std::string> options;
  std::optional<Answer> gold;
  bool late = false;
};

/// One sampled model output for a question. (question_id, stage,
/// sample_index) is unique within a run; `rationale` is `raw_text` truncated
/// at the first stop token and trimmed.
struct ReasoningPath {
  std::string question_id;
  int stage = 1;
  int sample_index = 0;
  std::string raw_text;
  std::string rationale;
  std::optional<Answer> answer;
  double temperature = 0.0;
  int max_tokens = 0;
};

/// Prompt and demonstration wording. Rendering is a pure function of
/// (template, inputs): identical inputs give identical bytes.
struct PromptTemplate {
  std::string trigger = "Let's think step by step.";
  std::string question_prefix = "Q: ";
  std::string answer_prefix = "A: ";
  std::string demo_separator = "\n\n";
  std::string numeric_cue = "Therefore, the answer (arabic numerals) is";
  std::string boolean_cue = "Therefore, the answer (Yes or No) is";
  std::string free_text_cue = "Therefore, the answer is";

  /// "Therefore, among {first} through {last}, the answer is".
  std::string multiple_choice_cue(const std::vector<std::string>& options) const;

  /// The cue for `kind`; `options` is only consulted for multiple choice.
  std::string answer_cue(TaskKind kind, const std::vector<std::string>& options) const;
};

/// One rendered in-context demonstration block. Seed demos (few-shot mode)
/// carry a synthetic "seed:<n>" id.
struct Demo {
  std::string question_id;
  std::string text;
};

/// Score parts recorded for the candidate chosen at one greedy step.
/// objective = z_entropy + lambda*z_repetition + lambda*diversity, where
/// diversity is 0 for a seedless first pick.
struct SelectionStep {
  std::string question_id;
  double raw_entropy = 0.0;
  double raw_repetition = 0.0;
  double z_entropy = 0.0;
  double z_repetition = 0.0;
  double diversity = 0.0;
  double lambda = 0.0;
  double objective = 0.0;
};

/// Ordered selected demonstrations. No two entries share a question id;
/// order equals selection order and the trace has one entry per demo.
struct DemoSet {
  std::vector<Demo> demos;
  std::vector<SelectionStep> trace;
  std::vector<std::string> warnings;

  bool empty() const { return demos.empty(); }
  std::size_t size() const { return demos.size(); }
};

}  // namespace cosp
