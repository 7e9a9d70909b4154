// Copyright 2026 The dimkit Authors.
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

// File formats: JSON-Lines records and the annotation review TSV.

#ifndef DIMKIT_IO_HPP_
#define DIMKIT_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "dimkit/augment.hpp"
#include "dimkit/quantity_text.hpp"
#include "dimkit/scoring.hpp"
#include "dimkit/tasks.hpp"
#include "dimkit/triplets.hpp"

namespace dimkit {

std::string read_file(const std::filesystem::path &path);

// Lines without terminators; a trailing '\r' is dropped.
std::vector<std::string> read_lines(const std::filesystem::path &path);

// One JSON value per non-blank line. Errors name the line.
std::vector<Json> parse_jsonl(std::string_view text, std::string_view source);
std::vector<Json> read_jsonl(const std::filesystem::path &path);

// Compact UTF-8 dump of each value followed by '\n'.
std::string to_jsonl(const std::vector<Json> &values);

// Writes through a temporary sibling and renames it into place, so readers
// never see a partial file and a failed run leaves no output.
void write_file_atomic(const std::filesystem::path &path,
                       const std::string &content);

Json mention_to_json(const QuantityMention &m);
QuantityMention mention_from_json(const Json &j);

Json sentence_to_json(const AnnotatedSentence &s);
AnnotatedSentence sentence_from_json(const Json &j);
std::vector<AnnotatedSentence> read_annotated(const std::filesystem::path &path);

// Columns line_no, span ("begin-end"), surface, verdict, after a header.
std::string review_to_tsv(const std::vector<ReviewEntry> &review);
std::vector<ReviewEntry> parse_review_tsv(std::string_view text,
                                          std::string_view source);

std::vector<TaskInstance> read_tasks(const std::filesystem::path &path);
std::vector<Prediction> read_predictions(const std::filesystem::path &path);

// {id, body, question, equation, answer, answer_unit?}
Json problem_to_json(const MwpProblem &p);
MwpProblem problem_from_json(const Json &j);

Json record_to_json(const AugmentationRecord &r);

Json triplet_to_json(const Triplet &t);

}  // namespace dimkit

#endif  // DIMKIT_IO_HPP_
