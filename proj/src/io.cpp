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

#include "dimkit/io.hpp"

#include <unistd.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

Json span_to_json(const Span &s) { return Json::array({s.begin, s.end}); }

Span span_from_json(const Json &j) {
  return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

// Integral values print without a trailing ".0".
Json number(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 1e15) {
    return static_cast<long long>(v);
  }
  return v;
}

template <typename F>
auto with_json_errors(const char *what, F &&f) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::filesystem::path &path) {
  std::vector<std::string> lines;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<Json> parse_jsonl(std::string_view text, std::string_view source) {
  std::vector<Json> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kParse, std::string(source) + ":" +
                                         std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Json> read_jsonl(const std::filesystem::path &path) {
  return parse_jsonl(read_file(path), path.string());
}

std::string to_jsonl(const std::vector<Json> &values) {
  std::string out;
  for (const Json &v : values) {
    out += v.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path &path,
                       const std::string &content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot create '" + path.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot create '" + path.string() + "'");
  }
}

Json mention_to_json(const QuantityMention &m) {
  Json j;
  j["value_span"] = span_to_json(m.value_span);
  j["unit_span"] = span_to_json(m.unit_span);
  j["value"] = number(m.value);
  j["unit_surface"] = m.unit_surface;
  j["unit_id"] = m.linked_unit ? Json(*m.linked_unit) : Json(nullptr);
  j["link_score"] = m.link_score;
  return j;
}

QuantityMention mention_from_json(const Json &j) {
  return with_json_errors("mention", [&] {
    QuantityMention m;
    m.value_span = span_from_json(j.at("value_span"));
    m.unit_span = span_from_json(j.at("unit_span"));
    m.value = j.at("value").get<double>();
    m.unit_surface = j.value("unit_surface", "");
    if (j.contains("unit_id") && !j.at("unit_id").is_null()) {
      m.linked_unit = j.at("unit_id").get<std::string>();
    }
    m.link_score = j.value("link_score", 0.0);
    return m;
  });
}

Json sentence_to_json(const AnnotatedSentence &s) {
  Json j;
  j["line_no"] = s.line_no;
  j["text"] = s.text;
  j["provenance"] = provenance_name(s.provenance);
  Json mentions = Json::array();
  for (const QuantityMention &m : s.mentions) mentions.push_back(mention_to_json(m));
  j["mentions"] = mentions;
  return j;
}

AnnotatedSentence sentence_from_json(const Json &j) {
  return with_json_errors("annotated sentence", [&] {
    AnnotatedSentence s;
    s.line_no = j.at("line_no").get<std::size_t>();
    s.text = j.at("text").get<std::string>();
    s.provenance = parse_provenance(j.value("provenance", "rule"));
    for (const Json &m : j.at("mentions")) {
      QuantityMention qm = mention_from_json(m);
      if (qm.unit_span.end > s.text.size() || qm.value_span.end > s.text.size()) {
        throw Error(ErrorCode::kValidation,
                    "mention span outside sentence " + std::to_string(s.line_no));
      }
      s.mentions.push_back(std::move(qm));
    }
    return s;
  });
}

std::vector<AnnotatedSentence> read_annotated(const std::filesystem::path &path) {
  std::vector<AnnotatedSentence> out;
  for (const Json &j : read_jsonl(path)) out.push_back(sentence_from_json(j));
  return out;
}

std::string review_to_tsv(const std::vector<ReviewEntry> &review) {
  std::string out = "line_no\tspan\tsurface\tverdict\n";
  for (const ReviewEntry &e : review) {
    out += std::to_string(e.line_no) + "\t" + std::to_string(e.span.begin) + "-" +
           std::to_string(e.span.end) + "\t" + e.surface + "\t" + e.verdict + "\n";
  }
  return out;
}

std::vector<ReviewEntry> parse_review_tsv(std::string_view text,
                                          std::string_view source) {
  std::vector<ReviewEntry> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [&](const std::string &why) {
    throw Error(ErrorCode::kParse,
                std::string(source) + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    if (line_no == 1 && line.rfind("line_no\t", 0) == 0) continue;
    const std::vector<std::string> f = split(line, '\t');
    if (f.size() != 4) fail("expected 4 fields");
    ReviewEntry e;
    const std::size_t dash = f[1].find('-');
    if (dash == std::string::npos) fail("span must be begin-end");
    try {
      e.line_no = std::stoul(f[0]);
      e.span = {std::stoul(f[1].substr(0, dash)), std::stoul(f[1].substr(dash + 1))};
    } catch (const std::exception &) {
      fail("bad number");
    }
    e.surface = f[2];
    e.verdict = std::string(trim(f[3]));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TaskInstance> read_tasks(const std::filesystem::path &path) {
  std::vector<TaskInstance> out;
  for (const Json &j : read_jsonl(path)) out.push_back(task_from_json(j));
  return out;
}

std::vector<Prediction> read_predictions(const std::filesystem::path &path) {
  std::vector<Prediction> out;
  for (const Json &j : read_jsonl(path)) {
    out.push_back(with_json_errors("prediction", [&] {
      Prediction p;
      p.id = j.at("id").get<std::string>();
      if (j.contains("answer") && !j.at("answer").is_null()) {
        p.answer = j.at("answer");
      }
      return p;
    }));
  }
  return out;
}

Json problem_to_json(const MwpProblem &p) {
  Json j;
  j["id"] = p.id;
  j["body"] = p.body;
  j["question"] = p.question;
  j["equation"] = p.equation;
  j["answer"] = number(p.answer);
  if (p.answer_unit) j["answer_unit"] = *p.answer_unit;
  return j;
}

MwpProblem problem_from_json(const Json &j) {
  return with_json_errors("problem", [&] {
    MwpProblem p;
    p.id = j.at("id").is_string() ? j.at("id").get<std::string>()
                                  : j.at("id").dump();
    p.body = j.at("body").get<std::string>();
    p.question = j.at("question").get<std::string>();
    p.equation = j.at("equation").get<std::string>();
    p.answer = j.at("answer").get<double>();
    if (j.contains("answer_unit") && !j.at("answer_unit").is_null()) {
      p.answer_unit = j.at("answer_unit").get<std::string>();
    }
    return p;
  });
}

Json record_to_json(const AugmentationRecord &r) {
  Json j;
  j["problem_id"] = r.problem_id;
  j["method"] = augment_method_name(r.method);
  j["original_unit"] = r.original_unit;
  j["new_unit"] = r.new_unit;
  j["scale"] = number(r.scale);
  j["answer_before"] = number(r.answer_before);
  j["answer_after"] = number(r.answer_after);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json triplet_to_json(const Triplet &t) {
  return {{"subject", t.subject}, {"predicate", t.predicate}, {"object", t.object}};
}

}  // namespace dimkit
