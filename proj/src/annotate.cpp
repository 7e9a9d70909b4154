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

#include <fstream>
#include <map>

#include "dimkit/process.hpp"
#include "dimkit/quantity_text.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

bool is_numeric_prediction(std::string_view prediction) {
  const std::string_view t = trim(prediction);
  if (t.empty()) return false;
  const std::vector<ValueMatch> values = extract_values(t);
  return values.size() == 1 && values[0].span.begin == 0 &&
         values[0].span.end == t.size();
}

}  // namespace

const char *provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kRule: return "rule";
    case Provenance::kRuleFilter: return "rule+filter";
    case Provenance::kReviewed: return "reviewed";
  }
  return "rule";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "rule") return Provenance::kRule;
  if (name == "rule+filter") return Provenance::kRuleFilter;
  if (name == "reviewed") return Provenance::kReviewed;
  throw Error(ErrorCode::kParse, "unknown provenance '" + std::string(name) + "'");
}

bool ReviewEntry::accepted() const {
  return verdict == "accept" || verdict.rfind("accept:", 0) == 0;
}

std::string GluedTokenOracle::predict(std::string_view masked_text) const {
  const std::size_t at = masked_text.find(kMaskToken);
  if (at == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "no mask token in input");
  }
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (at > 0) {
    const char prev = masked_text[at - 1];
    if (alpha(prev)) return "code";
    if (prev == '-' && at > 1 && alpha(masked_text[at - 2])) {
      return "code";
    }
  }
  return "5";
}

TableOracle TableOracle::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open oracle table '" + path + "'");
  TableOracle oracle;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kParse, "oracle table line without a tab");
    }
    oracle.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return oracle;
}

void TableOracle::add(std::string masked_text, std::string prediction) {
  table_.emplace_back(std::move(masked_text), std::move(prediction));
}

std::string TableOracle::predict(std::string_view masked_text) const {
  for (const auto &[input, prediction] : table_) {
    if (input == masked_text) return prediction;
  }
  throw Error(ErrorCode::kNoAlternative,
              "no table prediction for '" + std::string(masked_text) + "'");
}

std::string CommandOracle::predict(std::string_view masked_text) const {
  return run_filter_command(command_, masked_text);
}

std::unique_ptr<MaskedFillOracle> make_oracle(const std::string &descriptor) {
  if (descriptor == "glued") return std::make_unique<GluedTokenOracle>();
  if (descriptor.rfind("constant:", 0) == 0) {
    return std::make_unique<ConstantOracle>(descriptor.substr(9));
  }
  if (descriptor.rfind("table:", 0) == 0) {
    return std::make_unique<TableOracle>(TableOracle::load(descriptor.substr(6)));
  }
  if (descriptor.rfind("cmd:", 0) == 0) {
    return std::make_unique<CommandOracle>(descriptor.substr(4));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "oracle must be constant:<tok>, glued, table:<path> or cmd:<command>");
}

AnnotationResult annotate_corpus(const std::vector<std::string> &corpus,
                                 const Linker &linker,
                                 const MaskedFillOracle &oracle,
                                 const ExtractionOptions &options) {
  AnnotationResult result;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    AnnotatedSentence s;
    s.line_no = i + 1;
    s.text = corpus[i];
    for (QuantityMention &m : extract_quantities(s.text, linker, options)) {
      if (m.linked_unit) s.mentions.push_back(std::move(m));
    }
    if (!s.mentions.empty()) result.rule_annotated.push_back(std::move(s));
  }

  for (const AnnotatedSentence &s : result.rule_annotated) {
    std::vector<std::string> verdicts;
    bool oracle_failed = false;
    for (const QuantityMention &m : s.mentions) {
      const std::string masked = mask_span(s.text, m.quantity_span());
      std::string prediction;
      try {
        prediction = oracle.predict(masked);
      } catch (const std::exception &) {
        oracle_failed = true;
        break;
      }
      if (is_numeric_prediction(prediction)) {
        verdicts.push_back("accept:numeric");
      } else if (!trim(prediction).empty() &&
                 link_unit_surface(linker, trim(prediction), masked, options)) {
        verdicts.push_back("accept:unit");
      } else {
        verdicts.push_back("reject:nonquantity");
      }
    }
    if (oracle_failed) {
      verdicts.assign(s.mentions.size(), "accept:oracle_error");
    }

    AnnotatedSentence kept;
    kept.line_no = s.line_no;
    kept.text = s.text;
    kept.provenance = oracle_failed ? Provenance::kRule : Provenance::kRuleFilter;
    for (std::size_t k = 0; k < s.mentions.size(); ++k) {
      const QuantityMention &m = s.mentions[k];
      const Span q = m.quantity_span();
      ReviewEntry entry{s.line_no, q, s.text.substr(q.begin, q.size()),
                        verdicts[k]};
      if (entry.accepted()) kept.mentions.push_back(m);
      result.review.push_back(std::move(entry));
    }
    if (!kept.mentions.empty()) result.retained.push_back(std::move(kept));
  }
  return result;
}

std::vector<AnnotatedSentence> apply_review(
    const std::vector<AnnotatedSentence> &rule_annotated,
    const std::vector<ReviewEntry> &review) {
  std::map<std::pair<std::size_t, Span>, bool> verdicts;
  for (const ReviewEntry &e : review) verdicts[{e.line_no, e.span}] = e.accepted();

  std::vector<AnnotatedSentence> out;
  for (const AnnotatedSentence &s : rule_annotated) {
    AnnotatedSentence kept;
    kept.line_no = s.line_no;
    kept.text = s.text;
    kept.provenance = Provenance::kReviewed;
    for (const QuantityMention &m : s.mentions) {
      auto it = verdicts.find({s.line_no, m.quantity_span()});
      // Mentions the reviewer never saw stay in.
      if (it == verdicts.end() || it->second) kept.mentions.push_back(m);
    }
    if (!kept.mentions.empty()) out.push_back(std::move(kept));
  }
  return out;
}

}  // namespace dimkit
