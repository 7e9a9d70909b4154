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

// dimkit command-line tool. Talks to the library only through its C API.
//
// Exit codes:
//   0   success
//   1   empty result (no unit links to the surface)
//   2   incomparable units
//   3   unit cannot be resolved
//   4   generation or augmentation impossible for the given data
//   5   predictions do not line up with the gold file
//   6   affine unit in a conversion
//   64  usage error
//   65  malformed or invalid input data
//   66  input file missing or unreadable
//   70  internal error
//   73  output file cannot be created

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimkit/dimkit.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum Exit {
  kOk = 0,
  kEmpty = 1,
  kIncomparable = 2,
  kUnresolved = 3,
  kGeneration = 4,
  kMisaligned = 5,
  kAffine = 6,
  kUsage = 64,
  kDataErr = 65,
  kNoInput = 66,
  kSoftware = 70,
  kCantCreate = 73,
};

struct CliError {
  int code;
  std::string message;
};

int exit_for(dimkit_status s) {
  switch (s) {
    case DIMKIT_OK: return kOk;
    case DIMKIT_ERR_EMPTY_RESULT: return kEmpty;
    case DIMKIT_ERR_INCOMPARABLE: return kIncomparable;
    case DIMKIT_ERR_UNKNOWN_UNIT: return kUnresolved;
    case DIMKIT_ERR_GENERATION:
    case DIMKIT_ERR_NO_ALTERNATIVE: return kGeneration;
    case DIMKIT_ERR_MISALIGNED: return kMisaligned;
    case DIMKIT_ERR_AFFINE_UNSUPPORTED: return kAffine;
    case DIMKIT_ERR_INVALID_ARGUMENT: return kUsage;
    case DIMKIT_ERR_IO: return kNoInput;
    case DIMKIT_ERR_INTERNAL: return kSoftware;
    default: return kDataErr;
  }
}

void check(dimkit_status s) {
  if (s != DIMKIT_OK) throw CliError{exit_for(s), dimkit_last_error()};
}

// Owns a string returned by the library.
class Owned {
 public:
  Owned() = default;
  Owned(const Owned &) = delete;
  Owned &operator=(const Owned &) = delete;
  ~Owned() { dimkit_string_free(p_); }
  char **out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char *p_ = nullptr;
};

struct KbHandle {
  dimkit_kb *p = nullptr;
  ~KbHandle() { dimkit_kb_free(p); }
};
struct EmbHandle {
  dimkit_embedder *p = nullptr;
  ~EmbHandle() { dimkit_embedder_free(p); }
};

struct Config {
  std::string kb_path;
  std::string freq_path;
  std::string embedder = "trigram";
  double threshold = 0.5;
};

void require_input(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CliError{kNoInput, "cannot read '" + path + "'"};
}

std::string resolve_kb_path(const Config &cfg) {
  if (!cfg.kb_path.empty()) return cfg.kb_path;
  if (const char *env = std::getenv("DIMKIT_KB"); env && *env) return env;
  return DIMKIT_DEFAULT_KB;
}

void load_kb(const Config &cfg, KbHandle &kb) {
  const std::string path = resolve_kb_path(cfg);
  require_input(path);
  if (!cfg.freq_path.empty()) require_input(cfg.freq_path);
  check(dimkit_kb_load(path.c_str(),
                       cfg.freq_path.empty() ? nullptr : cfg.freq_path.c_str(),
                       &kb.p));
}

void load_embedder(const Config &cfg, EmbHandle &emb) {
  if (cfg.embedder == "trigram") {
    check(dimkit_embedder_trigram(256, &emb.p));
  } else {
    require_input(cfg.embedder);
    check(dimkit_embedder_load(cfg.embedder.c_str(), &emb.p));
  }
}

// Temporary sibling plus rename: a failed command never leaves a partial
// output file behind.
void write_output(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kCantCreate, "cannot create '" + path + "'"};
    out << content;
    if (!out.flush()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw CliError{kCantCreate, "cannot write '" + path + "'"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliError{kCantCreate, "cannot create '" + path + "'"};
  }
}

// Checks every output location before any work is written.
void require_writable(const std::string &path) {
  if (path.empty() || path == "-") return;
  fs::path parent = fs::path(path).parent_path();
  if (parent.empty()) parent = ".";
  if (!fs::is_directory(parent)) {
    throw CliError{kCantCreate, "no directory for '" + path + "'"};
  }
}

std::string format_value(double v) {
  // Fifteen significant digits hide binary noise such as 206.00000000000003.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string unit_symbolic(dimkit_kb *kb, const std::string &id) {
  Owned info;
  if (dimkit_unit_info(kb, id.c_str(), info.out()) != DIMKIT_OK) return "?";
  return json::parse(info.str()).at("symbolic").get<std::string>();
}

int cmd_convert(const Config &cfg, double value, const std::string &from,
                const std::string &to) {
  KbHandle kb;
  EmbHandle emb;
  load_kb(cfg, kb);
  load_embedder(cfg, emb);
  Owned from_id, to_id;
  check(dimkit_resolve_unit(kb.p, emb.p, cfg.threshold, from.c_str(), from_id.out()));
  check(dimkit_resolve_unit(kb.p, emb.p, cfg.threshold, to.c_str(), to_id.out()));
  double result = 0.0;
  const dimkit_status s = dimkit_convert(kb.p, value, from_id.str().c_str(),
                                         to_id.str().c_str(), &result);
  if (s == DIMKIT_ERR_INCOMPARABLE) {
    throw CliError{kIncomparable, "incomparable units " + from + " and " + to +
                                      ": " + unit_symbolic(kb.p, from_id.str()) +
                                      " vs " + unit_symbolic(kb.p, to_id.str())};
  }
  check(s);
  std::cout << format_value(result) << ' ' << to << '\n';
  return kOk;
}

int cmd_link(const Config &cfg, const std::string &surface,
             const std::string &context, std::size_t top_k) {
  KbHandle kb;
  EmbHandle emb;
  load_kb(cfg, kb);
  load_embedder(cfg, emb);
  Owned out;
  check(dimkit_link(kb.p, emb.p, cfg.threshold, surface.c_str(), context.c_str(),
                    top_k, out.out()));
  std::cout << "unit_id\tprior\tp_mention\tp_context\tscore\n";
  for (const json &row : json::parse(out.str())) {
    std::cout << row.at("unit_id").get<std::string>() << '\t'
              << fixed(row.at("prior").get<double>(), 6) << '\t'
              << fixed(row.at("p_mention").get<double>(), 6) << '\t'
              << fixed(row.at("p_context").get<double>(), 6) << '\t'
              << fixed(row.at("score").get<double>(), 6) << '\n';
  }
  return kOk;
}

int cmd_dim(const Config &cfg, const std::string &expr) {
  KbHandle kb;
  load_kb(cfg, kb);
  Owned out;
  check(dimkit_dimension_of(kb.p, expr.c_str(), out.out()));
  const json j = json::parse(out.str());
  std::cout << j.at("symbolic").get<std::string>() << '\n';
  for (const json &id : j.at("units")) {
    Owned info;
    check(dimkit_unit_info(kb.p, id.get<std::string>().c_str(), info.out()));
    std::cout << id.get<std::string>() << '\t'
              << json::parse(info.str()).at("label_en").get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_gen_tasks(const Config &cfg, const std::string &task, std::size_t n,
                  std::uint64_t seed, std::size_t candidates,
                  const std::string &annotated, const std::string &output) {
  KbHandle kb;
  load_kb(cfg, kb);
  if (!annotated.empty()) require_input(annotated);
  require_writable(output);
  Owned out;
  check(dimkit_generate_tasks(kb.p, task.c_str(),
                              annotated.empty() ? nullptr : annotated.c_str(),
                              seed, n, candidates, out.out()));
  write_output(output, out.str());
  return kOk;
}

int cmd_annotate(const Config &cfg, const std::string &corpus,
                 const std::string &oracle, const std::string &output,
                 const std::string &rule_out, const std::string &review_out) {
  KbHandle kb;
  EmbHandle emb;
  load_kb(cfg, kb);
  load_embedder(cfg, emb);
  require_input(corpus);
  for (const std::string *p : {&output, &rule_out, &review_out}) require_writable(*p);
  Owned retained, rule, review;
  check(dimkit_annotate(kb.p, emb.p, cfg.threshold, corpus.c_str(), oracle.c_str(),
                        retained.out(), rule.out(), review.out()));
  if (!rule_out.empty()) write_output(rule_out, rule.str());
  if (!review_out.empty()) write_output(review_out, review.str());
  write_output(output, retained.str());
  return kOk;
}

int cmd_apply_review(const std::string &rule, const std::string &review,
                     const std::string &output) {
  require_input(rule);
  require_input(review);
  require_writable(output);
  Owned out;
  check(dimkit_apply_review(rule.c_str(), review.c_str(), out.out()));
  write_output(output, out.str());
  return kOk;
}

int cmd_bootstrap(const Config &cfg, const std::string &store, double tau,
                  int iters, std::size_t seed_units, const std::string &output,
                  const std::string &sentences, std::uint64_t seed,
                  const std::string &render_cmd) {
  KbHandle kb;
  EmbHandle emb;
  load_kb(cfg, kb);
  load_embedder(cfg, emb);
  require_input(store);
  require_writable(output);
  require_writable(sentences);
  Owned out;
  check(dimkit_bootstrap(kb.p, emb.p, cfg.threshold, store.c_str(), tau, iters,
                         seed_units, out.out()));
  const json result = json::parse(out.str());
  if (!sentences.empty()) {
    Owned rendered;
    check(dimkit_render_sentences(result.at("triplets").dump().c_str(), seed,
                                  render_cmd.empty() ? nullptr : render_cmd.c_str(),
                                  rendered.out()));
    write_output(sentences, rendered.str());
  }
  write_output(output, result.dump(2, ' ', false) + "\n");
  return kOk;
}

int cmd_augment(const Config &cfg, const std::string &dataset, double eta,
                const std::string &methods, std::uint64_t seed, bool append,
                const std::string &output, const std::string &records) {
  KbHandle kb;
  EmbHandle emb;
  load_kb(cfg, kb);
  load_embedder(cfg, emb);
  require_input(dataset);
  require_writable(output);
  require_writable(records);
  Owned problems, recs;
  check(dimkit_augment(kb.p, emb.p, cfg.threshold, dataset.c_str(), eta,
                       methods.empty() ? nullptr : methods.c_str(), seed,
                       append ? 1 : 0, problems.out(), recs.out()));
  if (!records.empty()) write_output(records, recs.str());
  write_output(output, problems.str());
  return kOk;
}

void print_metrics(const std::string &name, const json &m) {
  std::cout << name << "\tP=" << fixed(m.at("precision").get<double>(), 4)
            << "\tR=" << fixed(m.at("recall").get<double>(), 4)
            << "\tF1=" << fixed(m.at("f1").get<double>(), 4)
            << "\tanswered=" << m.at("answered").get<std::size_t>() << "/"
            << m.at("total").get<std::size_t>();
  if (!m.at("precision_defined").get<bool>()) std::cout << "\t(precision undefined)";
  std::cout << '\n';
}

int cmd_score(const std::string &gold, const std::string &predictions,
              const std::string &output) {
  require_input(gold);
  require_input(predictions);
  require_writable(output);
  Owned out;
  check(dimkit_score(gold.c_str(), predictions.c_str(), out.out()));
  const json report = json::parse(out.str());
  if (!output.empty()) write_output(output, report.dump(2, ' ', false) + "\n");
  print_metrics("overall", report.at("overall"));
  for (const auto &[name, m] : report.at("per_task").items()) print_metrics(name, m);
  if (report.contains("quantity_extraction")) {
    for (const char *k : {"QE", "VE", "UE"}) {
      print_metrics(k, report.at("quantity_extraction").at(k));
    }
  }
  return kOk;
}

int cmd_tokenize(const std::string &equation) {
  Owned out;
  check(dimkit_tokenize_equation(equation.c_str(), out.out()));
  bool first = true;
  for (const json &t : json::parse(out.str())) {
    std::cout << (first ? "" : " ") << t.get<std::string>();
    first = false;
  }
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"dimkit: dimensional units, unit linking and quantity datasets"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--kb", cfg.kb_path, "Unit knowledge base TSV (default: $DIMKIT_KB, then the bundled KB)");
  app.add_option("--freq", cfg.freq_path, "Raw frequency sidecar TSV");
  app.add_option("--embedder", cfg.embedder, "'trigram' or a word-vector file")
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "Mention similarity threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  int code = kOk;
  std::function<int()> run;

  double value = 0.0;
  std::string from, to;
  auto *convert = app.add_subcommand("convert", "Convert a value between units");
  convert->add_option("value", value)->required();
  convert->add_option("from", from)->required();
  convert->add_option("to", to)->required();
  convert->callback([&] { run = [&] { return cmd_convert(cfg, value, from, to); }; });

  std::string surface, context;
  std::size_t top_k = 5;
  auto *link = app.add_subcommand("link", "Rank knowledge base units for a mention");
  link->add_option("surface", surface)->required();
  link->add_option("--context", context, "Text around the mention");
  link->add_option("--top-k", top_k, "Rows to print (0 for all)")->capture_default_str();
  link->callback([&] { run = [&] { return cmd_link(cfg, surface, context, top_k); }; });

  std::string expr;
  auto *dim = app.add_subcommand("dim", "Dimension of a unit expression");
  dim->add_option("expression", expr)->required();
  dim->callback([&] { run = [&] { return cmd_dim(cfg, expr); }; });

  std::string task, annotated, output;
  std::size_t n = 100, candidates = 4;
  std::uint64_t seed = 0;
  auto *gen = app.add_subcommand("gen-tasks", "Generate benchmark instances");
  gen->add_option("task", task, "Task type or 'all'")->required();
  gen->add_option("-n", n, "Instances per task")->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--candidates", candidates)->capture_default_str();
  gen->add_option("--annotated", annotated, "Annotated sentences JSON-Lines");
  gen->add_option("-o,--output", output, "Output JSON-Lines (default stdout)");
  gen->callback([&] {
    run = [&] {
      return cmd_gen_tasks(cfg, task, n, seed, candidates, annotated, output);
    };
  });

  std::string corpus, oracle = "glued", rule_out, review_out;
  auto *annotate = app.add_subcommand("annotate", "Annotate quantities in a corpus");
  annotate->add_option("corpus", corpus, "One sentence per line")->required();
  annotate->add_option("--oracle", oracle,
                       "glued | constant:<tok> | table:<path> | cmd:<command>")
      ->capture_default_str();
  annotate->add_option("-o,--output", output, "Retained sentences (default stdout)");
  annotate->add_option("--rule-output", rule_out, "Rule-only annotations");
  annotate->add_option("--review", review_out, "Review TSV");
  annotate->callback([&] {
    run = [&] {
      return cmd_annotate(cfg, corpus, oracle, output, rule_out, review_out);
    };
  });

  std::string rule_in, review_in;
  auto *review = app.add_subcommand("apply-review", "Re-apply edited review verdicts");
  review->add_option("rule", rule_in, "Rule-only annotations")->required();
  review->add_option("review", review_in, "Review TSV")->required();
  review->add_option("-o,--output", output);
  review->callback([&] { run = [&] { return cmd_apply_review(rule_in, review_in, output); }; });

  std::string store, sentences, render_cmd;
  double tau = 0.8;
  int iters = 5;
  std::size_t seed_units = 10;
  auto *boot = app.add_subcommand("bootstrap", "Retrieve quantity triplets");
  boot->add_option("store", store, "Triplet TSV")->required();
  boot->add_option("--tau", tau)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  boot->add_option("--iters", iters)->check(CLI::NonNegativeNumber)->capture_default_str();
  boot->add_option("--seed-units", seed_units)->capture_default_str();
  boot->add_option("-o,--output", output, "Result JSON (default stdout)");
  boot->add_option("--sentences", sentences, "Render retrieved triplets to JSON-Lines");
  boot->add_option("--seed", seed)->capture_default_str();
  boot->add_option("--render-cmd", render_cmd, "External sentence renderer");
  boot->callback([&] {
    run = [&] {
      return cmd_bootstrap(cfg, store, tau, iters, seed_units, output, sentences,
                           seed, render_cmd);
    };
  });

  std::string dataset, methods, records;
  double eta = 0.5;
  bool append = false;
  auto *augment = app.add_subcommand("augment", "Augment math word problems");
  augment->add_option("dataset", dataset, "Problems JSON-Lines")->required();
  augment->add_option("--eta", eta)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  augment->add_option("--methods", methods, "Comma-separated method names");
  augment->add_option("--seed", seed)->capture_default_str();
  augment->add_flag("--append", append, "Keep originals and add copies");
  augment->add_option("-o,--output", output, "Problems (default stdout)");
  augment->add_option("--records", records, "Augmentation records JSON-Lines");
  augment->callback([&] {
    run = [&] {
      return cmd_augment(cfg, dataset, eta, methods, seed, append, output, records);
    };
  });

  std::string gold, predictions;
  auto *score = app.add_subcommand("score", "Score predictions against gold tasks");
  score->add_option("gold", gold)->required();
  score->add_option("predictions", predictions)->required();
  score->add_option("-o,--output", output, "Full report JSON");
  score->callback([&] { run = [&] { return cmd_score(gold, predictions, output); }; });

  std::string equation;
  auto *tokenize = app.add_subcommand("tokenize", "Digit-level equation tokens");
  tokenize->add_option("equation", equation)->required();
  tokenize->callback([&] { run = [&] { return cmd_tokenize(equation); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    code = run();
  } catch (const CliError &e) {
    std::cerr << "dimkit: " << e.message << '\n';
    code = e.code;
  } catch (const std::exception &e) {
    std::cerr << "dimkit: " << e.what() << '\n';
    code = kSoftware;
  }
  return code;
}
