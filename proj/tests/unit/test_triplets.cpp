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


#include <sstream>

#include "common.hpp"
#include "dimkit/rng.hpp"
#include "dimkit/triplets.hpp"
#include "doctest.h"

using namespace dimkit;

TEST_CASE("mention containment ignores glued letters") {
  CHECK(object_contains_mention("2.29 m", "m"));
  CHECK(object_contains_mention("175 CM", "cm"));
  CHECK_FALSE(object_contains_mention("Madrid", "m"));
  CHECK(object_contains_mention("the Hour of Power", "hour"));
  CHECK_FALSE(object_contains_mention("Hourglass", "hour"));
  CHECK(object_contains_mention("3 hr 20 min", "min"));
  CHECK_FALSE(object_contains_mention("minutes", "min"));
  CHECK(object_contains_mention("120千克", "千克"));
  CHECK(object_contains_mention("5km", "km"));
  CHECK_FALSE(object_contains_mention("anything", ""));
}

TEST_CASE("triplet store queries") {
  MemoryTripletStore store({{"a", "height", "2 m"},
                            {"b", "weight", "3 kg"},
                            {"c", "height", "tall"}});
  CHECK(store.triplets_with_predicate("height").size() == 2);
  CHECK(store.triplets_with_object_containing("kg").size() == 1);
  CHECK(store.all_predicates() == std::vector<std::string>{"height", "weight"});
}

TEST_CASE("TSV store parsing") {
  std::istringstream ok("# s\tp\to\n\na\tb\tc\n");
  CHECK(MemoryTripletStore::parse_tsv(ok, "x").all().size() == 1);
  std::istringstream bad("a\tb\n");
  CHECK_THROWS_CODE(MemoryTripletStore::parse_tsv(bad, "x"), ErrorCode::kParse);
  CHECK_THROWS_CODE(MemoryTripletStore::load_tsv("/nonexistent.tsv"), ErrorCode::kIo);
  CHECK(MemoryTripletStore::load_tsv(oracle::data_dir() / "triplets.tsv").all().size() ==
        200);
}

TEST_CASE("seed mentions come from the most frequent units") {
  const auto seeds = seed_mentions(testing::fixture_kb(), 10);
  for (const char *s : {"m", "kg", "s", "min", "km", "h", "g", "cm", "day", "°c"}) {
    CHECK_MESSAGE(seeds.count(s) == 1, s);
  }
  CHECK(seeds.count("mg") == 0);
  CHECK(seed_mentions(testing::tiny_kb(), 1) ==
        std::set<std::string>{"m", "meter", "meters", "metre", "米"});
}

TEST_CASE("bootstrap on the fixture store") {
  const auto store = MemoryTripletStore::load_tsv(oracle::data_dir() / "triplets.tsv");
  const Linker &linker = testing::fixture_linker();
  const auto r = bootstrap_retrieve(store, linker, {});
  CHECK(r.predicates.count("height"));
  CHECK(r.predicates.count("weight"));
  CHECK(r.predicates.count("depth"));
  CHECK(r.predicates.count("area"));  // exactly 8 of 10
  CHECK_FALSE(r.predicates.count("elevation"));  // 7 of 10
  CHECK_FALSE(r.predicates.count("birth_place"));
  CHECK_FALSE(r.predicates.count("nickname"));
  CHECK_FALSE(r.predicates.count("rated_voltage"));
  // Reached only once Fahrenheit joins the mention set.
  CHECK(r.predicates.count("melting_point"));
  CHECK(r.mentions.count("°f"));

  BootstrapConfig one;
  one.iterations = 1;
  CHECK_FALSE(bootstrap_retrieve(store, linker, one).predicates.count("melting_point"));

  BootstrapConfig zero;
  zero.iterations = 0;
  const auto z = bootstrap_retrieve(store, linker, zero);
  CHECK(z.predicates.empty());
  CHECK(z.mentions == seed_mentions(linker.kb(), 10));
  for (const auto &t : z.triplets) {
    bool any = false;
    for (const auto &m : z.mentions) any = any || object_contains_mention(t.object, m);
    CHECK(any);
  }
}

TEST_CASE("bootstrap equals the naive version across settings") {
  const auto store = MemoryTripletStore::load_tsv(oracle::data_dir() / "triplets.tsv");
  const auto raw = oracle::read_units(oracle::data_dir() / "units.tsv");
  const Linker &linker = testing::fixture_linker();
  for (double tau : {0.5, 0.7, 0.9, 1.0}) {
    for (int iters : {0, 1, 2, 5}) {
      for (std::size_t seeds : {1, 3, 10}) {
        BootstrapConfig cfg;
        cfg.tau = tau;
        cfg.iterations = iters;
        cfg.seed_unit_count = seeds;
        const auto got = bootstrap_retrieve(store, linker, cfg);
        const auto want = oracle::naive_bootstrap(store.all(), raw, linker, tau, iters, seeds);
        CHECK(got.triplets == want.triplets);
        CHECK(got.predicates == want.predicates);
        CHECK(got.mentions == want.mentions);
      }
    }
  }
}

TEST_CASE("mention set only grows") {
  const auto store = MemoryTripletStore::load_tsv(oracle::data_dir() / "triplets.tsv");
  std::set<std::string> previous;
  for (int iters = 0; iters <= 5; ++iters) {
    BootstrapConfig cfg;
    cfg.iterations = iters;
    const auto r = bootstrap_retrieve(store, testing::fixture_linker(), cfg);
    for (const auto &m : previous) CHECK(r.mentions.count(m));
    previous = r.mentions;
  }
}

TEST_CASE("bootstrap config validation") {
  BootstrapConfig c;
  c.tau = 0.0;
  CHECK_THROWS_CODE(c.validate(), ErrorCode::kInvalidArgument);
  c = {};
  c.iterations = -1;
  CHECK_THROWS_CODE(c.validate(), ErrorCode::kInvalidArgument);
  c = {};
  c.seed_unit_count = 0;
  CHECK_THROWS_CODE(c.validate(), ErrorCode::kInvalidArgument);
}

TEST_CASE("sentence templates") {
  const Triplet t{"Yao Ming", "height", "2.29 m"};
  CHECK(fill_template(default_sentence_templates()[0], t) ==
        "The height of Yao Ming is 2.29 m.");
  CHECK(fill_template("{subject} {unknown} {object", t) == "Yao Ming {unknown} {object");
  Rng a(5), b(5);
  CHECK(render_triplet_sentence(t, default_sentence_templates(), a) ==
        render_triplet_sentence(t, default_sentence_templates(), b));
  Rng c(1);
  CHECK_THROWS_CODE(render_triplet_sentence(t, {}, c), ErrorCode::kInvalidArgument);
  for (const auto &tpl : default_sentence_templates()) {
    const std::string s = fill_template(tpl, t);
    CHECK(s.find("2.29 m") != std::string::npos);
    CHECK(s.find("Yao Ming") != std::string::npos);
  }
}

TEST_CASE("command rendering falls back to templates") {
  const Triplet t{"Yao Ming", "height", "2.29 m"};
  Rng a(9), b(9);
  const std::string plain = render_triplet_sentence(t, default_sentence_templates(), a);
  CHECK(render_triplet_sentence_with_command(t, "exit 1", default_sentence_templates(), b) ==
        plain);
  Rng c(9);
  CHECK(render_triplet_sentence_with_command(t, "echo unrelated", default_sentence_templates(),
                                             c) == plain);
  Rng d(9);
  CHECK(render_triplet_sentence_with_command(
            t, "awk -F'\\t' '{print $1 \" stands \" $3}'", default_sentence_templates(),
            d) == "Yao Ming stands 2.29 m");
}
