// Copyright 2026 The Harmonica Authors
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

// Prints one PASS/FAIL line per acceptance criterion; exits 1 on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "feature_oracle.h"
#include "harmonica/banco/configuration.h"
#include "harmonica/banco/generator.h"
#include "harmonica/blade/conflicts.h"
#include "harmonica/blade/recommend.h"
#include "harmonica/blade/topsis.h"
#include "harmonica/error.h"
#include "harmonica/gateway/api.h"
#include "json_schema.h"
#include "test_env.h"
#include "test_server.h"
#include "topsis_oracle.h"

namespace harmonica::acceptance {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using kb::Direction;

constexpr double kClosenessTolerance = 1e-9;
constexpr double kScaleTolerance = 1e-9;
constexpr double kLatencyBudgetMs = 50.0;

// Collects failure messages for one criterion; keeps the first few.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 5) notes_ << "\n    " << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 5) return notes_.str();
    return notes_.str() + "\n    (" + std::to_string(failures_ - 5) + " more)";
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

const kb::KnowledgeBase& Kb() {
  static const kb::KnowledgeBase kb = kb::LoadKnowledgeBase(testing::KbDir());
  return kb;
}

// ---- TOPSIS -----------------------------------------------------------------

struct Instance {
  blade::DecisionMatrix matrix;
  blade::WeightVector weights;
};

Instance RandomInstance(std::mt19937_64& rng, int min_score = 1, int max_score = 5) {
  std::uniform_int_distribution<int> alt(2, 6), crit(2, 14), score(min_score, max_score),
      dir(0, 1);
  std::uniform_real_distribution<double> raw(0.01, 1.0);
  const int m = alt(rng), n = crit(rng);
  Instance inst;
  for (int i = 0; i < m; ++i) inst.matrix.alternatives.push_back("alt-" + std::to_string(i));
  for (int j = 0; j < n; ++j) {
    inst.matrix.criteria.push_back(
        {"crit-" + std::to_string(j), dir(rng) ? Direction::kCost : Direction::kBenefit});
  }
  inst.matrix.values.assign(m, std::vector<double>(n));
  for (auto& row : inst.matrix.values) {
    for (auto& x : row) x = score(rng);
  }
  std::vector<double> w(n);
  double total = 0;
  for (auto& x : w) total += (x = raw(rng));
  for (int j = 0; j < n; ++j) inst.weights.weights[inst.matrix.criteria[j].attribute_id] = w[j] / total;
  return inst;
}

testing::OracleResult Oracle(const Instance& inst) {
  testing::OracleInput in;
  in.scores = inst.matrix.values;
  for (const auto& c : inst.matrix.criteria) {
    in.weights.push_back(inst.weights.weights.at(c.attribute_id));
    in.benefit.push_back(c.direction == Direction::kBenefit);
  }
  return testing::OracleTopsis(in);
}

std::map<std::string, double> ClosenessById(const blade::Ranking& ranking) {
  std::map<std::string, double> out;
  for (const auto& e : ranking.entries) out[e.blockchain_id] = e.closeness;
  return out;
}

Check TopsisOracle() {
  Check check;
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = RandomInstance(rng);
    auto want = Oracle(inst);
    auto got = blade::TopsisRank(inst.matrix, inst.weights);
    auto by_id = ClosenessById(got);
    const auto& alts = inst.matrix.alternatives;
    check.Expect(got.entries.size() == alts.size(), "trial " + std::to_string(trial) + ": size");
    for (size_t i = 0; i < alts.size(); ++i) {
      double diff = std::fabs(by_id[alts[i]] - want.closeness[i]);
      check.Expect(diff <= kClosenessTolerance,
                   "trial " + std::to_string(trial) + " " + alts[i] + ": |dC| = " +
                       std::to_string(diff));
    }
    // Oracle order: closeness descending, ties within the resolution by id.
    std::vector<size_t> order(alts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (std::fabs(want.closeness[a] - want.closeness[b]) > blade::kClosenessTieResolution) {
        return want.closeness[a] > want.closeness[b];
      }
      return alts[a] < alts[b];
    });
    for (size_t k = 0; k < order.size() && k < got.entries.size(); ++k) {
      check.Expect(got.entries[k].blockchain_id == alts[order[k]],
                   "trial " + std::to_string(trial) + ": order differs at rank " +
                       std::to_string(k + 1));
    }
  }
  return check;
}

Check Dominance() {
  Check check;
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    // Others score in 2..4 so a strictly better ordinal value always exists.
    Instance inst = RandomInstance(rng, 2, 4);
    std::vector<double> row;
    for (size_t j = 0; j < inst.matrix.criteria.size(); ++j) {
      row.push_back(inst.matrix.criteria[j].direction == Direction::kBenefit ? 5 : 1);
    }
    std::uniform_int_distribution<size_t> pos(0, inst.matrix.alternatives.size());
    size_t at = pos(rng);
    inst.matrix.alternatives.insert(inst.matrix.alternatives.begin() + at, "z-dominator");
    inst.matrix.values.insert(inst.matrix.values.begin() + at, row);
    auto got = blade::TopsisRank(inst.matrix, inst.weights);
    check.Expect(got.entries.front().blockchain_id == "z-dominator",
                 "trial " + std::to_string(trial) + ": dominator ranked " +
                     got.entries.front().blockchain_id + " first");
  }
  return check;
}

Check ColumnScale() {
  Check check;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = RandomInstance(rng);
    auto base = ClosenessById(blade::TopsisRank(inst.matrix, inst.weights));
    for (size_t j = 0; j < inst.matrix.criteria.size(); ++j) {
      for (double c : {0.1, 3.0, 1000.0}) {
        Instance scaled = inst;
        for (auto& row : scaled.matrix.values) row[j] *= c;
        auto again = ClosenessById(blade::TopsisRank(scaled.matrix, scaled.weights));
        for (const auto& [id, closeness] : base) {
          check.Expect(std::fabs(again[id] - closeness) <= kScaleTolerance,
                       "trial " + std::to_string(trial) + " column " + std::to_string(j) +
                           " x" + std::to_string(c) + " moved " + id);
        }
      }
    }
  }
  return check;
}

// ---- Filtering and conflicts ---------------------------------------------------

Check RequiredFilter() {
  Check check;
  for (const auto& attribute : Kb().attributes) {
    for (int min_level = kb::kScaleMin; min_level <= kb::kScaleMax; ++min_level) {
      blade::PreferenceProfile profile;
      profile.Require(attribute.id, min_level);
      std::set<std::string> want;
      for (const auto& chain : Kb().blockchains) {
        if (chain.scores.at(attribute.id) < min_level) want.insert(chain.id);
      }
      auto result = blade::FilterRequired(profile, Kb());
      std::set<std::string> got;
      for (const auto& d : result.disqualified) got.insert(d.blockchain_id);
      std::set<std::string> qualified(result.qualified.begin(), result.qualified.end());
      std::string where = attribute.id + " >= " + std::to_string(min_level);
      check.Expect(got == want, where + ": disqualified set differs");
      check.Expect(got.size() + qualified.size() == Kb().blockchains.size(),
                   where + ": partition broken");
    }
  }
  return check;
}

std::optional<kb::Severity> ExpectedSeverity(int l, bool lreq, int r, bool rreq,
                                             int threshold) {
  bool left_on = lreq || l >= threshold;
  bool right_on = rreq || r >= threshold;
  if (!left_on || !right_on) return std::nullopt;
  return (lreq || rreq) ? kb::Severity::kError : kb::Severity::kWarning;
}

Check ConflictTables() {
  Check check;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"immutability", "modifiability"}, {"decentralization", "access-control"}};
  for (const auto& [a, b] : pairs) {
    const kb::ConflictRule* rule = nullptr;
    for (const auto& r : Kb().conflict_rules) {
      if ((r.left == a && r.right == b) || (r.left == b && r.right == a)) rule = &r;
    }
    check.Expect(rule != nullptr, "no rule for " + a + "/" + b);
    if (rule == nullptr) continue;
    const int threshold = ToInt(rule->threshold);
    for (int l = 0; l < kPreferenceLevelCount; ++l) {
      for (int r = 0; r < kPreferenceLevelCount; ++r) {
        for (int mask = 0; mask < 4; ++mask) {
          const bool lreq = mask & 1, rreq = mask & 2;
          blade::PreferenceProfile profile, swapped;
          auto set = [](blade::PreferenceProfile& p, const std::string& id, int level, bool req) {
            PreferenceLevel pl = *PreferenceLevelFromInt(level);
            if (req) {
              p.Require(id, 1, pl);
            } else if (level > 0) {
              p.Set(id, pl);
            }
          };
          set(profile, a, l, lreq);
          set(profile, b, r, rreq);
          set(swapped, b, l, lreq);
          set(swapped, a, r, rreq);
          auto want = ExpectedSeverity(l, lreq, r, rreq, threshold);
          auto report = blade::CheckConflicts(profile, Kb());
          auto mirror = blade::CheckConflicts(swapped, Kb());
          std::string where = a + "=" + std::to_string(l) + (lreq ? "R" : "") + " " + b + "=" +
                              std::to_string(r) + (rreq ? "R" : "");
          std::optional<kb::Severity> got;
          if (!report.violations.empty()) got = report.violations.front().severity;
          check.Expect(report.violations.size() <= 1, where + ": extra violations");
          check.Expect(got == want, where + ": severity differs");
          bool mirror_hit = !mirror.violations.empty();
          check.Expect(mirror_hit == want.has_value() &&
                           (!mirror_hit || mirror.violations.front().severity ==
                                               ExpectedSeverity(r, rreq, l, lreq, threshold)),
                       where + ": not symmetric");
        }
      }
    }
  }
  return check;
}

// ---- Feature model -------------------------------------------------------------

std::set<std::set<std::string>> BruteForceThroughValidate(const banco::FeatureModel& model) {
  std::set<std::set<std::string>> out;
  const size_t n = model.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    banco::Configuration c;
    for (size_t i = 0; i < n; ++i) {
      ((mask >> i) & 1 ? c.selected : c.deselected).insert(model.features()[i].id);
    }
    if (banco::ValidateConfiguration(c, model).status == banco::Validity::kValid) {
      out.insert(c.selected);
    }
  }
  return out;
}

std::set<std::set<std::string>> Enumerated(const banco::FeatureModel& model) {
  std::set<std::set<std::string>> out;
  for (const auto& c : banco::EnumerateConfigurations(model, size_t{1} << 22)) {
    out.insert(c.selected);
  }
  return out;
}

Check FeatureModelSemantics() {
  Check check;
  const auto& models = testing::TestModels();
  check.Expect(models.size() >= 10, "fewer than ten test models");
  for (const auto& tm : models) {
    check.Expect(tm.features.size() <= 15, tm.name + ": more than 15 features");
    auto model = testing::BuildModel(tm);
    auto got = Enumerated(model);
    check.Expect(got == BruteForceThroughValidate(model), tm.name + ": differs from validate filter");
    check.Expect(got == testing::OracleEnumerate(tm), tm.name + ": differs from oracle");
  }
  auto fixture = banco::LoadFeatureModel(testing::ModelFile());
  size_t golden = json::parse(testing::ReadText(testing::GoldenDir() / "fixture_enumeration.json"))
                      .at("count")
                      .get<size_t>();
  auto got = Enumerated(fixture);
  size_t oracle = testing::OracleEnumerate(testing::LoadTestModel(testing::ModelFile())).size();
  check.Expect(got.size() == golden, "fixture count " + std::to_string(got.size()) +
                                         " != golden " + std::to_string(golden));
  check.Expect(oracle == golden, "oracle count " + std::to_string(oracle) + " != golden " +
                                     std::to_string(golden));
  return check;
}

Check Propagation() {
  Check check;
  for (const auto& tm : testing::TestModels()) {
    auto model = testing::BuildModel(tm);
    for (const auto& f : tm.features) {
      for (bool select : {true, false}) {
        banco::Configuration seed;
        (select ? seed.selected : seed.deselected).insert(f.id);
        std::string where = tm.name + " " + (select ? "+" : "-") + f.id;
        banco::Configuration done;
        try {
          done = banco::CompleteConfiguration(seed, model);
        } catch (const Error& e) {
          // Only an unsatisfiable seed may be refused.
          bool feasible = false;
          for (const auto& s : testing::OracleEnumerate(tm)) {
            feasible |= (s.count(f.id) != 0) == select;
          }
          check.Expect(e.code() == ErrorCode::kContradiction && !feasible,
                       where + ": refused a satisfiable seed");
          continue;
        }
        check.Expect(banco::CompleteConfiguration(done, model) == done, where + ": not idempotent");
        check.Expect(banco::ValidateConfiguration(done, model).status != banco::Validity::kInvalid,
                     where + ": introduced a violation");
      }
    }
  }
  return check;
}

// ---- Generation ------------------------------------------------------------------

Check GenerationDeterminism() {
  Check check;
  auto model = banco::LoadFeatureModel(testing::ModelFile());
  auto config =
      banco::ConfigurationFromJson(json::parse(testing::ReadText(testing::GoldenConfigFile())));
  std::map<std::string, std::string> vars = {{"project", "demo"}};
  testing::TempDir first, second;
  banco::GenerateProduct(config, model, Kb(), first.path(), vars);
  banco::GenerateProduct(config, model, Kb(), second.path(), vars);
  std::string a = testing::ReadText(first.path() / banco::kManifestFile);
  std::string b = testing::ReadText(second.path() / banco::kManifestFile);
  check.Expect(a == b, "manifests differ between runs");
  auto hashes = [](const std::string& text) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : json::parse(text).at("entries")) {
      out.insert({e.at("path").get<std::string>(), e.at("sha256").get<std::string>()});
    }
    return out;
  };
  std::string golden = testing::ReadText(testing::GoldenDir() / "golden_manifest.json");
  check.Expect(hashes(a) == hashes(golden), "hash set differs from golden manifest");
  check.Expect(a == golden, "manifest bytes differ from golden manifest");
  return check;
}

// ---- End to end and gateway ------------------------------------------------------

std::string Quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun RunCli(const std::vector<std::string>& args) {
  std::string command = Quote(HARMONICA_CLI);
  for (const auto& a : args) command += " " + Quote(a);
  command += " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, n);
  int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Post(httplib::Client& client, const std::string& path, const std::string& body) {
  auto res = client.Post(path, body, "application/json");
  return res ? res->body : std::string();
}

Check EndToEnd(testing::TestServer& server) {
  Check check;
  auto client = server.Client();
  testing::TempDir dir;
  auto file = [&](const std::string& name) { return (dir.path() / name).string(); };
  const std::string kb_dir = testing::KbDir().string();
  const std::string model = testing::ModelFile().string();

  auto recommend =
      RunCli({"recommend", "--kb", kb_dir, "--profile", testing::ProfileFile().string(), "--json"});
  check.Expect(recommend.code == 0, "recommend exit " + std::to_string(recommend.code));
  check.Expect(recommend.out ==
                   Post(client, "/api/recommend", testing::ReadText(testing::ProfileFile())),
               "recommend --json differs from POST /api/recommend");
  testing::WriteText(file("report.json"), recommend.out);

  auto preselect = RunCli({"preselect", "--model", model, "--report", file("report.json"), "--json"});
  check.Expect(preselect.code == 0, "preselect exit " + std::to_string(preselect.code));
  check.Expect(preselect.out == Post(client, "/api/preselect", recommend.out),
               "preselect --json differs from POST /api/preselect");
  testing::WriteText(file("preselected.json"), preselect.out);

  auto complete = RunCli({"configure", "complete", "--model", model, "--config",
                          file("preselected.json"), "--json"});
  check.Expect(complete.code == 0, "complete exit " + std::to_string(complete.code));
  check.Expect(complete.out == Post(client, "/api/configure/complete", preselect.out),
               "complete --json differs from POST /api/configure/complete");

  // Two scripted user choices on the open decisions.
  json view = json::parse(complete.out.empty() ? "{}" : complete.out);
  json config = {{"selected", view.value("selected", json::array())},
                 {"deselected", view.value("deselected", json::array())}};
  auto move = [&](const std::string& feature, const char* from, const char* to) {
    auto& src = config[from];
    src.erase(std::remove(src.begin(), src.end(), json(feature)), src.end());
    config[to].push_back(feature);
  };
  move("pattern-oracle", "selected", "deselected");
  config["selected"].push_back("network-bootstrap");
  testing::WriteText(file("choices.json"), config.dump(2));

  auto final_view = RunCli(
      {"configure", "complete", "--model", model, "--config", file("choices.json"), "--json"});
  check.Expect(final_view.code == 0, "second complete exit " + std::to_string(final_view.code));
  check.Expect(final_view.out == Post(client, "/api/configure/complete", config.dump()),
               "second complete differs from API");
  json done = json::parse(final_view.out.empty() ? "{}" : final_view.out);
  check.Expect(done.value("open", json::array()).empty(), "decisions still open");
  json final_config = {{"selected", done.value("selected", json::array())},
                       {"deselected", done.value("deselected", json::array())}};
  testing::WriteText(file("final.json"), final_config.dump(2));

  auto validate =
      RunCli({"configure", "validate", "--model", model, "--config", file("final.json"), "--json"});
  check.Expect(validate.code == 0, "validate exit " + std::to_string(validate.code));
  check.Expect(validate.out == Post(client, "/api/configure/validate", final_config.dump()),
               "validate --json differs from API");

  auto generate = RunCli({"generate", "--kb", kb_dir, "--model", model, "--config",
                          file("final.json"), "--out", file("product"), "--var", "project=demo",
                          "--json"});
  check.Expect(generate.code == 0, "generate exit " + std::to_string(generate.code));
  json request = {{"configuration", final_config}, {"variables", {{"project", "demo"}}}};
  std::string api_generate = Post(client, "/api/generate", request.dump());
  json api_body = json::parse(api_generate.empty() ? "{}" : api_generate);
  check.Expect(api_body.contains("manifest") &&
                   generate.out == gateway::RenderJson(api_body.at("manifest")),
               "generate --json differs from the API manifest");

  size_t files = 0;
  bool contract = false, bootstrap = false;
  for (const auto& entry : fs::recursive_directory_iterator(dir.path() / "product")) {
    if (!entry.is_regular_file() || entry.path().filename() == banco::kManifestFile) continue;
    ++files;
    contract |= entry.path().extension() == ".sol";
    bootstrap |= entry.path().extension() == ".sh";
  }
  check.Expect(files >= 4, "only " + std::to_string(files) + " files generated");
  check.Expect(contract, "no contract stub");
  check.Expect(bootstrap, "no bootstrap script");
  return check;
}

Check GatewayContract(testing::TestServer& server, double& p50_ms) {
  Check check;
  testing::SchemaSet schemas(testing::SchemasDir());
  auto client = server.Client();
  auto expect = [&](const std::string& schema, const std::string& body, const std::string& what) {
    json parsed = json::parse(body.empty() ? "null" : body, nullptr, false);
    auto errors = schemas.Validate(schema, parsed);
    check.Expect(errors.empty(), what + " vs " + schema + (errors.empty() ? "" : ": " + errors[0]));
  };
  auto get = [&](const std::string& path) {
    auto res = client.Get(path);
    return res ? res->body : std::string();
  };
  const std::string profile = testing::ReadText(testing::ProfileFile());
  const std::string golden = testing::ReadText(testing::GoldenConfigFile());

  expect("attributes_response.schema.json", get("/api/attributes"), "GET /api/attributes");
  expect("blockchains_response.schema.json", get("/api/blockchains"), "GET /api/blockchains");
  expect("patterns_response.schema.json", get("/api/patterns"), "GET /api/patterns");
  expect("feature_model.schema.json", get("/api/feature-model"), "GET /api/feature-model");
  expect("conflict_report.schema.json", Post(client, "/api/conflicts", profile),
         "POST /api/conflicts");
  expect("blocked_response.schema.json", Post(client, "/api/blocked", profile), "POST /api/blocked");
  std::string report = Post(client, "/api/recommend", profile);
  expect("recommendation_report.schema.json", report, "POST /api/recommend");
  json explain = {{"profile", json::parse(profile)}, {"blockchain_id", "chain-d"}};
  expect("explain_response.schema.json", Post(client, "/api/explain", explain.dump()),
         "POST /api/explain");
  std::string pre = Post(client, "/api/preselect", report);
  expect("configuration_view.schema.json", pre, "POST /api/preselect");
  expect("configuration_view.schema.json", Post(client, "/api/configure/complete", pre),
         "POST /api/configure/complete");
  expect("validity_report.schema.json", Post(client, "/api/configure/validate", golden),
         "POST /api/configure/validate");
  json gen = {{"configuration", json::parse(golden)}, {"variables", {{"project", "demo"}}}};
  expect("generate_response.schema.json", Post(client, "/api/generate", gen.dump()),
         "POST /api/generate");
  expect("api_error.schema.json", Post(client, "/api/recommend", "{}"), "error body");
  expect("api_error.schema.json", Post(client, "/api/recommend", "not json"), "bad JSON body");
  expect("api_error.schema.json", get("/api/nowhere"), "unknown route");

  std::vector<double> samples;
  for (int i = 0; i < 200; ++i) {
    auto start = std::chrono::steady_clock::now();
    auto res = client.Post("/api/recommend", profile, "application/json");
    auto end = std::chrono::steady_clock::now();
    check.Expect(res && res->status == 200, "recommend request failed");
    samples.push_back(std::chrono::duration<double, std::milli>(end - start).count());
  }
  std::sort(samples.begin(), samples.end());
  p50_ms = samples[samples.size() / 2];
  std::ostringstream p50;
  p50 << p50_ms;
  check.Expect(p50_ms < kLatencyBudgetMs, "POST /api/recommend p50 " + p50.str() + " ms");
  return check;
}

int Report(const std::string& name, const std::function<Check()>& run) {
  auto start = std::chrono::steady_clock::now();
  Check check;
  try {
    check = run();
  } catch (const std::exception& e) {
    check.Expect(false, std::string("exception: ") + e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (check.ok() ? "PASS " : "FAIL ") << name << " (" << secs << " s)"
       << check.notes();
  std::cout << line.str() << std::endl;
  return check.ok() ? 0 : 1;
}

}  // namespace
}  // namespace harmonica::acceptance

int main() {
  using namespace harmonica::acceptance;
  int failures = 0;
  failures += Report("topsis-oracle-equivalence", TopsisOracle);
  failures += Report("dominance-preservation", Dominance);
  failures += Report("column-scale-invariance", ColumnScale);
  failures += Report("required-filter-exactness", RequiredFilter);
  failures += Report("conflict-rule-tables", ConflictTables);
  failures += Report("feature-model-semantics", FeatureModelSemantics);
  failures += Report("propagation", Propagation);
  failures += Report("generation-determinism", GenerationDeterminism);
  {
    harmonica::testing::TestServer server;
    failures += Report("end-to-end", [&] { return EndToEnd(server); });
    double p50 = 0;
    failures += Report("gateway-contract", [&] { return GatewayContract(server, p50); });
    std::cout << "  recommend p50: " << p50 << " ms" << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
