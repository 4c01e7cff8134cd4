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

#include "harmonica/gateway/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "harmonica/banco/configuration.h"
#include "harmonica/banco/generator.h"
#include "harmonica/blade/recommend.h"
#include "harmonica/gateway/api.h"
#include "harmonica/gateway/server.h"

namespace harmonica::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingFile, "cannot open '" + path + "'", {{"path", path}});
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what(),
                {{"file", path}, {"byte", e.byte}});
  }
}

std::string Fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// Human-readable renderings. Machine output always goes through RenderJson.

void PrintConflicts(const json& report, std::ostream& out) {
  if (report.at("violations").empty()) {
    out << "no conflicts\n";
    return;
  }
  for (const auto& v : report.at("violations")) {
    const auto& rule = v.at("rule");
    out << v.at("severity").get<std::string>() << ": " << rule.at("left").get<std::string>()
        << " vs " << rule.at("right").get<std::string>() << "\n  "
        << rule.at("explanation").get<std::string>() << "\n";
  }
}

void PrintRecommendation(const json& report, std::ostream& out) {
  PrintConflicts(report.at("conflicts"), out);
  if (report.at("ranking").is_null()) {
    out << "ranking withheld: resolve error-severity conflicts first\n";
    return;
  }
  const auto& ranking = report.at("ranking");
  out << "\nrank  blockchain              closeness  d+        d-\n";
  int rank = 1;
  for (const auto& e : ranking.at("entries")) {
    std::string id = e.at("blockchain_id").get<std::string>();
    out << std::left << std::setw(6) << rank++ << std::setw(24) << id
        << std::setw(11) << Fixed(e.at("closeness").get<double>(), 6)
        << std::setw(10) << Fixed(e.at("d_plus").get<double>(), 6)
        << Fixed(e.at("d_minus").get<double>(), 6) << "\n";
  }
  for (const auto& d : ranking.at("disqualified")) {
    out << "disqualified " << d.at("blockchain_id").get<std::string>() << ": "
        << d.at("attribute_id").get<std::string>() << " scores "
        << d.at("actual_score").get<int>() << " < " << d.at("min_level").get<int>() << "\n";
  }
  out << "\npatterns for " << report.at("recommended_blockchain").get<std::string>() << ":\n";
  for (const auto& p : report.at("patterns")) {
    out << "  " << std::left << std::setw(28) << p.at("pattern_id").get<std::string>();
    if (p.at("score").is_null()) {
      out << "excluded (" << p.at("excluded_reason").get<std::string>() << ")";
    } else {
      out << "score " << Fixed(p.at("score").get<double>(), 0);
      if (!p.at("conflicts_with").empty()) {
        out << "  conflicts with " << p.at("conflicts_with").dump();
      }
    }
    out << "\n";
  }
}

void PrintBlocked(const json& blocked, std::ostream& out) {
  if (blocked.empty()) {
    out << "no blocked attributes\n";
    return;
  }
  for (const auto& [attribute, rules] : blocked.items()) {
    out << attribute << ":";
    for (const auto& rule : rules) {
      out << " " << rule.at("left").get<std::string>() << "/" << rule.at("right").get<std::string>();
    }
    out << "\n";
  }
}

void PrintExplain(const json& body, std::ostream& out) {
  out << "criterion                       weighted   gap-ideal  gap-anti\n";
  for (const auto& r : body.at("rows")) {
    out << std::left << std::setw(32) << r.at("attribute_id").get<std::string>()
        << std::setw(11) << Fixed(r.at("weighted").get<double>(), 6) << std::setw(11)
        << Fixed(r.at("gap_to_ideal").get<double>(), 6)
        << Fixed(r.at("gap_to_anti_ideal").get<double>(), 6) << "\n";
  }
}

void PrintConfiguration(const json& config, std::ostream& out) {
  for (const char* key : {"selected", "deselected", "open"}) {
    if (!config.contains(key)) continue;
    out << key << ":";
    for (const auto& f : config.at(key)) out << " " << f.get<std::string>();
    out << "\n";
  }
}

void PrintValidity(const json& report, std::ostream& out) {
  out << report.at("status").get<std::string>() << "\n";
  for (const auto& v : report.at("violations")) {
    out << "  " << v.at("rule").get<std::string>() << ": " << v.at("message").get<std::string>()
        << "\n";
  }
}

void PrintManifest(const json& manifest, std::ostream& out) {
  for (const auto& e : manifest.at("entries")) {
    out << e.at("sha256").get<std::string>().substr(0, 12) << "  " << std::right
        << std::setw(6) << e.at("bytes").get<size_t>() << "  " << e.at("path").get<std::string>()
        << "\n";
  }
}

void PrintLint(const json& report, std::ostream& out) {
  for (const auto& issue : report.at("issues")) {
    out << issue.at("severity").get<std::string>() << ": " << issue.at("location").get<std::string>()
        << ": " << issue.at("message").get<std::string>() << "\n";
  }
  out << report.at("errors").get<size_t>() << " error(s), "
      << report.at("warnings").get<size_t>() << " warning(s)\n";
}

using Printer = void (*)(const json&, std::ostream&);

int Emit(const ApiResponse& response, bool as_json, Printer printer, std::ostream& out,
         std::ostream& err) {
  if (as_json) {
    out << response.Render();
  } else if (response.status != 200) {
    err << "error: " << response.body.at("code").get<std::string>() << ": "
        << response.body.at("message").get<std::string>() << "\n";
  } else {
    printer(response.body, out);
  }
  return response.exit_code;
}

// Runs `fn`, turning engine errors raised while loading inputs into the same
// ApiError output a request would produce.
template <typename Fn>
int WithErrors(bool as_json, std::ostream& out, std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return Emit(ErrorResponse(e), as_json, nullptr, out, err);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blockchain platform recommender and product-line configurator", "harmonica"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string kb_dir, model_file, profile_file, report_file, config_file, out_dir, chain;
  std::vector<std::string> vars;
  size_t limit = 100000;

  auto* kb_cmd = app.add_subcommand("kb", "Knowledge base tools");
  kb_cmd->require_subcommand(1);
  auto* lint = kb_cmd->add_subcommand("lint", "Validate a knowledge base directory");
  lint->add_option("dir", kb_dir, "Knowledge base root")->required();
  lint->add_option("--model", model_file, "Also check assets against a feature model");
  lint->add_flag("--json", as_json, "Machine-readable output");

  auto add_profile_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--kb", kb_dir, "Knowledge base root")->required();
    cmd->add_option("--profile", profile_file, "Preference profile JSON")->required();
    cmd->add_flag("--json", as_json, "Machine-readable output");
    return cmd;
  };
  auto* recommend = add_profile_cmd("recommend", "Rank blockchains and recommend patterns");
  bool table = false;
  recommend->add_flag("--table", table, "Tabular output (default)");
  auto* conflicts = add_profile_cmd("conflicts", "Check a profile for conflicting requirements");
  auto* blocked = add_profile_cmd("blocked", "List attributes that would raise errors if added");
  auto* explain = add_profile_cmd("explain", "Per-criterion breakdown for one ranked blockchain");
  explain->add_option("--blockchain", chain, "Blockchain id")->required();

  auto* preselect = app.add_subcommand("preselect", "Map a recommendation onto features");
  preselect->add_option("--model", model_file, "Feature model JSON")->required();
  preselect->add_option("--report", report_file, "Recommendation report JSON")->required();
  preselect->add_flag("--json", as_json, "Machine-readable output");

  auto* configure = app.add_subcommand("configure", "Feature configuration tools");
  configure->require_subcommand(1);
  auto add_config_cmd = [&](const char* name, const char* help, bool needs_config) {
    auto* cmd = configure->add_subcommand(name, help);
    cmd->add_option("--model", model_file, "Feature model JSON")->required();
    if (needs_config) {
      cmd->add_option("--config", config_file, "Configuration JSON")->required();
    }
    cmd->add_flag("--json", as_json, "Machine-readable output");
    return cmd;
  };
  auto* validate = add_config_cmd("validate", "Check a configuration", true);
  add_config_cmd("complete", "Propagate forced decisions", true);
  auto* enumerate = add_config_cmd("enumerate", "List every valid complete configuration", false);
  enumerate->add_option("--limit", limit, "Fail when there are more configurations");

  auto* generate = app.add_subcommand("generate", "Render a product from core assets");
  generate->add_option("--kb", kb_dir, "Knowledge base root")->required();
  generate->add_option("--model", model_file, "Feature model JSON")->required();
  generate->add_option("--config", config_file, "Complete configuration JSON")->required();
  generate->add_option("--out", out_dir, "Output directory")->required();
  generate->add_option("--var", vars, "Template variable as key=value");
  generate->add_flag("--json", as_json, "Print the manifest as JSON");

  ServerOptions serve_options;
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--kb", serve_options.kb_dir, "Knowledge base root");
  serve->add_option("--model", serve_options.model_file, "Feature model JSON");
  auto* port_opt = serve->add_option("--port", serve_options.port, "TCP port");
  serve->add_option("--host", serve_options.host, "Bind address");
  serve->add_option("--static", static_dir, "Directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  return WithErrors(as_json, out, err, [&]() -> int {
    if (lint->parsed()) {
      kb::KnowledgeBase kb = kb::ParseKnowledgeBase(kb_dir);
      kb::ValidationReport report = kb::ValidateKnowledgeBase(kb);
      if (!model_file.empty()) {
        auto extra = banco::LintAssetsAgainstModel(kb, banco::LoadFeatureModel(model_file));
        report.issues.insert(report.issues.end(), extra.issues.begin(), extra.issues.end());
      }
      if (as_json) {
        out << RenderJson(kb::ToJson(report));
      } else {
        PrintLint(kb::ToJson(report), out);
      }
      return report.ok() ? 0 : 1;
    }
    if (recommend->parsed() || conflicts->parsed() || blocked->parsed() || explain->parsed()) {
      kb::KnowledgeBase kb = kb::LoadKnowledgeBase(kb_dir);
      json profile = ReadJsonFile(profile_file);
      if (recommend->parsed()) {
        return Emit(RecommendResponse(kb, profile), as_json, PrintRecommendation, out, err);
      }
      if (conflicts->parsed()) {
        return Emit(ConflictsResponse(kb, profile), as_json, PrintConflicts, out, err);
      }
      if (blocked->parsed()) {
        return Emit(BlockedResponse(kb, profile), as_json, PrintBlocked, out, err);
      }
      json body = {{"profile", profile}, {"blockchain_id", chain}};
      return Emit(ExplainResponse(kb, body), as_json, PrintExplain, out, err);
    }
    if (preselect->parsed()) {
      banco::FeatureModel model = banco::LoadFeatureModel(model_file);
      return Emit(PreselectResponse(model, ReadJsonFile(report_file)), as_json,
                  PrintConfiguration, out, err);
    }
    if (configure->parsed()) {
      banco::FeatureModel model = banco::LoadFeatureModel(model_file);
      if (enumerate->parsed()) {
        auto print = [](const json& body, std::ostream& o) {
          for (const auto& c : body.at("configurations")) {
            for (const auto& f : c.at("selected")) o << f.get<std::string>() << " ";
            o << "\n";
          }
          o << body.at("count").get<size_t>() << " configuration(s)\n";
        };
        return Emit(EnumerateResponse(model, limit), as_json, print, out, err);
      }
      json config = ReadJsonFile(config_file);
      if (validate->parsed()) {
        return Emit(ValidateResponse(model, config), as_json, PrintValidity, out, err);
      }
      return Emit(CompleteResponse(model, config), as_json, PrintConfiguration, out, err);
    }
    if (generate->parsed()) {
      std::map<std::string, std::string> variables;
      for (const auto& kv : vars) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw Error(ErrorCode::kBadRequest, "--var expects key=value, got '" + kv + "'");
        }
        variables[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      kb::KnowledgeBase kb = kb::LoadKnowledgeBase(kb_dir);
      banco::FeatureModel model = banco::LoadFeatureModel(model_file);
      banco::Configuration config = banco::ConfigurationFromJson(ReadJsonFile(config_file));
      auto manifest = banco::GenerateProduct(config, model, kb, out_dir, variables);
      ApiResponse response{200, banco::ToJson(manifest), 0};
      return Emit(response, as_json, PrintManifest, out, err);
    }
    if (serve->parsed()) {
      ServerOptions options = ApplyEnvironment(serve_options, port_opt->count() > 0);
      if (!static_dir.empty()) options.static_dir = static_dir;
      if (options.kb_dir.empty() || options.model_file.empty()) {
        throw Error(ErrorCode::kBadRequest,
                    "serve needs --kb/--model or HARMONICA_KB_DIR/HARMONICA_MODEL");
      }
      Server server(LoadApi(options.kb_dir, options.model_file), options.static_dir);
      if (!server.Bind(options.host, options.port)) {
        throw Error(ErrorCode::kIo, "cannot bind " + options.host + ":" +
                                        std::to_string(options.port));
      }
      err << "listening on http://" << options.host << ":" << options.port << "/api\n";
      return server.ListenAfterBind() ? 0 : 1;
    }
    return 1;
  });
}

}  // namespace harmonica::gateway
