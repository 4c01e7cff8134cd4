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

#include "harmonica/gateway/server.h"

#include <cstdlib>

#include "harmonica/banco/feature_model.h"
#include "httplib.h"

namespace harmonica::gateway {

namespace fs = std::filesystem;

ServerOptions ApplyEnvironment(ServerOptions options, bool port_given) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return std::nullopt;
    return std::string(value);
  };
  if (options.kb_dir.empty()) {
    if (auto v = env("HARMONICA_KB_DIR")) options.kb_dir = *v;
  }
  if (options.model_file.empty()) {
    if (auto v = env("HARMONICA_MODEL")) options.model_file = *v;
  }
  if (!port_given) {
    if (auto v = env("HARMONICA_PORT")) {
      try {
        options.port = std::stoi(*v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kBadRequest, "HARMONICA_PORT is not a number: " + *v);
      }
    }
  }
  return options;
}

std::shared_ptr<const Api> LoadApi(const fs::path& kb_dir, const fs::path& model_file) {
  auto kb = std::make_shared<const kb::KnowledgeBase>(kb::LoadKnowledgeBase(kb_dir));
  auto model = std::make_shared<const banco::FeatureModel>(banco::LoadFeatureModel(model_file));
  return std::make_shared<const Api>(std::move(kb), std::move(model));
}

struct Server::Impl {
  std::shared_ptr<const Api> api;
  httplib::Server http;
};

Server::Server(std::shared_ptr<const Api> api, std::optional<fs::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
  impl_->api = std::move(api);
  auto handler = [api = impl_->api](const httplib::Request& req, httplib::Response& res) {
    ApiResponse response = api->Handle(req.method, req.path, req.body);
    res.status = response.status;
    res.set_content(response.Render(), "application/json");
  };
  impl_->http.Get(R"(/api/.*)", handler);
  impl_->http.Post(R"(/api/.*)", handler);
  if (static_dir) impl_->http.set_mount_point("/", static_dir->string());
}

Server::~Server() { Stop(); }

int Server::BindToAnyPort(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool Server::Bind(const std::string& host, int port) { return impl_->http.bind_to_port(host, port); }

bool Server::ListenAfterBind() { return impl_->http.listen_after_bind(); }

void Server::Stop() { impl_->http.stop(); }

void Server::WaitUntilReady() const { impl_->http.wait_until_ready(); }

}  // namespace harmonica::gateway
