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

#ifndef HARMONICA_GATEWAY_SERVER_H_
#define HARMONICA_GATEWAY_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "harmonica/gateway/api.h"

namespace harmonica::gateway {

struct ServerOptions {
  std::filesystem::path kb_dir;
  std::filesystem::path model_file;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> static_dir;
};

// Fills unset fields from HARMONICA_KB_DIR, HARMONICA_MODEL and
// HARMONICA_PORT. Values already present in `options` win.
ServerOptions ApplyEnvironment(ServerOptions options, bool port_given);

// Loads and validates both inputs. Throws Error(kValidationFailed) when the
// knowledge base has errors, and the loaders' errors otherwise.
std::shared_ptr<const Api> LoadApi(const std::filesystem::path& kb_dir,
                                   const std::filesystem::path& model_file);

// HTTP front end for an Api. Thread-per-connection; the Api is immutable so
// requests share nothing mutable.
class Server {
 public:
  explicit Server(std::shared_ptr<const Api> api,
                  std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns the bound port, or -1.
  int BindToAnyPort(const std::string& host);
  bool Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace harmonica::gateway

#endif  // HARMONICA_GATEWAY_SERVER_H_
