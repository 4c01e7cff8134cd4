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

#ifndef HARMONICA_BANCO_TEMPLATE_H_
#define HARMONICA_BANCO_TEMPLATE_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace harmonica::banco {

// Core-asset template language. The grammar is intentionally tiny:
//
//   {{name}}                   variable, name = [a-z0-9-]+
//   {{#feature id}}...{{/feature}}   kept iff `id` is a selected feature
//
// Blocks nest. There is no escaping, so a literal "{{" anywhere else is a
// syntax error. Everything outside tags is copied byte for byte.
struct TemplateNode;

struct TemplateText {
  std::string text;
};

struct TemplateVariable {
  std::string name;
};

struct TemplateBlock {
  std::string feature;
  std::vector<TemplateNode> children;
};

struct TemplateNode {
  std::variant<TemplateText, TemplateVariable, TemplateBlock> value;
};

struct TemplateDocument {
  std::vector<TemplateNode> nodes;
};

struct RenderContext {
  std::map<std::string, std::string> variables;
  std::set<std::string> selected_features;
};

// Throws Error(kTemplateSyntax) for malformed tags and Error(kUnbalancedBlock)
// for unclosed or stray blocks.
TemplateDocument ParseTemplate(std::string_view source);

// Only variables inside kept blocks are resolved; a missing one throws
// Error(kUnknownVariable).
std::string RenderTemplate(const TemplateDocument& document,
                           const RenderContext& context);

std::string RenderTemplate(std::string_view source,
                           const RenderContext& context);

// Every variable name referenced anywhere in the document, kept or not.
std::set<std::string> ReferencedVariables(const TemplateDocument& document);

}  // namespace harmonica::banco

#endif  // HARMONICA_BANCO_TEMPLATE_H_
