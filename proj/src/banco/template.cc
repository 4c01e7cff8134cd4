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

#include "harmonica/banco/template.h"

#include <vector>

#include "harmonica/error.h"

namespace harmonica::banco {

namespace {

constexpr std::string_view kOpen = "{{";
constexpr std::string_view kClose = "}}";
constexpr std::string_view kBlockOpen = "#feature ";
constexpr std::string_view kBlockClose = "/feature";

bool IsIdent(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void SyntaxError(size_t offset, const std::string& what) {
  throw Error(ErrorCode::kTemplateSyntax,
              "template syntax error at offset " + std::to_string(offset) +
                  ": " + what,
              {{"offset", offset}});
}

[[noreturn]] void Unbalanced(const std::string& feature, size_t offset) {
  throw Error(ErrorCode::kUnbalancedBlock,
              feature.empty()
                  ? "unbalanced block: {{/feature}} without an open block"
                  : "unbalanced block: feature '" + feature + "' is not closed",
              {{"feature", feature}, {"offset", offset}});
}

void RenderNodes(const std::vector<TemplateNode>& nodes,
                 const RenderContext& context, std::string& out) {
  for (const auto& node : nodes) {
    if (const auto* text = std::get_if<TemplateText>(&node.value)) {
      out += text->text;
    } else if (const auto* var = std::get_if<TemplateVariable>(&node.value)) {
      auto it = context.variables.find(var->name);
      if (it == context.variables.end()) {
        throw Error(ErrorCode::kUnknownVariable,
                    "unknown template variable '" + var->name + "'",
                    {{"name", var->name}});
      }
      out += it->second;
    } else {
      const auto& block = std::get<TemplateBlock>(node.value);
      if (context.selected_features.count(block.feature) != 0) {
        RenderNodes(block.children, context, out);
      }
    }
  }
}

void CollectVariables(const std::vector<TemplateNode>& nodes,
                      std::set<std::string>& out) {
  for (const auto& node : nodes) {
    if (const auto* var = std::get_if<TemplateVariable>(&node.value)) {
      out.insert(var->name);
    } else if (const auto* block = std::get_if<TemplateBlock>(&node.value)) {
      CollectVariables(block->children, out);
    }
  }
}

}  // namespace

TemplateDocument ParseTemplate(std::string_view source) {
  TemplateDocument document;
  // Stack of open blocks; the bottom entry is the document itself.
  std::vector<std::vector<TemplateNode>*> stack{&document.nodes};
  std::vector<std::pair<std::string, size_t>> open_blocks;

  size_t pos = 0;
  while (pos < source.size()) {
    size_t tag = source.find(kOpen, pos);
    if (tag == std::string_view::npos) {
      stack.back()->push_back({TemplateText{std::string(source.substr(pos))}});
      break;
    }
    if (tag > pos) {
      stack.back()->push_back(
          {TemplateText{std::string(source.substr(pos, tag - pos))}});
    }
    size_t inner_begin = tag + kOpen.size();
    size_t end = source.find(kClose, inner_begin);
    if (end == std::string_view::npos) SyntaxError(tag, "unterminated tag");
    std::string_view inner = source.substr(inner_begin, end - inner_begin);
    if (inner.find(kOpen) != std::string_view::npos) {
      SyntaxError(tag, "literal '{{' is not allowed");
    }

    if (inner.substr(0, kBlockOpen.size()) == kBlockOpen) {
      std::string_view id = inner.substr(kBlockOpen.size());
      if (!IsIdent(id)) SyntaxError(tag, "bad feature id in block tag");
      auto& siblings = *stack.back();
      siblings.push_back({TemplateBlock{std::string(id), {}}});
      stack.push_back(&std::get<TemplateBlock>(siblings.back().value).children);
      open_blocks.emplace_back(std::string(id), tag);
    } else if (inner == kBlockClose) {
      if (open_blocks.empty()) Unbalanced("", tag);
      stack.pop_back();
      open_blocks.pop_back();
    } else if (IsIdent(inner)) {
      stack.back()->push_back({TemplateVariable{std::string(inner)}});
    } else {
      SyntaxError(tag, "unrecognized tag '{{" + std::string(inner) + "}}'");
    }
    pos = end + kClose.size();
  }
  if (!open_blocks.empty()) {
    Unbalanced(open_blocks.back().first, open_blocks.back().second);
  }
  return document;
}

std::string RenderTemplate(const TemplateDocument& document,
                           const RenderContext& context) {
  std::string out;
  RenderNodes(document.nodes, context, out);
  return out;
}

std::string RenderTemplate(std::string_view source,
                           const RenderContext& context) {
  return RenderTemplate(ParseTemplate(source), context);
}

std::set<std::string> ReferencedVariables(const TemplateDocument& document) {
  std::set<std::string> out;
  CollectVariables(document.nodes, out);
  return out;
}

}  // namespace harmonica::banco
