#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Source spans, source registries and rendered diagnostics.

namespace catt {

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  int source = -1;  // -1 marks synthesised syntax

  bool synthetic() const { return source < 0; }
  static Span join(const Span& a, const Span& b);
};

struct Source {
  std::string name;
  std::string text;
};

class SourceMap {
public:
  int add(std::string name, std::string text);
  const Source& get(int id) const { return sources_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return sources_.size(); }

private:
  std::vector<Source> sources_;
};

struct Diagnostic {
  std::string message;
  Span span;
  std::string label;
  std::vector<std::pair<Span, std::string>> notes;
};

class Error : public std::runtime_error {
public:
  explicit Error(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
  Error(std::string message, Span span, std::string label = {})
      : Error(Diagnostic{std::move(message), span, std::move(label), {}}) {}
  const Diagnostic& diagnostic() const { return diag_; }

private:
  Diagnostic diag_;
};

struct LineCol {
  std::size_t line = 1;
  std::size_t col = 1;
};

LineCol line_col(const std::string& text, std::size_t offset);
std::string render(const Diagnostic& d, const SourceMap& sources);

}  // namespace catt
