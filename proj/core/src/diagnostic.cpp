#include "catt/diagnostic.hpp"

#include <algorithm>

namespace catt {

Span Span::join(const Span& a, const Span& b) {
  if (a.synthetic()) return b;
  if (b.synthetic() || a.source != b.source) return a;
  return Span{std::min(a.start, b.start), std::max(a.end, b.end), a.source};
}

int SourceMap::add(std::string name, std::string text) {
  sources_.push_back(Source{std::move(name), std::move(text)});
  return static_cast<int>(sources_.size()) - 1;
}

LineCol line_col(const std::string& text, std::size_t offset) {
  LineCol lc;
  const std::size_t stop = std::min(offset, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.col = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++lc.col;
    }
  }
  return lc;
}

namespace {

std::size_t width(const std::string& text, std::size_t from, std::size_t to) {
  std::size_t w = 0;
  for (std::size_t i = from; i < to && i < text.size(); ++i)
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++w;
  return w;
}

void render_label(std::string& out, const Span& span, const std::string& label, const SourceMap& sources) {
  if (span.synthetic() || static_cast<std::size_t>(span.source) >= sources.size()) {
    if (!label.empty()) out += "  = " + label + "\n";
    return;
  }
  const Source& src = sources.get(span.source);
  const LineCol lc = line_col(src.text, span.start);
  out += "  --> " + src.name + ":" + std::to_string(lc.line) + ":" + std::to_string(lc.col) + "\n";
  std::size_t line_start = span.start == 0 ? std::string::npos : src.text.rfind('\n', span.start - 1);
  line_start = line_start == std::string::npos ? 0 : line_start + 1;
  std::size_t line_end = src.text.find('\n', span.start);
  if (line_end == std::string::npos) line_end = src.text.size();
  const std::string num = std::to_string(lc.line);
  const std::string pad(num.size(), ' ');
  out += " " + pad + " |\n";
  out += " " + num + " | " + src.text.substr(line_start, line_end - line_start) + "\n";
  const std::size_t end = std::min(std::max(span.end, span.start + 1), line_end);
  const std::size_t carets = std::max<std::size_t>(1, width(src.text, span.start, end));
  out += " " + pad + " | " + std::string(width(src.text, line_start, span.start), ' ') + std::string(carets, '^');
  if (!label.empty()) out += " " + label;
  out += "\n";
}

}  // namespace

std::string render(const Diagnostic& d, const SourceMap& sources) {
  std::string out = "error: " + d.message + "\n";
  render_label(out, d.span, d.label, sources);
  for (const auto& [span, label] : d.notes) render_label(out, span, label, sources);
  return out;
}

}  // namespace catt
