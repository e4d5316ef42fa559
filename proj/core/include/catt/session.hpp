#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "catt/diagnostic.hpp"
#include "catt/nbe.hpp"
#include "catt/surface.hpp"
#include "catt/typecheck.hpp"

// Command execution against a signature, file import and the REPL.

namespace catt {

class Session {
public:
  Session(nbe::EvalConfig cfg, std::ostream& out, std::ostream& err);

  // Each returns true when every command succeeded. A failing command leaves
  // the signature untouched; a file stops at its first failing command and
  // its bindings are rolled back.
  bool run_command(const surface::Command& c, const std::filesystem::path& dir);
  bool run_text(const std::string& text, const std::string& name, const std::filesystem::path& dir);
  bool run_file(const std::filesystem::path& path);
  bool repl(std::istream& in, bool prompt);

  const tc::Signature& signature() const { return sig_; }
  const SourceMap& sources() const { return sources_; }

  // Print an oracle reduction trace after each normalise command.
  bool oracle_trace = false;

private:
  tc::Signature sig_;
  SourceMap sources_;
  std::vector<std::filesystem::path> imports_;
  std::ostream& out_;
  std::ostream& err_;

  void report(const Diagnostic& d);
  bool import(const std::string& path, const Span& span, const std::filesystem::path& dir);
  void trace(const core::Term& t, const core::Ctx& u);
};

}  // namespace catt
