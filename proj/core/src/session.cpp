#include "catt/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "catt/oracle.hpp"
#include "catt/to_raw.hpp"

namespace catt {

namespace fs = std::filesystem;
using surface::Command;

Session::Session(nbe::EvalConfig cfg, std::ostream& out, std::ostream& err) : sig_(cfg), out_(out), err_(err) {}

void Session::report(const Diagnostic& d) { err_ << render(d, sources_); }

namespace {

std::string show_type(const core::Type& a, const core::Ctx& u, const nbe::EvalConfig& cfg) {
  return surface::show(tc::nf(a, u, cfg), u, cfg.keep_implicits);
}

std::string ctx_suffix(const core::Ctx& u) {
  const std::string s = surface::pretty(surface::to_raw(u, false));
  return s.empty() ? "" : " " + s;
}

}  // namespace

bool Session::run_command(const Command& c, const fs::path& dir) {
  const auto& cfg = sig_.config();
  try {
    switch (c.kind) {
      case Command::Kind::Def: {
        if (sig_.contains(c.name)) throw Error("'" + c.name + "' is already defined", c.name_span, "defined earlier");
        tc::Binding b;
        if (!c.ctx) {
          tc::Inferred i = tc::infer(*c.term, sig_);
          b = tc::Binding{std::move(i.ctx), std::move(i.term), std::move(i.type)};
        } else {
          core::Ctx u = tc::check_ctx(*c.ctx, sig_);
          tc::Checked k = tc::check_term(*c.term, u, sig_);
          if (c.type) tc::check_type_against(*c.type, u, tc::nf(k.type, u, cfg), sig_);
          b = tc::Binding{std::move(u), std::move(k.term), std::move(k.type)};
        }
        out_ << "def " << c.name << ctx_suffix(b.ctx) << " : " << show_type(b.type, b.ctx, cfg) << "\n";
        sig_.insert(c.name, std::move(b));
        return true;
      }
      case Command::Kind::Normalise: {
        const core::Ctx u = tc::check_ctx(*c.ctx, sig_);
        const tc::Checked k = tc::check_term(*c.term, u, sig_);
        out_ << surface::show(tc::nf(k.term, u, cfg), u, cfg.keep_implicits) << " : " << show_type(k.type, u, cfg)
             << "\n";
        if (oracle_trace) trace(k.term, u);
        return true;
      }
      case Command::Kind::Size: {
        const core::Ctx u = tc::check_ctx(*c.ctx, sig_);
        const tc::Checked k = tc::check_term(*c.term, u, sig_);
        out_ << nbe::size(tc::nf(k.term, u, cfg)) << "\n";
        return true;
      }
      case Command::Kind::Assert: {
        const core::Ctx u = tc::check_ctx(*c.ctx, sig_);
        const tc::Checked l = tc::check_term(*c.term, u, sig_);
        const tc::Checked r = tc::check_term(*c.rhs, u, sig_);
        const nbe::NfTerm ln = tc::nf(l.term, u, cfg);
        const nbe::NfTerm rn = tc::nf(r.term, u, cfg);
        if (!(ln == rn)) {
          Diagnostic d{"assertion failed: the two sides have different normal forms", (*c.term).span(),
                       "normalises to " + surface::show(ln, u, cfg.keep_implicits), {}};
          d.notes.emplace_back((*c.rhs).span(), "normalises to " + surface::show(rn, u, cfg.keep_implicits));
          report(d);
          return false;
        }
        out_ << "assertion holds\n";
        return true;
      }
      case Command::Kind::Import: return import(c.path, c.span, dir);
    }
  } catch (const Error& e) {
    report(e.diagnostic());
  } catch (const nbe::eval_error& e) {
    report(Diagnostic{std::string("internal evaluation error: ") + e.what(), c.span, {}, {}});
  } catch (const flat::malformed& e) {
    report(Diagnostic{std::string("internal error: ") + e.what(), c.span, {}, {}});
  }
  return false;
}

bool Session::run_text(const std::string& text, const std::string& name, const fs::path& dir) {
  const int id = sources_.add(name, text);
  std::vector<Command> cmds;
  try {
    cmds = surface::parse(text, id);
  } catch (const Error& e) {
    report(e.diagnostic());
    return false;
  }
  const tc::Signature saved = sig_;
  for (const auto& c : cmds) {
    if (!run_command(c, dir)) {
      sig_ = saved;
      return false;
    }
  }
  return true;
}

bool Session::run_file(const fs::path& path) {
  std::error_code ec;
  const fs::path canon = fs::weakly_canonical(path, ec);
  for (const auto& p : imports_)
    if (p == canon) {
      report(Diagnostic{"import cycle through " + path.string(), {}, "already being imported", {}});
      return false;
    }
  std::ifstream in(path);
  if (!in) {
    report(Diagnostic{"cannot read " + path.string(), {}, {}, {}});
    return false;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  imports_.push_back(canon);
  const bool ok = run_text(ss.str(), path.string(), path.parent_path());
  imports_.pop_back();
  return ok;
}

bool Session::import(const std::string& path, const Span& span, const fs::path& dir) {
  fs::path p = dir / path;
  if (!fs::exists(p)) p = path;
  if (!fs::exists(p)) throw Error("cannot find file '" + path + "'", span, "looked beside this file and in the working directory");
  for (const auto& q : imports_)
    if (q == fs::weakly_canonical(p)) throw Error("import cycle through '" + path + "'", span, "already being imported");
  return run_file(p);
}

bool Session::repl(std::istream& in, bool prompt) {
  bool ok = true;
  std::string line;
  std::string pending;
  while (true) {
    if (prompt) out_ << (pending.empty() ? "catt> " : "  ... ") << std::flush;
    if (!std::getline(in, line)) break;
    pending += line + "\n";
    std::vector<Command> cmds;
    const int id = sources_.add("<repl>", pending);
    try {
      cmds = surface::parse(pending, id);
    } catch (const Error& e) {
      if (e.diagnostic().span.start >= pending.size() - 1 && !line.empty()) continue;
      report(e.diagnostic());
      pending.clear();
      ok = false;
      continue;
    }
    pending.clear();
    for (const auto& c : cmds) ok = run_command(c, fs::current_path()) && ok;
  }
  if (prompt) out_ << "\n";
  return ok;
}

void Session::trace(const core::Term& t, const core::Ctx& u) {
  const auto& cfg = sig_.config();
  if (cfg.insertion == nbe::Insertion::None && !cfg.disc_removal && !cfg.endo_coherence_removal) {
    out_ << "oracle: no reduction rules are active\n";
    return;
  }
  const oracle::RuleSet rules = cfg.insertion == nbe::Insertion::Full ? oracle::RuleSet::SuaPrime : oracle::RuleSet::SuPrime;
  flat::Ctx g;
  flat::Term ft;
  if (const auto* tc = std::get_if<core::TreeCtx>(&u)) {
    g = tree::to_ctx(tc->tree);
    ft = core::flatten_core(t, core::Scope::tree(tc->tree));
  } else {
    const auto& f = std::get<core::FlatCtx>(u);
    for (std::size_t i = 0; i < f.types.size(); ++i) g.push_back(core::flatten_core(f.types[i], core::Scope::flat(i)));
    ft = core::flatten_core(t, core::Scope::flat(f.types.size()));
  }
  out_ << "oracle: " << flat::show(ft) << "\n";
  for (const auto& s : oracle::normalise_trace(ft, g, rules)) out_ << "  " << oracle::show(s) << "\n";
}

}  // namespace catt
