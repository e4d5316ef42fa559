#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catt/diagnostic.hpp"
#include "catt/tree.hpp"

// Raw syntax as written by the user, its parser and its printer.

namespace catt::surface {

struct RawTermNode;
struct RawTypeNode;

enum class RTermKind { Name, Coh, Hole, Id, Comp, Inc, App, Susp };
enum class RTypeKind { Star, Arrow, Hole, App, Susp };

class RawTerm {
public:
  explicit RawTerm(std::shared_ptr<const RawTermNode> n) : n_(std::move(n)) {}
  const RawTermNode* operator->() const { return n_.get(); }
  const RawTermNode& operator*() const { return *n_; }
  RTermKind kind() const;
  const Span& span() const;

private:
  std::shared_ptr<const RawTermNode> n_;
};

class RawType {
public:
  explicit RawType(std::shared_ptr<const RawTypeNode> n) : n_(std::move(n)) {}
  const RawTypeNode* operator->() const { return n_.get(); }
  const RawTypeNode& operator*() const { return *n_; }
  RTypeKind kind() const;
  const Span& span() const;

private:
  std::shared_ptr<const RawTypeNode> n_;
};

using RawTree = tree::Labelled<std::optional<RawTerm>>;
using NameTree = tree::Labelled<std::optional<std::string>>;

struct RawArgs {
  enum class Form { Sub, Square, Full };
  Form form = Form::Sub;
  std::vector<RawTerm> terms;  // Sub
  RawTree label;               // Square and Full
  std::optional<RawType> ty;
  Span span;
};

struct RawTermNode {
  RTermKind kind = RTermKind::Hole;
  Span span;
  std::string name;              // Name
  NameTree ctx;                  // Coh
  std::optional<RawType> type;   // Coh
  std::size_t n = 0;             // Inc
  std::size_t m = 0;             // Inc
  std::optional<RawTerm> inner;  // Inc, App, Susp
  std::optional<RawArgs> args;   // App
};

struct RawTypeNode {
  RTypeKind kind = RTypeKind::Hole;
  Span span;
  std::optional<RawTerm> src;   // Arrow
  std::optional<RawTerm> tgt;   // Arrow
  std::optional<RawType> base;  // Arrow annotation, or the inner type of App and Susp
  std::optional<RawArgs> args;  // App
};

inline RTermKind RawTerm::kind() const { return n_->kind; }
inline const Span& RawTerm::span() const { return n_->span; }
inline RTypeKind RawType::kind() const { return n_->kind; }
inline const Span& RawType::span() const { return n_->span; }

// Builders for synthesised raw syntax.
RawTerm make_term(RawTermNode n);
RawType make_type(RawTypeNode n);
RawTerm raw_name(std::string name, Span s = {});
RawTerm raw_hole(Span s = {});
RawType raw_star(Span s = {});
RawType raw_arrow(RawTerm src, std::optional<RawType> base, RawTerm tgt, Span s = {});

struct RawCtxEntry {
  std::string name;
  RawType type;
  Span span;
};

struct RawCtx {
  std::variant<std::vector<RawCtxEntry>, NameTree> ctx;
  Span span;

  bool is_tree() const { return std::holds_alternative<NameTree>(ctx); }
};

struct Command {
  enum class Kind { Def, Normalise, Assert, Size, Import };
  Kind kind = Kind::Def;
  std::string name;  // Def
  std::optional<RawCtx> ctx;
  std::optional<RawType> type;  // Def
  std::optional<RawTerm> term;
  std::optional<RawTerm> rhs;  // Assert
  std::string path;            // Import
  Span span;
  Span name_span;
};

bool is_keyword(const std::string& s);

// Parsing. Errors are thrown as catt::Error with a span into the source.
std::vector<Command> parse(const std::string& text, int source = -1);
RawTerm parse_term(const std::string& text, int source = -1);
RawType parse_type(const std::string& text, int source = -1);
RawCtx parse_ctx(const std::string& text, int source = -1);

// Printing; the output parses back to the same syntax.
std::string pretty(const RawTerm& t);
std::string pretty(const RawType& a);
std::string pretty(const RawArgs& a);
std::string pretty(const RawCtx& c);
std::string pretty(const NameTree& t);
std::string pretty(const Command& c);

// Structural equality ignoring spans.
bool same(const RawTerm& a, const RawTerm& b);
bool same(const RawType& a, const RawType& b);
bool same(const RawArgs& a, const RawArgs& b);
bool same(const RawCtx& a, const RawCtx& b);
bool same(const Command& a, const Command& b);

}  // namespace catt::surface
