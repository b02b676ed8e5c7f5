#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "hybridlint/ast.hpp"
#include "hybridlint/lexer.hpp"

namespace hybridlint {

/// In-process seam for additional languages. A front-end turns a unit into
/// tokens and a NormalizedAst; everything downstream is language-neutral.
class FrontEnd {
 public:
  virtual ~FrontEnd() = default;
  virtual std::string language() const = 0;
  virtual TokenStream tokenize(const SourceUnit& unit) const = 0;
  virtual Ast parse(const SourceUnit& unit) const = 0;
};

class FrontEndRegistry {
 public:
  static FrontEndRegistry& instance();

  /// Registers under "plugin:<language()>" unless the name is the built-in
  /// python-subset.
  void add(std::unique_ptr<FrontEnd> frontEnd);
  const FrontEnd& get(std::string_view language) const;
  bool supports(std::string_view language) const;

 private:
  FrontEndRegistry();
  std::map<std::string, std::unique_ptr<FrontEnd>, std::less<>> frontEnds_;
};

}  // namespace hybridlint
