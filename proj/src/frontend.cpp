#include "hybridlint/frontend.hpp"

namespace hybridlint {

namespace {

class PythonSubsetFrontEnd final : public FrontEnd {
 public:
  std::string language() const override { return std::string(kPythonSubset); }
  TokenStream tokenize(const SourceUnit& unit) const override { return tokenize_python(unit.text()); }
  Ast parse(const SourceUnit& unit) const override { return parse_python(unit.text()); }
};

}  // namespace

FrontEndRegistry& FrontEndRegistry::instance() {
  static FrontEndRegistry registry;
  return registry;
}

FrontEndRegistry::FrontEndRegistry() {
  frontEnds_.emplace(std::string(kPythonSubset), std::make_unique<PythonSubsetFrontEnd>());
}

void FrontEndRegistry::add(std::unique_ptr<FrontEnd> frontEnd) {
  std::string key = frontEnd->language();
  if (key != kPythonSubset) key = "plugin:" + key;
  frontEnds_[key] = std::move(frontEnd);
}

const FrontEnd& FrontEndRegistry::get(std::string_view language) const {
  auto it = frontEnds_.find(language);
  if (it == frontEnds_.end()) throw UnsupportedLanguage(std::string(language));
  return *it->second;
}

bool FrontEndRegistry::supports(std::string_view language) const {
  return frontEnds_.find(language) != frontEnds_.end();
}

}  // namespace hybridlint
