#include <algorithm>
#include <functional>
#include <unordered_map>

#include "hybridlint/detection.hpp"

namespace hybridlint {

std::vector<std::string> normalize_tokens(const TokenStream& tokens, std::vector<Span>* spans) {
  std::vector<std::string> out;
  for (const Token& t : tokens.tokens) {
    switch (t.kind) {
      case TokenKind::Comment: continue;
      case TokenKind::Identifier: out.emplace_back("ID"); break;
      case TokenKind::StringLiteral:
      case TokenKind::NumberLiteral: out.emplace_back("LIT"); break;
      default: out.push_back(t.lexeme);
    }
    if (spans) spans->push_back(t.span);
  }
  return out;
}

namespace {

struct Normalized {
  const UnitViews* views;
  std::vector<std::string> toks;
  std::vector<std::uint64_t> ids;
  std::vector<Span> spans;
};

struct Region {
  std::size_t unit;
  std::size_t start;
  bool operator<(const Region& o) const { return std::tie(unit, start) < std::tie(o.unit, o.start); }
};

// Positions sharing one window hash beyond this many are periodic filler;
// pairing all of them would be quadratic for no extra information.
constexpr std::size_t kMaxBucket = 256;

}  // namespace

std::vector<Finding> detect_duplicated_code(const std::vector<const UnitViews*>& units, const Thresholds& t) {
  const std::size_t w = static_cast<std::size_t>(std::max(1, t.cloneTokens));
  std::vector<Normalized> norm;
  std::unordered_map<std::string, std::uint64_t> vocab;
  for (const UnitViews* v : units) {
    Normalized n{v, {}, {}, {}};
    n.toks = normalize_tokens(v->tokens, &n.spans);
    for (const auto& s : n.toks) {
      auto [it, _] = vocab.emplace(s, vocab.size() + 1);
      n.ids.push_back(it->second);
    }
    norm.push_back(std::move(n));
  }

  // Rabin-Karp over token ids, arithmetic mod 2^64.
  constexpr std::uint64_t kBase = 1000003ULL;
  std::uint64_t top = 1;
  for (std::size_t k = 1; k < w; ++k) top *= kBase;
  std::map<std::uint64_t, std::vector<Region>> buckets;
  for (std::size_t u = 0; u < norm.size(); ++u) {
    const auto& ids = norm[u].ids;
    if (ids.size() < w) continue;
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < w; ++k) h = h * kBase + ids[k];
    buckets[h].push_back({u, 0});
    for (std::size_t i = 1; i + w <= ids.size(); ++i) {
      h = (h - ids[i - 1] * top) * kBase + ids[i + w - 1];
      buckets[h].push_back({u, i});
    }
  }

  struct Match {
    Region a, b;
    std::size_t length;
  };
  std::vector<Match> matches;
  for (const auto& [_, regions] : buckets) {
    if (regions.size() < 2) continue;
    std::size_t n = std::min(regions.size(), kMaxBucket);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Region a = regions[x], b = regions[y];
        const auto& ta = norm[a.unit].ids;
        const auto& tb = norm[b.unit].ids;
        bool same = a.unit == b.unit;
        if (same && b.start - a.start < w) continue;  // overlapping windows
        if (!std::equal(ta.begin() + a.start, ta.begin() + a.start + w, tb.begin() + b.start)) continue;
        if (a.start > 0 && b.start > 0 && ta[a.start - 1] == tb[b.start - 1]) continue;  // not left-maximal
        std::size_t len = w;
        std::size_t cap = same ? b.start - a.start : SIZE_MAX;
        while (len < cap && a.start + len < ta.size() && b.start + len < tb.size() &&
               ta[a.start + len] == tb[b.start + len])
          ++len;
        matches.push_back({a, b, len});
      }
  }

  auto span_of = [&](Region r, std::size_t len) {
    const auto& spans = norm[r.unit].spans;
    return cover(spans[r.start], spans[r.start + len - 1]);
  };

  // One finding per reported region, placed at the earlier copy.
  std::map<std::pair<std::string, Span>, Finding> sites;
  for (const Match& m : matches) {
    const UnitViews* va = norm[m.a.unit].views;
    const UnitViews* vb = norm[m.b.unit].views;
    Span sa = span_of(m.a, m.length), sb = span_of(m.b, m.length);
    if (std::tie(vb->unit->path(), sb) < std::tie(va->unit->path(), sa)) {
      std::swap(va, vb);
      std::swap(sa, sb);
    }
    auto key = std::make_pair(va->unit->path(), sa);
    auto it = sites.find(key);
    if (it == sites.end()) {
      Finding f;
      f.rule = Rule::DuplicatedCode;
      f.path = va->unit->path();
      f.span = sa;
      f.entity = entity_ref(va->ast, va->ast.root());
      f.id = finding_id(f.rule, f.path, f.span);
      f.evidence.clone = CloneEvidence{};
      it = sites.emplace(key, std::move(f)).first;
    }
    Finding& f = it->second;
    f.evidence.clone->tokens = std::max(f.evidence.clone->tokens, static_cast<int>(m.length));
    ClonePartner partner{vb->unit->path(), sb};
    auto& partners = f.evidence.clone->partners;
    if (std::find(partners.begin(), partners.end(), partner) == partners.end()) partners.push_back(partner);
  }

  std::vector<Finding> out;
  for (auto& [_, f] : sites) {
    auto& partners = f.evidence.clone->partners;
    std::sort(partners.begin(), partners.end(),
              [](const ClonePartner& x, const ClonePartner& y) { return std::tie(x.path, x.span) < std::tie(y.path, y.span); });
    f.structuralScore = std::min(1.0, f.evidence.clone->tokens / (4.0 * static_cast<double>(w)));
    out.push_back(std::move(f));
  }
  sort_findings(out);
  return out;
}

}  // namespace hybridlint
