#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cerrno>
#include <cstring>

#include "hybridlint/detection.hpp"

namespace hybridlint {

namespace detail {
extern const char* const kBuiltinLexicon;
}

Lexicon Lexicon::from_json(const nlohmann::json& j) {
  Lexicon lex;
  if (!j.is_object() || !j.contains("rules") || !j["rules"].is_object()) throw Error("lexicon: missing \"rules\" object");
  for (const auto& [name, cues] : j["rules"].items()) {
    auto rule = parse_rule(name);
    if (!rule) throw Error("lexicon: unknown rule " + name);
    for (const auto& c : cues) {
      Cue cue;
      cue.text = c.at("cue").get<std::string>();
      cue.match = c.value("match", "word");
      cue.weight = c.at("weight").get<double>();
      cue.cap = c.value("cap", 1);
      if (cue.match != "word" && cue.match != "token") throw Error("lexicon: bad match kind " + cue.match);
      if (cue.weight < 0 || cue.cap < 1) throw Error("lexicon: bad weight or cap for " + cue.text);
      if (cue.match == "word")
        std::transform(cue.text.begin(), cue.text.end(), cue.text.begin(), [](unsigned char ch) { return std::tolower(ch); });
      lex.cues[*rule].push_back(std::move(cue));
    }
  }
  return lex;
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = from_json(nlohmann::json::parse(detail::kBuiltinLexicon));
  return lex;
}

std::vector<Token> context_window(const TokenStream& tokens, const std::vector<Span>& spans, int k) {
  std::vector<Token> out;
  for (const Token& t : tokens.tokens) {
    if (t.kind == TokenKind::Comment) continue;
    bool in = std::any_of(spans.begin(), spans.end(), [&](const Span& s) {
      return t.span.startLine >= s.startLine - k && t.span.startLine <= s.endLine + k;
    });
    if (in) out.push_back(t);
  }
  return out;
}

std::string window_text(const std::vector<Token>& window) {
  std::string out;
  int line = -1;
  for (const Token& t : window) {
    if (line != -1) out += t.span.startLine != line ? '\n' : ' ';
    out += t.lexeme;
    line = t.span.startLine;
  }
  return out;
}

namespace {

// Occurrences of `word` in `text` not flanked by letters. Digits and
// underscores separate words, so "api_key" holds both "api" and "key".
int word_hits(const std::string& text, const std::string& word) {
  std::string lower(text.size(), ' ');
  std::transform(text.begin(), text.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  int hits = 0;
  for (std::size_t p = lower.find(word); p != std::string::npos; p = lower.find(word, p + 1)) {
    bool left = p == 0 || !std::isalpha(static_cast<unsigned char>(lower[p - 1]));
    std::size_t e = p + word.size();
    bool right = e >= lower.size() || !std::isalpha(static_cast<unsigned char>(lower[e]));
    if (left && right) ++hits;
  }
  return hits;
}

}  // namespace

double lexical_score(const Lexicon& lexicon, Rule rule, const std::vector<Token>& window) {
  auto it = lexicon.cues.find(rule);
  if (it == lexicon.cues.end()) return 0.0;
  double score = 0;
  for (const Cue& cue : it->second) {
    int hits = 0;
    for (const Token& t : window) {
      if (cue.match == "token")
        hits += t.lexeme == cue.text ? 1 : 0;
      else
        hits += word_hits(t.lexeme, cue.text);
    }
    score += cue.weight * std::min(hits, cue.cap);
  }
  return std::min(1.0, score);
}

double LexicalScorer::score(const ScoreRequest& request) { return lexical_score(lexicon_, request.rule, request.window); }

// ---- external plugin ---------------------------------------------------------

ExternalScorer::ExternalScorer(std::string command, double timeoutSec)
    : command_(std::move(command)), timeoutSec_(timeoutSec) {}

ExternalScorer::~ExternalScorer() { stop(); }

void ExternalScorer::start() {
  int sv[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv) != 0) throw PluginMalformedReply("plugin: socketpair failed");
  pid_t pid = fork();
  if (pid < 0) {
    close(sv[0]);
    close(sv[1]);
    throw PluginMalformedReply("plugin: fork failed");
  }
  if (pid == 0) {
    setpgid(0, 0);  // own group, so a kill reaches whatever the shell spawned
    dup2(sv[1], STDIN_FILENO);
    dup2(sv[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(sv[1]);
  setpgid(pid, pid);
  pid_ = pid;
  in_ = out_ = sv[0];
  buffer_.clear();
}

void ExternalScorer::stop() {
  if (in_ >= 0) close(in_);
  in_ = out_ = -1;
  if (pid_ > 0) {
    kill(-pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }
  pid_ = -1;
}

double ExternalScorer::score(const ScoreRequest& request) {
  if (pid_ < 0) start();
  nlohmann::ordered_json req;
  req["id"] = request.id;
  req["rule"] = std::string(to_string(request.rule));
  req["window"] = window_text(request.window);
  auto spans = nlohmann::ordered_json::array();
  for (const Span& s : request.spans) spans.push_back(span_to_json(s));
  req["spans"] = spans;
  std::string line = req.dump() + "\n";
  for (std::size_t sent = 0; sent < line.size();) {
    ssize_t n = send(in_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
    if (n <= 0) {
      stop();
      throw PluginMalformedReply("plugin: could not write request");
    }
    sent += static_cast<std::size_t>(n);
  }

  auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeoutSec_);
  std::size_t nl;
  while ((nl = buffer_.find('\n')) == std::string::npos) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      stop();
      throw PluginTimeout("plugin: no reply within " + std::to_string(timeoutSec_) + " s");
    }
    pollfd p{out_, POLLIN, 0};
    int r = poll(&p, 1, static_cast<int>(left.count()));
    if (r < 0 && errno == EINTR) continue;
    if (r == 0) continue;
    char buf[4096];
    ssize_t n = read(out_, buf, sizeof buf);
    if (n <= 0) {
      stop();
      throw PluginMalformedReply("plugin: closed its output");
    }
    buffer_.append(buf, static_cast<std::size_t>(n));
  }
  std::string reply = buffer_.substr(0, nl);
  buffer_.erase(0, nl + 1);

  nlohmann::json j = nlohmann::json::parse(reply, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw PluginMalformedReply("plugin: reply is not a JSON object");
  if (!j.contains("id") || j["id"] != request.id) throw PluginMalformedReply("plugin: reply id mismatch");
  if (!j.contains("score") || !j["score"].is_number()) throw PluginMalformedReply("plugin: reply lacks a numeric score");
  double s = j["score"].get<double>();
  if (!(s >= 0.0 && s <= 1.0)) throw PluginMalformedReply("plugin: score outside [0,1]");
  return s;
}

// ---- fusion ----------------------------------------------------------------------

double fuse(double structural, double semantic, const RuleWeights& w) {
  return std::clamp(w.wStruct * structural + w.wSem * semantic, 0.0, 1.0);
}

RuleWeights effective_weights(const FusionWeights& w, Rule rule, ScorerKind scorer) {
  if (scorer == ScorerKind::None) return {1.0, 0.0};
  return w.for_rule(rule);
}

}  // namespace hybridlint
