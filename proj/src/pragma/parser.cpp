#include "qutest/pragma/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qutest::pragma {

namespace {

constexpr std::string_view kPrefix = "//%";
constexpr std::string_view kAllOps = "<, <=, ==, >, >=, !=, ~=";

struct PragmaError {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(std::string_view code, int line, std::string message, std::string hint) {
  throw PragmaError{make_error(code, line, std::move(message), std::move(hint))};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest_key_hint(std::string_view key) {
  std::string best;
  std::size_t best_distance = std::string::npos;
  for (const auto& candidate : known_keys()) {
    const std::size_t d = edit_distance(key, candidate);
    if (d < best_distance) {
      best_distance = d;
      best = candidate;
    }
  }
  if (best_distance <= std::max<std::size_t>(3, key.size() / 3)) {
    return "did you mean '" + best + "'?";
  }
  std::string all;
  for (const auto& k : known_keys()) all += (all.empty() ? "" : ", ") + k;
  return "valid keys: " + all;
}

// Cursor over the payload that follows `key:`.
class Cursor {
 public:
  Cursor(std::string_view text, int line, std::string_view key)
      : text_(text), line_(line), key_(key) {}

  void ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= text_.size();
  }
  char peek() {
    ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, std::string_view hint) {
    if (!accept(c)) malformed("expected '" + std::string(1, c) + "'", std::string(hint));
  }
  std::string_view rest() {
    ws();
    return text_.substr(pos_);
  }

  [[noreturn]] void malformed(std::string message, std::string hint) {
    fail(codes::MalformedValue, line_, "malformed '" + std::string(key_) + "': " + message,
         std::move(hint));
  }

  std::uint64_t uint_value(std::string_view hint) {
    ws();
    std::string digits;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      if (text_[pos_] != '_') digits.push_back(text_[pos_]);
      ++pos_;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      malformed("expected a non-negative integer", std::string(hint));
    }
    return value;
  }

  double real_value(std::string_view hint) {
    ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const char* start = begin;
    if (start < end && *start == '+') ++start;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(start, end, value);
    if (ec != std::errc() || !std::isfinite(value) || ptr == start) {
      malformed("expected a number", std::string(hint));
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string identifier(std::string_view hint) {
    ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      malformed("expected an identifier", std::string(hint));
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted(std::string_view hint) {
    if (!accept('"')) malformed("expected a double-quoted string", std::string(hint));
    std::size_t close = text_.find('"', pos_);
    if (close == std::string_view::npos) malformed("unterminated string", std::string(hint));
    std::string value(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return value;
  }

  // Returns the raw operator token, validated against the full operator set.
  Op op(std::string_view hint_ops) {
    ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view("<>=!~").find(text_[pos_]) != std::string_view::npos) {
      ++pos_;
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    static const std::map<std::string_view, Op> kOps = {
        {"<", Op::Less},        {"<=", Op::LessEqual},    {"==", Op::Equal}, {">", Op::Greater},
        {">=", Op::GreaterEqual}, {"!=", Op::NotEqual}, {"~=", Op::Approx},
    };
    if (tok.empty()) {
      malformed("expected a comparison operator", "use one of: " + std::string(hint_ops));
    }
    auto it = kOps.find(tok);
    if (it == kOps.end()) {
      fail(codes::InvalidOperator, line_, "invalid operator '" + std::string(tok) + "'",
           "valid operators: " + std::string(hint_ops));
    }
    return it->second;
  }

  // `[i, j, ...]` of non-negative integers.
  std::vector<int> index_list(std::string_view hint) {
    expect('[', hint);
    std::vector<int> out;
    do {
      out.push_back(static_cast<int>(uint_value(hint)));
    } while (accept(','));
    expect(']', hint);
    return out;
  }

  RegisterIndex register_index(std::string_view hint) {
    RegisterIndex r;
    r.reg = identifier(hint);
    expect('[', hint);
    r.index = static_cast<int>(uint_value(hint));
    expect(']', hint);
    return r;
  }

  // JSON object literal `{"bits": p, ...}`.
  Distribution distribution() {
    const std::string hint = R"(write the reference as {"00": 0.5, "11": 0.5})";
    if (peek() != '{') malformed("expected a reference distribution", hint);
    std::size_t depth = 0;
    std::size_t i = pos_;
    bool in_string = false;
    for (; i < text_.size(); ++i) {
      const char c = text_[i];
      if (in_string) {
        if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) break;
      }
    }
    if (i >= text_.size()) malformed("unterminated distribution literal", hint);
    const std::string_view literal = text_.substr(pos_, i + 1 - pos_);
    pos_ = i + 1;

    nlohmann::json parsed = nlohmann::json::parse(literal, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      malformed("distribution is not a valid object literal", hint);
    }
    if (parsed.empty()) malformed("distribution is empty", hint);
    Distribution dist;
    std::size_t width = 0;
    for (const auto& [key, value] : parsed.items()) {
      if (!is_bitstring(key)) {
        malformed("key \"" + key + "\" is not a bitstring", "keys use only '0' and '1'");
      }
      if (width != 0 && key.size() != width) {
        malformed("bitstring keys have different lengths", "every key must have the same length");
      }
      width = key.size();
      if (!value.is_number()) malformed("probability of \"" + key + "\" is not a number", hint);
      const double p = value.get<double>();
      if (!(p >= 0.0 && p <= 1.0)) {
        malformed("probability of \"" + key + "\" is outside [0, 1]", hint);
      }
      dist.entries[key] = p;
    }
    const double total = dist.total();
    if (std::abs(total - 1.0) > 1e-6) {
      std::ostringstream msg;
      msg << "reference distribution sums to " << total;
      fail(codes::DistributionSum, line_, msg.str(), "probabilities must sum to 1");
    }
    return dist;
  }

  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  std::string_view key_;
};

const std::vector<Op> kStandardOps = {Op::Less,    Op::LessEqual,    Op::Equal,
                                      Op::Greater, Op::GreaterEqual, Op::NotEqual};
const std::vector<Op> kAllOpList = {Op::Less,         Op::LessEqual, Op::Equal, Op::Greater,
                                    Op::GreaterEqual, Op::NotEqual,  Op::Approx};
const std::vector<Op> kApproxOnly = {Op::Approx};

ComparisonSpec comparison(Cursor& cur, AssertionKind kind, const std::vector<Op>& allowed) {
  std::string allowed_text;
  for (Op op : allowed) allowed_text += (allowed_text.empty() ? "" : ", ") + std::string(to_string(op));
  ComparisonSpec spec;
  spec.op = cur.op(kAllOps);
  if (std::find(allowed.begin(), allowed.end(), spec.op) == allowed.end()) {
    fail(codes::InvalidOperator, cur.line(),
         std::string("operator '") + to_string(spec.op) + "' is not valid for assert." +
             to_string(kind),
         "valid operators: " + allowed_text);
  }
  spec.threshold = cur.real_value("expected the comparison value");
  if (spec.op == Op::Approx) {
    const std::string hint = "approximate equality needs a tolerance, e.g. '~= 0.5 atol=0.05'";
    cur.ws();
    std::string_view rest = cur.rest();
    if (rest.rfind("atol", 0) != 0) cur.malformed("'~=' requires atol=<tolerance>", hint);
    cur.identifier(hint);
    cur.expect('=', hint);
    const double atol = cur.real_value(hint);
    if (!(atol > 0.0)) cur.malformed("atol must be positive", hint);
    spec.atol = atol;
  }
  return spec;
}

std::string checked_bits(Cursor& cur) {
  std::string bits = cur.quoted(R"(quote the bitstring, e.g. "01")");
  if (!is_bitstring(bits)) cur.malformed("\"" + bits + "\" is not a bitstring", "use only '0' and '1'");
  return bits;
}

AssertionPayload parse_payload(AssertionKind kind, Cursor& cur) {
  using K = AssertionKind;
  switch (kind) {
    case K::Output:
    case K::MostFrequent: {
      Op op = cur.op(kAllOps);
      if (op != Op::Equal) {
        fail(codes::InvalidOperator, cur.line(),
             std::string("operator '") + to_string(op) + "' is not valid for assert." +
                 to_string(kind),
             "valid operators: ==");
      }
      return BitsPayload{checked_bits(cur)};
    }
    case K::Tvd:
    case K::Hellinger:
    case K::Kl:
    case K::Chi2: {
      DistancePayload p;
      p.reference = cur.distribution();
      p.comparison = comparison(cur, kind, kStandardOps);
      return p;
    }
    case K::Marginal: {
      const std::string hint = "write e.g. 'q[0] == 1 ~= 0.5 atol=0.05'";
      MarginalPayload p;
      p.qubit = cur.register_index(hint);
      if (cur.op(kAllOps) != Op::Equal) cur.malformed("expected '==' after the qubit", hint);
      const auto value = cur.uint_value(hint);
      if (value > 1) cur.malformed("qubit value must be 0 or 1", hint);
      p.value = static_cast<int>(value);
      p.comparison = comparison(cur, kind, kApproxOnly);
      return p;
    }
    case K::Observable: {
      const std::string hint = "write e.g. 'Z[0,1] ~= 1.0 atol=0.05'";
      ObservablePayload p;
      if (cur.peek() != 'Z') cur.malformed("only Pauli-Z observables are supported", hint);
      if (cur.identifier(hint) != "Z") cur.malformed("expected 'Z[...]'", hint);
      p.qubits = cur.index_list(hint);
      std::set<int> unique(p.qubits.begin(), p.qubits.end());
      if (unique.size() != p.qubits.size()) cur.malformed("qubit listed twice", hint);
      p.comparison = comparison(cur, kind, kAllOpList);
      return p;
    }
    case K::Entropy:
    case K::Fidelity:
      return ValuePayload{comparison(cur, kind, kAllOpList)};
    case K::Correlation: {
      const std::string hint = "write e.g. 'm[0], m[1] ~= 1.0 atol=0.05'";
      CorrelationPayload p;
      p.first = cur.register_index(hint);
      cur.expect(',', hint);
      p.second = cur.register_index(hint);
      if (p.first == p.second) cur.malformed("correlation needs two different bits", hint);
      p.comparison = comparison(cur, kind, kApproxOnly);
      return p;
    }
    case K::Probability: {
      ProbabilityPayload p;
      p.bits = checked_bits(cur);
      p.comparison = comparison(cur, kind, kApproxOnly);
      return p;
    }
    case K::Entangled: {
      const std::string hint = "write e.g. '[0]' or '[0, 1]'";
      PartitionPayload p;
      p.qubits = cur.index_list(hint);
      std::set<int> unique(p.qubits.begin(), p.qubits.end());
      if (unique.size() != p.qubits.size()) cur.malformed("qubit listed twice", hint);
      return p;
    }
    case K::GateSet: {
      const std::string hint = "write e.g. '{h, cx, measure}'";
      GateSetPayload p;
      cur.expect('{', hint);
      if (!cur.accept('}')) {
        do {
          p.gates.insert(cur.identifier(hint));
        } while (cur.accept(','));
        cur.expect('}', hint);
      }
      return p;
    }
    case K::Depth: {
      Op op = cur.op(kAllOps);
      if (op != Op::LessEqual) {
        fail(codes::InvalidOperator, cur.line(),
             std::string("operator '") + to_string(op) + "' is not valid for assert.depth",
             "valid operators: <=");
      }
      const auto bound = cur.uint_value("write e.g. '<= 10'");
      return DepthPayload{static_cast<int>(bound)};
    }
  }
  cur.malformed("unhandled assertion kind", "");
}

ConfigDirective parse_config(ConfigKey key, Cursor& cur) {
  ConfigDirective d;
  d.key = key;
  d.line = cur.line();
  switch (key) {
    case ConfigKey::Shots:
      d.shots = cur.uint_value("write e.g. 'shots: 1024'");
      if (d.shots == 0) cur.malformed("shots must be at least 1", "write e.g. 'shots: 1024'");
      break;
    case ConfigKey::Seed:
      if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        if (cur.identifier("") != "random") {
          cur.malformed("expected an integer or 'random'", "write e.g. 'seed: 42'");
        }
      } else {
        d.seed = cur.uint_value("write e.g. 'seed: 42' or 'seed: random'");
      }
      break;
    case ConfigKey::Backend: {
      const std::string hint = "valid backends: ideal, noisy, hardware";
      const std::string name = cur.identifier(hint);
      if (name == "ideal") {
        d.backend = sim::Backend::Ideal;
      } else if (name == "noisy") {
        d.backend = sim::Backend::Noisy;
      } else if (name == "hardware") {
        d.backend = sim::Backend::Hardware;
      } else {
        cur.malformed("unknown backend '" + name + "'", hint);
      }
      break;
    }
    case ConfigKey::Runtime:
      d.runtime = cur.identifier("write e.g. 'runtime: native'");
      break;
    case ConfigKey::RuntimeVersion: {
      const std::string hint = R"(write e.g. 'runtime_version: "1.0.2, 1.1.0"')";
      const std::string list = cur.quoted(hint);
      std::string_view rest = list;
      while (true) {
        const std::size_t comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        const bool ok = !item.empty() && std::all_of(item.begin(), item.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
                 c == '+' || c == '_';
        });
        if (!ok) cur.malformed("invalid version '" + std::string(item) + "'", hint);
        d.versions.emplace_back(item);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      std::set<std::string> unique(d.versions.begin(), d.versions.end());
      if (unique.size() != d.versions.size()) cur.malformed("version listed twice", hint);
      break;
    }
  }
  return d;
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {"shots", "seed", "backend", "runtime", "runtime_version"};
    for (int i = 0; i <= static_cast<int>(AssertionKind::Depth); ++i) {
      k.push_back(std::string("assert.") + to_string(static_cast<AssertionKind>(i)));
    }
    return k;
  }();
  return keys;
}

ParsedPragma parse_pragma_line(std::string_view raw, int line) {
  try {
    std::string_view text = trim(raw);
    if (text.rfind(kPrefix, 0) != 0) {
      fail(codes::MalformedValue, line, "pragma lines must start with '//%'", "");
    }
    text = trim(text.substr(kPrefix.size()));
    const std::size_t colon = text.find(':');
    std::string_view key = trim(text.substr(0, colon));
    // A key is a dotted identifier; anything else before ':' is not a key.
    std::size_t key_end = 0;
    while (key_end < key.size() &&
           (std::isalnum(static_cast<unsigned char>(key[key_end])) || key[key_end] == '_' ||
            key[key_end] == '.')) {
      ++key_end;
    }
    const std::string_view bare_key = key.substr(0, key_end);
    if (text.empty()) {
      fail(codes::MalformedValue, line, "empty pragma", "write 'key: value', e.g. 'shots: 1024'");
    }
    const auto& keys = known_keys();
    const bool known = std::find(keys.begin(), keys.end(), bare_key) != keys.end();
    if (!known || key_end != key.size()) {
      fail(codes::UnknownKey, line, "unknown directive '" + std::string(bare_key.empty() ? key : bare_key) + "'",
           nearest_key_hint(bare_key.empty() ? key : bare_key));
    }
    if (colon == std::string_view::npos) {
      fail(codes::MalformedValue, line, "expected ':' after '" + std::string(key) + "'",
           "write '" + std::string(key) + ": <value>'");
    }
    const std::string_view payload = text.substr(colon + 1);
    Cursor cur(payload, line, key);

    ParsedPragma result;
    if (key.rfind("assert.", 0) == 0) {
      AssertionDirective d;
      d.kind = *assertion_kind_from(key.substr(7));
      d.line = line;
      d.text = std::string(text);
      d.payload = parse_payload(d.kind, cur);
      result = std::move(d);
    } else {
      static const std::map<std::string_view, ConfigKey> kConfig = {
          {"shots", ConfigKey::Shots},
          {"seed", ConfigKey::Seed},
          {"backend", ConfigKey::Backend},
          {"runtime", ConfigKey::Runtime},
          {"runtime_version", ConfigKey::RuntimeVersion},
      };
      result = parse_config(kConfig.at(key), cur);
    }
    if (!cur.at_end()) {
      cur.malformed("unexpected trailing text '" + std::string(cur.rest()) + "'",
                    "one directive per line");
    }
    return result;
  } catch (const PragmaError& e) {
    return e.diagnostic;
  }
}

TestDirectives parse_test_directives(const qasm::SubroutineDef& test) {
  TestDirectives out;
  std::map<ConfigKey, int> seen;
  for (const auto& p : test.pragma_lines) {
    auto parsed = parse_pragma_line(p.text, p.line);
    if (auto* c = std::get_if<ConfigDirective>(&parsed)) {
      auto [it, inserted] = seen.emplace(c->key, c->line);
      if (!inserted) {
        out.diagnostics.push_back(make_error(
            codes::DuplicateConfig, c->line,
            std::string("'") + to_string(c->key) + "' is already set on line " +
                std::to_string(it->second),
            "keep a single '" + std::string(to_string(c->key)) + "' directive per test"));
        continue;
      }
      out.config.push_back(std::move(*c));
    } else if (auto* a = std::get_if<AssertionDirective>(&parsed)) {
      out.assertions.push_back(std::move(*a));
    } else {
      out.diagnostics.push_back(std::get<Diagnostic>(std::move(parsed)));
    }
  }
  return out;
}

}  // namespace qutest::pragma
