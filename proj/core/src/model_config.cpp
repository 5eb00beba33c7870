#include "lroc/model_config.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lroc/error.hpp"

namespace lroc {

namespace {

// A parsed value: a scalar token, or a list of values.
struct Value {
  std::string scalar;
  std::vector<Value> items;
  bool is_list = false;
  int line = 0;
};

class ValueParser {
 public:
  ValueParser(std::string_view text, int line) : text_(text), line_(line) {}

  Value parse() {
    Value v = parse_value();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after value");
    return v;
  }

 private:
  Value parse_value() {
    skip_space();
    if (pos_ >= text_.size()) fail("missing value");
    Value v;
    v.line = line_;
    if (text_[pos_] == '[') {
      v.is_list = true;
      ++pos_;
      skip_space();
      if (peek() == ']') {
        ++pos_;
        return v;
      }
      while (true) {
        v.items.push_back(parse_value());
        skip_space();
        if (peek() == ',') {
          ++pos_;
        } else if (peek() == ']') {
          ++pos_;
          return v;
        } else {
          fail("expected ',' or ']'");
        }
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("empty value");
    v.scalar = std::string(text_.substr(start, pos_ - start));
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("model config line " + std::to_string(line_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Entries {
 public:
  void add(const std::string& key, Value v, int line) {
    if (!values_.emplace(key, std::move(v)).second)
      throw DataError("model config line " + std::to_string(line) + ": duplicate key '" + key + "'");
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const Value& get(const std::string& key) {
    used_.insert(key);
    auto it = values_.find(key);
    if (it == values_.end()) throw DataError("model config: missing key '" + key + "'");
    return it->second;
  }

  std::string word(const std::string& key) {
    const Value& v = get(key);
    if (v.is_list) fail(v, key, "expected a single word");
    return v.scalar;
  }

  Rational number(const std::string& key) { return to_rational(get(key), key); }

  std::vector<Rational> vector(const std::string& key) {
    const Value& v = get(key);
    if (!v.is_list) fail(v, key, "expected a vector [a, b, ...]");
    std::vector<Rational> out;
    for (const auto& item : v.items) out.push_back(to_rational(item, key));
    return out;
  }

  std::vector<std::string> words(const std::string& key) {
    const Value& v = get(key);
    if (!v.is_list) fail(v, key, "expected a list [a, b, ...]");
    std::vector<std::string> out;
    for (const auto& item : v.items) {
      if (item.is_list) fail(item, key, "nested list where a word was expected");
      out.push_back(item.scalar);
    }
    return out;
  }

  Eigen::VectorXd real_vector(const std::string& key) {
    const auto xs = vector(key);
    Eigen::VectorXd out(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_double(xs[i]);
    return out;
  }

  Eigen::MatrixXd matrix(const std::string& key) {
    const Value& v = get(key);
    if (!v.is_list || v.items.empty()) fail(v, key, "expected a matrix [[a, b], [c, d]]");
    const std::size_t rows = v.items.size();
    const std::size_t cols = v.items.front().items.size();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      const Value& row = v.items[i];
      if (!row.is_list || row.items.size() != cols) fail(v, key, "matrix rows must be lists of equal length");
      for (std::size_t j = 0; j < cols; ++j)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(to_rational(row.items[j], key));
    }
    return out;
  }

  void reject_unused() const {
    for (const auto& [key, v] : values_)
      if (!used_.count(key))
        throw DataError("model config line " + std::to_string(v.line) + ": unknown key '" + key + "'");
  }

 private:
  static Rational to_rational(const Value& v, const std::string& key) {
    if (v.is_list) fail(v, key, "expected a number");
    try {
      return parse_rational(v.scalar);
    } catch (const std::exception&) {
      fail(v, key, "'" + v.scalar + "' is not a number");
    }
  }

  [[noreturn]] static void fail(const Value& v, const std::string& key, const std::string& what) {
    throw DataError("model config line " + std::to_string(v.line) + ": " + key + ": " + what);
  }

  std::map<std::string, Value> values_;
  std::set<std::string> used_;
};

template <class T>
T unsigned_integer(const Rational& r, const std::string& key) {
  if (denominator(r) != 1 || r < 0) throw DataError("model config: " + key + " must be a nonnegative integer");
  return numerator(r).convert_to<T>();
}

ModelSpec build_model(Entries& e) {
  const std::string kind = e.word("model");
  try {
    if (kind == "piecewise")
      return PiecewiseConstantPair(e.vector("breakpoints"), e.vector("density_minus"), e.vector("density_plus"));
    if (kind == "table")
      return FiniteTablePair(e.words("labels"), e.vector("counts_minus"), e.vector("counts_plus"));
    if (kind == "gaussian")
      return GaussianPair(e.real_vector("mean_minus"), e.matrix("cov_minus"), e.real_vector("mean_plus"),
                          e.matrix("cov_plus"));
    if (kind == "polya-poisson") {
      const Rational failures = e.number("failures");
      return PointProcessPair(to_double(e.number("rate")), unsigned_integer<int>(failures, "failures"));
    }
  } catch (const std::invalid_argument& err) {
    throw DataError(std::string("model config: ") + err.what());
  }
  throw DataError("model config: unknown model '" + kind + "'");
}

}  // namespace

ModelConfig parse_model_config(std::istream& in) {
  Entries entries;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw DataError("model config line " + std::to_string(line) + ": expected 'key = value'");
    const std::string key(trim(text.substr(0, eq)));
    if (key.empty()) throw DataError("model config line " + std::to_string(line) + ": empty key");
    entries.add(key, ValueParser(text.substr(eq + 1), line).parse(), line);
  }

  ModelConfig config{build_model(entries), std::nullopt, std::nullopt};
  if (entries.has("replications"))
    config.replications = unsigned_integer<std::size_t>(entries.number("replications"), "replications");
  if (entries.has("seed")) config.seed = unsigned_integer<std::uint64_t>(entries.number("seed"), "seed");
  entries.reject_unused();
  return config;
}

ModelConfig parse_model_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_model_config(in);
}

}  // namespace lroc
