#include "json_io.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>

namespace wcm::app {

namespace {

// Input iterator that publishes how many characters the parser has consumed.
struct CountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char* begin = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    ++p;
    *consumed = static_cast<std::size_t>(p - begin);
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p != b.p; }
};

std::string escapeToken(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

class LineRecorder : public nlohmann::json_sax<json> {
 public:
  LineRecorder(const std::string& text, const std::size_t& consumed, std::map<std::string, int>& lines)
      : text_(text), consumed_(consumed), lines_(lines) {}

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    const std::string ptr = here();
    lines_[ptr] = line();
    stack_.push_back({ptr, true, "", 0});
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    const std::string ptr = here();
    lines_[ptr] = line();
    stack_.push_back({ptr, false, "", 0});
    return true;
  }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    stack_.back().key = k;
    lines_[stack_.back().path + "/" + escapeToken(k)] = line();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) override {
    throw ValidationError(lineAt(position), std::string("JSON syntax error: ") + e.what());
  }

 private:
  struct Frame {
    std::string path;
    bool object;
    std::string key;
    std::size_t index;
  };

  std::string here() const {
    if (stack_.empty()) return "";
    const Frame& f = stack_.back();
    return f.path + "/" + (f.object ? escapeToken(f.key) : std::to_string(f.index));
  }
  void advance() {
    if (!stack_.empty() && !stack_.back().object) ++stack_.back().index;
  }
  bool value() {
    const std::string ptr = here();
    lines_[ptr] = line();
    advance();
    return true;
  }
  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }
  int line() const { return lineAt(consumed_); }
  int lineAt(std::size_t end) const {
    end = std::min(end, text_.size());
    while (end > 0 && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
  }

  const std::string& text_;
  const std::size_t& consumed_;
  std::map<std::string, int>& lines_;
  std::vector<Frame> stack_;
};

std::string describe(const json& v) {
  const std::string s = v.dump();
  return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

}  // namespace

Document::Document(const std::string& text) {
  std::size_t consumed = 0;
  LineRecorder recorder(text, consumed, lines_);
  CountingIterator first{text.data(), text.data(), &consumed}, last{text.data() + text.size(), text.data(), &consumed};
  json::sax_parse(first, last, &recorder);
  root_ = json::parse(text);
}

bool Document::has(const std::string& ptr) const { return root_.contains(json::json_pointer(ptr)); }

int Document::lineOf(const std::string& ptr) const {
  std::string p = ptr;
  while (true) {
    auto it = lines_.find(p);
    if (it != lines_.end()) return it->second;
    if (p.empty()) return 1;
    p = p.substr(0, p.rfind('/'));
  }
}

void Document::fail(const std::string& ptr, const std::string& message) const {
  throw ValidationError(lineOf(ptr), (ptr.empty() ? "/" : ptr) + ": " + message);
}

const json& Document::get(const std::string& ptr) const {
  if (!has(ptr)) fail(ptr, "missing required field");
  return root_.at(json::json_pointer(ptr));
}

Rational Document::rational(const std::string& ptr) const {
  const json& v = get(ptr);
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (!v.is_string()) fail(ptr, "expected a rational string such as \"-3/4\", got " + describe(v));
  try {
    return parseRational(v.get<std::string>());
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
}

std::vector<Rational> Document::rationals(const std::string& ptr) const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arraySize(ptr); ++i) out.push_back(rational(ptr + "/" + std::to_string(i)));
  return out;
}

long Document::integer(const std::string& ptr, long lo, long hi) const {
  const json& v = get(ptr);
  if (!v.is_number_integer()) fail(ptr, "expected an integer, got " + describe(v));
  const auto x = v.get<long long>();
  if (x < lo || x > hi) fail(ptr, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<long>(x);
}

std::uint64_t Document::unsigned64(const std::string& ptr) const {
  const json& v = get(ptr);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!s.empty() && s.size() <= 20 && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const Integer z(s);
      if (z <= std::numeric_limits<std::uint64_t>::max()) return z.convert_to<std::uint64_t>();
    }
  }
  fail(ptr, "expected an unsigned 64-bit integer, got " + describe(v));
}

bool Document::boolean(const std::string& ptr) const {
  const json& v = get(ptr);
  if (!v.is_boolean()) fail(ptr, "expected true or false, got " + describe(v));
  return v.get<bool>();
}

std::string Document::string(const std::string& ptr) const {
  const json& v = get(ptr);
  if (!v.is_string()) fail(ptr, "expected a string, got " + describe(v));
  return v.get<std::string>();
}

std::size_t Document::arraySize(const std::string& ptr) const {
  const json& v = get(ptr);
  if (!v.is_array()) fail(ptr, "expected an array, got " + describe(v));
  return v.size();
}

MatrixQ Document::matrix(const std::string& ptr) const {
  const std::size_t n = arraySize(ptr);
  if (n == 0) fail(ptr, "empty matrix");
  MatrixQ m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = ptr + "/" + std::to_string(i);
    if (arraySize(row) != n) fail(row, "matrix must be square (" + std::to_string(n) + " columns expected)");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rational(row + "/" + std::to_string(j));
  }
  return m;
}

exact::PolyQ Document::poly(const std::string& ptr) const {
  const exact::PolyQ f(rationals(ptr));
  if (f.isZero()) fail(ptr, "zero polynomial");
  return f;
}

void Document::onlyKeys(const std::string& ptr, const std::vector<std::string>& allowed) const {
  const json& v = get(ptr);
  if (!v.is_object()) fail(ptr, "expected an object, got " + describe(v));
  for (const auto& item : v.items())
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      fail(ptr + "/" + escapeToken(item.key()), "unknown field '" + item.key() + "'");
}

json toJson(const Rational& q) { return toString(q); }
json toJson(const Integer& z) { return z.str(); }
json toJson(const exact::Interval& iv) { return json::array({toString(iv.lo), toString(iv.hi)}); }

json toJson(const exact::PolyQ& f) {
  json out = json::array();
  for (int k = 0; k <= f.degree(); ++k) out.push_back(toString(f[k]));
  return out;
}

json toJson(const exact::AlgebraicNumber& a) {
  const exact::Box b = a.enclosure(24);
  return {{"minpoly", toJson(a.minpoly())}, {"index", a.index()}, {"box", {{"re", toJson(b.re)}, {"im", toJson(b.im)}}}};
}

}  // namespace wcm::app
