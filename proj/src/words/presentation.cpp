#include "whlab/words/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "whlab/core/errors.hpp"

namespace whlab {

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  return std::nullopt;
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (auto const& g : generators)
    if (!seen.insert(g).second) throw DomainError("duplicate generator " + g);
  seen.clear();
  for (auto const& r : relators) {
    if (!seen.insert(r.label).second) throw DomainError("duplicate relator label " + r.label);
    if (r.word.generator_bound() > generators.size())
      throw DomainError("relator " + r.label + " uses an unknown generator index");
  }
  if (truncation < 1) throw DomainError("truncation must be at least 1");
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, std::size_t offset, Presentation const& p)
      : text_(text), line_(line), offset_(offset), p_(p) {}

  [[noreturn]] void fail(std::string const& msg, std::size_t pos) const {
    throw ParseError(msg, line_, offset_ + pos + 1);
  }
  [[noreturn]] void fail(std::string const& msg) const { fail(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected a name");
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long value = 0;
    char const* first = text_.data() + start;
    if (start < text_.size() && text_[start] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("expected an integer", start);
    return value;
  }

  // word ::= term ('*'? term)*
  GroupWord word() {
    GroupWord w = term();
    while (true) {
      if (peek('*')) {
        ++pos_;
        w = w * term();
      } else if (starts_term()) {
        w = w * term();
      } else {
        return w;
      }
    }
  }

  std::size_t pos() const { return pos_; }

 private:
  bool starts_term() {
    skip_space();
    return pos_ < text_.size() &&
           (is_name_start(text_[pos_]) || text_[pos_] == '[' || text_[pos_] == '1');
  }

  GroupWord term() {
    skip_space();
    GroupWord base;
    if (peek('[')) {
      ++pos_;
      GroupWord u = word();
      expect(',');
      GroupWord v = word();
      expect(']');
      base = commutator(u, v);
    } else if (peek('1')) {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("unexpected number", pos_ - 1);
      return GroupWord();
    } else {
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected a generator or '['");
      std::string n = name();
      auto idx = p_.generator_index(n);
      if (!idx) fail("undeclared generator " + n, start);
      base = GroupWord::generator(*idx);
    }
    if (peek('^')) {
      ++pos_;
      long e = integer();
      GroupWord out;
      GroupWord b = e < 0 ? base.inverse() : base;
      for (long i = 0; i < std::labs(e); ++i) out = out * b;
      return out;
    }
    return base;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  Presentation const& p_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false, have_field = false, have_trunc = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key:'", line_no, first + 1);
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    std::size_t body_offset = colon + 1;
    LineParser lp(line.substr(body_offset), line_no, body_offset, p);

    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", line_no, first + 1);
      have_gens = true;
      while (!lp.at_end()) {
        std::size_t at = lp.pos();
        std::string n = lp.name();
        if (p.generator_index(n)) lp.fail("duplicate generator " + n, at);
        p.generators.push_back(n);
      }
    } else if (key == "rels") {
      if (!have_gens) throw ParseError("rels before gens", line_no, first + 1);
      while (!lp.at_end()) {
        std::size_t at = lp.pos();
        std::string label = lp.name();
        for (auto const& r : p.relators)
          if (r.label == label) lp.fail("duplicate relator label " + label, at);
        lp.expect('=');
        GroupWord w = lp.word();
        p.relators.push_back({label, w});
        if (lp.at_end()) break;
        lp.expect(';');
      }
    } else if (key == "field") {
      if (have_field) throw ParseError("duplicate field line", line_no, first + 1);
      have_field = true;
      std::string_view body = line.substr(body_offset);
      std::size_t a = body.find_first_not_of(" \t");
      std::size_t b = body.find_last_not_of(" \t");
      if (a == std::string_view::npos) lp.fail("expected a field");
      try {
        p.field = Field::parse(body.substr(a, b - a + 1));
      } catch (DomainError const& e) {
        throw ParseError(e.what(), line_no, body_offset + a + 1);
      }
    } else if (key == "trunc") {
      if (have_trunc) throw ParseError("duplicate trunc line", line_no, first + 1);
      have_trunc = true;
      std::size_t at = lp.pos();
      long n = lp.integer();
      if (n < 1) lp.fail("truncation must be at least 1", at);
      if (!lp.at_end()) lp.fail("unexpected text after truncation");
      p.truncation = static_cast<std::size_t>(n);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, first + 1);
    }
  }
  if (!have_gens) throw ParseError("missing gens line", line_no, 0);
  return p;
}

std::string render_presentation(Presentation const& p) {
  std::ostringstream os;
  os << "gens:";
  for (auto const& g : p.generators) os << ' ' << g;
  os << '\n';
  if (!p.relators.empty()) {
    os << "rels:";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      os << (i ? " ; " : " ") << p.relators[i].label << " = " << p.relators[i].word.str(p.generators);
    os << '\n';
  }
  os << "field: " << p.field.name() << '\n';
  os << "trunc: " << p.truncation << '\n';
  return os.str();
}

Presentation load_presentation(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Presentation subpresentation(Presentation const& p, std::vector<std::string> const& labels) {
  for (auto const& l : labels) {
    bool found = false;
    for (auto const& r : p.relators) found = found || r.label == l;
    if (!found) throw DomainError("unknown relator label " + l);
  }
  Presentation out = p;
  out.relators.clear();
  for (auto const& r : p.relators)
    for (auto const& l : labels)
      if (r.label == l) {
        out.relators.push_back(r);
        break;
      }
  return out;
}

}  // namespace whlab
