#include "motint/forms_io.hpp"

#include <cctype>

#include "motint/errors.hpp"

namespace motint {

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Integer integer() {
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t position() const { return offset_ + pos_; }
  [[noreturn]] void fail(const std::string& what) {
    skip_blanks();
    if (pos_ >= text_.size()) throw ParseError(what + " but found end of input", position());
    throw ParseError(what + " but found '" + std::string(1, text_[pos_]) + "'", position());
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

LinearForm parse_form_at(std::string_view text, std::size_t offset, unsigned n) {
  Lexer lex(text, offset);
  LinearForm form(n, 0);
  bool first = true;
  while (true) {
    int sign = 1;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    Integer c = 1;
    if (lex.at_digit()) {
      c = lex.integer();
      lex.accept('*');
    }
    if (!lex.accept('x') && !lex.accept('X')) lex.fail("expected a variable x<index>");
    const std::size_t index_pos = lex.position();
    if (!lex.at_digit()) lex.fail("expected a variable index");
    const Integer idx = lex.integer();
    if (idx < 1 || idx > n)
      throw ParseError("variable index " + idx.get_str() + " outside 1.." + std::to_string(n), index_pos);
    form[idx.get_ui() - 1] += sign * c;
    first = false;
    if (lex.at_end()) break;
  }
  if (is_zero_form(form)) throw DomainError("form '" + std::string(text) + "' is identically zero");
  return form;
}

}  // namespace

LinearForm parse_form(std::string_view text, unsigned n) { return parse_form_at(text, 0, n); }

std::vector<LinearForm> parse_form_list(std::string_view text, unsigned n) {
  std::vector<LinearForm> out;
  bool blank = true;
  for (char c : text) blank &= std::isspace(static_cast<unsigned char>(c)) != 0;
  if (blank) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_form_at(text.substr(start, end - start), start, n));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

FormProduct parse_forms(std::string_view text, unsigned n) {
  FormProduct fp{n, parse_form_list(text, n)};
  fp.validate();
  return fp;
}

std::string forms_to_string(const FormProduct& fp) {
  std::string out;
  for (const auto& f : fp.canonical().forms) out += (out.empty() ? "" : ", ") + form_to_string(f);
  return out;
}

IntegerPolynomial parse_univariate(std::string_view text) {
  Lexer lex(text, 0);
  IntegerPolynomial f;
  bool first = true;
  while (true) {
    int sign = 1;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    Integer c = 1;
    bool has_coeff = false;
    if (lex.at_digit()) {
      c = lex.integer();
      has_coeff = true;
      if (lex.accept('*') && lex.peek() != 'x' && lex.peek() != 'X') lex.fail("expected X after '*'");
    }
    unsigned long e = 0;
    if (lex.accept('x') || lex.accept('X')) {
      e = 1;
      if (lex.accept('^')) {
        const Integer exponent = lex.integer();
        if (exponent > 1000) throw ParseError("exponent too large", lex.position());
        e = exponent.get_ui();
      }
    } else if (!has_coeff) {
      lex.fail("expected a term");
    }
    if (f.size() <= e) f.resize(e + 1, 0);
    f[e] += sign * c;
    first = false;
    if (lex.at_end()) break;
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::string univariate_to_string(const IntegerPolynomial& f) {
  std::string out;
  for (std::size_t e = f.size(); e-- > 0;) {
    const Integer& c = f[e];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0 || mag != 1) out += mag.get_str() + (e ? "*" : "");
    if (e >= 1) out += "X";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace motint
