// Text, LaTeX and JSON forms of Lie elements.

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "hhops/errors.hpp"
#include "hhops/lie.hpp"

namespace hhops {

std::string to_string(const Letter& letter) {
  std::string out;
  const auto& w = letter.word.elements();
  for (auto it = w.rbegin(); it != w.rend(); ++it) out += "s" + std::to_string(*it) + " ";
  return out + letter.generator.name;
}

std::string to_string(const LieMonomial& m) {
  if (m.is_leaf()) return to_string(m.letter());
  return "[" + to_string(m.left()) + ", " + to_string(m.right()) + "]";
}

std::string to_string(const LieElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational magnitude = abs(c);
    if (first) out += (c < 0) ? "-" : "";
    else out += (c < 0) ? " - " : " + ";
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += to_string(m);
    first = false;
  }
  return out;
}

namespace {

std::string latex_name(const std::string& name) {
  if (name.size() > 1 && name[0] == 'i') {
    std::string sub = name.substr(name[1] == '_' ? 2 : 1);
    for (auto& ch : sub)
      if (ch == '_') ch = ',';
    return "\\iota_{" + sub + "}";
  }
  return name;
}

std::string latex_monomial(const LieMonomial& m) {
  if (m.is_leaf()) {
    std::string out;
    const auto& w = m.letter().word.elements();
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += "s_{" + std::to_string(*it) + "}";
    return out + latex_name(m.letter().generator.name);
  }
  return "[" + latex_monomial(m.left()) + ", " + latex_monomial(m.right()) + "]";
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string to_latex(const LieElement& e) {
  if (e.is_zero()) return "& 0\n";
  std::ostringstream os;
  for (const auto& [m, c] : e.terms()) {
    Rational magnitude = abs(c);
    os << "& " << (c < 0 ? "-" : "+") << " ";
    if (magnitude != 1) os << latex_rational(magnitude) << "\\,";
    os << latex_monomial(m) << " \\\\\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const GeneratorTable& table, BracketConvention conv)
      : text_(text), table_(table), conv_(conv) {}

  LieElement parse_all() {
    LieElement e = element();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  std::string integer() {
    skip();
    std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    if (start == pos_) fail("expected integer");
    return text_.substr(start, pos_ - start);
  }

  LieElement element() {
    skip();
    // Lone "0" is the zero element.
    if (peek('0')) {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']') return LieElement(conv_);
      pos_ = save;
    }
    LieElement out(conv_);
    Rational sign = 1;
    if (peek('+') || peek('-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    out += sign * term();
    while (peek('+') || peek('-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      out += sign * term();
    }
    return out;
  }

  LieElement term() {
    skip();
    Rational coeff = 1;
    if (digit_at(pos_)) {
      std::string num = integer();
      if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        std::string den = integer();
        if (Integer(den) == 0) throw ParseError("zero denominator", at);
        num += "/" + den;
      }
      coeff = parse_rational(num);
      expect('*');
    }
    return coeff * monomial();
  }

  LieElement monomial() {
    skip();
    if (peek('[')) {
      ++pos_;
      std::size_t at = pos_;
      LieElement a = element();
      expect(',');
      LieElement b = element();
      expect(']');
      try {
        a.homogeneous_degree();
        b.homogeneous_degree();
      } catch (const MalformedElement&) {
        throw MalformedElement("bracket of inhomogeneous element (non-additive degree) at offset " +
                               std::to_string(at));
      }
      return bracket_raw(a, b);
    }
    std::vector<std::pair<int, std::size_t>> degeneracies;
    while (true) {
      skip();
      if (pos_ + 1 < text_.size() && text_[pos_] == 's' && digit_at(pos_ + 1)) {
        std::size_t at = pos_;
        ++pos_;
        degeneracies.emplace_back(std::stoi(integer()), at);
      } else {
        break;
      }
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected generator name");
    std::string name = text_.substr(start, pos_ - start);
    auto it = table_.find(name);
    if (it == table_.end()) throw UnboundGenerator("unknown generator '" + name + "' at offset " + std::to_string(start));
    Letter letter{it->second, {}};
    // "s_a s_b x" applies s_b first.
    for (auto d = degeneracies.rbegin(); d != degeneracies.rend(); ++d) {
      if (d->first > letter.level()) throw ParseError("degeneracy index out of range", d->second);
      letter.word = compose_degeneracy(d->first, letter.word);
    }
    return LieElement::of(letter, 1, conv_);
  }

  const std::string& text_;
  const GeneratorTable& table_;
  BracketConvention conv_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_element(const std::string& text, const GeneratorTable& generators,
                         BracketConvention convention) {
  return Parser(text, generators, convention).parse_all();
}

std::string to_term_list_json(const LieElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"coeff", to_string(c)}, {"monomial", to_string(m)}, {"degree", m.degree()}});
  return terms.dump();
}

LieElement parse_term_list_json(const std::string& json, const GeneratorTable& generators,
                                BracketConvention convention) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), err.byte);
  }
  if (!doc.is_array()) throw ParseError("term list must be a JSON array", 0);
  LieElement out(convention);
  for (const auto& t : doc) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial") || !t.contains("degree"))
      throw ParseError("term needs coeff, monomial and degree", 0);
    LieElement m = parse_element(t["monomial"].get<std::string>(), generators, convention);
    if (m.size() != 1 || m.terms().begin()->second != 1)
      throw ParseError("term monomial must be a single bracket monomial", 0);
    const LieMonomial& mono = m.terms().begin()->first;
    if (t["degree"].get<int>() != mono.degree())
      throw MalformedElement("declared degree " + std::to_string(t["degree"].get<int>()) +
                             " does not match " + to_string(mono));
    out.add_term(mono, parse_rational(t["coeff"].get<std::string>()));
  }
  return out;
}

}  // namespace hhops
