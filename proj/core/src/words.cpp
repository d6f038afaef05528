#include "brt/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace brt {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ':';
  });
}

bool generator_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view da = a.substr(i, ie - i), db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const auto& s : syllables_) {
    if (!is_valid_generator_name(s.generator))
      throw PresentationError("invalid generator name '" + s.generator + "'");
  }
}

Word Word::generator(std::string name, Integer exponent) {
  if (exponent == 0) return Word{};
  return Word({Syllable{std::move(name), std::move(exponent)}});
}

Integer Word::letter_length() const {
  Integer total = 0;
  for (const auto& s : syllables_) total += abs(s.exponent);
  return total;
}

Integer Word::exponent_sum(std::string_view generator) const {
  Integer total = 0;
  for (const auto& s : syllables_)
    if (s.generator == generator) total += s.exponent;
  return total;
}

std::set<std::string> Word::generators() const {
  std::set<std::string> out;
  for (const auto& s : syllables_) out.insert(s.generator);
  return out;
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (syllables_[i].exponent == 0) return false;
    if (i > 0 && syllables_[i].generator == syllables_[i - 1].generator) return false;
  }
  return true;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.push_back(Syllable{it->generator, -it->exponent});
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  const unsigned long count = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL
                                    : static_cast<unsigned long>(k);
  Word out;
  out.syllables_.reserve(base.syllables_.size() * count);
  for (unsigned long i = 0; i < count; ++i)
    out.syllables_.insert(out.syllables_.end(), base.syllables_.begin(), base.syllables_.end());
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out;
  out.syllables_.reserve(a.syllables_.size() + b.syllables_.size());
  out.syllables_ = a.syllables_;
  out.syllables_.insert(out.syllables_.end(), b.syllables_.begin(), b.syllables_.end());
  return out;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) {
      out += '^';
      out += s.exponent.get_str();
    }
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Syllable> stack;
  stack.reserve(w.syllables().size());
  for (const auto& s : w.syllables()) {
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word substitute(const Word& w, const Substitution& map) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    auto it = map.find(s.generator);
    if (it == map.end())
      throw PresentationError("substitute: generator '" + s.generator + "' is not mapped");
    const Word& image = it->second;
    if (image.empty()) continue;
    if (!s.exponent.fits_slong_p())
      throw PresentationError("substitute: exponent of '" + s.generator + "' too large");
    const long e = s.exponent.get_si();
    if (image.syllable_count() == 1) {
      const auto& only = image.syllables().front();
      out.push_back(Syllable{only.generator, only.exponent * e});
      continue;
    }
    const Word block = image.power(e);
    out.insert(out.end(), block.syllables().begin(), block.syllables().end());
  }
  return free_reduce(Word(std::move(out)));
}

// ---------------------------------------------------------------- parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), column0_(column0) {}

  Word parse_all() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (pos_ == text_.size()) return Word{};
      pos_ = save;
    }
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column0_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  Word parse_sequence() {
    std::vector<Syllable> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      Word factor = parse_factor();
      out.insert(out.end(), factor.syllables().begin(), factor.syllables().end());
    }
    return Word(std::move(out));
  }

  Word parse_factor() {
    Word atom;
    bool group = false;
    if (text_[pos_] == '(') {
      ++pos_;
      atom = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      group = true;
    } else if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      atom = Word::generator(std::string(text_.substr(start, pos_ - start)));
    } else {
      fail("expected generator or '('");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      Integer e = parse_exponent();
      if (!group) return Word::generator(atom.syllables().front().generator, e);
      if (!e.fits_slong_p()) fail("group exponent too large");
      return atom.power(e.get_si());
    }
    return atom;
  }

  Integer parse_exponent() {
    char close = 0;
    if (pos_ < text_.size() && (text_[pos_] == '{' || text_[pos_] == '(')) {
      close = text_[pos_] == '{' ? '}' : ')';
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected exponent digits");
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') token.erase(0, 1);
    if (close) {
      if (pos_ >= text_.size() || text_[pos_] != close) fail(std::string("missing '") + close + "'");
      ++pos_;
    }
    return Integer(token, 10);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word Word::parse(std::string_view text) { return WordParser(text, 1, 0).parse_all(); }

// ---------------------------------------------------------------- presentations

FinitePresentation::FinitePresentation(std::vector<std::string> generators,
                                       std::vector<Word> relators,
                                       std::map<std::size_t, std::string> labels)
    : generators_(std::move(generators)), labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    if (!is_valid_generator_name(g)) throw PresentationError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw PresentationError("duplicate generator '" + g + "'");
  }
  relators_.reserve(relators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (const auto& s : relators[i].syllables()) {
      if (!seen.count(s.generator))
        throw PresentationError("relator " + std::to_string(i) + " uses undeclared generator '" +
                                s.generator + "'");
    }
    relators_.push_back(free_reduce(relators[i]));
  }
  for (const auto& [idx, label] : labels_) {
    if (idx >= relators_.size())
      throw PresentationError("label index " + std::to_string(idx) + " out of range");
    if (!is_valid_label(label)) throw PresentationError("invalid label '" + label + "'");
  }
}

std::optional<std::string> FinitePresentation::label(std::size_t relator_index) const {
  auto it = labels_.find(relator_index);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

bool FinitePresentation::has_generator(std::string_view name) const {
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

std::string FinitePresentation::to_text() const {
  std::string out = "gens:";
  for (const auto& g : generators_) out += " " + g;
  out += '\n';
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += "rel";
    if (auto l = label(i)) out += " " + *l;
    out += ": " + relators_[i].to_string() + "\n";
  }
  return out;
}

FinitePresentation FinitePresentation::parse_text(std::string_view text) {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  std::map<std::size_t, std::string> labels;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t line_start = start;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t indent = static_cast<std::size_t>(body.data() - text.data()) - line_start;
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ':'", line_no, indent + 1);
    std::string_view head = trim(body.substr(0, colon));
    std::string_view rest = body.substr(colon + 1);
    const std::size_t rest_col = indent + colon + 1;
    if (head == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' line", line_no, indent + 1);
      if (!rels.empty()) throw ParseError("'gens' must precede relators", line_no, indent + 1);
      have_gens = true;
      std::size_t p = 0;
      while (p < rest.size()) {
        while (p < rest.size() && std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
        std::size_t q = p;
        while (q < rest.size() && !std::isspace(static_cast<unsigned char>(rest[q]))) ++q;
        if (q > p) {
          std::string name(rest.substr(p, q - p));
          if (!is_valid_generator_name(name))
            throw ParseError("invalid generator name '" + name + "'", line_no, rest_col + p + 1);
          if (std::find(gens.begin(), gens.end(), name) != gens.end())
            throw ParseError("duplicate generator '" + name + "'", line_no, rest_col + p + 1);
          gens.push_back(std::move(name));
        }
        p = q;
      }
    } else if (head.substr(0, 3) == "rel" &&
               (head.size() == 3 || std::isspace(static_cast<unsigned char>(head[3])))) {
      if (!have_gens) throw ParseError("relator before 'gens' line", line_no, indent + 1);
      std::string_view lab = trim(head.substr(3));
      Word w = WordParser(rest, line_no, rest_col).parse_all();
      for (const auto& s : w.syllables()) {
        if (std::find(gens.begin(), gens.end(), s.generator) == gens.end())
          throw ParseError("undeclared generator '" + s.generator + "'", line_no, rest_col + 1);
      }
      if (!lab.empty()) {
        if (!is_valid_label(lab))
          throw ParseError("invalid label '" + std::string(lab) + "'", line_no, indent + 4);
        labels[rels.size()] = std::string(lab);
      }
      rels.push_back(std::move(w));
    } else {
      throw ParseError("unknown directive '" + std::string(head) + "'", line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens' line", line_no == 0 ? 1 : line_no, 1);
  return FinitePresentation(std::move(gens), std::move(rels), std::move(labels));
}

namespace {

nlohmann::json exponent_json(const Integer& e) {
  if (e.fits_slong_p()) return e.get_si();
  return e.get_str();
}

Integer exponent_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("exponent must be an integer or a decimal string", 0, 0);
}

}  // namespace

std::string FinitePresentation::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["generators"] = generators_;
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const auto& w : relators_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& s : w.syllables()) row.push_back({s.generator, exponent_json(s.exponent)});
    rels.push_back(std::move(row));
  }
  j["relators"] = std::move(rels);
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [idx, label] : labels_) labels[std::to_string(idx)] = label;
  j["labels"] = std::move(labels);
  return j.dump(indent);
}

FinitePresentation FinitePresentation::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; translate into line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  try {
    std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels;
    for (const auto& row : j.at("relators")) {
      std::vector<Syllable> syl;
      for (const auto& pair : row) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("syllable must be [name, exponent]", 0, 0);
        syl.push_back(Syllable{pair[0].get<std::string>(), exponent_from_json(pair[1])});
      }
      rels.emplace_back(std::move(syl));
    }
    std::map<std::size_t, std::string> labels;
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items())
        labels[std::stoul(key)] = value.get<std::string>();
    }
    return FinitePresentation(std::move(gens), std::move(rels), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation JSON: ") + e.what(), 0, 0);
  }
}

std::string FinitePresentation::to_algebra() const {
  std::ostringstream out;
  out << "F := FreeGroup(";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out << (i ? ", " : "") << '"' << generators_[i] << '"';
  out << ");\n";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out << generators_[i] << " := F." << (i + 1) << ";\n";
  out << "rels := [";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out << (i ? ",\n  " : "\n  ");
    const auto& syl = relators_[i].syllables();
    if (syl.empty()) {
      out << "One(F)";
      continue;
    }
    for (std::size_t k = 0; k < syl.size(); ++k) {
      if (k) out << '*';
      out << syl[k].generator;
      if (syl[k].exponent != 1) out << '^' << syl[k].exponent.get_str();
    }
  }
  out << (relators_.empty() ? "];\n" : "\n];\n");
  out << "G := F / rels;\n";
  return out.str();
}

}  // namespace brt
