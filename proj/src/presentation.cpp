#include "agr/presentation.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace agr {

namespace {

bool valid_name(const std::string& n) {
  if (n.empty() || !std::islower(static_cast<unsigned char>(n[0]))) return false;
  for (char ch : n)
    if (!std::islower(static_cast<unsigned char>(ch)) &&
        !std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

std::string upper_name(const std::string& n) {
  std::string u = n;
  for (char& ch : u) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return u;
}

[[noreturn]] void bail(const std::string& what, int line, int col) {
  throw ParseError(what, line, col);
}

// Longest-match lookup of a generator occurrence at position i. Returns
// (index, inverse, length) or length 0 when nothing matches.
struct NameHit {
  int index = -1;
  bool inverse = false;
  size_t length = 0;
};

NameHit match_name(const std::string& s, size_t i, const std::vector<std::string>& names) {
  NameHit best;
  for (size_t k = 0; k < names.size(); ++k) {
    const std::string& n = names[k];
    if (n.size() > best.length && s.compare(i, n.size(), n) == 0) {
      best = {static_cast<int>(k), false, n.size()};
    }
    std::string u = upper_name(n);
    if (u.size() > best.length && s.compare(i, u.size(), u) == 0) {
      best = {static_cast<int>(k), true, u.size()};
    }
  }
  return best;
}

FreeWord parse_word_at(const std::string& s, const std::vector<std::string>& names, int line,
                       int col_base) {
  std::vector<int> letters;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    NameHit hit = match_name(s, i, names);
    if (hit.length == 0)
      bail("unrecognised generator in relator", line, col_base + static_cast<int>(i) + 1);
    i += hit.length;
    long long power = hit.inverse ? -1 : 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = i < s.size() && s[i] == '-';
      if (neg) ++i;
      size_t d0 = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == d0) bail("expected exponent digits", line, col_base + static_cast<int>(i) + 1);
      long long e = std::stoll(s.substr(d0, i - d0));
      power *= neg ? -e : e;
    }
    int letter = power >= 0 ? hit.index + 1 : -(hit.index + 1);
    for (long long k = std::llabs(power); k > 0; --k) letters.push_back(letter);
  }
  return FreeWord(std::move(letters));
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<FreeWord> relators)
    : names_(std::move(names)), relators_(std::move(relators)) {
  if (names_.empty()) fail(ErrorCode::EmptyGeneratorList, "presentation with no generators");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      fail(ErrorCode::SyntaxError, "invalid generator name '" + names_[i] + "'");
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        fail(ErrorCode::DuplicateGenerator, "duplicate generator '" + names_[i] + "'");
  }
  for (const FreeWord& r : relators_)
    for (int l : r.letters())
      if (std::abs(l) > ngens())
        fail(ErrorCode::UnknownGenerator, "relator uses an undeclared generator");
}

int Presentation::generator_index(const std::string& name) const {
  for (size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  fail(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
}

std::string Presentation::word_str(const FreeWord& w) const {
  if (w.is_identity()) return "";
  std::string out;
  size_t i = 0;
  const auto& ls = w.letters();
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    size_t run = j - i;
    int g = std::abs(ls[i]) - 1;
    if (!out.empty()) out += " ";
    out += ls[i] > 0 ? names_[g] : upper_name(names_[g]);
    if (run > 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string Presentation::str() const {
  std::string out = "gens:";
  for (const std::string& n : names_) out += " " + n;
  out += "\n";
  for (const FreeWord& r : relators_) out += "rel: " + word_str(r) + "\n";
  return out;
}

FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  return parse_word_at(text, names, 1, 0);
}

Presentation parse_presentation(const std::string& text) {
  std::vector<std::string> names;
  std::vector<FreeWord> relators;
  bool seen_gens = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);

    if (line.rfind("gens:", 0) == 0) {
      if (seen_gens) bail("second generator line", lineno, static_cast<int>(begin) + 1);
      seen_gens = true;
      std::istringstream fields(line.substr(5));
      std::string n;
      while (fields >> n) {
        if (!valid_name(n))
          bail("invalid generator name '" + n + "'", lineno, static_cast<int>(begin) + 1);
        names.push_back(n);
      }
      if (names.empty()) bail("empty generator list", lineno, static_cast<int>(begin) + 1);
    } else if (line.rfind("rel:", 0) == 0) {
      if (!seen_gens) bail("relator before generator line", lineno, static_cast<int>(begin) + 1);
      relators.push_back(
          parse_word_at(line.substr(4), names, lineno, static_cast<int>(begin) + 4));
    } else {
      bail("expected 'gens:' or 'rel:' line", lineno, static_cast<int>(begin) + 1);
    }
  }
  if (!seen_gens) bail("missing generator line", lineno == 0 ? 1 : lineno, 1);

  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) bail("duplicate generator '" + names[i] + "'", 1, 1);

  return Presentation(std::move(names), std::move(relators));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::EmptyInput, "cannot read presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return parse_presentation(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " [" + path + "]", e.line(), e.column());
  }
}

}  // namespace agr
