#pragma once

#include <string>
#include <vector>

#include "agr/words.h"

namespace agr {

// Finite group presentation <generators | relators>. Generator names are
// lowercase ([a-z][a-z0-9]*); in relator words the fully uppercased name
// denotes the inverse, and name^k denotes a signed power.
class Presentation {
 public:
  Presentation(std::vector<std::string> names, std::vector<FreeWord> relators);

  int ngens() const { return static_cast<int>(names_.size()); }
  int nrels() const { return static_cast<int>(relators_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  int deficiency() const { return ngens() - nrels(); }

  int generator_index(const std::string& name) const;  // UnknownGenerator if absent

  std::string word_str(const FreeWord& w) const;
  std::string str() const;  // canonical text form, reparses to an equal value

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.names_ == b.names_ && a.relators_ == b.relators_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<FreeWord> relators_;
};

// Parses a relator word against the given generator names.
FreeWord parse_word(const std::string& text, const std::vector<std::string>& names);

// Parses the presentation file format:
//   # comment
//   gens: x y
//   rel: x y X Y
// Reports malformed input as ParseError with line and column.
Presentation parse_presentation(const std::string& text);

// Reads and parses a presentation file; errors carry the path.
Presentation load_presentation(const std::string& path);

}  // namespace agr
