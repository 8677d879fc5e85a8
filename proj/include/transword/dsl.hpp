#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "transword/word.hpp"

namespace transword {

using SetNames = std::map<std::string, SetSpec>;

// Whitespace-insensitive token reader shared by the word, map and
// substitution grammars.  Errors carry 1-based line and column.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws();
  bool at_end();
  char peek();
  bool accept(std::string_view tok);
  void expect(std::string_view tok);
  bool peek_is(std::string_view tok);
  std::uint64_t natural();
  std::int64_t integer();
  std::string identifier();
  std::string quoted();
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

IndexPoly parse_poly(Scanner& sc, char var = 'k');
SetSpec parse_set(Scanner& sc, const SetNames& names);
Letter parse_letter(Scanner& sc);
Schema parse_stream(Scanner& sc, const SetNames& names);
SchematicWord parse_word(Scanner& sc, const SetNames& names);

// Whole-input parses.
SchematicWord parse_word(std::string_view text, const SetNames& names = {});
FreeWord parse_free_word(std::string_view text);
SetSpec parse_set(std::string_view text, const SetNames& names = {});

std::string render(const SetSpec& s, const SetNames* names = nullptr);
std::string render(const FamSpec& f, const SetNames* names = nullptr);
std::string render(const Entry& e, const SetNames* names = nullptr, char var = 'k');
std::string render(const Schema& s, const SetNames* names = nullptr);
std::string render(const SchematicWord& w, const SetNames* names = nullptr);

}  // namespace transword
