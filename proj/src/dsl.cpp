#include "transword/dsl.hpp"

#include <cctype>
#include <limits>

#include "transword/error.hpp"

namespace transword {

void Scanner::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::peek_is(std::string_view tok) {
  skip_ws();
  return text_.substr(pos_, tok.size()) == tok;
}

bool Scanner::accept(std::string_view tok) {
  if (!peek_is(tok)) return false;
  pos_ += tok.size();
  return true;
}

void Scanner::expect(std::string_view tok) {
  if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
}

std::uint64_t Scanner::natural() {
  skip_ws();
  if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
  std::uint64_t v = 0;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() / 4 - d) / 10) fail("number too large");
    v = v * 10 + d;
    ++pos_;
  }
  return v;
}

std::int64_t Scanner::integer() {
  const bool neg = accept("-");
  if (!neg) accept("+");
  const auto v = static_cast<std::int64_t>(natural());
  return neg ? -v : v;
}

std::string Scanner::identifier() {
  skip_ws();
  const std::size_t start = pos_;
  while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
  if (pos_ == start) fail("expected a name");
  return std::string(text_.substr(start, pos_ - start));
}

std::string Scanner::quoted() {
  expect("\"");
  const std::size_t start = pos_;
  while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
  if (pos_ >= text_.size()) fail("unterminated string");
  std::string out(text_.substr(start, pos_ - start));
  ++pos_;
  return out;
}

void Scanner::fail(const std::string& msg) const {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(msg, line, col);
}

namespace {

// One term of a polynomial: [coef] [*] [var [^2]].
void poly_term(Scanner& sc, char var, int sign, std::int64_t c[3]) {
  const std::string v(1, var);
  std::int64_t coef = 1;
  bool have_num = false;
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    coef = static_cast<std::int64_t>(sc.natural());
    have_num = true;
    sc.accept("*");
  }
  if (sc.accept(v)) {
    if (sc.accept("^")) {
      const auto e = sc.natural();
      if (e == 2)
        c[2] += sign * coef;
      else if (e == 1)
        c[1] += sign * coef;
      else
        sc.fail("only degree two index rules are supported");
    } else {
      c[1] += sign * coef;
    }
  } else if (have_num) {
    c[0] += sign * coef;
  } else {
    sc.fail(std::string("expected a term in ") + var);
  }
}

IndexPoly poly_sum(Scanner& sc, char var, std::int64_t denom) {
  std::int64_t c[3] = {0, 0, 0};
  int sign = sc.accept("-") ? -1 : 1;
  poly_term(sc, var, sign, c);
  for (;;) {
    if (sc.accept("+"))
      sign = 1;
    else if (sc.accept("-"))
      sign = -1;
    else
      break;
    poly_term(sc, var, sign, c);
  }
  return IndexPoly(c[2], c[1], c[0], denom);
}

}  // namespace

IndexPoly parse_poly(Scanner& sc, char var) {
  if (sc.accept("pair")) {
    sc.expect("(");
    const auto m = sc.natural();
    sc.expect(",");
    sc.expect(std::string(1, var));
    std::uint64_t c = 0;
    if (sc.accept("+")) c = sc.natural();
    sc.expect(")");
    return IndexPoly::pairing(m, c);
  }
  if (sc.accept("(")) {
    IndexPoly inner = poly_sum(sc, var, 1);
    sc.expect(")");
    if (sc.accept("/")) {
      const auto d = static_cast<std::int64_t>(sc.natural());
      if (d == 0) sc.fail("division by zero");
      return IndexPoly(inner.quad(), inner.lin(), inner.constant(), d);
    }
    return inner;
  }
  return poly_sum(sc, var, 1);
}

SetSpec parse_set(Scanner& sc, const SetNames& names) {
  if (sc.accept("fin")) {
    sc.expect("{");
    std::vector<std::uint64_t> xs;
    if (!sc.accept("}")) {
      do xs.push_back(sc.natural());
      while (sc.accept(","));
      sc.expect("}");
    }
    return SetSpec::finite(std::move(xs));
  }
  const bool eper = sc.accept("eper");
  if (eper || sc.accept("pcode")) {
    sc.expect("(");
    const auto prefix = sc.quoted();
    sc.expect(",");
    const auto period = sc.quoted();
    sc.expect(")");
    auto bits_ok = [](const std::string& s) { return s.find_first_not_of("01") == std::string::npos; };
    if (!bits_ok(prefix) || !bits_ok(period) || period.empty()) sc.fail("bit strings must be 0/1 with a nonempty period");
    return eper ? SetSpec::ev_periodic(prefix, period) : SetSpec::prefix_code(prefix, period);
  }
  const auto name = sc.identifier();
  auto it = names.find(name);
  if (it == names.end()) sc.fail("unknown set '" + name + "'");
  return it->second;
}

Letter parse_letter(Scanner& sc) {
  const char f = sc.peek();
  if (f != 'a' && f != 'b' && f != 'c') sc.fail("expected a letter");
  sc.accept(std::string(1, f));
  const auto idx = sc.natural();
  int sign = 1;
  if (sc.accept("^")) {
    const auto e = sc.integer();
    if (e != 1 && e != -1) sc.fail("letter exponent must be 1 or -1");
    sign = static_cast<int>(e);
  }
  return {f == 'a' ? Family::a : f == 'b' ? Family::b : Family::c, idx, sign};
}

namespace {

FamSpec parse_famspec(Scanner& sc, const SetNames& names) {
  if (sc.accept("sel")) {
    sc.expect("(");
    auto s = parse_set(sc, names);
    sc.expect(")");
    return FamSpec::sel(std::move(s));
  }
  if (sc.accept("a")) return FamSpec::a();
  if (sc.accept("b")) return FamSpec::b();
  if (sc.accept("c")) return FamSpec::c();
  sc.fail("expected a, b, c or sel(...)");
}

Entry parse_entry(Scanner& sc, const SetNames& names) {
  Entry e;
  e.fam = parse_famspec(sc, names);
  sc.expect("(");
  e.index = parse_poly(sc, 'k');
  sc.expect(")");
  if (sc.accept("^")) {
    const auto x = sc.integer();
    if (x != 1 && x != -1) sc.fail("entry exponent must be 1 or -1");
    e.sign = static_cast<int>(x);
  }
  if (!e.index.is_valid_stream_index()) sc.fail("index rule must be a strictly increasing natural sequence");
  return e;
}

}  // namespace

Schema parse_stream(Scanner& sc, const SetNames& names) {
  sc.expect("st");
  sc.expect("(");
  Schema s;
  if (sc.accept("+"))
    s.direction = Direction::forward;
  else if (sc.accept("-"))
    s.direction = Direction::backward;
  else
    sc.fail("expected stream direction + or -");
  sc.expect(",");
  s.cursor.step = sc.natural();
  if (sc.accept(":")) s.cursor.entry = sc.natural();
  sc.expect(",");
  sc.expect("{");
  do s.entries.push_back(parse_entry(sc, names));
  while (sc.accept(",") || (!sc.peek_is("}") && !sc.at_end()));
  sc.expect("}");
  sc.expect(")");
  if (s.cursor.entry >= s.entries.size()) sc.fail("entry offset out of range");
  return s;
}

SchematicWord parse_word(Scanner& sc, const SetNames& names) {
  SchematicWord w;
  auto append = [&](const SchematicWord& x) { w.segments.insert(w.segments.end(), x.segments.begin(), x.segments.end()); };
  for (;;) {
    const char ch = sc.peek();
    if (ch == '[') {
      sc.expect("[");
      FreeWord b;
      while (!sc.accept("]")) {
        if (sc.at_end()) sc.fail("unterminated block");
        b.push_back(parse_letter(sc));
      }
      append(SchematicWord::finite(std::move(b)));
    } else if (sc.peek_is("st(") || sc.peek_is("st ")) {
      append(SchematicWord::stream(parse_stream(sc, names)));
    } else if (ch == '(') {
      sc.expect("(");
      auto inner = parse_word(sc, names);
      sc.expect(")");
      if (sc.accept("^")) {
        const auto e = sc.integer();
        if (e == -1)
          inner = invert(inner);
        else if (e != 1)
          sc.fail("word exponent must be 1 or -1");
      }
      append(inner);
    } else if (ch == 'a' || ch == 'b' || ch == 'c') {
      append(SchematicWord::finite({parse_letter(sc)}));
    } else {
      break;
    }
  }
  return canonicalize(w);
}

SchematicWord parse_word(std::string_view text, const SetNames& names) {
  Scanner sc(text);
  auto w = parse_word(sc, names);
  if (!sc.at_end()) sc.fail("unexpected input");
  return w;
}

FreeWord parse_free_word(std::string_view text) {
  auto w = parse_word(text);
  if (!w.is_finite()) throw ParseError("expected a finite word", 1, 1);
  return w.as_finite();
}

SetSpec parse_set(std::string_view text, const SetNames& names) {
  Scanner sc(text);
  auto s = parse_set(sc, names);
  if (!sc.at_end()) sc.fail("unexpected input");
  return s;
}

std::string render(const SetSpec& s, const SetNames* names) {
  if (names)
    for (const auto& [n, v] : *names)
      if (v == s) return n;
  return s.to_string();
}

std::string render(const FamSpec& f, const SetNames* names) {
  if (f.is_a) return "a";
  if (f.selector.is_everything()) return "b";
  if (f.selector.is_nothing()) return "c";
  return "sel(" + render(f.selector, names) + ")";
}

std::string render(const Entry& e, const SetNames* names, char var) {
  std::string out = render(e.fam, names) + "(" + e.index.to_string(var) + ")";
  if (e.sign < 0) out += "^-1";
  return out;
}

std::string render(const Schema& s, const SetNames* names) {
  std::string out = "st(";
  out += s.direction == Direction::forward ? "+" : "-";
  out += ", " + std::to_string(s.cursor.step);
  if (s.cursor.entry) out += ":" + std::to_string(s.cursor.entry);
  out += ", {";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (i) out += ", ";
    out += render(s.entries[i], names);
  }
  return out + "})";
}

std::string render(const SchematicWord& w, const SetNames* names) {
  if (w.segments.empty()) return "[]";
  std::string out;
  for (const auto& seg : w.segments) {
    if (!out.empty()) out += " ";
    out += is_block(seg) ? to_string(block(seg)) : render(stream(seg), names);
  }
  return out;
}

}  // namespace transword
