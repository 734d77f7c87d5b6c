#include "torelli/word.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

bool parse_int(std::string_view text, long& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
    if (pos == text.size()) return false;
  }
  long value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) return false;  // indices and exponents stay small
  }
  out = negative ? -value : value;
  return true;
}

void append_token(Word& w, std::string_view token, const SurfaceParams& params) {
  if (token == "1") return;  // identity token
  const char head = token[0];
  if (head != 'x' && head != 'y') {
    throw syntax_error("bad generator token '" + std::string(token) +
                       "': expected x<k> or y<k>");
  }
  std::string_view rest = token.substr(1);
  const std::size_t caret = rest.find('^');
  std::string_view index_text = rest.substr(0, caret);
  long index = 0;
  if (!parse_int(index_text, index) || index < 0) {
    throw syntax_error("bad generator index in token '" + std::string(token) +
                       "'");
  }
  long exponent = 1;
  if (caret != std::string_view::npos) {
    std::string_view exp_text = rest.substr(caret + 1);
    if (!parse_int(exp_text, exponent)) {
      throw syntax_error("bad exponent in token '" + std::string(token) + "'");
    }
    if (exponent == 0) {
      throw syntax_error("zero exponent in token '" + std::string(token) +
                         "'");
    }
  }
  Generator gen;
  if (head == 'x') {
    if (index < 1 || index > params.g) {
      throw index_error("x index " + std::to_string(index) +
                        " outside 1.." + std::to_string(params.g));
    }
    gen = xgen(static_cast<int>(index));
  } else {
    if (index < 1 || index > params.y_count()) {
      throw index_error("y index " + std::to_string(index) + " outside 1.." +
                        std::to_string(params.y_count()));
    }
    gen = ygen(static_cast<int>(index));
  }
  const int sign = exponent > 0 ? 1 : -1;
  for (long t = 0; t < (exponent > 0 ? exponent : -exponent); ++t) {
    w.letters.push_back(Letter{gen, sign});
  }
}

}  // namespace

Word parse_word(std::string_view text, const SurfaceParams& params) {
  params.validate();
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '*' &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    append_token(w, text.substr(pos, end - pos), params);
    pos = end;
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.gen.kind == GenKind::X ? 'x' : 'y';
    out += std::to_string(l.gen.index);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

void validate_word(const Word& w, const SurfaceParams& params) {
  params.validate();
  for (const Letter& l : w.letters) {
    const int limit = l.gen.kind == GenKind::X ? params.g : params.y_count();
    if (l.gen.index < 1 || l.gen.index > limit) {
      throw index_error("letter " + format_word(Word{{l}}) +
                        " outside the alphabet for g=" +
                        std::to_string(params.g) +
                        ", b=" + std::to_string(params.b));
    }
    if (l.exp != 1 && l.exp != -1) {
      throw constraint_error("letter exponent must be +1 or -1");
    }
  }
}

bool is_reduced(const Word& w) {
  for (std::size_t t = 1; t < w.letters.size(); ++t) {
    if (w.letters[t - 1].gen == w.letters[t].gen &&
        w.letters[t - 1].exp == -w.letters[t].exp) {
      return false;
    }
  }
  return true;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!stack.empty() && stack.back().gen == l.gen &&
        stack.back().exp == -l.exp) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word{std::move(stack)};
}

Word invert(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(),
                     rhs.letters.end());
  return out;
}

Word conjugate(const Word& u, const Word& w) {
  return concat(concat(u, w), invert(u));
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(invert(a), invert(b)));
}

}  // namespace torelli
