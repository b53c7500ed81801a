#include "squaretile/permutation.hpp"

#include <cctype>
#include <sstream>

#include "squaretile/error.hpp"

namespace squaretile {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw ParseError(ParseErrorKind::NotBijection, "permutation is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> im(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  for (const auto& cyc : cycles) {
    for (auto s : cyc) {
      if (s == 0 || s > n)
        throw ParseError(ParseErrorKind::Syntax, "symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
      if (used[s - 1])
        throw ParseError(ParseErrorKind::NotBijection,
                         "symbol " + std::to_string(s) + " appears twice; not a bijection");
      used[s - 1] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) im[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Permutation result = identity(size());
  while (e) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) os << (k ? "," : "") << cyc[k] + 1;
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvariantViolation("composing permutations of different degree");
  std::vector<std::size_t> im(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) im[i] = a(b(i));
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<std::vector<std::size_t>> parse_cycles(const std::string& text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(ParseErrorKind::Syntax, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::size_t> cyc;
    bool expect_symbol = true;
    for (;;) {
      skip_blank();
      if (i >= text.size()) throw ParseError(ParseErrorKind::Syntax, "unterminated cycle: " + text);
      const char ch = text[i];
      if (ch == ')') {
        if (!cyc.empty() && expect_symbol)
          throw ParseError(ParseErrorKind::Syntax, "dangling separator in cycle: " + text);
        ++i;
        break;
      }
      if (ch == ',') {
        if (expect_symbol) throw ParseError(ParseErrorKind::Syntax, "empty symbol in cycle: " + text);
        expect_symbol = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(ParseErrorKind::Syntax, std::string("unexpected character '") + ch + "' in: " + text);
      if (!expect_symbol && !cyc.empty() && text[i - 1] != ' ' && text[i - 1] != '\t')
        throw ParseError(ParseErrorKind::Syntax, "malformed symbol in: " + text);
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1000000) throw ParseError(ParseErrorKind::Syntax, "symbol too large in: " + text);
        ++i;
      }
      if (value == 0) throw ParseError(ParseErrorKind::Syntax, "symbols start at 1: " + text);
      cyc.push_back(value);
      expect_symbol = false;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_blank();
  }
  return cycles;
}

}  // namespace squaretile
