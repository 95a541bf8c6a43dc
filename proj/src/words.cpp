#include "nonrep/words.hpp"

#include <algorithm>
#include <sstream>

#include "nonrep/errors.hpp"
#include "nonrep/repetitions.hpp"

namespace nonrep {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
}

Word Word::parse(std::string_view digits, std::size_t alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError(std::string("not a digit: '") + c + "'");
    }
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(symbols), alphabet_size);
}

Word Word::parse(std::string_view digits) {
  std::size_t alphabet = 0;
  for (char c : digits) {
    if (c >= '0' && c <= '9') alphabet = std::max<std::size_t>(alphabet, c - '0' + 1);
  }
  return parse(digits, alphabet);
}

void Word::push_back(Symbol s) {
  if (s >= alphabet_size_) {
    throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(alphabet_size_));
  }
  symbols_.push_back(s);
}

void Word::append(const Word& other) {
  if (other.alphabet_size_ > alphabet_size_) {
    for (Symbol s : other.symbols_) {
      if (s >= alphabet_size_) throw DomainError("appended word exceeds alphabet");
    }
  }
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw DomainError("slice out of range");
  Word out(alphabet_size_);
  out.symbols_.assign(symbols_.begin() + pos, symbols_.begin() + pos + len);
  return out;
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

Word reverse(const Word& w) {
  std::vector<Symbol> symbols(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(symbols), w.alphabet_size());
}

std::set<Word> factors(const Word& w, std::size_t length) {
  if (length > w.size()) throw DomainError("factor length exceeds word length");
  std::set<Word> out;
  for (std::size_t i = 0; i + length <= w.size(); ++i) out.insert(w.slice(i, length));
  return out;
}

Morphism::Morphism(std::string name, std::vector<Word> images)
    : name_(std::move(name)), images_(std::move(images)) {
  if (images_.empty()) return;
  width_ = images_.front().size();
  const auto alphabet = images_.front().alphabet_size();
  for (const auto& img : images_) {
    if (img.size() != width_) throw DomainError("morphism images differ in length");
    if (img.alphabet_size() != alphabet) {
      throw DomainError("morphism images use different alphabets");
    }
  }
}

std::size_t Morphism::target_alphabet_size() const {
  return images_.empty() ? 0 : images_.front().alphabet_size();
}

std::string Morphism::str() const {
  std::ostringstream out;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    out << s << " -> " << images_[s].str() << '\n';
  }
  return out.str();
}

Morphism Morphism::parse(std::string_view text, std::string name) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::size_t, std::string>> rows;
  std::string line;
  std::size_t alphabet = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw DomainError("expected 'symbol -> image': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const auto lhs = trim(line.substr(0, arrow));
    const auto rhs = trim(line.substr(arrow + 2));
    const auto src = Word::parse(lhs);
    if (src.size() != 1) throw DomainError("source must be a single symbol: " + lhs);
    rows.emplace_back(src[0], rhs);
    for (char c : rhs) {
      if (c >= '0' && c <= '9') alphabet = std::max<std::size_t>(alphabet, c - '0' + 1);
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<Word> images;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != i) throw DomainError("morphism table must list symbols 0..n-1 once");
    images.push_back(Word::parse(rows[i].second, alphabet));
  }
  return Morphism(std::move(name), std::move(images));
}

const Morphism& g2() {
  static const Morphism m("g2", {Word::parse("011220012201", 3),
                                 Word::parse("122001120012", 3),
                                 Word::parse("200112201120", 3)});
  return m;
}

const Morphism& g5() {
  static const Morphism m("g5", {Word::parse("001101110001010110010", 2),
                                 Word::parse("001101110001001110101", 2),
                                 Word::parse("001101110001001101010", 2)});
  return m;
}

const Morphism& named_morphism(std::string_view name) {
  if (name == "g2") return g2();
  if (name == "g5") return g5();
  throw DomainError("unknown morphism '" + std::string(name) + "' (expected g2 or g5)");
}

Word apply_morphism(const Morphism& m, const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size() * m.uniform_width());
  for (Symbol s : w.symbols()) {
    if (s >= m.source_alphabet_size()) {
      throw DomainError("symbol " + std::to_string(s) + " has no image under " + m.name());
    }
    const auto img = m.image(s).symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), m.target_alphabet_size());
}

PowerFreeSpec::PowerFreeSpec(Rational beta, bool strict_, std::size_t n)
    : exponent_bound(beta), strict(strict_), min_period(n) {
  if (beta < 1) throw DomainError("exponent bound must be at least 1");
  if (n < 1) throw DomainError("minimum period must be at least 1");
}

bool PowerFreeSpec::forbids(std::size_t length, std::size_t period) const {
  if (period < min_period) return false;
  const Rational e(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  return strict ? e > exponent_bound : e >= exponent_bound;
}

std::size_t PowerFreeSpec::forbidden_run(std::size_t period) const {
  // smallest r with (r + p) / p beyond the bound
  const Rational excess = (exponent_bound - 1) * static_cast<std::int64_t>(period);
  auto r = static_cast<std::size_t>(floor(excess));
  if (strict || Rational(static_cast<std::int64_t>(r)) != excess) ++r;
  return std::max<std::size_t>(r, 1);
}

PowerFreeSpec dejean_ternary_spec() { return PowerFreeSpec(Rational(7, 4), true, 1); }

void for_each_powerfree(std::size_t alphabet, const PowerFreeSpec& spec,
                        std::size_t length,
                        const std::function<bool(const Word&)>& visit) {
  Word w(alphabet);
  bool stop = false;
  auto dfs = [&](auto&& self) -> void {
    if (w.size() == length) {
      stop = !visit(w);
      return;
    }
    for (std::size_t a = 0; a < alphabet && !stop; ++a) {
      w.push_back(static_cast<Symbol>(a));
      if (!suffix_violation(w.symbols(), spec)) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
}

std::vector<Word> enumerate_powerfree_ternary(std::size_t length) {
  std::vector<Word> out;
  for_each_powerfree(3, dejean_ternary_spec(), length, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

Word generate_powerfree_ternary(std::size_t length, std::size_t lookahead) {
  Word found(3);
  bool ok = false;
  for_each_powerfree(3, dejean_ternary_spec(), length + lookahead, [&](const Word& w) {
    found = w.slice(0, length);
    ok = true;
    return false;
  });
  if (!ok) throw DomainError("no (7/4+)-free ternary word of the requested length");
  return found;
}

}  // namespace nonrep
