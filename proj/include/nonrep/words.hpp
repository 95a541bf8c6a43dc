#pragma once

// Words over small integer alphabets, uniform morphisms, and power-free
// ternary word generation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonrep/rational.hpp"

namespace nonrep {

using Symbol = std::uint8_t;

/// Finite symbol sequence. Every symbol is < alphabet_size.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
  Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

  /// Digits '0'..'9'; symbols must be < alphabet_size.
  static Word parse(std::string_view digits, std::size_t alphabet_size);
  /// Digits '0'..'9' with the alphabet inferred as max symbol + 1.
  static Word parse(std::string_view digits);

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  void push_back(Symbol s);
  void pop_back() { symbols_.pop_back(); }
  void append(const Word& other);

  Word slice(std::size_t pos, std::size_t len) const;
  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_size_ = 0;
};

Word reverse(const Word& w);

/// All distinct factors of the given length.
std::set<Word> factors(const Word& w, std::size_t length);

/// Uniform morphism: one image per source symbol, all of the same length.
class Morphism {
 public:
  Morphism() = default;
  Morphism(std::string name, std::vector<Word> images);

  const std::string& name() const { return name_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(Symbol s) const { return images_.at(s); }
  std::size_t source_alphabet_size() const { return images_.size(); }
  std::size_t target_alphabet_size() const;
  std::size_t uniform_width() const { return width_; }

  /// Text block, one `symbol -> image` line per source symbol.
  std::string str() const;
  static Morphism parse(std::string_view text, std::string name = "custom");

  bool operator==(const Morphism&) const = default;

 private:
  std::string name_;
  std::vector<Word> images_;
  std::size_t width_ = 0;
};

/// The 12-uniform ternary morphism used for 3-colorings with k = 2.
const Morphism& g2();
/// The 21-uniform ternary-to-binary morphism used for 2-colorings with k = 5.
const Morphism& g5();
/// Looks up "g2" or "g5".
const Morphism& named_morphism(std::string_view name);

Word apply_morphism(const Morphism& m, const Word& w);

/// (beta, n)-freeness: no repetition of period >= min_period and exponent
/// > beta (strict) or >= beta (non-strict).
struct PowerFreeSpec {
  Rational exponent_bound{2};
  bool strict = true;
  std::size_t min_period = 1;

  PowerFreeSpec() = default;
  PowerFreeSpec(Rational beta, bool strict_, std::size_t n);

  /// Whether a repetition of this length and period is forbidden.
  bool forbids(std::size_t length, std::size_t period) const;
  /// Smallest number of equal pairs w[i] = w[i+p] that yields a forbidden repetition.
  std::size_t forbidden_run(std::size_t period) const;

  bool operator==(const PowerFreeSpec&) const = default;
};

/// The source language for every certificate: ternary words with no
/// repetition of exponent > 7/4.
PowerFreeSpec dejean_ternary_spec();

/// Number of lookahead symbols used by generate_powerfree_ternary.
inline constexpr std::size_t kDefaultLookahead = 50;

/// Lexicographically least ternary (7/4+)-free word of the given length that
/// extends by `lookahead` further symbols.
Word generate_powerfree_ternary(std::size_t length,
                                std::size_t lookahead = kDefaultLookahead);

/// All ternary (7/4+)-free words of exactly the given length, in lexicographic order.
std::vector<Word> enumerate_powerfree_ternary(std::size_t length);

/// Depth-first walk over all words of the given length avoiding `spec`, in
/// lexicographic order. The visitor returns false to stop early.
void for_each_powerfree(std::size_t alphabet, const PowerFreeSpec& spec,
                        std::size_t length,
                        const std::function<bool(const Word&)>& visit);

}  // namespace nonrep
