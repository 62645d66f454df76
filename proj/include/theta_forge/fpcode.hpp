#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace theta_forge {

/// A word of F_p^n stored as one digit per coordinate.
using Word = std::vector<std::uint8_t>;

bool is_prime(unsigned p);

/// Finite subset of F_p^n. Linear codes additionally carry a reduced
/// row-echelon generator matrix; the word list is always sorted and unique.
class Code {
 public:
  /// Explicit word list. Linearity is detected: if the words form a subspace
  /// the code is marked linear and its generators are computed.
  static Code from_words(unsigned p, std::size_t n, std::vector<Word> words);
  /// F_p-span of the given generators.
  static Code from_generators(unsigned p, std::size_t n, std::vector<Word> generators);

  unsigned prime() const { return p_; }
  std::size_t length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool is_linear() const { return generators_.has_value(); }
  /// Throws std::logic_error for non-linear codes.
  const std::vector<Word>& generators() const;
  std::size_t dimension() const { return generators().size(); }
  bool contains(const Word& w) const;

  bool operator==(const Code& other) const {
    return p_ == other.p_ && n_ == other.n_ && words_ == other.words_;
  }

 private:
  Code(unsigned p, std::size_t n) : p_(p), n_(n) {}

  unsigned p_ = 2;
  std::size_t n_ = 0;
  std::vector<Word> words_;
  std::optional<std::vector<Word>> generators_;
};

/// Reduced row-echelon basis of the span of `rows` over F_p. Pivot columns
/// are returned through `pivots` when non-null.
std::vector<Word> row_reduce(unsigned p, std::vector<Word> rows,
                             std::vector<std::size_t>* pivots = nullptr);

/// Annihilator of a linear code under the standard inner product.
Code dual_code(const Code& c);

/// Complete weight enumerator with +j and -j identified. Keys are exponent
/// tuples (l_0, ..., l_r) summing to n; values are word counts.
struct WeightEnumerator {
  unsigned p = 2;
  std::size_t r = 1;
  std::map<std::vector<unsigned>, std::uint64_t> coefficients;

  std::uint64_t total() const;
  bool operator==(const WeightEnumerator&) const = default;
};

/// Symbol class of a digit: j with digit = +-j mod p (0 <= j <= r).
unsigned symbol_class(unsigned p, unsigned digit);
std::size_t symbol_class_count(unsigned p);  // r + 1

std::vector<unsigned> weight_profile(unsigned p, const Word& w);
WeightEnumerator weight_enumerator(const Code& c);

std::size_t hamming_weight(const Word& w);
unsigned dot(unsigned p, const Word& a, const Word& b);

bool is_self_orthogonal(const Code& c);
bool is_self_dual(const Code& c);
/// Binary codes only; throws std::invalid_argument for odd p.
bool is_doubly_even(const Code& c);
/// Minimum weight over nonzero words; nullopt if the code has none.
std::optional<std::size_t> min_distance(const Code& c);
/// Distance >= 3, the single-error-correcting condition.
bool is_simply_error_correcting(const Code& c);

struct CodePredicates {
  std::optional<bool> self_orthogonal;  // nullopt: code not linear
  std::optional<bool> self_dual;
  std::optional<bool> doubly_even;  // nullopt: p odd
  std::optional<std::size_t> min_distance;
};
CodePredicates code_predicates(const Code& c);

/// hamming8, tetracode or golay12.
Code standard_code(std::string_view name);

/// g: e_i -> c_i e_{sigma^{-1}(i)}, i.e. g(w)_j = c_{sigma(j)} w_{sigma(j)}.
struct MonomialTransform {
  std::vector<std::size_t> sigma;
  std::vector<std::uint8_t> scalars;

  static MonomialTransform identity(std::size_t n);
  Word apply(unsigned p, const Word& w) const;
};

/// The transform h o g.
MonomialTransform compose(const MonomialTransform& h, const MonomialTransform& g);
Code apply_monomial(const Code& c, const MonomialTransform& g);

/// Text format: "p n" header, then one word per line as n digits separated by
/// spaces. Lines starting with '#' are ignored.
Code parse_code(std::string_view text);
Code read_code_file(const std::string& path);
std::string format_code(const Code& c);

}  // namespace theta_forge
