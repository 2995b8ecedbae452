#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qsup/errors.hpp"

namespace qsup {

// Exact coefficient type for normally ordered expansions. The coefficient of
// any term in the normal ordering of a word with p creations and q
// annihilations is bounded by max_s s! C(p,s) C(q,s), which stays below 2^127
// for words up to the 64-letter guard.
using BigCoeff = __int128;

double to_double(BigCoeff c);

enum class Ladder : std::uint8_t { Annihilate, Create };

// A word over the two-letter ladder alphabet; the empty word is the identity.
struct OperatorWord {
  std::vector<Ladder> letters;

  static OperatorWord identity() { return {}; }
  static OperatorWord annihilate_power(int n);
  static OperatorWord create_power(int m);

  OperatorWord& append(Ladder letter, int count = 1);
  OperatorWord& append(const OperatorWord& other);
  std::size_t size() const { return letters.size(); }
};

// Finite sum of normally ordered terms coeff * adag^i a^j, keyed by (i, j).
// No zero coefficients are stored; equality is term-map equality.
class NormalForm {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, BigCoeff>;

  NormalForm() = default;

  static NormalForm identity() { return single(0, 0, 1); }
  static NormalForm single(int dagger_power, int annih_power, BigCoeff coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool operator==(const NormalForm& other) const { return terms_ == other.terms_; }

  void add(int dagger_power, int annih_power, BigCoeff coeff);
  NormalForm& operator+=(const NormalForm& other);

  // Right-multiply by one ladder operator, staying normally ordered:
  //   (i,j) a   -> (i, j+1)
  //   (i,j) a^+ -> j (i, j-1) + (i+1, j)
  void multiply_annihilate();
  void multiply_create();

 private:
  TermMap terms_;
};

// Unique normally ordered expansion of a ladder word, exact integer
// coefficients. Throws WordTooLong above 64 letters.
NormalForm normal_order(const OperatorWord& word);

// Normally ordered product, using a^j adag^k = sum_s s! C(j,s) C(k,s)
// adag^{k-s} a^{j-s}.
NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs);

// <alpha| form |alpha> = sum coeff conj(alpha)^i alpha^j.
std::complex<double> coherent_expectation(const NormalForm& form,
                                          std::complex<double> alpha);

// Stirling number of the second kind, standard convention (with the 1/f!),
// exact. Requires 0 <= e, f <= 30.
BigCoeff stirling2(int e, int f);

BigCoeff binomial(int n, int k);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// (1/2)_{l/2} = (l-1)!!/2^{l/2}; the l-th central quadrature moment of a
// coherent state. l must be even, 2 <= l <= 30.
Rational pochhammer_half(int l);

}  // namespace qsup
