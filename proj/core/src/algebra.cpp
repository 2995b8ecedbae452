#include "qsup/algebra.hpp"

#include <array>
#include <string>

namespace qsup {

double to_double(BigCoeff c) { return static_cast<double>(c); }

OperatorWord OperatorWord::annihilate_power(int n) {
  OperatorWord w;
  w.append(Ladder::Annihilate, n);
  return w;
}

OperatorWord OperatorWord::create_power(int m) {
  OperatorWord w;
  w.append(Ladder::Create, m);
  return w;
}

OperatorWord& OperatorWord::append(Ladder letter, int count) {
  for (int i = 0; i < count; ++i) letters.push_back(letter);
  return *this;
}

OperatorWord& OperatorWord::append(const OperatorWord& other) {
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

NormalForm NormalForm::single(int dagger_power, int annih_power, BigCoeff coeff) {
  NormalForm f;
  f.add(dagger_power, annih_power, coeff);
  return f;
}

void NormalForm::add(int dagger_power, int annih_power, BigCoeff coeff) {
  if (coeff == 0) return;
  Key key{dagger_power, annih_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& other) {
  for (const auto& [key, coeff] : other.terms_) add(key.first, key.second, coeff);
  return *this;
}

void NormalForm::multiply_annihilate() {
  TermMap out;
  for (const auto& [key, coeff] : terms_) {
    out[{key.first, key.second + 1}] += coeff;
  }
  terms_ = std::move(out);
}

void NormalForm::multiply_create() {
  NormalForm out;
  for (const auto& [key, coeff] : terms_) {
    const auto [i, j] = key;
    if (j > 0) out.add(i, j - 1, coeff * j);
    out.add(i + 1, j, coeff);
  }
  *this = std::move(out);
}

NormalForm normal_order(const OperatorWord& word) {
  if (word.size() > 64) {
    throw WordTooLong("operator word longer than 64 letters");
  }
  NormalForm form = NormalForm::identity();
  for (Ladder letter : word.letters) {
    if (letter == Ladder::Annihilate) {
      form.multiply_annihilate();
    } else {
      form.multiply_create();
    }
  }
  return form;
}

NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs) {
  NormalForm out;
  for (const auto& [lk, lc] : lhs.terms()) {
    const auto [i, j] = lk;
    for (const auto& [rk, rc] : rhs.terms()) {
      const auto [k, l] = rk;
      const int smax = j < k ? j : k;
      BigCoeff contraction = 1;  // s! C(j,s) C(k,s), built incrementally
      for (int s = 0; s <= smax; ++s) {
        if (s > 0) {
          contraction = contraction * (j - s + 1) * (k - s + 1) / s;
        }
        out.add(i + k - s, j + l - s, lc * rc * contraction);
      }
    }
  }
  return out;
}

std::complex<double> coherent_expectation(const NormalForm& form,
                                          std::complex<double> alpha) {
  const std::complex<double> alpha_conj = std::conj(alpha);
  std::complex<double> sum = 0.0;
  for (const auto& [key, coeff] : form.terms()) {
    const auto [i, j] = key;
    std::complex<double> term = to_double(coeff);
    for (int p = 0; p < i; ++p) term *= alpha_conj;
    for (int q = 0; q < j; ++q) term *= alpha;
    sum += term;
  }
  return sum;
}

namespace {

constexpr int kStirlingMax = 30;

const auto& stirling_table() {
  static const auto table = [] {
    std::array<std::array<BigCoeff, kStirlingMax + 1>, kStirlingMax + 1> t{};
    t[0][0] = 1;
    for (int e = 1; e <= kStirlingMax; ++e) {
      for (int f = 1; f <= e; ++f) {
        t[e][f] = static_cast<BigCoeff>(f) * t[e - 1][f] + t[e - 1][f - 1];
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

BigCoeff stirling2(int e, int f) {
  if (e < 0 || f < 0 || e > kStirlingMax || f > kStirlingMax) {
    throw OutOfRange("stirling2 arguments must lie in [0, 30]");
  }
  if (f > e) return 0;
  return stirling_table()[e][f];
}

BigCoeff binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCoeff c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

Rational pochhammer_half(int l) {
  if (l < 2 || l > 30 || l % 2 != 0) {
    throw DomainError("pochhammer_half requires even l in [2, 30]");
  }
  std::int64_t num = 1;
  for (int k = l - 1; k >= 1; k -= 2) num *= k;
  std::int64_t den = std::int64_t{1} << (l / 2);
  return {num, den};
}

}  // namespace qsup
