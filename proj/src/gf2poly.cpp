#include "cqca/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "cqca/error.hpp"

namespace cqca {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// out ^= src << shift, where out is already large enough to hold the result.
void xor_into(std::vector<std::uint64_t>& out, const std::vector<std::uint64_t>& src,
              std::size_t shift) {
  const std::size_t wshift = shift / kWordBits;
  const unsigned bshift = unsigned(shift % kWordBits);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::uint64_t w = src[i];
    if (w == 0) continue;
    out[i + wshift] ^= w << bshift;
    if (bshift != 0 && i + wshift + 1 < out.size()) out[i + wshift + 1] ^= w >> (kWordBits - bshift);
  }
}

template <typename F>
void for_each_set_bit(const std::vector<std::uint64_t>& words, F&& f) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      f(i * kWordBits + std::size_t(b));
      w &= w - 1;
    }
  }
}

// Remainder of a modulo b, both with min_deg 0 (ordinary polynomials).
LaurentPoly ordinary_mod(LaurentPoly a, const LaurentPoly& b) {
  const auto db = b.max_deg();
  while (!a.is_zero() && a.max_deg() >= db) a += b.shifted(a.max_deg() - db);
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Exponent k) {
  LaurentPoly p;
  p.words_.assign(1, 1);
  p.nbits_ = 1;
  p.min_deg_ = k;
  return p;
}

LaurentPoly LaurentPoly::from_exponents(std::span<const Exponent> exponents) {
  if (exponents.empty()) return {};
  const auto [lo, hi] = std::minmax_element(exponents.begin(), exponents.end());
  LaurentPoly p;
  p.min_deg_ = *lo;
  p.nbits_ = std::size_t(*hi - *lo) + 1;
  p.words_.assign(words_for(p.nbits_), 0);
  for (auto e : exponents) {
    const auto idx = std::size_t(e - p.min_deg_);
    p.words_[idx / kWordBits] ^= std::uint64_t{1} << (idx % kWordBits);
  }
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_exponents(std::initializer_list<Exponent> exponents) {
  return from_exponents(std::span<const Exponent>(exponents.begin(), exponents.size()));
}

void LaurentPoly::normalize() {
  std::size_t hi_word = words_.size();
  while (hi_word > 0 && words_[hi_word - 1] == 0) --hi_word;
  if (hi_word == 0) {
    words_.clear();
    nbits_ = 0;
    min_deg_ = 0;
    return;
  }
  const std::size_t hi = (hi_word - 1) * kWordBits + std::size_t(63 - std::countl_zero(words_[hi_word - 1]));
  std::size_t lo_word = 0;
  while (words_[lo_word] == 0) ++lo_word;
  const std::size_t lo = lo_word * kWordBits + std::size_t(std::countr_zero(words_[lo_word]));
  if (lo != 0) {
    const std::size_t wshift = lo / kWordBits;
    const unsigned bshift = unsigned(lo % kWordBits);
    for (std::size_t i = 0; i + wshift < hi_word; ++i) {
      std::uint64_t w = words_[i + wshift] >> bshift;
      if (bshift != 0 && i + wshift + 1 < hi_word) w |= words_[i + wshift + 1] << (kWordBits - bshift);
      words_[i] = w;
    }
    min_deg_ += Exponent(lo);
  }
  nbits_ = hi - lo + 1;
  words_.resize(words_for(nbits_));
}

LaurentPoly::Exponent LaurentPoly::min_deg() const {
  if (is_zero()) throw DomainError("zero polynomial");
  return min_deg_;
}

LaurentPoly::Exponent LaurentPoly::max_deg() const {
  if (is_zero()) throw DomainError("zero polynomial");
  return min_deg_ + Exponent(nbits_) - 1;
}

LaurentPoly::Exponent LaurentPoly::max_abs_exponent() const noexcept {
  if (is_zero()) return 0;
  const Exponent hi = min_deg_ + Exponent(nbits_) - 1;
  return std::max(min_deg_ < 0 ? -min_deg_ : min_deg_, hi < 0 ? -hi : hi);
}

bool LaurentPoly::coeff(Exponent k) const noexcept {
  if (k < min_deg_ || k >= min_deg_ + Exponent(nbits_)) return false;
  const auto idx = std::size_t(k - min_deg_);
  return ((words_[idx / kWordBits] >> (idx % kWordBits)) & 1U) != 0;
}

std::size_t LaurentPoly::weight() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += std::size_t(std::popcount(w));
  return n;
}

std::vector<LaurentPoly::Exponent> LaurentPoly::exponents() const {
  std::vector<Exponent> out;
  out.reserve(weight());
  for_each_set_bit(words_, [&](std::size_t i) { out.push_back(min_deg_ + Exponent(i)); });
  return out;
}

bool LaurentPoly::is_centered_palindrome() const {
  if (is_zero()) return true;
  if (min_deg_ != -max_deg()) return false;
  return involution() == *this;
}

LaurentPoly LaurentPoly::involution() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.nbits_ = nbits_;
  r.min_deg_ = -max_deg();
  r.words_.assign(words_.size(), 0);
  for_each_set_bit(words_, [&](std::size_t i) {
    const std::size_t j = nbits_ - 1 - i;
    r.words_[j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  });
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_deg_ += k;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const Exponent base = std::min(min_deg_, other.min_deg_);
  const Exponent top = std::max(max_deg(), other.max_deg());
  std::vector<std::uint64_t> out(words_for(std::size_t(top - base) + 1), 0);
  xor_into(out, words_, std::size_t(min_deg_ - base));
  xor_into(out, other.words_, std::size_t(other.min_deg_ - base));
  words_ = std::move(out);
  min_deg_ = base;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& sparse = a.weight() <= b.weight() ? a : b;
  const LaurentPoly& dense = &sparse == &a ? b : a;
  LaurentPoly r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.nbits_ = a.nbits_ + b.nbits_ - 1;
  r.words_.assign(words_for(r.nbits_), 0);
  for_each_set_bit(sparse.words_, [&](std::size_t i) { xor_into(r.words_, dense.words_, i); });
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

std::size_t overlap_count(const LaurentPoly& a, const LaurentPoly& b) noexcept {
  if (a.is_zero() || b.is_zero()) return 0;
  const LaurentPoly& sparse = a.weight() <= b.weight() ? a : b;
  const LaurentPoly& dense = &sparse == &a ? b : a;
  std::size_t n = 0;
  for_each_set_bit(sparse.words_, [&](std::size_t i) {
    if (dense.coeff(sparse.min_deg_ + LaurentPoly::Exponent(i))) ++n;
  });
  return n;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto e : exponents()) {
    if (!out.empty()) out += '+';
    if (e == 0)
      out += '1';
    else if (e == 1)
      out += 'u';
    else
      out += "u^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::vector<Exponent> exps;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_term = true;
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  while (pos < text.size()) {
    skip_ws();
    if (!expect_term) {
      if (text[pos] != '+') throw ParseError("expected '+'", pos);
      ++pos;
      expect_term = true;
      continue;
    }
    if (pos == text.size()) break;
    const char c = text[pos];
    if (c == '0' || c == '1') {
      ++pos;
      if (c == '1') exps.push_back(0);
    } else if (c == 'u') {
      ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        Exponent k = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec != std::errc{}) throw ParseError("bad exponent", pos);
        pos = std::size_t(ptr - text.data());
        if (braced) {
          if (pos >= text.size() || text[pos] != '}') throw ParseError("expected '}'", pos);
          ++pos;
        }
        exps.push_back(k);
      } else {
        exps.push_back(1);
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    expect_term = false;
    skip_ws();
  }
  if (expect_term) throw ParseError("dangling '+'", pos);
  return from_exponents(exps);
}

LaurentPoly unit_normalized(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  return a.shifted(-a.min_deg());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd undefined");
  LaurentPoly x = unit_normalized(a);
  LaurentPoly y = unit_normalized(b);
  if (!x.is_zero() && !y.is_zero() && x.max_deg() < y.max_deg()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = unit_normalized(ordinary_mod(std::move(x), y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  LaurentPoly r = unit_normalized(a);
  const LaurentPoly d = unit_normalized(b);
  const auto dd = d.max_deg();
  std::vector<LaurentPoly::Exponent> q;
  while (!r.is_zero() && r.max_deg() >= dd) {
    const auto k = r.max_deg() - dd;
    q.push_back(k);
    r += d.shifted(k);
  }
  if (!r.is_zero()) return std::nullopt;
  return LaurentPoly::from_exponents(q).shifted(a.min_deg() - b.min_deg());
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw DomainError("not divisible");
  return *std::move(q);
}

LaurentPoly pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = a;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace cqca
