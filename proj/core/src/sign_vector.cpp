#include "xover/sign_vector.hpp"

#include <bit>

#include "xover/error.hpp"

namespace xover {

namespace {

void require_same_length(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw PreconditionError("sign vectors of lengths " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
}

std::uint32_t all_ones(std::size_t n) {
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

}  // namespace

SignVector::SignVector(std::size_t n) : n_(n) {
  if (n > kMaxLength) throw PreconditionError("sign vectors support at most 32 elements");
}

SignVector::SignVector(std::size_t n, std::uint32_t positive, std::uint32_t negative)
    : SignVector(n) {
  if ((positive & negative) != 0 || ((positive | negative) & ~all_ones(n)) != 0) {
    throw PreconditionError("malformed sign vector masks");
  }
  pos_ = positive;
  neg_ = negative;
}

SignVector SignVector::parse(std::string_view text) {
  SignVector out(text.size());
  for (std::size_t e = 0; e < text.size(); ++e) {
    switch (text[e]) {
      case '+': out.pos_ |= std::uint32_t{1} << e; break;
      case '-': out.neg_ |= std::uint32_t{1} << e; break;
      case '0': break;
      default: throw ParseError("expected one of '+', '-', '0'", e);
    }
  }
  return out;
}

void SignVector::set(std::size_t e, Sign s) {
  if (e >= n_) throw PreconditionError("sign vector element out of range");
  const std::uint32_t bit = std::uint32_t{1} << e;
  pos_ &= ~bit;
  neg_ &= ~bit;
  if (s == Sign::plus) pos_ |= bit;
  if (s == Sign::minus) neg_ |= bit;
}

std::size_t SignVector::support_size() const noexcept {
  return static_cast<std::size_t>(std::popcount(support()));
}

bool SignVector::full_support() const noexcept { return support() == all_ones(n_); }

std::string SignVector::to_string() const {
  std::string out(n_, '0');
  for (std::size_t e = 0; e < n_; ++e) {
    if (pos_ >> e & 1) out[e] = '+';
    if (neg_ >> e & 1) out[e] = '-';
  }
  return out;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept {
  const std::size_t common = std::min(a.n_, b.n_);
  for (std::size_t e = 0; e < common; ++e) {
    auto c = static_cast<int>(a[e]) <=> static_cast<int>(b[e]);
    if (c != 0) return c;
  }
  return a.n_ <=> b.n_;
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_length(x, y);
  const auto free = ~x.support();
  return SignVector(x.size(), x.positive() | (y.positive() & free),
                    x.negative() | (y.negative() & free));
}

SignVector negate(const SignVector& x) { return SignVector(x.size(), x.negative(), x.positive()); }

std::vector<std::size_t> separation(const SignVector& x, const SignVector& y) {
  require_same_length(x, y);
  std::vector<std::size_t> out;
  for (auto m = (x.positive() & y.negative()) | (x.negative() & y.positive()); m; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

bool conforms(const SignVector& x, const SignVector& y) {
  require_same_length(x, y);
  return (x.positive() & ~y.positive()) == 0 && (x.negative() & ~y.negative()) == 0;
}

SignVector word_to_sign(const Word& w) {
  if (!w.spec().is_binary()) throw PreconditionError("sign vectors require binary words");
  if (w.length() > SignVector::kMaxLength) {
    throw PreconditionError("sign vectors support at most 32 elements");
  }
  std::uint32_t pos = 0;
  for (std::size_t e = 0; e < w.length(); ++e) pos |= std::uint32_t{w[e]} << e;
  return SignVector(w.length(), pos, all_ones(w.length()) & ~pos);
}

Word sign_to_word(const SignVector& x) {
  if (!x.full_support()) throw PreconditionError("sign vector " + x.to_string() + " has zeros");
  std::vector<Letter> letters(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) letters[e] = x[e] == Sign::plus ? 1 : 0;
  return Word(AlphabetSpec::binary(x.size()), letters);
}

}  // namespace xover
