#include "xover/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "xover/error.hpp"

namespace xover {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kMaxAlphabet = std::uint64_t{std::numeric_limits<Letter>::max()} + 1;

std::uint64_t parse_unsigned(std::string_view text, std::size_t offset) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    std::size_t bad = ec == std::errc{} ? static_cast<std::size_t>(ptr - first) : 0;
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'",
                     offset + bad);
  }
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits on commas, reporting each field's offset in the original text.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t offset = start;
    fields.emplace_back(trim(text.substr(start, end - start), offset), offset);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

AlphabetSpec::AlphabetSpec(std::vector<std::uint32_t> sizes) {
  if (sizes.empty()) throw PreconditionError("alphabet spec needs at least one position");
  auto impl = std::make_shared<Impl>();
  impl->weights.assign(sizes.size(), 1);
  Wide total = 1;
  for (std::size_t i = sizes.size(); i-- > 0;) {
    std::uint32_t a = sizes[i];
    if (a < 2 || a > kMaxAlphabet) {
      throw PreconditionError("alphabet size at position " + std::to_string(i + 1) +
                              " must lie in [2, " + std::to_string(kMaxAlphabet) + "], got " +
                              std::to_string(a));
    }
    impl->weights[i] = static_cast<std::uint64_t>(total);
    total *= a;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw Error("space too large: total size exceeds 2^64 - 1");
    }
    impl->binary = impl->binary && a == 2;
    impl->compact = impl->compact && a <= 10;
  }
  impl->total = static_cast<std::uint64_t>(total);
  impl->sizes = std::move(sizes);
  impl_ = std::move(impl);
}

AlphabetSpec AlphabetSpec::binary(std::size_t n) { return uniform(n, 2); }

AlphabetSpec AlphabetSpec::uniform(std::size_t n, std::uint32_t a) {
  return AlphabetSpec(std::vector<std::uint32_t>(n, a));
}

AlphabetSpec AlphabetSpec::parse(std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty alphabet spec", offset);
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    std::size_t base_offset = offset;
    std::size_t exp_offset = offset + caret + 1;
    auto base = parse_unsigned(trim(text.substr(0, caret), base_offset), base_offset);
    auto exponent = parse_unsigned(trim(text.substr(caret + 1), exp_offset), exp_offset);
    if (base < 2 || base > kMaxAlphabet) throw ParseError("alphabet size out of range", offset);
    if (exponent < 1 || exponent > 4096) throw ParseError("length out of range", exp_offset);
    return uniform(static_cast<std::size_t>(exponent), static_cast<std::uint32_t>(base));
  }
  std::vector<std::uint32_t> sizes;
  for (auto [field, field_offset] : split_commas(text)) {
    auto a = parse_unsigned(field, offset + field_offset);
    if (a < 2 || a > kMaxAlphabet) {
      throw ParseError("alphabet size out of range", offset + field_offset);
    }
    sizes.push_back(static_cast<std::uint32_t>(a));
  }
  return AlphabetSpec(std::move(sizes));
}

std::uint64_t AlphabetSpec::index_of(const Word& w) const {
  if (!(w.spec() == *this)) throw IncompatibleWords();
  std::uint64_t index = 0;
  const auto& weights = impl_->weights;
  for (std::size_t i = 0; i < weights.size(); ++i) index += weights[i] * w[i];
  return index;
}

Word AlphabetSpec::word_at(std::uint64_t index) const {
  if (index >= impl_->total) {
    throw PreconditionError("word index " + std::to_string(index) + " outside space of size " +
                            std::to_string(impl_->total));
  }
  Word::Letters letters(impl_->sizes.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    letters[i] = static_cast<Letter>(index / impl_->weights[i]);
    index %= impl_->weights[i];
  }
  return Word(*this, std::move(letters), Word::Unchecked{});
}

std::string AlphabetSpec::to_string() const {
  const auto& s = impl_->sizes;
  if (std::all_of(s.begin(), s.end(), [&](auto a) { return a == s.front(); })) {
    return std::to_string(s.front()) + "^" + std::to_string(s.size());
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Word::Word(AlphabetSpec spec, std::span<const Letter> letters)
    : spec_(std::move(spec)), letters_(letters.begin(), letters.end()) {
  if (letters_.size() != spec_.length()) {
    throw PreconditionError("word length " + std::to_string(letters_.size()) +
                            " does not match alphabet spec length " +
                            std::to_string(spec_.length()));
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= spec_.alphabet_size(i)) {
      throw PreconditionError("letter " + std::to_string(letters_[i]) + " at position " +
                              std::to_string(i + 1) + " outside alphabet of size " +
                              std::to_string(spec_.alphabet_size(i)));
    }
  }
}

Word Word::parse(const AlphabetSpec& spec, std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  Letters letters;
  std::vector<std::size_t> offsets;
  if (!spec.is_compact() || text.find(',') != std::string_view::npos) {
    for (auto [field, field_offset] : split_commas(text)) {
      auto v = parse_unsigned(field, offset + field_offset);
      if (v > std::numeric_limits<Letter>::max()) {
        throw ParseError("letter out of range", offset + field_offset);
      }
      letters.push_back(static_cast<Letter>(v));
      offsets.push_back(offset + field_offset);
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') throw ParseError(std::string("invalid letter '") + c + "'", offset + i);
      letters.push_back(static_cast<Letter>(c - '0'));
      offsets.push_back(offset + i);
    }
  }
  if (letters.size() != spec.length()) {
    throw ParseError("word '" + std::string(text) + "' has length " +
                         std::to_string(letters.size()) + ", spec " + spec.to_string() +
                         " expects " + std::to_string(spec.length()),
                     offset + std::min(letters.size(), spec.length()));
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= spec.alphabet_size(i)) {
      throw ParseError("letter " + std::to_string(letters[i]) + " outside alphabet of size " +
                           std::to_string(spec.alphabet_size(i)),
                       offsets[i]);
    }
  }
  return Word(spec, std::move(letters), Unchecked{});
}

Word Word::zeros(const AlphabetSpec& spec) { return filled(spec, 0); }

Word Word::filled(const AlphabetSpec& spec, Letter letter) {
  Letters letters(spec.length(), letter);
  return Word(spec, std::span<const Letter>(letters.data(), letters.size()));
}

std::string Word::to_string() const {
  std::string out;
  if (spec_.is_compact()) {
    out.reserve(letters_.size());
    for (Letter l : letters_) out += static_cast<char>('0' + l);
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  auto c = std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  if (c != 0) return c;
  const auto& sa = a.spec_.sizes();
  const auto& sb = b.spec_.sizes();
  return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
}

void require_compatible(const Word& x, const Word& y) {
  if (!(x.spec() == y.spec())) throw IncompatibleWords();
}

std::size_t hamming_distance(const Word& x, const Word& y) {
  require_compatible(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.length(); ++i) d += x[i] != y[i];
  return d;
}

std::vector<std::size_t> differing_positions(const Word& x, const Word& y) {
  require_compatible(x, y);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (x[i] != y[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t binomial(unsigned n, unsigned i) {
  if (i > n) return 0;
  i = std::min(i, n - i);
  Wide value = 1;
  for (unsigned j = 1; j <= i; ++j) {
    value = value * (n - i + j) / j;
    if (value > std::numeric_limits<std::uint64_t>::max()) {
      throw Error("binomial(" + std::to_string(n) + ", " + std::to_string(i) +
                  ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t phi(unsigned h, unsigned n) {
  Wide sum = 0;
  for (unsigned i = 0; i <= std::min(h, n); ++i) {
    sum += binomial(n, i);
    if (sum > std::numeric_limits<std::uint64_t>::max()) {
      throw Error("phi(" + std::to_string(h) + ", " + std::to_string(n) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(sum);
}

}  // namespace xover
