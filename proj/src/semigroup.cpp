#include "nsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

std::vector<long long> sorted_unique(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_positive(const std::vector<long long>& v, const char* what) {
  for (long long x : v) {
    if (x < 1) {
      throw InvalidArgument(std::string(what) + " must be positive, got " + std::to_string(x));
    }
  }
}

struct Bitmap {
  std::vector<std::uint64_t> w;
  explicit Bitmap(int nbits) : w(bits::words_for(nbits), 0) {}
  bool test(int i) const { return bits::test(w.data(), i); }
  void set(int i) { bits::set(w.data(), i); }
};

}  // namespace

NumericalSemigroup NumericalSemigroup::naturals() {
  return NumericalSemigroup({1}, 0, 1, 0);
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens_in) {
  if (gens_in.empty()) throw EmptyGenerators();
  require_positive(gens_in, "generators");
  std::vector<long long> gens = sorted_unique(gens_in);

  long long d = 0;
  for (long long a : gens) d = std::gcd(d, a);
  if (d != 1) throw NotCofinite(d);
  if (gens.front() == 1) return naturals();

  const int m = static_cast<int>(gens.front());
  // The conductor is found by scanning the closure until m consecutive
  // members appear; the scan window doubles until that happens.
  long long limit = std::max<long long>(256, 4LL * m);
  while (true) {
    limit = std::min(limit, kMaxWindow);
    Bitmap dp(static_cast<int>(limit));
    dp.set(0);
    int run = 0;
    int window = -1;
    for (int x = 1; x < limit; ++x) {
      bool member = false;
      for (long long a : gens) {
        if (a > x) break;
        if (dp.test(x - static_cast<int>(a))) {
          member = true;
          break;
        }
      }
      if (member) {
        dp.set(x);
        if (++run == m) {
          window = x + 1;  // run [x-m+1, x] of m members; conductor = x-m+1
          break;
        }
      } else {
        run = 0;
      }
    }
    if (window < 0) {
      if (limit == kMaxWindow) throw WindowLimit("closure window exceeds 2^31 positions");
      limit *= 2;
      continue;
    }
    const int c = window - m;
    dp.w.resize(bits::words_for(window));
    bits::trim(dp.w.data(), window);
    const int genus = c - bits::popcount_range(dp.w.data(), 0, c);
    return NumericalSemigroup(std::move(dp.w), c, m, genus);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators_with_tail(
    const std::vector<long long>& gens_in, long long tail_start) {
  if (gens_in.empty()) throw EmptyGenerators();
  require_positive(gens_in, "generators");
  if (tail_start < 1) {
    throw InvalidArgument("tail_start must be positive, got " + std::to_string(tail_start));
  }
  std::vector<long long> gens = sorted_unique(gens_in);
  const long long m_ll = std::min(gens.front(), tail_start);
  if (m_ll == 1) return naturals();
  const int m = static_cast<int>(m_ll);
  if (tail_start + m_ll > kMaxWindow) {
    throw WindowLimit("closure window exceeds 2^31 positions");
  }

  const int full = static_cast<int>(tail_start + m_ll);
  Bitmap dp(full);
  dp.set(0);
  for (int x = 1; x < full; ++x) {
    if (x >= tail_start) {
      dp.set(x);
      continue;
    }
    for (long long a : gens) {
      if (a > x) break;
      if (dp.test(x - static_cast<int>(a))) {
        dp.set(x);
        break;
      }
    }
  }
  int c = 0;
  for (int x = static_cast<int>(tail_start) - 1; x >= 1; --x) {
    if (!dp.test(x)) {
      c = x + 1;
      break;
    }
  }
  if (c == 0) return naturals();
  const int window = c + m;
  dp.w.resize(bits::words_for(window));
  bits::trim(dp.w.data(), window);
  const int genus = c - bits::popcount_range(dp.w.data(), 0, c);
  return NumericalSemigroup(std::move(dp.w), c, m, genus);
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<long long>& gaps_in) {
  require_positive(gaps_in, "gaps");
  std::vector<long long> gaps = sorted_unique(gaps_in);
  if (gaps.empty()) return naturals();
  if (gaps.back() + 2 > kMaxWindow) throw WindowLimit("gap window exceeds 2^31 positions");

  const int c = static_cast<int>(gaps.back()) + 1;
  int m = 1;
  {
    std::size_t k = 0;
    while (k < gaps.size() && gaps[k] == m) {
      ++m;
      ++k;
    }
  }
  const int window = c + m;
  Bitmap bm(window);
  for (int i = 0; i < window; ++i) bm.set(i);
  for (long long z : gaps) bits::clear(bm.w.data(), static_cast<int>(z));

  // Closed iff no two members sum to a gap.
  for (long long z : gaps) {
    for (int x = 1; 2 * x <= z; ++x) {
      if (bm.test(x) && bm.test(static_cast<int>(z) - x)) {
        throw NotClosed(x, static_cast<int>(z) - x);
      }
    }
  }
  return NumericalSemigroup(std::move(bm.w), c, m, static_cast<int>(gaps.size()));
}

DepthOffset NumericalSemigroup::depth_offset() const {
  if (conductor_ == 0) return {0, 0};
  const int q = (conductor_ + multiplicity_ - 1) / multiplicity_;
  return {q, q * multiplicity_ - conductor_};
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(genus_);
  for (int x = 1; x < conductor_; ++x) {
    if (!bits::test(words_.data(), x)) out.push_back(x);
  }
  return out;
}

std::vector<int> NumericalSemigroup::left_part() const {
  std::vector<int> out;
  out.reserve(conductor_ - genus_);
  for (int x = bits::next_set(words_.data(), 0, conductor_); x != -1;
       x = bits::next_set(words_.data(), x + 1, conductor_)) {
    out.push_back(x);
  }
  return out;
}

void decomposable_mask(const SemigroupView& v, std::uint64_t* dec) {
  const int win = v.window();
  const int nw = bits::words_for(win);
  std::fill(dec, dec + nw, 0);
  if (v.is_naturals()) return;

  // S* as a scratch mask: members with the zero bit cleared and the window
  // trimmed (owners may keep junk bits past the window).
  std::uint64_t local[8];
  std::vector<std::uint64_t> big;
  std::uint64_t* star;
  if (nw <= 8) {
    star = local;
  } else {
    big.resize(nw);
    star = big.data();
  }
  std::copy(v.words, v.words + nw, star);
  star[0] &= ~std::uint64_t{1};
  bits::trim(star, win);

  const int half = (win - 1) / 2;
  for (int a = bits::next_set(star, v.multiplicity, win); a != -1 && a <= half;
       a = bits::next_set(star, a + 1, win)) {
    bits::or_shifted(dec, star, win, a);
  }
  bits::trim(dec, win);
}

void primitive_mask(const SemigroupView& v, const std::uint64_t* dec, std::uint64_t* prim) {
  const int win = v.window();
  const int nw = bits::words_for(win);
  for (int i = 0; i < nw; ++i) prim[i] = v.words[i] & ~dec[i];
  prim[0] &= ~std::uint64_t{1};
  bits::trim(prim, win);
}

std::vector<int> NumericalSemigroup::primitives() const {
  if (is_naturals()) return {1};
  const int win = window();
  std::vector<std::uint64_t> dec(bits::words_for(win)), prim(bits::words_for(win));
  decomposable_mask(view(), dec.data());
  primitive_mask(view(), dec.data(), prim.data());
  std::vector<int> out;
  for (int x = bits::next_set(prim.data(), 0, win); x != -1;
       x = bits::next_set(prim.data(), x + 1, win)) {
    out.push_back(x);
  }
  return out;
}

int NumericalSemigroup::embedding_dimension() const {
  if (is_naturals()) return 1;
  const int win = window();
  std::vector<std::uint64_t> dec(bits::words_for(win)), prim(bits::words_for(win));
  decomposable_mask(view(), dec.data());
  primitive_mask(view(), dec.data(), prim.data());
  return bits::popcount_range(prim.data(), 0, win);
}

std::vector<int> NumericalSemigroup::decomposables_in(int lo, int hi) const {
  if (lo < 0 || lo > hi || hi > window()) {
    throw InvalidArgument("decomposables_in range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + ") outside [0, " + std::to_string(window()) + "]");
  }
  std::vector<std::uint64_t> dec(bits::words_for(window()));
  decomposable_mask(view(), dec.data());
  std::vector<int> out;
  for (int x = bits::next_set(dec.data(), lo, hi); x != -1;
       x = bits::next_set(dec.data(), x + 1, hi)) {
    out.push_back(x);
  }
  return out;
}

namespace {

std::vector<long long> parse_int_list(std::string_view text, std::size_t base_pos) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw InvalidNotation("expected integer at position " + std::to_string(base_pos + pos) +
                            " in semigroup notation");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

NumericalSemigroup parse_notation(std::string_view text) {
  constexpr std::string_view kGens = "gens=";
  constexpr std::string_view kGaps = "gaps=";
  constexpr std::string_view kTail = ";tail=";
  if (text.substr(0, kGaps.size()) == kGaps) {
    return NumericalSemigroup::from_gaps(parse_int_list(text.substr(kGaps.size()), kGaps.size()));
  }
  if (text.substr(0, kGens.size()) == kGens) {
    std::string_view rest = text.substr(kGens.size());
    std::size_t tail_at = rest.find(kTail);
    if (tail_at == std::string_view::npos) {
      return NumericalSemigroup::from_generators(parse_int_list(rest, kGens.size()));
    }
    auto gens = parse_int_list(rest.substr(0, tail_at), kGens.size());
    auto tail = parse_int_list(rest.substr(tail_at + kTail.size()),
                               kGens.size() + tail_at + kTail.size());
    if (tail.size() != 1) throw InvalidNotation("tail= takes exactly one integer");
    return NumericalSemigroup::from_generators_with_tail(gens, tail.front());
  }
  throw InvalidNotation("notation must start with 'gens=' or 'gaps='");
}

std::string gaps_notation(const std::vector<int>& gaps) {
  std::string out = "gaps=";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gaps[i]);
  }
  return out;
}

std::string gaps_notation(const NumericalSemigroup& s) { return gaps_notation(s.gaps()); }

}  // namespace nsg
