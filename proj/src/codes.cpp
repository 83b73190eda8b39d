#include "antipode/codes.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "antipode/errors.hpp"

namespace antipode {

namespace {

std::uint8_t inverse_mod(std::uint8_t a, int q) {
  // GF(2) and GF(3): every nonzero element is its own inverse.
  (void)q;
  return a;
}

// Gaussian elimination over GF(q); returns rank and pivot columns, rows reduced in place.
std::size_t eliminate(int q, std::vector<Word>& rows, std::vector<std::size_t>* pivots) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < rows.size(); ++j) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][j] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const std::uint8_t inv = inverse_mod(rows[r][j], q);
    for (auto& x : rows[r]) x = static_cast<std::uint8_t>((x * inv) % q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][j] == 0) continue;
      const int f = rows[i][j];
      for (std::size_t c = 0; c < n; ++c) {
        rows[i][c] = static_cast<std::uint8_t>(((rows[i][c] - f * rows[r][c]) % q + q) % q);
      }
    }
    if (pivots) pivots->push_back(j);
    ++r;
  }
  return r;
}

void check_word(const LinearCode& code, std::span<const std::uint8_t> word) {
  if (word.size() != code.length()) throw InputError("word has the wrong length");
  for (auto x : word) {
    if (x >= code.field_size()) throw InputError("word entry outside GF(q)");
  }
}

// Polynomial product modulo x^n - 1 over GF(3).
Word cyclic_product(const Word& a, const Word& b) {
  const std::size_t n = a.size();
  std::vector<int> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] += a[i] * b[j];
  }
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(c[i] % 3);
  return out;
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1;
  long base = a;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

std::uint8_t to_gf3(int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

}  // namespace

LinearCode::LinearCode(int field_size, std::vector<Word> generator)
    : q_(field_size), n_(generator.empty() ? 0 : generator.front().size()), generator_(std::move(generator)) {
  if (q_ != 2 && q_ != 3) throw InputError("only GF(2) and GF(3) codes are supported");
  for (const auto& row : generator_) {
    if (row.size() != n_) throw InputError("generator rows have different lengths");
    for (auto x : row) {
      if (x >= q_) throw InputError("generator entry outside GF(q)");
    }
  }
  if (rank_mod(q_, generator_) != generator_.size()) throw InputError("generator rows are dependent");
}

std::size_t rank_mod(int q, const std::vector<Word>& rows) {
  std::vector<Word> copy = rows;
  return eliminate(q, copy, nullptr);
}

LinearCode golay24() {
  const int g[] = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};  // coefficients of x^0..x^11
  std::vector<Word> rows;
  for (std::size_t shift = 0; shift < 12; ++shift) {
    Word w(24, 0);
    int parity = 0;
    for (std::size_t i = 0; i < 12; ++i) {
      w[shift + i] = static_cast<std::uint8_t>(g[i]);
      parity ^= g[i];
    }
    w[23] = static_cast<std::uint8_t>(parity);
    rows.push_back(std::move(w));
  }
  return LinearCode(2, std::move(rows));
}

LinearCode ternary_qr48() {
  constexpr long p = 47;
  // Idempotents a + b * sum_{QR} x^r + c * sum_{NQR} x^n; the two of dimension
  // 24 generate the quadratic-residue codes. Take the first in (a, b, c) order.
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        Word e(p, 0);
        e[0] = static_cast<std::uint8_t>(a);
        for (long i = 1; i < p; ++i) e[i] = static_cast<std::uint8_t>(legendre(i, p) == 1 ? b : c);
        if (cyclic_product(e, e) != e) continue;
        std::vector<Word> shifts;
        for (long s = 0; s < p; ++s) {
          Word w(p);
          for (long i = 0; i < p; ++i) w[(i + s) % p] = e[i];
          shifts.push_back(std::move(w));
        }
        std::vector<Word> reduced = shifts;
        const std::size_t r = eliminate(3, reduced, nullptr);
        if (r != 24) continue;
        reduced.resize(r);
        for (int gamma : {1, 2}) {
          std::vector<Word> extended;
          for (const auto& row : reduced) {
            Word w = row;
            int sum = 0;
            for (auto x : row) sum += x;
            w.push_back(to_gf3(gamma * sum));
            extended.push_back(std::move(w));
          }
          LinearCode code(3, extended);
          if (is_self_orthogonal(code)) return code;
        }
      }
    }
  }
  throw MathError("no self-dual extended quadratic-residue code found");
}

LinearCode pless_symmetry48() {
  constexpr long q = 23;
  const std::size_t half = q + 1;
  std::vector<Word> rows(half, Word(2 * half, 0));
  for (std::size_t i = 0; i < half; ++i) {
    rows[i][i] = 1;
    for (std::size_t j = 0; j < half; ++j) {
      int s = 0;
      if (i == 0 && j == 0) {
        s = 0;
      } else if (i == 0) {
        s = 1;
      } else if (j == 0) {
        s = legendre(-1, q);
      } else {
        s = legendre(static_cast<long>(j) - static_cast<long>(i), q);
      }
      rows[i][half + j] = to_gf3(s);
    }
  }
  return LinearCode(3, std::move(rows));
}

Word encode(const LinearCode& code, std::span<const std::uint8_t> message) {
  if (message.size() != code.dimension()) throw InputError("message has the wrong length");
  const int q = code.field_size();
  std::vector<int> acc(code.length(), 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i] >= q) throw InputError("message entry outside GF(q)");
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < code.length(); ++j) acc[j] += message[i] * code.generator()[i][j];
  }
  Word w(code.length());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<std::uint8_t>(acc[j] % q);
  return w;
}

bool contains(const LinearCode& code, std::span<const std::uint8_t> word) {
  check_word(code, word);
  std::vector<Word> rows = code.generator();
  rows.emplace_back(word.begin(), word.end());
  return rank_mod(code.field_size(), rows) == code.dimension();
}

std::size_t weight(std::span<const std::uint8_t> word) {
  std::size_t w = 0;
  for (auto x : word) w += (x != 0);
  return w;
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto& g = code.generator();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      int s = 0;
      for (std::size_t c = 0; c < code.length(); ++c) s += g[i][c] * g[j][c];
      if (s % code.field_size() != 0) return false;
    }
  }
  return true;
}

std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& code) {
  const std::size_t k = code.dimension();
  if (k > 20) throw InputError("weight_distribution: dimension too large for exhaustive enumeration");
  std::map<std::size_t, std::uint64_t> dist;
  Word message(k, 0);
  while (true) {
    ++dist[weight(encode(code, message))];
    std::size_t i = 0;
    while (i < k && ++message[i] == code.field_size()) message[i++] = 0;
    if (i == k) break;
  }
  return dist;
}

SystematicForm systematic_form(const LinearCode& code) {
  SystematicForm out;
  out.rows = code.generator();
  eliminate(code.field_size(), out.rows, &out.info_set);
  return out;
}

FullWeightCensus full_weight_census(const LinearCode& code) {
  if (code.field_size() != 3) throw InputError("full_weight_census needs a ternary code");
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  if (k > 30) throw InputError("full_weight_census: dimension too large");
  const SystematicForm sys = systematic_form(code);
  std::vector<bool> is_info(n, false);
  for (auto c : sys.info_set) is_info[c] = true;
  std::vector<std::size_t> redundant;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_info[c]) redundant.push_back(c);
  }
  const std::size_t rcount = redundant.size();
  // Redundancy rows as small arrays for the inner loop.
  std::vector<std::vector<std::uint8_t>> red(k, std::vector<std::uint8_t>(rcount));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rcount; ++j) red[i][j] = sys.rows[i][redundant[j]];

  // Start from message (1, ..., 1); Gray-code steps toggle one symbol between 1 and 2.
  std::vector<std::uint8_t> word(rcount, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rcount; ++j) word[j] = static_cast<std::uint8_t>((word[j] + red[i][j]) % 3);
  std::vector<std::uint8_t> msg(k, 1);
  std::size_t info_twos = 0;

  FullWeightCensus census;
  auto tally = [&] {
    std::size_t twos = info_twos;
    for (auto x : word) {
      if (x == 0) return;
      twos += (x == 2);
    }
    if (twos % 2 == 0) {
      ++census.even_twos;
    } else {
      ++census.odd_twos;
    }
  };
  tally();
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(step));
    const auto& row = red[i];
    if (msg[i] == 1) {  // 1 -> 2: add the row
      msg[i] = 2;
      ++info_twos;
      for (std::size_t j = 0; j < rcount; ++j) {
        const std::uint8_t s = static_cast<std::uint8_t>(word[j] + row[j]);
        word[j] = s >= 3 ? static_cast<std::uint8_t>(s - 3) : s;
      }
    } else {  // 2 -> 1: subtract the row
      msg[i] = 1;
      --info_twos;
      for (std::size_t j = 0; j < rcount; ++j) {
        const std::uint8_t s = static_cast<std::uint8_t>(word[j] + 3 - row[j]);
        word[j] = s >= 3 ? static_cast<std::uint8_t>(s - 3) : s;
      }
    }
    tally();
  }
  return census;
}

void write_code(std::ostream& os, const LinearCode& code) {
  os << code.field_size() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& row : code.generator()) {
    for (auto x : row) os << static_cast<char>('0' + x);
    os << '\n';
  }
}

LinearCode read_code(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("code: missing header");
  std::istringstream hs(line);
  int q = 0;
  long n = -1, k = -1;
  if (!(hs >> q >> n >> k) || n < 0 || k < 0) throw InputError("code: bad header '" + line + "'");
  std::vector<Word> rows;
  for (long i = 0; i < k; ++i) {
    if (!std::getline(is, line) || line.size() != static_cast<std::size_t>(n)) {
      throw InputError("code: bad generator row " + std::to_string(i));
    }
    Word w(line.size());
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] < '0' || line[j] > '9') throw InputError("code: non-digit in generator row");
      w[j] = static_cast<std::uint8_t>(line[j] - '0');
    }
    rows.push_back(std::move(w));
  }
  LinearCode code(q, std::move(rows));
  if (code.length() != static_cast<std::size_t>(n)) throw InputError("code: length mismatch");
  return code;
}

}  // namespace antipode
