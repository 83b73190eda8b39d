#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace antipode {

using Word = std::vector<std::uint8_t>;

/// Linear code over GF(2) or GF(3) given by a full-rank generator matrix.
class LinearCode {
 public:
  LinearCode(int field_size, std::vector<Word> generator);

  int field_size() const { return q_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generator_.size(); }
  const std::vector<Word>& generator() const { return generator_; }

 private:
  int q_;
  std::size_t n_;
  std::vector<Word> generator_;
};

/// Extended binary Golay code [24, 12, 8], generated by the cyclic shifts of
/// 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11 with an overall parity bit.
LinearCode golay24();
/// Extended ternary quadratic-residue code of length 48 (residues mod 47).
LinearCode ternary_qr48();
/// Pless symmetry code of length 48, [I | S] with S the bordered Jacobsthal matrix for 23.
LinearCode pless_symmetry48();

/// Rank over GF(q) of the given rows.
std::size_t rank_mod(int q, const std::vector<Word>& rows);
/// message * generator over GF(q).
Word encode(const LinearCode& code, std::span<const std::uint8_t> message);
/// Membership by solving over GF(q). Throws InputError for malformed words.
bool contains(const LinearCode& code, std::span<const std::uint8_t> word);
std::size_t weight(std::span<const std::uint8_t> word);
/// Every pair of generator rows (including a row with itself) is orthogonal mod q.
bool is_self_orthogonal(const LinearCode& code);
/// Weight -> count over all q^k codewords. Intended for small k.
std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& code);

/// Systematic generator: generator rows restricted to `info_set` form the identity.
struct SystematicForm {
  std::vector<std::size_t> info_set;
  std::vector<Word> rows;
};
SystematicForm systematic_form(const LinearCode& code);

/// Full-weight codewords of a ternary code, split by the parity of the number
/// of coordinates equal to 2.
struct FullWeightCensus {
  std::uint64_t even_twos = 0;
  std::uint64_t odd_twos = 0;
};
/// Exhaustive over the 2^k nonzero patterns on an information set.
FullWeightCensus full_weight_census(const LinearCode& code);

/// Code file: `q n k` header then k generator rows written as digit strings.
void write_code(std::ostream& os, const LinearCode& code);
LinearCode read_code(std::istream& is);

}  // namespace antipode
