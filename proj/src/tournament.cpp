#include "stepcomp/tournament.hpp"

#include <stdexcept>
#include <string>

namespace stepcomp {

void BipartiteTournament::check_sides(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("partite sets must be nonempty");
  if (m > kMaxSide || n > kMaxSide)
    throw std::invalid_argument("partite set larger than " +
                                std::to_string(kMaxSide) + " is unsupported");
}

BipartiteTournament::BipartiteTournament(int m, int n) : m_(m), n_(n) {
  check_sides(m, n);
  for (int i = 0; i < m; ++i) rows_[i] = 0;
}

BipartiteTournament::BipartiteTournament(int m, int n,
                                         const std::vector<std::uint8_t>& bits)
    : BipartiteTournament(m, n) {
  if (bits.size() != static_cast<std::size_t>(m) * n)
    throw std::invalid_argument(
        "orientation needs " + std::to_string(static_cast<long long>(m) * n) +
        " bits, got " + std::to_string(bits.size()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (bits[static_cast<std::size_t>(i) * n + j])
        rows_[i] |= std::uint64_t{1} << j;
}

BipartiteTournament BipartiteTournament::from_bit_string(
    int m, int n, std::string_view bit_chars) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bit_chars.size());
  for (char c : bit_chars) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("orientation string may contain only 0/1");
    bits.push_back(c == '1');
  }
  return BipartiteTournament(m, n, bits);
}

BipartiteTournament BipartiteTournament::from_code(int m, int n,
                                                   std::uint64_t code) {
  check_sides(m, n);
  if (m * n > 64)
    throw std::invalid_argument("integer codes require m*n <= 64");
  BipartiteTournament t(m, n);
  const std::uint64_t row_mask = bits::low_mask(n);
  for (int i = 0; i < m; ++i) t.rows_[i] = (code >> (i * n)) & row_mask;
  return t;
}

std::uint64_t BipartiteTournament::column_out(int j) const {
  std::uint64_t column = 0;
  for (int i = 0; i < m_; ++i) column |= ((rows_[i] >> j) & 1) << i;
  return ~column & bits::low_mask(m_);
}

std::string BipartiteTournament::bit_string() const {
  std::string s(static_cast<std::size_t>(m_) * n_, '0');
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j)
      if (bit(i, j)) s[static_cast<std::size_t>(i) * n_ + j] = '1';
  return s;
}

std::uint64_t BipartiteTournament::code() const {
  if (m_ * n_ > 64)
    throw std::logic_error("integer codes require m*n <= 64");
  std::uint64_t code = 0;
  for (int i = 0; i < m_; ++i) code |= rows_[i] << (i * n_);
  return code;
}

Digraph BipartiteTournament::to_digraph() const {
  Digraph d(order());
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (bit(i, j))
        d.add_arc(i, m_ + j);
      else
        d.add_arc(m_ + j, i);
    }
  return d;
}

bool BipartiteTournament::operator==(const BipartiteTournament& other) const {
  if (m_ != other.m_ || n_ != other.n_) return false;
  for (int i = 0; i < m_; ++i)
    if (rows_[i] != other.rows_[i]) return false;
  return true;
}

}  // namespace stepcomp
