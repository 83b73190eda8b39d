#include "antipode/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "antipode/errors.hpp"

namespace antipode {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  const auto s = row_span(i);
  return RatVector(s.begin(), s.end());
}

std::vector<RatVector> RatMatrix::row_vectors() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void RatMatrix::set_row(std::size_t i, const RatVector& v) {
  if (v.size() != cols_) throw InputError("set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw InputError("row_block out of range");
  RatMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

RatMatrix RatMatrix::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw InputError("col_block out of range");
  RatMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

bool RatMatrix::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

Int RatMatrix::common_denominator() const {
  Int l = 1;
  for (const auto& e : entries_) {
    const Int d = e.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero()) acc += a(i, k).raw() * b(k, j).raw();
      }
      c(i, j) = Rat(acc);
    }
  }
  return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
  RatMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum: shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference: shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

RatVector operator*(const RatVector& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix product: shape mismatch");
  RatVector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!v[i].is_zero()) acc += v[i].raw() * m(i, j).raw();
    }
    r[j] = Rat(acc);
  }
  return r;
}

RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw InputError("stack: column mismatch");
  RatMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

void write_vector(std::ostream& os, const RatVector& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != 0) os << ' ';
    os << v[j];
  }
}

RatVector parse_vector(const std::string& line) {
  RatVector v;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const auto next = line.find(' ', pos);
    const auto token = line.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (token.empty()) {
      if (next == std::string::npos && pos == line.size() && v.empty()) break;
      throw InputError("malformed vector line: '" + line + "'");
    }
    v.push_back(Rat::parse(token));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return v;
}

void write_matrix(std::ostream& os, const RatMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    write_vector(os, m.row(i));
    os << '\n';
  }
}

RatMatrix read_matrix(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw InputError("matrix: missing header");
  std::istringstream hs(header);
  long rows = -1, cols = -1;
  std::string extra;
  if (!(hs >> rows >> cols) || rows < 0 || cols < 0 || (hs >> extra)) {
    throw InputError("matrix: bad header '" + header + "'");
  }
  RatMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i) {
    std::string line;
    if (!std::getline(is, line)) throw InputError("matrix: missing row " + std::to_string(i));
    const RatVector v = parse_vector(line);
    if (v.size() != static_cast<std::size_t>(cols)) {
      throw InputError("matrix: row " + std::to_string(i) + " has wrong length");
    }
    m.set_row(static_cast<std::size_t>(i), v);
  }
  return m;
}

std::string to_text(const RatMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

RatMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace antipode
