#include "detkrs/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace detkrs {

Minor::Minor(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.size() != cols_.size())
    fail(Errc::LengthMismatch, "row and column lists differ in length");
  for (const auto* v : {&rows_, &cols_}) {
    for (size_t i = 0; i < v->size(); ++i) {
      if ((*v)[i] < 1) fail(Errc::IndexOutOfRange, "indices are 1-based");
      if (i > 0 && (*v)[i] <= (*v)[i - 1])
        fail(Errc::NonIncreasingIndices, "index lists must strictly increase");
    }
  }
}

std::string Minor::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) os << ' ';
    os << rows_[i];
  }
  os << '|';
  for (size_t i = 0; i < cols_.size(); ++i) {
    if (i > 0) os << ' ';
    os << cols_[i];
  }
  os << ']';
  return os.str();
}

bool minor_leq(const Minor& a, const Minor& b) {
  if (a.size() < b.size()) return false;
  for (int i = 1; i <= b.size(); ++i)
    if (a.row(i) > b.row(i) || a.col(i) > b.col(i)) return false;
  return true;
}

Bitableau::Bitableau(std::vector<Minor> factors) : factors_(std::move(factors)) {
  // Identity factors [|] are accepted as padding and dropped.
  std::erase_if(factors_, [](const Minor& d) { return d.empty(); });
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const Minor& a, const Minor& b) { return a.size() > b.size(); });
}

bool Bitableau::empty() const { return factors_.empty(); }

Shape Bitableau::shape() const {
  std::vector<int> parts;
  for (const auto& d : factors_) parts.push_back(d.size());
  return Shape(std::move(parts));
}

int Bitableau::total_boxes() const {
  int t = 0;
  for (const auto& d : factors_) t += d.size();
  return t;
}

Bidegree Bitableau::content(int m, int n) const {
  Bidegree b(std::vector<int>(static_cast<size_t>(m), 0),
             std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& d : factors_) {
    for (int r : d.rows()) {
      if (r > m) fail(Errc::IndexOutOfRange, "row index exceeds ambient");
      b.rows[static_cast<size_t>(r - 1)]++;
    }
    for (int c : d.cols()) {
      if (c > n) fail(Errc::IndexOutOfRange, "column index exceeds ambient");
      b.cols[static_cast<size_t>(c - 1)]++;
    }
  }
  return b;
}

bool Bitableau::is_standard() const {
  for (size_t i = 0; i + 1 < factors_.size(); ++i)
    if (!minor_leq(factors_[i], factors_[i + 1])) return false;
  return true;
}

Bitableau Bitableau::canonical() const {
  std::vector<Minor> sorted = factors_;
  std::sort(sorted.begin(), sorted.end());
  return Bitableau(std::move(sorted));
}

std::string Bitableau::to_string() const {
  if (factors_.empty()) return "[|]";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << '*';
    os << factors_[i].to_string();
  }
  return os.str();
}

bool contains_superstandard(const Bitableau& sigma, const Shape& s, int m, int n) {
  if (s.max_part() > std::min(m, n))
    fail(Errc::ShapeExceedsAmbient, "shape part exceeds min(m,n)");
  return contains_superstandard(sigma, s);
}

bool contains_superstandard(const Bitableau& sigma, const Shape& s) {
  if (sigma.num_factors() < s.num_parts()) return false;
  for (int i = 1; i <= s.num_parts(); ++i) {
    const Minor& d = sigma.factors()[static_cast<size_t>(i - 1)];
    if (d.size() < s.part(i)) return false;
    for (int j = 1; j <= s.part(i); ++j)
      if (d.row(j) != j) return false;
  }
  return true;
}

void check_ambient(const Minor& minor, int m, int n) {
  for (int r : minor.rows())
    if (r > m) fail(Errc::IndexOutOfRange, "row index " + std::to_string(r) +
                                               " exceeds m=" + std::to_string(m));
  for (int c : minor.cols())
    if (c > n) fail(Errc::IndexOutOfRange, "column index " + std::to_string(c) +
                                               " exceeds n=" + std::to_string(n));
}

void check_ambient(const Bitableau& bt, int m, int n) {
  for (const auto& d : bt.factors()) check_ambient(d, m, n);
}

namespace {

using Filling = std::vector<std::vector<int>>;

// Fillings of the given shape with entries in 1..maxval, rows strictly
// increasing, columns weakly increasing downward, and prescribed value
// multiplicities.
void collect_fillings(const Shape& shape, int maxval, std::vector<int>& remaining,
                      Filling& acc, int i, int j, std::vector<Filling>& out) {
  if (i == shape.num_parts()) {
    out.push_back(acc);
    return;
  }
  int len = shape.part(i + 1);
  if (j == len) {
    collect_fillings(shape, maxval, remaining, acc, i + 1, 0, out);
    return;
  }
  int lo = 1;
  if (j > 0) lo = std::max(lo, acc[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] + 1);
  if (i > 0) lo = std::max(lo, acc[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
  int hi = maxval - (len - j - 1);
  for (int v = lo; v <= hi; ++v) {
    if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
    remaining[static_cast<size_t>(v - 1)]--;
    acc[static_cast<size_t>(i)].push_back(v);
    collect_fillings(shape, maxval, remaining, acc, i, j + 1, out);
    acc[static_cast<size_t>(i)].pop_back();
    remaining[static_cast<size_t>(v - 1)]++;
  }
}

std::vector<Filling> fillings(const Shape& shape, int maxval,
                              const std::vector<int>& content) {
  std::vector<Filling> out;
  std::vector<int> remaining = content;
  Filling acc(static_cast<size_t>(shape.num_parts()));
  collect_fillings(shape, maxval, remaining, acc, 0, 0, out);
  return out;
}

}  // namespace

std::vector<Bitableau> enumerate_standard(int m, int n, const Bidegree& content,
                                          long long cap) {
  std::vector<Bitableau> out;
  if (!content.nonnegative() || !content.balanced()) return out;
  if (static_cast<int>(content.rows.size()) != m ||
      static_cast<int>(content.cols.size()) != n)
    fail(Errc::LengthMismatch, "content does not match ambient size");
  int d = content.total();
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  for (const Shape& shape : shapes_of_total(d, std::min(m, n))) {
    auto lefts = fillings(shape, m, content.rows);
    if (lefts.empty()) continue;
    auto rights = fillings(shape, n, content.cols);
    for (const auto& left : lefts) {
      for (const auto& right : rights) {
        std::vector<Minor> factors;
        for (int i = 0; i < shape.num_parts(); ++i)
          factors.emplace_back(left[static_cast<size_t>(i)],
                               right[static_cast<size_t>(i)]);
        out.emplace_back(std::move(factors));
        if (static_cast<long long>(out.size()) > cap)
          fail(Errc::DegreeBoundExceeded,
               "enumeration cap " + std::to_string(cap) + " exceeded");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  int v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof())
    fail(Errc::ParseError, "bad index list '" + text + "'");
  return out;
}
}  // namespace

Minor parse_minor(const std::string& text) {
  size_t lb = text.find('[');
  size_t bar = text.find('|');
  size_t rb = text.find(']');
  if (lb == std::string::npos || bar == std::string::npos || rb == std::string::npos ||
      !(lb < bar && bar < rb))
    fail(Errc::ParseError, "expected '[rows|cols]', got '" + text + "'");
  auto rows = parse_index_list(text.substr(lb + 1, bar - lb - 1));
  auto cols = parse_index_list(text.substr(bar + 1, rb - bar - 1));
  return Minor(std::move(rows), std::move(cols));
}

Bitableau parse_bitableau(const std::string& text) {
  std::vector<Minor> factors;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string piece =
        star == std::string::npos ? text.substr(pos) : text.substr(pos, star - pos);
    bool blank = true;
    for (char c : piece)
      if (!isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) factors.push_back(parse_minor(piece));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Bitableau(std::move(factors));
}

}  // namespace detkrs
