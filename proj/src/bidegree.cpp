#include "detkrs/bidegree.hpp"

#include <numeric>
#include <sstream>

#include "detkrs/error.hpp"

namespace detkrs {

int Bidegree::row_total() const {
  return std::accumulate(rows.begin(), rows.end(), 0);
}

int Bidegree::col_total() const {
  return std::accumulate(cols.begin(), cols.end(), 0);
}

bool Bidegree::nonnegative() const {
  for (int r : rows)
    if (r < 0) return false;
  for (int c : cols)
    if (c < 0) return false;
  return true;
}

Bidegree Bidegree::minus(const Bidegree& other) const {
  if (rows.size() != other.rows.size() || cols.size() != other.cols.size())
    fail(Errc::LengthMismatch, "bidegree size mismatch");
  Bidegree out = *this;
  for (size_t i = 0; i < rows.size(); ++i) out.rows[i] -= other.rows[i];
  for (size_t j = 0; j < cols.size(); ++j) out.cols[j] -= other.cols[j];
  return out;
}

bool Bidegree::dominates(const Bidegree& other) const {
  return minus(other).nonnegative();
}

std::string Bidegree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) os << ',';
    os << rows[i];
  }
  os << ';';
  for (size_t j = 0; j < cols.size(); ++j) {
    if (j > 0) os << ',';
    os << cols[j];
  }
  os << ')';
  return os.str();
}

namespace {
void collect_compositions(int total, int len, std::vector<int>& acc,
                          std::vector<std::vector<int>>& out) {
  if (len == 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    acc.push_back(v);
    collect_compositions(total - v, len - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> compositions(int total, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> acc;
  collect_compositions(total, len, acc, out);
  return out;
}

std::vector<Bidegree> bidegrees_of_total(int m, int n, int total) {
  std::vector<Bidegree> out;
  for (auto& r : compositions(total, m))
    for (auto& c : compositions(total, n)) out.emplace_back(r, c);
  return out;
}

}  // namespace detkrs
