#include "detkrs/krs.hpp"

#include <algorithm>
#include <sstream>

#include "detkrs/error.hpp"

namespace detkrs {

Monomial diag(const Minor& minor) {
  Monomial out;
  for (int i = 1; i <= minor.size(); ++i)
    out = out * Monomial::variable(minor.row(i), minor.col(i));
  return out;
}

Monomial diag(const Bitableau& bt) {
  Monomial out;
  for (const auto& d : bt.factors()) out = out * diag(d);
  return out;
}

KrsArray::KrsArray(std::vector<KrsColumn> cols) : cols_(std::move(cols)) {
  for (size_t i = 0; i + 1 < cols_.size(); ++i) {
    bool ok = cols_[i].r < cols_[i + 1].r ||
              (cols_[i].r == cols_[i + 1].r && cols_[i].ell >= cols_[i + 1].ell);
    if (!ok)
      throw std::logic_error("krs array violates the two-line ordering at column " +
                             std::to_string(i + 1));
  }
}

Monomial KrsArray::monomial() const {
  Monomial out;
  for (const auto& c : cols_) out = out * Monomial::variable(c.ell, c.r);
  return out;
}

std::string KrsArray::to_string() const {
  std::vector<size_t> width(cols_.size());
  auto digits = [](int v) { return std::to_string(v).size(); };
  for (size_t i = 0; i < cols_.size(); ++i)
    width[i] = std::max({digits(cols_[i].ell), digits(cols_[i].r), digits(cols_[i].rho)});
  std::ostringstream os;
  auto emit = [&](auto field) {
    for (size_t i = 0; i < cols_.size(); ++i) {
      if (i > 0) os << ' ';
      std::string t = std::to_string(field(cols_[i]));
      os << std::string(width[i] - t.size(), ' ') << t;
    }
    os << '\n';
  };
  emit([](const KrsColumn& c) { return c.ell; });
  emit([](const KrsColumn& c) { return c.r; });
  emit([](const KrsColumn& c) { return c.rho; });
  return os.str();
}

KrsStep krs_step(const Bitableau& sigma, const Shape& marks) {
  if (sigma.empty()) fail(Errc::EmptyTableau, "cannot delete from the empty bitableau");
  if (!sigma.is_standard()) fail(Errc::NotStandard, "krs-step requires a standard bitableau");

  std::vector<std::vector<int>> left, right;
  for (const auto& d : sigma.factors()) {
    left.push_back(d.rows());
    right.push_back(d.cols());
  }

  // The largest right entry; rows strictly increase, so it sits at a row end.
  // Pivot is its bottom-most occurrence.
  int r = 0;
  for (const auto& row : right) r = std::max(r, row.back());
  size_t p = 0;
  for (size_t i = 0; i < right.size(); ++i)
    if (right[i].back() == r) p = i;
  size_t q = left[p].size() - 1;

  auto in_region = [&](size_t i, size_t j, int value) {
    int col = static_cast<int>(j) + 1;
    return static_cast<int>(i) < marks.num_parts() &&
           col <= marks.part(static_cast<int>(i) + 1) && value == col;
  };

  int rho = 0;
  int cur = left[p][q];
  if (in_region(p, q, cur)) rho = static_cast<int>(p) + 1;
  left[p].pop_back();
  right[p].pop_back();

  // Push out: the freed entry moves up, each time replacing the largest
  // entry <= it in the row above.
  for (size_t i = p; i-- > 0;) {
    auto it = std::upper_bound(left[i].begin(), left[i].end(), cur);
    if (it == left[i].begin())
      throw std::logic_error("push-out found no entry <= carried value");
    --it;
    int bumped = *it;
    if (bumped < cur && in_region(i, static_cast<size_t>(it - left[i].begin()), bumped)) {
      if (rho != 0)
        fail(Errc::WitnessPreconditionFailed, "multiple row marks in one deletion step");
      rho = static_cast<int>(i) + 1;
    }
    *it = cur;
    cur = bumped;
  }

  std::vector<Minor> rest;
  for (size_t i = 0; i < left.size(); ++i)
    if (!left[i].empty()) rest.emplace_back(left[i], right[i]);
  return {Bitableau(std::move(rest)), cur, r, rho};
}

KrsArray krs_array(const Bitableau& sigma, const Shape& marks) {
  if (!sigma.is_standard()) fail(Errc::NotStandard, "krs requires a standard bitableau");
  if (!marks.empty() && !contains_superstandard(sigma, marks))
    fail(Errc::WitnessPreconditionFailed,
         "bitableau does not contain a superstandard subtableau of shape " +
             marks.to_string());
  std::vector<KrsColumn> cols;
  Bitableau cur = sigma;
  while (!cur.empty()) {
    KrsStep step = krs_step(cur, marks);
    cols.push_back({step.ell, step.r, step.rho});
    cur = std::move(step.rest);
  }
  std::reverse(cols.begin(), cols.end());
  return KrsArray(std::move(cols));
}

Monomial krs(const Bitableau& sigma) { return krs_array(sigma).monomial(); }

Bitableau krs_insert(const Monomial& mono) {
  std::vector<std::pair<int, int>> pairs;  // (ell, r)
  for (const auto& f : mono.factors())
    for (int e = 0; e < f.exp; ++e) pairs.emplace_back(f.row, f.col);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first > b.first;
  });

  std::vector<std::vector<int>> left, right;
  for (const auto& [ell, r] : pairs) {
    int v = ell;
    size_t p = 0;
    while (true) {
      if (p == left.size()) {
        left.push_back({v});
        right.push_back({r});
        break;
      }
      auto it = std::lower_bound(left[p].begin(), left[p].end(), v);
      if (it == left[p].end()) {
        left[p].push_back(v);
        right[p].push_back(r);
        break;
      }
      std::swap(*it, v);
      ++p;
    }
  }

  for (size_t i = 0; i + 1 < left.size(); ++i)
    if (left[i].size() < left[i + 1].size())
      throw std::logic_error("insertion produced an invalid shape");
  std::vector<Minor> factors;
  for (size_t i = 0; i < left.size(); ++i) factors.emplace_back(left[i], right[i]);
  Bitableau out(std::move(factors));
  if (!out.is_standard()) throw std::logic_error("insertion produced a non-standard bitableau");
  return out;
}

Bitableau extract_witness(const Bitableau& sigma, const Shape& s, int m, int n) {
  if (!contains_superstandard(sigma, s, m, n))
    fail(Errc::WitnessPreconditionFailed,
         "bitableau does not contain a superstandard subtableau of shape " + s.to_string());
  KrsArray arr = krs_array(sigma, s);

  std::vector<Minor> factors;
  for (int k = 1; k <= s.num_parts(); ++k) {
    std::vector<int> ells, rs;
    for (const auto& c : arr.columns()) {
      if (c.rho == k) {
        ells.push_back(c.ell);
        rs.push_back(c.r);
      }
    }
    if (static_cast<int>(ells.size()) != s.part(k))
      throw std::logic_error("row mark " + std::to_string(k) + " fired " +
                             std::to_string(ells.size()) + " times, expected " +
                             std::to_string(s.part(k)));
    for (size_t j = 0; j < ells.size(); ++j) {
      if (ells[j] != static_cast<int>(j) + 1)
        throw std::logic_error("marked subarray first row is not 1..s in order");
      if (j > 0 && rs[j] <= rs[j - 1])
        throw std::logic_error("marked subarray second row is not strictly increasing");
    }
    std::vector<int> rows(ells.begin(), ells.end());
    factors.emplace_back(std::move(rows), std::move(rs));
  }
  return Bitableau(std::move(factors));
}

}  // namespace detkrs
