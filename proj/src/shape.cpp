#include "detkrs/shape.hpp"

#include <numeric>
#include <sstream>

namespace detkrs {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(Errc::InvalidShape, "parts must be positive, got " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Errc::InvalidShape, "parts must be weakly decreasing");
  }
}

Shape Shape::rectangle(int part, int repeats) {
  return Shape(std::vector<int>(static_cast<size_t>(repeats), part));
}

int Shape::part(int i) const {
  if (i < 1) fail(Errc::InvalidShape, "part index is 1-based");
  return i <= num_parts() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

int Shape::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Shape Shape::transpose() const {
  std::vector<int> t;
  for (int j = 1; j <= max_part(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    t.push_back(count);
  }
  return Shape(std::move(t));
}

std::vector<std::pair<int, int>> Shape::primary_exponents() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (!out.empty() && out.back().first == parts_[i]) {
      out.back().second = static_cast<int>(i + 1);
    } else {
      out.emplace_back(parts_[i], static_cast<int>(i + 1));
    }
  }
  return out;
}

std::string Shape::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Shape parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::string trimmed;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty() || trimmed == "-") return Shape();
  std::istringstream is(trimmed);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) fail(Errc::ParseError, "empty part in shape '" + text + "'");
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad shape part '" + tok + "'");
    }
    if (pos != tok.size()) fail(Errc::ParseError, "bad shape part '" + tok + "'");
    parts.push_back(v);
  }
  return Shape(std::move(parts));
}

namespace {
void collect_shapes(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    collect_shapes(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Shape> shapes_of_total(int total, int max_part) {
  std::vector<Shape> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  if (max_part <= 0) return out;
  std::vector<int> acc;
  collect_shapes(total, max_part, acc, out);
  return out;
}

}  // namespace detkrs
