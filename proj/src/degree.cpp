#include "kgraph/degree.hpp"

#include <algorithm>
#include <cassert>

#include "kgraph/error.hpp"

namespace kg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonComposable: return "non-composable";
    case ErrorCode::BoundsViolated: return "bounds-violated";
    case ErrorCode::RangeMismatch: return "range-mismatch";
    case ErrorCode::UnknownId: return "unknown-id";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NotHereditary: return "not-hereditary";
    case ErrorCode::WindowNotClosed: return "window-not-closed";
    case ErrorCode::NoGrading: return "no-grading";
    case ErrorCode::CapTooLarge: return "cap-too-large";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

bool Degree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::uint64_t Degree::total() const {
  std::uint64_t t = 0;
  for (auto c : coords_) t += c;
  return t;
}

bool Degree::leq(const Degree& other) const {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Degree Degree::join(const Degree& other) const {
  Degree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::max(coords_[i], other.coords_[i]);
  return out;
}

Degree Degree::meet(const Degree& other) const {
  Degree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::min(coords_[i], other.coords_[i]);
  return out;
}

Degree Degree::operator+(const Degree& other) const {
  Degree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.leq(*this))
    throw Error(ErrorCode::BoundsViolated, "degree subtraction underflow");
  Degree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

std::string Degree::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

std::vector<Degree> degrees_between(const Degree& lo, const Degree& hi) {
  std::vector<Degree> out;
  if (!lo.leq(hi)) return out;
  Degree cur = lo;
  const std::size_t k = lo.rank();
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<Degree> degrees_up_to(const Degree& cap) {
  return degrees_between(Degree(cap.rank()), cap);
}

}  // namespace kg
