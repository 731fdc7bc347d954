#include "nulltree/vertex_vector.hpp"

#include <algorithm>

#include "nulltree/error.hpp"

namespace nulltree {

VertexVector::VertexVector(std::vector<VertexId> domain)
    : domain_(std::move(domain)) {
  std::sort(domain_.begin(), domain_.end());
  entries_.assign(domain_.size(), Rational(0));
}

VertexVector VertexVector::unit(const Tree& t, VertexId v) {
  VertexVector x(t);
  x.set(v, 1);
  return x;
}

VertexVector VertexVector::indicator(const Tree& t,
                                     std::span<const VertexId> u) {
  VertexVector x(t);
  for (VertexId v : u) x.set(v, 1);
  return x;
}

bool VertexVector::has(VertexId v) const {
  return std::binary_search(domain_.begin(), domain_.end(), v);
}

std::size_t VertexVector::index_of(VertexId v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v) {
    throw Error(ErrorCode::kVertexNotFound,
                "vertex " + std::to_string(v) + " outside the vector domain");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

const Rational& VertexVector::operator[](VertexId v) const {
  return entries_[index_of(v)];
}

void VertexVector::set(VertexId v, const Rational& value) {
  entries_[index_of(v)] = value;
}

std::vector<VertexId> VertexVector::support() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (sgn(entries_[i]) != 0) out.push_back(domain_[i]);
  }
  return out;
}

bool VertexVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool VertexVector::is_signed_unit() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) {
    return sgn(q) == 0 || q == 1 || q == -1;
  });
}

VertexVector& VertexVector::operator+=(const VertexVector& other) {
  if (domain_ != other.domain_) {
    throw Error(ErrorCode::kDomainMismatch, "vector sum over different domains");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

VertexVector& VertexVector::operator-=(const VertexVector& other) {
  if (domain_ != other.domain_) {
    throw Error(ErrorCode::kDomainMismatch,
                "vector difference over different domains");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

VertexVector& VertexVector::operator*=(const Rational& scale) {
  for (auto& q : entries_) q *= scale;
  return *this;
}

std::string VertexVector::debug_string() const {
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (sgn(entries_[i]) == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(domain_[i]) + ":" + entries_[i].get_str();
  }
  return out + ")";
}

VertexVector restrict_to(const VertexVector& x, const Tree& s) {
  VertexVector out(s);
  for (std::size_t i = 0; i < s.order(); ++i) {
    VertexId v = s.vertex(i);
    if (!x.has(v)) {
      throw Error(ErrorCode::kDomainMismatch,
                  "restriction target has vertex " + std::to_string(v) +
                      " outside the source domain");
    }
    out.set_index(i, x[v]);
  }
  return out;
}

VertexVector lift(const VertexVector& x, const Tree& g) {
  VertexVector out(g);
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    VertexId v = x.domain()[i];
    auto gi = g.find(v);
    if (!gi) {
      throw Error(ErrorCode::kDomainMismatch,
                  "lift source has vertex " + std::to_string(v) +
                      " outside the target tree");
    }
    out.set_index(*gi, x.at_index(i));
  }
  return out;
}

}  // namespace nulltree
