#include "colorlie/grading.hpp"

#include <algorithm>

#include "colorlie/error.hpp"

namespace colorlie {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b))
    throw Error(Errc::GroupMismatch, "elements of " + a.to_string() + " and " + b.to_string());
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (auto m : torsion_moduli_) {
    if (!out.empty()) out += " x ";
    out += "Z_" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

GroupSpec make_group(int free_rank, std::vector<std::int64_t> torsion_moduli) {
  if (free_rank < 0) throw Error(Errc::ModulusTooSmall, "negative free rank");
  for (auto m : torsion_moduli)
    if (m < 2) throw Error(Errc::ModulusTooSmall, "torsion modulus " + std::to_string(m) + " < 2");
  GroupSpec g;
  g.free_rank_ = free_rank;
  g.torsion_moduli_ = std::move(torsion_moduli);
  return g;
}

GroupElement::GroupElement(GroupSpec group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != group_.num_generators())
    throw Error(Errc::GroupMismatch, "expected " + std::to_string(group_.num_generators()) +
                                         " coordinates for " + group_.to_string() + ", got " +
                                         std::to_string(coords_.size()));
  const auto offset = static_cast<std::size_t>(group_.free_rank());
  for (std::size_t i = 0; i < group_.torsion_moduli().size(); ++i)
    coords_[offset + i] = reduce(coords_[offset + i], group_.torsion_moduli()[i]);
}

GroupElement GroupElement::identity(const GroupSpec& group) {
  return GroupElement(group, std::vector<std::int64_t>(static_cast<std::size_t>(group.num_generators()), 0));
}

GroupElement GroupElement::generator(const GroupSpec& group, int i) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(group.num_generators()), 0);
  c.at(static_cast<std::size_t>(i)) = 1;
  return GroupElement(group, std::move(c));
}

bool GroupElement::is_identity() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
}

bool GroupElement::has_infinite_order() const noexcept {
  const auto f = free_part();
  return std::any_of(f.begin(), f.end(), [](auto x) { return x != 0; });
}

GroupElement GroupElement::operator-() const {
  auto c = coords_;
  for (auto& x : c) x = -x;
  return GroupElement(group_, std::move(c));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group_, b.group_);
  auto c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return GroupElement(a.group_, std::move(c));
}

GroupElement operator*(std::int64_t k, const GroupElement& g) {
  auto c = g.coords_;
  for (auto& x : c) x *= k;
  return GroupElement(g.group_, std::move(c));
}

std::string GroupElement::to_string() const {
  if (coords_.empty()) return "0";
  if (coords_.size() == 1) return std::to_string(coords_.front());
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

Rational pow(const Rational& q, std::int64_t e) {
  if (q == 1 || e == 0) return Rational(1);
  if (q == -1) return Rational(e % 2 == 0 ? 1 : -1);
  if (e < 0) {
    if (q == 0) throw Error(Errc::InternalError, "zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational base = q, acc = 1;
  for (auto n = static_cast<std::uint64_t>(e); n > 0; n >>= 1) {
    if (n & 1U) acc *= base;
    if (n > 1) base *= base;
  }
  return acc;
}

Bicharacter Bicharacter::trivial(const GroupSpec& group) {
  const auto n = group.num_generators();
  return make_bicharacter(group, Matrix::Ones(n, n));
}

Bicharacter make_bicharacter(const GroupSpec& group, Matrix values) {
  const auto n = group.num_generators();
  if (values.rows() != n || values.cols() != n)
    throw Error(Errc::GroupMismatch, "bicharacter needs a " + std::to_string(n) + "x" +
                                         std::to_string(n) + " value matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (values(i, j) == 0)
        throw Error(Errc::NotSkewSymmetric, "bicharacter value (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") is zero");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values(i, i) != 1 && values(i, i) != -1)
      throw Error(Errc::BadDiagonal, "r(e" + std::to_string(i) + ",e" + std::to_string(i) +
                                         ") = " + to_string(values(i, i)) + " is not +-1");
    for (Eigen::Index j = 0; j < n; ++j)
      if (values(i, j) * values(j, i) != 1)
        throw Error(Errc::NotSkewSymmetric, "r(e" + std::to_string(i) + ",e" + std::to_string(j) +
                                                ") r(e" + std::to_string(j) + ",e" +
                                                std::to_string(i) + ") != 1");
  }
  const auto offset = group.free_rank();
  for (std::size_t t = 0; t < group.torsion_moduli().size(); ++t) {
    const auto i = static_cast<Eigen::Index>(offset + static_cast<int>(t));
    const auto m = group.torsion_moduli()[t];
    for (Eigen::Index j = 0; j < n; ++j)
      if (pow(values(i, j), m) != 1 || pow(values(j, i), m) != 1)
        throw Error(Errc::TorsionIncompatible,
                    "value " + to_string(values(i, j)) + " at generator of order " +
                        std::to_string(m) + " is not an m-th root of unity");
  }
  Bicharacter r;
  r.group_ = group;
  r.values_ = std::move(values);
  return r;
}

Rational Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
  require_same_group(group_, g.group());
  require_same_group(group_, h.group());
  Rational acc = 1;
  const auto gc = g.coords();
  const auto hc = h.coords();
  for (std::size_t i = 0; i < gc.size(); ++i) {
    if (gc[i] == 0) continue;
    for (std::size_t j = 0; j < hc.size(); ++j)
      if (hc[j] != 0)
        acc *= pow(values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), gc[i] * hc[j]);
  }
  return acc;
}

}  // namespace colorlie
