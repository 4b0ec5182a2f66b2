#include "stringc/pgroup.hpp"

#include <numeric>
#include <sstream>

#include "stringc/errors.hpp"

namespace stringc {

namespace {

std::string describe(std::int64_t p, std::int64_t e, std::int64_t r) {
  std::ostringstream out;
  out << "(p=" << p << ", e=" << e << ", r=" << r << ")";
  return out.str();
}

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<__int128>(x) * y % mod);
}

}  // namespace

GroupParams GroupParams::validate(std::int64_t p, std::int64_t e, std::int64_t r) {
  if (!arith::is_odd_prime(p)) throw InvalidParam("p must be an odd prime " + describe(p, e, r));
  if (p > kMaxPrime) {
    throw InvalidParam("p must be at most " + std::to_string(kMaxPrime) + " " + describe(p, e, r));
  }
  if (e < 1) throw InvalidParam("e must be at least 1 " + describe(p, e, r));
  if (r < 1 || r > p - 1) throw InvalidParam("r must lie in [1, p-1] " + describe(p, e, r));

  if (arith::ipow(p, e + 1) > arith::BigInt(kernels::kMaxModulus)) {
    throw InvalidParam("p^(e+1) exceeds the 64-bit exponent range " + describe(p, e, r));
  }
  const std::int64_t m = e * r + (e - 1) * (p - r - 1) + 1;
  if (m < 3) {
    throw InvalidParam("m = e*r + (e-1)*(p-r-1) + 1 = " + std::to_string(m) + " must be >= 3 " +
                       describe(p, e, r));
  }

  GroupParams params;
  params.p_ = p;
  params.e_ = e;
  params.r_ = r;
  params.m_ = m;
  const std::int64_t high = arith::ipow(p, e).convert_to<std::int64_t>();
  const std::int64_t low = high / p;
  params.moduli_.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t i = 1; i <= p - 1; ++i) params.moduli_.push_back(i <= r ? high : low);
  return params;
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(x.b);
  for (const auto v : x.a) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// BetaAction

BetaAction::BetaAction(kernels::ModMatrix m, std::int64_t p) {
  powers_.reserve(static_cast<std::size_t>(p));
  powers_.push_back(kernels::ModMatrix::identity(
      std::vector<std::int64_t>(m.moduli().begin(), m.moduli().end())));
  for (std::int64_t k = 1; k < p; ++k) powers_.push_back(powers_.back() * m);
  full_period_ = powers_.back() * m;
}

BetaAction BetaAction::standard(const GroupParams& params) {
  const std::int64_t p = params.p();
  const std::size_t d = params.rank();
  std::vector<std::int64_t> entries(d * d, 0);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    entries[i * d + i] = 1;
    entries[i * d + i + 1] = 1;
  }
  // s_{p-1}^beta = s_{p-1} [s_{p-1}, beta] = s_{p-1} prod_j s_j^{-C(p,j)}.
  const std::size_t last = d - 1;
  for (std::size_t j = 0; j < d; ++j) {
    arith::BigInt entry = -arith::binom(p, static_cast<std::int64_t>(j + 1));
    if (j == last) entry += 1;
    entries[last * d + j] = arith::reduce(entry, params.moduli()[j]);
  }
  return BetaAction(kernels::ModMatrix(std::move(entries), params.moduli()), p);
}

BetaAction BetaAction::from_matrix(const GroupParams& params, std::vector<std::int64_t> entries) {
  return BetaAction(kernels::ModMatrix(std::move(entries), params.moduli()), params.p());
}

const kernels::ModMatrix& BetaAction::power(std::int64_t k) const {
  const std::int64_t p = period();
  return powers_[static_cast<std::size_t>(((k % p) + p) % p)];
}

bool BetaAction::has_period_p() const {
  const auto& moduli = full_period_.moduli();
  return full_period_ == kernels::ModMatrix::identity({moduli.begin(), moduli.end()});
}

bool BetaAction::well_defined() const {
  const auto& m = matrix();
  const auto moduli = m.moduli();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto product = static_cast<__int128>(moduli[i]) * m.at(i, j);
      if (product % moduli[j] != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Group

Group::Group(GroupParams params) : params_(params), action_(BetaAction::standard(params_)) {}

Group::Group(GroupParams params, BetaAction action)
    : params_(std::move(params)), action_(std::move(action)) {}

GroupElement Group::identity() const {
  return GroupElement{std::vector<std::int64_t>(rank(), 0), 0};
}

GroupElement Group::s(std::int64_t i) const {
  if (i < 1 || i > p() - 1) throw InvalidParam("generator index out of range");
  GroupElement x = identity();
  x.a[static_cast<std::size_t>(i - 1)] = 1 % params_.modulus(i);
  return x;
}

GroupElement Group::beta() const {
  GroupElement x = identity();
  x.b = 1;
  return x;
}

GroupElement Group::make(std::span<const std::int64_t> a, std::int64_t b) const {
  if (a.size() != rank()) throw InvalidParam("exponent vector has the wrong length");
  GroupElement x{std::vector<std::int64_t>(a.begin(), a.end()), ((b % p()) + p()) % p()};
  const auto& moduli = params_.moduli();
  for (std::size_t i = 0; i < rank(); ++i) {
    x.a[i] %= moduli[i];
    if (x.a[i] < 0) x.a[i] += moduli[i];
  }
  return x;
}

GroupElement Group::multiply(const GroupElement& x, const GroupElement& y) const {
  // (a beta^x)(c beta^y) = (a + c * M^{-x}) beta^{x+y}
  GroupElement result{std::vector<std::int64_t>(rank()), (x.b + y.b) % p()};
  kernels::affine_mod(action_.power(-x.b), x.a, y.a, result.a);
  return result;
}

GroupElement Group::inverse(const GroupElement& x) const {
  // (a beta^b)^{-1} = ((-a) * M^b) beta^{-b}
  const auto& moduli = params_.moduli();
  std::vector<std::int64_t> negated(rank());
  for (std::size_t i = 0; i < rank(); ++i) negated[i] = x.a[i] == 0 ? 0 : moduli[i] - x.a[i];
  GroupElement result{std::vector<std::int64_t>(rank()), (p() - x.b) % p()};
  kernels::affine_mod(action_.power(x.b), {}, negated, result.a);
  return result;
}

GroupElement Group::power(const GroupElement& x, std::int64_t k) const {
  GroupElement base = k < 0 ? inverse(x) : x;
  auto n = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1 : 0);
  GroupElement result = identity();
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

GroupElement Group::conjugate(const GroupElement& x, const GroupElement& y) const {
  return multiply(multiply(inverse(y), x), y);
}

GroupElement Group::commutator(const GroupElement& x, const GroupElement& y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElement Group::scale(const GroupElement& x, const arith::BigInt& c) const {
  if (!x.in_abelian_part()) throw InvalidParam("scale: element must lie in A");
  GroupElement result = identity();
  const auto& moduli = params_.moduli();
  for (std::size_t i = 0; i < rank(); ++i) {
    result.a[i] = mulmod(x.a[i], arith::reduce(c, moduli[i]), moduli[i]);
  }
  return result;
}

GroupElement Group::add(const GroupElement& x, const GroupElement& y) const {
  if (!x.in_abelian_part() || !y.in_abelian_part()) {
    throw InvalidParam("add: elements must lie in A");
  }
  GroupElement result = identity();
  const auto& moduli = params_.moduli();
  for (std::size_t i = 0; i < rank(); ++i) {
    result.a[i] = x.a[i] + y.a[i];
    if (result.a[i] >= moduli[i]) result.a[i] -= moduli[i];
  }
  return result;
}

std::uint64_t Group::element_order(const GroupElement& x) const {
  if (!x.in_abelian_part()) {
    // b != 0 forces p | order, and then order(x) = p * order(x^p).
    return static_cast<std::uint64_t>(p()) * element_order(power(x, p()));
  }
  const auto& moduli = params_.moduli();
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto component = static_cast<std::uint64_t>(moduli[i] / std::gcd(x.a[i], moduli[i]));
    order = std::lcm(order, component);
  }
  return order;
}

GroupElement Group::derived_sp() const {
  GroupElement result = identity();
  const auto& moduli = params_.moduli();
  for (std::size_t i = 0; i < rank(); ++i) {
    result.a[i] = arith::reduce(-arith::binom(p(), static_cast<std::int64_t>(i + 1)), moduli[i]);
  }
  return result;
}

GroupElement Group::derived_sp1() const {
  GroupElement result = identity();
  for (std::int64_t i = 1; i <= p() - 1; ++i) {
    result = add(result, scale(s_extended(i + 1), -arith::binom(p(), i)));
  }
  return result;
}

GroupElement Group::s_extended(std::int64_t k) const {
  if (k >= 1 && k <= p() - 1) return s(k);
  if (k == p()) return derived_sp();
  if (k == p() + 1) return derived_sp1();
  throw InvalidParam("s_extended: index out of range");
}

GroupElement Group::random_element(std::mt19937_64& rng) const {
  GroupElement x = identity();
  const auto& moduli = params_.moduli();
  for (std::size_t i = 0; i < rank(); ++i) {
    x.a[i] = std::uniform_int_distribution<std::int64_t>(0, moduli[i] - 1)(rng);
  }
  x.b = std::uniform_int_distribution<std::int64_t>(0, p() - 1)(rng);
  return x;
}

Group::Subgroup Group::closure(std::span<const GroupElement> generators, std::uint64_t cap) const {
  return detail::bfs_closure<GroupElement, GroupElementHash>(
      identity(), generators,
      [this](const GroupElement& x, const GroupElement& y) { return multiply(x, y); }, cap);
}

// ---------------------------------------------------------------------------
// Checks

bool hughes_check(const Group& g, std::uint64_t cap) {
  if (!g.params().order_within(cap)) {
    throw CapExceeded("hughes_check: p^m exceeds the enumeration cap of " + std::to_string(cap),
                      0);
  }
  const GroupElement one = g.identity();
  bool ok = true;
  for_each_element(g, [&](const GroupElement& x) {
    if (!ok || x.in_abelian_part()) return;
    if (g.power(x, g.p()) != one) ok = false;
  });
  return ok;
}

CheckOutcome check_presentation(const Group& g) {
  CheckOutcome out;
  const std::int64_t p = g.p();
  const GroupElement beta = g.beta();

  out.expect(g.action().well_defined(), "beta action is not well defined on the moduli");
  out.expect(g.action().has_period_p(), "beta action does not satisfy M^p = I");

  for (std::int64_t i = 1; i <= p - 1; ++i) {
    const auto order = static_cast<std::int64_t>(g.element_order(g.s(i)));
    out.expect(order == g.params().modulus(i), "order of s_" + std::to_string(i));
    for (std::int64_t j = i + 1; j <= p - 1; ++j) {
      out.expect(g.multiply(g.s(i), g.s(j)) == g.multiply(g.s(j), g.s(i)),
                 "[s_" + std::to_string(i) + ", s_" + std::to_string(j) + "] != 1");
    }
  }
  out.expect(g.power(beta, p) == g.identity() && g.element_order(beta) == static_cast<std::uint64_t>(p),
             "order of beta");

  for (std::int64_t k = 1; k <= p - 2; ++k) {
    out.expect(g.commutator(g.s(k), beta) == g.s(k + 1),
               "s_" + std::to_string(k + 1) + " != [s_" + std::to_string(k) + ", beta]");
  }
  out.expect(g.commutator(g.s(p - 1), beta) == g.derived_sp(),
             "[s_{p-1}, beta] != prod s_i^{-C(p,i)}");
  out.expect(g.commutator(g.derived_sp(), beta) == g.derived_sp1(),
             "[s_p, beta] != prod s_{i+1}^{-C(p,i)}");
  return out;
}

CheckOutcome check_commutator_identities(const Group& g, std::uint64_t samples,
                                         std::uint64_t seed) {
  CheckOutcome out;
  std::mt19937_64 rng(seed);
  auto comm = [&](const GroupElement& x, const GroupElement& y) { return g.commutator(x, y); };
  auto conj = [&](const GroupElement& x, const GroupElement& y) { return g.conjugate(x, y); };
  auto mul = [&](const GroupElement& x, const GroupElement& y) { return g.multiply(x, y); };
  auto inv = [&](const GroupElement& x) { return g.inverse(x); };

  for (std::uint64_t t = 0; t < samples; ++t) {
    const GroupElement x = g.random_element(rng);
    const GroupElement y = g.random_element(rng);
    const GroupElement z = g.random_element(rng);
    const GroupElement xy = comm(x, y);
    const std::string tag = " (sample " + std::to_string(t) + ")";

    out.expect(comm(mul(x, y), z) == mul(conj(comm(x, z), y), comm(y, z)), "[xy,z]" + tag);
    out.expect(comm(x, mul(y, z)) == mul(comm(x, z), conj(comm(x, y), z)), "[x,yz]" + tag);
    out.expect(conj(comm(x, inv(y)), y) == inv(xy), "[x,y^-1]^y" + tag);
    out.expect(conj(comm(inv(x), y), x) == inv(xy), "[x^-1,y]^x" + tag);
    out.expect(conj(comm(inv(x), inv(y)), mul(x, y)) == xy, "[x^-1,y^-1]^{xy}" + tag);
  }
  return out;
}

}  // namespace stringc
