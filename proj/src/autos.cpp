#include "stringc/autos.hpp"

#include "stringc/errors.hpp"

namespace stringc {

const char* label_name(AutoLabel label) {
  if (label.sigma && label.tau) return "sigma*tau";
  if (label.sigma) return "sigma";
  if (label.tau) return "tau";
  return "1";
}

namespace {

// x^c for an arbitrary-precision exponent.
GroupElement power_big(const Group& g, const GroupElement& x, const arith::BigInt& c) {
  const auto order = static_cast<std::int64_t>(g.element_order(x));
  return g.power(x, arith::reduce(c, order));
}

std::vector<GroupElement> generators_of(const Group& g) {
  std::vector<GroupElement> gens;
  for (std::int64_t i = 1; i <= g.p() - 1; ++i) gens.push_back(g.s(i));
  gens.push_back(g.beta());
  return gens;
}

std::string generator_name(const Group& g, std::size_t index) {
  return index + 1 < static_cast<std::size_t>(g.p()) ? "s_" + std::to_string(index + 1) : "beta";
}

}  // namespace

Automorphisms::Automorphisms(const Group& group) : group_(&group) {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  const std::size_t d = g.rank();

  std::vector<std::int64_t> rows;
  rows.reserve(d * d);
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    table_.sigma_images.push_back(sigma_image_by_parity(k));
    table_.tau_images.push_back(g.inverse(g.s(k)));
    const auto& row = table_.sigma_images.back().a;
    rows.insert(rows.end(), row.begin(), row.end());
  }
  table_.beta_sigma_image = g.inverse(g.beta());
  table_.beta_tau_image = g.beta();
  sigma_matrix_ = kernels::ModMatrix(std::move(rows), g.params().moduli());
}

GroupElement Automorphisms::apply(AutoLabel label, const GroupElement& x) const {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  GroupElement result = x;
  if (label.sigma) {
    kernels::affine_mod(sigma_matrix_, {}, x.a, result.a);
    result.b = (p - x.b) % p;
  }
  if (label.tau) {
    const auto& moduli = g.params().moduli();
    for (std::size_t i = 0; i < result.a.size(); ++i) {
      if (result.a[i] != 0) result.a[i] = moduli[i] - result.a[i];
    }
  }
  return result;
}

GroupElement Automorphisms::conjugation_closed_form(std::int64_t k) const {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  if (k < 1 || k > p) throw InvalidParam("conjugation_closed_form: k must lie in [1, p]");
  GroupElement result = g.identity();
  for (std::int64_t i = k; i <= p + 1; ++i) {
    result = g.add(result, g.scale(g.s_extended(i), arith::binom(p + 1 - k, i - k)));
  }
  return result;
}

GroupElement Automorphisms::iterated_conjugation(std::int64_t k) const {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  if (k < 1 || k > p) throw InvalidParam("iterated_conjugation: k must lie in [1, p]");
  GroupElement x = k < p ? g.s(k) : g.commutator(g.s(p - 1), g.beta());
  const GroupElement beta_inv = g.inverse(g.beta());
  for (std::int64_t step = 1; step < k; ++step) x = g.conjugate(x, beta_inv);
  return x;
}

GroupElement Automorphisms::sigma_image_by_recursion(std::int64_t k) const {
  const Group& g = *group_;
  if (k < 1 || k > g.p()) throw InvalidParam("sigma_image_by_recursion: k must lie in [1, p]");
  const GroupElement beta_inv = g.inverse(g.beta());
  GroupElement x = g.s(1);
  for (std::int64_t i = 2; i <= k; ++i) x = g.commutator(x, beta_inv);
  return x;
}

GroupElement Automorphisms::sigma_image_by_parity(std::int64_t k) const {
  const Group& g = *group_;
  if (k < 1 || k > g.p()) throw InvalidParam("sigma_image_by_parity: k must lie in [1, p]");
  const GroupElement conj = g.conjugate(g.s_extended(k), g.power(g.beta(), 1 - k));
  return k % 2 == 1 ? conj : g.inverse(conj);
}

CheckOutcome Automorphisms::check_conjugation_lemma() const {
  const Group& g = *group_;
  CheckOutcome out;
  for (std::int64_t k = 1; k <= g.p(); ++k) {
    const std::string tag = " (k=" + std::to_string(k) + ")";
    out.expect(conjugation_closed_form(k) == iterated_conjugation(k),
               "closed form of s_k^{beta^{1-k}} disagrees with iterated conjugation" + tag);
    const GroupElement by_recursion = sigma_image_by_recursion(k);
    out.expect(sigma_image_by_parity(k) == by_recursion,
               "parity rule for s_k^sigma disagrees with the commutator recursion" + tag);
    if (k <= g.p() - 1) {
      out.expect(apply(AutoLabel::sigma_only(), g.s(k)) == by_recursion,
                 "sigma table entry disagrees with the commutator recursion" + tag);
    }
  }
  return out;
}

CheckOutcome Automorphisms::check_u_identity(const std::vector<arith::BigInt>& u) const {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  CheckOutcome out;
  if (u.size() != static_cast<std::size_t>(p + 1)) {
    out.expect(false, "u-coefficient vector must have p+1 entries");
    return out;
  }

  GroupElement image_product = g.identity();
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    image_product = g.multiply(
        image_product, power_big(g, table_.sigma_images[i - 1], -arith::binom(p, i)));
  }
  GroupElement expanded = g.identity();
  for (std::int64_t i = 1; i <= p + 1; ++i) {
    expanded = g.multiply(expanded, power_big(g, g.s_extended(i), u[i - 1]));
  }
  const GroupElement sp_sp1 = g.multiply(g.derived_sp(), g.derived_sp1());

  out.expect(image_product == expanded,
             "prod (s_i^sigma)^{-C(p,i)} != prod s_i^{u_i}");
  out.expect(expanded == sp_sp1, "prod s_i^{u_i} != s_p s_{p+1}");
  out.expect(sigma_image_by_parity(p) == sp_sp1, "s_p^sigma != s_p s_{p+1}");
  return out;
}

AutomorphismOutcome Automorphisms::verify(AutoLabel label, std::uint64_t samples,
                                          std::uint64_t seed) const {
  const Group& g = *group_;
  const std::int64_t p = g.p();
  AutomorphismOutcome result;
  result.label = label;
  const auto gens = generators_of(g);
  auto f = [&](const GroupElement& x) { return apply(label, x); };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      result.homomorphism.expect(
          f(g.multiply(gens[i], gens[j])) == g.multiply(f(gens[i]), f(gens[j])),
          "f(xy) != f(x)f(y) for x=" + generator_name(g, i) + ", y=" + generator_name(g, j));
    }
    result.involution.expect(f(f(gens[i])) == gens[i],
                             "f(f(" + generator_name(g, i) + ")) != " + generator_name(g, i));
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const GroupElement x = g.random_element(rng);
    const GroupElement y = g.random_element(rng);
    const std::string tag = " (sample " + std::to_string(t) + ")";
    result.homomorphism.expect(f(g.multiply(x, y)) == g.multiply(f(x), f(y)), "f(xy) != f(x)f(y)" + tag);
    result.involution.expect(f(f(x)) == x, "f(f(x)) != x" + tag);
  }

  std::vector<GroupElement> images;
  for (const auto& x : gens) images.push_back(f(x));
  const GroupElement& beta_image = images.back();
  const GroupElement one = g.identity();

  for (std::int64_t i = 1; i <= p - 1; ++i) {
    const auto& img = images[i - 1];
    result.relations.expect(g.power(img, g.params().modulus(i)) == one,
                            "f(s_" + std::to_string(i) + ")^{order} != 1");
    for (std::int64_t j = i + 1; j <= p - 1; ++j) {
      result.relations.expect(g.commutator(img, images[j - 1]) == one,
                              "[f(s_" + std::to_string(i) + "), f(s_" + std::to_string(j) + ")] != 1");
    }
  }
  result.relations.expect(g.power(beta_image, p) == one, "f(beta)^p != 1");
  for (std::int64_t k = 1; k <= p - 2; ++k) {
    result.relations.expect(g.commutator(images[k - 1], beta_image) == images[k],
                            "[f(s_" + std::to_string(k) + "), f(beta)] != f(s_" +
                                std::to_string(k + 1) + ")");
  }
  GroupElement rhs = one;
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    rhs = g.multiply(rhs, power_big(g, images[i - 1], -arith::binom(p, i)));
  }
  result.relations.expect(g.commutator(images[p - 2], beta_image) == rhs,
                          "[f(s_{p-1}), f(beta)] != prod f(s_i)^{-C(p,i)}");
  return result;
}

bool Automorphisms::verify_klein_four() const {
  const Group& g = *group_;
  const AutoLabel s = AutoLabel::sigma_only();
  const AutoLabel t = AutoLabel::tau_only();
  const AutoLabel st = AutoLabel::sigma_tau();
  for (const auto& x : generators_of(g)) {
    if (apply(s, apply(s, x)) != x) return false;
    if (apply(t, apply(t, x)) != x) return false;
    if (apply(st, apply(st, x)) != x) return false;
    const GroupElement sigma_then_tau = apply(t, apply(s, x));
    const GroupElement tau_then_sigma = apply(s, apply(t, x));
    if (sigma_then_tau != tau_then_sigma) return false;
    if (apply(st, x) != sigma_then_tau) return false;
  }
  return true;
}

}  // namespace stringc
