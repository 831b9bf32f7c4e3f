#include "qexp/families.hpp"

#include <json.hpp>

namespace qexp {

DeckSpec::DeckSpec(FieldOrder q, std::map<unsigned, Natural> decks)
    : q_(q), decks_(std::move(decks)) {
  if (decks_.count(0)) throw std::invalid_argument("DeckSpec: deck dimension 0 is not allowed");
  std::erase_if(decks_, [](const auto& e) { return e.second.is_zero(); });
}

XSeries deck_enumerator(const DeckSpec& f, unsigned order) {
  XSeries d(order);
  for (const auto& [r, count] : f.decks()) {
    if (r > order) continue;
    d.set_coeff(r, YPoly::constant(Rational(count) / Rational(gl_order(r, f.q()))));
  }
  return d;
}

XSeries hand_enumerator(const DeckSpec& f, unsigned order) {
  const XSeries d = deck_enumerator(f, order);
  XSeries yd(order);
  for (unsigned n = 1; n <= order; ++n)
    yd.set_coeff(n, YPoly::mul(d.coeff(n), YPoly::monomial(1, Rational(1)), order));
  return XSeries::exp(yd);
}

DeckSpec merge(const DeckSpec& f1, const DeckSpec& f2) {
  if (!(f1.q() == f2.q())) throw std::invalid_argument("merge: field order mismatch");
  std::map<unsigned, Natural> d = f1.decks();
  for (const auto& [r, count] : f2.decks()) {
    auto [it, inserted] = d.emplace(r, count);
    if (!inserted) it->second += count;
  }
  return DeckSpec(f1.q(), std::move(d));
}

namespace {

// Hands of the family with a single deck of dimension r holding d_r cards:
// k cards occupy dimension kr, with h(kr,k) = d_r^k * gamma_kr / (k! gamma_r^k).
HandTable single_deck_table(unsigned r, const Natural& d_r, const FieldOrder& q, unsigned order) {
  HandTable t(order);
  const Rational gamma_r(gl_order(r, q));
  for (unsigned k = 1; k * r <= order; ++k) {
    Rational splittings = Rational(gl_order(k * r, q)) /
                          (Rational(factorial(k)) * Rational(Natural::pow(gamma_r.to_natural(), k)));
    t.set(k * r, k, (Rational(Natural::pow(d_r, k)) * splittings).to_natural());
  }
  return t;
}

// Fundamental counting step: hand counts of a merger from the two parts'.
HandTable lemma1_convolve(const HandTable& a, const HandTable& b, const FieldOrder& q) {
  const unsigned N = a.order();
  HandTable t(N);
  for (unsigned n = 0; n <= N; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      Natural acc;
      for (unsigned np = 0; np <= n; ++np) {
        const Natural split = gaussian_multinomial({np, n - np}, q);
        for (unsigned kp = 0; kp <= k; ++kp) {
          if (kp > np || k - kp > n - np) continue;
          acc += split * a.at(np, kp) * b.at(n - np, k - kp);
        }
      }
      if (n == 0 && k == 0) continue;  // stays 1
      if (!acc.is_zero()) t.set(n, k, std::move(acc));
    }
  }
  return t;
}

}  // namespace

HandTable hand_counts_recursive(const DeckSpec& f, unsigned order) {
  // Ascending dimension; correctness is order-independent, the order is fixed
  // for determinism.
  HandTable acc(order);
  for (const auto& [r, d_r] : f.decks()) {
    if (r > order) continue;
    acc = lemma1_convolve(acc, single_deck_table(r, d_r, f.q(), order), f.q());
  }
  return acc;
}

YPoly phi_polynomial(const DeckSpec& f, unsigned n, unsigned order) {
  if (n > order) throw std::invalid_argument("phi_polynomial: n exceeds order");
  const HandTable t = series_to_hand_table(hand_enumerator(f, order), f.q());
  YPoly p;
  for (unsigned k = 0; k <= n; ++k) p.set_coeff(k, Rational(t.at(n, k)));
  return p;
}

bool binomial_type_check(const DeckSpec& f, unsigned n) {
  const HandTable t = series_to_hand_table(hand_enumerator(f, n), f.q());

  // Both sides as (n+1) x (n+1) grids of u^i v^j coefficients.
  std::vector<std::vector<Natural>> lhs(n + 1, std::vector<Natural>(n + 1));
  std::vector<std::vector<Natural>> rhs(n + 1, std::vector<Natural>(n + 1));

  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j)
      lhs[i][j] = t.at(n, i + j) * binomial(i + j, i);

  for (unsigned m = 0; m <= n; ++m) {
    const Natural split = gaussian_multinomial({m, n - m}, f.q());
    for (unsigned i = 0; i <= m; ++i) {
      if (t.at(m, i).is_zero()) continue;
      for (unsigned j = 0; j <= n - m; ++j)
        rhs[i][j] += split * t.at(m, i) * t.at(n - m, j);
    }
  }

  return lhs == rhs;
}

DeckSpec deck_spec_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("deck spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q") || !j.contains("decks"))
    throw std::invalid_argument("deck spec: expected object with \"q\" and \"decks\"");
  if (!j["q"].is_number_unsigned())
    throw std::invalid_argument("deck spec: \"q\" must be an unsigned integer");
  if (!j["decks"].is_object())
    throw std::invalid_argument("deck spec: \"decks\" must be an object");

  FieldOrder q(j["q"].get<unsigned long>());
  std::map<unsigned, Natural> decks;
  for (const auto& [key, value] : j["decks"].items()) {
    size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != key.size() || key.empty() || n == 0)
      throw std::invalid_argument("deck spec: deck key '" + key +
                                  "' is not a positive decimal integer");
    if (!value.is_number_unsigned())
      throw std::invalid_argument("deck spec: count for deck '" + key +
                                  "' must be a nonnegative integer");
    decks[static_cast<unsigned>(n)] = Natural(value.get<unsigned long>());
  }
  return DeckSpec(q, std::move(decks));
}

std::string deck_spec_to_json(const DeckSpec& f) {
  nlohmann::json decks = nlohmann::json::object();
  for (const auto& [r, count] : f.decks())
    decks[std::to_string(r)] = count.value().get_ui();
  nlohmann::json j{{"q", f.q().value()}, {"decks", decks}};
  return j.dump();
}

}  // namespace qexp
