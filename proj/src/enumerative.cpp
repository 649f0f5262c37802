#include "flopcalc/enumerative.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flopcalc {

namespace {

std::string class_to_string(const RestrictedClass& beta) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << ')';
  return os.str();
}

RestrictedClass abs_class(const RestrictedClass& beta) {
  RestrictedClass out(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) out[i] = beta[i] < 0 ? -beta[i] : beta[i];
  return out;
}

void check_dim(const GVTable& table, std::size_t got, const char* what) {
  if (static_cast<std::size_t>(table.ambient.dim()) != got)
    throw DomainError(std::string(what) + ": dimension does not match the table ambient");
}

} // namespace

NovikovPoint::NovikovPoint(std::vector<Rat> values) : coords_(std::move(values)) {
  for (const auto& q : coords_)
    if (q == 0) throw DomainError("Novikov point has a zero coordinate");
}

void check_table(const RootSystem& rs, const GVTable& table) {
  if (table.ambient.diagram != rs.diagram().name)
    throw DomainError("GV table ambient does not match the root system");
  const auto support =
      restricted_positive_roots_on(rs, table.ambient.subset, table.ambient.curves);
  for (const auto& [beta, value] : table.entries) {
    if (value <= 0) throw DomainError("GV value at " + class_to_string(beta) + " must be positive");
    if (!std::binary_search(support.begin(), support.end(), beta,
                            [](const RestrictedClass& a, const RestrictedClass& b) {
                              const long long ha = std::accumulate(a.begin(), a.end(), 0LL);
                              const long long hb = std::accumulate(b.begin(), b.end(), 0LL);
                              if (ha != hb) return ha < hb;
                              return a < b;
                            }))
      throw DomainError("GV table entry " + class_to_string(beta) +
                        " is not a restricted positive root");
  }
}

GVTable transform_gv(const RootSystem& rs, const GVTable& table, int i) {
  auto [step, flopped] = flop(rs, table.ambient, i);
  GVTable out;
  out.ambient = flopped;
  for (const auto& beta :
       restricted_positive_roots_on(rs, flopped.subset, flopped.curves)) {
    const RestrictedClass matched = abs_class(step.matrix.forward.apply(beta));
    auto found = table.entries.find(matched);
    if (found != table.entries.end()) out.entries[beta] = found->second;
  }
  if (out.entries.size() != table.entries.size())
    throw InconsistencyError("GV transport did not preserve the entry count");
  return out;
}

Rat gw_number(const GVTable& table, const RestrictedClass& beta) {
  check_dim(table, beta.size(), "gw_number");
  if (std::all_of(beta.begin(), beta.end(), [](long long c) { return c == 0; }))
    throw DomainError("gw_number: the zero class has no GW invariant");
  long long g = 0;
  for (long long c : beta) g = std::gcd(g, c);
  Rat total(0);
  for (long long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    RestrictedClass quotient(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) quotient[i] = beta[i] / d;
    auto found = table.entries.find(quotient);
    if (found != table.entries.end()) total += Rat(found->second) / Rat(Int(d) * d * d);
  }
  return total;
}

Rat pair_divisor_class(const DivisorVector& gamma, const RestrictedClass& beta) {
  if (gamma.coeffs.size() != beta.size())
    throw DomainError("divisor/class pairing dimension mismatch");
  Rat out(0);
  for (std::size_t i = 0; i < beta.size(); ++i) out += gamma.coeffs[i] * Rat(beta[i]);
  return out;
}

Rat novikov_monomial(const NovikovPoint& q, const RestrictedClass& beta) {
  if (q.coords().size() != beta.size()) throw DomainError("Novikov monomial dimension mismatch");
  Rat out(1);
  for (std::size_t i = 0; i < beta.size(); ++i) out *= rat_pow(q.coords()[i], beta[i]);
  return out;
}

Rat quantum_potential(const GVTable& table, const DivisorVector& g1, const DivisorVector& g2,
                      const DivisorVector& g3, const NovikovPoint& q) {
  check_dim(table, q.coords().size(), "quantum_potential");
  // Pole detection precedes evaluation.
  for (const auto& [beta, value] : table.entries)
    if (novikov_monomial(q, beta) == 1)
      throw PoleError("quantum potential pole at class " + class_to_string(beta), beta);
  Rat total(0);
  for (const auto& [beta, value] : table.entries) {
    const Rat weight =
        pair_divisor_class(g1, beta) * pair_divisor_class(g2, beta) * pair_divisor_class(g3, beta);
    if (weight == 0) continue;
    const Rat monomial = novikov_monomial(q, beta);
    total += Rat(value) * weight * monomial / (Rat(1) - monomial);
  }
  return total;
}

std::vector<RestrictedClass> pole_diagnostics(const GVTable& table, const std::vector<Rat>& p) {
  check_dim(table, p.size(), "pole_diagnostics");
  std::vector<RestrictedClass> out;
  for (const auto& [beta, value] : table.entries) {
    Rat pairing(0);
    for (std::size_t i = 0; i < beta.size(); ++i) pairing += Rat(beta[i]) * p[i];
    if (is_integer(pairing)) out.push_back(beta);
  }
  return out;
}

NovikovPoint novikov_pullback(const FlopStep& step, const NovikovPoint& r) {
  const int dim = step.matrix.inverse.n;
  if (static_cast<int>(r.coords().size()) != dim)
    throw DomainError("novikov_pullback dimension mismatch");
  // q_j = prod_p r_p^{(M^-1)_{p j}}, so that q^beta = r^{M^-1 beta}.
  std::vector<Rat> q(dim);
  for (int j = 0; j < dim; ++j) {
    Rat value(1);
    for (int p = 0; p < dim; ++p) value *= rat_pow(r.coords()[p], step.matrix.inverse.at(p, j));
    q[j] = value;
  }
  return NovikovPoint(std::move(q));
}

std::pair<Rat, Rat> ctc_residual(const RootSystem& rs, const GVTable& table, int i,
                                 const DivisorVector& g1, const DivisorVector& g2,
                                 const DivisorVector& g3, const NovikovPoint& r) {
  const auto [step, flopped_ambient] = flop(rs, table.ambient, i);
  const GVTable flopped_table = transform_gv(rs, table, i);

  const NovikovPoint q = novikov_pullback(step, r);
  auto pull_divisor = [&](const DivisorVector& g) {
    // N_i gamma in Theta_I coordinates: (N_i g)_row = sum_col dual[row][col] g_col.
    if (static_cast<int>(g.coeffs.size()) != step.matrix.dual.n)
      throw DomainError("divisor vector dimension mismatch");
    DivisorVector out;
    out.coeffs.assign(g.coeffs.size(), Rat(0));
    for (int rrow = 0; rrow < step.matrix.dual.n; ++rrow)
      for (int c = 0; c < step.matrix.dual.n; ++c)
        out.coeffs[rrow] += Rat(step.matrix.dual.at(rrow, c)) * g.coeffs[c];
    return out;
  };

  const Rat plus_side = quantum_potential(flopped_table, g1, g2, g3, r);
  const Rat base_side =
      quantum_potential(table, pull_divisor(g1), pull_divisor(g2), pull_divisor(g3), q);
  const Rat lhs = plus_side - base_side;

  // Correction term: classes proportional to the flopped curve in the source table.
  Rat cover_sum(0);
  for (const auto& [beta, value] : table.entries) {
    bool proportional = true;
    for (int p = 0; p < table.ambient.dim(); ++p)
      if (p != step.coord && beta[p] != 0) proportional = false;
    if (!proportional) continue;
    const Int k(beta[step.coord]);
    cover_sum += Rat(k * k * k * value);
  }
  const Rat factor = g1.coeffs[step.coord] * g2.coeffs[step.coord] * g3.coeffs[step.coord];
  const Rat rhs = -factor * cover_sum;
  return {lhs, rhs};
}

Int dim_contraction(const GVTable& table) {
  Int total = 0;
  for (const auto& [beta, value] : table.entries) {
    const Int height = std::accumulate(beta.begin(), beta.end(), 0LL);
    total += value * height * height;
  }
  return total;
}

Int dim_after_mutation(const RootSystem& rs, const GVTable& table, int i) {
  const auto [step, flopped_ambient] = flop(rs, table.ambient, i);
  Int total = 0;
  for (const auto& [beta, value] : table.entries) {
    const auto image = step.matrix.inverse.apply(beta);
    const Int height = std::accumulate(image.begin(), image.end(), 0LL);
    total += value * height * height;
  }
  return total;
}

} // namespace flopcalc
