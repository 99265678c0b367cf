#include "qgauss/bundle.hpp"

namespace qg {

Section kappa(const CellChart& chart, const OreFraction& f, int beta) {
  const int n = chart.ctx().n;
  Section out(static_cast<size_t>(n), frac_poly(chart.ore_set(), nc_zero()));
  for (int alpha = 1; alpha <= beta; ++alpha)
    out[static_cast<size_t>(alpha - 1)] =
        chart.solver().mul(f, chart.A(beta, alpha));
  return out;
}

Section kappa_bar(const CellChart& chart, const Section& g) {
  const int n = chart.ctx().n;
  Section out(static_cast<size_t>(n), frac_poly(chart.ore_set(), nc_zero()));
  for (int gamma = 1; gamma <= n; ++gamma) {
    OreFraction acc = frac_poly(chart.ore_set(), nc_zero());
    for (int alpha = gamma; alpha <= n; ++alpha) {
      if (g[static_cast<size_t>(alpha - 1)].is_zero()) continue;
      OreFraction s = chart.gamma_bloc(chart.borel_loc().antipode_gen(alpha, gamma));
      acc = chart.solver().add(acc, chart.solver().mul(g[static_cast<size_t>(alpha - 1)], s));
    }
    out[static_cast<size_t>(gamma - 1)] = acc;
  }
  return out;
}

bool prop1_sample(const CellChart& chart, const OreFraction& f, int beta, std::string* witness) {
  Section round = kappa_bar(chart, kappa(chart, f, beta));
  for (int k = 1; k <= chart.ctx().n; ++k) {
    OreFraction expect = (k == beta) ? f : frac_poly(chart.ore_set(), nc_zero());
    if (!chart.solver().equal(round[static_cast<size_t>(k - 1)], expect)) {
      if (witness)
        *witness = "component " + std::to_string(k) + ": got " +
                   round[static_cast<size_t>(k - 1)].to_string() + ", expected " + expect.to_string();
      return false;
    }
  }
  return true;
}

std::shared_ptr<OreSolver> union_solver(const CellChart& a, const CellChart& b, int bound) {
  auto uset = union_ore_set(a.ctx(), a.ore_set(), b.ore_set());
  return std::make_shared<OreSolver>(a.ctx(), uset, bound);
}

TransitionMatrix transition_matrix(const CellChart& to, const CellChart& from,
                                   const std::shared_ptr<OreSolver>& usolver,
                                   bool trivial_comodule) {
  const auto& ctx = to.ctx();
  TransitionMatrix m;
  m.usolver = usolver;
  if (trivial_comodule) {
    m.entries.assign(1, {frac_poly(usolver->set(), nc_one(ctx))});
    return m;
  }
  const int n = ctx.n;
  m.entries.assign(static_cast<size_t>(n),
                   std::vector<OreFraction>(static_cast<size_t>(n), frac_poly(usolver->set(), nc_zero())));
  for (int gamma = 1; gamma <= n; ++gamma)
    for (int alpha = 1; alpha <= n; ++alpha) {
      OreFraction acc = frac_poly(usolver->set(), nc_zero());
      for (int beta = gamma; beta <= alpha; ++beta) {
        OreFraction lhs = frac_translate(ctx, usolver->set(), to.A(alpha, beta));
        OreFraction rhs = frac_translate(
            ctx, usolver->set(), from.gamma_bloc(from.borel_loc().antipode_gen(beta, gamma)));
        acc = usolver->add(acc, usolver->mul(lhs, rhs));
      }
      m.entries[static_cast<size_t>(gamma - 1)][static_cast<size_t>(alpha - 1)] = acc;
    }
  return m;
}

TransitionMatrix transition_mul(const TransitionMatrix& a, const TransitionMatrix& b) {
  const size_t n = a.entries.size();
  TransitionMatrix c;
  c.usolver = a.usolver;
  c.entries.assign(n, std::vector<OreFraction>(n, frac_poly(a.usolver->set(), nc_zero())));
  for (size_t gamma = 0; gamma < n; ++gamma)
    for (size_t alpha = 0; alpha < n; ++alpha) {
      OreFraction acc = frac_poly(a.usolver->set(), nc_zero());
      for (size_t s = 0; s < n; ++s)
        acc = a.usolver->add(acc, a.usolver->mul(a.entries[s][alpha], b.entries[gamma][s]));
      c.entries[gamma][alpha] = acc;
    }
  return c;
}

bool transition_is_identity(const TransitionMatrix& m, std::string* witness) {
  const auto& ctx = m.usolver->ctx();
  for (size_t gamma = 0; gamma < m.entries.size(); ++gamma)
    for (size_t alpha = 0; alpha < m.entries.size(); ++alpha) {
      OreFraction expect = frac_poly(m.usolver->set(),
                                     gamma == alpha ? nc_one(ctx) : nc_zero());
      if (!m.usolver->equal(m.entries[gamma][alpha], expect)) {
        if (witness)
          *witness = "entry (col " + std::to_string(gamma + 1) + ", row " + std::to_string(alpha + 1) +
                     ") = " + m.entries[gamma][alpha].to_string();
        return false;
      }
    }
  return true;
}

}  // namespace qg
