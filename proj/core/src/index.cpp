#include "lieindex/index.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "lieindex/errors.hpp"
#include "lieindex/linalg.hpp"

namespace lieindex {
namespace {

struct TrialOutcome {
  std::size_t rank = 0;
  std::vector<std::uint64_t> point;
};

/// Linear forms with coefficients reduced mod p once per rank computation.
class ModularForms {
 public:
  ModularForms(const LinearFormMatrix& m, PrimeModulus p) : rows_(m.rows()), cols_(m.cols()), p_(p) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (const auto& e : m.row(i)) {
        Entry entry{i, e.col, {}};
        for (const auto& [k, c] : e.form) entry.terms.emplace_back(k, Fp::from_rational(c, p));
        entries_.push_back(std::move(entry));
      }
    }
  }

  Matrix<Fp> specialize(const std::vector<Fp>& point) const {
    Matrix<Fp> m(rows_, cols_);
    for (const auto& e : entries_) {
      Fp value;
      for (const auto& [k, c] : e.terms) value += c * point[k];
      m(e.row, e.col) = value;
    }
    return m;
  }

 private:
  struct Entry {
    std::size_t row, col;
    std::vector<std::pair<std::size_t, Fp>> terms;
  };
  std::size_t rows_, cols_;
  PrimeModulus p_;
  std::vector<Entry> entries_;
};

TrialOutcome run_trial(const ModularForms& forms, std::size_t variables, PrimeModulus p, std::uint64_t seed,
                       std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> uniform(0, p.value() - 1);
  TrialOutcome out;
  std::vector<Fp> point;
  point.reserve(variables);
  for (std::size_t k = 0; k < variables; ++k) {
    out.point.push_back(uniform(rng));
    point.emplace_back(out.point.back(), p);
  }
  out.rank = rank(forms.specialize(point));
  return out;
}

Rational failure_bound(std::size_t degree, std::uint64_t p, std::size_t trials) {
  Rational per_trial(Integer(static_cast<unsigned long>(degree)), Integer(static_cast<unsigned long>(p)));
  per_trial.canonicalize();
  Rational bound = 1;
  for (std::size_t t = 0; t < trials; ++t) bound *= per_trial;
  return bound;
}

std::vector<TrialOutcome> run_trials(const LinearFormMatrix& m, PrimeModulus p, std::uint64_t seed,
                                     std::size_t first_trial, std::size_t count) {
  const ModularForms forms(m, p);
  std::vector<std::future<TrialOutcome>> futures;
  for (std::size_t t = first_trial; t < first_trial + count; ++t)
    futures.push_back(std::async(std::launch::async, run_trial, std::cref(forms), m.variables(), p, seed, t));
  std::vector<TrialOutcome> outcomes;
  for (auto& f : futures) outcomes.push_back(f.get());
  return outcomes;
}

LinearFunctional lift(const std::vector<std::uint64_t>& point) {
  LinearFunctional ell;
  for (std::uint64_t v : point) ell.coords.emplace_back(Integer(static_cast<unsigned long>(v)));
  return ell;
}

}  // namespace

GenericRankResult generic_rank(const LinearFormMatrix& m, const RankOptions& options) {
  if (options.trials == 0) throw InvalidArgument("generic_rank needs at least one trial");
  const PrimeModulus p = options.prime.value_or(PrimeModulus::from_environment());
  GenericRankResult result;
  result.method.seed = options.seed;
  result.method.prime = p.value();
  result.method.trials = options.trials;
  const std::size_t size = std::max(m.rows(), m.cols());

  if (options.certify) {
    if (size > options.certify_gate)
      throw CertifyGateError("certified rank is limited to size " + std::to_string(options.certify_gate) +
                             "; matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    result.method.kind = RankMethod::Kind::Certified;
    result.method.trials = 0;
    result.method.failure_bound = 0;
    // Zero rows and columns do not change the rank; drop them first.
    std::vector<std::size_t> live_rows, live_cols;
    std::vector<bool> col_used(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.row(i).empty()) live_rows.push_back(i);
      for (const auto& e : m.row(i)) col_used[e.col] = true;
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (col_used[j]) live_cols.push_back(j);
    LinearFormMatrix compact(live_rows.size(), live_cols.size(), m.variables());
    std::vector<std::size_t> col_position(m.cols());
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_position[live_cols[j]] = j;
    for (std::size_t r = 0; r < live_rows.size(); ++r)
      for (const auto& e : m.row(live_rows[r])) compact.set(r, col_position[e.col], e.form);
    result.rank = bareiss_rank(compact.to_polynomials());
    return result;
  }

  result.method.kind = RankMethod::Kind::Randomized;
  result.method.failure_bound = failure_bound(size, p.value(), options.trials);
  const auto outcomes = run_trials(m, p, options.seed, 0, options.trials);
  const auto best = std::max_element(outcomes.begin(), outcomes.end(),
                                     [](const TrialOutcome& a, const TrialOutcome& b) { return a.rank < b.rank; });
  result.rank = best->rank;
  result.best_point = best->point;
  return result;
}

Matrix<Rational> skew_form(const LieAlgebra& g, const LinearFunctional& ell) {
  const std::size_t n = g.dim();
  if (ell.coords.size() != n)
    throw InvalidArgument("functional has length " + std::to_string(ell.coords.size()) + ", algebra has dim " +
                          std::to_string(n));
  Matrix<Rational> b(n, n);
  for (const auto& entry : g.nonzero_brackets()) {
    Rational value = 0;
    for (const auto& [k, c] : entry.coeffs) value += c * ell.coords[k];
    b(entry.i, entry.j) = value;
    b(entry.j, entry.i) = -value;
  }
  return b;
}

StabilizerResult stabilizer(const LieAlgebra& g, const LinearFunctional& ell) {
  Matrix<Rational> b = skew_form(g, ell);
  Subspace radical = Subspace::span(g.dim(), nullspace(b));
  const std::size_t d = radical.dim();
  return StabilizerResult{ell, std::move(b), std::move(radical), d};
}

IndexReport index(const LieAlgebra& g, const IndexOptions& options) {
  IndexReport report;
  const std::size_t n = g.dim();
  report.dim = n;
  report.center_dim = center(g).dim();
  const StructureMatrix m = structure_matrix(g);
  GenericRankResult rank_result = generic_rank(m, options.rank);
  report.generic_rank = rank_result.rank;
  report.method = rank_result.method;

  if (options.witness) {
    // Witness points come from randomized trials even in certified mode;
    // keep drawing (deterministically) until one reaches the generic rank.
    const PrimeModulus p(rank_result.method.prime);
    std::vector<std::uint64_t> point = rank_result.best_point;
    std::size_t next_trial = options.rank.certify ? 0 : options.rank.trials;
    std::optional<LinearFunctional> found;
    for (std::size_t attempt = 0; attempt < 64 && !found; ++attempt) {
      if (point.empty() && n > 0) {
        point = run_trials(m, p, options.rank.seed, next_trial++, 1).front().point;
      }
      LinearFunctional ell = lift(point);
      const std::size_t exact_rank = rank(skew_form(g, ell));
      if (exact_rank > report.generic_rank) {
        // A rational point can only expose a larger rank if the randomized
        // estimate undershot; the exact value is still a valid lower bound.
        if (options.rank.certify) throw InternalInconsistency("witness rank exceeds certified generic rank");
        report.generic_rank = exact_rank;
      }
      if (exact_rank == report.generic_rank) found = std::move(ell);
      point.clear();
    }
    if (!found) throw InternalInconsistency("no witness functional reached the generic rank");
    report.witness = std::move(found);
  }
  if (report.generic_rank % 2 != 0) throw InternalInconsistency("generic rank of a skew matrix must be even");
  report.index = n - report.generic_rank;
  return report;
}

std::size_t index_by_sampling(const LieAlgebra& g, std::size_t samples, std::uint64_t seed, int bound) {
  if (samples == 0) throw InvalidArgument("index_by_sampling needs at least one sample");
  const std::size_t n = g.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> uniform(-bound, bound);
  std::size_t best = n;
  for (std::size_t s = 0; s < samples; ++s) {
    LinearFunctional ell;
    for (std::size_t k = 0; k < n; ++k) ell.coords.emplace_back(uniform(rng));
    best = std::min(best, n - rank(skew_form(g, ell)));
  }
  return best;
}

OomsResult ooms_criterion(const LieAlgebra& g, const Subspace& h, const RankOptions& options) {
  if (auto pair = find_nonabelian_pair(g, h)) throw NotAbelian(pair->first, pair->second);
  OomsResult out;
  out.rect_rank = generic_rank(commutator_matrix(g, h), options).rank;
  out.holds = out.rect_rank == g.dim() - h.dim();
  if (out.holds) out.predicted_index = 2 * h.dim() - g.dim();
  return out;
}

AlphaSandwich alpha_sandwich(const LieAlgebra& g, const Subspace& candidate, const RankOptions& options) {
  if (auto pair = find_nonabelian_pair(g, candidate)) throw NotAbelian(pair->first, pair->second);
  IndexOptions index_options;
  index_options.rank = options;
  const std::size_t chi = index(g, index_options).index;
  AlphaSandwich out;
  out.lower = candidate.dim();
  out.upper = (chi + g.dim()) / 2;
  out.certified = out.lower == out.upper;
  return out;
}

}  // namespace lieindex
