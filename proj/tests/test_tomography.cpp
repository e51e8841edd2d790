// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "stats.hpp"
#include "qpt/bootstrap.hpp"
#include "qpt/errors.hpp"
#include "qpt/multi_pair.hpp"
#include "qpt/optics.hpp"
#include "qpt/tomography.hpp"

using namespace qpt;

namespace {

const double kRt2 = std::sqrt(2.0);

ComplexMatrix fig3_device() { return compile_device(parse_plates("0.45:-0.138")).unitary_matrix(); }

ComplexMatrix fig4_device() {
  return compile_device(parse_plates("0.45:-0.138, 1:0.29")).unitary_matrix();
}

CorrelationTable exact_output(const ComplexMatrix &u, const BipartiteState &in) {
  return exact_correlations(propagate(QuantumChannel::unitary(u), in));
}

BipartiteState diag_state(double eps) {
  ComplexMatrix psi = ComplexMatrix::Zero(2, 2);
  psi(0, 0) = std::cos(eps);
  psi(1, 1) = std::sin(eps);
  return BipartiteState::pure(psi);
}

}  // namespace

TEST(QTensor, examples) {
  EXPECT_EQ(q_tensor(0, 1, 0, 0), Complex(1));
  EXPECT_EQ(q_tensor(0, 1, 3, 3), Complex(-1));
  EXPECT_EQ(q_tensor(1, 0, 2, 2), Complex(1));
  EXPECT_THROW(q_tensor(2, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(q_tensor(0, 0, 4, 0), std::invalid_argument);
  EXPECT_THROW(q_tensor(0, 0, 0, 0, {2, 0}), std::invalid_argument);
}

TEST(EstimateP, examples) {
  EXPECT_NEAR(estimate_p(exact_correlations(triplet_state())), 0.5, 1e-15);
  EXPECT_NEAR(estimate_p(exact_correlations(maximally_mixed_state())), 0.25, 1e-15);
  const CorrelationTable b0 = exact_correlations(bell_state(PauliIndex(0)));
  try {
    estimate_p(b0);
    FAIL();
  } catch (const DegenerateReferenceError &e) {
    EXPECT_NEAR(e.p(), 0.0, 1e-15);
  }
  EXPECT_NEAR(estimate_p(b0, {0, 0}), 0.5, 1e-15);
}

// p is |Psi_ref|^2 for any reference.
TEST(EstimateP, squared_reference_amplitude) {
  std::mt19937_64 rng(60);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix psi = qpt::testing::random_full_rank_psi(rng);
    const CorrelationTable t = exact_correlations(BipartiteState::pure(psi));
    for (const BasisPair r : kReferenceOrder) {
      ASSERT_NEAR(estimate_p(t, r, 0.0), std::norm(psi(r.n, r.m)), 1e-12);
    }
  }
}

TEST(ReconstructState, examples) {
  const ReconstructionResult t = reconstruct_state(exact_correlations(triplet_state()));
  EXPECT_EQ(t.kind, ReconstructionKind::kInputState);
  EXPECT_TRUE(approx_equal(t.matrix, pauli(1) / kRt2, 1e-14));
  EXPECT_EQ(*t.reference, (BasisPair{0, 1}));
  EXPECT_NEAR(*t.p, 0.5, 1e-15);
  EXPECT_NEAR(*t.state_norm, 1.0, 1e-14);
  EXPECT_NEAR(*t.condition_number, 1.0, 1e-12);

  ReconstructionOptions ref00;
  ref00.reference = BasisPair{0, 0};
  const ReconstructionResult b3 =
      reconstruct_state(exact_correlations(bell_state(PauliIndex(3))), ref00);
  EXPECT_TRUE(approx_equal(b3.matrix, pauli(3) / kRt2, 1e-14));
}

TEST(ReconstructState, auto_reference_and_failure) {
  const ReconstructionResult b0 = reconstruct_state(exact_correlations(bell_state(PauliIndex(0))));
  EXPECT_EQ(*b0.reference, (BasisPair{1, 1}));
  EXPECT_TRUE(approx_equal(b0.matrix, pauli(0) / kRt2, 1e-14));

  ReconstructionOptions fixed;
  fixed.reference = BasisPair{0, 1};
  EXPECT_THROW(reconstruct_state(exact_correlations(bell_state(PauliIndex(0))), fixed),
               DegenerateReferenceError);

  // Every reference below the floor.
  ReconstructionOptions high;
  high.reference_floor = 0.9;
  EXPECT_THROW(reconstruct_state(exact_correlations(triplet_state()), high),
               DegenerateReferenceError);
}

TEST(ReconstructState, bell_states_up_to_phase) {
  for (int j = 0; j < 4; ++j) {
    const ReconstructionResult r = reconstruct_state(exact_correlations(bell_state(PauliIndex(j))));
    EXPECT_TRUE(approx_equal_up_to_phase(r.matrix, pauli(j) / kRt2, 1e-12)) << j;
  }
}

TEST(ReconstructState, reference_independence) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix psi = qpt::testing::random_full_rank_psi(rng);
    const CorrelationTable t = exact_correlations(BipartiteState::pure(psi));
    for (const BasisPair r : kReferenceOrder) {
      if (std::norm(psi(r.n, r.m)) < 1e-3) continue;
      ReconstructionOptions o;
      o.reference = r;
      const ComplexMatrix est = reconstruct_state(t, o).matrix;
      ASSERT_TRUE(approx_equal_up_to_phase(est, psi, 1e-9)) << r.label();
      ASSERT_GE(est(r.n, r.m).real(), 0.0);
      ASSERT_NEAR(est(r.n, r.m).imag(), 0.0, 1e-12);
    }
  }
}

TEST(ReconstructState, finite_sample_within_errors) {
  const auto run = run_experiment(triplet_state(), ExperimentPlan::uniform(8000, 42));
  const CorrelationTable t = correlations_from_events(run.events);
  const ReconstructionResult r = reconstruct_state(t);
  const BootstrapResult b = bootstrap_errors(
      run.events, [](const CorrelationTable &tab) { return reconstruct_state(tab).matrix; });
  const ComplexMatrix truth = pauli(1) / kRt2;
  for (int n = 0; n < 2; ++n) {
    for (int m = 0; m < 2; ++m) {
      EXPECT_LE(std::abs(r.matrix(n, m).real() - truth(n, m).real()), 3 * b.std_re(n, m) + 1e-12);
      EXPECT_LE(std::abs(r.matrix(n, m).imag() - truth(n, m).imag()), 3 * b.std_im(n, m) + 1e-12);
    }
  }
  EXPECT_NEAR(*r.state_norm, 1.0, 0.05);
}

TEST(ReconstructUnitary, examples) {
  const BipartiteState t = triplet_state();
  const ReconstructionResult id = reconstruct_unitary(exact_output(pauli(0), t), t);
  EXPECT_EQ(id.kind, ReconstructionKind::kDeviceUnitary);
  EXPECT_TRUE(approx_equal_up_to_phase(id.matrix, pauli(0), 1e-12));
  EXPECT_LT(*id.unitarity_deviation, 1e-10);
  EXPECT_NEAR(*id.occurrence_probability, 1.0, 0.0);

  const ReconstructionResult f3 = reconstruct_unitary(exact_output(fig3_device(), t), t);
  EXPECT_GE(fidelity_unitary(f3.matrix, fig3_device()), 1 - 1e-10);
  const ReconstructionResult f4 = reconstruct_unitary(exact_output(fig4_device(), t), t);
  EXPECT_GE(fidelity_unitary(f4.matrix, fig4_device()), 1 - 1e-10);
}

TEST(ReconstructUnitary, gauge_fixed_output) {
  const BipartiteState t = triplet_state();
  const ReconstructionResult r = reconstruct_unitary(exact_output(fig3_device(), t), t);
  const Complex d = det(r.matrix);
  EXPECT_NEAR(d.imag(), 0.0, 1e-12);
  EXPECT_GT(d.real(), 0.0);
  Eigen::Index i = 0, j = 0;
  r.matrix.real().cwiseAbs().maxCoeff(&i, &j);
  EXPECT_GT(r.matrix(i, j).real(), 0.0);
}

TEST(ReconstructUnitary, global_phase_changes_nothing) {
  const BipartiteState t = triplet_state();
  const ComplexMatrix u = fig4_device();
  const ReconstructionResult a = reconstruct_unitary(exact_output(u, t), t);
  for (double alpha : {0.3, 1.7, 3.1, -2.2}) {
    const ReconstructionResult b =
        reconstruct_unitary(exact_output(std::polar(1.0, alpha) * u, t), t);
    EXPECT_TRUE(approx_equal(a.matrix, b.matrix, 1e-12)) << alpha;
  }
}

TEST(ReconstructUnitary, unfaithful_input) {
  ComplexMatrix prod = ComplexMatrix::Zero(2, 2);
  prod(0, 0) = 1;
  const BipartiteState in = BipartiteState::pure(prod);
  try {
    reconstruct_unitary(exact_correlations(in), in);
    FAIL();
  } catch (const UnfaithfulInputError &e) {
    EXPECT_TRUE(std::isinf(e.condition_number()) || e.condition_number() > 1e7);
  }
  EXPECT_THROW(reconstruct_unitary(exact_correlations(triplet_state()), maximally_mixed_state()),
               std::invalid_argument);
}

TEST(ReconstructUnitary, random_round_trip) {
  std::mt19937_64 rng(62);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix u = qpt::testing::random_unitary(rng, 2);
    const BipartiteState in = BipartiteState::pure(qpt::testing::random_full_rank_psi(rng));
    const ReconstructionResult r = reconstruct_unitary(exact_output(u, in), in);
    ASSERT_GE(fidelity_unitary(r.matrix, u), 1 - 1e-9);
  }
}

TEST(FixUnitaryGauge, sign_and_degenerate_cases) {
  const ComplexMatrix y = pauli(2);
  const ComplexMatrix g = fix_unitary_gauge(y);
  EXPECT_TRUE(approx_equal_up_to_phase(g, y));
  EXPECT_NEAR(det(g).imag(), 0.0, 1e-14);
  EXPECT_GT(det(g).real(), 0.0);
  // Same result for any global phase.
  EXPECT_TRUE(approx_equal(fix_unitary_gauge(std::polar(1.0, 0.8) * y), g, 1e-14));
  EXPECT_TRUE(approx_equal(fix_unitary_gauge(-g), g, 1e-14));

  ComplexMatrix singular = ComplexMatrix::Zero(2, 2);
  singular(0, 1) = Complex(0, -2);
  singular(1, 1) = 0.5;
  const ComplexMatrix s = fix_unitary_gauge(singular);
  EXPECT_NEAR(s(0, 1).real(), 2.0, 1e-15);
  EXPECT_NEAR(s(0, 1).imag(), 0.0, 1e-15);
}

TEST(ReconstructChoi, examples) {
  const BipartiteState t = triplet_state();
  const ReconstructionResult id = reconstruct_choi(exact_correlations(t), t);
  EXPECT_EQ(id.kind, ReconstructionKind::kDeviceChoi);
  EXPECT_TRUE(approx_equal(id.matrix, QuantumChannel::identity().choi(), 1e-10));
  EXPECT_FALSE(id.occurrence_probability.has_value());

  const QuantumChannel dep = QuantumChannel::depolarizing(0.3);
  const ReconstructionResult d = reconstruct_choi(exact_correlations(propagate(dep, t)), t);
  const RealVector ev = *d.choi_eigenvalues;
  EXPECT_NEAR(ev(0), 0.15, 1e-9);
  EXPECT_NEAR(ev(1), 0.15, 1e-9);
  EXPECT_NEAR(ev(2), 0.15, 1e-9);
  EXPECT_NEAR(ev(3), 1.55, 1e-9);
  EXPECT_LT(distance_choi(d.matrix, dep.choi()), 1e-9);
  EXPECT_NEAR(*d.negativity, 0.0, 1e-12);
}

TEST(ReconstructChoi, non_maximal_input_and_amplitude_damping) {
  const BipartiteState in = diag_state(0.4);
  const QuantumChannel ad = QuantumChannel::amplitude_damping(0.35);
  const ReconstructionResult r = reconstruct_choi(exact_correlations(propagate(ad, in)), in);
  EXPECT_TRUE(approx_equal(r.matrix, ad.choi(), 1e-10));
}

// A trace-decreasing filter: the shape of the Choi matrix is recovered, the
// occurrence probability is not.
TEST(ReconstructChoi, trace_decreasing_filter) {
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  k(0, 0) = 1.0;
  k(1, 1) = 0.5;
  const QuantumChannel f = QuantumChannel::from_kraus({k});
  const BipartiteState t = triplet_state();
  const ReconstructionResult r = reconstruct_choi(exact_correlations(propagate(f, t)), t);
  EXPECT_NEAR(r.matrix.trace().real(), 2.0, 1e-12);
  EXPECT_LT(distance_choi(r.matrix, f.choi()), 1e-10);
  EXPECT_FALSE(r.occurrence_probability.has_value());
}

TEST(ReconstructChoi, agrees_with_unitary_estimator) {
  std::mt19937_64 rng(63);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix u = qpt::testing::random_unitary(rng, 2);
    const BipartiteState in = BipartiteState::pure(qpt::testing::random_full_rank_psi(rng));
    const CorrelationTable tab = exact_output(u, in);
    const ReconstructionResult c = reconstruct_choi(tab, in);
    const ReconstructionResult v = reconstruct_unitary(tab, in);
    const HermitianEigen e = eigen_hermitian(c.matrix);
    ASSERT_NEAR(e.values(3), 2.0, 1e-9);
    ASSERT_LT(e.values.head(3).cwiseAbs().maxCoeff(), 1e-9);
    const ComplexMatrix dominant = unvec(e.vectors.col(3), 2, 2);
    ASSERT_GE(fidelity_unitary(dominant, v.matrix), 1 - 1e-8);
  }
}

TEST(ReconstructChoi, psd_projection_is_opt_in) {
  CorrelationTable t = exact_correlations(triplet_state());
  t.entries(3, 3) = -1.2;  // unphysical
  const ReconstructionResult raw = reconstruct_choi(t, triplet_state());
  EXPECT_GT(*raw.negativity, 0.01);
  EXPECT_LT(raw.choi_eigenvalues->minCoeff(), 0.0);
  ReconstructionOptions o;
  o.project_psd = true;
  const ReconstructionResult clipped = reconstruct_choi(t, triplet_state(), o);
  EXPECT_GE(clipped.choi_eigenvalues->minCoeff(), 0.0);
  EXPECT_GE(eigen_hermitian(clipped.matrix).values.minCoeff(), -1e-12);
}

TEST(Metrics, examples) {
  std::mt19937_64 rng(64);
  const ComplexMatrix u = qpt::testing::random_unitary(rng, 2);
  EXPECT_NEAR(fidelity_unitary(u, std::polar(1.0, 0.77) * u), 1.0, 1e-15);
  EXPECT_NEAR(fidelity_unitary(pauli(0), pauli(1)), 0.0, 1e-15);
  EXPECT_THROW(fidelity_unitary(pauli(0), ComplexMatrix::Identity(4, 4)), std::invalid_argument);

  for (double p : {0.0, 0.1, 0.3, 1.0}) {
    EXPECT_NEAR(distance_choi(QuantumChannel::identity().choi(),
                              QuantumChannel::depolarizing(p).choi()),
                0.75 * p, 1e-12);
  }
  EXPECT_THROW(distance_choi(ComplexMatrix::Identity(4, 4), ComplexMatrix::Identity(2, 2)),
               std::invalid_argument);
}

TEST(Faithfulness, examples) {
  const Faithfulness t = faithfulness_check(triplet_state());
  EXPECT_TRUE(t.full_rank);
  EXPECT_NEAR(t.condition_number, 1.0, 1e-12);
  const Faithfulness d = faithfulness_check(diag_state(0.1));
  EXPECT_TRUE(d.full_rank);
  EXPECT_NEAR(d.condition_number, std::cos(0.1) / std::sin(0.1), 1e-10);
  EXPECT_NEAR(d.condition_number, 9.97, 0.01);
  EXPECT_FALSE(faithfulness_check(diag_state(0.0)).full_rank);
}

TEST(Bootstrap, rejects_too_few_resamples) {
  const auto run = run_experiment(triplet_state(), ExperimentPlan::uniform(900, 1));
  BootstrapOptions o;
  o.resamples = 1;
  EXPECT_THROW(bootstrap_errors(run.events,
                                [](const CorrelationTable &t) { return reconstruct_state(t).matrix; },
                                o),
               std::invalid_argument);
  o.resamples = 99;
  EXPECT_THROW(bootstrap_errors(run.events,
                                [](const CorrelationTable &t) { return reconstruct_state(t).matrix; },
                                o),
               std::invalid_argument);
}

TEST(Bootstrap, deterministic_given_seed) {
  const BipartiteState in = triplet_state();
  const auto run = run_experiment(propagate(QuantumChannel::unitary(fig3_device()), in),
                                  ExperimentPlan::uniform(8000, 42));
  const TableEstimator est = [&](const CorrelationTable &t) {
    return reconstruct_unitary(t, in).matrix;
  };
  BootstrapOptions o;
  o.resamples = 200;
  o.seed = 5;
  const BootstrapResult a = bootstrap_errors(run.events, est, o);
  const BootstrapResult b = bootstrap_errors(run.events, est, o);
  EXPECT_EQ(a.std_re, b.std_re);
  EXPECT_EQ(a.std_im, b.std_im);
  o.seed = 6;
  const BootstrapResult c = bootstrap_errors(run.events, est, o);
  EXPECT_NE(a.std_re, c.std_re);
  // Order of magnitude at 8000 events.
  const double mean = (a.std_re.sum() + a.std_im.sum()) / 8.0;
  EXPECT_GT(mean, 3e-3);
  EXPECT_LT(mean, 5e-2);
  EXPECT_EQ(a.redraws, 0);
  EXPECT_FALSE(a.redraw_warning);
}

TEST(Bootstrap, errors_scale_as_inverse_root_n) {
  const BipartiteState in = triplet_state();
  const BipartiteState out = propagate(QuantumChannel::unitary(fig3_device()), in);
  const TableEstimator est = [&](const CorrelationTable &t) {
    return reconstruct_unitary(t, in).matrix;
  };
  std::vector<double> ns, errs, amplitudes;
  for (std::uint64_t n : {2000u, 8000u, 32000u}) {
    const auto run = run_experiment(out, ExperimentPlan::uniform(n, 77));
    BootstrapOptions o;
    o.resamples = 300;
    o.seed = 3;
    const BootstrapResult b = bootstrap_errors(run.events, est, o);
    const double mean = (b.std_re.sum() + b.std_im.sum()) / 8.0;
    ns.push_back(double(n));
    errs.push_back(mean);
    amplitudes.push_back(mean * std::sqrt(double(n)));
  }
  const double lo = *std::min_element(amplitudes.begin(), amplitudes.end());
  const double hi = *std::max_element(amplitudes.begin(), amplitudes.end());
  EXPECT_LT(hi / lo, 1.2);
  EXPECT_NEAR(qpt::testing::log_log_slope(ns, errs), -0.5, 0.1);
}

// Resamples on which the estimator fails are redrawn and counted.
TEST(Bootstrap, counts_redraws) {
  OutcomeCounts counts{};
  for (auto &c : counts) c = {5, 5, 5, 5};
  counts[8] = {17, 3, 0, 0};  // zz: three disagreeing events out of twenty
  const TableEstimator est = [](const CorrelationTable &t) {
    if (t(3, 3) > 0.95) {
      throw DegenerateReferenceError("all zz events agree", 0.0);
    }
    return reconstruct_state(t).matrix;
  };
  BootstrapOptions o;
  o.resamples = 100;
  const BootstrapResult b = bootstrap_errors(counts, est, o);
  EXPECT_GT(b.redraws, 1);
  EXPECT_TRUE(b.redraw_warning);

  // Only the point estimate succeeds.
  int calls = 0;
  const TableEstimator always = [&calls](const CorrelationTable &t) {
    if (calls++ > 0) {
      throw NullEventError("resample rejected", 0.0);
    }
    return reconstruct_state(t).matrix;
  };
  EXPECT_THROW(bootstrap_errors(counts, always, o), std::runtime_error);
}

TEST(StatisticalConsistency, two_sigma_coverage) {
  const BipartiteState in = triplet_state();
  const ComplexMatrix truth = fix_unitary_gauge(fig3_device());
  const BipartiteState out = propagate(QuantumChannel::unitary(fig3_device()), in);
  const TableEstimator est = [&](const CorrelationTable &t) {
    return reconstruct_unitary(t, in).matrix;
  };
  int covered = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto run = run_experiment(out, ExperimentPlan::uniform(8000, seed));
    const ComplexMatrix u = est(correlations_from_events(run.events));
    BootstrapOptions o;
    o.resamples = 200;
    o.seed = 1000 + seed;
    const BootstrapResult b = bootstrap_errors(run.events, est, o);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        covered += std::abs(u(i, j).real() - truth(i, j).real()) <= 2 * b.std_re(i, j);
        covered += std::abs(u(i, j).imag() - truth(i, j).imag()) <= 2 * b.std_im(i, j);
        total += 2;
      }
    }
  }
  EXPECT_GE(double(covered) / total, 0.9);
}

TEST(Conditioning, error_grows_with_condition_number) {
  const ComplexMatrix u = fig3_device();
  std::vector<double> conds, errs;
  for (double eps : {0.75, 0.6, 0.45, 0.3, 0.2, 0.12}) {
    const BipartiteState in = diag_state(eps);
    const BipartiteState out = propagate(QuantumChannel::unitary(u), in);
    const auto run = run_experiment(out, ExperimentPlan::uniform(8000, 9));
    BootstrapOptions o;
    o.resamples = 200;
    const BootstrapResult b = bootstrap_errors(
        run.events, [&](const CorrelationTable &t) { return reconstruct_unitary(t, in).matrix; },
        o);
    conds.push_back(faithfulness_check(in).condition_number);
    errs.push_back((b.std_re.sum() + b.std_im.sum()) / 8.0);
  }
  EXPECT_GT(qpt::testing::spearman(conds, errs), 0.9);
}

TEST(TwoPair, identity_cnot_swap) {
  const BipartiteState t = triplet_state();
  for (const char *name : {"identity", "cnot", "swap"}) {
    const QuantumChannel dev = QuantumChannel::unitary(two_qubit_gate(name));
    const ComplexMatrix rho = two_pair_output_density(dev, t, t);
    const ReconstructionResult r = reconstruct_two_qubit_device(exact_pauli_tensor(rho), t, t);
    const ComplexVector v = vec(two_qubit_gate(name));
    const ComplexMatrix truth = v * v.adjoint();
    EXPECT_LT(distance_choi(r.matrix, truth), 1e-10) << name;
    EXPECT_NEAR(r.matrix.trace().real(), 4.0, 1e-12);
    const RealVector ev = *r.choi_eigenvalues;
    EXPECT_NEAR(ev(15), 4.0, 1e-9) << name;
    EXPECT_LT(ev.head(15).cwiseAbs().maxCoeff(), 1e-9) << name;
  }
}

TEST(TwoPair, cnot_truth_table) {
  const ComplexMatrix c = two_qubit_gate("cnot");
  // |10> -> |11>: first qubit controls.
  EXPECT_EQ(c(3, 2), Complex(1));
  EXPECT_EQ(c(2, 2), Complex(0));
  EXPECT_THROW(two_qubit_gate("toffoli"), std::invalid_argument);
}

TEST(TwoPair, non_maximal_pairs_and_errors) {
  const BipartiteState a = diag_state(0.5);
  const BipartiteState b = BipartiteState::pure(
      [] {
        std::mt19937_64 rng(70);
        return qpt::testing::random_full_rank_psi(rng);
      }());
  const QuantumChannel dev = QuantumChannel::unitary(two_qubit_gate("cnot"));
  const ReconstructionResult r =
      reconstruct_two_qubit_device(exact_pauli_tensor(two_pair_output_density(dev, a, b)), a, b);
  EXPECT_LT(distance_choi(r.matrix, dev.choi()), 1e-9);

  EXPECT_THROW(reconstruct_two_qubit_device(PauliTensor(2), a, b), std::invalid_argument);
  EXPECT_THROW(reconstruct_two_qubit_device(PauliTensor(4), diag_state(0.0), b),
               UnfaithfulInputError);
}

TEST(TwoPair, sampled_cnot_close) {
  const BipartiteState t = triplet_state();
  const QuantumChannel dev = QuantumChannel::unitary(two_qubit_gate("cnot"));
  const ComplexMatrix rho = two_pair_output_density(dev, t, t);
  const auto events = run_multi_party_experiment(rho, 81 * 2000, 11);
  const ReconstructionResult r =
      reconstruct_two_qubit_device(pauli_tensor_from_events(4, events), t, t);
  EXPECT_LT(distance_choi(r.matrix, dev.choi()), 0.15);
}
