#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unsupported/Eigen/MatrixFunctions>

#include "core/lindblad.hpp"
#include "core/metrics.hpp"
#include "core/propagate.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace dcg;

namespace {

Envelope random_envelope(Rng& rng, std::size_t n, double scale) {
  Envelope e;
  e.dt_ns = kDefaultDtNs;
  e.samples.resize(n);
  for (auto& s : e.samples)
    s = Complex(scale * (2.0 * rng.next_double() - 1.0), scale * (2.0 * rng.next_double() - 1.0));
  return e;
}

QubitModel plain_two_level(double xi = 0.0) {
  QubitModel m;
  m.levels = 2;
  m.detuning = xi;
  return m;
}

}  // namespace

TEST_CASE("matrix exponential agrees with a Pade reference") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int d = trial % 2 == 0 ? 2 : 3;
    Mat h = Mat::Zero(d, d);
    for (int r = 0; r < d; ++r) {
      h(r, r) = 2.0 * rng.next_double() - 1.0;
      for (int c = r + 1; c < d; ++c) {
        h(r, c) = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        h(c, r) = std::conj(h(r, c));
      }
    }
    double tau = 0.5 + rng.next_double();
    Mat ref = (Complex(0, -tau) * h).exp();
    Mat got = expm_herm(h, tau);
    CHECK((got - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("zero Hamiltonian propagates to the identity") {
  Mat u = propagate_piecewise([](double) { return Mat::Zero(2, 2); }, 40.0, kDefaultDtNs);
  CHECK((u - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("constant detuning gives the diagonal phase propagator") {
  double xi = 0.31, T = 17.0;
  Mat h = 0.5 * xi * pauli_z();
  Mat u = propagate_piecewise([&](double) { return h; }, T, kDefaultDtNs);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, -xi * T / 2.0)) < 1e-12);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, xi * T / 2.0)) < 1e-12);
  CHECK(std::abs(u(0, 1)) < 1e-14);
}

TEST_CASE("resonant Rabi quarter rotation splits the population evenly") {
  // Omega * T = pi/2 -> |<0|U|0>|^2 = cos^2(pi/4) = 1/2 (closed form)
  double T = 40.0, omega = (kPi / 2.0) / T;
  Mat h = 0.5 * omega * pauli_x();
  Mat u = propagate_piecewise([&](double) { return h; }, T, kDefaultDtNs);
  CHECK(std::norm(u(0, 0)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("grid commensurability is enforced") {
  CHECK_THROWS_AS(propagate_piecewise([](double) { return Mat::Zero(2, 2); }, 40.001, 1.0 / 64),
                  GridError);
}

TEST_CASE("non-finite Hamiltonian entries are rejected") {
  Mat bad = Mat::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(expm_herm(bad, 0.1), NumericError);
}

TEST_CASE("drive Hamiltonian matches its definition") {
  QubitModel m = plain_two_level();
  SUBCASE("real drive is Omega sx/2") {
    Mat h = drive_hamiltonian(Complex(0.2, 0.0), m);
    CHECK((h - 0.1 * pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("zero drive with detuning is xi sz/2") {
    Mat h = drive_hamiltonian(Complex(0.0, 0.0), m.with_detuning(0.05));
    CHECK((h - 0.025 * pauli_z()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("three-level ladder carries sqrt(2) coupling and 2xi+alpha") {
    QubitModel q0 = preset_qubit("Q0").with_detuning(0.01);
    Mat h = drive_hamiltonian(Complex(0.2, 0.0), q0);
    CHECK(std::abs(h(1, 2) - Complex(0.2 * std::sqrt(2.0) / 2.0, 0.0)) < 1e-15);
    CHECK(std::abs(h(2, 2).real() - (2.0 * 0.01 + q0.anharmonicity)) < 1e-15);
    CHECK(std::abs(h(1, 1).real() - 0.01) < 1e-15);
  }
  SUBCASE("unsupported level counts are rejected") {
    QubitModel bad = m;
    bad.levels = 4;
    CHECK_THROWS_AS(drive_hamiltonian(Complex(0.1, 0.0), bad), ModelError);
  }
}

TEST_CASE("unitarity and composition over random envelopes") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Envelope env = random_envelope(rng, 128, 0.4);
    QubitModel m = plain_two_level(0.02 * (2.0 * rng.next_double() - 1.0));
    if (trial % 3 == 1) {
      m = preset_qubit("Q0").without_decoherence();
      m.detuning = 0.01;
    }
    Mat u = propagate_envelope(env, m);
    CHECK(unitarity_defect(u) < 1e-10);

    // split the same envelope in two halves; product must match
    Envelope a = env, b = env;
    a.samples.resize(64);
    b.samples.erase(b.samples.begin(), b.samples.begin() + 64);
    Mat u2 = propagate_envelope(b, m) * propagate_envelope(a, m);
    CHECK((u - u2).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("halving dt converges at second order") {
  // smooth envelope, fixed detuning; error vs a dt/8 reference
  auto omega = [](double t) { return 0.35 * std::sin(kPi * t / 40.0); };
  QubitModel m = plain_two_level(0.04);
  auto propagate_dt = [&](double dt) {
    return propagate_piecewise(
        [&](double t) { return drive_hamiltonian(Complex(omega(t), 0.0), m); }, 40.0, dt);
  };
  Mat ref = propagate_dt(kDefaultDtNs / 8.0);
  double e1 = (propagate_dt(kDefaultDtNs) - ref).cwiseAbs().maxCoeff();
  double e2 = (propagate_dt(kDefaultDtNs / 2.0) - ref).cwiseAbs().maxCoeff();
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
}

TEST_CASE("pair propagation decouples at zero ZZ") {
  Rng rng(5);
  Envelope env = random_envelope(rng, 128, 0.3);
  for (auto& s : env.samples) s = Complex(s.real(), 0.0);
  PairModel pair;
  pair.target = plain_two_level();
  pair.spectator = plain_two_level();
  pair.zz = 0.0;
  Mat u = propagate_pair(env, pair, {});
  Mat expected = kron(propagate_envelope(env, pair.target), Mat::Identity(2, 2));
  CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("idle pair phase accumulation follows chi = +-zz") {
  // zero envelope for duration T, spectator frozen in |1> (its diagonal block)
  double T = 40.0, zz = rad_per_ns_from_mhz(-0.73);
  Envelope env;
  env.dt_ns = kDefaultDtNs;
  env.samples.assign(2560, Complex(0.0, 0.0));
  PairModel pair;
  pair.target = plain_two_level();
  pair.spectator = plain_two_level();
  pair.zz = zz;
  Mat u = propagate_pair(env, pair, {});
  Mat block(2, 2);
  block << u(1, 1), u(1, 3), u(3, 1), u(3, 3);
  // H_error reduces to -zz sz0/2, i.e. U = exp(+i zz T sz0/2)
  Mat expected = expm_herm(-0.5 * zz * pauli_z(), T);
  CHECK((block - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("pair block equals single-qubit propagation with chi = (-1)^s zz") {
  Rng rng(9);
  Envelope env = random_envelope(rng, 256, 0.3);
  for (auto& s : env.samples) s = Complex(s.real(), 0.0);
  double zz = rad_per_ns_from_mhz(-0.73);
  PairModel pair;
  pair.target = plain_two_level();
  pair.spectator = plain_two_level();
  pair.zz = zz;
  Mat u = propagate_pair(env, pair, {});
  for (int s = 0; s < 2; ++s) {
    Mat block(2, 2);
    block << u(0 + s, 0 + s), u(0 + s, 2 + s), u(2 + s, 0 + s), u(2 + s, 2 + s);
    double chi = (s == 0) ? zz : -zz;
    Mat single = propagate_envelope(env, pair.target.with_detuning(chi));
    CHECK((block - single).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("boundary flips compose with the evolution") {
  // X_pi at t=0 sends spectator |0> to |1>; the (1,0) spectator block of the
  // joint propagator must match the frozen-|1> evolution
  Rng rng(13);
  Envelope env = random_envelope(rng, 128, 0.2);
  for (auto& s : env.samples) s = Complex(s.real(), 0.0);
  double zz = rad_per_ns_from_mhz(-0.73);
  PairModel pair;
  pair.target = plain_two_level();
  pair.spectator = plain_two_level();
  pair.zz = zz;
  Mat u = propagate_pair(env, pair, {{0.0, true}});
  Mat block(2, 2);  // rows: spectator 1, cols: spectator 0
  block << u(1, 0), u(1, 2), u(3, 0), u(3, 2);
  Mat single = propagate_envelope(env, pair.target.with_detuning(-zz));
  CHECK((block - single).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("flip inside a drive segment is a sequencing error") {
  Envelope env;
  env.dt_ns = kDefaultDtNs;
  env.samples.assign(64, Complex(0.1, 0.0));
  PairModel pair;
  pair.target = plain_two_level();
  pair.spectator = plain_two_level();
  pair.zz = 0.001;
  CHECK_THROWS_AS(propagate_pair(env, pair, {{0.5, true}}), SequencingError);
  // a flip in a zero-drive gap inside the envelope is fine
  Envelope gap = env;
  for (std::size_t i = 24; i < 40; ++i) gap.samples[i] = Complex(0.0, 0.0);
  CHECK_NOTHROW(propagate_pair(gap, pair, {{0.5, true}}));
}

TEST_CASE("lindblad: pure relaxation limit at T2 = 2 T1 and T1 decay") {
  QubitModel m = plain_two_level();
  m.t1_ns = 1000.0;
  m.t2_ns = 2000.0;  // no pure dephasing
  auto ls = collapse_operators(m, true);
  CHECK(ls.size() == 1);  // only the downward jump survives (thermal = 0)

  Envelope idle;
  idle.dt_ns = kDefaultDtNs;
  idle.samples.assign(64 * 100, Complex(0.0, 0.0));  // 100 ns
  GateChannel ch = lindblad_propagate(idle, m);
  Mat rho1 = Mat::Zero(2, 2);
  rho1(1, 1) = 1.0;
  Mat out = ch.apply(rho1);
  CHECK(out(1, 1).real() == doctest::Approx(std::exp(-100.0 / 1000.0)).epsilon(1e-6));
}

TEST_CASE("lindblad: dephasing rate identity at T1 = T2") {
  QubitModel m = plain_two_level();
  m.t1_ns = 1000.0;
  m.t2_ns = 1000.0;
  // pure dephasing rate must be 1/T2 - 1/(2T1) = 1/(2T1)
  auto ls = collapse_operators(m, true);
  REQUIRE(ls.size() == 2);
  // the dephasing operator is sqrt(2 gamma_phi) diag(0,1); check its rate
  double gamma_phi = 0.5 * ls[1](1, 1).real() * ls[1](1, 1).real();
  CHECK(gamma_phi == doctest::Approx(1.0 / (2.0 * m.t1_ns)).epsilon(1e-12));
}

TEST_CASE("lindblad: invalid models are rejected") {
  QubitModel m = plain_two_level();
  m.t1_ns = 100.0;
  m.t2_ns = 300.0;  // > 2 T1
  Envelope idle;
  idle.samples.assign(64, Complex(0, 0));
  CHECK_THROWS_AS(lindblad_propagate(idle, m), ModelError);
  QubitModel neg = plain_two_level();
  neg.t1_ns = -1.0;
  CHECK_THROWS_AS(lindblad_propagate(idle, neg), ModelError);
}

TEST_CASE("lindblad maps preserve trace and positivity on random pulses") {
  Rng rng(21);
  QubitModel m = preset_qubit("Q0");
  for (int trial = 0; trial < 5; ++trial) {
    Envelope env = random_envelope(rng, 128, 0.2);
    GateChannel ch = lindblad_propagate(env, m);
    // random density matrix
    Mat g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        g(r, c) = Complex(rng.next_normal(), rng.next_normal());
    Mat rho = g * g.adjoint();
    rho /= rho.trace();
    Mat out = ch.apply(rho);
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-9);
    Eigen::SelfAdjointEigenSolver<Mat> es(out);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("thermal steady state matches the model excitation") {
  QubitModel m = plain_two_level();
  m.t1_ns = 200.0;
  m.t2_ns = 250.0;
  m.thermal_excitation = 0.055;
  Envelope idle;
  idle.dt_ns = 1.0 / 4;  // coarser grid is fine for idle evolution
  idle.samples.assign(4 * 2000, Complex(0.0, 0.0));  // 2 us >> T1
  GateChannel ch = lindblad_propagate(idle, m);
  Mat rho0 = Mat::Zero(2, 2);
  rho0(0, 0) = 1.0;
  Mat out = ch.apply(rho0);
  CHECK(out(1, 1).real() == doctest::Approx(0.055).epsilon(1e-4));
}

TEST_CASE("average gate fidelity basics") {
  Mat x90 = x_rotation(kPi / 2.0, 2);
  SUBCASE("channel equal to its target scores 1") {
    CHECK(average_gate_fidelity(GateChannel::from_unitary(x90), x90) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(average_gate_fidelity(GateChannel::from_unitary(x90).as_process(), x90) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("completely depolarizing channel scores 1/2") {
    GateChannel ch;
    ch.is_process = true;
    ch.total_dim = 2;
    Mat super = Mat::Zero(4, 4);
    // E(rho) = Tr(rho) I/2: vec(I/2) outer vec-trace
    super(0, 0) = super(0, 3) = 0.5;
    super(3, 0) = super(3, 3) = 0.5;
    ch.rep = super;
    CHECK(average_gate_fidelity(ch, Mat::Identity(2, 2)) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("non-unitary target is rejected") {
    Mat bad = Mat::Identity(2, 2) * 0.9;
    CHECK_THROWS_AS(average_gate_fidelity(GateChannel::from_unitary(x90), bad), ConfigError);
  }
}

TEST_CASE("unitary and process fidelity paths agree") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Envelope env = random_envelope(rng, 96, 0.3);
    Mat u = propagate_envelope(env, plain_two_level(0.01));
    Mat x90 = x_rotation(kPi / 2.0, 2);
    double f1 = average_gate_fidelity(GateChannel::from_unitary(u), x90);
    double f2 = average_gate_fidelity(GateChannel::from_unitary(u).as_process(), x90);
    CHECK(f1 == doctest::Approx(f2).epsilon(1e-10));
    double inf = unitary_infidelity(u, x90);
    CHECK(inf == doctest::Approx(1.0 - f1).epsilon(1e-8));
  }
}

TEST_CASE("leakage population") {
  SUBCASE("two-level channel embedded in three levels leaks nothing") {
    Mat u = Mat::Identity(3, 3);
    u.block(0, 0, 2, 2) = x_rotation(kPi / 2.0, 2);
    Mat rho0 = Mat::Zero(2, 2);
    rho0(0, 0) = 1.0;
    CHECK(leakage_population(GateChannel::from_unitary(u), rho0) < 1e-15);
  }
  SUBCASE("channels without a leakage space are rejected") {
    Mat rho0 = Mat::Zero(2, 2);
    rho0(0, 0) = 1.0;
    CHECK_THROWS_AS(leakage_population(GateChannel::from_unitary(Mat::Identity(2, 2)), rho0),
                    ConfigError);
  }
  SUBCASE("large anharmonicity suppresses leakage of a resonant square pulse") {
    Envelope sq;
    sq.dt_ns = kDefaultDtNs;
    sq.samples.assign(2560, Complex((kPi / 2.0) / 40.0, 0.0));
    QubitModel m3 = plain_two_level();
    m3.levels = 3;
    Mat rho0 = Mat::Zero(2, 2);
    rho0(0, 0) = 1.0;
    m3.anharmonicity = -3.0;  // rad/ns
    double leak_small = leakage_population(
        GateChannel::from_unitary(propagate_envelope(sq, m3)), rho0);
    m3.anharmonicity = -60.0;
    double leak_large = leakage_population(
        GateChannel::from_unitary(propagate_envelope(sq, m3)), rho0);
    CHECK(leak_large < leak_small / 100.0);
    CHECK(leak_large < 1e-6);
  }
}

TEST_CASE("Q0 idle coherence-limited infidelity brackets the measured EPG") {
  // 40 ns identity on Q0; independent closed-form oracle for the T1/T2
  // channel average fidelity: F = 1/2 + exp(-t/T2)/3 + exp(-t/T1)/6
  QubitModel m = preset_qubit("Q0").with_levels(2);
  m.thermal_excitation = 0.0;
  Envelope idle;
  idle.dt_ns = kDefaultDtNs;
  idle.samples.assign(2560, Complex(0.0, 0.0));
  GateChannel ch = lindblad_propagate(idle, m);
  double infid = 1.0 - average_gate_fidelity(ch, Mat::Identity(2, 2));
  double oracle = 1.0 - (0.5 + std::exp(-40.0 / m.t2_ns) / 3.0 + std::exp(-40.0 / m.t1_ns) / 6.0);
  CHECK(infid == doctest::Approx(oracle).epsilon(1e-6));
  CHECK(infid > 1.0e-3);
  CHECK(infid < 2.5e-3);
}
