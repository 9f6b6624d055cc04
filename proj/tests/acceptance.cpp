// Prints one PASS/FAIL line per acceptance criterion. Criteria listed with
// --expect-fail are known failures; the exit status is zero only when the
// failing set is exactly the expected set.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rpade/hankel.hpp"
#include "rpade/oracle.hpp"
#include "rpade/polynomial.hpp"
#include "rpade/series.hpp"
#include "rpade/tracker.hpp"

using namespace rpade;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Column {
  unsigned d;
  std::vector<std::pair<unsigned, const char*>> cells;
};

Real number(const char* text) { return Real(std::string_view(text)); }

PotentialModel box(const Rational& R) { return PotentialModel::bounded(Rational(1), R); }

RootSequence track(const PotentialModel& model, Symmetry symmetry, unsigned n, unsigned d, unsigned D_min,
                   unsigned D_max, const Real& seed, bool scan_negative = false) {
  TrackOptions options;
  options.stop_when_stable = false;
  options.scan_negative = scan_negative;
  return track_sequence(model, StateLabel{symmetry, n}, d, D_min, D_max, seed, options);
}

Real oracle_level(const PotentialModel& model, Symmetry symmetry, unsigned index, unsigned basis) {
  return box_basis_spectrum(model, symmetry, basis, 0, 256).eigenvalues.at(index);
}

void compare_columns(Outcome& out, const std::vector<RootSequence>& sequences, const std::vector<Column>& columns,
                     const Real& factor) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const RootSequence& seq = sequences[c];
    for (const auto& [D, expected] : columns[c].cells) {
      const SequenceEntry* e = seq.find(D);
      const std::string where = "d=" + std::to_string(columns[c].d) + " D=" + std::to_string(D);
      if (expected == nullptr) {
        out.require(e == nullptr, where + " should be blank");
        continue;
      }
      if (e == nullptr) {
        out.require(false, where + " missing");
        continue;
      }
      const std::string got = (factor * e->root).to_fixed(20);
      out.require(got == expected, where + " got " + got + " want " + expected);
    }
  }
}

const std::vector<Column> kSmallBox = {
    {0,
     {{3, nullptr},
      {4, "2.4662533354307466207"},
      {5, "2.4674514194162024875"},
      {6, "2.4674515390300695979"},
      {7, "2.4674515390348029376"},
      {8, "2.4674515390348030267"},
      {9, "2.4674515390348030267"},
      {10, "2.4674515390348030267"}}},
    {1,
     {{3, "2.3697606944397752864"},
      {4, "2.4674298730367798888"},
      {5, "2.4674515378204140996"},
      {6, "2.4674515390347723203"},
      {7, "2.4674515390348030263"},
      {8, "2.4674515390348030267"},
      {9, "2.4674515390348030267"},
      {10, "2.4674515390348030267"}}},
};

const std::vector<Column> kExcitedEven = {
    {0,
     {{4, "24.086798714692429504"},
      {5, "24.424509979572052554"},
      {6, "24.429124533510868656"},
      {7, "24.429143334496913081"},
      {8, "24.429143368495260376"},
      {9, "24.429143368527356872"},
      {10, "24.429143368527374357"}}},
    {1,
     {{4, "24.361407377724659906"},
      {5, "24.428687415859914431"},
      {6, "24.429142207076630442"},
      {7, "24.429143367079353985"},
      {8, "24.429143368526373359"},
      {9, "24.429143368527373946"},
      {10, "24.429143368527374363"}}},
};

const std::vector<Column> kFirstOdd = {
    {0,
     {{3, "11.134110459186094281"},
      {4, "11.161646658411540522"},
      {5, "11.161737758990207575"},
      {6, "11.161737857894423316"},
      {7, "11.161737857941670476"},
      {8, "11.161737857941682032"},
      {9, "11.161737857941682034"},
      {10, "11.161737857941682034"}}},
    {1,
     {{3, "11.158800510018056742"},
      {4, "11.161732939936591584"},
      {5, "11.161737854670925624"},
      {6, "11.161737857940626897"},
      {7, "11.161737857941681848"},
      {8, "11.161737857941682034"},
      {9, "11.161737857941682034"},
      {10, "11.161737857941682034"}}},
};

struct Context {
  std::vector<RootSequence> small_box, excited_even, central, odd;
};

Outcome small_box_table(Context& ctx) {
  Outcome out;
  const auto m = box(Rational(1, 10));
  const Real seed = oracle_level(m, Symmetry::even(), 0, 24);
  for (unsigned d : {0u, 1u}) ctx.small_box.push_back(track(m, Symmetry::even(), 0, d, 3, 10, seed));
  compare_columns(out, ctx.small_box, kSmallBox, Real(Rational(1, 100)));
  return out;
}

Outcome ground_states(Context&) {
  Outcome out;
  struct Row {
    long R;
    const char* energy;
    unsigned D;
  };
  for (const Row& row : {Row{1, "2.8848849919939971927", 7}, Row{10, "1.0150378624976100592", 3},
                         Row{100, "1.0001500037503748711", 2}}) {
    const auto m = box(Rational(row.R));
    const auto seq = track(m, Symmetry::even(), 0, 0, 2, 12, oracle_level(m, Symmetry::even(), 0, 24));
    const std::string got = seq.last().root.to_fixed(20);
    const auto first = first_stable_dimension(seq, 20);
    const std::string tag = "R=" + std::to_string(row.R);
    out.require(got == row.energy, tag + " converged to " + got + " want " + row.energy);
    out.require(first == row.D, tag + " first stable D=" + (first ? std::to_string(*first) : "none") + " want " +
                                    std::to_string(row.D));
    if (const SequenceEntry* e = seq.find(row.D); e != nullptr && got != row.energy) {
      out.detail += " (D=" + std::to_string(row.D) + " root " + e->root.to_fixed(20) + ")";
    }
  }
  return out;
}

Outcome excited_even_table(Context& ctx) {
  Outcome out;
  const auto m = box(Rational(1));
  const Real seed = oracle_level(m, Symmetry::even(), 1, 24);
  for (unsigned d : {0u, 1u}) ctx.excited_even.push_back(track(m, Symmetry::even(), 2, d, 4, 10, seed));
  compare_columns(out, ctx.excited_even, kExcitedEven, Real(1));
  return out;
}

Outcome central_table(Context& ctx) {
  Outcome out;
  const auto m = box(Rational(1));
  const Real seed = oracle_level(m, Symmetry::angular(0), 0, 24);
  for (unsigned d : {0u, 1u}) {
    ctx.central.push_back(track(m, Symmetry::angular(0), 0, d, 3, 10, seed));
    ctx.odd.push_back(track(m, Symmetry::odd(), 1, d, 3, 10, seed));
  }
  compare_columns(out, ctx.central, kFirstOdd, Real(1));
  out.require(ctx.central[0].last().root.to_fixed(20) == "11.161737857941682034", "final value");
  for (unsigned d : {0u, 1u}) {
    bool same = ctx.central[d].entries.size() == ctx.odd[d].entries.size();
    for (std::size_t i = 0; same && i < ctx.odd[d].entries.size(); ++i) {
      same = ctx.central[d].entries[i].D == ctx.odd[d].entries[i].D &&
             ctx.central[d].entries[i].root == ctx.odd[d].entries[i].root;
    }
    out.require(same, "l=0 and odd sequences differ for d=" + std::to_string(d));
  }
  return out;
}

Outcome exact_golden(Context&) {
  Outcome out;
  auto pow_E = [](unsigned k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    return Polynomial(std::move(c));
  };
  for (const Rational& R : {Rational(1), Rational(1, 10), Rational(10), Rational(7, 3), Rational(100)}) {
    const Rational R2 = R * R, R4 = R2 * R2;
    const Polynomial golden = pow_E(6) * R4 - pow_E(4) * (27 * R4) + pow_E(3) * (324 * R2) +
                              pow_E(2) * (51 * R4 - 675) - pow_E(1) * (324 * R2) - Polynomial(25 * R4 + 81);
    const auto ex = compute_series_exact(box(R), 0, series_order_for(2, 0));
    const Polynomial h = hankel_poly(ex, 2, 0) * (4725 * R4);
    out.require(h == golden, "R=" + R.get_str() + " got " + h.str());
  }
  // Leading form in R: the R^4 coefficient of 4725 R^4 H, divided by 4725.
  const Polynomial E = Polynomial::variable();
  const Polynomial limit = (pow_E(6) - pow_E(4) * Rational(27) + pow_E(2) * Rational(51) - Polynomial(25)) *
                           Rational(1, 4725);
  const Polynomial sq = E * E - Polynomial(1);
  out.require(limit == (E * E - Polynomial(25)) * sq * sq * Rational(1, 4725), "leading form factorization");
  const auto roots = poly_real_roots(limit, Rational(-10), Rational(10));
  const std::vector<std::pair<long, unsigned>> want = {{-5, 1}, {-1, 2}, {1, 2}, {5, 1}};
  bool ok = roots.size() == want.size();
  for (std::size_t i = 0; ok && i < roots.size(); ++i) {
    ok = roots[i].is_exact() ? roots[i].lo == want[i].first
                             : (roots[i].lo <= want[i].first && roots[i].hi >= want[i].first);
    ok = ok && roots[i].multiplicity == want[i].second;
  }
  out.require(ok, "root multiplicities");
  return out;
}

Outcome spurious_root(Context&) {
  Outcome out;
  const auto m = box(Rational(1));
  const auto oracle = box_basis_spectrum(m, Symmetry::even(), 24, 0, 256);
  const Real want = number("-0.015565600439810503080");
  for (unsigned d : {0u, 1u}) {
    auto seq = track(m, Symmetry::even(), 0, d, 3, 10, number("-0.02"), true);
    if (seq.entries.empty()) {
      out.require(false, "no sequence for d=" + std::to_string(d));
      continue;
    }
    const Real& root = seq.last().root;
    const unsigned agree = stable_digits(root, want, 20);
    out.require(agree >= 18, "d=" + std::to_string(d) + " agrees to " + std::to_string(agree) + " digits");
    const auto c = classify_root(root, oracle, Real(Rational(1, 100000000)));
    out.require(c == Classification::spurious && seq.classification == Classification::spurious,
                "d=" + std::to_string(d) + " classified " + to_string(c));
  }
  return out;
}

Outcome properties(Context& ctx) {
  Outcome out;
  PrecisionScope scope(512);

  // (a) lower-bound sequences
  for (const auto* group : {&ctx.small_box, &ctx.excited_even, &ctx.central}) {
    for (const RootSequence& seq : *group) {
      out.require(seq.monotone == Monotone::increasing && seq.bound_kind == BoundKind::lower,
                  "(a) " + seq.label.str() + " d=" + std::to_string(seq.d) + " is " + to_string(seq.monotone));
    }
  }

  // (b) Hankel root <= variational level, gap below 1e-8
  for (long R : {1L, 10L, 100L}) {
    const auto m = box(Rational(R));
    const Real upper = oracle_level(m, Symmetry::even(), 0, 128);
    const auto seq = track(m, Symmetry::even(), 0, 0, 2, 12, upper);
    const Real lower = seq.last().root;
    const Real gap = upper - lower;
    out.require(gap >= -Real::pow2(-60) * upper && gap < Real(Rational(1, 100000000)),
                "(b) R=" + std::to_string(R) + " gap " + gap.to_scientific(3));
  }

  // (c) E(a, R) = a E(1, sqrt(a) R)
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(2, 9), den(2, 9);
  for (int trial = 0; trial < 5; ++trial) {
    Rational root_a(num(rng), den(rng));
    Rational R(num(rng), den(rng));
    root_a.canonicalize();
    R.canonicalize();
    const Rational a = root_a * root_a;
    const auto direct_model = PotentialModel::bounded(a, R);
    const auto reduced_model = box(root_a * R);
    TrackOptions options;
    options.target_digits = 24;
    const auto direct = track_sequence(direct_model, StateLabel{Symmetry::even(), 0}, 0, 2, 40,
                                       oracle_level(direct_model, Symmetry::even(), 0, 24), options);
    const auto reduced = track_sequence(reduced_model, StateLabel{Symmetry::even(), 0}, 0, 2, 40,
                                        oracle_level(reduced_model, Symmetry::even(), 0, 24), options);
    if (direct.entries.empty() || reduced.entries.empty()) {
      out.require(false, "(c) no sequence for a=" + a.get_str() + " R=" + R.get_str());
      continue;
    }
    const Real lhs = direct.last().root;
    const Real rhs = Real(a) * reduced.last().root;
    const Real rel = abs(lhs - rhs) / abs(lhs);
    out.require(rel < Real(Rational(1, 1000000)) * Real(Rational(1, 1000000000000)),
                "(c) a=" + a.get_str() + " R=" + R.get_str() + " relative difference " + rel.to_scientific(3));
  }

  // (d) forward-mode derivatives against central differences
  std::uniform_real_distribution<double> energy(0.5, 40.0);
  const auto m = box(Rational(1));
  const unsigned D = 5, d = 1, M = series_order_for(D, d);
  for (int trial = 0; trial < 10; ++trial) {
    const Real E(energy(rng));
    const auto mid = compute_series(m, 0, E, M, 512);
    const auto frame = hankel_value(mid, D, d);
    Real err[2];
    for (int k = 0; k < 2; ++k) {
      const Real h = Real::pow2(-24 - k);
      const auto up = compute_series(m, 0, E + h, M, 512);
      const auto down = compute_series(m, 0, E - h, M, 512);
      err[k] = abs((hankel_value(up, D, d).value - hankel_value(down, D, d).value) / (Real(2) * h) -
                   frame.derivative) /
               max(Real(1), abs(frame.derivative));
      for (unsigned j = 0; j <= M; ++j) {
        const Real fd = (up.f[j] - down.f[j]) / (Real(2) * h);
        err[k] = max(err[k], abs(fd - mid.df_dE[j]) / max(Real(1), abs(mid.df_dE[j])));
      }
    }
    const double ratio = (err[0] / err[1]).to_double();
    out.require(ratio > 3.5 && ratio < 4.5,
                "(d) E=" + E.to_fixed(6) + " error ratio " + std::to_string(ratio) + " is not second order");
  }

  // (e) exact polynomial against rational recursion
  for (const Rational& R : {Rational(1), Rational(1, 10), Rational(5, 2)}) {
    const auto model = box(R);
    for (unsigned dd = 0; dd <= 1; ++dd) {
      const unsigned order = series_order_for(4, dd);
      const Polynomial p = hankel_poly(compute_series_exact(model, 0, order), 4, dd);
      for (const Rational& E : {Rational(1, 3), Rational(123, 10), Rational(-7, 2)}) {
        const auto f = compute_series_rational(model, 0, E, order);
        out.require(p(E) == hankel_determinant(std::span<const Rational>(f), 4, dd),
                    "(e) R=" + R.get_str() + " d=" + std::to_string(dd) + " E=" + E.get_str());
      }
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome(Context&)> check;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail") expected_failures.insert(std::stoi(argv[++i]));
  }

  const std::vector<Criterion> criteria = {
      {1, "ground state times R^2 at R=1/10, d=0,1, D=3..10", 30, small_box_table},
      {2, "ground states at R=1,10,100 with first stable dimension", 60, ground_states},
      {3, "even n=2 at R=1, d=0,1, D=4..10", 60, excited_even_table},
      {4, "central l=0 at R=1, d=0,1, D=3..10, identical to odd parity", 60, central_table},
      {5, "exact 2x2 determinant and its wide-box factorization", 5, exact_golden},
      {6, "negative root sequence at R=1 is spurious", 30, spurious_root},
      {7, "property suite", 120, properties},
  };

  Context ctx;
  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check(ctx);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      out.require(false, "took " + std::to_string(seconds) + " s");
    }
    if (!out.pass) failed.insert(c.id);
    std::printf("%s criterion %d: %s [%.2f s]%s%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                out.detail.empty() ? "" : " -- ", out.detail.c_str(),
                !out.pass && expected_failures.count(c.id) ? " (expected)" : "");
    std::fflush(stdout);
  }
  for (int id : expected_failures) {
    if (!failed.count(id)) std::printf("note: criterion %d was expected to fail but passed\n", id);
  }
  return failed == expected_failures ? 0 : 1;
}
