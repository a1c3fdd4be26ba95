// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zonotopal/acceptance.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "zonotopal/config_matroid.h"
#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"
#include "zonotopal/graph.h"
#include "zonotopal/io.h"
#include "zonotopal/power_ideal.h"
#include "zonotopal/reconstruction.h"
#include "zonotopal/squarefree.h"
#include "zonotopal/zequiv.h"
#include "zonotopal/zonotope.h"

namespace zonotopal::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failures of a criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary(const std::string& pass_text) const {
    if (ok()) return pass_text;
    std::ostringstream out;
    out << failures_ << " of " << checks_ << " checks failed: " << messages_.str();
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

CriterionResult timed(int id, std::string title, double limit_seconds,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.passed && r.seconds > limit_seconds) {
    r.passed = false;
    std::ostringstream out;
    out << "exceeded the " << limit_seconds << " s budget; " << r.detail;
    r.detail = out.str();
  }
  return r;
}

std::size_t count_or(const Options& opts, std::size_t minimum) {
  return opts.corpus.value_or(minimum);
}

GradedSeries series(std::initializer_list<int> c) {
  GradedSeries s;
  for (int x : c) s.coeffs.emplace_back(x);
  return s;
}

std::string show(const QMatrix& a) {
  std::string s = format_matrix(a);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

}  // namespace

CriterionResult worked_example(const Options& opts) {
  return timed(1, "worked example (triangle with doubled edge)", 1.0, [&](CriterionResult& r) {
    Tally t;
    const Graph g = parse_graph(read_file(opts.graph_fixture));
    const QMatrix a = incidence_matrix(g);
    if (!opts.matrix_fixture.empty()) {
      // The fixture carries the opposite sign convention per row.
      t.check(a == -parse_matrix(read_file(opts.matrix_fixture)), "incidence matrix != -A");
    }
    const VectorConfig c(a);
    t.check(zonotopal_hilbert_series(c, 1) == series({1, 2, 3, 3, 1}), "Hilb(Ex)");
    t.check(zonotopal_hilbert_series(c, 0) == series({1, 2, 2}), "Hilb(Cen)");
    t.check(zonotopal_hilbert_series(c, -1) == series({1, 1}), "Hilb(In)");
    const Zonotope z = facet_data(c);
    t.check(total_dimension(ideal_generators(z, 1)) == 10, "dim Ex");
    t.check(total_dimension(ideal_generators(z, 0)) == 5, "dim Cen");
    t.check(total_dimension(ideal_generators(z, -1)) == 2, "dim In");
    std::vector<std::size_t> mult;
    for (const auto& f : z.unoriented()) mult.push_back(f.multiplicity);
    std::sort(mult.begin(), mult.end());
    t.check(mult == std::vector<std::size_t>{2, 3, 3}, "facet multiplicities");
    TuttePoly expected;
    expected.add(1, 0, 1);
    expected.add(0, 1, 1);
    expected.add(2, 0, 1);
    expected.add(1, 1, 1);
    expected.add(0, 2, 1);
    t.check(tutte(c) == expected, "Tutte polynomial");
    t.check(lattice_points(z, false).count == 10, "lattice points");
    t.check(volume(c) == 5, "area");
    t.check(interior_lattice_points(z) == 2, "interior points");
    t.check(count_forests(g) == 10, "forests");
    t.check(count_spanning_trees(g) == 5, "trees");
    r.passed = t.ok();
    r.detail = t.summary("Hilb [1,2,3,3,1] [1,2,2] [1,1]; dims 10/5/2; m(H) {3,3,2}; "
                         "T = " + expected.to_string() + "; points 10, area 5, interior 2; "
                         "forests 10, trees 5");
  });
}

CriterionResult tutte_identity(const Options& opts) {
  return timed(2, "Hilbert series = q^(m-n) T(., 1/q), k in {-1,0,1}", 120.0, [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    const std::size_t count = count_or(opts, 200);
    for (std::size_t i = 0; i < count; ++i) {
      const QMatrix a = corpus::random_matrix(rng);
      const VectorConfig c(a);
      for (int k = -1; k <= 1; ++k)
        t.check(verify_tutte_identity(c, k), "k=" + std::to_string(k) + " on " + show(a));
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(count) + " matrices x 3 values of k, exact");
  });
}

CriterionResult squarefree_model(const Options& opts) {
  return timed(3, "square-free model: subalgebra series and length closed form", 600.0,
               [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    const std::size_t count = count_or(opts, 200);
    for (std::size_t i = 0; i < count; ++i) {
      const QMatrix a = corpus::random_matrix(rng);
      t.check(subalgebra_hilbert(a) == zonotopal_hilbert_series(VectorConfig(a), 1),
              "subalgebra series on " + show(a));
    }
    corpus::Rng lrng(opts.seed + 1);
    const std::size_t length_pairs = opts.corpus ? 5 * count : 1000;
    for (std::size_t i = 0; i < length_pairs; ++i) {
      corpus::MatrixShape shape;
      shape.allow_zero_columns = false;
      const QMatrix a = corpus::random_matrix(lrng, shape);
      const auto xs = generator_images(a);
      Vector b(a.rows());
      SquareFreeElem x(a.cols());
      for (std::size_t j = 0; j < a.rows(); ++j) {
        b[j] = corpus::random_entry(lrng);
        x += xs[j].scaled(b[j]);
      }
      t.check(length(x) == linear_length(a, b), "length mismatch on " + show(a));
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(count) + " subalgebra series, " +
                         std::to_string(length_pairs) + " (A, b) length pairs, exact");
  });
}

CriterionResult lattice_and_graphs(const Options& opts) {
  return timed(4, "dimensions = forests/trees = lattice points/volume/interior = T(2,1)/T(1,1)", 600.0,
               [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    corpus::GraphShape shape;
    shape.loop_probability = 0.1;
    const std::size_t count = count_or(opts, 50);
    std::size_t connected = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const Graph g = corpus::random_graph(rng, shape);
      const QMatrix a = incidence_matrix(g);
      const VectorConfig c(a);
      const std::string tag = " on " + format_graph(g);
      t.check(is_totally_unimodular(a), "not TU" + tag);
      const Zonotope z = facet_data(c);
      const TuttePoly tp = tutte(c);
      const Integer ex = total_dimension(ideal_generators(z, 1));
      const Integer cen = total_dimension(ideal_generators(z, 0));
      const Integer in = total_dimension(ideal_generators(z, -1));
      const Integer forests(static_cast<unsigned long>(count_forests(g)));
      const Integer points(static_cast<unsigned long>(lattice_points(z, false).count));
      const Integer interior(static_cast<unsigned long>(interior_lattice_points(z)));
      t.check(ex == forests, "dim Ex != forests" + tag);
      t.check(ex == points, "dim Ex != lattice points" + tag);
      t.check(Rational(ex) == tutte_eval(tp, 2, 1), "dim Ex != T(2,1)" + tag);
      t.check(Rational(cen) == volume(c), "dim Cen != volume" + tag);
      t.check(Rational(cen) == tutte_eval(tp, 1, 1), "dim Cen != T(1,1)" + tag);
      t.check(in == interior, "dim In != interior points" + tag);
      if (corpus::is_connected(g)) {
        ++connected;
        t.check(cen == Integer(static_cast<unsigned long>(count_spanning_trees(g))),
                "dim Cen != trees" + tag);
      }
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(count) + " graphs (" + std::to_string(connected) +
                         " connected), exact");
  });
}

CriterionResult reconstruction(const Options& opts) {
  return timed(5, "reconstruction round trip from length queries", 600.0, [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    corpus::MatrixShape shape;
    shape.allow_zero_columns = false;
    const std::size_t count = count_or(opts, 100);
    std::size_t negative = 0;
    ReconstructOptions ropts;
    ropts.seed = opts.seed;
    for (std::size_t i = 0; i < count; ++i) {
      const QMatrix a = corpus::random_matrix(rng, shape);
      try {
        const auto rec = zonotopal::reconstruct(make_length_oracle(a), ropts);
        t.check(rec.columns == proj_classes(a).classes, "multiset mismatch on " + show(a));
      } catch (const NegativeMultiplicity& e) {
        ++negative;
        t.check(false, std::string("NegativeMultiplicity: ") + e.what());
      }
    }
    r.passed = t.ok() && negative == 0;
    r.detail = t.summary(std::to_string(count) + " matrices, exact multiset equality, " +
                         std::to_string(negative) + " NegativeMultiplicity events");
  });
}

CriterionResult z_equivalence(const Options& opts) {
  return timed(6, "z-equivalence witnesses and cross-ratio separation", 600.0,
               [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    const std::size_t count = count_or(opts, 50);
    for (std::size_t i = 0; i < count; ++i) {
      const QMatrix a = corpus::random_matrix(rng);
      const auto [b, planted] = corpus::random_z_move(rng, a);
      const auto res = z_equivalent(a, b);
      t.check(res.witness.has_value(), "no witness for " + show(a));
      if (res.witness) {
        t.check(verify_witness(a, b, *res.witness), "witness rejected for " + show(a));
        t.check(matroid_isomorphic(VectorConfig(a), VectorConfig(b)).has_value(),
                "z-equivalent but not matroid isomorphic: " + show(a));
      }
    }
    const QMatrix u1{{1, 0, 1, 1}, {0, 1, 1, 2}};
    const QMatrix u2{{1, 0, 1, 1}, {0, 1, 1, 3}};
    const auto cross = z_equivalent(u1, u2);
    t.check(!cross.witness.has_value(), "cross-ratio pair reported equivalent");
    t.check(cross.verdict == Verdict::kExact, "cross-ratio verdict not exact");
    t.check(matroid_isomorphic(VectorConfig(u1), VectorConfig(u2)).has_value(),
            "U(2,4) pair not matroid isomorphic");
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(count) + " constructed pairs verified; U(2,4) cross-ratio "
                         "pair: not z-equivalent (exact), matroid isomorphic");
  });
}

CriterionResult unimodular(const Options& opts) {
  return timed(7, "unimodular: matroid isomorphism gives a z-equivalence witness", 600.0,
               [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    const std::size_t count = count_or(opts, 30);
    std::size_t non_witnessable = 0;
    std::uniform_int_distribution<int> coin(0, 1);
    auto variant = [&](const Graph& g) {
      std::vector<bool> reversed(g.edges.size());
      for (std::size_t e = 0; e < reversed.size(); ++e) reversed[e] = coin(rng);
      const auto label = components(g);
      std::map<std::size_t, std::vector<std::size_t>> members;
      for (std::size_t v = 0; v < g.vertices; ++v) members[label[v]].push_back(v);
      std::vector<std::size_t> dropped;
      for (const auto& [root, vs] : members)
        dropped.push_back(vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)]);
      std::sort(dropped.begin(), dropped.end());
      return incidence_matrix(g, reversed, dropped);
    };
    for (std::size_t i = 0; i < count; ++i) {
      const Graph g = corpus::random_graph(rng);
      const QMatrix a1 = variant(g), a2 = variant(g);
      const std::string tag = " on " + format_graph(g);
      t.check(matroid_isomorphic(VectorConfig(a1), VectorConfig(a2)).has_value(),
              "matroids differ" + tag);
      try {
        const auto w = unimodular_equiv_via_matroid(a1, a2);
        t.check(w.has_value() && verify_witness(a1, a2, *w), "no verified witness" + tag);
      } catch (const NonWitnessableIsoMatroids&) {
        ++non_witnessable;
        t.check(false, "NonWitnessableIsoMatroids" + tag);
      }
    }
    r.passed = t.ok() && non_witnessable == 0;
    r.detail = t.summary(std::to_string(count) + " graph pairs, " +
                         std::to_string(non_witnessable) + " NonWitnessableIsoMatroids events");
  });
}

CriterionResult central_reduction(const Options& opts) {
  return timed(8, "bridge-column reduction: coloops removed, row choice irrelevant", 600.0,
               [&](CriterionResult& r) {
    Tally t;
    corpus::Rng rng(opts.seed);
    const std::size_t count = count_or(opts, 30);
    std::size_t choices_checked = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t core_n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
      const std::size_t core_m = std::uniform_int_distribution<std::size_t>(core_n + 1, core_n + 3)(rng);
      const std::size_t k1 = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
      const std::size_t k2 = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      const QMatrix core = corpus::random_bridge_free(rng, core_n, core_m);
      const auto p1 = corpus::plant_bridges(rng, core, k1);
      const std::string tag = " on " + show(p1.matrix);

      const auto red = central_reduce(p1.matrix);
      t.check(red.removed_columns == p1.bridges, "wrong bridge set" + tag);
      t.check(red.reduced.rows() == core_n && red.reduced.cols() == core_m, "reduced shape" + tag);

      const auto choices = central_reduce_row_choices(p1.matrix);
      t.check(!choices.empty() && choices.front() == red.kept_rows, "lexicographic choice" + tag);
      for (const auto& rows : choices) {
        const QMatrix other = central_reduce_with_rows(p1.matrix, rows);
        const auto res = z_equivalent(red.reduced, other);
        t.check(res.witness.has_value(), "row choices not z-equivalent" + tag);
        ++choices_checked;
      }

      // A second matrix whose reduction is z-equivalent by construction.
      const auto [moved_core, w] = corpus::random_z_move(rng, core);
      const auto p2 = corpus::plant_bridges(rng, moved_core, k2);
      const auto red2 = central_reduce(p2.matrix);
      const auto res = z_equivalent(red.reduced, red2.reduced);
      t.check(res.witness.has_value(), "reductions not z-equivalent" + tag);
      if (res.witness) {
        const auto h1 = zonotopal_hilbert_series(VectorConfig(red.reduced), 0);
        t.check(h1 == zonotopal_hilbert_series(VectorConfig(red2.reduced), 0),
                "central series of reductions differ" + tag);
        t.check(h1 == zonotopal_hilbert_series(VectorConfig(p1.matrix), 0) &&
                    h1 == zonotopal_hilbert_series(VectorConfig(p2.matrix), 0),
                "central series changed by the reduction" + tag);
      }
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(count) + " planted matrices, " +
                         std::to_string(choices_checked) +
                         " row choices z-equivalent, central series equal");
  });
}

std::vector<CriterionResult> run_corpus(const Options& opts) {
  return {tutte_identity(opts), squarefree_model(opts), lattice_and_graphs(opts),
          reconstruction(opts), z_equivalence(opts), unimodular(opts), central_reduction(opts)};
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out{worked_example(opts)};
  for (auto& r : run_corpus(opts)) out.push_back(std::move(r));
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.seconds
      << " s): " << r.detail;
  return out.str();
}

}  // namespace zonotopal::acceptance
