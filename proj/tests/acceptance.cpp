/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is 0 only when every criterion passes inside its limit.

#include "app.hpp"
#include "support/corpus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qudit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string &why) {
    if (ok)
      note = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

const std::vector<corpus::Instance> &complex_corpus() {
  static const auto instances = corpus::complexes(100);
  return instances;
}

Json cli_params(const std::string &builtin, Modulus d, Outcome &o) {
  const std::string ds = std::to_string(d);
  const char *argv[] = {"qhc", "params", "--builtin", builtin.c_str(), "--modulus", ds.c_str()};
  std::ostringstream out, err;
  const int code = cli::run(6, argv, out, err);
  if (code != 0) {
    o.fail(builtin + " D=" + ds + ": exit " + std::to_string(code) + " " + err.str());
    return {};
  }
  return Json::parse(out.str());
}

Outcome rp2_parity() {
  Outcome o;
  for (Modulus d = 2; d <= 8; ++d) {
    const Json j = cli_params("rp2", d, o);
    const int expected = d % 2 == 0 ? 2 : 1;
    if (o.ok && j["code_dimension"] != expected)
      o.fail("D=" + std::to_string(d) + ": K=" + j["code_dimension"].dump());
  }
  o.note = o.ok ? "K=2 for D even, K=1 for D odd, D=2..8" : o.note;
  return o;
}

Outcome torus_dimension() {
  Outcome o;
  for (Modulus d = 2; d <= 5; ++d) {
    const Json j = cli_params("torus", d, o);
    if (o.ok && j["code_dimension"] != d * d)
      o.fail("D=" + std::to_string(d) + ": K=" + j["code_dimension"].dump());
  }
  o.note = o.ok ? "K=D^2 for D=2..5" : o.note;
  return o;
}

Outcome dimension_routes() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < complex_corpus().size(); ++i) {
    const auto &inst = complex_corpus()[i];
    if (!validate(inst.complex).empty()) {
      o.fail("instance " + std::to_string(i) + " is not a valid complex");
      continue;
    }
    const auto chain = chain_complex(inst.complex, inst.modulus);
    const auto spec = stabilizer_spec(chain);
    const BigInt k_span = code_dimension(spec);
    const BigInt h1 = homology_cardinality(chain);
    const GroupEnumeration g = enumerate_group(spec);
    const BigInt k_group = big_pow(inst.modulus, spec.qudits()) / g.size;
    const bool exact = big_pow(inst.modulus, spec.qudits()) % g.size == 0;
    if (g.scalar_violation || !exact || k_span != h1 || k_span != k_group)
      o.fail("instance " + std::to_string(i) + ": K=" + k_span.str() + " |H1|=" + h1.str() +
             " D^n/|S|=" + k_group.str());
    ++checked;
  }
  if (o.ok)
    o.note = std::to_string(checked) + "/100 instances agree on all three routes";
  return o;
}

Outcome projector_oracle() {
  Outcome o;
  std::size_t checked = 0;
  double worst = 0;
  for (std::size_t i = 0; i < complex_corpus().size(); ++i) {
    const auto &inst = complex_corpus()[i];
    const auto spec = stabilizer_spec(chain_complex(inst.complex, inst.modulus));
    if (big_pow(inst.modulus, spec.qudits()) > 4096)
      continue;
    const Theorem1Check t = verify_theorem1(spec);
    worst = std::max({worst, t.projector.idempotence_residual, t.projector.hermiticity_residual});
    if (!t.projector.is_projector() || BigInt(t.observed_dimension) != code_dimension(spec))
      o.fail("instance " + std::to_string(i) + ": Tr P=" + std::to_string(t.observed_dimension));
    ++checked;
  }
  if (checked == 0)
    o.fail("no corpus instance within D^n <= 4096");
  if (o.ok) {
    std::ostringstream s;
    s << checked << " instances with D^n <= 4096, max residual " << worst;
    o.note = s.str();
  }
  return o;
}

Outcome submodule_duality() {
  Outcome o;
  corpus::Rng rng(20260303);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Modulus d = static_cast<Modulus>(corpus::uniform(rng, 2, 6));
    const std::size_t n = corpus::uniform(rng, 1, 4);
    const SubmoduleSpan span(corpus::random_matrix(rng, corpus::uniform(rng, 0, 4), n, d));
    const AppendixBCheck c = verify_appendix_b(span);
    const BigInt perp_api = orthogonal_complement(span).cardinality();
    worst = std::max(worst, c.character_residual);
    if (!c.passed() || c.perp_exhaustive != perp_api ||
        c.span_exhaustive * c.perp_exhaustive != big_pow(d, n))
      o.fail("trial " + std::to_string(trial) + ": |E|=" + c.span_exhaustive.str() +
             " |E^perp|=" + c.perp_exhaustive.str() + " vs " + perp_api.str());
  }
  if (o.ok) {
    std::ostringstream s;
    s << "200 submodules, |E||E^perp| = D^n, max character residual " << worst;
    o.note = s.str();
  }
  return o;
}

Outcome generator_commutation() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < complex_corpus().size(); ++i) {
    const auto &inst = complex_corpus()[i];
    const auto spec = stabilizer_spec(chain_complex(inst.complex, inst.modulus));
    for (std::size_t f = 0; f < spec.face_count(); ++f)
      for (std::size_t v = 0; v < spec.vertex_count(); ++v, ++pairs)
        if (commutation_phase(spec.face_generator(f), spec.vertex_generator(v)) != 0)
          o.fail("instance " + std::to_string(i) + ": face " + std::to_string(f) +
                 " vertex " + std::to_string(v));
  }
  if (o.ok)
    o.note = std::to_string(pairs) + " face/vertex pairs commute";
  return o;
}

struct Witness {
  StabilizerSpec spec;
  PauliProduct op;
};

std::vector<Witness> &found_witnesses() {
  static std::vector<Witness> w;
  return w;
}

Outcome distance_routes() {
  Outcome o;
  std::size_t compared = 0, skipped = 0;
  found_witnesses().clear();
  for (std::size_t i = 0; i < complex_corpus().size(); ++i) {
    const auto &inst = complex_corpus()[i];
    const auto chain = chain_complex(inst.complex, inst.modulus);
    const auto spec = stabilizer_spec(chain);
    DistanceReport css, hom;
    try {
      css = distance_css(spec);
      hom = distance_homological(chain);
    } catch (const BudgetExceeded &) {
      ++skipped;
      continue;
    }
    ++compared;
    if (css.distance != hom.distance) {
      o.fail("instance " + std::to_string(i) + ": routes disagree");
      continue;
    }
    for (const DistanceReport *r : {&css, &hom}) {
      if (!r->distance)
        continue;
      const PauliProduct w = r->witness_operator(inst.modulus);
      if (!is_logical(w, spec) || weight(w) != *r->distance)
        o.fail("instance " + std::to_string(i) + ": witness is not a logical of weight d");
    }
    if (css.distance)
      found_witnesses().push_back({spec, css.witness_operator(inst.modulus)});
  }

  const auto grid = chain_complex(torus_grid(2, 2), 2);
  const auto grid_css = distance_css(stabilizer_spec(grid));
  const auto grid_hom = distance_homological(grid);
  if (grid_css.distance != std::optional<std::size_t>(2) ||
      grid_hom.distance != std::optional<std::size_t>(2))
    o.fail("torus_grid(2,2) at D=2 is not d=2 on both routes");

  const auto plane = chain_complex(rp2(), 3);
  if (!distance_css(stabilizer_spec(plane)).no_logicals() ||
      !distance_homological(plane).no_logicals())
    o.fail("rp2 at D=3 is not NoLogicals on both routes");

  if (o.ok)
    o.note = std::to_string(compared) + " instances agree (" + std::to_string(skipped) +
             " over budget); grid d=2; rp2 D=3 NoLogicals";
  return o;
}

Outcome normalizer_characterization() {
  Outcome o;
  std::vector<StabilizerSpec> specs;
  for (const auto &inst : complex_corpus()) {
    const auto spec = stabilizer_spec(chain_complex(inst.complex, inst.modulus));
    if (spec.qudits() <= 3 && inst.modulus <= 3)
      specs.push_back(spec);
  }
  // Top up with extra seeded instances so the exhaustive check sees a spread.
  corpus::Rng rng(20260404);
  while (specs.size() < 40) {
    const TwoComplex c = corpus::random_complex(rng);
    if (c.edge_count() <= 3)
      specs.push_back(stabilizer_spec(chain_complex(c, specs.size() % 2 == 0 ? 2 : 3)));
  }
  std::uint64_t pairs = 0;
  for (const auto &spec : specs) {
    const std::size_t n = spec.qudits();
    const Modulus d = spec.modulus();
    const auto total = static_cast<std::size_t>(big_pow(d, n));
    const SubmoduleSpan faces_perp = spec.face_span().orthogonal_complement();
    const SubmoduleSpan vertices_perp = spec.vertex_span().orthogonal_complement();
    ZVector x(n), z(n);
    for (std::size_t xi = 0; xi < total; ++xi) {
      qudit::detail::decode_basis(xi, d, x);
      for (std::size_t zi = 0; zi < total; ++zi, ++pairs) {
        qudit::detail::decode_basis(zi, d, z);
        const PauliProduct p(d, 0, x, z);
        const bool by_syndrome = is_in_normalizer_by_syndrome(p, spec);
        const bool by_submodule = faces_perp.contains(x) && vertices_perp.contains(z);
        if (by_syndrome != by_submodule)
          o.fail("disagreement at n=" + std::to_string(n) + " D=" + std::to_string(d));
      }
    }
  }
  if (o.ok)
    o.note = std::to_string(specs.size()) + " instances, " + std::to_string(pairs) +
             " (x, z) pairs, 100% agreement";
  return o;
}

Outcome logical_action() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto &w : found_witnesses()) {
    if (big_pow(w.spec.modulus(), w.spec.qudits()) > 4096)
      continue;
    if (!verify_logical_action(w.op, w.spec).acts_nontrivially())
      o.fail("witness acts as a scalar on the code space");
    ++checked;
  }
  if (checked == 0)
    o.fail("no witnesses from criterion 7 within D^n <= 4096");
  if (o.ok)
    o.note = std::to_string(checked) + " witnesses act beyond scalars";
  return o;
}

Outcome hypermap_equivalence() {
  Outcome o;
  corpus::Rng rng(20260505);
  std::size_t checked = 0;
  const auto instances = corpus::hypermaps(200);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto &inst = instances[i];
    for (const SpecialDarts &specials :
         {SpecialDarts::smallest(inst.hypermap), corpus::random_specials(rng, inst.hypermap)}) {
      const auto cert = certify_equivalence(inst.hypermap, specials, inst.modulus);
      const BigInt k_hyper =
          code_dimension(hypermap_stabilizer(inst.hypermap, specials, inst.modulus));
      const BigInt k_complex = code_dimension(stabilizer_spec(
          chain_complex(to_two_complex(inst.hypermap, specials), inst.modulus)));
      if (!cert.all() || k_hyper != k_complex)
        o.fail("hypermap " + std::to_string(i) + ": certificate or K mismatch");
      ++checked;
    }
  }
  if (o.ok)
    o.note = std::to_string(checked) + " (hypermap, special darts) pairs equivalent";
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "RP2 dimension parity", 1, rp2_parity},
      {2, "torus dimension D^2", 1, torus_dimension},
      {3, "span = homology = group enumeration", 120, dimension_routes},
      {4, "dense projector trace", 300, projector_oracle},
      {5, "submodule duality |E||E^perp| = D^n", 120, submodule_duality},
      {6, "face/vertex commutation", 10, generator_commutation},
      {7, "distance route agreement", 300, distance_routes},
      {8, "normalizer equals centralizer", 60, normalizer_characterization},
      {9, "logical action beyond scalars", 120, logical_action},
      {10, "hypermap chain equivalence", 120, hypermap_equivalence},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds)
      o.fail("took " + std::to_string(seconds) + " s");
    if (!o.ok)
      ++failures;
    std::printf("[%s] %2d  %-38s %8.3f s (limit %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, c.limit_seconds, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
