/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// qhc: qudit homological code tool.
//
//   qhc validate [FILE | --builtin NAME]
//   qhc params   [FILE | --builtin NAME] [--modulus D] [--format json|text|checks]
//                [--budget N] [--verify]
//   qhc distance [FILE | --builtin NAME] [--modulus D] [--format json|text] [--budget N]
//   qhc convert  FILE [--modulus D] [--output COMPLEX.json]
//   qhc verify   [FILE | --builtin NAME] [--modulus D] [--level quick|full]
//
// FILE is a complex document, a hypermap document, or a check-matrix dump;
// the kind is detected from the content. Builtins: rp2, torus, torus-grid:KxL.

#include "qudit/qudit.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qudit::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_io = 1,          ///< unreadable file, bad command line
  exit_validation = 2,  ///< walk/incidence violations, invalid permutations, {0} code space
  exit_parse = 3,       ///< malformed document
  exit_budget = 4,      ///< distance search budget exhausted
  exit_mismatch = 5,    ///< two routes that must agree did not
  exit_schema = 6,      ///< well-formed document with the wrong shape
};

struct Options {
  std::string path;
  std::string builtin;
  std::optional<Modulus> modulus;
  std::string format = "json";
  std::uint64_t budget = 10'000'000;
  bool verify = false;
  std::string level = "quick";
  std::string output;
};

class Failure : public std::runtime_error {
public:
  Failure(int code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

inline Json big_json(const BigInt &v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(v);
  return v.str();
}

// ---------------------------------------------------------------------------
// Input loading

enum class InputKind { Complex, Hypermap, CheckMatrix };

struct Input {
  InputKind kind = InputKind::Complex;
  std::string source;
  Modulus modulus = 2;
  std::optional<TwoComplex> complex;                 ///< Complex, Hypermap (constructed)
  std::optional<HypermapDocument> hypermap;          ///< Hypermap
  std::optional<SpecialDarts> specials;              ///< Hypermap
  std::optional<StabilizerSpec> check_matrix;        ///< CheckMatrix

  StabilizerSpec spec() const {
    if (check_matrix)
      return *check_matrix;
    return stabilizer_spec(chain_complex(*complex, modulus));
  }
};

inline TwoComplex builtin_complex(const std::string &name) {
  if (name == "rp2")
    return rp2();
  if (name == "torus")
    return torus();
  const std::string prefix = "torus-grid:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string dims = name.substr(prefix.size());
    const auto x = dims.find('x');
    try {
      if (x != std::string::npos) {
        std::size_t used_k = 0, used_l = 0;
        const std::string ks = dims.substr(0, x), ls = dims.substr(x + 1);
        const unsigned long k = std::stoul(ks, &used_k);
        const unsigned long l = std::stoul(ls, &used_l);
        if (used_k == ks.size() && used_l == ls.size() && k >= 1 && l >= 1)
          return torus_grid(k, l);
      }
    } catch (const std::logic_error &) {
    }
  }
  throw Failure(exit_io, "unknown builtin '" + name +
                             "' (expected rp2, torus or torus-grid:KxL)");
}

inline Input load_input(const Options &opt) {
  Input in;
  if (!opt.builtin.empty()) {
    if (!opt.path.empty())
      throw Failure(exit_io, "give either FILE or --builtin, not both");
    in.source = "builtin:" + opt.builtin;
    in.modulus = opt.modulus.value_or(2);
    if (in.modulus < 2)
      throw Failure(exit_io, "--modulus must be >= 2");
    in.complex = builtin_complex(opt.builtin);
    return in;
  }
  if (opt.path.empty())
    throw Failure(exit_io, "no input: give FILE or --builtin");

  std::ifstream file(opt.path, std::ios::binary);
  if (!file)
    throw Failure(exit_io, "cannot read '" + opt.path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  in.source = opt.path;

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw Failure(exit_parse, opt.path + ": empty document");

  if (text[first] != '{') {
    in.kind = InputKind::CheckMatrix;
    try {
      StabilizerSpec spec = import_check_matrix(text);
      if (opt.modulus && *opt.modulus != spec.modulus())
        throw Failure(exit_schema, "--modulus cannot override a check matrix");
      in.modulus = spec.modulus();
      in.check_matrix = std::move(spec);
    } catch (const SchemaError &e) {
      throw Failure(exit_parse, opt.path + ": " + e.what());
    }
    return in;
  }

  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Failure(exit_parse, opt.path + ": " + e.what());
  }
  try {
    if (doc.is_object() && doc.contains("alpha")) {
      in.kind = InputKind::Hypermap;
      HypermapDocument h = hypermap_from_json(doc);
      in.modulus = opt.modulus.value_or(h.modulus);
      in.specials = h.special_darts ? SpecialDarts::from_set(h.hypermap, *h.special_darts)
                                    : SpecialDarts::smallest(h.hypermap);
      in.complex = to_two_complex(h.hypermap, *in.specials);
      in.hypermap = std::move(h);
    } else {
      ComplexDocument c = complex_from_json(doc);
      in.modulus = opt.modulus.value_or(c.modulus);
      in.complex = std::move(c.complex);
    }
  } catch (const SchemaError &e) {
    throw Failure(exit_schema, opt.path + ": " + e.what());
  } catch (const InvalidPermutation &e) {
    throw Failure(exit_validation, opt.path + ": " + e.what());
  } catch (const std::invalid_argument &e) { // special darts
    throw Failure(exit_validation, opt.path + ": " + e.what());
  }
  if (in.modulus < 2)
    throw Failure(exit_io, "--modulus must be >= 2");
  return in;
}

/// Walk violations as printable lines (complex inputs only).
inline std::vector<std::string> violations_of(const Input &in) {
  std::vector<std::string> lines;
  if (in.complex)
    for (const auto &v : validate(*in.complex))
      lines.push_back(v.describe(*in.complex));
  return lines;
}

inline void require_valid(const Input &in, std::ostream &err) {
  const auto lines = violations_of(in);
  if (lines.empty())
    return;
  for (const auto &l : lines)
    err << l << '\n';
  throw Failure(exit_validation, in.source + ": " + std::to_string(lines.size()) +
                                     " violation(s)");
}

// ---------------------------------------------------------------------------
// Reports

inline Json distance_json(const DistanceReport &r) {
  Json j;
  j["status"] = r.no_logicals() ? "no_logicals" : "found";
  if (r.distance) {
    j["distance"] = *r.distance;
    j["side"] = to_string(r.side);
    j["witness"] = r.witness;
  }
  j["route"] = to_string(r.route);
  j["examined"] = r.examined;
  return j;
}

inline std::string vector_text(const ZVector &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline void print_text(const Json &j, std::ostream &out, const std::string &prefix = "") {
  for (const auto &item : j.items()) {
    const std::string key = prefix.empty() ? item.key() : prefix + "." + item.key();
    if (item.value().is_object())
      print_text(item.value(), out, key);
    else if (item.value().is_string())
      out << key << ": " << item.value().get<std::string>() << '\n';
    else
      out << key << ": " << item.value().dump() << '\n';
  }
}

inline void emit(const Json &j, const Options &opt, std::ostream &out) {
  if (opt.format == "text")
    print_text(j, out);
  else
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_validate(const Options &opt, std::ostream &out, std::ostream &err) {
  const Input in = load_input(opt);
  std::vector<std::string> lines = violations_of(in);
  if (in.check_matrix)
    if (auto bad = noncommuting_pair(*in.check_matrix))
      lines.push_back("face " + std::to_string(bad->first) + " and vertex " +
                      std::to_string(bad->second) +
                      " generators do not commute (nontrivial scalar in the group)");
  for (const auto &l : lines)
    out << l << '\n';
  if (!lines.empty()) {
    err << in.source << ": " << lines.size() << " violation(s)\n";
    return exit_validation;
  }
  out << in.source << ": valid\n";
  return exit_ok;
}

inline int cmd_params(const Options &opt, std::ostream &out, std::ostream &err) {
  const Input in = load_input(opt);
  require_valid(in, err);
  const StabilizerSpec spec = in.spec();

  if (opt.format == "checks") {
    out << export_check_matrix(spec);
    return exit_ok;
  }

  Json report;
  report["source"] = in.source;
  report["modulus"] = spec.modulus();
  report["qudits"] = spec.qudits();
  report["face_generators"] = spec.face_count();
  report["vertex_generators"] = spec.vertex_count();

  if (auto bad = noncommuting_pair(spec)) {
    report["scalar_violation"] = true;
    report["code_space"] = "zero";
    report["noncommuting_pair"] = {bad->first, bad->second};
    emit(report, opt, out);
    err << in.source << ": stabilizer contains a nontrivial scalar; code space is {0}\n";
    return exit_validation;
  }

  const BigInt s = stabilizer_size(spec);
  const BigInt k = code_dimension(spec);
  report["stabilizer_size"] = big_json(s);
  report["code_dimension"] = big_json(k);

  Json face_weights = Json::array(), vertex_weights = Json::array();
  for (std::size_t f = 0; f < spec.face_count(); ++f)
    face_weights.push_back(weight(spec.face_generator(f)));
  for (std::size_t v = 0; v < spec.vertex_count(); ++v)
    vertex_weights.push_back(weight(spec.vertex_generator(v)));
  report["face_weights"] = std::move(face_weights);
  report["vertex_weights"] = std::move(vertex_weights);

  if (in.complex) {
    report["orientable_mod_d"] = is_orientable(*in.complex, in.modulus);
    report["orientable_integer"] = is_orientable_integer(*in.complex);
  } else {
    report["orientable_mod_d"] = nullptr;
    report["orientable_integer"] = nullptr;
  }

  try {
    report["distance"] = distance_json(distance_css(spec, opt.budget));
  } catch (const BudgetExceeded &) {
    report["distance"] = {{"status", "budget_exceeded"}, {"budget", opt.budget}};
  }

  int code = exit_ok;
  if (opt.verify) {
    Json v;
    bool agree = true;
    if (in.complex) {
      const BigInt h1 = homology_cardinality(chain_complex(*in.complex, in.modulus));
      v["homology_cardinality"] = big_json(h1);
      agree = agree && h1 == k;
    }
    try {
      const Theorem1Check t = verify_theorem1(spec);
      v["projector_trace"] = t.observed_dimension;
      v["projector_residual"] =
          std::max(t.projector.idempotence_residual, t.projector.hermiticity_residual);
      agree = agree && t.passed() && BigInt(t.observed_dimension) == k;
    } catch (const OracleCapExceeded &) {
      v["projector_trace"] = "skipped";
    }
    v["agree"] = agree;
    report["verification"] = std::move(v);
    if (!agree) {
      err << in.source << ": code dimension routes disagree\n";
      code = exit_mismatch;
    }
  }
  emit(report, opt, out);
  return code;
}

inline int cmd_distance(const Options &opt, std::ostream &out, std::ostream &err) {
  const Input in = load_input(opt);
  require_valid(in, err);
  const StabilizerSpec spec = in.spec();
  if (noncommuting_pair(spec)) {
    err << in.source << ": stabilizer contains a nontrivial scalar; no code to measure\n";
    return exit_validation;
  }

  DistanceReport css, homological;
  try {
    css = distance_css(spec, opt.budget);
    if (in.complex)
      homological = distance_homological(chain_complex(*in.complex, in.modulus), opt.budget);
  } catch (const BudgetExceeded &e) {
    err << in.source << ": " << e.what() << '\n';
    return exit_budget;
  }

  Json report;
  report["source"] = in.source;
  report["modulus"] = spec.modulus();
  report["qudits"] = spec.qudits();
  report["symplectic"] = distance_json(css);
  bool agree = true;
  if (in.complex) {
    report["homological"] = distance_json(homological);
    agree = css.distance == homological.distance;
    report["routes_agree"] = agree;
  } else {
    report["homological"] = nullptr;
    report["routes_agree"] = nullptr;
  }
  if (css.distance)
    report["distance"] = *css.distance;
  else
    report["distance"] = "no_logicals";

  if (opt.format == "text") {
    out << "source: " << in.source << '\n';
    if (css.distance)
      out << "d = " << *css.distance << '\n'
          << "witness (" << to_string(css.side) << "): " << vector_text(css.witness) << '\n';
    else
      out << "d = NoLogicals\n";
    if (in.complex)
      out << (agree ? "routes agree" : "ROUTES DISAGREE") << '\n';
  } else {
    out << report.dump(2) << '\n';
  }
  if (!agree) {
    err << in.source << ": symplectic and homological distances disagree\n";
    return exit_mismatch;
  }
  return exit_ok;
}

inline int cmd_convert(const Options &opt, std::ostream &out, std::ostream &err) {
  const Input in = load_input(opt);
  if (in.kind != InputKind::Hypermap)
    throw Failure(exit_schema, in.source + ": convert expects a hypermap document");
  const EquivalenceCertificate cert =
      certify_equivalence(in.hypermap->hypermap, *in.specials, in.modulus);
  const StabilizerSpec hyper = hypermap_stabilizer(in.hypermap->hypermap, *in.specials,
                                                   in.modulus);
  const BigInt k_hyper = code_dimension(hyper);
  const BigInt k_complex = homology_cardinality(chain_complex(*in.complex, in.modulus));

  Json certificate;
  certificate["special_darts"] = Json::array();
  for (std::size_t s : in.specials->per_edge())
    certificate["special_darts"].push_back(s + 1);
  certificate["walks_valid"] = cert.walks_valid;
  certificate["boundary1_matches"] = cert.boundary1_matches;
  certificate["boundary2_matches"] = cert.boundary2_matches;
  certificate["chain_maps_compose_to_zero"] = cert.chain_maps_compose_to_zero;
  certificate["orientable_mod_d"] = cert.orientable_mod_d;
  certificate["orientable_integer"] = cert.orientable_integer;
  certificate["code_dimension_hypermap"] = big_json(k_hyper);
  certificate["code_dimension_complex"] = big_json(k_complex);
  const bool ok = cert.all() && k_hyper == k_complex;
  certificate["equivalent"] = ok;

  const Json complex_doc = complex_to_json(*in.complex, in.modulus);
  if (!opt.output.empty()) {
    std::ofstream f(opt.output, std::ios::binary);
    if (!f)
      throw Failure(exit_io, "cannot write '" + opt.output + "'");
    f << complex_doc.dump(2) << '\n';
  }
  Json doc;
  doc["complex"] = complex_doc;
  doc["certificate"] = std::move(certificate);
  out << doc.dump(2) << '\n';
  if (!ok) {
    err << in.source << ": hypermap chain and constructed complex are not equivalent\n";
    return exit_mismatch;
  }
  return exit_ok;
}

struct CheckLine {
  std::string name;
  std::string status; // PASS, FAIL, SKIP
  std::string detail;
  std::optional<double> residual;
};

inline int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err) {
  const Input in = load_input(opt);
  require_valid(in, err);
  const bool full = opt.level == "full";
  const std::size_t dense_cap = full ? default_dense_cap : 256;
  const StabilizerSpec spec = in.spec();
  const bool scalar_free = !noncommuting_pair(spec);
  std::vector<CheckLine> checks;
  auto add = [&](std::string name, bool pass, std::string detail,
                 std::optional<double> residual = std::nullopt) {
    checks.push_back({std::move(name), pass ? "PASS" : "FAIL", std::move(detail), residual});
  };
  auto skip = [&](std::string name, std::string why) {
    checks.push_back({std::move(name), "SKIP", std::move(why), std::nullopt});
  };

  std::optional<BigInt> k;
  if (scalar_free)
    k = code_dimension(spec);

  if (in.complex) {
    const ChainComplexData chain = chain_complex(*in.complex, in.modulus);
    add("boundary_composition", (chain.boundary1() * chain.boundary2()).is_zero(),
        "d1*d2 = 0 mod D");
    add("face_vertex_commutation", scalar_free,
        scalar_free ? "every face/vertex pair commutes" : "a face/vertex pair does not commute");
    const BigInt h1 = homology_cardinality(chain);
    add("dimension_equals_homology", k && *k == h1,
        "K = " + (k ? k->str() : std::string("?")) + ", |H1| = " + h1.str());
  }
  if (in.hypermap) {
    const auto cert = certify_equivalence(in.hypermap->hypermap, *in.specials, in.modulus);
    add("hypermap_equivalence", cert.all(),
        "boundaries match the quotient chain; constructed complex orientable");
    const BigInt kh = code_dimension(
        hypermap_stabilizer(in.hypermap->hypermap, *in.specials, in.modulus));
    add("hypermap_dimension", k && kh == *k, "K(hypermap) = " + kh.str());
  }

  if (scalar_free) {
    try {
      const GroupEnumeration g = enumerate_group(spec);
      const BigInt predicted = stabilizer_size(spec);
      add("group_enumeration", !g.scalar_violation && BigInt(g.size) == predicted,
          "|S| = " + std::to_string(g.size) + ", |r(A)||r(B)| = " + predicted.str());
    } catch (const EnumerationCapExceeded &e) {
      skip("group_enumeration", e.what());
    }
  }

  try {
    const Theorem1Check t = verify_theorem1(spec, dense_cap);
    std::string detail = "Tr P = " + std::to_string(t.observed_dimension) +
                         ", expected K = " + t.expected_dimension.str();
    if (t.zero_code_space)
      detail += " (zero code space: group contains a nontrivial scalar)";
    add("projector_trace", t.passed(), detail,
        std::max({t.projector.idempotence_residual, t.projector.hermiticity_residual,
                  t.projector.integrality_residual}));
  } catch (const OracleCapExceeded &e) {
    skip("projector_trace", e.what());
  }

  std::optional<DistanceReport> css;
  if (scalar_free) {
    try {
      css = distance_css(spec, opt.budget);
      if (in.complex) {
        const DistanceReport h =
            distance_homological(chain_complex(*in.complex, in.modulus), opt.budget);
        add("distance_routes", css->distance == h.distance,
            css->distance ? "d = " + std::to_string(*css->distance) : "no logicals");
      }
      if (css->distance) {
        const PauliProduct w = css->witness_operator(spec.modulus());
        add("distance_witness", is_logical(w, spec) && weight(w) == *css->distance,
            std::string("witness is a logical ") + to_string(css->side) + " operator");
      }
    } catch (const BudgetExceeded &e) {
      skip("distance_routes", e.what());
    }
  }

  if (full && scalar_free) {
    for (auto [name, span] : {std::pair{"duality_vertex_span", spec.vertex_span()},
                              std::pair{"duality_face_span", spec.face_span()}}) {
      try {
        const AppendixBCheck b = verify_appendix_b(span);
        add(name, b.passed(),
            "|E| = " + b.span_exhaustive.str() + ", |E^perp| = " + b.perp_exhaustive.str(),
            b.character_residual);
      } catch (const OracleCapExceeded &e) {
        skip(name, e.what());
      }
    }
    if (css && css->distance) {
      try {
        const LogicalActionCheck a =
            verify_logical_action(css->witness_operator(spec.modulus()), spec, dense_cap);
        add("logical_action", a.acts_nontrivially(),
            "distance of compressed witness from a scalar", a.distance_from_scalar);
      } catch (const OracleCapExceeded &e) {
        skip("logical_action", e.what());
      }
    }
    const BigInt pairs = big_pow(spec.modulus(), 2 * spec.qudits());
    if (pairs <= 100'000) {
      const auto total = static_cast<std::size_t>(big_pow(spec.modulus(), spec.qudits()));
      ZVector x(spec.qudits()), z(spec.qudits());
      std::size_t disagreements = 0;
      const SubmoduleSpan faces_perp = spec.face_span().orthogonal_complement();
      const SubmoduleSpan vertices_perp = spec.vertex_span().orthogonal_complement();
      for (std::size_t xi = 0; xi < total; ++xi) {
        detail::decode_basis(xi, spec.modulus(), x);
        for (std::size_t zi = 0; zi < total; ++zi) {
          detail::decode_basis(zi, spec.modulus(), z);
          const PauliProduct p(spec.modulus(), 0, x, z);
          if (is_in_normalizer_by_syndrome(p, spec) !=
              (faces_perp.contains(x) && vertices_perp.contains(z)))
            ++disagreements;
        }
      }
      add("normalizer_characterizations", disagreements == 0,
          std::to_string(disagreements) + " disagreement(s) over " + pairs.str() + " pairs");
    } else {
      skip("normalizer_characterizations", "D^(2n) = " + pairs.str() + " above 100000");
    }
  }

  bool failed = false;
  for (const auto &c : checks)
    failed = failed || c.status == "FAIL";
  if (opt.format == "json") {
    Json j;
    j["source"] = in.source;
    j["level"] = opt.level;
    Json arr = Json::array();
    for (const auto &c : checks) {
      Json e{{"name", c.name}, {"status", c.status}, {"detail", c.detail}};
      if (c.residual)
        e["residual"] = *c.residual;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["passed"] = !failed;
    out << j.dump(2) << '\n';
  } else {
    for (const auto &c : checks) {
      out << c.status << "  " << c.name << "  " << c.detail;
      if (c.residual) {
        std::ostringstream r;
        r << c.residual.value();
        out << "  residual=" << r.str();
      }
      out << '\n';
    }
  }
  return failed ? exit_mismatch : exit_ok;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Qudit homological codes from 2-complexes and hypermaps", "qhc"};
  app.require_subcommand(1);
  Options opt;
  Modulus modulus = 0;

  auto add_input = [&](CLI::App *sub) {
    sub->add_option("file", opt.path, "complex, hypermap or check-matrix file");
    sub->add_option("--builtin", opt.builtin, "rp2 | torus | torus-grid:KxL");
    sub->add_option("--modulus", modulus, "qudit dimension D (overrides the document)");
  };

  auto *validate_cmd = app.add_subcommand("validate", "check schema and walk incidences");
  add_input(validate_cmd);

  auto *params_cmd = app.add_subcommand("params", "code parameters n, |S|, K, d");
  add_input(params_cmd);
  params_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text", "checks"}));
  params_cmd->add_option("--budget", opt.budget, "distance search budget (candidates)");
  params_cmd->add_flag("--verify", opt.verify, "cross-check K by homology and projector");

  auto *distance_cmd = app.add_subcommand("distance", "distance by both routes");
  add_input(distance_cmd);
  distance_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  distance_cmd->add_option("--budget", opt.budget, "distance search budget (candidates)");

  auto *convert_cmd = app.add_subcommand("convert", "hypermap -> 2-complex with certificate");
  convert_cmd->add_option("file", opt.path, "hypermap file")->required();
  convert_cmd->add_option("--modulus", modulus, "qudit dimension D (overrides the document)");
  convert_cmd->add_option("--output", opt.output, "also write the complex document here");

  auto *verify_cmd = app.add_subcommand("verify", "run the oracle checks");
  add_input(verify_cmd);
  verify_cmd->add_option("--level", opt.level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--budget", opt.budget, "distance search budget (candidates)");
  opt.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return exit_io;
  }
  if (modulus != 0)
    opt.modulus = modulus;
  if (verify_cmd->parsed() && opt.format == "json" && verify_cmd->count("--format") == 0)
    opt.format = "text";

  try {
    if (validate_cmd->parsed())
      return cmd_validate(opt, out, err);
    if (params_cmd->parsed())
      return cmd_params(opt, out, err);
    if (distance_cmd->parsed())
      return cmd_distance(opt, out, err);
    if (convert_cmd->parsed())
      return cmd_convert(opt, out, err);
    return cmd_verify(opt, out, err);
  } catch (const Failure &e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const TheoremViolation &e) {
    err << "theorem violation: " << e.what() << '\n';
    return exit_mismatch;
  } catch (const InconsistentChain &e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }
}

} // namespace qudit::cli
