// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Exit codes: 0 all checks passed, 1 a verification
// check failed or stayed inconclusive, 2 invalid input (file, field, or
// characteristic constraints).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <monrep/correspondence.hpp>
#include <monrep/error.hpp>
#include <monrep/hecke.hpp>
#include <monrep/induction.hpp>
#include <monrep/meataxe.hpp>
#include <monrep/monoid.hpp>
#include <monrep/monoid_io.hpp>
#include <monrep/renner.hpp>
#include <monrep/rep.hpp>
#include <monrep/report.hpp>

namespace {

using namespace monrep;

MonoidPtr load_monoid(std::string const& path) {
  return std::make_shared<Monoid const>(build_monoid(load_monoid_file(path)));
}

void print_checks(std::vector<CheckRecord> const& checks) {
  for (auto const& c : checks) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.witness.empty()) std::cout << " -- " << c.witness;
    std::cout << "\n";
  }
}

bool all_passed(std::vector<CheckRecord> const& checks) {
  for (auto const& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string dims_of(std::vector<std::size_t> const& ds) {
  std::string out = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ds[i]);
  }
  return out + "}";
}

int run_info(std::string const& file) {
  MonoidPtr m = load_monoid(file);
  Subgroup units = unit_group(*m);
  std::size_t idempotents = 0;
  for (std::uint32_t x = 0; x < m->size; ++x) {
    if (m->mul(x, x) == x) ++idempotents;
  }
  std::cout << "elements:    " << m->size << "\n"
            << "identity:    " << m->label(m->identity) << "\n"
            << "units:       " << units.elements.size() << "\n"
            << "idempotents: " << idempotents << "\n";
  return 0;
}

int run_irreps(std::string const& file, std::uint64_t p, std::uint64_t seed,
               std::string const& out) {
  MonoidPtr m = load_monoid(file);
  PrimeField f(p);
  Rng rng(seed);
  auto irreps = irreps_of_monoid(m, f, rng);
  std::vector<std::size_t> dims;
  std::cout << "irreducible modules of F[M] at p = " << p << ": "
            << irreps.size() << "\n";
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    dims.push_back(irreps[i].dim);
    std::cout << "  #" << i << ": dim " << irreps[i].dim << "\n";
  }
  if (!out.empty()) {
    auto j = report_envelope("irreps", "|M| = " + std::to_string(m->size)
                             + ", p = " + std::to_string(p), seed, {});
    j["irrep_dims"] = dims;
    j["monoid_size"] = m->size;
    write_report_file(j, out);
  }
  return 0;
}

int run_hecke(std::string const& file, std::string const& subgroup,
              std::uint64_t p, std::uint64_t seed, std::string const& out) {
  MonoidPtr m = load_monoid(file);
  Subgroup k = resolve_subgroup(*m, subgroup);
  PrimeField f(p);
  HeckeAlgebra h = hecke_algebra(m, k, f);
  std::cout << "|M| = " << m->size << ", |K| = " << k.elements.size()
            << ", p = " << p << "\n"
            << "double cosets: " << h.cosets.class_count << "\n"
            << "dim H_K = " << h.dim << "\n";
  for (std::size_t c = 0; c < h.cosets.class_count; ++c) {
    std::cout << "  class " << c << ": representative "
              << m->label(h.cosets.representatives[c]) << ", size "
              << h.cosets.members[c].size() << "\n";
  }
  if (!out.empty()) {
    auto j = report_envelope("hecke", "|M| = " + std::to_string(m->size)
                             + ", |K| = " + std::to_string(k.elements.size())
                             + ", p = " + std::to_string(p), seed, {});
    j["class_count"] = h.cosets.class_count;
    j["hecke_dim"] = h.dim;
    write_report_file(j, out);
  }
  return 0;
}

int run_verify_bm(std::string const& file, std::string const& subgroup,
                  std::uint64_t p, std::uint64_t seed, std::string const& out) {
  MonoidPtr m = load_monoid(file);
  Subgroup k = resolve_subgroup(*m, subgroup);
  PrimeField f(p);

  Rng rng(seed);
  VerificationReport fixed = verify_fixed_space_irreducibility(m, k, f, rng);
  Rng rng2(seed);
  VerificationReport bij = verify_correspondence_bijection(m, k, f, rng2);

  Rng rng3(seed);
  HeckeAlgebra h = hecke_algebra(m, k, f);
  IrrepInventory inv = correspondence_inventory(m, h, rng3);
  std::size_t fixed_nonzero = 0;
  for (std::size_t d : inv.fixed_dims) {
    if (d > 0) ++fixed_nonzero;
  }

  std::vector<CheckRecord> checks = fixed.checks;
  checks.insert(checks.end(), bij.checks.begin(), bij.checks.end());

  std::cout << "instance: " << fixed.instance << "\n";
  print_checks(checks);
  std::cout << "monoid irreps: " << inv.monoid_irreps.size()
            << ", with nonzero fixed space: " << fixed_nonzero
            << ", Hecke irreps: " << inv.hecke_irreps.size() << "\n";
  bool ok = all_passed(checks);
  std::cout << "overall: " << (ok ? "PASS" : "FAIL") << " (" << checks.size()
            << " checks)\n";

  if (!out.empty()) {
    auto j = report_envelope("verify bm", fixed.instance, seed, checks);
    j["monoid_irrep_count"] = inv.monoid_irreps.size();
    j["fixed_nonzero_count"] = fixed_nonzero;
    j["hecke_irrep_count"] = inv.hecke_irreps.size();
    write_report_file(j, out);
  }
  return ok ? 0 : 1;
}

int run_verify_frobenius(std::string const& file, std::string const& elems,
                         std::uint64_t p, std::uint64_t seed,
                         std::string const& out) {
  MonoidPtr m = load_monoid(file);
  SubmonoidEmbedding sub = submonoid_closure(*m, parse_element_list(elems));
  auto local = std::make_shared<Monoid const>(sub.local);
  PrimeField f(p);

  Rng rng(seed);
  auto vs = irreps_of_monoid(local, f, rng);
  auto ws = irreps_of_monoid(m, f, rng);

  std::vector<CheckRecord> checks;
  std::string instance = "|M| = " + std::to_string(m->size) + ", |N| = "
                         + std::to_string(sub.size()) + ", p = "
                         + std::to_string(p);
  std::cout << "instance: " << instance << ", pairs: "
            << vs.size() * ws.size() << "\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      VerificationReport r =
          verify_frobenius_reciprocity(m, sub, vs[i], ws[j], rng);
      std::string tag = "[V" + std::to_string(i) + " dim "
                        + std::to_string(vs[i].dim) + ", W" + std::to_string(j)
                        + " dim " + std::to_string(ws[j].dim) + "] ";
      for (auto const& c : r.checks) {
        checks.push_back({tag + c.name, c.passed, c.witness});
      }
    }
  }
  print_checks(checks);
  bool ok = all_passed(checks);
  std::cout << "overall: " << (ok ? "PASS" : "FAIL") << " (" << checks.size()
            << " checks)\n";

  if (!out.empty()) {
    auto j = report_envelope("verify frobenius", instance, seed, checks);
    j["pair_count"] = vs.size() * ws.size();
    write_report_file(j, out);
  }
  return ok ? 0 : 1;
}

int run_renner(std::size_t n, std::uint32_t q, std::uint64_t p,
               std::uint64_t seed, std::string const& out) {
  RennerReport dec = verify_renner_decomposition(n, q);
  std::cout << "Borel double cosets of M_" << n << "(F_" << q << ")\n"
            << "classes: " << dec.class_count
            << ", rook matrices: " << dec.rook_count << "\n";

  std::vector<CheckRecord> checks = dec.checks.checks;
  nlohmann::json extra;
  extra["class_count"] = dec.class_count;
  extra["rook_count"] = dec.rook_count;

  if (p != 0) {
    Rng rng(seed);
    RennerReport cmp = compare_hecke_renner_algebra(n, q, p, rng);
    checks.insert(checks.end(), cmp.checks.checks.begin(),
                  cmp.checks.checks.end());
    std::cout << "dim H(M, B) = " << cmp.hecke_dim << ", dim F[R] = "
              << cmp.rook_count << " at p = " << p << "\n"
              << "irreducible dimension multisets: Hecke "
              << dims_of(cmp.hecke_irrep_dims) << " vs rook monoid "
              << dims_of(cmp.rook_irrep_dims) << " ("
              << (cmp.multisets_agree ? "agree" : "differ") << ")\n";
    extra["hecke_dim"] = cmp.hecke_dim;
    extra["hecke_irrep_dims"] = cmp.hecke_irrep_dims;
    extra["rook_irrep_dims"] = cmp.rook_irrep_dims;
    extra["multisets_agree"] = cmp.multisets_agree;
  }

  print_checks(checks);
  bool ok = all_passed(checks);
  std::cout << "overall: " << (ok ? "PASS" : "FAIL") << " (" << checks.size()
            << " checks)\n";

  if (!out.empty()) {
    std::string instance = "n = " + std::to_string(n) + ", q = "
                           + std::to_string(q)
                           + (p ? ", p = " + std::to_string(p) : "");
    auto j = report_envelope("renner", instance, seed, checks);
    j.update(extra);
    write_report_file(j, out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact representation theory for finite monoids"};
  app.require_subcommand(1);

  std::string file;
  std::string subgroup;
  std::string submonoid;
  std::string out;
  std::uint64_t p = 0;
  std::uint64_t seed = monrep::Rng::default_seed;
  std::size_t renner_n = 0;
  std::uint32_t renner_q = 0;

  auto* info = app.add_subcommand("info", "describe a monoid file");
  info->add_option("file", file, "monoid description file")->required();

  auto* irreps =
      app.add_subcommand("irreps", "list the irreducible module dimensions");
  irreps->add_option("file", file)->required();
  irreps->add_option("--char", p, "field characteristic (prime)")->required();
  irreps->add_option("--seed", seed, "random seed");
  irreps->add_option("--out", out, "write a report file");

  auto* hecke =
      app.add_subcommand("hecke", "build the double-coset algebra H_K");
  hecke->add_option("file", file)->required();
  hecke->add_option("--subgroup", subgroup, "\"units\" or element list")
      ->required();
  hecke->add_option("--char", p, "field characteristic (prime)")->required();
  hecke->add_option("--seed", seed, "random seed");
  hecke->add_option("--out", out, "write a report file");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->require_subcommand(1);

  auto* bm = verify->add_subcommand(
      "bm", "fixed-space irreducibility and the irreducible correspondence");
  bm->add_option("file", file)->required();
  bm->add_option("--subgroup", subgroup, "\"units\" or element list")
      ->required();
  bm->add_option("--char", p, "field characteristic (prime)")->required();
  bm->add_option("--seed", seed, "random seed");
  bm->add_option("--out", out, "write a report file");

  auto* frob = verify->add_subcommand(
      "frobenius", "induction adjunction over all irreducible pairs");
  frob->add_option("file", file)->required();
  frob->add_option("--submonoid", submonoid, "generating element list")
      ->required();
  frob->add_option("--char", p, "field characteristic (prime)")->required();
  frob->add_option("--seed", seed, "random seed");
  frob->add_option("--out", out, "write a report file");

  auto* renner = app.add_subcommand(
      "renner", "Borel double cosets of the full matrix monoid");
  renner->add_option("--n", renner_n, "matrix size")->required();
  renner->add_option("--q", renner_q, "field size of the matrix entries")
      ->required();
  renner->add_option("--char", p, "also compare algebra dimensions at p");
  renner->add_option("--seed", seed, "random seed");
  renner->add_option("--out", out, "write a report file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto const start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (info->parsed()) rc = run_info(file);
    if (irreps->parsed()) rc = run_irreps(file, p, seed, out);
    if (hecke->parsed()) rc = run_hecke(file, subgroup, p, seed, out);
    if (bm->parsed()) rc = run_verify_bm(file, subgroup, p, seed, out);
    if (frob->parsed()) rc = run_verify_frobenius(file, submonoid, p, seed, out);
    if (renner->parsed()) rc = run_renner(renner_n, renner_q, p, seed, out);
  } catch (monrep::ParseError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::NoIdentityError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::NotAssociativeError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::InvalidFieldElementError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::SizeLimitError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::NotAGroupError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::CharDividesSubgroupError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (monrep::Error const& e) {
    // Inconclusive searches and internal invariant breaches signal a defect,
    // not bad input.
    std::cerr << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  auto const elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cout << "elapsed: " << elapsed.count() << " ms\n";
  return rc;
}
