// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Every comparison is exact; there are no tolerances anywhere.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/beta.hpp"
#include "burnside/reference_data.hpp"

using namespace burnside;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

void report(int number, const std::string& description, bool ok, const std::string& detail) {
  std::ostringstream line;
  line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description;
  if (!detail.empty()) line << " (" << detail << ")";
  std::cout << line.str() << '\n' << std::flush;
  if (!ok) ++failures;
}

struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail.str("");
    ok = false;
    if (!detail.str().empty()) detail << "; ";
    detail << what;
  }
  void note(const std::string& what) {
    if (!ok) return;
    if (!detail.str().empty()) detail << "; ";
    detail << what;
  }
};

void run_criterion(int number, const std::string& description,
                   void (*body)(Criterion&)) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  report(number, description, c.ok, c.detail.str());
}

long catalog_order(const CatalogId& id) {
  switch (id.family) {
    case CatalogFamily::Cyclic: return id.parameter;
    case CatalogFamily::BinaryDihedral: return 4L * id.parameter;
    case CatalogFamily::BinaryTetrahedral: return 24;
    case CatalogFamily::BinaryOctahedral: return 48;
    case CatalogFamily::BinaryIcosahedral: return 120;
    case CatalogFamily::GL2F3: return 48;
    case CatalogFamily::Symmetric: {
      long f = 1;
      for (int k = 2; k <= id.parameter; ++k) f *= k;
      return f;
    }
  }
  return 0;
}

std::vector<CatalogId> catalog_within(long order_bound) {
  std::vector<CatalogId> ids;
  for (const CatalogId& id : catalog_listing())
    if (catalog_order(id) <= order_bound) ids.push_back(id);
  return ids;
}

// Everything the per-group criteria need, computed once per catalog id.
struct GroupData {
  FiniteGroup g;
  ConjClasses cc;
  MarksTable marks;
  BurnsideStructure structure;
  ImageBasis image;
  IrreducibleTable table;
  int cyclic_classes = 0;
};

const GroupData& data_for(const CatalogId& id) {
  static std::map<std::string, GroupData> cache;
  auto it = cache.find(id.name());
  if (it != cache.end()) return it->second;

  GroupData d{build(id), {}, {}, {}, {}, {}, 0};
  d.marks = table_of_marks(d.g, enumerate_subgroup_classes(d.g));
  d.structure = structure_constants(d.marks);
  d.image = image_basis(d.structure, d.marks);
  d.table = complex_irreducibles(d.g);
  d.cc = d.table.classes;
  for (const auto& c : d.marks.classes)
    if (c.is_cyclic) ++d.cyclic_classes;
  return cache.emplace(id.name(), std::move(d)).first->second;
}

BetaReport analyze_named(const std::string& name, const std::vector<FieldTag>& fields) {
  return analyze(parse_catalog_name(name).value(), fields);
}

bool quotient_is(const CokernelPresentation& p, int free_rank,
                 const std::vector<long>& torsion) {
  if (p.quotient.free_rank != free_rank) return false;
  if (p.quotient.invariant_factors.size() != torsion.size()) return false;
  for (size_t i = 0; i < torsion.size(); ++i)
    if (p.quotient.invariant_factors[i] != torsion[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

double reference_2i_seconds = 0;

void criterion_reference_tables(Criterion& c) {
  Clock::time_point start_2i = Clock::now();
  analyze_named("2I", {FieldTag::Rational, FieldTag::Real, FieldTag::Complex});
  reference_2i_seconds = seconds_since(start_2i);

  Clock::time_point start = Clock::now();
  std::vector<ReferenceCheckResult> results = run_reference_checks();
  double total = seconds_since(start) + reference_2i_seconds;

  int passed = 0;
  for (const ReferenceCheckResult& r : results) {
    if (r.passed) {
      ++passed;
    } else {
      c.fail(r.group + " " + r.check + ": " + r.detail);
    }
  }
  if (total >= 300.0) c.fail("suite took " + format_seconds(total));
  if (reference_2i_seconds >= 60.0) c.fail("2I took " + format_seconds(reference_2i_seconds));
  c.note(std::to_string(passed) + " of " + std::to_string(results.size()) + " table checks, " +
         format_seconds(total) + " total, 2I " + format_seconds(reference_2i_seconds));
}

void criterion_integer_real_vanishing(Criterion& c) {
  int checked = 0;
  for (const std::string& name : integral_real_vanishing_set()) {
    BetaReport r = analyze_named(name, {FieldTag::IntegralReal});
    if (!r.cokernels.at(FieldTag::IntegralReal).surjective())
      c.fail(name + ": integer-valued real cokernel is nonzero");
    ++checked;
  }
  c.note(std::to_string(checked) + " groups");
}

void criterion_oracle(Criterion& c) {
  int exhaustive_groups = 0;
  for (const CatalogId& id : catalog_within(48)) {
    const GroupData& d = data_for(id);
    const int m = int(d.marks.classes.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (d.structure.constants[size_t(i)][size_t(j)] !=
            oracle_structure_constants(d.g, d.marks.classes, i, j)) {
          c.fail(id.name() + " pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
          return;
        }
      }
    ++exhaustive_groups;
  }

  const GroupData& icosa = data_for(parse_catalog_name("2I").value());
  const int m = int(icosa.marks.classes.size());
  std::mt19937 rng(1789);
  std::uniform_int_distribution<int> pick(0, m - 1);
  const int samples = 200;
  for (int s = 0; s < samples; ++s) {
    int i = pick(rng), j = pick(rng);
    if (icosa.structure.constants[size_t(i)][size_t(j)] !=
        oracle_structure_constants(icosa.g, icosa.marks.classes, i, j)) {
      c.fail("2I pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      return;
    }
  }
  c.note(std::to_string(exhaustive_groups) + " groups exhaustive, " +
         std::to_string(samples) + " sampled 2I pairs");
}

void criterion_hom_counts(Criterion& c) {
  int groups = 0;
  for (const CatalogId& id : catalog_within(default_order_cap())) {
    const GroupData& d = data_for(id);
    const int m = int(d.marks.classes.size());
    std::vector<std::vector<int>> fix;
    for (const auto& h : d.marks.classes)
      fix.push_back(element_fixed_cosets(d.g, d.cc, h.representative));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        BigInt weighted = 0;
        for (int cls = 0; cls < d.cc.count(); ++cls)
          weighted += BigInt(d.cc.sizes[size_t(cls)]) * fix[size_t(i)][size_t(cls)] *
                      fix[size_t(j)][size_t(cls)];
        if (weighted != d.structure.multiplicities.at(i, j) * d.g.order()) {
          c.fail(id.name() + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
          return;
        }
      }
    ++groups;
  }
  c.note(std::to_string(groups) + " groups");
}

void criterion_character_tables(Criterion& c) {
  int groups = 0;
  for (const CatalogId& id : catalog_within(default_order_cap())) {
    const GroupData& d = data_for(id);
    const IrreducibleTable& t = d.table;

    BigInt degree_sum = 0;
    for (const BigInt& deg : t.degrees) degree_sum += deg * deg;
    if (degree_sum != d.g.order()) {
      c.fail(id.name() + ": degree squares sum to " + degree_sum.get_str());
      return;
    }

    for (int i = 0; i < t.count(); ++i)
      for (int j = 0; j < t.count(); ++j) {
        BigRational ip = inner_product(d.g, d.cc, t.chars[size_t(i)], t.chars[size_t(j)]);
        if (ip != BigRational(i == j ? 1 : 0)) {
          c.fail(id.name() + ": rows " + std::to_string(i) + "," + std::to_string(j));
          return;
        }
      }

    for (int a = 0; a < d.cc.count(); ++a)
      for (int b = 0; b < d.cc.count(); ++b) {
        Cyclotomic sum = Cyclotomic::zero(1);
        for (int i = 0; i < t.count(); ++i)
          sum += cyclotomic_mul(t.chars[size_t(i)].values[size_t(a)],
                                t.chars[size_t(i)].values[size_t(b)].conjugate());
        long expect = a == b ? d.g.order() / d.cc.sizes[size_t(a)] : 0;
        if (!(sum == Cyclotomic(BigRational(expect)))) {
          c.fail(id.name() + ": columns " + std::to_string(a) + "," + std::to_string(b));
          return;
        }
      }

    BigInt indicator_sum = 0;
    for (int i = 0; i < t.count(); ++i) {
      int fs = t.fs_indicators[size_t(i)];
      if (fs < -1 || fs > 1) {
        c.fail(id.name() + ": indicator out of range");
        return;
      }
      indicator_sum += BigInt(fs) * t.degrees[size_t(i)];
    }
    long involutions = 0;
    for (int x = 0; x < d.g.order(); ++x)
      if (d.g.mul(x, x) == d.g.identity_index()) ++involutions;
    if (indicator_sum != involutions) {
      c.fail(id.name() + ": indicator sum " + indicator_sum.get_str() + " vs " +
             std::to_string(involutions) + " square roots of 1");
      return;
    }
    ++groups;
  }
  c.note(std::to_string(groups) + " groups");
}

void criterion_kernel_rank(Criterion& c) {
  int groups = 0;
  for (const CatalogId& id : catalog_within(default_order_cap())) {
    const GroupData& d = data_for(id);
    int classes = int(d.marks.classes.size());
    int rank = d.image.h_tilde.rows();
    int kernel = classes - rank;
    if (kernel != classes - d.cyclic_classes) {
      c.fail(id.name() + ": kernel rank " + std::to_string(kernel) + " vs " +
             std::to_string(classes - d.cyclic_classes) + " non-cyclic classes");
      return;
    }
    if (id.family == CatalogFamily::Cyclic && kernel != 0) {
      c.fail(id.name() + ": nonzero kernel for a cyclic group");
      return;
    }
    ++groups;
  }

  auto kernel_of = [](const char* name) {
    const GroupData& d = data_for(parse_catalog_name(name).value());
    return int(d.marks.classes.size()) - d.image.h_tilde.rows();
  };
  if (kernel_of("2D4") != 1) c.fail("2D4 kernel rank is not 1");
  if (kernel_of("2I") != 5) c.fail("2I kernel rank is not 5");
  c.note(std::to_string(groups) + " groups, pins 2D4=1 and 2I=5");
}

void criterion_prime_power_surjectivity(Criterion& c) {
  for (const char* name : {"C2", "C4", "C8", "2D4", "2D8", "2D16", "C9"}) {
    BetaReport r = analyze_named(name, {FieldTag::Rational});
    if (!r.cokernels.at(FieldTag::Rational).surjective())
      c.fail(std::string(name) + ": rational cokernel is nonzero");
  }
  c.note("C2 C4 C8 2D4 2D8 2D16 C9");
}

void criterion_symmetric_surjectivity(Criterion& c) {
  const std::vector<FieldTag> fields{FieldTag::Rational, FieldTag::Real, FieldTag::Complex};
  for (const char* name : {"S2", "S3", "S4", "S5"}) {
    BetaReport r = analyze_named(name, fields);
    for (FieldTag tag : fields)
      if (!r.cokernels.at(tag).surjective())
        c.fail(std::string(name) + " over " + field_tag_name(tag));
  }
  c.note("S2..S5 over Q, R, C");
}

bool capture_cli(const std::string& args, std::string& output) {
  std::string command = std::string(BURNSIDE_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  output.clear();
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

void criterion_determinism(Criterion& c) {
  std::string first, second;
  if (!capture_cli("analyze 2I --format json", first)) {
    c.fail("first CLI run failed");
    return;
  }
  if (!capture_cli("analyze 2I --format json", second)) {
    c.fail("second CLI run failed");
    return;
  }
  if (first.empty()) c.fail("CLI produced no output");
  if (first != second) c.fail("outputs differ between runs");
  c.note(std::to_string(first.size()) + " bytes, byte-identical");
}

void criterion_octahedral_regression(Criterion& c) {
  const std::vector<FieldTag> fields{FieldTag::Real, FieldTag::Complex};
  BetaReport octa = analyze_named("2O", fields);
  BetaReport gl = analyze_named("GL2F3", fields);

  if (octa.marks.classes.size() != 13)
    c.fail("2O subgroup classes: " + std::to_string(octa.marks.classes.size()));
  if (gl.marks.classes.size() != 16)
    c.fail("GL2F3 subgroup classes: " + std::to_string(gl.marks.classes.size()));

  if (!quotient_is(octa.cokernels.at(FieldTag::Complex), 1, {2, 2}))
    c.fail("2O complex cokernel is not Z + (Z/2)^2");
  if (!quotient_is(gl.cokernels.at(FieldTag::Complex), 1, {}))
    c.fail("GL2F3 complex cokernel is not Z");

  if (!quotient_is(octa.cokernels.at(FieldTag::Real), 1, {}))
    c.fail("2O real cokernel is not Z");
  if (!gl.cokernels.at(FieldTag::Real).surjective())
    c.fail("GL2F3 real cokernel is nonzero");

  c.note("13 vs 16 subgroup classes, distinct real cokernels");
}

}  // namespace

int main() {
  run_criterion(1, "reference pipelines reproduced for the twelve worked groups",
                criterion_reference_tables);
  run_criterion(2, "integer-valued real cokernel vanishes on the reference set",
                criterion_integer_real_vanishing);
  run_criterion(3, "structure constants equal the orbit-decomposition oracle",
                criterion_oracle);
  run_criterion(4, "multiplicities satisfy the hom-count identity", criterion_hom_counts);
  run_criterion(5, "character tables pass orthogonality and indicator identities",
                criterion_character_tables);
  run_criterion(6, "kernel rank counts the non-cyclic subgroup classes",
                criterion_kernel_rank);
  run_criterion(7, "rational surjectivity for the prime-power catalog groups",
                criterion_prime_power_surjectivity);
  run_criterion(8, "symmetric groups up to S5 have trivial cokernels over Q, R, C",
                criterion_symmetric_surjectivity);
  run_criterion(9, "repeated CLI analyses emit byte-identical reports",
                criterion_determinism);
  run_criterion(10, "binary octahedral and GL(2,3) invariants differ where expected",
                criterion_octahedral_regression);

  if (failures == 0) {
    std::cout << "all 10 criteria passed\n";
    return 0;
  }
  std::cout << failures << " of 10 criteria failed\n";
  return 1;
}
