#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "format.hpp"
#include "hbell/bell_polynomial.hpp"
#include "hbell/dft.hpp"
#include "hbell/parallel.hpp"
#include "hbell/symmetry.hpp"
#include "hbell/violation.hpp"
#include "hbell_cli/cli.hpp"
#include "verify.hpp"

namespace hbell::cli {
namespace {

Params make_params(const RunConfig& c) { return Params::make(c.d, c.n); }

GeneratorSet generator_set(const RunConfig& c) {
  GeneratorSet set = GeneratorSet::standard();
  set.permutations = c.permutations;
  set.conjugation = c.conjugation;
  return set;
}

DitFunction single_function(const RunConfig& c, const Params& p) {
  const auto& e = *c.f;
  if (e.size() != p.D()) {
    throw UsageError("--f needs " + std::to_string(p.D()) + " exponents for d=" + std::to_string(p.d()) +
                     ", n=" + std::to_string(p.n()) + ", got " + std::to_string(e.size()));
  }
  for (int x : e) {
    if (x < 0 || x >= p.d()) throw UsageError("--f exponents must lie in [0, d)");
  }
  return DitFunction::from_exponents(p, e);
}

void require_enumerable(const RunConfig& c, const Params& p) {
  try {
    p.require_enumerable(c.enumeration_limit);
  } catch (const LimitError& e) {
    throw LimitError(std::string(e.what()) +
                     "; raise --enumeration-limit or pass --f <exponents> to work with a single function");
  }
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  const Params p = make_params(c);
  std::optional<OrbitTable> table;
  if (!c.f) {
    require_enumerable(c, p);
    if (c.orbits) table = classify_orbits(p, generator_set(c), c.enumeration_limit, c.parallelism);
  } else if (c.orbits) {
    throw UsageError("--orbits needs the full enumeration; drop --f");
  }

  if (c.output == OutputFormat::csv) {
    out << "d,n,f_exponents,real";
    for (std::size_t r = 0; r < p.D(); ++r) out << ",c" << r << "_re,c" << r << "_im";
    if (table) out << ",orbit_id,orbit_size";
    out << '\n';
  }

  auto emit = [&](const DitFunction& f) {
    const auto poly = polynomial_of(f);
    switch (c.output) {
      case OutputFormat::json: {
        json coeffs = json::array();
        for (const auto& x : poly.coeffs) coeffs.push_back(cyc_json(x));
        json rec = {{"d", p.d()}, {"n", p.n()}, {"f_exponents", exponents_json(f.exponents())},
                    {"coeffs", coeffs}, {"real", poly.is_real()}};
        if (table) {
          const auto id = table->orbit_of[f.code()];
          rec["orbit_id"] = id;
          rec["orbit_size"] = table->orbits[id].size;
        }
        json_line(out, rec);
        break;
      }
      case OutputFormat::csv: {
        out << p.d() << ',' << p.n() << ',' << join_exponents(f.exponents()) << ',' << (poly.is_real() ? "true" : "false");
        for (const auto& x : poly.coeffs) {
          const auto z = x.to_complex();
          out << ',' << csv_number(z.real()) << ',' << csv_number(z.imag());
        }
        if (table) {
          const auto id = table->orbit_of[f.code()];
          out << ',' << id << ',' << table->orbits[id].size;
        }
        out << '\n';
        break;
      }
      case OutputFormat::pretty:
        out << '[' << join_exponents(f.exponents(), ',') << "]  " << poly.to_string();
        if (poly.is_real()) out << "  (real)";
        if (table) out << "  orbit " << table->orbit_of[f.code()];
        out << '\n';
        break;
    }
  };

  if (c.f) {
    emit(single_function(c, p));
  } else {
    for (const auto& f : enumerate_functions(p, c.enumeration_limit)) emit(f);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const Params p = make_params(c);
  require_enumerable(c, p);
  const GeneratorSet set = generator_set(c);
  const auto table = classify_orbits(p, set, c.enumeration_limit, c.parallelism);
  const auto total = *p.function_count();

  if (c.list) {
    if (c.output == OutputFormat::csv) out << "orbit_id,representative,size,real_members\n";
    for (std::size_t id = 0; id < table.orbits.size(); ++id) {
      const auto& o = table.orbits[id];
      const auto rep = DitFunction::from_code(p, o.representative);
      switch (c.output) {
        case OutputFormat::json:
          json_line(out, {{"orbit_id", id},
                          {"representative", exponents_json(rep.exponents())},
                          {"size", o.size},
                          {"real_members", o.real_members}});
          break;
        case OutputFormat::csv:
          out << id << ',' << join_exponents(rep.exponents()) << ',' << o.size << ',' << o.real_members << '\n';
          break;
        case OutputFormat::pretty:
          out << "orbit " << id << "  size " << o.size << "  real " << o.real_members << "  "
              << polynomial_of(rep).to_string() << '\n';
          break;
      }
    }
    if (c.output == OutputFormat::csv) return kExitOk;
  }

  switch (c.output) {
    case OutputFormat::json:
      json_line(out, {{"d", p.d()},
                      {"n", p.n()},
                      {"generators", set.names()},
                      {"group_order", set.group_order(p)},
                      {"total", total},
                      {"orbits", table.orbits.size()},
                      {"real", table.real_total},
                      {"real_orbits", table.real_orbit_count},
                      {"real_orbits_restricted", table.real_restricted_orbit_count}});
      break;
    case OutputFormat::csv:
      out << "d,n,total,orbits,real,real_orbits,real_orbits_restricted\n"
          << p.d() << ',' << p.n() << ',' << total << ',' << table.orbits.size() << ',' << table.real_total << ','
          << table.real_orbit_count << ',' << table.real_restricted_orbit_count << '\n';
      break;
    case OutputFormat::pretty: {
      std::string names;
      for (const auto& n : set.names()) names += (names.empty() ? "" : ", ") + n;
      out << "H_{" << p.d() << ',' << p.n() << "} under {" << names << "} (group order " << set.group_order(p)
          << ")\n"
          << "  polynomials             " << total << '\n'
          << "  orbits                  " << table.orbits.size() << '\n'
          << "  real polynomials        " << table.real_total << '\n'
          << "  orbits meeting reals    " << table.real_orbit_count << '\n'
          << "  real orbits (no phase)  " << table.real_restricted_orbit_count << '\n';
      break;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- violations

struct ViolationRow {
  std::uint64_t code = 0;
  DitFunction f;
  ViolationBound bound;
};

json state_json(const StateVector& s) { return complex_array(s.amplitudes()); }

int cmd_violations(const RunConfig& c, std::ostream& out) {
  const Params p = make_params(c);
  if (p.D() > c.matrix_dim_limit) {
    throw LimitError("operator dimension " + std::to_string(p.D()) + " exceeds --matrix-dim-limit " +
                     std::to_string(c.matrix_dim_limit));
  }
  facet_prefactor(p, c.convention);  // validates d and the convention

  std::vector<DitFunction> functions;
  if (c.f) {
    functions.push_back(single_function(c, p));
  } else {
    require_enumerable(c, p);
    if (c.scope == Scope::orbits) {
      const auto table = classify_orbits(p, generator_set(c), c.enumeration_limit, c.parallelism);
      for (const auto& o : table.orbits) functions.push_back(DitFunction::from_code(p, o.representative));
    } else {
      for (const auto& f : enumerate_functions(p, c.enumeration_limit)) functions.push_back(f);
    }
  }

  std::vector<ViolationRow> rows(functions.size(), {0, functions.front(), {}});
  parallel_for(functions.size(), c.parallelism, [&](std::size_t i) {
    rows[i] = {functions[i].code(), functions[i], violation_bound(functions[i], c.convention, c.matrix_dim_limit)};
  });
  // Rank by value (rounded so that float noise cannot reorder ties), then code.
  auto key = [](double v) { return std::llround(v * 1e9); };
  std::sort(rows.begin(), rows.end(), [&](const ViolationRow& a, const ViolationRow& b) {
    const auto ka = key(a.bound.value), kb = key(b.bound.value);
    return ka != kb ? ka > kb : a.code < b.code;
  });

  const double best = rows.front().bound.value;
  std::size_t at_max = 0, violating = 0;
  for (const auto& r : rows) {
    at_max += std::abs(r.bound.value - best) < 1e-9;
    violating += r.bound.value > 1.0 + kMembershipTolerance;
  }
  const std::size_t shown = c.top == 0 ? rows.size() : std::min(c.top, rows.size());

  if (c.output == OutputFormat::csv) {
    out << "rank,f_exponents,convention,bound,saturating_facet_value";
    for (std::size_t k = 0; k < p.D(); ++k) out << ",psi" << k << "_re,psi" << k << "_im";
    out << '\n';
  }
  if (c.output == OutputFormat::pretty) {
    out << "rank  bound        f, polynomial\n";
  }
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& row = rows[i];
    const auto facet = facet_vector(row.f, c.convention);
    const double saturating = evaluate(facet, quantum_correlations(row.bound.state, p));
    switch (c.output) {
      case OutputFormat::json:
        json_line(out, {{"d", p.d()},
                        {"n", p.n()},
                        {"f_exponents", exponents_json(row.f.exponents())},
                        {"convention", to_string(c.convention)},
                        {"bound", row.bound.value},
                        {"optimal_state", state_json(row.bound.state)},
                        {"saturating_facet_value", saturating}});
        break;
      case OutputFormat::csv:
        out << i + 1 << ',' << join_exponents(row.f.exponents()) << ',' << to_string(c.convention) << ','
            << csv_number(row.bound.value) << ',' << csv_number(saturating);
        for (const auto& a : row.bound.state.amplitudes()) out << ',' << csv_number(a.real()) << ',' << csv_number(a.imag());
        out << '\n';
        break;
      case OutputFormat::pretty: {
        std::string rank = std::to_string(i + 1);
        rank.resize(6, ' ');
        out << rank << fixed(row.bound.value, 9) << "  [" << join_exponents(row.f.exponents(), ',') << "]  "
            << polynomial_of(row.f).to_string() << '\n';
        break;
      }
    }
  }

  switch (c.output) {
    case OutputFormat::json:
      json_line(out, {{"d", p.d()},
                      {"n", p.n()},
                      {"convention", to_string(c.convention)},
                      {"scope", c.f ? "single" : (c.scope == Scope::all ? "all" : "orbits")},
                      {"evaluated", rows.size()},
                      {"max_bound", best},
                      {"count_at_max", at_max},
                      {"violating", violating}});
      break;
    case OutputFormat::pretty:
      out << "evaluated " << rows.size() << ", max " << fixed(best, 9) << " reached by " << at_max << ", "
          << violating << " exceed 1\n";
      break;
    case OutputFormat::csv:
      break;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto results = run_verification(c);
  std::size_t passed = 0, failed = 0, skipped = 0;
  if (c.output == OutputFormat::csv) out << "suite,status,mode,checked,note\n";
  for (const auto& r : results) {
    passed += r.status == SuiteStatus::pass;
    failed += r.status == SuiteStatus::fail;
    skipped += r.status == SuiteStatus::skipped;
    switch (c.output) {
      case OutputFormat::json: {
        json rec = {{"suite", r.name}, {"status", to_string(r.status)}, {"checked", r.checked}};
        if (!r.mode.empty()) rec["mode"] = r.mode;
        if (!r.note.empty()) rec["note"] = r.note;
        if (r.status == SuiteStatus::fail) rec["witness"] = r.witness;
        json_line(out, rec);
        break;
      }
      case OutputFormat::csv:
        out << r.name << ',' << to_string(r.status) << ',' << r.mode << ',' << r.checked << ',' << r.note << '\n';
        break;
      case OutputFormat::pretty: {
        std::string name = r.name;
        name.resize(30, ' ');
        std::string status = to_string(r.status);
        status.resize(8, ' ');
        out << name << status << r.checked << " checks";
        if (!r.mode.empty()) out << " (" << r.mode << ')';
        if (!r.note.empty()) out << "  " << r.note;
        if (r.status == SuiteStatus::fail) out << "\n    witness: " << r.witness.dump();
        out << '\n';
        break;
      }
    }
  }
  if (c.output == OutputFormat::json) {
    json_line(out, {{"d", c.d}, {"n", c.n}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}});
  } else if (c.output == OutputFormat::pretty) {
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kExitOk : kExitPropertyFailed;
}

// --------------------------------------------------------------- membership

int cmd_membership(const RunConfig& c, std::ostream& out) {
  const Params p = make_params(c);
  if (c.input.empty()) throw UsageError("membership needs --input <file> (use - for stdin)");
  std::string text;
  if (c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.input);
    if (!in) throw UsageError("cannot read " + c.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto xi = parse_correlation_vector(text);
  if (xi.size() != p.D()) {
    throw UsageError("correlation vector has " + std::to_string(xi.size()) + " entries, expected D = " +
                     std::to_string(p.D()));
  }
  require_enumerable(c, p);
  MembershipReport report;
  try {
    report = membership(xi, p, c.enumeration_limit, c.parallelism);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto facet = facet_vector(DitFunction::from_code(p, report.worst_code));
  switch (c.output) {
    case OutputFormat::json:
      json_line(out, {{"d", p.d()},
                      {"n", p.n()},
                      {"f_exponents", exponents_json(facet.f.exponents())},
                      {"c_re", clean(facet.prefactor.real())},
                      {"c_im", clean(facet.prefactor.imag())},
                      {"beta", complex_array(facet.beta)},
                      {"value", report.worst_value},
                      {"verdict", to_string(report.verdict)}});
      break;
    case OutputFormat::csv:
      out << "d,n,f_exponents,value,verdict\n"
          << p.d() << ',' << p.n() << ',' << join_exponents(facet.f.exponents()) << ','
          << csv_number(report.worst_value) << ',' << to_string(report.verdict) << '\n';
      break;
    case OutputFormat::pretty:
      out << to_string(report.verdict) << ": worst facet [" << join_exponents(facet.f.exponents(), ',')
          << "] evaluates to " << fixed(report.worst_value, 9) << '\n';
      break;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- matrix

int cmd_matrix(const RunConfig& c, std::ostream& out) {
  const Params p = make_params(c);
  const bool is_q = c.f.has_value();
  const CycMatrix m = is_q ? build_q_exact(single_function(c, p), c.matrix_dim_limit)
                           : build_matrix(p, c.matrix_dim_limit);
  const std::size_t dim = m.dim();
  switch (c.output) {
    case OutputFormat::json: {
      json exact = json::array(), numeric = json::array();
      for (std::size_t i = 0; i < dim; ++i) {
        json er = json::array(), nr = json::array();
        for (std::size_t j = 0; j < dim; ++j) {
          er.push_back(cyc_json(m(i, j)));
          nr.push_back(complex_json(m(i, j).to_complex()));
        }
        exact.push_back(er);
        numeric.push_back(nr);
      }
      json rec = {{"d", p.d()}, {"n", p.n()}, {"kind", is_q ? "q" : "dft"}, {"dim", dim}};
      if (is_q) rec["f_exponents"] = *c.f;
      rec["entries"] = exact;
      rec["complex"] = numeric;
      json_line(out, rec);
      break;
    }
    case OutputFormat::csv:
      out << "row,col,re,im\n";
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          const auto z = m(i, j).to_complex();
          out << i << ',' << j << ',' << csv_number(z.real()) << ',' << csv_number(z.imag()) << '\n';
        }
      break;
    case OutputFormat::pretty: {
      std::vector<std::string> cells;
      std::size_t width = 1;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          cells.push_back(m(i, j).to_string());
          width = std::max(width, cells.back().size());
        }
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          std::string cell = cells[i * dim + j];
          cell.insert(0, width - cell.size(), ' ');
          out << (j ? "  " : "") << cell;
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.convention == Convention::regauged && config.d != 3) {
      throw UsageError("--convention regauged is only defined for d = 3");
    }
    switch (config.command) {
      case Command::enumerate:
        return cmd_enumerate(config, out);
      case Command::classify:
        return cmd_classify(config, out);
      case Command::violations:
        return cmd_violations(config, out);
      case Command::verify:
        return cmd_verify(config, out);
      case Command::membership:
        return cmd_membership(config, out);
      case Command::matrix:
        return cmd_matrix(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace hbell::cli
