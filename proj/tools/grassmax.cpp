#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grassmax/centralizer.hpp"
#include "grassmax/counting.hpp"
#include "grassmax/exterior.hpp"
#include "grassmax/families.hpp"
#include "grassmax/polyring.hpp"
#include "grassmax/report_io.hpp"

namespace {

using grassmax::AlgebraContext;
using grassmax::Element;
using grassmax::ExecMode;
using grassmax::FieldDesc;
using grassmax::Mask;
using grassmax::OddFamily;
using grassmax::Subspace;

// Streams either to stdout or to --output.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int env_threads() {
  const char* raw = std::getenv("GRASSMAX_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  try {
    const int value = std::stoi(raw);
    if (value < 1) throw std::invalid_argument("GRASSMAX_THREADS must be >= 1");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid GRASSMAX_THREADS value '") + raw + "'");
  }
}

int run_qk(long from, long to, const std::string& format, const std::string& output) {
  const auto reports = grassmax::counting::sweep(from, to, env_threads());
  OutputTarget target(output);
  std::ostream& out = target.stream();
  if (format == "csv") {
    out << grassmax::reportio::csv_header() << '\n';
    for (const auto& rep : reports) out << grassmax::reportio::csv_row(rep) << '\n';
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) arr.push_back(grassmax::reportio::to_json(rep));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& rep : reports) out << grassmax::reportio::render_text(rep) << '\n';
  }
  return 0;
}

int run_verify(const std::string& which, long kmax) {
  const bool all = (which == "all");
  if (all || which == "c3-closed-form") {
    const long checked = grassmax::counting::verify_c3_identity(kmax);
    std::cout << "c3 closed form: verified for k = 1.." << checked << '\n';
  }
  if (all || which == "gamma") {
    const long checked = grassmax::counting::verify_gamma_identity(kmax);
    std::cout << "odd double factorial identity: verified for k = 0.." << (checked - 1) << '\n';
  }
  if (all || which == "factorization") {
    const auto rep = grassmax::polyring::verify_factorization();
    std::cout << "difference factorization: e' - d' = 24k(2k+5)(k+2)(k+1)(2k+3)^2\n";
    for (const auto& row : rep.coefficients) {
      std::cout << "  degree " << row.deg << ": " << row.difference.str() << " = "
                << row.factored.str() << '\n';
    }
    std::cout << "  leading coefficients: d' " << rep.d_prime_leading.str() << " (93*2^6), e' "
              << rep.e_prime_leading.str() << " (96*2^6)\n";
    std::cout << "  factors positive for k >= 1: " << (rep.factors_positive ? "yes" : "no")
              << '\n';
  }
  if (all || which == "scaling-chain") {
    std::vector<long> samples(static_cast<std::size_t>(kmax));
    std::iota(samples.begin(), samples.end(), 1L);
    const auto checks = grassmax::polyring::verify_scaling_chain(samples);
    std::cout << "scaling chain: d' and e' match scaled counts for k = 1.." << checks.back().k
              << '\n';
  }
  return 0;
}

std::string mask_with_monomial(Mask m) {
  return std::to_string(static_cast<std::uint32_t>(m)) + " = " + grassmax::monomial_str(m);
}

int run_family_check(const std::string& path, bool naive) {
  const OddFamily fam = grassmax::read_family_file(path);
  std::cout << "family: n=" << fam.ground_set_size() << ", " << fam.size() << " members\n";
  const auto verdict = grassmax::is_intersecting(fam);
  if (!verdict.intersecting) {
    std::cout << "intersecting: no (disjoint pair: "
              << mask_with_monomial(verdict.disjoint_pair->first) << ", "
              << mask_with_monomial(verdict.disjoint_pair->second) << ")\n";
    return 0;
  }
  std::cout << "intersecting: yes\n";
  const auto maximality = naive ? grassmax::is_maximal_family_naive(fam)
                                : grassmax::is_maximal_family_fast(fam);
  if (maximality.maximal) {
    std::cout << "maximal: yes\n";
  } else {
    std::cout << "maximal: no (addable mask: " << mask_with_monomial(*maximality.addable)
              << ")\n";
  }
  return 0;
}

int run_family_complete(const std::string& path, const std::string& output) {
  const OddFamily fam = grassmax::read_family_file(path);
  const OddFamily done = grassmax::complete_family(fam);
  OutputTarget target(output);
  grassmax::write_family(target.stream(), done);
  std::cerr << "completed: " << fam.size() << " -> " << done.size() << " members\n";
  return 0;
}

int run_family_enumerate(int n, const std::string& format, const std::string& output) {
  const auto families = grassmax::enumerate_maximal_families(n);
  const AlgebraContext ctx(n);
  // Compare against 3*2^{n-2} through the doubled value so n = 1 stays exact.
  const long bound_twice = 3L << (n - 1);
  const std::string bound_str = (n >= 2) ? std::to_string(3L << (n - 2)) : "3/2";

  struct Row {
    std::size_t index;
    std::size_t size;
    std::size_t dim;
    bool below_bound;
  };
  std::vector<Row> rows;
  rows.reserve(families.size());
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Subspace alg = grassmax::family_to_subalgebra(families[i], ctx);
    const std::size_t dim = alg.dim();
    rows.push_back({i + 1, families[i].size(), dim, 2 * static_cast<long>(dim) < bound_twice});
    ++histogram[families[i].size()];
  }

  OutputTarget target(output);
  std::ostream& out = target.stream();
  if (format == "csv") {
    out << "index,size,dim,below_bound,members\n";
    for (std::size_t i = 0; i < families.size(); ++i) {
      out << rows[i].index << ',' << rows[i].size << ',' << rows[i].dim << ','
          << (rows[i].below_bound ? 1 : 0) << ',';
      const auto& members = families[i].members();
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j > 0) out << ' ';
        out << static_cast<std::uint32_t>(members[j]);
      }
      out << '\n';
    }
  } else if (format == "json") {
    nlohmann::json doc;
    doc["n"] = n;
    doc["dim_bound"] = bound_str;
    doc["families"] = nlohmann::json::array();
    for (std::size_t i = 0; i < families.size(); ++i) {
      nlohmann::json f;
      f["index"] = rows[i].index;
      f["size"] = rows[i].size;
      f["dim"] = rows[i].dim;
      f["below_bound"] = rows[i].below_bound;
      f["members"] = families[i].members();
      doc["families"].push_back(std::move(f));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "n=" << n << ": " << families.size() << " maximal intersecting families\n";
    for (std::size_t i = 0; i < families.size(); ++i) {
      out << "family " << rows[i].index << ": size " << rows[i].size << ", dim " << rows[i].dim
          << (rows[i].below_bound ? " (below bound)" : "") << ", members:";
      for (Mask m : families[i].members()) out << ' ' << static_cast<std::uint32_t>(m);
      out << '\n';
    }
    out << "size histogram:";
    for (const auto& [size, count] : histogram) out << ' ' << size << 'x' << count;
    out << '\n';
    out << "dim bound 3*2^(n-2) = " << bound_str << "; families below bound: ";
    std::size_t below = 0;
    for (const auto& row : rows) below += row.below_bound ? 1 : 0;
    out << below << '\n';
  }
  return 0;
}

int run_family_certify(const std::string& path, int expect_n, const std::string& field_name) {
  const OddFamily fam = grassmax::read_family_file(path);
  if (expect_n > 0 && expect_n != fam.ground_set_size()) {
    throw std::invalid_argument("family file has n=" + std::to_string(fam.ground_set_size()) +
                                ", but --n " + std::to_string(expect_n) + " was given");
  }
  const FieldDesc field =
      (field_name == "gf3") ? FieldDesc::gf(3) : FieldDesc::rationals();
  const AlgebraContext ctx(fam.ground_set_size(), field);

  std::cout << "family: n=" << fam.ground_set_size() << ", " << fam.size() << " members\n";
  std::cout << "field: " << (field.is_rational() ? "rationals" : "gf3") << '\n';

  bool comb_maximal = false;
  const auto inter = grassmax::is_intersecting(fam);
  if (!inter.intersecting) {
    std::cout << "combinatorial: not intersecting (disjoint pair: "
              << mask_with_monomial(inter.disjoint_pair->first) << ", "
              << mask_with_monomial(inter.disjoint_pair->second) << ")\n";
  } else {
    const auto maximality = grassmax::is_maximal_family_naive(fam);
    comb_maximal = maximality.maximal;
    if (comb_maximal) {
      std::cout << "combinatorial: maximal\n";
    } else {
      std::cout << "combinatorial: not maximal (addable mask: "
                << mask_with_monomial(*maximality.addable) << ")\n";
    }
  }

  const Subspace alg = grassmax::family_to_subalgebra(fam, ctx);
  std::cout << "subalgebra dim: " << alg.dim() << '\n';

  bool alg_maximal = false;
  try {
    const auto verdict = grassmax::is_maximal_commutative(alg);
    alg_maximal = verdict.maximal;
    if (alg_maximal) {
      std::cout << "algebraic: maximal commutative\n";
    } else {
      std::cout << "algebraic: not maximal (witness: " << grassmax::to_string(*verdict.witness)
                << ")\n";
    }
  } catch (const grassmax::not_commutative_error& ex) {
    std::cout << "algebraic: not commutative (" << ex.what() << ")\n";
  } catch (const grassmax::not_closed_error& ex) {
    std::cout << "algebraic: not closed (" << ex.what() << ")\n";
  }

  if (comb_maximal != alg_maximal) {
    throw grassmax::verification_error(
        "combinatorial and algebraic verdicts disagree; the correspondence is broken");
  }
  std::cout << "verdicts agree: " << (comb_maximal ? "maximal" : "not maximal") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for maximal commutative subalgebras of Grassmann algebras"};
  app.require_subcommand(1);

  // qk
  auto* cmd_qk = app.add_subcommand("qk", "evaluate the count ratio over a range of k");
  long from = 1, to = 1;
  std::string qk_format = "text", qk_output;
  cmd_qk->add_option("--from", from, "first k (>= 1)")->required();
  cmd_qk->add_option("--to", to, "last k")->required();
  cmd_qk->add_option("--format", qk_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd_qk->add_option("--output", qk_output, "write to this file instead of stdout");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the identity checks");
  std::string which = "all";
  long kmax = 200;
  cmd_verify->add_option("--which", which, "which identity to check")
      ->check(CLI::IsMember({"all", "c3-closed-form", "gamma", "factorization",
                             "scaling-chain"}));
  cmd_verify->add_option("--kmax", kmax, "upper end of the checked range (default 200)")
      ->check(CLI::PositiveNumber);

  // family
  auto* cmd_family = app.add_subcommand("family", "operate on odd intersecting families");
  cmd_family->require_subcommand(1);

  auto* cmd_check = cmd_family->add_subcommand("check", "report intersecting and maximal");
  std::string check_file;
  bool check_naive = false;
  cmd_check->add_option("--file", check_file, "family file")->required();
  cmd_check->add_flag("--naive", check_naive, "use the quadratic reference scan");

  auto* cmd_complete = cmd_family->add_subcommand("complete", "extend to a maximal family");
  std::string complete_file, complete_output;
  cmd_complete->add_option("--file", complete_file, "family file")->required();
  cmd_complete->add_option("--output", complete_output, "write to this file instead of stdout");

  auto* cmd_enum = cmd_family->add_subcommand("enumerate", "list all maximal families (n <= 5)");
  int enum_n = 0;
  std::string enum_format = "text", enum_output;
  cmd_enum->add_option("--n", enum_n, "ground set size")->required()->check(CLI::Range(1, 5));
  cmd_enum->add_option("--format", enum_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd_enum->add_option("--output", enum_output, "write to this file instead of stdout");

  auto* cmd_certify =
      cmd_family->add_subcommand("certify", "check the family against its subalgebra");
  std::string certify_file, certify_field = "rationals";
  int certify_n = 0;
  cmd_certify->add_option("--file", certify_file, "family file")->required();
  cmd_certify->add_option("--n", certify_n, "expected ground set size");
  cmd_certify->add_option("--field", certify_field, "coefficient field")
      ->check(CLI::IsMember({"rationals", "gf3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_qk) return run_qk(from, to, qk_format, qk_output);
    if (*cmd_verify) return run_verify(which, kmax);
    if (*cmd_check) return run_family_check(check_file, check_naive);
    if (*cmd_complete) return run_family_complete(complete_file, complete_output);
    if (*cmd_enum) return run_family_enumerate(enum_n, enum_format, enum_output);
    if (*cmd_certify) return run_family_certify(certify_file, certify_n, certify_field);
  } catch (const grassmax::verification_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
