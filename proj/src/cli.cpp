#include "homlattice/cli.hpp"

#include <CLI11.hpp>

#include "homlattice/basis.hpp"
#include "homlattice/errors.hpp"
#include "homlattice/io.hpp"
#include "homlattice/limits.hpp"
#include "homlattice/oracle.hpp"
#include "homlattice/perm_gadget.hpp"
#include "homlattice/homcount.hpp"
#include "homlattice/restrictions.hpp"

namespace homlattice::cli {

namespace {

struct Options {
  std::size_t limit = 0;
  std::string tau;
  std::string pattern;
  std::string host;
  std::string method = "basis";
  std::string manifest;
  std::string matrix;
  bool check = false;
};

int cmd_count(const Options& o, std::ostream& out) {
  const auto tau = Restriction::parse(o.tau);
  const auto pattern = io::read_graph_file(o.pattern);
  const auto host = io::read_graph_file(o.host);
  const Count result =
      o.method == "oracle" ? oracle::brute_restricted(tau, pattern, host) : evaluate(expand(tau, pattern), host);
  out << result << '\n';
  return ok;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const auto tau = Restriction::parse(o.tau);
  const auto pattern = io::read_graph_file(o.pattern);
  out << format_expansion(expand(tau, pattern));
  return ok;
}

int cmd_minors(const Options& o, std::ostream& out) {
  const auto tau = Restriction::parse(o.tau);
  const auto pattern = io::read_graph_file(o.pattern);
  const auto minors = tau_minors(tau, pattern);
  int max_width = -1;
  for (const auto& entry : minors.entries) {
    const int width = treewidth_exact(entry.representative).width;
    max_width = std::max(max_width, width);
    out << entry.representative.num_vertices() << '\t' << format_edge_list(entry.representative) << '\t'
        << width << '\n';
  }
  out << "max-treewidth: " << max_width << '\n';
  return ok;
}

int cmd_lincomb(const Options& o, std::ostream& out, std::ostream& err) {
  const auto lc = io::read_manifest_file(o.manifest);
  const auto host = io::read_graph_file(o.host);
  out << io::format_rational(evaluate_lincomb(lc, host)) << '\n';
  err << "congruent: " << (is_congruent(lc) ? "yes" : "no") << '\n';
  return ok;
}

int cmd_perm_gadget(const Options& o, std::ostream& out) {
  const auto matrix = io::read_matrix_file(o.matrix);
  const auto result = verify_perm_identity(matrix);
  out << "perm=" << result.permanent << " subtrees=" << result.subtrees
      << " match=" << (result.match ? "yes" : "no") << '\n';
  return o.check && !result.match ? check_failure : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counting of graphically restricted homomorphisms", "homlattice"};
  app.require_subcommand(1);
  app.add_option("--limit", o.limit, "Pattern-size limit (enumeration cost is exponential in it)")
      ->envname("HOMLATTICE_LIMIT")
      ->check(CLI::Range(std::size_t{1}, max_pattern_limit));

  auto* count = app.add_subcommand("count", "Count restricted homomorphisms from a pattern to a host");
  count->add_option("--tau", o.tau, "hom | emb | li | li:R")->required();
  count->add_option("--pattern", o.pattern)->required();
  count->add_option("--host", o.host)->required();
  count->add_option("--method", o.method)->check(CLI::IsMember({"basis", "oracle"}));

  auto* expand_cmd = app.add_subcommand("expand", "Print the homomorphism-basis expansion of a pattern");
  expand_cmd->add_option("--tau", o.tau)->required();
  expand_cmd->add_option("--pattern", o.pattern)->required();

  auto* minors = app.add_subcommand("minors", "List tau-minors with their treewidth");
  minors->add_option("--tau", o.tau)->required();
  minors->add_option("--pattern", o.pattern)->required();

  auto* lincomb = app.add_subcommand("lincomb", "Evaluate a linear combination manifest on a host");
  lincomb->add_option("--manifest", o.manifest)->required();
  lincomb->add_option("--host", o.host)->required();

  auto* perm = app.add_subcommand("perm-gadget", "Compare perm(A) with the subtree count of its gadget tree");
  perm->add_option("--matrix", o.matrix)->required();
  perm->add_flag("--check", o.check, "Exit with status 4 when the counts differ");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  struct LimitRestore {
    std::size_t previous = pattern_limit();
    ~LimitRestore() { set_pattern_limit(previous); }
  } restore;

  try {
    if (o.limit != 0) {
      set_pattern_limit(o.limit);
      if (o.limit > default_pattern_limit)
        err << "note: pattern limit raised to " << o.limit
            << "; partition and permutation enumeration grows exponentially\n";
    }
    if (count->parsed()) return cmd_count(o, out);
    if (expand_cmd->parsed()) return cmd_expand(o, out);
    if (minors->parsed()) return cmd_minors(o, out);
    if (lincomb->parsed()) return cmd_lincomb(o, out, err);
    if (perm->parsed()) return cmd_perm_gadget(o, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const limit_exceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return limit_failure;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const precondition_failed& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_failure;
  }
  return usage;
}

}  // namespace homlattice::cli
