#include "phylotrop/cli.hpp"

#include "phylotrop/cools.hpp"
#include "phylotrop/dissimilarity.hpp"
#include "phylotrop/newick.hpp"
#include "phylotrop/report.hpp"
#include "phylotrop/tropical.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace phylotrop::cli {

namespace {

// Malformed input or an unreadable file; maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

Tree load_tree(const std::string& path) {
  try {
    return parse_newick(read_input(path));
  } catch (const NewickError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const TreeError& e) {
    throw InputError(path + ": " + e.what());
  }
}

UltrametricTree load_ultrametric(const std::string& path) {
  try {
    return validate_ultrametric(load_tree(path));
  } catch (const UltrametricError& e) {
    throw InputError(path + ": not an ultrametric tree: " + e.what());
  }
}

struct Options {
  std::string input;
  int m = 0;
  std::uint64_t seed = 0;
  std::string sign = "negated";
  std::string format = "json";
  int max_resamples = 3;
  std::string depth = "1";
  int leaves = 0;
};

int run_validate(const Options& opt, std::ostream& out) {
  Tree tree = load_tree(opt.input);
  ValidationReport report;
  report.n = tree.leaf_count();
  report.total_weight = total_weight(tree);
  try {
    validate_phylogenetic(tree);
    report.phylogenetic = true;
  } catch (const TreeError&) {
  }
  try {
    auto ut = validate_ultrametric(tree);
    report.ultrametric = true;
    report.depth = ut.depth();
  } catch (const UltrametricError& e) {
    report.reason = e.what();
  }
  out << format_report(report, parse_format(opt.format));
  return report.ok() ? kSuccess : kVerdictFailed;
}

int run_dissim(const Options& opt, std::ostream& out) {
  Tree tree = load_tree(opt.input);
  if (opt.m < 2 || opt.m > tree.leaf_count())
    throw InputError("-m must lie in [2, " + std::to_string(tree.leaf_count()) + "]");
  out << format_report(dissimilarity_vector(tree, opt.m), parse_format(opt.format));
  return kSuccess;
}

int run_verify(const Options& opt, std::ostream& out) {
  auto tree = load_ultrametric(opt.input);
  if (tree.leaf_count() < 4) throw InputError("verify needs a tree with at least 4 leaves");
  auto report = verify(tree, opt.seed, opt.max_resamples);
  out << format_report(report, parse_format(opt.format));
  return report.verdict && report.height_sum_ok && report.claims.all() ? kSuccess : kVerdictFailed;
}

int run_plucker(const Options& opt, std::ostream& out) {
  Tree tree = load_tree(opt.input);
  if (opt.m < 2 || opt.m > tree.leaf_count())
    throw InputError("-m must lie in [2, " + std::to_string(tree.leaf_count()) + "]");
  const Sign sign = opt.sign == "negated" ? Sign::Negated : Sign::AsGiven;
  PluckerReport report;
  report.n = tree.leaf_count();
  report.m = opt.m;
  report.sign = sign;
  report.relations = three_term_relations(opt.m, report.n).size();
  report.violations = plucker_prevariety_check(tropical_point(dissimilarity_vector(tree, opt.m)), sign);
  out << format_report(report, parse_format(opt.format));
  return report.violations.empty() ? kSuccess : kVerdictFailed;
}

int run_realize(const Options& opt, std::ostream& out) {
  DistanceMatrix dm = [&] {
    try {
      return distance_matrix_from_json(Json::parse(read_input(opt.input)));
    } catch (const Json::exception& e) {
      throw InputError(opt.input + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(opt.input + ": " + e.what());
    }
  }();
  RealizationReport report;
  report.n = dm.size();
  try {
    auto tree = realize_ultrametric(dm);
    report.newick = serialize_newick(tree.tree());
    report.depth = tree.depth();
  } catch (const NotUltrametricError& e) {
    report.reason = e.what();
    report.witness = e.witness();
  }
  out << format_report(report, parse_format(opt.format));
  return report.newick ? kSuccess : kVerdictFailed;
}

int run_gen(const Options& opt, std::ostream& out) {
  if (opt.leaves < 2) throw InputError("--leaves must be at least 2");
  Rational depth;
  try {
    depth = parse_rational(opt.depth);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--depth: ") + e.what());
  }
  if (depth <= 0) throw InputError("--depth must be positive");
  auto tree = random_ultrametric(opt.leaves, depth, opt.seed);
  const std::string newick = serialize_newick(tree.tree());
  switch (parse_format(opt.format)) {
    case Format::Json: {
      Json j;
      j["n"] = opt.leaves;
      j["d"] = to_string(depth);
      j["seed"] = opt.seed;
      j["newick"] = newick;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Text:
      out << newick << '\n';
      break;
    case Format::Csv:
      throw UnsupportedFormat("gen has no CSV layout");
  }
  return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dissimilarity vectors, ultrametric trees and tropical Plücker checks in exact arithmetic",
               args.empty() ? "phylotrop" : args.front()};
  app.require_subcommand(1);
  Options opt;
  const auto formats = CLI::IsMember({"json", "csv", "text"});

  auto* validate = app.add_subcommand("validate", "Parse a Newick tree and classify it");
  validate->add_option("tree", opt.input, "Newick file ('-' for stdin)")->required();

  auto* dissim = app.add_subcommand("dissim", "m-dissimilarity vector of a tree");
  dissim->add_option("tree", opt.input, "Newick file ('-' for stdin)")->required();
  dissim->add_option("-m", opt.m, "Subset size")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check val(det M) = -D for an ultrametric tree");
  verify_cmd->add_option("tree", opt.input, "Newick file ('-' for stdin)")->required();
  verify_cmd->add_option("--seed", opt.seed, "Coefficient seed");
  verify_cmd->add_option("--max-resamples", opt.max_resamples, "Redraws allowed after a non-generic draw")
      ->check(CLI::NonNegativeNumber);

  auto* plucker = app.add_subcommand("plucker", "Three-term tropical Plücker checks on D(m,T)");
  plucker->add_option("tree", opt.input, "Newick file ('-' for stdin)")->required();
  plucker->add_option("-m", opt.m, "Subset size")->required();
  plucker->add_option("--sign", opt.sign, "Check the vector as given or negated")
      ->check(CLI::IsMember({"as-given", "negated"}));

  auto* realize = app.add_subcommand("realize", "Ultrametric tree realizing a distance matrix");
  realize->add_option("matrix", opt.input, "Distance matrix JSON ('-' for stdin)")->required();

  auto* gen = app.add_subcommand("gen", "Random ultrametric tree");
  gen->add_option("--leaves", opt.leaves, "Number of leaves")->required();
  gen->add_option("--depth", opt.depth, "Root-to-leaf weight d (rational)");
  gen->add_option("--seed", opt.seed, "Generator seed");

  for (auto* sub : {validate, dissim, verify_cmd, plucker, realize, gen})
    sub->add_option("--format", opt.format, "json, csv or text")->check(formats);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("phylotrop");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (validate->parsed()) return run_validate(opt, out);
    if (dissim->parsed()) return run_dissim(opt, out);
    if (verify_cmd->parsed()) return run_verify(opt, out);
    if (plucker->parsed()) return run_plucker(opt, out);
    if (realize->parsed()) return run_realize(opt, out);
    if (gen->parsed()) return run_gen(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedFormat& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace phylotrop::cli
