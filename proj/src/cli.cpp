#include "flagdomain/cli.hpp"

#include "flagdomain/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace flagdomain::cli {

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string labels;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  int pairs = 1;
  int kmax = 20;
  double tol = 1e-9;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystemType resolve_type(const Options& o) {
  if (o.type.empty()) throw InputError("--type is required");
  if (o.type.size() > 1) {
    RootSystemType t = parse_type(o.type);
    if (o.rank != 0 && o.rank != t.rank) throw InputError("--rank disagrees with --type " + o.type);
    return t;
  }
  if (o.rank <= 0) throw InputError("--rank is required with a one-letter --type");
  RootSystemType t{static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0]))), o.rank};
  t.validate();
  return t;
}

std::string classify_cmd(const Options& o) {
  const RootSystemType type = resolve_type(o);
  const ClassificationReport r = classify(DomainSpec(RootSystem::build(type), parse_labels(o.labels)));
  if (o.format == "csv") return to_csv({r});
  if (o.format == "text") return to_text(r);
  return dump(to_json(r));
}

std::string enumerate_cmd(const Options& o) {
  const EnumerationSummary s = enumerate(resolve_type(o));
  if (o.format == "csv") return to_csv(s.rows);
  if (o.format == "text") return to_text(s);
  return dump(to_json(s));
}

std::string selftest_cmd(const Options& o, int& code) {
  const int max_rank = o.rank > 0 ? o.rank : 4;
  const SelftestReport s = run_selftest(max_rank);
  if (!s.passed()) code = kSelftestFailure;
  if (o.format == "csv") throw InputError("selftest supports --format json or text");
  if (o.format == "text") return to_text(s);
  return dump(to_json(s));
}

std::string chain_cmd(const Options& o, int& code) {
  if (o.pairs < 0) throw InputError("--pairs must be non-negative");
  if (o.kmax < 0) throw InputError("--kmax must be non-negative");
  if (!(o.tol > 0)) throw InputError("--tol must be positive");
  if (o.format == "csv") throw InputError("chain supports --format json or text");
  chainball::SearchParams params;
  params.kmax = o.kmax;
  params.tol.mem = o.tol;
  const chainball::ChainBatch b = chainball::run_batch(o.seed, o.pairs, params);
  if (!b.all_connected()) code = kChainFailure;
  if (o.format == "text") return to_text(b);
  return dump(to_json(b));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag domains: classification, bracket generation and cycle chains"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "write the result to this file instead of stdout");
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "family letter A..G (or a full name such as C2)");
    sub->add_option("--rank", o.rank, "rank");
  };

  CLI::App* classify = app.add_subcommand("classify", "classify one labeling");
  add_type(classify);
  classify->add_option("--labels", o.labels, "comma-separated V/K/Q per simple root")->required();
  add_format(classify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "classify every valid labeling of a type");
  add_type(enumerate);
  add_format(enumerate);

  CLI::App* chain = app.add_subcommand("chain", "connect random SU(2,1) domain points by chains of cycles");
  chain->add_option("--seed", o.seed, "RNG seed");
  chain->add_option("--pairs", o.pairs, "number of random pairs");
  chain->add_option("--kmax", o.kmax, "maximum number of cycles per chain");
  chain->add_option("--tol", o.tol, "membership tolerance");
  add_format(chain);

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--rank", o.rank, "largest rank to test (default 4)");
  add_format(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  int code = kSuccess;
  std::string text;
  try {
    if (*classify) text = classify_cmd(o);
    else if (*enumerate) text = enumerate_cmd(o);
    else if (*chain) text = chain_cmd(o, code);
    else text = selftest_cmd(o, code);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out << '\n';
      return kInvalidInput;
    }
    file << text;
  }
  return code;
}

}  // namespace flagdomain::cli
