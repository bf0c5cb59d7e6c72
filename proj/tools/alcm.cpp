#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "alcm/engine.hpp"
#include "alcm/model.hpp"
#include "alcm/oracle.hpp"
#include "alcm/parser.hpp"
#include "alcm/query.hpp"
#include "alcm/reasoner.hpp"
#include "alcm/semantics.hpp"

namespace {

using namespace alcm;

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KnowledgeBase load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseKb(buf.str(), path);
}

void writeFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

int exitFor(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return kTrue;
    case Verdict::Inconsistent: return kFalse;
    case Verdict::Unknown: break;
  }
  return kBudget;
}

int exitFor(Answer a) {
  switch (a) {
    case Answer::True: return kTrue;
    case Answer::False: return kFalse;
    case Answer::Unknown: break;
  }
  return kBudget;
}

struct CheckArgs {
  std::string file;
  bool oracle = false;
  std::string model;
  std::string trace;
  bool stats = false;
  std::size_t budget = kDefaultNodeBudget;
};

int runCheck(const CheckArgs& args) {
  KnowledgeBase kb = load(args.file);

  if (args.oracle) {
    if (!args.model.empty() || !args.trace.empty()) throw UsageError("--model and --trace need the graph engine");
    OracleOptions opts;
    opts.budget = args.budget;
    OracleResult r = decide(kb, opts);
    std::cout << verdictName(r.verdict) << '\n';
    if (args.stats) std::cout << "steps " << r.steps << '\n';
    if (r.verdict == Verdict::Unknown) std::cerr << "budget of " << args.budget << " rule applications exhausted\n";
    return exitFor(r.verdict);
  }

  EngineOptions opts;
  opts.nodeBudget = args.budget;
  ConsistencyResult res = checkConsistency(kb, opts);
  std::cout << verdictName(res.verdict) << '\n';
  if (res.verdict == Verdict::Unknown) {
    std::cerr << res.error << '\n';
    return kBudget;
  }
  const AndOrGraph& g = *res.graph;

  if (res.refutation) {
    for (NodeId leaf : res.refutation->leaves) {
      const GraphNode& n = g.node(leaf);
      std::cout << "  " << ruleName(*n.rule) << ": " << n.principal << '\n';
    }
    if (res.refutation->circularity) {
      std::cout << "circularity:";
      for (Name a : *res.refutation->circularity) std::cout << ' ' << a.str() << " ->";
      std::cout << ' ' << res.refutation->circularity->front().str() << '\n';
    }
  }
  if (args.stats) {
    GraphStats s = graphStats(g);
    std::cout << "nodes " << s.nodes << "\nedges " << s.edges << "\nor-nodes " << s.orNodes << "\nand-nodes "
              << s.andNodes << "\nend-nodes " << s.endNodes << '\n';
    for (const auto& [rule, count] : s.rules) std::cout << "rule " << rule << ' ' << count << '\n';
  }
  if (!args.trace.empty()) writeFile(args.trace, traceString(g, res.verdict));
  if (!args.model.empty()) {
    if (res.verdict != Verdict::Consistent) {
      std::cerr << "no model: knowledge base is inconsistent\n";
    } else {
      writeFile(args.model, toModelJson(extractModel(res).model) + "\n");
    }
  }
  return exitFor(res.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ALCM consistency checker and reasoner"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmdCheck = app.add_subcommand("check", "decide consistency of a knowledge base");
  cmdCheck->add_option("FILE", check.file, "knowledge base (.alcm)")->required();
  cmdCheck->add_flag("--oracle", check.oracle, "use the completion-forest tableau");
  cmdCheck->add_option("--model", check.model, "write a model as JSON ('-' for stdout)");
  cmdCheck->add_option("--trace", check.trace, "write the expansion trace ('-' for stdout)");
  cmdCheck->add_flag("--stats", check.stats, "print graph statistics");
  cmdCheck->add_option("--budget", check.budget, "node budget (rule applications with --oracle)")
      ->check(CLI::PositiveNumber);

  std::string file, query;
  auto* cmdEntails = app.add_subcommand("entails", "decide K |= QUERY");
  cmdEntails->add_option("FILE", file)->required();
  cmdEntails->add_option("QUERY", query, "C sub D | C(a) | a = b | a != b | a =m A")->required();

  std::string ind, cname;
  auto* cmdMeta = app.add_subcommand("meta", "decide K |= a =m A");
  cmdMeta->add_option("FILE", file)->required();
  cmdMeta->add_option("a", ind)->required();
  cmdMeta->add_option("A", cname)->required();

  std::string conceptText;
  auto* cmdMetaConcept = app.add_subcommand("metaconcept", "decide whether C is a meta-concept");
  cmdMetaConcept->add_option("FILE", file)->required();
  cmdMetaConcept->add_option("C", conceptText)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmdCheck) return runCheck(check);

    Reasoner reasoner(load(file));
    Answer answer = Answer::Unknown;
    if (*cmdEntails) {
      answer = reasoner.entails(parseQuery(query));
    } else if (*cmdMeta) {
      answer = reasoner.entailsMetamodelling(Name::intern(ind), Name::intern(cname));
    } else if (*cmdMetaConcept) {
      answer = reasoner.isMetaConcept(parseConcept(conceptText));
    }
    std::cout << answerName(answer) << '\n';
    return exitFor(answer);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "alcm: " << e.what() << '\n';
    return kUsage;
  }
}
