#include "khr/cli.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <regex>

#include <CLI11.hpp>

#include "khr/cache.hpp"
#include "khr/dyck.hpp"
#include "khr/errors.hpp"
#include "khr/formula.hpp"
#include "khr/serialize.hpp"
#include "khr/sweep.hpp"
#include "khr/verify.hpp"

namespace khr {

namespace {

struct Options {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t max_leaves = 10'000'000;

  int m = 0;
  int n = 0;
  std::string form = "P";
  bool with_stats = false;
  std::string profile = "HHH";
  std::string range;
  std::string suites = "all";
  bool symmetry_warn = false;
  std::string cache_action;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

KnotParams checked_params(const Options& o) {
  KnotParams p = KnotParams::make(o.m, o.n);
  const auto leaves = rational_catalan(p.m, p.n);
  if (leaves > o.max_leaves)
    throw UsageError("(" + std::to_string(p.m) + "," + std::to_string(p.n) + ") has " +
                     std::to_string(leaves) + " Dyck paths, above --max-leaves " +
                     std::to_string(o.max_leaves));
  return p;
}

std::optional<ResultCache> open_cache(const Options& o) {
  if (o.no_cache) return std::nullopt;
  std::string dir = o.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("KHR_CACHE_DIR")) dir = env;
  if (dir.empty()) return std::nullopt;
  return ResultCache(dir);
}

Invariant compute_form(const KnotParams& p, const std::string& form) {
  if (form == "P") return invariant_p(p);
  if (form == "HHH") return hhh_direct(p);
  return euler_characteristic(invariant_p(p));
}

void print_invariant(const Options& o, const KnotParams& p, const std::string& label,
                     const Invariant& v, std::ostream& out) {
  if (o.format == "json") {
    out << Json{{"m", p.m}, {"n", p.n}, {"form", label}, {"value", to_json(v)}}.dump(2) << '\n';
  } else if (o.format == "latex") {
    out << to_latex(v) << '\n';
  } else {
    out << to_text(v) << '\n';
  }
}

int cmd_compute(const Options& o, std::ostream& out, std::ostream& err) {
  const KnotParams p = checked_params(o);
  auto cache = open_cache(o);
  const auto compute = [&] { return compute_form(p, o.form); };
  const Invariant v =
      cache ? cache->get_or_compute({p.m, p.n, o.form}, compute, err) : compute();
  print_invariant(o, p, o.form, v, out);
  return kExitOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const KnotParams p = checked_params(o);
  const auto paths = enumerate_paths(p);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& path : paths)
      arr.push_back(o.with_stats ? to_json(compute_stats(path), path) : Json(path.steps()));
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& path : paths) {
    out << path.steps();
    if (o.with_stats) {
      const auto s = compute_stats(path);
      out << "  area=" << s.area << " hplus=" << s.hplus << " vstar=";
      for (std::size_t i = 0; i < s.vstar.size(); ++i)
        out << (i ? "," : "") << to_string(s.vstar[i]) << ":" << s.kvals.at(s.vstar[i]);
      if (s.vstar.empty()) out << "-";
      out << "  summand=" << render(path_summand(path), RenderStyle::Text);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_leaves(const Options& o, std::ostream& out) {
  const KnotParams p = checked_params(o);
  const auto profile = o.profile == "I" ? WeightProfile::scalar_i() : WeightProfile::hhh();
  const auto result = evaluate(p, profile);
  if (o.format == "json") {
    out << leaf_table_json(result).dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& leaf : result.leaves)
    out << leaf.path.steps() << "  " << to_text(leaf.value) << '\n';
  out << "total  " << to_text(result.total) << '\n';
  return kExitOk;
}

int cmd_catalan(const Options& o, std::ostream& out) {
  const KnotParams p = checked_params(o);
  const auto r = catalan_check(p);
  if (o.format == "json") {
    out << Json{{"m", p.m}, {"n", p.n}, {"count", r.count}, {"expected", r.expected},
                {"pass", r.pass()}}.dump(2)
        << '\n';
  } else {
    out << r.count << (r.pass() ? "" : "  (expected " + std::to_string(r.expected) + ")") << '\n';
  }
  return r.pass() ? kExitOk : kExitVerificationFailed;
}

std::vector<KnotParams> parse_range(const std::string& range) {
  static const std::regex re(R"(^\s*msum\s*<=\s*(\d+)\s*$)");
  std::smatch match;
  if (!std::regex_match(range, match, re))
    throw UsageError("--range must look like \"msum<=K\", got \"" + range + "\"");
  const int bound = std::stoi(match[1].str());
  std::vector<KnotParams> pairs;
  for (int s = 2; s <= bound; ++s)
    for (int m = 1; m < s; ++m)
      if (std::gcd(m, s - m) == 1) pairs.push_back({m, s - m});
  return pairs;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo = VerifyOptions::only(o.suites);
  vo.symmetry_as_warning = o.symmetry_warn;

  std::vector<KnotParams> pairs;
  if (!o.range.empty()) {
    if (o.m != 0 || o.n != 0) throw UsageError("give either M N or --range, not both");
    pairs = parse_range(o.range);
  } else {
    if (o.m == 0 || o.n == 0) throw UsageError("verify needs M N or --range");
    pairs.push_back({o.m, o.n});
  }

  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& pair : pairs) {
    Options single = o;
    single.m = pair.m;
    single.n = pair.n;
    const auto report = verify(checked_params(single), vo);
    all_pass = all_pass && report.pass;
    if (o.format == "json")
      reports.push_back(to_json(report));
    else
      out << summary(report);
  }
  if (o.format == "json") out << (o.range.empty() ? reports.at(0) : reports).dump(2) << '\n';
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_cache(const Options& o, std::ostream& out) {
  auto cache = open_cache(o);
  if (!cache) throw UsageError("no cache directory: pass --cache-dir or set KHR_CACHE_DIR");
  if (o.cache_action == "clear") {
    out << "removed " << cache->clear() << " entries from " << cache->dir().string() << '\n';
  } else {
    for (const auto& p : cache->entries()) out << p.filename().string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Superpolynomials of (m,n) torus knots", "khr"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--cache-dir", o.cache_dir, "Result cache directory (default: $KHR_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "Ignore the result cache");
  app.add_option("--max-leaves", o.max_leaves,
                 "Refuse inputs with more Dyck paths than this (default 10^7)");

  auto add_mn = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("M", o.m, "Horizontal extent m")->check(CLI::PositiveNumber);
    auto* n = sub->add_option("N", o.n, "Vertical extent n")->check(CLI::PositiveNumber);
    if (required) {
      m->required();
      n->required();
    }
  };

  auto* compute = app.add_subcommand("compute", "Compute P, HHH or the Euler characteristic");
  add_mn(compute, true);
  compute->add_option("--form", o.form, "P, HHH or euler")
      ->check(CLI::IsMember({"P", "HHH", "euler"}));

  auto* paths = app.add_subcommand("paths", "List (m,n) Dyck paths");
  add_mn(paths, true);
  paths->add_flag("--with-stats", o.with_stats, "Include path statistics");

  auto* leaves = app.add_subcommand("leaves", "Leaf table of the sweep recursion");
  add_mn(leaves, true);
  leaves->add_option("--profile", o.profile, "HHH or I")->check(CLI::IsMember({"HHH", "I"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  add_mn(verify_cmd, false);
  verify_cmd->add_option("--range", o.range, "All coprime pairs with m+n <= K, as \"msum<=K\"");
  verify_cmd->add_option("--suite", o.suites,
                         "Comma-separated: identities,cross,coherence,catalan,parity,signs,"
                         "symmetry,daha (default all)");
  verify_cmd->add_flag("--symmetry-warn", o.symmetry_warn,
                       "Report external symmetry failures as warnings");

  auto* catalan = app.add_subcommand("catalan", "Path count from the a=0, q=t=1 specialization");
  add_mn(catalan, true);

  auto* cache = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache->add_option("action", o.cache_action, "list or clear")
      ->required()
      ->check(CLI::IsMember({"list", "clear"}));

  for (auto* sub : {compute, paths, leaves, verify_cmd, catalan, cache}) sub->fallthrough();

  std::vector<std::string> argv_store{"khr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(o, out, err);
    if (*paths) return cmd_paths(o, out);
    if (*leaves) return cmd_leaves(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*catalan) return cmd_catalan(o, out);
    if (*cache) return cmd_cache(o, out);
  } catch (const LinksUnsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitLinksUnsupported;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace khr
