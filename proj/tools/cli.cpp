#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "stabletrace/groupdef.hpp"
#include "stabletrace/kottwitz.hpp"
#include "stabletrace/report.hpp"

namespace stabletrace::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Range {
  long lo = 0;
  long hi = -1;
  bool given = false;
};

Range parse_range(const std::string& text, const std::string& flag) {
  Range r;
  if (text.empty()) return r;
  r.given = true;
  auto to_long = [&](const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw UsageError(flag + ": expected an integer or a range lo..hi, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_long(text);
  } else {
    r.lo = to_long(text.substr(0, dots));
    r.hi = to_long(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + text + "'");
  if (r.hi - r.lo > 100000) throw UsageError(flag + ": range '" + text + "' is too large");
  return r;
}

std::vector<long> values(const Range& r, bool odd_only) {
  std::vector<long> out;
  for (long v = r.lo; v <= r.hi; ++v)
    if (!odd_only || v % 2 != 0) out.push_back(v);
  return out;
}

Range require(const std::string& text, const std::string& flag) {
  Range r = parse_range(text, flag);
  if (!r.given) throw UsageError(flag + " is required for this group");
  return r;
}

struct Options {
  std::string format = "markdown";
  int decimal = 0;
  std::string data_dir;
};

struct Context {
  Options opts;
  std::ostream& out;
  std::ostream& err;
  std::optional<LoadedCatalog> loaded;

  const LoadedCatalog& catalog() {
    if (!loaded) {
      loaded = load_catalog(opts.data_dir.empty() ? default_data_dir() : std::filesystem::path(opts.data_dir));
      for (const auto& p : loaded->problems) err << "warning: " << p << "\n";
    }
    return *loaded;
  }

  int emit(const Document& d, int code) {
    out << render(d, report_format_from_string(opts.format), opts.decimal);
    return code;
  }
};

std::vector<ParameterData> parameter_grid(GroupKind kind, const std::string& n, const std::string& a,
                                          const std::string& b, long t) {
  std::vector<ParameterData> out;
  switch (kind) {
    case GroupKind::sl2:
      for (long v : values(require(n, "--n"), false)) out.push_back({0, 0, 0, v});
      break;
    case GroupKind::gsp4:
      for (long x : values(require(a, "--a"), true))
        for (long y : values(require(b, "--b"), true))
          if (x > y && y > 0) out.push_back({x, y, t, 0});
      break;
    case GroupKind::h:
      for (long x : values(require(a, "--a"), true))
        for (long y : values(require(b, "--b"), true))
          if (x > 0 && y > 0) out.push_back({x, y, t, 0});
      break;
  }
  if (out.empty()) throw UsageError("no admissible parameters in the given ranges");
  return out;
}

void add_parameter_columns(Table& t, GroupKind kind) {
  if (kind == GroupKind::sl2) {
    t.add_column("n");
  } else {
    t.add_column("a");
    t.add_column("b");
    t.add_column("t");
  }
}

std::vector<std::string> parameter_cells(GroupKind kind, const ParameterData& p) {
  if (kind == GroupKind::sl2) return {std::to_string(p.n)};
  return {std::to_string(p.a), std::to_string(p.b), std::to_string(p.t)};
}

int cmd_chi(Context& ctx, const std::vector<std::string>& groups) {
  const auto& cat = ctx.catalog().catalog;
  Document d;
  d.command = "chi";
  Table t;
  t.add_column("group");
  t.add_column("case");
  t.add_column("chi_K", true);
  for (const auto& name : groups.empty() ? cat.names() : groups) {
    const GroupProfile& g = cat.profile(name);
    t.add_row({name, to_string(g.chi.kind), chi_k(g).str()});
  }
  d.table = std::move(t);
  return ctx.emit(d, kOk);
}

int cmd_dims(Context& ctx, const std::string& group, const std::string& n, const std::string& a,
             const std::string& b, long t_param) {
  const GroupKind kind = group_kind_from_string(group);
  const auto& datum = ctx.catalog().catalog.datum(to_string(kind));
  Document d;
  d.command = "dims";
  Table t;
  add_parameter_columns(t, kind);
  t.add_column("dim");
  for (const auto& p : parameter_grid(kind, n, a, b, t_param)) {
    auto row = parameter_cells(kind, p);
    row.push_back(weyl_dim(datum, highest_weight_from_parameter(kind, datum, p).lambda).str());
    t.add_row(std::move(row));
  }
  d.table = std::move(t);
  return ctx.emit(d, kOk);
}

int cmd_phi(Context& ctx, const std::string& group, const std::string& n, const std::string& a,
            const std::string& b, long t_param, int z) {
  const GroupKind kind = group_kind_from_string(group);
  const PhiTable table(ctx.catalog().catalog, kind);
  Document d;
  d.command = "phi";
  Table t;
  add_parameter_columns(t, kind);
  t.add_column("z");
  t.add_column("levi");
  t.add_column("phi", true);
  for (const auto& p : parameter_grid(kind, n, a, b, t_param))
    for (const auto& r : table.evaluate(p, z)) {
      auto row = parameter_cells(kind, p);
      row.push_back(std::to_string(z));
      row.push_back(r.levi);
      row.push_back(r.value.str());
      t.add_row(std::move(row));
    }
  if (kind == GroupKind::h) d.messages.push_back("H rows are packet sums over the weights for (a, b) and (b, a)");
  d.table = std::move(t);
  return ctx.emit(d, kOk);
}

int cmd_sl2_mult(Context& ctx, const std::string& n, bool terms) {
  const auto& cat = ctx.catalog().catalog;
  const auto ns = values(require(n, "--n"), false);
  Document d;
  d.command = "sl2-mult";
  Table t;
  t.add_column("n");
  t.add_column("value", true);
  t.add_column("regular");
  for (long v : ns) {
    if (v < 1) throw UsageError("--n values must be positive");
    TermReport r = sl2_st_total(cat, v);
    t.add_row({std::to_string(v), r.total.str(), r.flags.empty() ? "yes" : "no"});
    if (terms || ns.size() == 1) d.reports.push_back(std::move(r));
  }
  d.show_terms = !d.reports.empty();
  d.table = std::move(t);
  return ctx.emit(d, kOk);
}

int cmd_gsp4_central(Context& ctx, const std::string& a, const std::string& b, long t_param,
                     const std::string& member_name, bool terms) {
  const auto& cat = ctx.catalog().catalog;
  PacketMember member = PacketMember::pi_g;
  if (member_name == "pi_G'" || member_name == "pi_G_prime")
    member = PacketMember::pi_g_prime;
  else if (member_name != "pi_G")
    throw UsageError("--member must be pi_G or pi_G'");
  std::vector<std::pair<long, long>> pairs;
  for (const auto& p : parameter_grid(GroupKind::gsp4, "", a, b, t_param)) pairs.emplace_back(p.a, p.b);
  std::vector<Gsp4Row> rows;
  if (t_param == 0 && member == PacketMember::pi_g) {
    rows = gsp4_central_grid(cat, pairs);
  } else {
    const Gsp4Central eval(cat);
    for (const auto& [x, y] : pairs)
      rows.push_back({x, y, eval.stable(x, y, t_param).total, eval.endoscopic(x, y, member, t_param).total,
                      wakatsuki_h1(H1Kind::holomorphic, x, y), wakatsuki_h1(H1Kind::large, x, y)});
  }
  Document d;
  d.command = "gsp4-central";
  Table t;
  t.add_column("a");
  t.add_column("b");
  t.add_column("stable", true);
  t.add_column("endoscopic", true);
  t.add_column("stable+endoscopic", true);
  t.add_column("stable-endoscopic", true);
  t.add_column("H1_hol", true);
  t.add_column("H1_large", true);
  for (const auto& r : rows)
    t.add_row({std::to_string(r.a), std::to_string(r.b), r.stable.str(), r.endoscopic.str(),
               (r.stable + r.endoscopic).str(), (r.stable - r.endoscopic).str(), r.h1_hol.str(), r.h1_large.str()});
  if (terms || pairs.size() == 1) {
    const Gsp4Central eval(cat);
    for (const auto& [x, y] : pairs) {
      d.reports.push_back(eval.stable(x, y, t_param));
      d.reports.push_back(eval.endoscopic(x, y, member, t_param));
    }
  }
  d.show_terms = !d.reports.empty();
  d.table = std::move(t);
  return ctx.emit(d, kOk);
}

int cmd_verify_theorem1(Context& ctx, long a_max, bool perturb, bool serial, const std::string& identity) {
  if (a_max < 3) throw UsageError("--a-max must be at least 3");
  if (identity != "both" && identity != "hol" && identity != "large")
    throw UsageError("--identity must be both, hol or large");
  const auto& cat = ctx.catalog().catalog;
  const Theorem1Result res =
      serial ? verify_theorem1_serial(cat, a_max, perturb) : verify_theorem1(cat, a_max, perturb);
  const bool want_hol = identity != "large";
  const bool want_large = identity != "hol";
  const size_t failures = (want_hol ? res.hol_failures : 0) + (want_large ? res.large_failures : 0);
  Document d;
  d.command = "verify theorem1";
  Table t;
  t.add_column("a");
  t.add_column("b");
  t.add_column("identity");
  t.add_column("lhs", true);
  t.add_column("rhs", true);
  for (const auto& f : res.examples) {
    const bool hol = f.identity.find("hol") != std::string::npos;
    if ((hol && want_hol) || (!hol && want_large))
      t.add_row({std::to_string(f.a), std::to_string(f.b), f.identity, f.lhs.str(), f.rhs.str()});
  }
  if (!t.rows.empty()) d.table = std::move(t);
  d.messages.push_back(std::to_string(res.pairs) + " odd pairs a > b > 0 with a <= " + std::to_string(a_max) +
                       (perturb ? ", endoscopic sign flipped" : ""));
  if (want_hol) d.messages.push_back("stable + endoscopic = H1^hol: " + std::to_string(res.hol_failures) + " failures");
  if (want_large)
    d.messages.push_back("stable - endoscopic = H1^large: " + std::to_string(res.large_failures) + " failures");
  if (!perturb) {
    const Theorem1Polynomial poly = theorem1_polynomial_check(cat);
    if (want_hol) d.messages.push_back("polynomial residual (sum - H1^hol): " + poly_str(poly.hol_residual));
    if (want_large)
      d.messages.push_back("polynomial residual (difference - H1^large): " + poly_str(poly.large_residual));
  }
  d.status = failures ? "fail" : "ok";
  d.messages.push_back((failures ? "FAIL: " : "OK: ") + std::to_string(failures) + " counterexamples");
  return ctx.emit(d, failures ? kVerificationFailed : kOk);
}

int cmd_verify_sl2(Context& ctx, long n_max) {
  if (n_max < 1) throw UsageError("--n-max must be positive");
  const auto& cat = ctx.catalog().catalog;
  Document d;
  d.command = "verify sl2";
  Table t;
  t.add_column("n");
  t.add_column("value", true);
  t.add_column("expected", true);
  t.add_column("ok");
  size_t bad = 0;
  for (long n = 1; n <= n_max; ++n) {
    const Rat got = sl2_st_total(cat, n).total;
    // n = 1 is outside the regular range; the formula itself gives -1 there.
    const Rat want = n == 1 ? Rat(-1) : Rat(n % 2 ? classical_cusp_dimension(n + 1) : 0);
    const bool ok = got == want;
    bad += !ok;
    t.add_row({std::to_string(n), got.str(), want.str(), ok ? "yes" : "no"});
  }
  d.table = std::move(t);
  d.status = bad ? "fail" : "ok";
  d.messages.push_back((bad ? "FAIL: " : "OK: ") + std::to_string(bad) + " mismatches against dim S_{n+1}");
  return ctx.emit(d, bad ? kVerificationFailed : kOk);
}

int cmd_verify_chi(Context& ctx) {
  const auto& cat = ctx.catalog().catalog;
  const std::pair<const char*, Rat> expected[] = {{"gm", Rat(1, 2)},      {"sl2", Rat(-1, 12)},
                                                  {"sp4", Rat(-1, 1440)}, {"gl2", Rat(-1, 24)},
                                                  {"gsp4", Rat(-1, 2880)}, {"pgl2", Rat(-1, 12)}};
  Document d;
  d.command = "verify chi";
  Table t;
  t.add_column("group");
  t.add_column("chi_K", true);
  t.add_column("expected", true);
  t.add_column("ok");
  size_t bad = 0;
  for (const auto& [name, want] : expected) {
    const Rat got = chi_k(cat.profile(name));
    bad += got != want;
    t.add_row({name, got.str(), want.str(), got == want ? "yes" : "no"});
  }
  d.table = std::move(t);
  d.status = bad ? "fail" : "ok";
  d.messages.push_back((bad ? "FAIL: " : "OK: ") + std::to_string(bad) + " mismatches");
  return ctx.emit(d, bad ? kVerificationFailed : kOk);
}

int cmd_groups(Context& ctx, const std::string& emit, bool check) {
  const LoadedCatalog& lc = ctx.catalog();
  if (!emit.empty()) {
    auto it = lc.definitions.find(emit);
    if (it == lc.definitions.end()) throw UsageError("unknown group '" + emit + "'");
    ctx.out << emit_groupdef(it->second);
    return kOk;
  }
  Document d;
  d.command = "groups";
  Table t;
  t.add_column("group");
  t.add_column("file");
  t.add_column("root datum");
  t.add_column("levis");
  t.add_column("chi case");
  size_t bad = lc.problems.size();
  for (const auto& f : lc.files) {
    const GroupDefFile def = load_groupdef(f);
    std::string levis;
    for (const auto& l : def.profile.levis) levis += (levis.empty() ? "" : " ") + l.levi.name;
    t.add_row({def.profile.name, f.filename().string(), def.roots ? "yes" : "no", levis,
               to_string(def.profile.chi.kind)});
    if (check) {
      std::ifstream in(f, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      if (emit_groupdef(def) != text.str()) {
        ++bad;
        d.messages.push_back(f.filename().string() + ": not in canonical form");
      }
    }
  }
  for (const auto& p : lc.problems) d.messages.push_back(p);
  d.table = std::move(t);
  if (check) {
    d.status = bad ? "fail" : "ok";
    d.messages.push_back((bad ? "FAIL: " : "OK: ") + std::to_string(bad) + " problems in " +
                         std::to_string(lc.files.size()) + " files");
  }
  return ctx.emit(d, check && bad ? kVerificationFailed : kOk);
}

}  // namespace

long classical_cusp_dimension(long k) {
  if (k < 2 || k % 2) return 0;
  const long modular = (k == 2) ? 0 : k / 12 + (k % 12 == 2 ? 0 : 1);
  return std::max(0L, modular - 1);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of central and elliptic trace-formula terms for SL2 and GSp4", "stabletrace"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--decimal", opts.decimal, "Add approximate decimal columns with this many digits")
      ->check(CLI::Range(0, 200));
  app.add_option("--data", opts.data_dir, "Directory of .grp files (default: $STABLE_TRACE_DATA or the shipped data)");

  std::function<int(Context&)> action;

  auto* chi = app.add_subcommand("chi", "Euler characteristics chi_K(G)");
  std::vector<std::string> chi_groups;
  chi->add_option("--group", chi_groups, "Group name (repeatable; default all)");
  chi->callback([&] { action = [&](Context& c) { return cmd_chi(c, chi_groups); }; });

  std::string group, n, a, b, member = "pi_G";
  long t_param = 0;
  int z = 1;
  bool terms = false;

  auto* dims = app.add_subcommand("dims", "Weyl dimensions of highest-weight representations");
  dims->add_option("--group", group, "sl2, gsp4 or h")->required()->check(CLI::IsMember({"sl2", "gsp4", "h"}));
  dims->add_option("--n", n, "SL2 parameter n or range lo..hi");
  dims->add_option("--a", a, "a or range lo..hi (odd values only)");
  dims->add_option("--b", b, "b or range lo..hi (odd values only)");
  dims->add_option("--t", t_param, "central parameter t (even)");
  dims->callback([&] { action = [&](Context& c) { return cmd_dims(c, group, n, a, b, t_param); }; });

  auto* phi = app.add_subcommand("phi", "Phi_M(z) for every Levi of a group");
  phi->add_option("--group", group, "sl2, gsp4 or h")->required()->check(CLI::IsMember({"sl2", "gsp4", "h"}));
  phi->add_option("--n", n, "SL2 parameter n or range lo..hi");
  phi->add_option("--a", a, "a or range lo..hi (odd values only)");
  phi->add_option("--b", b, "b or range lo..hi (odd values only)");
  phi->add_option("--t", t_param, "central parameter t (even)");
  phi->add_option("--z", z, "central element +1 or -1")->check(CLI::IsMember({1, -1}));
  phi->callback([&] { action = [&](Context& c) { return cmd_phi(c, group, n, a, b, t_param, z); }; });

  auto* sl2 = app.add_subcommand("sl2-mult", "ST_g for SL2: central and elliptic terms");
  sl2->add_option("--n", n, "n or range lo..hi")->required();
  sl2->add_flag("--terms", terms, "Include per-term reports for every n");
  sl2->callback([&] { action = [&](Context& c) { return cmd_sl2_mult(c, n, terms); }; });

  auto* gsp4 = app.add_subcommand("gsp4-central", "Stable and endoscopic central terms for GSp4");
  gsp4->add_option("--a", a, "a or range lo..hi (odd values, a > b)")->required();
  gsp4->add_option("--b", b, "b or range lo..hi (odd values)")->required();
  gsp4->add_option("--t", t_param, "central parameter t (even)");
  gsp4->add_option("--member", member, "packet member pi_G or pi_G'")->capture_default_str();
  gsp4->add_flag("--terms", terms, "Include per-term reports for every pair");
  gsp4->callback([&] { action = [&](Context& c) { return cmd_gsp4_central(c, a, b, t_param, member, terms); }; });

  auto* verify = app.add_subcommand("verify", "Exact verification runs");
  verify->require_subcommand(1);
  verify->fallthrough();
  long a_max = 99, n_max = 29;
  bool perturb = false, serial = false;
  std::string identity = "both";
  auto* v_thm = verify->add_subcommand("theorem1", "Central terms against H1^hol and H1^large");
  v_thm->add_option("--a-max", a_max, "largest a")->capture_default_str();
  v_thm->add_option("--identity", identity, "both, hol or large")->capture_default_str();
  v_thm->add_flag("--perturb", perturb, "Flip the endoscopic sign (negative control)");
  v_thm->add_flag("--serial", serial, "Use the serial reference kernel");
  v_thm->callback(
      [&] { action = [&](Context& c) { return cmd_verify_theorem1(c, a_max, perturb, serial, identity); }; });
  auto* v_sl2 = verify->add_subcommand("sl2", "SL2 totals against dim S_{n+1}(SL2(Z))");
  v_sl2->add_option("--n-max", n_max, "largest n")->capture_default_str();
  v_sl2->callback([&] { action = [&](Context& c) { return cmd_verify_sl2(c, n_max); }; });
  auto* v_chi = verify->add_subcommand("chi", "Euler characteristics against known values");
  v_chi->callback([&] { action = [&](Context& c) { return cmd_verify_chi(c); }; });

  auto* groups = app.add_subcommand("groups", "List, emit or check group-definition files");
  std::string emit;
  bool check = false;
  groups->add_option("--emit", emit, "Print the canonical definition of a group");
  groups->add_flag("--check", check, "Check canonical form and consistency of every file");
  groups->callback([&] { action = [&](Context& c) { return cmd_groups(c, emit, check); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Context ctx{opts, out, err, std::nullopt};
  try {
    return action(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace stabletrace::cli
