#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "orddiv/census.hpp"
#include "orddiv/checkpoint.hpp"
#include "orddiv/density.hpp"
#include "orddiv/export.hpp"
#include "orddiv/identity.hpp"
#include "orddiv/kummer.hpp"
#include "tables.hpp"

namespace orddiv::tools {
namespace {

using arith::u64;
using nlohmann::ordered_json;

constexpr int kPlaces = 8;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string g;
  u64 d = 1;
  std::string x;
  u64 vmax = 4096;
  std::string format = "text";
  unsigned threads = 1;
  std::string checkpoint;
  u64 segment_size = 1'000'000;
  u64 budget = census::kDefaultFactoringBudget;
  int table = 2;
  bool show_blocks = false;
};

// Accepts "123", "1e8" and "10^8".
u64 parse_count(const std::string& text, const char* what) {
  auto fail = [&] { return UsageError(std::string(what) + ": cannot parse '" + text + "' as a positive integer"); };
  auto digits = [&](std::string_view s) {
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw fail();
    return v;
  };
  auto power = [&](u64 base, u64 exponent) {
    u64 v = 1;
    for (u64 i = 0; i < exponent; ++i) {
      if (__builtin_mul_overflow(v, base, &v)) throw fail();
    }
    return v;
  };
  const std::string_view s = text;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    u64 out = 0;
    if (__builtin_mul_overflow(digits(s.substr(0, e)), power(10, digits(s.substr(e + 1))), &out)) throw fail();
    return out;
  }
  if (const auto c = s.find('^'); c != std::string_view::npos) {
    return power(digits(s.substr(0, c)), digits(s.substr(c + 1)));
  }
  return digits(s);
}

base::RationalBase parse_g(const std::string& text) {
  if (text.empty()) {
    throw UsageError("-g is required");
  }
  try {
    return base::RationalBase::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid g '") + text + "': " + e.what());
  }
}

std::string fraction_and_decimal(const ExactRational& value) {
  return value.to_string() + " = " + value.to_decimal(kPlaces);
}

void print_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  }
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

std::string approx(const ExactRational& value) {
  std::ostringstream os;
  os << std::setprecision(3) << value.to_double();
  return os.str();
}

std::string gamma_text(const std::optional<int>& gamma) { return gamma ? std::to_string(*gamma) : "-"; }

// density ---------------------------------------------------------------

int cmd_density(const Options& opt, std::ostream& out) {
  const auto g = parse_g(opt.g);
  const auto r = density::density(g, opt.d);
  const auto& dec = r.decomposition;
  const std::string case_label(density::to_string(r.case_label));
  if (opt.format == "json") {
    ordered_json j = {{"g", g.to_string()},
                      {"g0", dec.g0().to_string()},
                      {"h", dec.h},
                      {"disc", dec.disc},
                      {"d", r.d},
                      {"case", case_label},
                      {"gamma", r.gamma ? ordered_json(*r.gamma) : ordered_json(nullptr)},
                      {"epsilon1", r.epsilon1.to_string()},
                      {"s_factor", r.s_factor.to_string()},
                      {"delta", r.delta.to_string()},
                      {"delta_decimal", r.delta.to_decimal(kPlaces)}};
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "g,g0,h,disc,d,case,gamma,epsilon1,s_factor,delta,delta_decimal\n";
    out << csv_line({g.to_string(), dec.g0().to_string(), std::to_string(dec.h), std::to_string(dec.disc),
                     std::to_string(r.d), case_label, gamma_text(r.gamma), r.epsilon1.to_string(),
                     r.s_factor.to_string(), r.delta.to_string(), r.delta.to_decimal(kPlaces)})
        << '\n';
  } else {
    print_pairs(out, {{"g", g.to_string()},
                      {"g0", dec.g0().to_string()},
                      {"h", std::to_string(dec.h)},
                      {"D(g0)", std::to_string(dec.disc)},
                      {"d", std::to_string(r.d)},
                      {"case", case_label},
                      {"gamma", gamma_text(r.gamma)},
                      {"epsilon1", r.epsilon1.to_string()},
                      {"S(d,h)", r.s_factor.to_string()},
                      {"delta", fraction_and_decimal(r.delta)}});
  }
  return kExitOk;
}

// oracle ----------------------------------------------------------------

int cmd_oracle(const Options& opt, std::ostream& out) {
  const auto g = parse_g(opt.g);
  if (opt.vmax == 0) throw UsageError("--vmax must be positive");
  const auto exact = density::density(g, opt.d).delta;
  const auto est = kummer::series_partial(g, opt.d, opt.vmax);
  const bool pass = est.brackets(exact);
  const std::string verdict = pass ? "PASS" : "FAIL";
  if (opt.format == "json") {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : est.blocks) blocks.push_back({{"v", b.v}, {"value", b.value.to_string()}});
    ordered_json j = {{"g", g.to_string()},
                      {"d", opt.d},
                      {"vmax", opt.vmax},
                      {"partial", est.partial.to_string()},
                      {"tail_bound", est.tail_bound.to_string()},
                      {"upper", est.upper().to_string()},
                      {"delta", exact.to_string()},
                      {"bracket", verdict},
                      {"blocks", blocks}};
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "g,d,vmax,blocks,partial,tail_bound,delta,bracket\n";
    out << csv_line({g.to_string(), std::to_string(opt.d), std::to_string(opt.vmax), std::to_string(est.blocks.size()),
                     est.partial.to_string(), est.tail_bound.to_string(), exact.to_string(), verdict})
        << '\n';
  } else {
    print_pairs(out, {{"g", g.to_string()},
                      {"d", std::to_string(opt.d)},
                      {"vmax", std::to_string(opt.vmax)},
                      {"blocks", std::to_string(est.blocks.size())},
                      {"partial", fraction_and_decimal(est.partial)},
                      {"tail_bound", est.tail_bound.to_string() + " ~ " + approx(est.tail_bound)},
                      {"delta", fraction_and_decimal(exact)},
                      {"bracket", verdict}});
    if (opt.show_blocks) {
      for (const auto& b : est.blocks) out << "  v=" << b.v << "  " << b.value << '\n';
    }
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// census ----------------------------------------------------------------

census::CensusSummary run_census_for(const base::RationalBase& g, u64 d, u64 x, const Options& opt,
                                     std::optional<std::filesystem::path> checkpoint, census::CensusResult* raw) {
  census::CensusConfig config{g, d, x, opt.segment_size, opt.threads, std::move(checkpoint)};
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto result = census::run_census(config);
  auto summary = census::summarize(config, result, density::density(g, d).delta);
  if (raw) *raw = std::move(result);
  return summary;
}

int cmd_census(const Options& opt, std::ostream& out) {
  const auto g = parse_g(opt.g);
  const u64 x = parse_count(opt.x, "-x");
  std::optional<std::filesystem::path> checkpoint;
  if (!opt.checkpoint.empty()) checkpoint = opt.checkpoint;
  census::CensusResult raw;
  const auto s = run_census_for(g, opt.d, x, opt, checkpoint, &raw);
  if (opt.format == "json") {
    out << census::to_json(s) << '\n';
  } else if (opt.format == "csv") {
    out << census::csv_header() << '\n' << census::to_csv_row(s) << '\n';
  } else {
    print_pairs(out, {{"g", g.to_string()},
                      {"d", std::to_string(s.d)},
                      {"x", std::to_string(s.x)},
                      {"counted", std::to_string(s.counted)},
                      {"considered", std::to_string(s.considered)},
                      {"ratio", s.ratio().to_decimal(kPlaces)},
                      {"delta", fraction_and_decimal(s.delta_exact)},
                      {"abs_error", s.abs_error().to_decimal(kPlaces)},
                      {"segments", std::to_string(raw.segments.size()) + " (" +
                                       std::to_string(raw.resumed_segments) + " resumed)"}});
  }
  return kExitOk;
}

// verify ----------------------------------------------------------------

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto g = parse_g(opt.g);
  const u64 x = parse_count(opt.x, "-x");
  census::KeyIdentityReport report;
  try {
    report = census::verify_key_identity(g, opt.d, x, opt.budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool pass = report.holds();
  const std::string verdict = pass ? "PASS" : "FAIL";
  if (opt.format == "json") {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : report.blocks) {
      blocks.push_back({{"v", b.v}, {"splitting_sum", b.splitting_sum}, {"class_count", b.class_count}});
    }
    ordered_json j = {{"g", g.to_string()}, {"d", opt.d},         {"x", x},
                      {"considered", report.considered}, {"lhs", report.lhs}, {"rhs", report.rhs},
                      {"result", verdict},               {"blocks", blocks}};
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "v,splitting_sum,class_count\n";
    for (const auto& b : report.blocks) {
      out << b.v << ',' << b.splitting_sum << ',' << b.class_count << '\n';
    }
  } else {
    print_pairs(out, {{"g", g.to_string()},
                      {"d", std::to_string(opt.d)},
                      {"x", std::to_string(x)},
                      {"considered", std::to_string(report.considered)},
                      {"lhs", std::to_string(report.lhs)},
                      {"rhs", std::to_string(report.rhs)}});
    out << "blocks (v: splitting sum / class count)\n";
    for (const auto& b : report.blocks) {
      if (b.splitting_sum == 0 && b.class_count == 0) continue;
      out << "  v=" << b.v << ": " << b.splitting_sum << " / " << b.class_count << '\n';
    }
    out << verdict << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// table -----------------------------------------------------------------

int cmd_table(const Options& opt, std::ostream& out) {
  std::span<const ReferenceRow> rows;
  try {
    rows = reference_rows(opt.table);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::optional<u64> x = opt.x.empty() ? std::nullopt : std::optional(parse_count(opt.x, "-x"));

  struct Rendered {
    std::vector<std::string> cells;
    bool matches;
    std::string_view note;
  };
  std::vector<Rendered> rendered;
  bool all_match = true;
  for (const auto& row : rows) {
    const auto r = density::density(row.g, row.d);
    const auto& dec = r.decomposition;
    const bool matches = r.epsilon1 == row.epsilon1 && r.delta == row.delta && dec.h == row.h &&
                         dec.disc == row.disc && r.delta.to_decimal_truncated(kPlaces) == row.numerical;
    all_match = all_match && matches;
    std::vector<std::string> cells = {row.g.to_string(),       dec.g0().to_string(),
                                      std::to_string(dec.h),   std::to_string(dec.disc),
                                      std::to_string(row.d),   r.epsilon1.to_string(),
                                      r.delta.to_string(),     r.delta.to_decimal_truncated(kPlaces),
                                      std::string(row.experimental)};
    if (x) {
      const auto s = run_census_for(row.g, row.d, *x, opt, std::nullopt, nullptr);
      cells.push_back(s.ratio().to_decimal(kPlaces));
      cells.push_back(s.abs_error().to_decimal(kPlaces));
    }
    rendered.push_back({std::move(cells), matches, row.note});
  }

  std::vector<std::string> header = {"g", "g0", "h", "D(g0)", "d", "epsilon1", "delta", "numerical", "published"};
  if (x) {
    header.push_back("census@" + std::to_string(*x));
    header.push_back("abs_error");
  }

  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rendered) {
      ordered_json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r.cells[i];
      o["matches_reference"] = r.matches;
      if (!r.note.empty()) o["note"] = std::string(r.note);
      arr.push_back(o);
    }
    out << arr.dump(2) << '\n';
  } else if (opt.format == "csv") {
    auto h = header;
    h.push_back("note");
    out << csv_line(h) << '\n';
    for (const auto& r : rendered) {
      auto cells = r.cells;
      cells.push_back(std::string(r.note));
      out << csv_line(cells) << '\n';
    }
  } else {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& r : rendered) {
      for (std::size_t i = 0; i < r.cells.size(); ++i) widths[i] = std::max(widths[i], r.cells[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells, std::string_view mark) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(widths[i] + 2)) << cells[i];
      }
      out << mark << '\n';
    };
    out << "Table " << opt.table << (opt.table == 2 ? ": g > 0" : ": g < 0") << '\n';
    line(header, "");
    int footnote = 0;
    std::vector<std::string_view> notes;
    for (const auto& r : rendered) {
      std::string mark;
      if (!r.note.empty()) {
        mark = "[" + std::to_string(++footnote) + "]";
        notes.push_back(r.note);
      }
      line(r.cells, mark);
    }
    for (std::size_t i = 0; i < notes.size(); ++i) {
      out << "[" << i + 1 << "] " << notes[i] << '\n';
    }
  }
  return all_match ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Densities of primes p with d | ord_p(g): closed form, degree series and prime census", "orddiv"};
  app.require_subcommand(1);
  Options opt;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto add_g = [&](CLI::App* sub) { sub->add_option("-g", opt.g, "Base g as n or n/m, g not in {-1,0,1}")->required(); };
  auto add_d = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-d", opt.d, "Divisor d >= 1")->check(CLI::PositiveNumber);
    if (required) o->required();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads, "Worker threads")->envname("ORDDIV_THREADS")->check(CLI::PositiveNumber);
    sub->add_option("--segment-size", opt.segment_size, "Census segment length (>= 10000)");
  };

  auto* density_cmd = app.add_subcommand("density", "Exact density from the closed form");
  add_g(density_cmd);
  add_d(density_cmd, true);
  add_format(density_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Bracket the exact density by the truncated degree series");
  add_g(oracle_cmd);
  add_d(oracle_cmd, true);
  oracle_cmd->add_option("--vmax", opt.vmax, "Largest v in the partial sum")->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--blocks", opt.show_blocks, "Print every per-v block (text format)");
  add_format(oracle_cmd);

  auto* census_cmd = app.add_subcommand("census", "Count primes p <= x with d | ord_p(g)");
  add_g(census_cmd);
  add_d(census_cmd, true);
  census_cmd->add_option("-x", opt.x, "Inclusive prime bound (123, 1e8 or 10^8)")->required();
  census_cmd->add_option("--checkpoint", opt.checkpoint, "Append per-segment records here and resume from them");
  add_threads(census_cmd);
  add_format(census_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check the prime-count identity behind the density series");
  add_g(verify_cmd);
  add_d(verify_cmd, true);
  verify_cmd->add_option("-x", opt.x, "Inclusive prime bound")->required();
  verify_cmd->add_option("--budget", opt.budget, "Largest x allowed (p - 1 is fully factored)");
  add_format(verify_cmd);

  auto* table_cmd = app.add_subcommand("table", "Reproduce the reference density tables (2: g > 0, 3: g < 0)");
  table_cmd->add_option("which", opt.table, "Table number")->required()->check(CLI::IsMember({2, 3}));
  table_cmd->add_option("-x", opt.x, "Also run a census at this bound for every row");
  add_threads(table_cmd);
  add_format(table_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (density_cmd->parsed()) return cmd_density(opt, out);
    if (oracle_cmd->parsed()) return cmd_oracle(opt, out);
    if (census_cmd->parsed()) return cmd_census(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
    if (table_cmd->parsed()) return cmd_table(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const census::CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace orddiv::tools
