#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/error.hpp"
#include "colbwt/intervals.hpp"
#include "colbwt/inversion.hpp"
#include "colbwt/optimize.hpp"
#include "colbwt/order.hpp"
#include "colbwt/transform.hpp"

namespace colbwt::cli {

namespace {

struct Config {
  std::string input = "-";
  std::string output;
  std::string format = "lines";
  std::vector<std::string> variants;
  std::string order = "input";
  bool dollars_equal = true;
  bool ropt = false;
  std::size_t guard = kDefaultGuard;
  std::string meta;
};

// Thrown for failures that map directly onto an exit code.
struct Exit {
  int code;
  std::string message;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Exit{kInputError, "cannot read " + path};
  buf << file.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& data) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << data)) throw Exit{kInputError, "cannot write " + path};
}

StringCollection load_collection(const Config& cfg, std::istream& in) {
  const std::string raw = slurp(cfg.input, in);
  if (raw.find_first_of("$#") != std::string::npos) {
    throw Exit{kInputError, "input contains a reserved glyph ('$' or '#')"};
  }
  try {
    return cfg.format == "fasta" ? ingest_fasta(raw) : ingest_lines(raw);
  } catch (const Error& e) {
    throw Exit{kInputError, e.what()};
  }
}

Variant want_variant(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v || *v == Variant::bwt) throw Exit{kBadCombination, "unknown variant '" + name + "'"};
  return *v;
}

Variant single_variant(const Config& cfg) {
  if (cfg.variants.size() != 1) throw Exit{kBadCombination, "exactly one --variant is required"};
  return want_variant(cfg.variants.front());
}

Method want_order(const std::string& name) {
  for (Method m : {Method::input, Method::colex, Method::plus, Method::opt}) {
    if (method_name(m) == name) return m;
  }
  throw Exit{kBadCombination, "unknown order '" + name + "'"};
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void emit(const Config& cfg, std::ostream& out, const std::string& data) {
  if (cfg.output.empty()) {
    out << data;
  } else {
    spill(cfg.output, data);
  }
}

std::string meta_path(const Config& cfg) {
  if (!cfg.meta.empty()) return cfg.meta;
  if (!cfg.output.empty()) return cfg.output + ".meta";
  return {};
}

int cmd_transform(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Variant variant = single_variant(cfg);
  const Method method = want_order(cfg.order);
  if (method != Method::input && variant != Variant::mdol_ebwt && variant != Variant::mdol_bwt) {
    throw Exit{kBadCombination, "--order " + cfg.order + " needs mdolEBWT or mdolBWT"};
  }
  const auto collection = load_collection(cfg, in);

  Transform t;
  std::string extra;
  if (method != Method::input) {
    const auto r = optimize(method, collection);
    t = variant == Variant::mdol_ebwt ? r.transform : mdol_bwt(collection.permuted(r.order));
    extra = "runs: " + std::to_string(r.runs) + "\norder: " + join(r.order) + "\n";
  } else {
    try {
      t = apply_variant(variant, collection);
    } catch (const Error& e) {
      throw Exit{kInputError, e.what()};
    }
  }
  emit(cfg, out, render(t.text) + "\n");
  const std::string sidecar = write_metadata(t) + extra;
  const std::string path = meta_path(cfg);
  if (!path.empty() && !sidecar.empty()) spill(path, sidecar);
  if (path.empty() && !sidecar.empty()) {
    err << "note: metadata not written (use --meta PATH or -o PATH)\n";
  }
  return kOk;
}

int cmd_invert(const Config& cfg, std::istream& in, std::ostream& out) {
  const Variant variant = single_variant(cfg);
  std::string raw = slurp(cfg.input, in);
  while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
  if (raw.find('\n') != std::string::npos) throw Exit{kMalformed, "transform spans several lines"};

  Transform t;
  t.variant = variant;
  t.text = parse_glyphs(raw);
  if (t.text.empty()) throw Exit{kMalformed, "empty transform"};

  std::string path = cfg.meta;
  if (path.empty() && cfg.input != "-" && std::filesystem::exists(cfg.input + ".meta")) {
    path = cfg.input + ".meta";
  }
  Permutation order;
  if (!path.empty()) {
    const std::string sidecar = slurp(path, in);
    read_metadata(sidecar, t);
    std::istringstream lines(sidecar);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.starts_with("order:")) continue;
      std::istringstream values(line.substr(6));
      for (std::size_t v; values >> v;) order.push_back(v);
    }
  }

  auto recovered = invert(t);
  if (!order.empty()) {
    if (!is_permutation_of_range(order, recovered.size())) {
      throw Exit{kMalformed, "order line is not a permutation of 1.." + std::to_string(recovered.size())};
    }
    std::vector<std::string> items(recovered.size());
    for (std::size_t k = 0; k < order.size(); ++k) items[order[k] - 1] = recovered[k];
    recovered = StringCollection(std::move(items));
  }

  std::string data;
  if (cfg.format == "fasta") {
    for (std::size_t d = 0; d < recovered.size(); ++d) {
      data += ">" + std::to_string(d + 1) + "\n" + recovered[d] + "\n";
    }
  } else {
    data = to_lines(recovered);
  }
  emit(cfg, out, data);
  return kOk;
}

std::string stats_row(const std::string& name, std::size_t length, std::size_t runs) {
  std::ostringstream row;
  row << std::left << std::setw(20) << name << std::right << std::setw(8) << length << std::setw(8)
      << runs << std::setw(10) << std::fixed << std::setprecision(2)
      << static_cast<double>(length) / static_cast<double>(runs) << '\n';
  return row.str();
}

int cmd_stats(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto collection = load_collection(cfg, in);
  if (cfg.ropt && collection.size() > cfg.guard) {
    throw Exit{kGuard, "--ropt needs m <= " + std::to_string(cfg.guard) + ", got " +
                           std::to_string(collection.size())};
  }
  std::vector<Variant> variants;
  for (const auto& name : cfg.variants) variants.push_back(want_variant(name));
  if (variants.empty()) {
    variants = {Variant::ebwt,    Variant::dol_ebwt,   Variant::mdol_ebwt,
                Variant::mdol_bwt, Variant::concat_bwt, Variant::adapted_concat_bwt};
  }

  std::ostringstream table;
  table << std::left << std::setw(20) << "variant" << std::right << std::setw(8) << "length"
        << std::setw(8) << "runs" << std::setw(10) << "n/r" << '\n';
  for (Variant v : variants) {
    Transform t;
    try {
      t = apply_variant(v, collection);
    } catch (const Error& e) {
      err << "skipping " << variant_name(v) << ": " << e.what() << '\n';
      continue;
    }
    table << stats_row(std::string(variant_name(v)), t.text.size(), count_runs(t, cfg.dollars_equal));
  }
  if (std::find(variants.begin(), variants.end(), Variant::mdol_ebwt) != variants.end()) {
    for (Method m : {Method::input, Method::colex, Method::plus, Method::opt}) {
      const auto r = optimize(m, collection);
      table << stats_row("mdolEBWT:" + std::string(method_name(m)), r.transform.text.size(),
                         count_runs(r.transform, cfg.dollars_equal));
    }
  }
  if (cfg.ropt) {
    const auto bf = brute_force_ropt(collection, cfg.guard);
    table << stats_row("ropt", collection.total_length() + collection.size(), bf.runs);
  }
  out << table.str();
  return kOk;
}

int cmd_intervals(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto collection = load_collection(cfg, in);
  if (collection.size() < 2) {
    out << "m < 2: no SAP intervals\n";
    return kOk;
  }
  const auto all = compute_sap_intervals(collection);
  std::string report = "# SAP intervals: begin end suffix chars\n";
  for (const auto& iv : all) report += format_interval(iv) + '\n';
  report += "# interesting intervals\n";
  for (const auto& iv : all) {
    if (is_interesting(iv, cfg.dollars_equal)) report += format_interval(iv) + '\n';
  }
  emit(cfg, out, report);
  return kOk;
}

int cmd_compare(const Config& cfg, std::istream& in, std::ostream& out) {
  if (cfg.variants.size() != 2) throw Exit{kBadCombination, "compare needs --variant twice"};
  const Variant va = want_variant(cfg.variants[0]);
  const Variant vb = want_variant(cfg.variants[1]);
  if (!is_separator_based(va) || !is_separator_based(vb)) {
    throw Exit{kBadCombination, "compare is defined for dollar-based variants only (lengths differ)"};
  }
  const auto collection = load_collection(cfg, in);
  auto unified = [&](Variant v) {
    auto t = apply_variant(v, collection);
    if (v == Variant::concat_bwt) t = adapt_concat(t);
    return unify_sentinels(t.text);
  };
  const std::string a = unified(va);
  const std::string b = unified(vb);
  if (a.size() != b.size()) throw Exit{kBadCombination, "transform lengths differ"};

  const auto intervals = interesting_intervals(collection, cfg.dollars_equal);
  std::string report;
  std::size_t diffs = 0;
  std::size_t stray = 0;
  for (std::size_t p = 1; p <= a.size(); ++p) {
    if (a[p - 1] == b[p - 1]) continue;
    ++diffs;
    report += std::to_string(p) + ' ' + render(std::string(1, a[p - 1])) + ' ' +
              render(std::string(1, b[p - 1])) + ' ';
    if (const auto iv = enclosing(intervals, p)) {
      report += "in " + format_interval(*iv) + '\n';
    } else {
      report += "outside\n";
      ++stray;
    }
  }
  report += "differences: " + std::to_string(diffs) + ", outside interesting intervals: " +
            std::to_string(stray) + '\n';
  out << report;
  return stray == 0 ? kOk : kNotLocalized;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"BWT variants for string collections"};
  app.name("colbwt");
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "input file, '-' for stdin");
    sub->add_option("--format", cfg.format, "input format")->check(CLI::IsMember({"lines", "fasta"}));
    sub->add_option("--dollars-equal", cfg.dollars_equal, "treat all dollars as one symbol");
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };
  auto* transform = app.add_subcommand("transform", "compute a transform");
  auto* invert_cmd = app.add_subcommand("invert", "recover the strings from a transform");
  auto* stats = app.add_subcommand("stats", "length and run statistics");
  auto* intervals = app.add_subcommand("intervals", "SAP and interesting intervals");
  auto* compare = app.add_subcommand("compare", "diff two variants");
  for (auto* sub : {transform, invert_cmd, stats, intervals, compare}) add_common(sub);

  transform->add_option("--variant", cfg.variants)->required()->allow_extra_args(false);
  transform->add_option("--order", cfg.order, "input, colex, plus or opt");
  transform->add_option("--meta", cfg.meta, "metadata sidecar to write");
  invert_cmd->add_option("--variant", cfg.variants)->required()->allow_extra_args(false);
  invert_cmd->add_option("--meta", cfg.meta, "metadata sidecar to read");
  stats->add_option("--variant", cfg.variants, "restrict rows")->allow_extra_args(false);
  stats->add_flag("--ropt", cfg.ropt, "add the brute-force optimum");
  stats->add_option("--guard", cfg.guard, "largest m for --ropt");
  compare->add_option("--variant", cfg.variants, "given twice")->required()->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*transform) return cmd_transform(cfg, in, out, err);
    if (*invert_cmd) return cmd_invert(cfg, in, out);
    if (*stats) return cmd_stats(cfg, in, out, err);
    if (*intervals) return cmd_intervals(cfg, in, out);
    if (*compare) return cmd_compare(cfg, in, out);
  } catch (const Exit& e) {
    err << "colbwt: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "colbwt: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::guard_exceeded: return kGuard;
      case Errc::malformed_transform:
      case Errc::missing_dollar_ranks:
      case Errc::invalid_index_tuple:
      case Errc::empty_sequence:
      case Errc::empty_collection:
      case Errc::reserved_byte: return kMalformed;
      default: return kInputError;
    }
  }
  return kInputError;
}

}  // namespace colbwt::cli
