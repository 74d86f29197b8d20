#include "clifford3/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "clifford3/arith.hpp"
#include "clifford3/bounds.hpp"
#include "clifford3/elmtrans.hpp"
#include "clifford3/families.hpp"
#include "clifford3/krawtchouk.hpp"
#include "clifford3/serialize.hpp"

namespace clifford3 {
namespace {

using nlohmann::json;

enum class Format { Json, Csv };

Format output_format(Format fallback) {
  const char* env = std::getenv("CLIFFORD3_OUTPUT");
  if (env == nullptr) return fallback;
  const std::string v(env);
  if (v == "json") return Format::Json;
  if (v == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "CLIFFORD3_OUTPUT must be json or csv, got '" + v + "'");
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing required flag ") + flag);
  return *v;
}

struct BoundFlags {
  std::int64_t genus = 0;
  int rank = 0;
  std::int64_t degree = 0;
  std::optional<std::int64_t> s1, s2, s1f;
  bool hyperelliptic = false;
  bool delta = false;
  bool unstable = false;
  bool f_semistable = false;
  bool quotient = false;
  bool slope = false;
};

BoundResult compute_bound(const BoundFlags& f) {
  const Curve curve(f.genus, f.hyperelliptic);
  if (f.rank == 1) {
    validate(BundleInvariants::line(f.degree));
    return h0_line_bound(curve, f.degree);
  }
  if (f.rank == 2) return h0_rank2_bound(curve, f.degree, require(f.s1, "--s1"), f.delta);
  if (f.rank != 3) {
    throw Error(ErrorCode::RankUnsupported, "rank must be 1, 2 or 3, got " + std::to_string(f.rank));
  }
  const Rank3Query q{curve,
                     BundleInvariants::rank3(f.degree, require(f.s1, "--s1"), require(f.s2, "--s2")),
                     f.s1f, f.delta, f.hyperelliptic};
  validate(q.inv);
  if (f.slope) {
    if (!q.inv.stable()) throw Error(ErrorCode::HypothesisFailed, "slope bound needs a stable bundle");
    return slope_bound(f.genus, f.degree);
  }
  if (f.unstable) return h0_rank3_unstable_bound(q, f.f_semistable);
  if (f.quotient) return h0_quotient_bound(q);
  return h0_rank3_semistable_bound(q);
}

void print_bound(const BoundResult& r, std::ostream& out) {
  if (output_format(Format::Json) == Format::Csv) {
    out << "value,case,exact,assumptions\n"
        << r.value << ',' << case_name(r.case_label) << ',' << (r.exact ? "true" : "false") << ','
        << join(r.assumptions, ';') << '\n';
    return;
  }
  out << json(r).dump() << '\n';
}

struct TableFlags {
  std::int64_t genus = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::optional<std::int64_t> d_min, d_max;
  bool hyperelliptic = false;
};

void run_table(const TableFlags& f, std::ostream& out) {
  const Curve curve(f.genus, f.hyperelliptic);
  if (f.s1 < 0 || f.s2 < 0) throw Error(ErrorCode::NotSemistable, "table needs s1, s2 >= 0");
  if (!congruent(f.s2, 2 * f.s1, 3)) {
    throw Error(ErrorCode::CongruenceViolation, "no degree satisfies both congruences", 2);
  }
  const std::int64_t lo = f.d_min.value_or(f.s1);
  const std::int64_t hi = f.d_max.value_or(3 * curve.canonical_degree() - f.s2);
  std::int64_t d = lo + mod(f.s1 - lo, 3);

  const Format fmt = output_format(Format::Csv);
  json rows = json::array();
  if (fmt == Format::Csv) out << "d,value,case,exact\n";
  for (; d <= hi; d += 3) {
    const BoundResult r = h0_rank3_semistable_bound(
        Rank3Query{curve, BundleInvariants::rank3(d, f.s1, f.s2), std::nullopt, false, f.hyperelliptic});
    if (fmt == Format::Csv) {
      out << d << ',' << r.value << ',' << case_name(r.case_label) << ','
          << (r.exact ? "true" : "false") << '\n';
    } else {
      rows.push_back({{"d", d}, {"value", r.value}, {"case", case_name(r.case_label)}, {"exact", r.exact}});
    }
  }
  if (fmt == Format::Json) out << rows.dump() << '\n';
}

struct ElmFlags {
  int rank = 3;
  std::int64_t genus = 0;
  std::int64_t steps = 0;
  std::optional<std::string> choices;
  bool hyperelliptic = false;
};

std::vector<StepChoice> parse_choices(const std::string& bits, int rank, std::int64_t steps) {
  std::string clean;
  for (char c : bits) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidArgument, "--choices accepts only 0 and 1");
    }
    clean += c;
  }
  const auto per_step = static_cast<std::size_t>(rank - 1);
  if (clean.size() != per_step * static_cast<std::size_t>(steps)) {
    throw Error(ErrorCode::InvalidArgument,
                "--choices needs " + std::to_string(per_step * static_cast<std::size_t>(steps)) +
                    " bits (rank-1 per step), got " + std::to_string(clean.size()));
  }
  std::vector<StepChoice> out;
  for (std::size_t k = 0; k < static_cast<std::size_t>(steps); ++k) {
    StepChoice c;
    for (std::size_t r = 0; r < per_step; ++r) c.hits_maximal.push_back(clean[k * per_step + r] == '1');
    out.push_back(std::move(c));
  }
  return out;
}

void run_elmtrans(const ElmFlags& f, std::ostream& out) {
  const Curve curve(f.genus, f.hyperelliptic);
  if (f.steps < 0) throw Error(ErrorCode::InvalidArgument, "--steps must be nonnegative");
  const ElmState seed = seed_split_state(curve, f.rank);
  std::vector<ElmState> trajectory{seed};
  if (f.choices) {
    for (const StepChoice& c : parse_choices(*f.choices, f.rank, f.steps)) {
      trajectory.push_back(step(trajectory.back(), c));
    }
  } else {
    for (std::int64_t k = 1; k <= f.steps; ++k) trajectory.push_back(generic_sequence(seed, k));
  }

  if (output_format(Format::Json) == Format::Csv) {
    out << "step,degree";
    for (int r = 1; r < f.rank; ++r) out << ",s" << r << ",certified" << r;
    out << '\n';
    for (const ElmState& st : trajectory) {
      out << st.step_count() << ',' << st.invariants().degree;
      for (int r = 1; r < f.rank; ++r) {
        out << ',' << st.invariants().s_at(r) << ',' << (st.certified(r) ? "true" : "false");
      }
      out << '\n';
    }
    return;
  }
  for (const ElmState& st : trajectory) out << json(st).dump() << '\n';
}

struct ExampleFlags {
  std::string family;
  std::int64_t genus = 0;
  std::optional<std::int64_t> n, k, m, dl, df, s1f;
  std::string variant = "E1";
  bool suite = false;
  std::int64_t max_genus = 0;
};

std::string optional_field(const ExampleReport& rep, const std::string& name) {
  for (const auto& [key, value] : rep.params) {
    if (key == name) return std::to_string(value);
  }
  return "";
}

void run_examples(const ExampleFlags& f, std::ostream& out) {
  if (f.suite) {
    if (f.max_genus < 2) throw Error(ErrorCode::InvalidArgument, "--max-genus must be at least 2");
    const auto reports = example_suite(f.max_genus);
    if (output_format(Format::Csv) == Format::Json) {
      out << json(reports).dump() << '\n';
      return;
    }
    out << "family,genus,variant,n,k,m,degree,s1,s2,exact_h0,bound,case,sharp\n";
    for (const ExampleReport& rep : reports) {
      out << rep.family << ',' << rep.genus << ',' << rep.variant << ',' << optional_field(rep, "n")
          << ',' << optional_field(rep, "k") << ',' << optional_field(rep, "m") << ','
          << rep.inv.degree << ',' << rep.inv.s_at(1) << ',' << rep.inv.s_at(2) << ','
          << rep.exact_h0 << ',' << rep.bound.value << ',' << case_name(rep.bound.case_label) << ','
          << (rep.sharp ? "true" : "false") << '\n';
    }
    return;
  }

  ExampleReport rep;
  if (f.family == "a") {
    rep = family_a(f.genus, require(f.n, "--n"), require(f.k, "--k"));
  } else if (f.family == "b") {
    rep = family_b(f.genus, require(f.m, "--m"));
  } else if (f.family == "c") {
    if (f.variant != "E1" && f.variant != "E2") {
      throw Error(ErrorCode::InvalidArgument, "--variant must be E1 or E2");
    }
    rep = family_c(f.genus, f.variant == "E1" ? FamilyCVariant::E1 : FamilyCVariant::E2,
                   require(f.k, "--k"));
  } else if (f.family == "unstable") {
    rep = unstable_sharpness(Curve(f.genus, true), require(f.dl, "--dl"), require(f.df, "--df"),
                             require(f.s1f, "--s1f"));
  } else {
    throw Error(ErrorCode::InvalidArgument, "--family must be a, b, c or unstable (or use --suite)");
  }
  if (output_format(Format::Json) == Format::Csv) {
    out << "family,genus,degree,s1,s2,exact_h0,bound,case,sharp\n"
        << rep.family << ',' << rep.genus << ',' << rep.inv.degree << ',' << rep.inv.s_at(1) << ','
        << rep.inv.s_at(2) << ',' << rep.exact_h0 << ',' << rep.bound.value << ','
        << case_name(rep.bound.case_label) << ',' << (rep.sharp ? "true" : "false") << '\n';
    return;
  }
  out << json(rep).dump() << '\n';
}

void print_integer(const BigInt& v, const KrawtchoukQuery& q, std::ostream& out) {
  if (output_format(Format::Csv) == Format::Json) {
    json j{{"r", q.r}, {"n", q.n}, {"N", q.N}};
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      j["value"] = static_cast<std::int64_t>(v);
    } else {
      j["value"] = v.str();
    }
    out << j.dump() << '\n';
    return;
  }
  out << v.str() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford-type bounds on h0 for rank-1/2/3 bundles on curves", "clifford3"};
  app.require_subcommand(1);

  BoundFlags bf;
  auto* bound = app.add_subcommand("bound", "Upper bound (or exact value) for h0(E)");
  bound->add_option("--genus", bf.genus, "Genus g >= 2")->required();
  bound->add_option("--rank", bf.rank, "Rank 1, 2 or 3")->required();
  bound->add_option("--degree", bf.degree, "Degree d")->required();
  bound->add_option("--s1", bf.s1, "First degree of stability");
  bound->add_option("--s2", bf.s2, "Second degree of stability (rank 3)");
  bound->add_option("--s1f", bf.s1f, "s1 of a minimal-degree rank-2 quotient F");
  bound->add_flag("--hyperelliptic", bf.hyperelliptic, "Curve is hyperelliptic; apply its sharpening");
  bound->add_flag("--delta", bf.delta, "Apply the Krawtchouk refinement");
  bound->add_flag("--unstable", bf.unstable, "Use the unstable rank-3 bound");
  bound->add_flag("--f-semistable", bf.f_semistable, "The quotient F is semistable (with --unstable)");
  bound->add_flag("--quotient", bf.quotient, "Bound through the minimal quotient F (needs --s1f)");
  bound->add_flag("--slope", bf.slope, "Slope bound for stable rank 3 with d < 6");

  KrawtchoukQuery kq;
  bool oracle = false;
  auto* kraw = app.add_subcommand("krawtchouk", "Evaluate K_r(n, N)");
  kraw->add_option("r", kq.r)->required();
  kraw->add_option("n", kq.n)->required();
  kraw->add_option("N", kq.N)->required();
  kraw->add_flag("--oracle", oracle, "Expand the polynomial product instead of the closed form");

  ElmFlags ef;
  auto* elm = app.add_subcommand("elmtrans", "Elementary-transformation trajectory from the split seed");
  elm->add_option("--rank", ef.rank, "2 or 3")->required();
  elm->add_option("--genus", ef.genus)->required();
  elm->add_option("--steps", ef.steps)->required();
  elm->add_option("--choices", ef.choices, "rank-1 bits per step; 1 = line in a maximal subbundle");
  elm->add_flag("--hyperelliptic", ef.hyperelliptic);

  TableFlags tf;
  auto* table = app.add_subcommand("table", "Sweep the semistable rank-3 bound over d");
  table->add_option("--genus", tf.genus)->required();
  table->add_option("--s1", tf.s1)->required();
  table->add_option("--s2", tf.s2)->required();
  table->add_option("--d-min", tf.d_min);
  table->add_option("--d-max", tf.d_max);
  table->add_flag("--hyperelliptic", tf.hyperelliptic);

  ExampleFlags xf;
  auto* examples = app.add_subcommand("examples", "Sharp example families on hyperelliptic curves");
  examples->add_option("--family", xf.family, "a, b, c or unstable");
  examples->add_option("--genus", xf.genus);
  examples->add_option("--n", xf.n);
  examples->add_option("--k", xf.k);
  examples->add_option("--m", xf.m);
  examples->add_option("--variant", xf.variant, "E1 or E2 (family c)");
  examples->add_option("--dl", xf.dl, "deg L (family unstable)");
  examples->add_option("--df", xf.df, "deg F (family unstable)");
  examples->add_option("--s1f", xf.s1f, "s1(F) (family unstable)");
  examples->add_flag("--suite", xf.suite, "Run every valid parameter set");
  examples->add_option("--max-genus", xf.max_genus);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"code", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    if (bound->parsed()) {
      print_bound(compute_bound(bf), out);
    } else if (kraw->parsed()) {
      print_integer(oracle ? krawtchouk_oracle(kq) : krawtchouk(kq), kq, out);
    } else if (elm->parsed()) {
      run_elmtrans(ef, out);
    } else if (table->parsed()) {
      run_table(tf, out);
    } else if (examples->parsed()) {
      run_examples(xf, out);
    }
  } catch (const Error& e) {
    err << error_json(e).dump() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace clifford3
