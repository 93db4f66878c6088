#include "jumpscan/cli.hpp"

#include "jumpscan/cache.hpp"
#include "jumpscan/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace jumpscan::cli {

using io::json;

namespace {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw io::FormatError("unknown format " + s);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

arith::Integer parse_integer(const std::string& s) {
  arith::Integer v;
  if (v.set_str(s, 10) != 0) throw io::FormatError("not an integer: " + s);
  return v;
}

struct Options {
  std::string curve, endo, primes, coeffs, fibers, hom_list;
  std::string p_text, q_text, n_text;
  std::string disc = "-4";
  unsigned k = 1, m = 1, g = 2;
  unsigned cutoff = 0;
  unsigned buckets = 20;
  std::uint64_t bound = 0;
  std::uint64_t budget = 0;
  long rk_ns = 0, hom = 0, c1 = 0, c2 = 0;
  bool char_zero = false;
};

/// Routes point counts through the cache when one is configured.
picard::CountFn make_counter(const curves::CurveModel& model, cache::PointCountCache* store, std::uint64_t budget) {
  const std::string hash = model.hash();
  return [=](const curves::ReducedCurve& c, unsigned k) {
    if (store) {
      if (auto hit = store->lookup(hash, c.p(), k)) return *hit;
    }
    arith::Integer n = curves::count_points(c, k, budget);
    if (store) store->store(hash, c.p(), k, n);
    return n;
  };
}

curves::ReducedCurve reduce_or_throw(const curves::CurveModel& model, const arith::Integer& p) {
  auto red = curves::reduce_curve(model, p);
  if (auto* bad = std::get_if<curves::BadReduction>(&red))
    throw curves::CurveError("bad reduction at p = " + p.get_str() + ": " + bad->describe());
  return std::get<curves::ReducedCurve>(std::move(red));
}

zeta::WeilPolynomial weil_from_options(const Options& o, const Config& cfg, cache::PointCountCache* store) {
  if (!o.coeffs.empty()) {
    zeta::WeilPolynomial w;
    w.q = parse_integer(o.q_text);
    for (const auto& c : split_list(o.coeffs)) w.coeffs.push_back(parse_integer(c));
    if (w.coeffs.empty() || w.coeffs.size() % 2 == 0) throw io::FormatError("--coeffs must have odd length 2g+1");
    w.g = static_cast<unsigned>(w.coeffs.size() / 2);
    return w;
  }
  if (o.curve.empty() || o.p_text.empty()) throw io::FormatError("need --curve and --p, or --q and --coeffs");
  const auto model = io::load_curve(o.curve);
  const auto curve = reduce_or_throw(model, parse_integer(o.p_text));
  const auto counter = make_counter(model, store, cfg.budget);
  std::vector<arith::Integer> counts;
  for (unsigned k = 1; k <= model.genus(); ++k) counts.push_back(counter(curve, k));
  return zeta::weil_polynomial(counts, curve.field().p(), model.genus());
}

std::vector<std::uint64_t> primes_from(const std::string& text, const Config& cfg) {
  const std::string range = !text.empty() ? text : cfg.primes.value_or("");
  if (range.empty()) throw io::FormatError("no prime range given (--primes a..b or config \"primes\")");
  const auto [lo, hi] = io::parse_range(range);
  return picard::primes_in_range(lo, hi);
}

}  // namespace

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw io::FormatError("config " + path + ": " + e.what());
  }
  Config c;
  if (j.contains("primes")) c.primes = j["primes"].get<std::string>();
  if (j.contains("budget")) c.budget = j["budget"].get<std::uint64_t>();
  if (j.contains("period_cutoff")) c.period_cutoff = j["period_cutoff"].get<unsigned>();
  if (j.contains("format")) c.format = parse_format(j["format"].get<std::string>());
  if (j.contains("cache")) c.cache_path = j["cache"].get<std::string>();
  if (j.contains("jobs")) c.jobs = j["jobs"].get<unsigned>();
  if (c.jobs < 1) throw io::FormatError("config: jobs must be >= 1");
  return c;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jumpscan: Picard numbers of C x C over finite fields, jump primes and decomposability checks"};
  app.name("jumpscan");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, cache_flag, format_flag;
  unsigned jobs_flag = 0;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--cache", cache_flag, "point-count cache (JSON Lines)");
  app.add_option("--jobs", jobs_flag, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format_flag, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));

  Options o;
  auto curve_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--curve", o.curve, "curve JSON file");
    if (required) opt->required();
  };
  auto budget_opt = [&](CLI::App* s) { s->add_option("--budget", o.budget, "max q^k to enumerate"); };
  auto weil_opts = [&](CLI::App* s) {
    curve_opt(s, false);
    s->add_option("--p", o.p_text, "prime");
    s->add_option("--q", o.q_text, "field size (with --coeffs)");
    s->add_option("--coeffs", o.coeffs, "Weil polynomial a_0,...,a_2g");
    budget_opt(s);
  };

  auto* count = app.add_subcommand("count", "points on the curve over F_{p^k}");
  curve_opt(count);
  count->add_option("--p", o.p_text)->required();
  count->add_option("--k", o.k)->check(CLI::PositiveNumber);
  budget_opt(count);

  auto* weil = app.add_subcommand("weil", "Weil polynomial of the reduction");
  curve_opt(weil);
  weil->add_option("--p", o.p_text)->required();
  budget_opt(weil);

  auto* pic = app.add_subcommand("picard", "Picard numbers of C x C at one prime");
  curve_opt(pic);
  pic->add_option("--p", o.p_text)->required();
  pic->add_option("--endo", o.endo, "endomorphism data JSON (sets the baseline)");
  pic->add_option("--m", o.m, "extension degree; 0 = geometric");
  budget_opt(pic);

  auto* scan = app.add_subcommand("jump-scan", "Picard reports over a prime range");
  curve_opt(scan);
  scan->add_option("--endo", o.endo)->required();
  scan->add_option("--primes", o.primes, "a..b");
  budget_opt(scan);

  auto* dens = app.add_subcommand("density", "jump density against the character prediction");
  curve_opt(dens);
  dens->add_option("--endo", o.endo)->required();
  dens->add_option("--primes", o.primes, "a..b");
  budget_opt(dens);

  auto* chr = app.add_subcommand("character", "jump character value and action determinant");
  chr->add_option("--endo", o.endo)->required();
  chr->add_option("--p", o.p_text);

  auto* ss = app.add_subcommand("ss-scan", "Deuring supersingularity over a prime range");
  ss->add_option("--disc", o.disc, "negative CM discriminant")->allow_extra_args(false);
  ss->add_option("--primes", o.primes, "a..b");
  curve_opt(ss, false);
  budget_opt(ss);

  auto* hw = app.add_subcommand("hw-status", "Hasse-Weil maximality/minimality over F_{q^m}");
  weil_opts(hw);
  hw->add_option("--m", o.m)->check(CLI::PositiveNumber);

  auto* per = app.add_subcommand("period", "smallest extension degree reaching a Hasse-Weil bound");
  weil_opts(per);
  per->add_option("--cutoff", o.cutoff);

  auto* cap = app.add_subcommand("genus-cap", "genus bound from maximality over degree <= 3 extensions");
  cap->add_option("--q", o.q_text)->required();

  auto* split = app.add_subcommand("split", "splitting of p in Q(zeta_{2^k})");
  split->add_option("--p", o.p_text)->required();
  split->add_option("--k", o.k)->required();

  auto* wit = app.add_subcommand("witnesses", "congruence classes for y^2 = x^(2g+1) - 1");
  wit->add_option("--g", o.g)->required();
  wit->add_option("--bound", o.bound)->required();

  auto* mw = app.add_subcommand("mw", "Mordell-Weil rank formulas");
  mw->require_subcommand(1);
  auto* shioda = mw->add_subcommand("shioda", "Shioda-Tate");
  shioda->add_option("--rk-ns", o.rk_ns)->required();
  shioda->add_option("--fibers", o.fibers, "component counts f_v, comma separated");
  auto* ulmer = mw->add_subcommand("ulmer", "lower bound sum phi(e)/o_e(q), or the simplified formula");
  ulmer->add_option("--p", o.p_text, "prime(s), comma separated");
  ulmer->add_option("--n", o.n_text, "exponent(s)");
  ulmer->add_option("--q", o.q_text, "field size(s)");
  ulmer->add_option("--hom", o.hom_list, "rk Hom^{mu_d} (simplified formula)");
  ulmer->add_option("--c1", o.c1);
  ulmer->add_option("--c2", o.c2);
  auto* ulmer_exact = mw->add_subcommand("ulmer-exact", "exact rank when F_q contains mu_d");
  ulmer_exact->add_option("--p", o.p_text)->required();
  ulmer_exact->add_option("--n", o.n_text)->required();
  ulmer_exact->add_option("--q", o.q_text);
  ulmer_exact->add_flag("--char0", o.char_zero, "characteristic-0 base field");

  auto* st = app.add_subcommand("st-stats", "moments of F_1/sqrt(p)");
  curve_opt(st);
  st->add_option("--bound", o.bound)->required();
  st->add_option("--buckets", o.buckets);
  budget_opt(st);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) cfg.cache_path = env;
    if (!cache_flag.empty()) cfg.cache_path = cache_flag;
    if (jobs_flag) cfg.jobs = jobs_flag;
    if (!format_flag.empty()) cfg.format = parse_format(format_flag);
    if (o.budget) cfg.budget = o.budget;
    if (o.cutoff) cfg.period_cutoff = o.cutoff;

    std::unique_ptr<cache::PointCountCache> store;
    if (cfg.cache_path) store = std::make_unique<cache::PointCountCache>(*cfg.cache_path, &err);
    const OutputFormat fmt = cfg.format;

    if (count->parsed()) {
      const auto model = io::load_curve(o.curve);
      const auto curve = reduce_or_throw(model, parse_integer(o.p_text));
      const auto n = make_counter(model, store.get(), cfg.budget)(curve, o.k);
      if (fmt == OutputFormat::Json)
        out << json{{"curve", model.label()}, {"p", curve.p()}, {"k", o.k}, {"count", io::integer_to_json(n)}}.dump()
            << "\n";
      else
        out << n << "\n";
      return 0;
    }

    if (weil->parsed()) {
      const auto w = weil_from_options(o, cfg, store.get());
      const auto rep = zeta::validate_weil(w);
      json j = io::weil_to_json(w);
      j["valid"] = rep.ok();
      if (fmt == OutputFormat::Json)
        out << j.dump() << "\n";
      else
        out << w.as_poly().to_string() << "\n";
      return rep.ok() ? 0 : 1;
    }

    if (pic->parsed()) {
      const auto model = io::load_curve(o.curve);
      const auto curve = reduce_or_throw(model, parse_integer(o.p_text));
      const unsigned baseline = o.endo.empty() ? 2 : io::load_endo(o.endo).baseline();
      const auto counter = make_counter(model, store.get(), cfg.budget);
      std::vector<arith::Integer> counts;
      for (unsigned k = 1; k <= model.genus(); ++k) counts.push_back(counter(curve, k));
      auto rep = picard::picard_report(counts, curve.field().p(), model.genus(), baseline);
      rep.p = curve.p();
      const int chi = o.endo.empty() ? 1 : characters::jump_character(io::load_endo(o.endo), curve.field().p());
      if (fmt == OutputFormat::Text && o.m != 1) {
        out << picard::picard_number(rep.cyclo, o.m) << "\n";
      } else if (fmt == OutputFormat::Csv) {
        out << io::scan_csv_header() << "\n" << io::scan_csv_row(model, rep, chi) << "\n";
      } else {
        json j = io::scan_record(model, rep, chi);
        j["picard_m"] = {{"m", o.m}, {"rank", picard::picard_number(rep.cyclo, o.m)}};
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (scan->parsed() || dens->parsed()) {
      const auto model = io::load_curve(o.curve);
      const auto endo = io::load_endo(o.endo);
      picard::ScanOptions so;
      so.budget = cfg.budget;
      so.jobs = cfg.jobs;
      so.counter = make_counter(model, store.get(), cfg.budget);
      const auto entries = picard::jump_scan(model, endo, primes_from(o.primes, cfg), so);
      std::vector<picard::PicardReport> reports;
      for (const auto& e : entries) {
        if (!e.report) {
          err << "skip p=" << e.p << ": " << e.skipped << "\n";
          continue;
        }
        reports.push_back(*e.report);
      }
      if (dens->parsed()) {
        const auto d = characters::density_report(reports, endo);
        out << io::density_to_json(d).dump() << "\n";
        return d.character_mismatches.empty() ? 0 : 1;
      }
      if (fmt == OutputFormat::Csv) out << io::scan_csv_header() << "\n";
      for (const auto& r : reports) {
        const int chi = characters::jump_character(endo, arith::Integer(static_cast<unsigned long>(r.p)));
        if (fmt == OutputFormat::Csv)
          out << io::scan_csv_row(model, r, chi) << "\n";
        else
          out << io::scan_record(model, r, chi).dump() << "\n";
      }
      return 0;
    }

    if (chr->parsed()) {
      const auto endo = io::load_endo(o.endo);
      const int det = characters::action_determinant(endo);
      json j{{"disc_label", io::integer_to_json(endo.disc_label())},
             {"rank", endo.rank()},
             {"baseline", endo.baseline()},
             {"determinant", det},
             {"trivial", endo.trivial_character()}};
      int chi = 0;
      if (!o.p_text.empty()) {
        chi = characters::jump_character(endo, parse_integer(o.p_text));
        j["p"] = io::integer_to_json(parse_integer(o.p_text));
        j["character"] = chi;
      }
      if (fmt == OutputFormat::Text && !o.p_text.empty())
        out << chi << "\n";
      else
        out << j.dump() << "\n";
      return 0;
    }

    if (ss->parsed()) {
      const arith::Integer disc = parse_integer(o.disc);
      std::optional<curves::CurveModel> model;
      if (!o.curve.empty()) model = io::load_curve(o.curve);
      if (fmt == OutputFormat::Csv) out << "p,supersingular" << (model ? ",f1" : "") << "\n";
      int status = 0;
      for (std::uint64_t p : primes_from(o.primes, cfg)) {
        const arith::Integer P(static_cast<unsigned long>(p));
        const bool ssr = decomp::deuring_supersingular(disc, P);
        json row{{"p", p}, {"supersingular", ssr}};
        std::string f1_text;
        if (model) {
          auto red = curves::reduce_curve(*model, P);
          if (auto* c = std::get_if<curves::ReducedCurve>(&red)) {
            const arith::Integer f1 = P + 1 - make_counter(*model, store.get(), cfg.budget)(*c, 1);
            row["f1"] = io::integer_to_json(f1);
            row["agrees"] = (f1 == 0) == ssr;
            if ((f1 == 0) != ssr) status = 1;
            f1_text = f1.get_str();
          }
        }
        if (fmt == OutputFormat::Csv)
          out << p << ',' << (ssr ? "true" : "false") << (model ? "," + f1_text : "") << "\n";
        else
          out << row.dump() << "\n";
      }
      return status;
    }

    if (hw->parsed() || per->parsed()) {
      const auto w = weil_from_options(o, cfg, store.get());
      if (hw->parsed()) {
        const auto s = decomp::hw_status(w, o.m);
        if (fmt == OutputFormat::Text)
          out << decomp::to_string(s.kind) << "\n";
        else
          out << io::hw_status_to_json(s).dump() << "\n";
      } else {
        const auto m = decomp::period(w, cfg.period_cutoff);
        if (fmt == OutputFormat::Text)
          out << (m ? std::to_string(*m) : "none <= " + std::to_string(cfg.period_cutoff)) << "\n";
        else
          out << json{{"period", m ? json(*m) : json(nullptr)}, {"cutoff", cfg.period_cutoff}}.dump() << "\n";
      }
      return 0;
    }

    if (cap->parsed()) {
      const auto gc = decomp::genus_cap(parse_integer(o.q_text));
      if (fmt == OutputFormat::Text) {
        out << gc.cap << "\n";
      } else {
        json per_m = json::object();
        for (const auto& [m, b] : gc.per_degree) per_m[std::to_string(m)] = b ? io::integer_to_json(*b) : json(nullptr);
        out << json{{"cap", io::integer_to_json(gc.cap)}, {"per_degree", per_m}}.dump() << "\n";
      }
      return 0;
    }

    if (split->parsed()) {
      const auto s = decomp::cyclotomic_splitting(parse_integer(o.p_text), o.k);
      if (fmt == OutputFormat::Text)
        out << "e=" << s.e << " f=" << s.f << " g=" << s.g << (s.splits_completely ? " splits completely" : "")
            << "\n";
      else
        out << io::splitting_to_json(s).dump() << "\n";
      return 0;
    }

    if (wit->parsed()) {
      const auto w = decomp::congruence_witnesses(o.g, o.bound);
      if (fmt == OutputFormat::Csv) {
        out << "p,minus_one_mod_4g,p3mod4,p1mod4\n";
        for (const auto& r : w.rows)
          out << r.p << ',' << r.minus_one_mod_4g << ',' << r.supersingular_class << ',' << r.ordinary_class << "\n";
      } else {
        out << io::witnesses_to_json(w).dump() << "\n";
      }
      return 0;
    }

    if (shioda->parsed()) {
      std::vector<mwrank::Fiber> fibers;
      unsigned idx = 0;
      for (const auto& f : split_list(o.fibers))
        fibers.push_back({"v" + std::to_string(++idx), static_cast<unsigned>(std::stoul(f))});
      out << mwrank::shioda_tate_mw(o.rk_ns, fibers) << "\n";
      return 0;
    }

    if (ulmer->parsed()) {
      if (!o.hom_list.empty()) {
        out << mwrank::ulmer_simplified_rank(std::stol(o.hom_list), o.c1, o.c2) << "\n";
        return 0;
      }
      if (o.p_text.empty() || o.n_text.empty() || o.q_text.empty())
        throw io::FormatError("mw ulmer needs --p, --n and --q (or --hom, --c1, --c2)");
      std::vector<json> rows;
      bool all_hold = true;
      for (const auto& ps : split_list(o.p_text))
        for (const auto& ns : split_list(o.n_text))
          for (const auto& qs : split_list(o.q_text)) {
            const auto b = mwrank::ulmer_lower_bound(parse_integer(ps), static_cast<unsigned>(std::stoul(ns)),
                                                     parse_integer(qs));
            all_hold = all_hold && b.bound_holds;
            json j = io::ulmer_bound_to_json(b);
            j["p"] = io::integer_to_json(parse_integer(ps));
            j["n"] = std::stoul(ns);
            j["q"] = io::integer_to_json(parse_integer(qs));
            rows.push_back(std::move(j));
          }
      if (fmt == OutputFormat::Csv) {
        out << "p,n,q,d,sum,closed_form,bound_holds\n";
        for (const auto& j : rows)
          out << j["p"].dump() << ',' << j["n"].dump() << ',' << j["q"].dump() << ',' << j["d"].dump() << ','
              << j["sum"].get<std::string>() << ',' << j["closed_form"].get<std::string>() << ','
              << (j["bound_holds"].get<bool>() ? "true" : "false") << "\n";
      } else if (fmt == OutputFormat::Text && rows.size() == 1) {
        out << rows.front()["sum"].get<std::string>() << "\n";
      } else {
        for (const auto& j : rows) out << j.dump() << "\n";
      }
      return all_hold ? 0 : 1;
    }

    if (ulmer_exact->parsed()) {
      if (!o.char_zero && o.q_text.empty()) throw io::FormatError("mw ulmer-exact needs --q unless --char0");
      const auto r = mwrank::ulmer_exact_rank(parse_integer(o.p_text), static_cast<unsigned>(std::stoul(o.n_text)),
                                              o.q_text.empty() ? arith::Integer(0) : parse_integer(o.q_text),
                                              o.char_zero);
      if (r.rank) {
        if (fmt == OutputFormat::Text)
          out << *r.rank << "\n";
        else
          out << json{{"rank", io::integer_to_json(*r.rank)}}.dump() << "\n";
      } else {
        json j{{"rank", nullptr}, {"hypothesis", "not met"}, {"lower_bound", io::ulmer_bound_to_json(*r.bound)}};
        if (fmt == OutputFormat::Text)
          out << "hypothesis not met; lower bound " << r.bound->sum.get_str() << "\n";
        else
          out << j.dump() << "\n";
      }
      return 0;
    }

    if (st->parsed()) {
      const auto model = io::load_curve(o.curve);
      const auto m = characters::sato_tate_stats(model, o.bound, o.buckets, cfg.budget);
      if (fmt == OutputFormat::Csv)
        out << io::histogram_csv(m);
      else
        out << io::moments_to_json_text(m) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace jumpscan::cli
