#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "voalat/verify.hpp"

using namespace voalat;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

enum class Format { human, json, tsv };

// one schema-versioned table; every format prints the same cells
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string tsv_cell(std::string s) {
  for (auto& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

void emit(const Table& t, Format f, std::ostream& os) {
  if (f == Format::json) {
    nlohmann::json h = {{"schema", t.schema}, {"columns", t.columns}};
    os << h.dump() << "\n";
    for (auto& r : t.rows) {
      nlohmann::ordered_json o;
      for (size_t i = 0; i < t.columns.size(); i++) o[t.columns[i]] = i < r.size() ? r[i] : "";
      os << o.dump() << "\n";
    }
    return;
  }
  if (f == Format::tsv) {
    os << "#schema\t" << t.schema << "\n";
    for (size_t i = 0; i < t.columns.size(); i++) os << (i ? "\t" : "") << t.columns[i];
    os << "\n";
    for (auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); i++) os << (i ? "\t" : "") << tsv_cell(r[i]);
      os << "\n";
    }
    return;
  }
  // human: aligned, long cells are not truncated
  std::vector<size_t> w(t.columns.size());
  for (size_t i = 0; i < w.size(); i++) w[i] = t.columns[i].size();
  for (auto& r : t.rows)
    for (size_t i = 0; i < r.size() && i < w.size(); i++) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); i++) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(t.columns);
  for (auto& r : t.rows) line(r);
}

struct Ctx {
  Format format = Format::human;
  std::string cache;
  bool no_cache = false;
  int jobs = 1;
  size_t cap = 200000;
  bool quiet = false;

  IsometryOptions iso() const {
    IsometryOptions o;
    o.cap = cap;
    if (!no_cache) o.cache_dir = cache;
    return o;
  }
  void progress(const std::string& s) const {
    if (!quiet) std::cerr << s << std::endl;
  }
};

// flag, then VOALAT_CACHE, then XDG_CACHE_HOME/voalat, then ~/.cache/voalat
std::string resolve_cache(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* e = std::getenv("VOALAT_CACHE"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/voalat";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/voalat";
  return ".voalat-cache";
}

std::string secs(double s) {
  char b[32];
  snprintf(b, sizeof b, "%.2f", s);
  return b;
}

// runs f(i) for i < n on a pool, results kept in index order
template <class R>
std::vector<R> run_pool(size_t n, int jobs, const std::function<R(size_t)>& f,
                        const std::function<void(size_t, double)>& done) {
  std::vector<R> out(n);
  std::atomic<size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (size_t i; (i = next++) < n;) {
      auto t0 = Clock::now();
      out[i] = f(i);
      double s = std::chrono::duration<double>(Clock::now() - t0).count();
      std::lock_guard<std::mutex> g(mu);
      done(i, s);
    }
  };
  int k = std::max(1, std::min<int>(jobs, (int)n));
  std::vector<std::thread> th;
  for (int j = 1; j < k; j++) th.emplace_back(worker);
  worker();
  for (auto& t : th) t.join();
  return out;
}

EntryReport safe_verify(const SchellekensEntry& e, const VerifyOptions& vo) {
  try {
    return verify_entry(e, vo);
  } catch (const std::exception& ex) {
    EntryReport r;
    r.number = e.number;
    r.cls = e.cls;
    r.lie = e.lie();
    r.checks.push_back({"error", ex.what(), "", true, false, 0});
    return r;
  }
}

std::vector<EntryReport> verify_many(const std::vector<const SchellekensEntry*>& es, const Ctx& ctx,
                                     bool with_aut) {
  VerifyOptions vo;
  vo.iso = ctx.iso();
  vo.with_aut = with_aut;
  auto t0 = Clock::now();
  size_t finished = 0;
  return run_pool<EntryReport>(
      es.size(), ctx.jobs, [&](size_t i) { return safe_verify(*es[i], vo); },
      [&](size_t i, double s) {
        finished++;
        double tot = std::chrono::duration<double>(Clock::now() - t0).count();
        ctx.progress("[" + std::to_string(finished) + "/" + std::to_string(es.size()) + "] entry " +
                     std::to_string(es[i]->number) + " " + secs(s) + "s (elapsed " + secs(tot) + "s)");
      });
}

const std::vector<std::string> kVerifyCols = {"entry", "class", "lie", "check", "kind",
                                              "computed", "expected", "pass", "seconds"};

void add_check_rows(Table& t, const EntryReport& r) {
  for (auto& c : r.checks)
    t.rows.push_back({std::to_string(r.number), r.cls, r.lie, c.id,
                      c.independent ? "independent" : "consistency", c.computed, c.expected,
                      c.pass ? "yes" : "no", secs(c.seconds)});
}

int status_of(const std::vector<EntryReport>& rs, const Ctx& ctx) {
  int st = 0;
  for (auto& r : rs)
    for (auto& c : r.checks) {
      if (c.pass) continue;
      if (c.independent) {
        st = 1;
      } else {
        ctx.progress("warning: entry " + std::to_string(r.number) + " " + c.id +
                     " (consistency only) does not match: " + c.computed + " vs " + c.expected);
      }
    }
  return st;
}

// ---- commands ----

int cmd_verify(const Ctx& ctx, int entry, const std::string& cls, bool all, bool no_aut) {
  std::vector<const SchellekensEntry*> es;
  for (auto& e : entries())
    if (all || e.number == entry || e.cls == cls) es.push_back(&e);
  if (es.empty()) {
    std::cerr << "no catalog entry matches the selector\n";
    return 2;
  }
  auto rs = verify_many(es, ctx, !no_aut);
  Table t{"voalat.verify/1", kVerifyCols, {}};
  for (auto& r : rs) add_check_rows(t, r);
  emit(t, ctx.format, std::cout);
  return status_of(rs, ctx);
}

int cmd_lattice_info(const Ctx& ctx, int entry) {
  const SchellekensEntry* e = nullptr;
  for (auto& x : entries())
    if (x.number == entry) e = &x;
  if (!e) {
    std::cerr << "no catalog entry " << entry << "\n";
    return 2;
  }
  Bundle b = build_bundle(*e);
  const Lattice& L = b.l;
  Table t{"voalat.lattice-info/1", {"key", "value"}, {}};
  auto add = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
  add("entry", std::to_string(e->number));
  add("class", e->cls);
  add("lie", e->lie());
  add("rank", std::to_string(L.rank()));
  add("gram", to_string(L.gram));
  add("det", to_string(L.det()));
  add("level", std::to_string(level(L)));
  add("disc_fingerprint", fingerprint(disc_module(L)).str());
  add("root_type_L", classify(roots(L)).str());
  add("root_type_U", classify(roots(b.u)).str());
  ctx.progress("computing O(L)");
  auto t0 = Clock::now();
  auto g = aut_gens(L, ctx.iso());
  add("order_O_L", g.order().get_str());
  add("order_O_L_seconds", secs(std::chrono::duration<double>(Clock::now() - t0).count()));
  emit(t, ctx.format, std::cout);
  return 0;
}

std::string find_computed(const EntryReport& r, const std::string& id) {
  auto* c = r.find(id);
  return c ? c->computed : "";
}
std::string find_pass(const EntryReport& r, const std::string& id) {
  auto* c = r.find(id);
  return c ? (c->pass ? "yes" : "no") : "";
}

int table_kout(const Ctx& ctx, bool no_aut) {
  std::vector<const SchellekensEntry*> es;
  for (auto& e : entries()) es.push_back(&e);
  auto rs = verify_many(es, ctx, !no_aut);
  Table t{"voalat.table-kout/1",
          {"no", "genus", "lie", "out", "k", "k_computed", "k_match", "out_order", "out_order_computed",
           "out_match", "source"},
          {}};
  struct Row {
    int n;
    std::vector<std::string> cells;
  };
  std::vector<Row> all;
  int st = 0;
  for (size_t i = 0; i < es.size(); i++) {
    auto& e = *es[i];
    auto& r = rs[i];
    std::string oo = r.order_out == 0 ? "" : Int(r.order_out).get_str();
    all.push_back({e.number,
                   {std::to_string(e.number), std::string(1, e.genus), e.lie(), e.expected.out,
                    e.expected.k, find_computed(r, "k"), find_pass(r, "k"),
                    shape_order(e.expected.out).get_str(), oo, find_pass(r, "out"), "computed"}});
    auto* k = r.find("k");
    auto* o = r.find("out");
    if ((k && !k->pass) || (o && o->independent && !o->pass)) st = 1;
  }
  for (auto& lc : catalog().lattice_cases)
    all.push_back({lc.number,
                   {std::to_string(lc.number), std::string(1, lc.genus), lc.lie, lc.out, lc.k, "", "", "",
                    "", "", "lattice case"}});
  std::stable_sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.n < b.n; });
  for (auto& r : all) t.rows.push_back(r.cells);
  emit(t, ctx.format, std::cout);
  return st;
}

int table_main(const Ctx& ctx) {
  Table t{"voalat.table-main/1",
          {"genus", "class", "rank_lambda", "symbol", "group", "aut_w", "full_orth", "index", "entries"},
          {}};
  std::vector<const AutWData*> cs;
  for (auto& [k, v] : catalog().classes) cs.push_back(&v);
  std::sort(cs.begin(), cs.end(), [](auto* a, auto* b) { return a->genus < b->genus; });
  for (auto* c : cs) {
    int n = 0;
    for (auto& e : entries()) n += e.cls == c->cls;
    t.rows.push_back({std::string(1, c->genus), c->cls, std::to_string(c->rank_lambda), c->symbol, c->group,
                      c->aut_w, c->full_orth, c->index.get_str(), std::to_string(n)});
  }
  emit(t, ctx.format, std::cout);
  return 0;
}

int table_lie(const Ctx& ctx) {
  Table t{"voalat.table-lie/1", {"no", "genus", "class", "lie", "rank", "ell"}, {}};
  for (auto& e : entries())
    t.rows.push_back({std::to_string(e.number), std::string(1, e.genus), e.cls, e.lie(),
                      std::to_string(e.rank()), std::to_string(e.ell)});
  emit(t, ctx.format, std::cout);
  return 0;
}

// per-class lattice table: R(U), |O(L)|, K, Out
int table_class(const Ctx& ctx, const std::string& cls, bool no_aut) {
  std::vector<const SchellekensEntry*> es;
  for (auto& e : entries())
    if (e.cls == cls) es.push_back(&e);
  auto rs = verify_many(es, ctx, !no_aut);
  Table t{"voalat.table-class/1",
          {"no", "lie", "root_type_U", "root_type_match", "order_O_L", "order_O_L_table", "o_l_match", "k",
           "k_match", "out_order", "out_table", "out_match"},
          {}};
  int st = 0;
  for (size_t i = 0; i < es.size(); i++) {
    auto& e = *es[i];
    auto& r = rs[i];
    std::string ol = r.order_l == 0 ? "" : Int(r.order_l).get_str();
    std::string oo = r.order_out == 0 ? "" : Int(r.order_out).get_str();
    t.rows.push_back({std::to_string(e.number), e.lie(), find_computed(r, "root_type"), find_pass(r, "root_type"),
                      ol, e.expected.ol, find_pass(r, "o_l"), find_computed(r, "k"), find_pass(r, "k"), oo,
                      e.expected.out, find_pass(r, "out")});
    if (!r.independent_ok()) st = 1;
  }
  emit(t, ctx.format, std::cout);
  return st;
}

std::string default_gluecodes() { return default_data_dir() + "/gluecodes.txt"; }

int glue_table(const Ctx& ctx, const std::string& path, const std::string& schema) {
  std::vector<GlueCodeData> codes;
  try {
    codes = load_glue_codes(path);
  } catch (const InvalidCode& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  }
  std::map<int, GlueAuts> got;
  auto res = run_pool<GlueAuts>(
      codes.size(), ctx.jobs, [&](size_t i) { return glue_code_auts(codes[i]); },
      [&](size_t i, double s) { ctx.progress("code " + std::to_string(codes[i].number) + " " + secs(s) + "s"); });
  for (size_t i = 0; i < codes.size(); i++) got[codes[i].number] = res[i];
  Table t{schema,
          {"no", "lie", "aut1", "aut1_table", "aut1_computed", "aut2", "aut2_table", "aut2_computed", "code_size",
           "pass"},
          {}};
  int st = 0;
  for (auto& row : catalog().appendix) {
    auto it = got.find(row.number);
    Int e1 = shape_order(row.aut1), e2 = shape_order(row.aut2);
    std::vector<std::string> cells = {std::to_string(row.number), row.lie, row.aut1, e1.get_str(), "",
                                      row.aut2, e2.get_str(), "", "", "no data"};
    if (it != got.end()) {
      auto& a = it->second;
      bool ok = a.aut1 == e1 && a.aut2 == e2;
      cells[4] = a.aut1.get_str();
      cells[7] = a.aut2.get_str();
      cells[8] = a.code_size.get_str();
      cells[9] = ok ? "yes" : "no";
      if (!ok) st = 1;
    }
    t.rows.push_back(cells);
  }
  emit(t, ctx.format, std::cout);
  return st;
}

std::string orbit_shape(const std::array<int, 4>& a) {
  std::array<int, 4> s = a;
  std::sort(s.begin(), s.end());
  if (s == std::array<int, 4>{1, 1, 1, 9}) return "S3xS9";
  if (s == std::array<int, 4>{3, 3, 3, 3}) return "S3wrS4";
  if (s == std::array<int, 4>{1, 1, 5, 5}) return "S2x(S5wrS2)";
  return "?";
}

int cmd_orbits_2c(const Ctx& ctx) {
  auto r = two_c_orbit_count();
  // listing order: atom type (1,1,1,9), (3,3,3,3), (1,1,5,5)
  auto rank = [](const std::array<int, 4>& a) {
    if (a[3] == 9) return 0;
    if (a[0] == 3) return 1;
    return 2;
  };
  std::vector<size_t> idx(r.count());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return rank(r.atoms[a]) < rank(r.atoms[b]); });
  if (ctx.format == Format::human) {
    std::cout << r.count() << " orbits:";
    for (size_t k = 0; k < idx.size(); k++) std::cout << (k ? ", " : " ") << r.orbit_sizes[idx[k]];
    std::cout << "\n";
    std::cout << "non-singular vectors: " << r.nonsingular << ", planes: " << r.planes << "\n";
  }
  Table t{"voalat.orbits-2c/1", {"orbit", "size", "stabilizer_order", "atoms", "stabilizer"}, {}};
  for (size_t k = 0; k < idx.size(); k++) {
    auto& a = r.atoms[idx[k]];
    std::string at = std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
                     std::to_string(a[3]);
    t.rows.push_back({std::to_string(k + 1), std::to_string(r.orbit_sizes[idx[k]]),
                      r.stabilizer_orders[idx[k]].get_str(), at, orbit_shape(a)});
  }
  emit(t, ctx.format, std::cout);
  return 0;
}

int cmd_cache(const Ctx& ctx, const std::string& what) {
  fs::path dir = ctx.cache;
  size_t n = 0, bytes = 0;
  std::error_code ec;
  if (fs::exists(dir, ec))
    for (auto& p : fs::directory_iterator(dir, ec))
      if (p.is_regular_file() && p.path().extension() == ".aut") {
        n++;
        bytes += p.file_size();
      }
  if (what == "clear") {
    size_t removed = 0;
    if (fs::exists(dir, ec))
      for (auto& p : fs::directory_iterator(dir, ec))
        if (p.is_regular_file() && p.path().extension() == ".aut") removed += fs::remove(p.path(), ec);
    Table t{"voalat.cache/1", {"dir", "files", "bytes", "removed"},
            {{dir.string(), "0", "0", std::to_string(removed)}}};
    emit(t, ctx.format, std::cout);
    return 0;
  }
  Table t{"voalat.cache/1", {"dir", "files", "bytes", "removed"},
          {{dir.string(), std::to_string(n), std::to_string(bytes), "0"}}};
  emit(t, ctx.format, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voalat: lattice and automorphism checks for holomorphic VOAs of central charge 24"};
  app.require_subcommand(1);
  Ctx ctx;
  std::string fmt = "human", cache_flag;
  app.add_option("--format", fmt, "human | json | tsv")
      ->check(CLI::IsMember({"human", "json", "tsv"}));
  app.add_option("--cache", cache_flag, "isometry cache directory");
  app.add_flag("--no-cache", ctx.no_cache, "do not read or write the isometry cache");
  app.add_option("-j,--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", ctx.cap, "max +- pairs in an isometry vector set")->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", ctx.quiet, "no progress on stderr");

  auto* verify = app.add_subcommand("verify", "run the per-entry checks");
  int v_entry = 0;
  std::string v_class;
  bool v_all = false, v_noaut = false;
  auto* sel = verify->add_option_group("selector");
  sel->add_option("--entry", v_entry, "entry number");
  sel->add_option("--class", v_class, "conjugacy class, e.g. 2A");
  sel->add_flag("--all", v_all, "all 46 entries");
  sel->require_option(1);
  verify->add_flag("--no-aut", v_noaut, "skip O(L), Out and mass checks");

  auto* lat = app.add_subcommand("lattice", "lattice inspection");
  lat->require_subcommand(1);
  auto* info = lat->add_subcommand("info", "Gram, det, level, discriminant, roots, |O(L)|");
  int i_entry = 0;
  info->add_option("entry", i_entry)->required();

  auto* table = app.add_subcommand("table", "regenerate a table");
  std::string t_name;
  bool t_noaut = false;
  table->add_option("name", t_name, "kout | main | lie | appendix (t21) | <class>")->required();
  table->add_flag("--no-aut", t_noaut, "skip automorphism groups");

  auto* orb = app.add_subcommand("orbits-2c", "orbits of S12 on the 2C planes");

  auto* glue = app.add_subcommand("glue-auts", "Aut1/Aut2 orders of glue codes");
  std::string g_file;
  glue->add_option("file", g_file, "glue code file")->check(CLI::ExistingFile);

  auto* cache = app.add_subcommand("cache", "manage the isometry cache");
  std::string c_what;
  cache->add_option("action", c_what, "clear | stat")->required()->check(CLI::IsMember({"clear", "stat"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  ctx.format = fmt == "json" ? Format::json : fmt == "tsv" ? Format::tsv : Format::human;
  ctx.cache = resolve_cache(cache_flag);

  try {
    if (*verify) return cmd_verify(ctx, v_entry, v_class, v_all, v_noaut);
    if (*info) return cmd_lattice_info(ctx, i_entry);
    if (*table) {
      if (t_name == "kout") return table_kout(ctx, t_noaut);
      if (t_name == "main") return table_main(ctx);
      if (t_name == "lie") return table_lie(ctx);
      if (t_name == "appendix" || t_name == "t21")
        return glue_table(ctx, default_gluecodes(), "voalat.table-appendix/1");
      if (catalog().classes.count(t_name) ||
          std::any_of(catalog().classes.begin(), catalog().classes.end(),
                      [&](auto& kv) { return kv.second.cls == t_name; }))
        return table_class(ctx, t_name, t_noaut);
      std::cerr << "unknown table " << t_name << "\n";
      return 2;
    }
    if (*orb) return cmd_orbits_2c(ctx);
    if (*glue) return glue_table(ctx, g_file.empty() ? default_gluecodes() : g_file, "voalat.glue-auts/1");
    if (*cache) return cmd_cache(ctx, c_what);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
