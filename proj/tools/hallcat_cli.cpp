// Command-line front end: parse quiver/module files, run the verifiers and
// computations, emit human or structured (JSON) reports.
//
// Exit codes: 0 success, 1 identity violated, 2 input error, 3 guard ceiling.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hallcat/ccmap.hpp"
#include "hallcat/chihall.hpp"
#include "hallcat/cluster.hpp"
#include "hallcat/io.hpp"
#include "hallcat/report.hpp"
#include "hallcat/sweeps.hpp"
#include "hallcat/twocy.hpp"

namespace {

using namespace hallcat;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::shared_ptr<const Quiver> load_quiver(const std::string& path) {
    return std::make_shared<const Quiver>(parse_quiver(slurp(path)));
}

// object syntax: a descriptor expression, or @file for an explicit module
Rep build_object(const std::string& text, std::shared_ptr<const Quiver> q, long p) {
    if (!text.empty() && text[0] == '@') return parse_module(slurp(text.substr(1)), q, p);
    return parse_descriptor(text).build(q, p);
}

Descriptor descr(const std::string& text) { return parse_descriptor(text); }

std::string dims_str(const DimVector& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

DimVector parse_dims(const std::string& text, int nv) {
    detail::Cur c{text, 0, 0};
    DimVector d;
    bool bracket = c.eat('[');
    do d.push_back(static_cast<int>(c.integer()));
    while (c.eat(','));
    if (bracket) c.expect(']');
    if (!c.done() || static_cast<int>(d.size()) != nv)
        throw ParseError(0, "expected " + std::to_string(nv) + " comma-separated dims");
    return d;
}

BMatrix parse_bmatrix(const std::string& text) {
    detail::Cur c{text, 0, 0};
    BMatrix b;
    c.expect('[');
    do {
        std::vector<long> row = detail::int_list(c);
        b.emplace_back(row.begin(), row.end());
    } while (c.eat(','));
    c.expect(']');
    for (const auto& row : b)
        if (row.size() != b.size()) throw ParseError(0, "exchange matrix must be square");
    return b;
}

// f as numerator/denominator in plain variables, e.g. (x1*x3 + 1)/x2
std::string laurent_fraction(const LaurentPoly& f) {
    std::vector<int> lo, hi;
    if (f.is_zero()) return "0";
    detail::laurent_box(f, lo, hi);
    std::vector<int> den(f.nvars, 0);
    bool trivial = true;
    for (int i = 0; i < f.nvars; ++i) {
        den[i] = std::max(0, -lo[i]);
        trivial = trivial && den[i] == 0;
    }
    LaurentPoly dmono = LaurentPoly::monomial(f.nvars, den);
    LaurentPoly num = f * dmono;
    if (trivial) return num.str();
    std::string ns = num.coeff.size() > 1 ? "(" + num.str() + ")" : num.str();
    return ns + "/" + dmono.str();
}

int emit(const Report& r, bool json_out) {
    std::cout << (json_out ? r.structured() : r.human());
    return r.all_ok ? 0 : 1;
}

struct Options {
    std::string quiver_path, variant, object, x, y, l, m, n, y1, y2, l1, l2;
    std::string dims, bmatrix, seq;
    std::vector<long> primes = {2};
    int max_total = 3;
    int vertex_i = 1, vertex_j = 2;
    long ceiling = 10000;
    bool json_out = false, projective = false, twisted = false;
};

int run_quiver_check(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("quiver-check");
    r.config("quiver", o.quiver_path);
    r.result("vertices", q->vertex_count());
    r.result("arrows", q->arrow_count());
    r.result("relations", q->relations().size());
    r.result("acyclic", q->is_acyclic());
    r.result("hereditary", q->is_hereditary());
    return emit(r, o.json_out);
}

int run_iso_classes(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    long p = o.primes.front();
    Universe u(q, p);
    DimVector d = parse_dims(o.dims, q->vertex_count());
    Report r("iso-classes");
    r.config("quiver", o.quiver_path);
    r.config("prime", p);
    r.config("dims", dims_str(d));
    Json list = Json::array();
    for (const IsoClass& c : u.table(d).classes) {
        Json e;
        e["label"] = c.label;
        e["aut"] = c.aut.str();
        e["orbit"] = c.orbit_size.str();
        list.push_back(std::move(e));
    }
    r.result("classes", list);
    return emit(r, o.json_out);
}

int run_hall(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("hall");
    r.config("quiver", o.quiver_path);
    r.config("x", o.x);
    r.config("y", o.y);
    r.config("l", o.l);
    for (long p : o.primes) {
        Rep x = build_object(o.x, q, p), y = build_object(o.y, q, p),
            l = build_object(o.l, q, p);
        r.result("p" + std::to_string(p), hall_number(x, y, l).str());
    }
    return emit(r, o.json_out);
}

int run_green(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("green");
    r.config("quiver", o.quiver_path);
    r.config("variant", o.variant);
    if (o.variant == "degenerated") {
        DegeneratedReport d =
            degenerated_green_check(q, descr(o.x), descr(o.y), descr(o.m), descr(o.n));
        r.config("xi", o.x);
        r.config("eta", o.y);
        r.config("xi'", o.m);
        r.config("eta'", o.n);
        r.check("degenerated formula", d.ok, d.lhs.str(), d.rhs.str());
        r.result("decompositions", d.decompositions);
        return emit(r, o.json_out);
    }
    GreenVariant v = o.variant == "rewritten"      ? GreenVariant::Rewritten
                     : o.variant == "nonhereditary" ? GreenVariant::NonHereditary
                                                    : GreenVariant::Original;
    r.config("max-total-dim", o.max_total);
    for (long p : o.primes) {
        Universe u(q, p);
        SweepResult s = green_sweep(u, v, o.max_total);
        r.check("sweep at p=" + std::to_string(p), s.ok(),
                std::to_string(s.instances) + " quadruples",
                s.failures ? s.first_failure : "all equal");
        if (v == GreenVariant::NonHereditary)
            r.result("filtered at p=" + std::to_string(p), s.filtered);
    }
    return emit(r, o.json_out);
}

int run_coproduct(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("coproduct-check");
    r.config("quiver", o.quiver_path);
    r.config("x", o.x);
    r.config("y", o.y);
    for (long p : o.primes) {
        Universe u(q, p);
        CheckReport c =
            green_compat_check(u, build_object(o.x, q, p), build_object(o.y, q, p));
        r.check("p=" + std::to_string(p), c.ok, "", "");
    }
    return emit(r, o.json_out);
}

int run_pairing(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("pairing-check");
    r.config("quiver", o.quiver_path);
    for (long p : o.primes) {
        Universe u(q, p);
        CheckReport c = hopf_pairing_check(u, build_object(o.x, q, p),
                                           build_object(o.y, q, p),
                                           build_object(o.l, q, p));
        r.check("p=" + std::to_string(p), c.ok, "", c.ok ? "" : c.detail);
    }
    return emit(r, o.json_out);
}

int run_serre(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    Report r("serre-check");
    r.config("quiver", o.quiver_path);
    r.config("i", o.vertex_i);
    r.config("j", o.vertex_j);
    for (long p : o.primes) {
        Universe u(q, p);
        CheckReport c = serre_check(u, o.vertex_i - 1, o.vertex_j - 1);
        r.check("p=" + std::to_string(p), c.ok, "", c.ok ? "" : c.detail);
    }
    return emit(r, o.json_out);
}

int run_cc(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    PrimeFamily fam(q);
    LaurentPoly f = cc(fam, descr(o.object));
    Report r("cc");
    r.config("quiver", o.quiver_path);
    r.config("object", o.object);
    r.result("laurent", f.str());
    r.result("fraction", laurent_fraction(f));
    if (!o.json_out) {
        std::cout << laurent_fraction(f) << "\n";
        return 0;
    }
    return emit(r, o.json_out);
}

int run_ck(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    PrimeFamily fam(q);
    LaurentReport c = ck_check(fam, descr(o.m), descr(o.n));
    Report r("ck");
    r.config("quiver", o.quiver_path);
    r.config("m", o.m);
    r.config("n", o.n);
    r.check("two-term multiplication", c.ok, c.lhs.str(), c.rhs.str());
    r.result("detail", c.detail);
    return emit(r, o.json_out);
}

int run_cluster_mult(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    PrimeFamily fam(q);
    LaurentReport c = cluster_mult_check(fam, descr(o.x), descr(o.y));
    Report r("cluster-mult");
    r.config("quiver", o.quiver_path);
    r.config("xi'", o.x);
    r.config("eta'", o.y);
    r.check("one-directional multiplication", c.ok, c.lhs.str(), c.rhs.str());
    return emit(r, o.json_out);
}

int run_assoc(const Options& o) {
    auto q = load_quiver(o.quiver_path);
    PrimeFamily fam(q);
    HigherAssocReport c = higher_assoc_check(fam, descr(o.x), descr(o.y1), descr(o.y2),
                                             descr(o.l1), descr(o.l2), o.projective);
    Report r("assoc-check");
    r.config("quiver", o.quiver_path);
    r.config("x", o.x);
    r.config("y1", o.y1);
    r.config("y2", o.y2);
    r.config("l1", o.l1);
    r.config("l2", o.l2);
    r.config("projective", o.projective);
    r.check("associativity sum", c.ok, c.lhs.str(), c.rhs.str());
    return emit(r, o.json_out);
}

std::vector<int> parse_seq(const std::string& text) {
    std::vector<int> out;
    detail::Cur c{text, 0, 0};
    do out.push_back(static_cast<int>(c.integer()) - 1);
    while (c.eat(','));
    if (!c.done()) throw ParseError(0, "bad mutation sequence");
    return out;
}

int run_cluster_mutate(const Options& o) {
    BMatrix b = parse_bmatrix(o.bmatrix);
    Seed s = Seed::initial(b);
    Seed cur = s;
    for (int j : parse_seq(o.seq)) cur = mutate(cur, j);
    Report r("cluster mutate");
    r.config("b", o.bmatrix);
    r.config("seq", o.seq);
    Json vars = Json::array();
    for (const RationalExpr& v : cur.vars) vars.push_back(variable_normal_form(v).str());
    r.result("cluster", vars);
    r.result("b-matrix", cur.b);
    bool back = detail::seed_key(cur) == detail::seed_key(s) && cur.b == s.b;
    r.result("initial-seed-recovered", back);
    return emit(r, o.json_out);
}

int run_cluster_enumerate(const Options& o) {
    BMatrix b = parse_bmatrix(o.bmatrix);
    ClusterEnumeration e = enumerate_clusters(Seed::initial(b), o.ceiling);
    Report r("cluster enumerate");
    r.config("b", o.bmatrix);
    Json vars = Json::array();
    for (const std::string& v : e.variables) vars.push_back(v);
    r.result("variable-count", e.variables.size());
    r.result("seeds-visited", e.seeds_visited);
    r.result("variables", vars);
    return emit(r, o.json_out);
}

int run_cluster_finite(const Options& o) {
    BMatrix b = parse_bmatrix(o.bmatrix);
    FiniteTypeReport f = finite_type_test(b, o.ceiling);
    Report r("cluster finite-type");
    r.config("b", o.bmatrix);
    r.result("verdict",
             f.verdict == FiniteTypeReport::FINITE ? "FINITE" : "INCONCLUSIVE");
    r.result("semidefinite-witness", f.semidefinite_witness);
    r.result("matrices-visited", f.matrices_visited);
    if (!f.witness.empty()) r.result("witness", f.witness);
    return emit(r, o.json_out);
}

int run_twocy_classes(const Options& o) {
    auto pp = preprojective(*load_quiver(o.quiver_path));
    PrimeFamily fam(pp);
    DimVector e = parse_dims(o.dims, pp->vertex_count());
    auto types = full_flag_types(e);
    Report r("twocy classes");
    r.config("quiver", o.quiver_path);
    r.config("dims", dims_str(e));
    Json list = Json::array();
    for (const DeltaBucket& b : class_table(fam, e, types)) {
        Json entry;
        Json delta = Json::array();
        for (const Int& v : b.delta) delta.push_back(v.str());
        entry["delta"] = delta;
        entry["classes"] = b.class_count;
        list.push_back(std::move(entry));
    }
    r.result("buckets", list);
    return emit(r, o.json_out);
}

int run_twocy_mult(const Options& o) {
    auto pp = preprojective(*load_quiver(o.quiver_path));
    PrimeFamily fam(pp);
    DeltaMultReport c = twocy_mult_check(fam, descr(o.m), descr(o.n));
    Report r("twocy mult");
    r.config("quiver", o.quiver_path);
    r.config("m", o.m);
    r.config("n", o.n);
    auto vec = [](const std::vector<Int>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
        return s + ")";
    };
    r.check("delta multiplication", c.ok, vec(c.lhs), vec(c.rhs));
    r.result("buckets", c.buckets);
    return emit(r, o.json_out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-algebra and cluster-character calculator"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool needs_quiver = true) {
        if (needs_quiver) c->add_option("--quiver", o.quiver_path, "quiver file")->required();
        c->add_flag("--json", o.json_out, "structured output");
        return c;
    };
    auto primes_opt = [&](CLI::App* c) {
        c->add_option("--primes", o.primes, "primes to run at")->delimiter(',');
    };

    auto* qc = common(app.add_subcommand("quiver-check", "parse and validate a quiver file"));
    auto* ic = common(app.add_subcommand("iso-classes", "list iso classes of one grade"));
    primes_opt(ic);
    ic->add_option("--dims", o.dims, "dimension vector")->required();
    auto* ha = common(app.add_subcommand("hall", "Hall number of a class triple"));
    primes_opt(ha);
    ha->add_option("--x", o.x, "quotient")->required();
    ha->add_option("--y", o.y, "submodule")->required();
    ha->add_option("--l", o.l, "ambient module")->required();
    auto* gr = common(app.add_subcommand("green", "comultiplication formula sweeps"));
    primes_opt(gr);
    gr->add_option("--variant", o.variant, "original|rewritten|nonhereditary|degenerated")
        ->default_val("original");
    gr->add_option("--max-total-dim", o.max_total, "sweep ceiling");
    gr->add_option("--xi", o.x, "degenerated variant: first factor");
    gr->add_option("--eta", o.y, "degenerated variant: second factor");
    gr->add_option("--xip", o.m, "degenerated variant: first cofactor");
    gr->add_option("--etap", o.n, "degenerated variant: second cofactor");
    auto* cp = common(app.add_subcommand("coproduct-check", "coproduct multiplicativity"));
    primes_opt(cp);
    cp->add_option("--x", o.x)->required();
    cp->add_option("--y", o.y)->required();
    auto* pa = common(app.add_subcommand("pairing-check", "bilinear pairing identity"));
    primes_opt(pa);
    pa->add_option("--a", o.x)->required();
    pa->add_option("--b", o.y)->required();
    pa->add_option("--c", o.l)->required();
    auto* se = common(app.add_subcommand("serre-check", "quantum Serre relation"));
    primes_opt(se);
    se->add_option("--i", o.vertex_i, "vertex (1-based)");
    se->add_option("--j", o.vertex_j, "vertex (1-based)");
    auto* cc_cmd = common(app.add_subcommand("cc", "cluster character of an object"));
    cc_cmd->add_option("--object", o.object, "descriptor, e.g. S2 or P1+I3")->required();
    auto* ck_cmd = common(app.add_subcommand("ck", "two-term cluster multiplication"));
    ck_cmd->add_option("--m", o.m)->required();
    ck_cmd->add_option("--n", o.n)->required();
    auto* cm = common(app.add_subcommand("cluster-mult", "one-directional multiplication"));
    cm->add_option("--xi", o.x)->required();
    cm->add_option("--eta", o.y)->required();
    auto* as = common(app.add_subcommand("assoc-check", "higher-order associativity"));
    as->add_option("--x", o.x)->required();
    as->add_option("--y1", o.y1)->required();
    as->add_option("--y2", o.y2)->required();
    as->add_option("--l1", o.l1)->required();
    as->add_option("--l2", o.l2)->required();
    as->add_flag("--projective", o.projective);
    auto* cl = app.add_subcommand("cluster", "mutation engine");
    cl->require_subcommand(1);
    auto* mu = common(cl->add_subcommand("mutate", "apply a mutation sequence"), false);
    mu->add_option("--b", o.bmatrix, "exchange matrix, e.g. [[0,1],[-1,0]]")->required();
    mu->add_option("--seq", o.seq, "1-based directions, comma separated")->required();
    auto* en = common(cl->add_subcommand("enumerate", "close the mutation class"), false);
    en->add_option("--b", o.bmatrix)->required();
    en->add_option("--ceiling", o.ceiling, "seed ceiling");
    auto* ft = common(cl->add_subcommand("finite-type", "finite-type test"), false);
    ft->add_option("--b", o.bmatrix)->required();
    ft->add_option("--bound", o.ceiling, "search bound");
    auto* tc = app.add_subcommand("twocy", "preprojective-algebra checks");
    tc->require_subcommand(1);
    auto* tcc = common(tc->add_subcommand("classes", "delta-equivalence classes"));
    tcc->add_option("--dims", o.dims, "grade on the doubled quiver")->required();
    auto* tcm = common(tc->add_subcommand("mult", "delta-form multiplication identity"));
    tcm->add_option("--m", o.m)->required();
    tcm->add_option("--n", o.n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (qc->parsed()) return run_quiver_check(o);
        if (ic->parsed()) return run_iso_classes(o);
        if (ha->parsed()) return run_hall(o);
        if (gr->parsed()) return run_green(o);
        if (cp->parsed()) return run_coproduct(o);
        if (pa->parsed()) return run_pairing(o);
        if (se->parsed()) return run_serre(o);
        if (cc_cmd->parsed()) return run_cc(o);
        if (ck_cmd->parsed()) return run_ck(o);
        if (cm->parsed()) return run_cluster_mult(o);
        if (as->parsed()) return run_assoc(o);
        if (mu->parsed()) return run_cluster_mutate(o);
        if (en->parsed()) return run_cluster_enumerate(o);
        if (ft->parsed()) return run_cluster_finite(o);
        if (tcc->parsed()) return run_twocy_classes(o);
        if (tcm->parsed()) return run_twocy_mult(o);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const NotPolynomialCount& e) {
        std::cerr << "count is not polynomial: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
