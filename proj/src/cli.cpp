#include "mtab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mtab/acceptance.hpp"
#include "mtab/cauchy.hpp"
#include "mtab/characters.hpp"
#include "mtab/harmonics.hpp"
#include "mtab/skew.hpp"

namespace mtab {

using nlohmann::json;

namespace {

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tableau_json(const Tableau& T) {
    json rows = json::array();
    for (int i = 0; i < T.shape.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < T.shape.row_begin(i); ++j) row.push_back(nullptr);
        for (int v : T.entries[i]) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_json(std::ostream& out, const json& j, const std::string& format) {
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        // flat key,value rows; arrays inline
        for (auto& [k, v] : j.items()) out << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        for (auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

SkewShape shape_from(const std::string& lambda, const std::string& mu, const std::string& shape) {
    if (!shape.empty()) return SkewShape::parse(shape);
    return SkewShape(Partition::parse(lambda), Partition::parse(mu));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tableau modules, branching rules and orbit harmonics for transformation "
                 "monoids, verified in exact rational arithmetic"};
    app.require_subcommand(1);

    std::string kind_s = "is", format = "json", lambda_s, mu_s, shape_s, element_s, cache_dir,
                out_dir, side = "upper", tab_kind = "semistandard";
    int m = 2, n = 2, r = 2, s = 1, dmax = -1, rounds = 25, samples = 25, jobs = 2, rmax = -1;
    unsigned long long seed = 1;
    bool slow = false, structural = false, list_elements = false;

    app.add_option("--cache-dir", cache_dir, "directory for the module disk cache");

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json | table | csv");
        cmd->add_option("--seed", seed, "PRNG seed for sampled checks");
    };

    auto* c_tab = app.add_subcommand("tableaux", "enumerate tableaux of a shape");
    c_tab->add_option("--shape", shape_s, "skew shape, e.g. 2,1/1")->required();
    c_tab->add_option("--n", n, "entry alphabet [n]");
    c_tab->add_option("--kind", tab_kind,
                      "all | semistandard | co_semistandard | distinct_entries | standard_distinct");
    add_common(c_tab);

    auto* c_dims = app.add_subcommand("dims", "dimension of R(n)^{lambda/mu}");
    c_dims->add_option("--kind", kind_s, "is | pt | t | sym");
    c_dims->add_option("--n", n)->required();
    c_dims->add_option("--lambda", lambda_s)->required();
    c_dims->add_option("--mu", mu_s);
    c_dims->add_option("--side", side, "upper | lower");
    add_common(c_dims);

    auto* c_mon = app.add_subcommand("monoid", "enumerate a transformation monoid");
    c_mon->add_option("--kind", kind_s);
    c_mon->add_option("--n", n)->required();
    c_mon->add_option("--element", element_s, "partial map, e.g. 2,-,1");
    c_mon->add_flag("--list", list_elements, "list all elements");
    add_common(c_mon);

    auto* c_mod = app.add_subcommand("module", "build a module and dump action matrices");
    c_mod->add_option("--kind", kind_s);
    c_mod->add_option("--n", n)->required();
    c_mod->add_option("--lambda", lambda_s);
    c_mod->add_option("--mu", mu_s);
    c_mod->add_option("--shape", shape_s);
    c_mod->add_option("--side", side, "upper | lower | schur | weyl");
    add_common(c_mod);

    auto* c_b1 = app.add_subcommand("branch1", "first branching rule check");
    c_b1->add_option("--kind", kind_s);
    c_b1->add_option("--n", n)->required();
    c_b1->add_option("--lambda", lambda_s)->required();
    add_common(c_b1);

    auto* c_b2 = app.add_subcommand("branch2", "second branching rule check");
    c_b2->add_option("--kind", kind_s);
    c_b2->add_option("--n", n)->required();
    c_b2->add_option("--s", s)->required();
    c_b2->add_option("--lambda", lambda_s)->required();
    c_b2->add_option("--mu", mu_s);
    c_b2->add_flag("--structural", structural, "also build the invariant chain");
    add_common(c_b2);

    auto* c_b3 = app.add_subcommand("branch3", "n-1 branching specialization");
    c_b3->add_option("--kind", kind_s);
    c_b3->add_option("--n", n)->required();
    c_b3->add_option("--lambda", lambda_s)->required();
    c_b3->add_option("--mu", mu_s);
    add_common(c_b3);

    auto* c_dist = app.add_subcommand("distinct", "pairwise non-isomorphism table");
    c_dist->add_option("--kind", kind_s);
    c_dist->add_option("--n", n)->required();
    c_dist->add_option("--rmax", rmax);
    add_common(c_dist);

    auto* c_irr = app.add_subcommand("irreducible", "Norton irreducibility search");
    c_irr->add_option("--kind", kind_s);
    c_irr->add_option("--n", n)->required();
    c_irr->add_option("--lambda", lambda_s)->required();
    c_irr->add_option("--rounds", rounds);
    add_common(c_irr);

    auto* c_cau = app.add_subcommand("cauchy", "graded quotient chain of k[x]/J");
    c_cau->add_option("--kind", kind_s);
    c_cau->add_option("--m", m)->required();
    c_cau->add_option("--n", n)->required();
    c_cau->add_option("--r", r)->required();
    c_cau->add_flag("--structural", structural);
    add_common(c_cau);

    auto* c_skew = app.add_subcommand("skew-cauchy", "graded quotient chain of k<y>/J'");
    c_skew->add_option("--kind", kind_s);
    c_skew->add_option("--m", m)->required();
    c_skew->add_option("--n", n)->required();
    c_skew->add_option("--r", r)->required();
    c_skew->add_option("--samples", samples);
    add_common(c_skew);

    auto* c_har = app.add_subcommand("harmonics", "orbit harmonics quotient of a monoid locus");
    c_har->add_option("--kind", kind_s);
    c_har->add_option("--n", n)->required();
    c_har->add_option("--dmax", dmax);
    add_common(c_har);

    auto* c_all = app.add_subcommand("verify-all", "run the full acceptance suite");
    bool fast = false;
    c_all->add_flag("--slow", slow, "include the n=4 orbit-harmonics run");
    c_all->add_flag("--fast", fast, "fast suite only (the default)");
    c_all->add_option("--jobs", jobs, "worker threads");
    add_common(c_all);

    auto* c_fix = app.add_subcommand("fixtures", "write golden JSON fixtures");
    c_fix->add_option("--out", out_dir)->required();
    add_common(c_fix);

    std::vector<std::string> argv_like(args.rbegin(), args.rend());
    try {
        app.parse(argv_like);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (cache_dir.empty())
        if (const char* env = std::getenv("MTAB_CACHE_DIR")) cache_dir = env;
    if (!cache_dir.empty()) set_module_cache_dir(cache_dir);

    try {
        if (*c_tab) {
            SkewShape shape = SkewShape::parse(shape_s);
            auto ts = enumerate_tableaux(shape, n, tableau_kind_parse(tab_kind));
            json j{{"schema_version", kReportSchemaVersion},
                   {"shape", shape.to_string()},
                   {"n", n},
                   {"kind", tab_kind},
                   {"count", ts.size()}};
            json arr = json::array();
            for (auto& T : ts) arr.push_back(tableau_json(T));
            j["tableaux"] = arr;
            print_json(out, j, format);
            return 0;
        }
        if (*c_dims) {
            SkewShape shape = shape_from(lambda_s, mu_s, "");
            MonoidModule M =
                build_R_module(monoid_kind_parse(kind_s), n, shape, side != "lower");
            json j{{"schema_version", kReportSchemaVersion},
                   {"kind", kind_s},
                   {"n", n},
                   {"shape", shape.to_string()},
                   {"side", side},
                   {"dim", M.dim()}};
            print_json(out, j, format);
            return 0;
        }
        if (*c_mon) {
            MonoidKind kind = monoid_kind_parse(kind_s);
            json j{{"schema_version", kReportSchemaVersion}, {"kind", kind_s}, {"n", n}};
            if (!element_s.empty()) {
                PartialTransformation p = PartialTransformation::parse(element_s);
                j["element"] = p.to_string();
                j["total"] = p.total();
                j["injective"] = p.injective();
                j["bijective"] = p.bijective();
                j["in_kind"] = p.in_kind(kind);
                j["matrix"] = matrix_json(p.matrix());
            } else {
                auto elems = enumerate_monoid(kind, n);
                j["cardinality"] = elems.size();
                j["closed_form"] = monoid_cardinality_formula(kind, n);
                if (list_elements) {
                    json arr = json::array();
                    for (auto& e : elems) arr.push_back(e.to_string());
                    j["elements"] = arr;
                }
            }
            print_json(out, j, format);
            return 0;
        }
        if (*c_mod) {
            SkewShape shape = shape_from(lambda_s, mu_s, shape_s);
            MonoidKind kind = monoid_kind_parse(kind_s);
            json j{{"schema_version", kReportSchemaVersion},
                   {"kind", kind_s},
                   {"n", n},
                   {"shape", shape.to_string()},
                   {"side", side}};
            json gens = json::array();
            if (side == "schur" || side == "weyl") {
                auto mod = side == "schur" ? cached_schur_module(shape, n)
                                           : cached_weyl_module(shape, n);
                j["dim"] = mod->dim();
                for (auto& sg : coxeter_generators(n))
                    gens.push_back(
                        {{"element",
                          "sigma=" + PartialTransformation::from_permutation(sg).to_string()},
                         {"matrix", matrix_json(mod->act(sg))}});
            } else {
                MonoidModule M = build_R_module(kind, n, shape, side != "lower");
                j["dim"] = M.dim();
                for (auto& g : monoid_generators(kind, n))
                    gens.push_back({{"element", g.to_string()}, {"matrix", matrix_json(M.act(g))}});
            }
            j["generators"] = gens;
            print_json(out, j, format);
            return 0;
        }

        Report rep;
        bool have_report = false;
        if (*c_b1) {
            rep = verify_branch1(Partition::parse(lambda_s), n);
            have_report = true;
        } else if (*c_b2) {
            rep = verify_branch2(monoid_kind_parse(kind_s), shape_from(lambda_s, mu_s, ""), n, s,
                             structural);
            have_report = true;
        } else if (*c_b3) {
            rep = verify_branch3(monoid_kind_parse(kind_s), shape_from(lambda_s, mu_s, ""), n);
            have_report = true;
        } else if (*c_cau) {
            rep = cauchy_quotient_check(monoid_kind_parse(kind_s), m, n, r, structural);
            have_report = true;
        } else if (*c_skew) {
            rep = skew_cauchy_quotient_check(monoid_kind_parse(kind_s), m, n, r, samples, seed);
            have_report = true;
        } else if (*c_har) {
            rep = check_gr_equals_J(monoid_kind_parse(kind_s), n, dmax < 0 ? n * n : dmax);
            json j = rep.to_json();
            j["hilbert"] = rep.data["hilbert"];
            j["total"] = rep.data["total"];
            j["gr_equals_J"] = rep.passed();
            print_json(out, j, format);
            return rep.passed() ? 0 : 1;
        }
        if (have_report) {
            print_json(out, rep.to_json(), format);
            return rep.passed() ? 0 : 1;
        }

        if (*c_dist) {
            NonIsoTable t = nonisomorphism_table(monoid_kind_parse(kind_s), n,
                                                 rmax < 0 ? n : rmax);
            json j{{"schema_version", kReportSchemaVersion},
                   {"kind", kind_s},
                   {"n", n},
                   {"consistent", t.consistent}};
            json names = json::array();
            for (auto& l : t.lambdas) names.push_back(l.to_string());
            j["lambdas"] = names;
            json mat = json::array();
            for (auto& row : t.distinct) {
                json rj = json::array();
                for (bool b : row) rj.push_back(b ? "distinct" : "possibly_isomorphic");
                mat.push_back(std::move(rj));
            }
            j["table"] = mat;
            if (!t.detail.empty()) j["detail"] = t.detail;
            print_json(out, j, format);
            return t.consistent ? 0 : 1;
        }
        if (*c_irr) {
            MonoidModule M = build_R_module(monoid_kind_parse(kind_s), n,
                                            SkewShape(Partition::parse(lambda_s)), true);
            IrredResult res = irreducibility_test(M, seed, rounds);
            json j{{"schema_version", kReportSchemaVersion},
                   {"kind", kind_s},
                   {"n", n},
                   {"lambda", lambda_s},
                   {"dim", M.dim()},
                   {"seed", seed},
                   {"rounds_used", res.rounds_used},
                   {"certificate", res.certificate}};
            j["status"] = res.status == IrredResult::Status::Irreducible ? "irreducible"
                          : res.status == IrredResult::Status::Reducible ? "reducible"
                                                                         : "inconclusive";
            if (res.witness) j["witness_dim"] = res.witness->dim();
            print_json(out, j, format);
            return res.status == IrredResult::Status::Inconclusive ? 1 : 0;
        }
        if (*c_all) {
            auto results = run_acceptance(slow && !fast, seed, jobs);
            bool all_ok = true;
            for (auto& c : results) {
                json line = c.report.to_json();
                line["criterion"] = c.number;
                line["name"] = c.name;
                line["seconds"] = c.seconds;
                if (format == "json") {
                    out << line.dump() << "\n";
                } else {
                    out << (c.report.passed() ? "[PASS] " : "[FAIL] ") << c.number << " "
                        << c.name << " (" << c.seconds << "s)\n";
                }
                all_ok = all_ok && c.report.passed();
            }
            out << (all_ok ? "all criteria passed\n" : "some criteria FAILED\n");
            return all_ok ? 0 : 1;
        }
        if (*c_fix) {
            namespace fs = std::filesystem;
            fs::path dir = fs::path(out_dir) / "v1";
            fs::create_directories(dir);
            json dims = json::array();
            for (int nn = 1; nn <= 3; ++nn)
                for (int rr = 0; rr <= nn; ++rr)
                    for (auto& l : enumerate_partitions(rr))
                        dims.push_back({{"n", nn},
                                        {"lambda", l.to_string()},
                                        {"dim", build_R_module(MonoidKind::IS, nn,
                                                               SkewShape(l), true)
                                                    .dim()}});
            std::ofstream(dir / "dims.json") << json{{"schema_version", kReportSchemaVersion},
                                                     {"dims", dims}}
                                                    .dump(1)
                                             << "\n";
            json cards = json::array();
            for (int nn = 1; nn <= 5; ++nn)
                cards.push_back({{"n", nn},
                                 {"is", monoid_cardinality_formula(MonoidKind::IS, nn)},
                                 {"pt", monoid_cardinality_formula(MonoidKind::PT, nn)},
                                 {"t", monoid_cardinality_formula(MonoidKind::T, nn)}});
            std::ofstream(dir / "cardinalities.json")
                << json{{"schema_version", kReportSchemaVersion}, {"cardinalities", cards}}.dump(1)
                << "\n";
            json chars = json::array();
            for (int rr = 1; rr <= 4; ++rr)
                for (auto& l : enumerate_partitions(rr)) {
                    json vals = json::object();
                    for (auto& [rho, v] : specht_character(l).values)
                        vals[rho.to_string()] = rat_str(v);
                    chars.push_back({{"lambda", l.to_string()}, {"values", vals}});
                }
            std::ofstream(dir / "characters.json")
                << json{{"schema_version", kReportSchemaVersion}, {"characters", chars}}.dump(1)
                << "\n";
            json hil = json::array();
            for (int nn = 1; nn <= 2; ++nn)
                for (MonoidKind kind : {MonoidKind::IS, MonoidKind::PT, MonoidKind::T})
                    hil.push_back({{"kind", monoid_kind_name(kind)},
                                   {"n", nn},
                                   {"hilbert", hilbert_function(kind, nn)}});
            std::ofstream(dir / "hilbert.json")
                << json{{"schema_version", kReportSchemaVersion}, {"hilbert", hil}}.dump(1)
                << "\n";
            out << "fixtures written to " << (dir.string()) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "check failure: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace mtab
