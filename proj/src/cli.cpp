#include "quadstar/cli.hpp"

#include "quadstar/errors.hpp"
#include "quadstar/json_io.hpp"
#include "quadstar/real_roots.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>

namespace quadstar::cli {

namespace {

constexpr const char* synopsis =
    "usage: quadstar <command> [options] [--format text|json]\n"
    "  charpoly  (--spec L | --path N | --cycle N | --smith KIND [--n N]) [--expanded]\n"
    "  classify  (--spec L | --path N | --cycle N | --smith KIND [--n N])\n"
    "  family    list | enumerate --max-vertices N | gen --id TAG [--n1..--n5 K] [--a A --b B]\n"
    "            | match --spec L\n"
    "  pell      --N N --count K\n"
    "  certify   --max-vertices N [--threads T]\n"
    "  table7    --max-n5 N\n"
    "  smith     --kind Wn|S5|E7|E8|E9|Cn [--n N]\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::optional<std::string> spec;
    std::optional<std::size_t> path;
    std::optional<std::size_t> cycle;
    std::optional<std::string> smith;
    std::size_t n = 0;

    void attach(CLI::App* cmd) {
        auto* s = cmd->add_option("--spec", spec, "starlike spec, e.g. 1,4");
        auto* p = cmd->add_option("--path", path, "path on N vertices");
        auto* c = cmd->add_option("--cycle", cycle, "cycle on N vertices");
        auto* g = cmd->add_option("--smith", smith, "Smith graph kind");
        s->excludes(p, c, g);
        p->excludes(c, g);
        c->excludes(g);
        cmd->add_option("--n", n, "vertex count for Wn and Cn");
    }

    bool is_starlike_tree() const { return spec && StarlikeSpec::parse(*spec).center_degree() >= 3; }

    std::string describe() const {
        if (spec) return "spec " + StarlikeSpec::parse(*spec).to_string();
        if (path) return "path " + std::to_string(*path);
        if (cycle) return "cycle " + std::to_string(*cycle);
        if (smith) return "smith " + *smith + (n ? " " + std::to_string(n) : "");
        return "";
    }

    IntPoly charpoly() const {
        if (spec) return starlike_charpoly(StarlikeSpec::parse(*spec));
        if (path) {
            if (*path < 1) throw InvalidParams("path needs at least 1 vertex");
            return path_charpoly(*path);
        }
        if (cycle) return cycle_charpoly(*cycle);
        if (smith) return charpoly_matrix(smith_graph(parse_smith_kind(*smith), n));
        throw UsageError("one of --spec, --path, --cycle, --smith is required");
    }
};

// Degree <= 2 factors where they exist, squarefree pieces for the rest.
FactoredPoly display_factors(const IntPoly& p, const ClassifierOptions& opts) {
    const QuadraticCertificate cert = decompose_deg_le2(p, opts);
    FactoredPoly f = cert.factors;
    if (!cert.residual.is_one()) {
        const FactoredPoly rest = squarefree_decomposition(cert.residual);
        f.insert(f.end(), rest.begin(), rest.end());
    }
    canonicalize(f);
    return f;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string class_line(const SpectralClass& c) {
    std::string s = "kind=" + std::string(to_string(c.kind));
    if (c.c) s += " c=" + c.c->get_str();
    if (c.a) s += " a=" + c.a->get_str() + " b=" + c.b->get_str();
    if (const auto d = c.delta())
        s += " delta=" + d->get_str() + " delta_squarefree=" + (*c.delta_squarefree() ? "true" : "false");
    return s;
}

void print_instance_text(std::ostream& out, const FamilyInstance& f) {
    out << "id=" << to_string(f.id) << "\n";
    out << "spec=" << f.spec.to_string() << "\n";
    out << "vertices=" << f.spec.vertex_count() << "\n";
    out << "params=";
    bool first = true;
    for (const auto& [k, v] : f.params) {
        out << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    out << "\n";
    out << "f=" << to_factored_string(f.predicted) << "\n";
    if (f.delta) out << "delta=" << f.delta->get_str() << " delta_squarefree=" << (*f.delta_squarefree ? "true" : "false") << "\n";
    out << "integral=" << (f.integral ? "true" : "false") << "\n";
}

std::string fixed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic starlike trees: characteristic polynomials and classification", "quadstar"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.fallthrough();

    Source charpoly_src, classify_src;
    bool expanded = false;
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly_src.attach(charpoly);
    charpoly->add_flag("--expanded", expanded, "print the expanded polynomial");

    auto* classify = app.add_subcommand("classify", "quadratic / integral classification");
    classify_src.attach(classify);

    auto* family = app.add_subcommand("family", "the nine quadratic families");
    family->require_subcommand(1);
    auto* family_list = family->add_subcommand("list", "list the table rows");
    std::size_t enum_max = 0;
    auto* family_enum = family->add_subcommand("enumerate", "all instances up to a vertex bound");
    family_enum->add_option("--max-vertices", enum_max)->required()->check(CLI::Range(4, 1000));
    std::string gen_id;
    std::array<std::optional<long>, 5> gen_n;
    std::optional<long> gen_a, gen_b;
    auto* family_gen = family->add_subcommand("gen", "instantiate one row");
    family_gen->add_option("--id", gen_id)->required();
    for (std::size_t i = 0; i < 5; ++i)
        family_gen->add_option("--n" + std::to_string(i + 1), gen_n[i]);
    family_gen->add_option("--a", gen_a);
    family_gen->add_option("--b", gen_b);
    std::string match_spec;
    auto* family_match = family->add_subcommand("match", "find the row of a spec");
    family_match->add_option("--spec", match_spec)->required();

    std::string pell_n;
    std::size_t pell_count = 1;
    auto* pell = app.add_subcommand("pell", "solutions of x^2 - N y^2 = -1");
    pell->add_option("--N", pell_n)->required();
    pell->add_option("--count", pell_count)->check(CLI::Range(1, 100000));

    std::size_t certify_max = 0;
    unsigned certify_threads = 1;
    auto* certify_cmd = app.add_subcommand("certify", "exhaustive classification check");
    certify_cmd->add_option("--max-vertices", certify_max)->required()->check(CLI::Range(4, 40));
    certify_cmd->add_option("--threads", certify_threads, "0 = hardware concurrency");

    long table_max = 1000;
    auto* table7 = app.add_subcommand("table7", "T_{0,0,1,0,n5} instances");
    table7->add_option("--max-n5", table_max)->check(CLI::Range(1L, 100000000L));

    std::string smith_kind;
    std::size_t smith_n = 0;
    auto* smith = app.add_subcommand("smith", "graphs of spectral radius 2");
    smith->add_option("--kind", smith_kind)->required();
    smith->add_option("--n", smith_n);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << synopsis;
        return 2;
    }

    const bool json = format == "json";
    try {
        const ClassifierOptions opts = ClassifierOptions::from_environment();

        if (charpoly->parsed()) {
            const IntPoly p = charpoly_src.charpoly();
            const FactoredPoly f = display_factors(p, opts);
            if (json) {
                print_json(out, {{"source", charpoly_src.describe()},
                                 {"degree", p.degree()},
                                 {"coeffs", to_json(p)},
                                 {"factors", to_json(f)},
                                 {"factored", to_factored_string(f)}});
            } else {
                out << (expanded ? p.to_string() : to_factored_string(f)) << "\n";
            }
        } else if (classify->parsed()) {
            const IntPoly p = classify_src.charpoly();
            SpectralClass c = classify_poly(p, opts);
            if (!classify_src.is_starlike_tree()) c = without_form(std::move(c));
            std::optional<PathCycleVerdict> pc;
            if (classify_src.path) pc = classify_path_cycle(PathOrCycle::path, *classify_src.path, opts);
            if (classify_src.cycle) pc = classify_path_cycle(PathOrCycle::cycle, *classify_src.cycle, opts);
            if (json) {
                Json j = to_json(c);
                if (pc) j["phi_degree"] = pc->phi_degree;
                print_json(out, j);
            } else {
                out << class_line(c) << "\n";
                out << "factors=" << to_factored_string(c.certificate.factors) << "\n";
                out << "residual=" << c.certificate.residual.to_string() << "\n";
                if (pc) out << "phi_degree=" << pc->phi_degree << "\n";
            }
        } else if (family->parsed()) {
            if (family_list->parsed()) {
                Json rows = Json::array();
                for (FamilyId id : all_families) {
                    const auto z = row_zvector(id);
                    if (json) {
                        rows.push_back({{"id", std::string(to_string(id))},
                                        {"form", is_form_one(id) ? "I" : "II"},
                                        {"shape", family_shape(id)},
                                        {"restriction", std::string(family_restriction(id))},
                                        {"z", z}});
                    } else {
                        out << to_string(id) << "  form " << (is_form_one(id) ? "I " : "II") << "  "
                            << family_shape(id) << "  z=(" << z[0] << "," << z[1] << "," << z[2]
                            << "," << z[3] << "," << z[4] << ")  " << family_restriction(id) << "\n";
                    }
                }
                if (json) print_json(out, rows);
            } else if (family_enum->parsed()) {
                const auto all = enumerate_instances(enum_max);
                if (json) {
                    Json arr = Json::array();
                    for (const auto& f : all) arr.push_back(to_json(f));
                    print_json(out, arr);
                } else {
                    for (const auto& f : all)
                        out << f.spec.vertex_count() << "  " << to_string(f.id) << "  (" << f.spec.to_string()
                            << ")  " << to_factored_string(f.predicted) << "\n";
                }
            } else if (family_gen->parsed()) {
                const FamilyId id = parse_family_id(gen_id);
                FamilyParams params;
                for (std::size_t i = 0; i < 5; ++i)
                    if (gen_n[i]) params["n" + std::to_string(i + 1)] = *gen_n[i];
                if (gen_a) params["a"] = *gen_a;
                if (gen_b) params["b"] = *gen_b;
                const FamilyInstance f = instantiate(id, params);
                if (json)
                    print_json(out, to_json(f));
                else
                    print_instance_text(out, f);
            } else if (family_match->parsed()) {
                const StarlikeSpec spec = StarlikeSpec::parse(match_spec);
                const auto f = match_family(spec);
                if (json) {
                    print_json(out, {{"spec", spec_json(spec)}, {"match", f ? to_json(*f) : Json(nullptr)}});
                } else if (f) {
                    print_instance_text(out, *f);
                } else {
                    out << "no match for (" << spec.to_string() << ")\n";
                }
            }
        } else if (pell->parsed()) {
            mpz_class n;
            if (n.set_str(pell_n, 10) != 0) throw InvalidParams("malformed N '" + pell_n + "'");
            const auto sols = pell_negative(n, pell_count);
            if (json) {
                Json arr = Json::array();
                for (const auto& s : sols) arr.push_back(to_json(s));
                print_json(out, arr);
            } else {
                for (const auto& s : sols) out << s.x.get_str() << " " << s.y.get_str() << "\n";
            }
        } else if (certify_cmd->parsed()) {
            const CertificationReport rep = certify(certify_max, certify_threads, opts);
            if (json) {
                print_json(out, to_json(rep));
            } else {
                out << "max_vertices=" << rep.max_vertices << "\n";
                out << "total_specs=" << rep.total_specs << "\n";
                out << "quadratic_specs=" << rep.quadratic_specs.size() << "\n";
                for (const auto& q : rep.quadratic_specs)
                    out << "  (" << q.spec.to_string() << ")  " << q.tag << "  " << class_line(q.cls)
                        << "  lambda1=" << fixed(q.top_eigenvalues[0]) << "\n";
                out << "counterexamples=" << rep.counterexamples.size() << "\n";
                for (const auto& c : rep.counterexamples)
                    out << "  (" << c.spec.to_string() << ")  " << c.reason << "\n";
                out << "violations=" << rep.violations.size() << "\n";
                for (const auto& v : rep.violations)
                    out << "  (" << v.spec.to_string() << ")  " << v.check << ": " << v.detail << "\n";
                out << "discrepancy_notes=" << rep.discrepancy_notes.size() << "\n";
                for (const auto& n : rep.discrepancy_notes) out << "  " << n.text << "\n";
            }
        } else if (table7->parsed()) {
            const auto rows = reproduce_table7(table_max);
            if (json) {
                Json arr = Json::array();
                for (const auto& f : rows)
                    arr.push_back({{"n5", std::to_string(f.params.at("n5"))},
                                   {"a", std::to_string(f.params.at("a"))},
                                   {"b", std::to_string(f.params.at("b"))},
                                   {"delta", f.delta->get_str()},
                                   {"delta_squarefree", *f.delta_squarefree},
                                   {"factors", to_json(f.predicted)},
                                   {"factored", to_factored_string(f.predicted)}});
                print_json(out, arr);
            } else {
                for (const auto& f : rows)
                    out << f.params.at("n5") << " " << f.params.at("a") << " " << f.params.at("b") << " "
                        << f.delta->get_str() << "  " << to_factored_string(f.predicted) << "\n";
            }
        } else if (smith->parsed()) {
            const SmithKind kind = parse_smith_kind(smith_kind);
            const GraphAdj g = smith_graph(kind, smith_n);
            const IntPoly p = charpoly_matrix(g);
            const SpectralClass c = without_form(classify_poly(p, opts));
            const auto roots = real_roots(p, 40UL);
            const double lambda1 = roots.back().value();
            if (json) {
                Json edges = Json::array();
                for (auto [u, v] : g.edges()) edges.push_back({u, v});
                print_json(out, {{"kind", std::string(to_string(kind))},
                                 {"vertices", g.vertex_count()},
                                 {"edges", edges},
                                 {"coeffs", to_json(p)},
                                 {"factored", to_factored_string(display_factors(p, opts))},
                                 {"class", std::string(to_string(c.kind))},
                                 {"lambda1", lambda1}});
            } else {
                out << "# " << to_string(kind) << " on " << g.vertex_count() << " vertices, lambda1="
                    << fixed(lambda1) << ", " << to_string(c.kind) << "\n";
                out << g.edge_list();
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << synopsis;
        return 2;
    } catch (const DomainError& e) {
        err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << Json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace quadstar::cli
