// Command-line front end: batch subcommands over residual points, residues,
// the extra-special bijection, spectral transfer steps and the uniqueness
// verification engine.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "hecke/cuspidal.hpp"
#include "hecke/json_io.hpp"
#include "hecke/parallel.hpp"
#include "hecke/stm.hpp"

using namespace hecke;

namespace {

struct Options {
    std::string params;
    long rank = 0;
    std::string lm, lp;
    std::string format = "table";
    int jobs = 1;
};

std::pair<Q4, Q4> parse_params(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected --params m_minus,m_plus, got '" + s + "'");
    return {Q4::parse(s.substr(0, comma)), Q4::parse(s.substr(comma + 1))};
}

HeckeParams make_params(const Options& o) {
    auto [mm, mp] = parse_params(o.params);
    return classify_params(mm, mp, o.rank);
}

std::string coords_text(const CoordinateVector& c) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << (c[i].first > 0 ? "+" : "-") << "v^" << c[i].second;
    }
    os << "}";
    return os.str();
}

std::string shape_text(const ResidueResult& r) {
    std::ostringstream os;
    os << "even " << r.even_part.str() << "  odd " << r.odd_cycl.str();
    return os.str();
}

int run_enumerate(const Options& o) {
    HeckeParams p = make_params(o);
    auto labels = enumerate_residual_points(p);
    auto points = parallel_map<std::pair<Partition, Partition>, ResidualPoint>(
        labels, o.jobs, [&](const auto& lab) { return coordinates(p, lab.first, lab.second); });
    if (o.format == "json") {
        std::cout << "{\"params\":" << json::params_json(p) << ",\"points\":[";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << json::point_json(points[i]);
        }
        std::cout << "]}\n";
    } else if (o.format == "csv") {
        std::cout << "lambda_minus,lambda_plus,coords\n";
        for (auto& pt : points)
            std::cout << "\"" << pt.lambda_minus.str() << "\",\"" << pt.lambda_plus.str()
                      << "\",\"" << coords_text(pt.coords) << "\"\n";
    } else {
        for (auto& pt : points)
            std::cout << pt.lambda_minus.str() << " " << pt.lambda_plus.str() << "  "
                      << coords_text(pt.coords) << "\n";
    }
    return 0;
}

int run_residue(const Options& o) {
    HeckeParams p = make_params(o);
    ResidualPoint pt = coordinates(p, Partition::parse(o.lm), Partition::parse(o.lp));
    ResidueResult r = residue_q(p, pt.coords);
    if (o.format == "json") {
        std::cout << json::point_with_residue_json(pt, r) << "\n";
    } else if (o.format == "csv") {
        std::cout << "lambda_minus,lambda_plus,even_mult,odd_cycl\n\"" << pt.lambda_minus.str()
                  << "\",\"" << pt.lambda_plus.str() << "\",\"" << r.even_part.str() << "\",\""
                  << r.odd_cycl.str() << "\"\n";
    } else {
        std::cout << "point   " << pt.lambda_minus.str() << " " << pt.lambda_plus.str() << "  "
                  << coords_text(pt.coords) << "\n";
        std::cout << "residue " << shape_text(r) << "\n";
        std::cout << "factors " << cyclo_str(r.canonical) << "\n";
    }
    return 0;
}

int run_classify(const Options& o) {
    HeckeParams p = make_params(o);
    auto hits = classify_no_odd(p);
    if (o.format == "json") {
        std::cout << "{\"params\":" << json::params_json(p) << ",\"no_odd\":[";
        for (std::size_t i = 0; i < hits.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "{\"lambda_minus\":" << json::partition_json(hits[i].first)
                      << ",\"lambda_plus\":" << json::partition_json(hits[i].second) << "}";
        }
        std::cout << "]}\n";
    } else {
        for (auto& [lm, lp] : hits) std::cout << lm.str() << " " << lp.str() << "\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    HeckeParams p = make_params(o);
    UniquenessReport rep = verify_uniqueness(p, o.jobs);
    if (o.format == "json") {
        std::cout << json::report_json(rep) << "\n";
    } else {
        for (auto& t : rep.templates) {
            std::cout << (t.pass ? "[pass] " : "[FAIL] ");
            for (std::size_t i = 0; i < t.labels.size(); ++i)
                std::cout << (i ? "=" : "") << t.labels[i];
            std::cout << "  source " << t.source.str() << "  orbits " << t.solution_orbits.size();
            if (!t.solution_orbits.empty()) {
                std::cout << "  {";
                for (auto& pt : t.solution_orbits.front())
                    std::cout << " " << pt.lambda_minus.str() << "," << pt.lambda_plus.str();
                std::cout << " }";
            }
            if (!t.note.empty()) std::cout << "  (" << t.note << ")";
            std::cout << "\n";
        }
        for (auto& f : rep.failures) std::cout << "[FAIL] " << f << "\n";
        std::cout << (rep.pass ? "all checks passed" : "verification failed") << "\n";
    }
    return rep.pass ? 0 : 1;
}

int run_oracle(const Options& o, long bound) {
    HeckeParams p = make_params(o);
    if (bound < 0) bound = default_exponent_bound(p);
    auto pts = brute_force_residual_points(p, bound);
    if (o.format == "json") {
        std::cout << "{\"params\":" << json::params_json(p) << ",\"bound\":" << bound
                  << ",\"points\":[";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << json::coords_json(pts[i]);
        }
        std::cout << "]}\n";
    } else {
        for (auto& c : pts) std::cout << coords_text(c) << "\n";
    }
    return 0;
}

int run_stm_apply(const Options& o, const std::string& kind, int side) {
    HeckeParams p = make_params(o);
    LabelledPoint pt{Partition::parse(o.lm), Partition::parse(o.lp)};
    std::pair<HeckeParams, LabelledPoint> out{p, pt};
    if (kind == "eta")
        out = iso_apply(STMKind::IsoEta, p, pt);
    else if (kind == "eta_plus")
        out = iso_apply(STMKind::IsoEtaPlus, p, pt);
    else if (kind == "eta_minus")
        out = iso_apply(STMKind::IsoEtaMinus, p, pt);
    else if (kind == "translate")
        out = translate_step(p, pt, side);
    else if (kind == "extraspecial")
        out = extraspecial_map(p, pt);
    else
        throw std::invalid_argument("unknown step kind '" + kind + "'");
    if (o.format == "json") {
        std::cout << "{\"params\":" << json::params_json(out.first)
                  << ",\"lambda_minus\":" << json::partition_json(out.second.lambda_minus)
                  << ",\"lambda_plus\":" << json::partition_json(out.second.lambda_plus) << "}\n";
    } else {
        std::cout << out.first.str() << "  " << out.second.lambda_minus.str() << " "
                  << out.second.lambda_plus.str() << "\n";
    }
    return 0;
}

int run_stm_trace(const Options& o) {
    HeckeParams p = make_params(o);
    auto steps = reduce_to_minimal(p);
    if (o.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << json::stm_step_json(steps[i]);
        }
        std::cout << "]\n";
    } else {
        for (auto& s : steps)
            std::cout << to_string(s.kind) << ": " << s.source.str() << " -> " << s.target.str()
                      << "\n";
        if (steps.empty()) std::cout << "already minimal: " << p.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residual points, regularized residues and cuspidal degree verification "
                 "for type-C parameter families"};
    app.require_subcommand(1);

    Options opt;
    std::string lambda_arg, m_arg, rho_arg, kind_arg;
    int side = +1;
    long bound = -1;
    bool render = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--params", opt.params, "parameter pair m_minus,m_plus (e.g. 1/2,1/2)")
            ->required();
        c->add_option("--rank", opt.rank, "rank n")->required();
        c->add_option("--format", opt.format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        c->add_option("--jobs", opt.jobs, "worker threads over independent points");
    };

    auto* espec = app.add_subcommand("espec", "extra-special bijection");
    auto* enc = espec->add_subcommand("encode", "odd-distinct partition -> (m, rho)");
    enc->add_option("--lambda", lambda_arg, "comma-separated parts")->required();
    enc->add_option("--format", opt.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    enc->add_flag("--render", render, "print the decomposed tableau");
    auto* dec = espec->add_subcommand("decode", "(m, rho) -> odd-distinct partition");
    dec->add_option("--m", m_arg, "quarter-integral parameter, e.g. 15/4")->required();
    dec->add_option("--rho", rho_arg, "comma-separated shape; empty for the zero partition");
    dec->add_option("--format", opt.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    dec->add_flag("--render", render, "print the decomposed tableau");
    espec->require_subcommand(1);

    auto* residual = app.add_subcommand("residual", "residual points");
    auto* renum = residual->add_subcommand("enumerate", "list labels and coordinates");
    add_common(renum);
    residual->require_subcommand(1);

    auto* residue = app.add_subcommand("residue", "regularized residues");
    auto* rcomp = residue->add_subcommand("compute", "residue of one point");
    add_common(rcomp);
    rcomp->add_option("--lm", opt.lm, "lambda_minus, comma-separated");
    rcomp->add_option("--lp", opt.lp, "lambda_plus, comma-separated");
    residue->require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classification scans");
    auto* noodd = classify->add_subcommand("no-odd", "points with no odd cyclotomic content");
    add_common(noodd);
    classify->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "verification engine");
    auto* uniq = verify->add_subcommand("uniqueness", "one Aut_es-orbit per template");
    add_common(uniq);
    verify->require_subcommand(1);

    auto* stm = app.add_subcommand("stm", "spectral transfer steps");
    auto* sapply = stm->add_subcommand("apply", "apply one generator step");
    add_common(sapply);
    sapply->add_option("--kind", kind_arg, "eta|eta_plus|eta_minus|translate|extraspecial")
        ->required();
    sapply->add_option("--side", side, "-1 or +1 (translations)");
    sapply->add_option("--lm", opt.lm, "lambda_minus");
    sapply->add_option("--lp", opt.lp, "lambda_plus");
    auto* strace = stm->add_subcommand("trace", "chain of steps to a minimal object");
    add_common(strace);
    stm->require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "exhaustive checks");
    auto* brute = oracle->add_subcommand("brute-force", "scan coordinate multisets by defect");
    add_common(brute);
    brute->add_option("--bound", bound, "v-exponent bound (default from the parameters)");
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enc) {
            ESPair p = encode(Partition::parse(lambda_arg));
            if (opt.format == "json")
                std::cout << json::espair_json(p) << "\n";
            else
                std::cout << "m = " << p.m.str() << "  rho = " << p.rho.str() << "\n";
            if (render) std::cout << render_decomposition(p);
            return 0;
        }
        if (*dec) {
            ESPair p{Q4::parse(m_arg), Partition::parse(rho_arg)};
            Partition lambda = decode(p);
            if (opt.format == "json")
                std::cout << json::partition_json(lambda) << "\n";
            else
                std::cout << lambda.str() << "\n";
            if (render) std::cout << render_decomposition(p);
            return 0;
        }
        if (*renum) return run_enumerate(opt);
        if (*rcomp) return run_residue(opt);
        if (*noodd) return run_classify(opt);
        if (*uniq) return run_verify(opt);
        if (*sapply) return run_stm_apply(opt, kind_arg, side);
        if (*strace) return run_stm_trace(opt);
        if (*brute) return run_oracle(opt, bound);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
