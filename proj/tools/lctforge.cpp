// lctforge command-line front end.
//
// Subcommands: lct, mult-ideal, blowup, zariski, product, morse,
// oracle-volume. Exit status: 0 success, 2 malformed input, 3 mathematical
// failure (with certificate on stderr). Output is deterministic; --json
// selects the machine-readable form with exact rationals as strings.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lctforge/errors.hpp"
#include "lctforge/json_io.hpp"
#include "lctforge/term_ideal.hpp"

using namespace lctforge;
using nlohmann::json;

namespace {

struct IdealArgs {
    std::string literal;
    int dim = 0;
    std::string input_path;

    MonomialIdeal resolve() const {
        if (!input_path.empty()) return io::ideal_from_json(io::load_file(input_path));
        if (literal.empty()) throw InputError("provide --ideal with --dim, or --input");
        if (dim <= 0) throw InputError("--dim is required with --ideal");
        return MonomialIdeal::parse(literal, dim);
    }
};

void add_ideal_options(CLI::App* cmd, IdealArgs& args) {
    cmd->add_option("--ideal", args.literal,
                    "ideal literal, e.g. \"x1^2*x2, x3\" (variables x1..xn)");
    cmd->add_option("--dim,-n", args.dim, "ambient dimension for --ideal");
    cmd->add_option("--input,-i", args.input_path, "JSON ideal file");
}

// Chart normal form (x^h y^k, z) up to coordinate order: two generators in
// dimension 3, one of them a unit vector, the other zero there.
std::optional<NormalFormIdeal> detect_normal_form(const MonomialIdeal& ideal) {
    if (ideal.dim() != 3 || ideal.generators().size() != 2) return std::nullopt;
    for (int which = 0; which < 2; ++which) {
        const auto& unit = ideal.generators()[which];
        const auto& other = ideal.generators()[1 - which];
        int axis = -1;
        long total = 0;
        for (int i = 0; i < 3; ++i) {
            total += unit[i];
            if (unit[i] == 1) axis = i;
        }
        if (total != 1 || axis < 0 || other[axis] != 0) continue;
        long hk[2];
        int at = 0;
        for (int i = 0; i < 3; ++i)
            if (i != axis) hk[at++] = other[i];
        return NormalFormIdeal{hk[0], hk[1]};
    }
    return std::nullopt;
}

void print_normal_form_note(const MonomialIdeal& ideal, std::ostream& os) {
    if (auto nf = detect_normal_form(ideal)) {
        os << "note: chart normal form (x^h y^k, z) with (h,k)=(" << nf->h << ","
           << nf->k << ")\n";
        os << "  diagonal value 1 + 1/max(h,k) = " << normal_form_lct(*nf).str() << "\n";
        if (auto alt = additive_split_lct(*nf))
            os << "  additive-split value (h+k)/(hk) + 1 = " << alt->str() << "\n";
        os << "  the readings disagree when min(h,k) >= 1; both exceed 1.\n";
    }
}

int run_lct(const IdealArgs& args, bool as_json) {
    MonomialIdeal ideal = args.resolve();
    LctReport rep = lct(ideal);
    if (as_json) {
        json j = io::lct_report_to_json(ideal, rep);
        if (auto nf = detect_normal_form(ideal)) {
            if (auto alt = additive_split_lct(*nf)) j["lct_additive_split"] = alt->str();
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "ideal: " << ideal.str() << "  [dim " << ideal.dim() << "]\n";
    if (rep.infinite) {
        std::cout << "lct: +inf (unit ideal)\n";
        return 0;
    }
    std::cout << "newton polyhedron: " << NewtonPolyhedron(ideal).str() << "\n";
    std::cout << "diagonal parameter m: " << rep.m.str() << "\n";
    std::cout << "lct = 1/m: " << rep.c.str() << "\n";
    std::cout << "witness weights:";
    for (const auto& w : rep.witness) std::cout << " " << w.str();
    std::cout << "\n";
    print_normal_form_note(ideal, std::cout);
    return 0;
}

int run_mult_ideal(const IdealArgs& args, const std::string& r_text, long bound,
                   bool as_json) {
    MonomialIdeal ideal = args.resolve();
    Rational r = Rational::parse(r_text);
    auto monos = multiplier_ideal_monomials(ideal, r, bound);
    if (as_json) {
        json j;
        j["schema"] = io::kSchemaVersion;
        j["ideal"] = io::ideal_to_json(ideal);
        j["r"] = r.str();
        j["degree_bound"] = bound;
        j["monomials"] = json::array();
        for (const auto& m : monos) j["monomials"].push_back(m);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "multiplier ideal monomials of " << ideal.str() << " at r = " << r.str()
              << " (|lambda| <= " << bound << "):\n";
    for (const auto& m : monos) {
        std::cout << "  (";
        for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
        std::cout << ")\n";
    }
    std::cout << monos.size() << " monomial(s)\n";
    return 0;
}

int run_blowup(long paths_s, const std::string& input_path, bool as_json) {
    if (paths_s > 0) {
        auto entries = enumerate_paths(static_cast<std::size_t>(paths_s));
        if (as_json) {
            std::cout << io::paths_to_json(entries).dump(2) << "\n";
            return 0;
        }
        std::cout << "chart paths of length " << paths_s << ":\n";
        std::cout << "  path  (h,k)  ideal          lct      additive-split\n";
        for (const auto& e : entries) {
            auto alt = additive_split_lct(e.nf);
            std::ostringstream ideal_col;
            ideal_col << e.nf.str();
            std::cout << "  " << e.path << "  (" << e.nf.h << "," << e.nf.k << ")  ";
            std::cout << ideal_col.str();
            for (std::size_t pad = ideal_col.str().size(); pad < 13; ++pad) std::cout << ' ';
            std::cout << "  " << e.lct.str();
            if (alt) std::cout << "  [" << alt->str() << "]";
            std::cout << "\n";
        }
        std::cout << "the two threshold readings disagree when min(h,k) >= 1; "
                     "both always exceed 1.\n";
        return 0;
    }
    if (input_path.empty())
        throw InputError("blowup: provide --paths <s> or --input <sequence.json>");
    BlowupSequence seq = io::sequence_from_json(io::load_file(input_path));
    LelongVerdict v = pushforward_lelong_verdict(seq);
    if (as_json) {
        std::cout << io::verdict_to_json(v).dump(2) << "\n";
        return 0;
    }
    std::cout << "pruning log:\n";
    for (const auto& e : v.prune.log) {
        const char* action = e.action == RewriteAction::Deleted    ? "deleted "
                             : e.action == RewriteAction::Rewritten ? "rewrote "
                                                                    : "kept    ";
        std::cout << "  center " << e.input_index + 1 << ": " << action << "(" << e.reason
                  << ")\n";
    }
    std::cout << "minimal sequence length: " << v.prune.sequence.centers.size() << "\n";
    if (v.kind == VerdictKind::TrivialByRemark) {
        std::cout << "verdict: trivial (no blow-up survives along the curve; the "
                     "generic Lelong number of the push-forward vanishes outright)\n";
    } else {
        std::cout << "verdict: vanishes\n";
        std::cout << "  min lct over chart paths: " << v.min_lct.str() << " > 1\n";
        std::cout << "  witness path: " << v.witness_path << " with ideal "
                  << v.witness_nf.str() << "\n";
    }
    return 0;
}

int run_zariski(const std::string& surface_path, const std::vector<std::string>& classes,
                bool as_json) {
    if (classes.size() != 1) throw InputError("zariski: provide exactly one --class");
    SurfaceData data = io::surface_from_json(io::load_file(surface_path));
    DivisorClass D = io::class_from_json(json::parse(classes[0]), data.basis);
    ZariskiDecomposition z = zariski_decompose(D, data);
    if (as_json) {
        std::cout << io::zariski_to_json(z, data).dump(2) << "\n";
        return 0;
    }
    std::cout << "P = " << io::class_to_json(z.P, data.basis).dump() << "\n";
    std::cout << "N =";
    if (z.N.empty()) std::cout << " 0";
    for (const auto& [idx, a] : z.N)
        std::cout << " + " << a.str() << "*" << data.candidate_names[idx];
    std::cout << "\n";
    std::cout << "certificates:\n  P.C over candidates:";
    for (const auto& q : z.certificates.nef_values) std::cout << " " << q.str();
    std::cout << "\n  P.C over support:";
    if (z.certificates.orth_values.empty()) std::cout << " (empty support)";
    for (const auto& q : z.certificates.orth_values) std::cout << " " << q.str();
    std::cout << "\n  support Gram negative definite: "
              << (z.certificates.gram_negative_definite ? "yes" : "no") << "\n";
    return 0;
}

int run_product(const std::string& surface_path, const std::vector<std::string>& classes,
                bool as_json) {
    if (classes.empty() || classes.size() > 2)
        throw InputError("product: provide --class once (square) or twice");
    SurfaceData data = io::surface_from_json(io::load_file(surface_path));
    DivisorClass a = io::class_from_json(json::parse(classes[0]), data.basis);
    DivisorClass b = classes.size() == 2
                         ? io::class_from_json(json::parse(classes[1]), data.basis)
                         : a;
    Rational value = positive_product(a, b, data);
    if (as_json) {
        json j;
        j["schema"] = io::kSchemaVersion;
        j["positive_product"] = value.str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "positive product <a.b> = " << value.str() << "\n";
    return 0;
}

int run_oracle(const IdealArgs& args, const std::string& radii_text, int grid,
               bool as_json) {
    MonomialIdeal ideal = args.resolve();
    std::vector<Rational> radii;
    if (radii_text.empty()) {
        radii = default_oracle_radii();
    } else {
        std::stringstream ss(radii_text);
        std::string part;
        while (std::getline(ss, part, ',')) radii.push_back(Rational::parse(part));
    }
    OracleReport rep = sublevel_volume_oracle(ideal, radii, grid);
    if (as_json) {
        std::cout << io::oracle_report_to_json(ideal, rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "sublevel volumes for " << ideal.str() << ":\n";
    std::cout << "  r            volume        local slope\n";
    for (const auto& p : rep.points) {
        std::cout << "  ";
        std::cout.setf(std::ios::scientific);
        std::cout.precision(6);
        std::cout << p.r << "  " << p.volume << "  ";
        std::cout.unsetf(std::ios::scientific);
        std::cout.precision(4);
        std::cout << p.local_slope << "\n";
    }
    std::cout << "fitted slope of log V against log r: " << rep.fitted_slope
              << " (estimates 2*lct up to logarithmic corrections)\n";
    LctReport exact = lct(ideal);
    if (!exact.infinite)
        std::cout << "exact lct for comparison: " << exact.c.str() << " (slope "
                  << 2.0 * exact.c.to_double() << ")\n";
    print_normal_form_note(ideal, std::cout);
    return 0;
}

int run_morse(const std::string& mode, const std::string& input_path,
              const std::string& surface_path, bool as_json) {
    json j = io::load_file(input_path);
    BoundReport rep;
    if (mode == "strong") {
        rep = strong_morse_bound(io::morse_input_from_json(j));
    } else if (mode == "second") {
        rep = second_formulation_bound(io::morse_input_from_json(j));
    } else if (mode == "nef") {
        std::vector<Rational> table;
        for (const auto& v : j.at("table")) table.push_back(io::rational_from_json(v));
        rep = nef_case_bound(j.at("n").get<int>(), j.at("s").get<int>(), table);
    } else if (mode == "trapani") {
        std::vector<TrapaniDivisor> divisors;
        if (j.contains("divisors")) {
            for (const auto& d : j["divisors"]) {
                TrapaniDivisor div;
                if (d.contains("label")) div.label = d["label"].get<std::string>();
                div.nu = io::rational_from_json(d.at("nu"));
                for (const auto& v : d.at("mixed_LuD"))
                    div.mixed_LuD.push_back(io::rational_from_json(v));
                divisors.push_back(std::move(div));
            }
        }
        rep = trapani_s1_bound(j.at("n").get<int>(),
                               io::rational_from_json(j.at("L_pow_n")),
                               io::rational_from_json(j.at("L_pow_n1_posF")), divisors);
    } else if (mode == "surface") {
        if (surface_path.empty()) throw InputError("morse surface: --surface required");
        SurfaceData data = io::surface_from_json(io::load_file(surface_path));
        DivisorClass L = io::class_from_json(j.at("L"), data.basis);
        DivisorClass F = io::class_from_json(j.at("F"), data.basis);
        DivisorClass u = io::class_from_json(j.at("u"), data.basis);
        rep = surface_morse(L, F, data, u);
    } else {
        throw InputError("morse mode must be strong|second|nef|trapani|surface");
    }
    if (as_json) {
        std::cout << io::bound_report_to_json(rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "formula: " << rep.formula_id << "\n";
    for (const auto& [label, value] : rep.contributions)
        std::cout << "  " << label << ": " << value.str() << "\n";
    std::cout << "coefficient of k^n/n!: " << rep.coefficient.str() << "\n";
    for (const auto& note : rep.user_assertions) std::cout << "note: " << note << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log-canonical thresholds, blow-up chart calculus, surface "
                 "Zariski decompositions and algebraic Morse bounds"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand as well
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON (schema 1)");

    IdealArgs lct_args;
    auto* lct_cmd = app.add_subcommand("lct", "log-canonical threshold of a monomial ideal");
    add_ideal_options(lct_cmd, lct_args);

    IdealArgs mult_args;
    std::string mult_r = "1";
    long mult_bound = 6;
    auto* mult_cmd =
        app.add_subcommand("mult-ideal", "monomials of the multiplier ideal J(r*a)");
    add_ideal_options(mult_cmd, mult_args);
    mult_cmd->add_option("--r", mult_r, "scaling r >= 0 (rational)");
    mult_cmd->add_option("--bound", mult_bound, "degree bound on |lambda|");

    long blowup_paths = 0;
    std::string blowup_input;
    auto* blowup_cmd = app.add_subcommand(
        "blowup", "chart-path normal forms, or prune + Lelong verdict for a sequence");
    blowup_cmd->add_option("--paths", blowup_paths, "enumerate all chart paths of length s");
    blowup_cmd->add_option("--input,-i", blowup_input, "JSON blow-up sequence file");

    std::string zariski_surface;
    std::vector<std::string> zariski_classes;
    auto* zariski_cmd =
        app.add_subcommand("zariski", "Zariski decomposition on a surface");
    zariski_cmd->add_option("--surface", zariski_surface, "surface JSON file")->required();
    zariski_cmd->add_option("--class", zariski_classes, "class literal, e.g. {\"H\":\"1\"}");

    std::string product_surface;
    std::vector<std::string> product_classes;
    auto* product_cmd =
        app.add_subcommand("product", "positive product <a.b> of surface classes");
    product_cmd->add_option("--surface", product_surface, "surface JSON file")->required();
    product_cmd->add_option("--class", product_classes,
                            "class literal (repeat for two factors)");

    std::string morse_mode;
    std::string morse_input;
    std::string morse_surface;
    auto* morse_cmd = app.add_subcommand("morse", "algebraic Morse inequality bounds");
    morse_cmd->add_option("mode", morse_mode, "strong|second|nef|trapani|surface")
        ->required();
    morse_cmd->add_option("--input,-i", morse_input, "JSON input file")->required();
    morse_cmd->add_option("--surface", morse_surface, "surface JSON (mode surface)");

    IdealArgs oracle_args;
    std::string oracle_radii;
    int oracle_grid = 2000;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-volume", "sublevel-set volumes of log sum |x^a| and the slope fit");
    add_ideal_options(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--radii", oracle_radii, "comma-separated rationals in (0,1)");
    oracle_cmd->add_option("--grid", oracle_grid, "midpoint-rule points per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(lct_cmd)) return run_lct(lct_args, as_json);
        if (app.got_subcommand(mult_cmd))
            return run_mult_ideal(mult_args, mult_r, mult_bound, as_json);
        if (app.got_subcommand(blowup_cmd))
            return run_blowup(blowup_paths, blowup_input, as_json);
        if (app.got_subcommand(zariski_cmd))
            return run_zariski(zariski_surface, zariski_classes, as_json);
        if (app.got_subcommand(product_cmd))
            return run_product(product_surface, product_classes, as_json);
        if (app.got_subcommand(morse_cmd))
            return run_morse(morse_mode, morse_input, morse_surface, as_json);
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(oracle_args, oracle_radii, oracle_grid, as_json);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
