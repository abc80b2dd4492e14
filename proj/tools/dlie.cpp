// Command line front end: every verification and conversion in the library
// as a subcommand with JSON file I/O and deterministic reports.
//
// Exit codes: 0 all checks passed, 1 a check failed (witnesses on stdout),
// 2 usage or input error (diagnostic on stderr). Reports are byte-identical
// for identical inputs; timing goes to stderr only.

#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlie/aybe.hpp"
#include "dlie/bracket.hpp"
#include "dlie/catalog.hpp"
#include "dlie/double_construction.hpp"
#include "dlie/io.hpp"
#include "dlie/ncpoly.hpp"
#include "dlie/operators.hpp"
#include "dlie/polyfamily.hpp"

using nlohmann::json;
using namespace dlie;

namespace {

struct Options {
    std::string catalog_name;
    int n = 0;
    std::string lambda_text;
    std::string in_path;
    std::string out_path;
    int jobs = 1;
};

Rational lambda_or(const Options& o, const Rational& fallback) {
    return o.lambda_text.empty() ? fallback : parse_rational(o.lambda_text);
}

Rational lambda_required(const Options& o) {
    if (o.lambda_text.empty()) throw CLI::ValidationError("--lambda is required");
    return parse_rational(o.lambda_text);
}

MatrixOperator load_operator(const Options& o) {
    if (!o.catalog_name.empty()) {
        int n = o.n > 0 ? o.n : (o.catalog_name == "ex3" ? 3 : 0);
        if (n == 0) throw CLI::ValidationError("--n is required with --catalog");
        return catalog(o.catalog_name, n);
    }
    if (!o.in_path.empty()) return operator_from_json(load_json_file(o.in_path));
    throw CLI::ValidationError("provide --catalog or --in");
}

BracketFile load_bracket(const Options& o) {
    if (!o.catalog_name.empty()) {
        MatrixOperator r = load_operator(o);
        Rational lam = lambda_or(o, catalog_weight(o.catalog_name));
        return {bracket_from_rb(r), lam};
    }
    if (!o.in_path.empty()) {
        BracketFile f = bracket_from_json(load_json_file(o.in_path));
        if (!o.lambda_text.empty()) f.lambda = parse_rational(o.lambda_text);
        return f;
    }
    throw CLI::ValidationError("provide --catalog or --in");
}

// comma list with optional a..b ranges: "1,3", "2..5", "1,4..6"
std::set<int> parse_index_list(const std::string& text) {
    std::set<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!piece.empty()) {
            std::size_t dots = piece.find("..");
            if (dots != std::string::npos) {
                int lo = std::stoi(piece.substr(0, dots));
                int hi = std::stoi(piece.substr(dots + 2));
                for (int g = lo; g <= hi; ++g) out.insert(g);
            } else {
                out.insert(std::stoi(piece));
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!piece.empty()) w.push_back(char(std::stoi(piece) - 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

json witness_json(const UnitWitness& w) {
    json j;
    j["x"] = json::array({w.xi + 1, w.xj + 1});
    if (w.yi >= 0) j["y"] = json::array({w.yi + 1, w.yj + 1});
    j["defect"] = matrix_to_json(w.defect);
    return j;
}

json report_json(const std::string& command, bool passed) {
    return {{"command", command}, {"passed", passed}, {"witnesses", json::array()}};
}

int emit(const json& report) {
    std::cout << canonical_dump(report);
    return report.at("passed").get<bool>() ? 0 : 1;
}

json rb_report_json(const std::string& command, const RBReport& rep, std::size_t cap = 16) {
    json j = report_json(command, rep.passed);
    for (std::size_t i = 0; i < rep.witnesses.size() && i < cap; ++i)
        j["witnesses"].push_back(witness_json(rep.witnesses[i]));
    j["witness_count"] = rep.witnesses.size();
    return j;
}

json bracket2_report_json(const std::string& command, const BracketReport2& rep,
                          std::size_t cap = 16) {
    json j = report_json(command, rep.passed);
    for (std::size_t i = 0; i < rep.witnesses.size() && i < cap; ++i)
        j["witnesses"].push_back({{"args", json::array({rep.witnesses[i].p, rep.witnesses[i].q})},
                                  {"defect", tensor2_to_json(rep.witnesses[i].defect)}});
    j["witness_count"] = rep.witnesses.size();
    return j;
}

json bracket3_report_json(const std::string& command, const BracketReport3& rep,
                          std::size_t cap = 16) {
    json j = report_json(command, rep.passed);
    for (std::size_t i = 0; i < rep.witnesses.size() && i < cap; ++i) {
        const auto& w = rep.witnesses[i];
        json terms = json::array();
        for (const auto& [k, c] : w.defect.terms())
            terms.push_back(json::array({rational_str(c), k[0] + 1, k[1] + 1, k[2] + 1}));
        j["witnesses"].push_back({{"args", json::array({w.a, w.b, w.c})}, {"defect", terms}});
    }
    j["witness_count"] = rep.witnesses.size();
    return j;
}

void emit_conversion(const std::string& command, const Options& o, const json& out,
                     int& run_status) {
    if (!o.out_path.empty()) save_json_file(o.out_path, out);
    json rep = report_json(command, true);
    rep["result"] = o.out_path.empty() ? out : json(o.out_path);
    run_status = emit(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for weighted double Lie structures"};
    app.require_subcommand(1);

    Options o;
    int run_status = 0;

    auto add_common = [&o](CLI::App* cmd, bool with_catalog = true) {
        if (with_catalog) {
            cmd->add_option("--catalog", o.catalog_name, "built-in operator name (ex1..ex4)");
            cmd->add_option("--n", o.n, "matrix size for --catalog");
        }
        cmd->add_option("--lambda", o.lambda_text, "weight, as p or p/q");
        cmd->add_option("--in", o.in_path, "input file");
        cmd->add_option("--out", o.out_path, "output file");
        cmd->add_option("--jobs", o.jobs, "worker count for exhaustive sweeps");
    };

    // ---- rb ----
    auto* rb = app.add_subcommand("rb", "Rota-Baxter operator checks and conversions");
    rb->require_subcommand(1);
    auto* rb_check = rb->add_subcommand("check", "Rota-Baxter identity on all unit pairs");
    add_common(rb_check);
    rb_check->callback([&] {
        MatrixOperator r = load_operator(o);
        run_status = emit(rb_report_json("rb check", is_rb(r, lambda_required(o))));
    });
    auto* rb_skew = rb->add_subcommand("skew-check", "weighted skew-symmetry of the operator");
    add_common(rb_skew);
    rb_skew->callback([&] {
        MatrixOperator r = load_operator(o);
        run_status = emit(rb_report_json("rb skew-check", is_lambda_skew(r, lambda_required(o))));
    });
    auto* rb_tobr = rb->add_subcommand("to-bracket", "induced double bracket");
    add_common(rb_tobr);
    rb_tobr->callback([&] {
        MatrixOperator r = load_operator(o);
        Rational lam = o.catalog_name.empty() ? lambda_required(o)
                                              : lambda_or(o, catalog_weight(o.catalog_name));
        emit_conversion("rb to-bracket", o, bracket_to_json(bracket_from_rb(r), lam), run_status);
    });
    auto* rb_toaybe = rb->add_subcommand("to-aybe", "tensor with the same operator");
    add_common(rb_toaybe);
    rb_toaybe->callback([&] {
        MatrixOperator r = load_operator(o);
        emit_conversion("rb to-aybe", o, tensor_to_json(tensor_from_rb(r)), run_status);
    });
    auto* rb_split = rb->add_subcommand("split", "generalized eigenspace decomposition");
    add_common(rb_split);
    rb_split->callback([&] {
        MatrixOperator r = load_operator(o);
        Rational lam = o.catalog_name.empty() ? lambda_required(o)
                                              : lambda_or(o, catalog_weight(o.catalog_name));
        SpectralSplit s = split_spectral(r, lam);
        json rep = report_json("rb split", true);
        auto mats = [](const std::vector<Matrix>& ms) {
            json a = json::array();
            for (const auto& m : ms) a.push_back(matrix_to_json(m));
            return a;
        };
        rep["i1"] = mats(s.i1);
        rep["i2"] = mats(s.i2);
        rep["i2prime"] = mats(s.i2prime);
        run_status = emit(rep);
    });

    // ---- bracket ----
    auto* br = app.add_subcommand("bracket", "double bracket checks and conversions");
    br->require_subcommand(1);
    auto* br_check = br->add_subcommand("check", "weighted double Lie axioms");
    add_common(br_check);
    br_check->callback([&] {
        BracketFile f = load_bracket(o);
        BracketReport2 ac = check_anticom(f.bracket, f.lambda);
        BracketReport3 jc = check_jacobi(f.bracket, f.lambda, o.jobs);
        json rep = report_json("bracket check", ac.passed && jc.passed);
        rep["anticom"] = bracket2_report_json("anticom", ac);
        rep["jacobi"] = bracket3_report_json("jacobi", jc);
        run_status = emit(rep);
    });
    auto* br_torb = br->add_subcommand("to-rb", "operator determining the bracket");
    add_common(br_torb);
    br_torb->callback([&] {
        BracketFile f = load_bracket(o);
        emit_conversion("bracket to-rb", o, operator_to_json(rb_from_bracket(f.bracket)),
                        run_status);
    });
    auto* br_ideal = br->add_subcommand("ideal", "ideal test for a coordinate subspace");
    add_common(br_ideal);
    std::string gens_text;
    br_ideal->add_option("--gens", gens_text, "basis indices spanning U, e.g. 1,3 or 2..5")
        ->required();
    br_ideal->callback([&] {
        BracketFile f = load_bracket(o);
        Subspace u(f.bracket.dim());
        for (int g : parse_index_list(gens_text)) {
            if (g < 1 || g > f.bracket.dim())
                throw CLI::ValidationError("--gens index out of range");
            std::vector<Rational> v(f.bracket.dim());
            v[g - 1] = 1;
            u.insert(std::move(v));
        }
        IdealReport rep = is_ideal(f.bracket, u);
        json j = report_json("bracket ideal", rep.is_ideal);
        if (rep.witness)
            j["witnesses"].push_back({{"u_index", rep.witness->u_index},
                                      {"v_index", rep.witness->v_index},
                                      {"side", rep.witness->u_first ? "uv" : "vu"},
                                      {"residual", tensor2_to_json(rep.witness->residual)}});
        run_status = emit(j);
    });

    // ---- aybe ----
    auto* ay = app.add_subcommand("aybe", "weighted Yang-Baxter tensor checks");
    ay->require_subcommand(1);
    auto* ay_check = ay->add_subcommand("check", "weighted equation and skew condition");
    add_common(ay_check, false);
    std::string weight_text, skew_text;
    ay_check->add_option("--weight", weight_text, "equation weight (p/q)")->required();
    ay_check->add_option("--skew", skew_text, "also require skew at this weight");
    ay_check->callback([&] {
        if (o.in_path.empty()) throw CLI::ValidationError("provide --in");
        ATensor2 r = tensor_from_json(load_json_file(o.in_path));
        AybeReport rep = check_aybe(r, parse_rational(weight_text));
        bool passed = rep.passed;
        json j = report_json("aybe check", true);
        j["equation_passed"] = rep.passed;
        if (!rep.passed) {
            json terms = json::array();
            std::size_t shown = 0;
            for (const auto& [k, c] : rep.defect.terms()) {
                if (shown++ >= 16) break;
                terms.push_back(json::array({rational_str(c), k[0] + 1, k[1] + 1, k[2] + 1,
                                             k[3] + 1, k[4] + 1, k[5] + 1}));
            }
            j["defect"] = terms;
        }
        if (!skew_text.empty()) {
            bool sk = check_tensor_skew(r, parse_rational(skew_text));
            j["skew_passed"] = sk;
            passed = passed && sk;
        }
        j["passed"] = passed;
        run_status = emit(j);
    });
    auto* ay_torb = ay->add_subcommand("to-rb", "operator x -> sum a x b");
    add_common(ay_torb, false);
    ay_torb->callback([&] {
        if (o.in_path.empty()) throw CLI::ValidationError("provide --in");
        ATensor2 r = tensor_from_json(load_json_file(o.in_path));
        emit_conversion("aybe to-rb", o, operator_to_json(rb_from_tensor(r)), run_status);
    });

    // ---- free ----
    auto* fr = app.add_subcommand("free", "free-algebra extension of a bracket");
    fr->require_subcommand(1);
    auto* fr_extend = fr->add_subcommand("extend", "extended bracket of two monomials");
    add_common(fr_extend);
    std::string a_text, b_text;
    fr_extend->add_option("--a", a_text, "first word, letters as 1-based indices, e.g. 1,2,1")
        ->required();
    fr_extend->add_option("--b", b_text, "second word")->required();
    fr_extend->callback([&] {
        BracketFile f = load_bracket(o);
        NCTensor2 t = extend_bracket(f.bracket, NCPoly::monomial(parse_word(a_text)),
                                     NCPoly::monomial(parse_word(b_text)));
        json rep = report_json("free extend", true);
        rep["result"] = nctensor_to_json(t);
        run_status = emit(rep);
    });
    auto* fr_mdp = fr->add_subcommand("check-mdp", "modified double Poisson axiom sweep");
    add_common(fr_mdp);
    int max_deg = 2, a4_deg = 4, samples = 100;
    fr_mdp->add_option("--max-deg", max_deg,
                       "per-argument degree cap for the Leibniz and Jacobi sweeps");
    fr_mdp->add_option("--a4-deg", a4_deg,
                       "per-argument degree cap for the anti-commutativity sweep");
    fr_mdp->add_option("--samples", samples, "random recursion samples");
    fr_mdp->callback([&] {
        BracketFile f = load_bracket(o);
        BracketReport2 ac = check_anticom(f.bracket, f.lambda);
        BracketReport3 jc = check_jacobi(f.bracket, f.lambda, o.jobs);
        MdpReport rep =
            check_mdp_suite(f.bracket, max_deg, max_deg, a4_deg, samples, 0x5eed5eedULL, o.jobs);
        json j = report_json("free check-mdp", ac.passed && jc.passed && rep.passed);
        j["bracket_axioms_passed"] = ac.passed && jc.passed;
        j["counts"] = {{"leibniz", rep.leibniz_checked},
                       {"a3", rep.a3_checked},
                       {"a4", rep.a4_checked},
                       {"recursion", rep.recursion_checked}};
        for (std::size_t i = 0; i < rep.witnesses.size() && i < 16; ++i) {
            json args = json::array();
            for (const auto& w : rep.witnesses[i].args) args.push_back(json(word_letters(w)));
            j["witnesses"].push_back({{"axiom", rep.witnesses[i].axiom}, {"args", args}});
        }
        run_status = emit(j);
    });

    // ---- poly ----
    auto* po = app.add_subcommand("poly", "polynomial-algebra bracket families");
    po->require_subcommand(1);
    std::string family_text;
    int truncate = 12, deg_i = 0, deg_j = 0;
    auto* po_bracket = po->add_subcommand("bracket", "one bracket value");
    add_common(po_bracket, false);
    po_bracket->add_option("--family", family_text, "M1, M2 or L2")->required();
    po_bracket->add_option("--i", deg_i)->required();
    po_bracket->add_option("--j", deg_j)->required();
    po_bracket->add_option("--truncate", truncate);
    po_bracket->callback([&] {
        Tensor2 t = poly_bracket(parse_family(family_text), deg_i, deg_j, truncate);
        json rep = report_json("poly bracket", true);
        json terms = json::array();
        for (const auto& [k, c] : t.terms())
            terms.push_back(json::array({rational_str(c), k.first, k.second}));  // exponents
        rep["result"] = terms;
        run_status = emit(rep);
    });
    auto* po_check = po->add_subcommand("check", "weighted axioms within the truncation");
    add_common(po_check, false);
    po_check->add_option("--family", family_text, "M1, M2 or L2")->required();
    po_check->add_option("--truncate", truncate);
    po_check->callback([&] {
        PolyAxiomReport rep = check_poly_axioms(parse_family(family_text), truncate, o.jobs);
        json j = report_json("poly check", rep.passed);
        j["anticom"] = bracket2_report_json("anticom", rep.anticom, 4);
        j["jacobi"] = bracket3_report_json("jacobi", rep.jacobi, 4);
        run_status = emit(j);
    });
    auto* po_ideal = po->add_subcommand("ideal", "ideal test for a span of monomials");
    add_common(po_ideal, false);
    std::string degrees_text;
    po_ideal->add_option("--family", family_text, "M1, M2 or L2")->required();
    po_ideal->add_option("--degrees", degrees_text, "exponents spanning U, e.g. 1..12")->required();
    po_ideal->add_option("--truncate", truncate);
    po_ideal->callback([&] {
        IdealReport rep =
            check_ideal_poly(parse_family(family_text), parse_index_list(degrees_text), truncate);
        json j = report_json("poly ideal", rep.is_ideal);
        if (rep.witness)
            j["witnesses"].push_back({{"u_index", rep.witness->u_index},
                                      {"v_index", rep.witness->v_index},
                                      {"side", rep.witness->u_first ? "uv" : "vu"},
                                      {"residual", tensor2_to_json(rep.witness->residual)}});
        run_status = emit(j);
    });
    auto* po_iso = po->add_subcommand("iso", "degree-shift embedding is a homomorphism");
    add_common(po_iso, false);
    po_iso->add_option("--family", family_text, "M1, M2 or L2")->required();
    po_iso->add_option("--truncate", truncate);
    po_iso->callback([&] {
        BracketReport2 rep = check_shift_iso(parse_family(family_text), truncate);
        run_status = emit(bracket2_report_json("poly iso", rep));
    });

    // ---- double ----
    auto* db = app.add_subcommand("double", "double-space construction checks");
    db->require_subcommand(1);
    auto* db_assoc = db->add_subcommand("assoc", "associativity of the double product");
    add_common(db_assoc);
    db_assoc->callback([&] {
        MatrixOperator r = load_operator(o);
        Rational lam = o.catalog_name.empty() ? lambda_required(o)
                                              : lambda_or(o, catalog_weight(o.catalog_name));
        AssocReport rep = check_assoc(r, lam, o.jobs);
        json j = report_json("double assoc", rep.passed);
        for (std::size_t i = 0; i < rep.witnesses.size() && i < 4; ++i) {
            const auto& w = rep.witnesses[i];
            j["witnesses"].push_back({{"triple", json::array({w.x, w.y, w.z})},
                                      {"defect_plain", matrix_to_json(w.defect.plain)},
                                      {"defect_barred", matrix_to_json(w.defect.barred)}});
        }
        j["witness_count"] = rep.witnesses.size();
        run_status = emit(j);
    });
    auto* db_qform = db->add_subcommand("qform", "invariance of the induced bilinear form");
    add_common(db_qform);
    db_qform->callback([&] {
        MatrixOperator r = load_operator(o);
        Rational lam = o.catalog_name.empty() ? lambda_required(o)
                                              : lambda_or(o, catalog_weight(o.catalog_name));
        QInvarianceReport rep = check_q_invariance(r, lam);
        json j = report_json("double qform", rep.invariant);
        if (rep.witness)
            j["witnesses"].push_back(
                {{"triple", json::array({rep.witness->x, rep.witness->y, rep.witness->z})},
                 {"defect", rational_str(rep.witness->defect.plain.at(0, 0))}});
        run_status = emit(j);
    });

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "built-in operators");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "names and weights");
    cat_list->callback([&] {
        json rep = report_json("catalog list", true);
        json items = json::array();
        for (const auto& name : catalog_names())
            items.push_back({{"name", name},
                             {"weight", rational_str(catalog_weight(name))},
                             {"n", name == "ex3" ? "3" : ">=2"}});
        rep["result"] = items;
        run_status = emit(rep);
    });

    auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms " << elapsed.count() << "\n";
    return run_status;
}
