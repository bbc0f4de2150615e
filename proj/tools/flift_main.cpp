// flift: exact-arithmetic toolkit for Frobenius liftings, splittings,
// toric fans, bundle splitting types, and classification screens.

#include "flift/bundle.hpp"
#include "flift/cartier.hpp"
#include "flift/dynkin.hpp"
#include "flift/fano.hpp"
#include "flift/json_io.hpp"
#include "flift/repro.hpp"
#include "flift/surface_delta.hpp"
#include "flift/toric_cohomology.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

using namespace flift;
using nlohmann::json;

namespace {

json load_json_arg(const std::string& s) {
    if (!s.empty() && (s[0] == '{' || s[0] == '[')) return json::parse(s);
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open " + s);
    return json::parse(in);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<int64_t> parse_i64_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

Fan fan_from_arg(const std::string& s) {
    if (!s.empty() && s[0] == '{') return fan_from_json(json::parse(s));
    for (const auto& name : catalog_fan_names())
        if (name == s) return catalog_fan(s);
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("unknown fan '" + s + "' (not a catalog name or file)");
    return fan_from_json(json::parse(in));
}

struct Output {
    bool as_json = false;
    json payload;
    std::string verdict = "OK";
    std::ostringstream text;

    int finish(const std::string& command, double millis) {
        if (as_json) {
            json rep;
            rep["command"] = command;
            rep["result"] = payload;
            rep["verdict"] = verdict;
            rep["millis"] = millis;
            std::cout << rep.dump(2) << "\n";
        } else {
            std::cout << text.str();
            std::cout << "verdict: " << verdict << "\n";
        }
        return verdict == "OK" || verdict == "PASS" ? 0 : 1;
    }
};

LogForm form_from_json(const json& j) {
    Poly probe = poly_from_json(j.at("components").at(0).at("poly"));
    const Field* F = probe.field();
    int nvars = probe.nvars();
    std::set<int> marked;
    if (j.contains("marked"))
        for (const auto& m : j.at("marked")) marked.insert(m.get<int>());
    int degree = (int)j.at("components").at(0).at("idx").size();
    LogForm w = LogForm::zero(F, nvars, degree, marked);
    for (const auto& comp : j.at("components")) {
        std::vector<int> idx = comp.at("idx").get<std::vector<int>>();
        Poly c = poly_from_json(comp.at("poly"));
        w.set_component(idx, w.component(idx) + c);
    }
    return w;
}

json form_to_json(const LogForm& w) {
    json j;
    j["marked"] = w.marked();
    json comps = json::array();
    for (const auto& [idx, c] : w.components())
        comps.push_back({{"idx", idx}, {"poly", poly_to_json(c)}});
    j["components"] = comps;
    return j;
}

FrobeniusLiftChart chart_from_json(const json& j) {
    std::vector<Poly> images;
    for (const auto& im : j.at("images")) images.push_back(poly_from_json(im));
    if (images.empty()) throw std::invalid_argument("chart needs at least one image");
    return FrobeniusLiftChart(images[0].field(), images);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flift: Frobenius liftings, splittings, and toric computations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string data_dir = "data";
    uint64_t seed = 20240901;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--data-dir", data_dir, "directory with bundled data files");
    app.add_option("--seed", seed, "seed for randomized checks");

    // ---- witt ----
    auto* c_witt = app.add_subcommand("witt", "W_2(F_q) scalar arithmetic");
    int witt_p = 2, witt_m = 1;
    std::vector<std::string> witt_add, witt_mul;
    std::string witt_sigma;
    c_witt->add_option("--p", witt_p, "characteristic")->required();
    c_witt->add_option("--m", witt_m, "field degree (q = p^m)");
    c_witt->add_option("--add", witt_add, "add two pairs a0,a1 b0,b1")->expected(2);
    c_witt->add_option("--mul", witt_mul, "multiply two pairs")->expected(2);
    c_witt->add_option("--sigma", witt_sigma, "Witt Frobenius of a pair");

    // ---- xi ----
    auto* c_xi = app.add_subcommand("xi", "apply xi = dF/p to a (log) 1-form");
    std::string xi_input;
    c_xi->add_option("input", xi_input, "JSON {chart, form} (inline or file)")->required();

    // ---- delta-divisor ----
    auto* c_dd = app.add_subcommand("delta-divisor", "det xi section of a P^n lifting");
    std::string dd_input;
    c_dd->add_option("input", dd_input, "JSON {p, q, n, fs:[poly...]} (inline or file)")
        ->required();

    // ---- compat ----
    auto* c_compat = app.add_subcommand("compat", "divisor / blow-up center compatibility");
    std::string compat_input, compat_center;
    c_compat->add_option("input", compat_input, "JSON {chart, h?} (inline or file)")->required();
    c_compat->add_option("--center", compat_center, "coordinate center indices, e.g. 0,1");

    // ---- fedder ----
    auto* c_fedder = app.add_subcommand("fedder", "Fedder criterion for a hypersurface");
    std::string fedder_poly, fedder_point;
    c_fedder->add_option("poly", fedder_poly, "polynomial JSON (inline or file)")->required();
    c_fedder->add_option("--at", fedder_point, "rational point, e.g. 0,0")->required();

    // ---- cartier ----
    auto* c_cartier = app.add_subcommand("cartier", "Cartier operator / inverse on forms");
    std::string cartier_form;
    bool cartier_inv = false;
    c_cartier->add_option("form", cartier_form, "form JSON (inline or file)")->required();
    c_cartier->add_flag("--inverse", cartier_inv, "apply C^{-1} instead of C");

    // ---- split-check ----
    auto* c_split = app.add_subcommand("split-check", "splitting-section criterion on P^n");
    std::string split_poly;
    int split_n = 1;
    c_split->add_option("section", split_poly, "homogeneous section JSON")->required();
    c_split->add_option("--n", split_n, "projective dimension")->required();

    // ---- fan ----
    auto* c_fan = app.add_subcommand("fan", "fan diagnostics");
    std::string fan_arg;
    c_fan->add_option("fan", fan_arg, "catalog name, JSON, or file")->required();

    // ---- h0 / hi ----
    auto* c_h0 = app.add_subcommand("h0", "global sections of a toric divisor");
    std::string h0_fan, h0_coeffs;
    c_h0->add_option("fan", h0_fan)->required();
    c_h0->add_option("--coeffs", h0_coeffs, "per-ray coefficients")->required();

    auto* c_hi = app.add_subcommand("hi", "higher cohomology of a toric divisor");
    std::string hi_fan, hi_coeffs;
    int hi_deg = 1;
    c_hi->add_option("fan", hi_fan)->required();
    c_hi->add_option("--coeffs", hi_coeffs)->required();
    c_hi->add_option("--i", hi_deg)->required();

    // ---- bott ----
    auto* c_bott = app.add_subcommand("bott", "log Bott vanishing report");
    std::string bott_fan, bott_coeffs;
    c_bott->add_option("fan", bott_fan)->required();
    c_bott->add_option("--coeffs", bott_coeffs)->required();

    // ---- flatness ----
    auto* c_flat = app.add_subcommand("flatness", "section-ring flatness window");
    std::string flat_fan, flat_ls, flat_window;
    c_flat->add_option("fan", flat_fan)->required();
    c_flat->add_option("--ls", flat_ls, "divisors 'a,b,..;c,d,..'")->required();
    c_flat->add_option("--window", flat_window, "box 'lo,hi;lo,hi'")->required();

    // ---- split-type ----
    auto* c_stype = app.add_subcommand("split-type", "splitting type of a transition matrix");
    std::string stype_input;
    int stype_p = 5, stype_m = 1;
    c_stype->add_option("matrix", stype_input, "Laurent matrix JSON")->required();
    c_stype->add_option("--p", stype_p)->required();
    c_stype->add_option("--m", stype_m);

    // ---- restrict ----
    auto* c_restrict = app.add_subcommand("restrict", "restrict log cotangent to a curve");
    std::string restrict_input;
    c_restrict->add_option("input", restrict_input,
                           "JSON {p, q, degree, curve:[...], divisor:[...]}")
        ->required();

    // ---- fixed-points ----
    auto* c_fixed = app.add_subcommand("fixed-points", "semilinear fixed points");
    std::string fixed_matrix;
    int fixed_p = 3, fixed_m_field = 1, fixed_ext = 0;
    c_fixed->add_option("matrix", fixed_matrix, "rows 'a,b;c,d'")->required();
    c_fixed->add_option("--p", fixed_p)->required();
    c_fixed->add_option("--m", fixed_m_field, "base field degree");
    c_fixed->add_option("--ext", fixed_ext, "extension degree (0 = stabilize)");

    // ---- dynkin ----
    auto* c_dynkin = app.add_subcommand("dynkin", "marked Dynkin diagram classification");
    std::string dynkin_spec;
    c_dynkin->add_option("diagram", dynkin_spec, "e.g. A3:1, C4:1, A2:1,2")->required();

    // ---- fano-screen ----
    auto* c_fano = app.add_subcommand("fano-screen", "chi(T_X) rigidity screen");
    std::string fano_csv;
    c_fano->add_option("--csv", fano_csv, "invariant table (default: bundled)");

    // ---- surface-descent ----
    auto* c_sd = app.add_subcommand("surface-descent", "blow-up descent of Delta states");
    std::string sd_fan;
    int sd_blowups = 1;
    bool sd_smooth = false;
    c_sd->add_option("fan", sd_fan)->required();
    c_sd->add_option("--blowups", sd_blowups);
    c_sd->add_flag("--smooth-point", sd_smooth, "attempt a smooth-point center (refuses)");

    // ---- repro ----
    auto* c_repro = app.add_subcommand("repro", "run a canned lemma verification");
    std::string repro_target;
    int repro_p = 0;
    c_repro->add_option("target", repro_target, "target name or 'all'")->required();
    c_repro->add_option("--p", repro_p, "restrict p where applicable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.as_json = as_json;
    std::string command;
    for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];
    auto start = std::chrono::steady_clock::now();

    try {
        if (c_witt->parsed()) {
            const Field* F = Field::get(witt_p, witt_m);
            auto parse_pair = [&](const std::string& s) {
                auto v = parse_int_list(s);
                if (v.size() != 2) throw std::invalid_argument("expected a0,a1");
                return WittScalar2(F, v[0], v[1]);
            };
            WittScalar2 r = WittScalar2::zero(F);
            if (!witt_add.empty()) r = parse_pair(witt_add[0]) + parse_pair(witt_add[1]);
            else if (!witt_mul.empty()) r = parse_pair(witt_mul[0]) * parse_pair(witt_mul[1]);
            else if (!witt_sigma.empty()) r = parse_pair(witt_sigma).sigma();
            else throw std::invalid_argument("one of --add/--mul/--sigma required");
            out.payload = {{"a0", r.a0}, {"a1", r.a1}};
            out.text << "(" << r.a0 << "," << r.a1 << ")\n";
        } else if (c_xi->parsed()) {
            json in = load_json_arg(xi_input);
            auto chart = chart_from_json(in.at("chart"));
            LogForm w = form_from_json(in.at("form"));
            std::vector<std::string> names = in.at("form").at("components").at(0).at("poly")
                                                 .at("vars").get<std::vector<std::string>>();
            LogForm r = chart.xi(w);
            out.payload = form_to_json(r);
            out.text << "xi(form) = " << r.to_string(names) << "\n";
        } else if (c_dd->parsed()) {
            json in = load_json_arg(dd_input);
            int n = in.at("n").get<int>();
            std::vector<Poly> fs;
            for (const auto& f : in.at("fs")) fs.push_back(poly_from_json(f));
            if (fs.empty()) throw std::invalid_argument("need n+1 polynomials");
            ProjectiveLift lift(fs[0].field(), n, fs);
            Poly s = det_xi_divisor_Pn(lift);
            bool splits = splits_Pn(SplittingSection(fs[0].field(), n, s));
            out.payload = {{"section", poly_to_json(s)}, {"splits", splits}};
            out.text << "det xi section: " << s.to_string() << "\n"
                     << "splits P^n: " << (splits ? "yes" : "no") << "\n";
        } else if (c_compat->parsed()) {
            json in = load_json_arg(compat_input);
            auto chart = chart_from_json(in.at("chart"));
            if (!compat_center.empty()) {
                std::set<int> center;
                for (int i : parse_int_list(compat_center)) center.insert(i);
                bool ok = is_compatible_blowup_center(chart, center);
                out.payload = {{"compatible", ok}};
                out.text << "blow-up center compatible: " << (ok ? "yes" : "no") << "\n";
                if (!ok) out.verdict = "INCOMPATIBLE";
            } else {
                Poly h = poly_from_json(in.at("h"));
                auto w = compatible_divisor_witness(chart, h);
                out.payload = {{"compatible", w.has_value()}};
                if (w) out.payload["unit"] = w2poly_to_json(*w);
                out.text << "divisor compatible: " << (w ? "yes" : "no") << "\n";
                if (!w) out.verdict = "INCOMPATIBLE";
            }
        } else if (c_fedder->parsed()) {
            Poly f = poly_from_json(load_json_arg(fedder_poly));
            auto pt = parse_int_list(fedder_point);
            bool split = fedder_hypersurface(f, pt);
            out.payload = {{"f_split", split}};
            out.text << "F-split at the point: " << (split ? "yes" : "no") << "\n";
            if (!split) out.verdict = "NOT-SPLIT";
        } else if (c_cartier->parsed()) {
            json jform = load_json_arg(cartier_form);
            LogForm w = form_from_json(jform);
            std::vector<std::string> names = jform.at("components").at(0).at("poly")
                                                 .at("vars").get<std::vector<std::string>>();
            LogForm r = cartier_inv ? cartier_inverse(w) : cartier(w);
            out.payload = form_to_json(r);
            out.text << (cartier_inv ? "C^{-1}" : "C") << "(form) = " << r.to_string(names)
                     << "\n";
        } else if (c_split->parsed()) {
            Poly s = poly_from_json(load_json_arg(split_poly));
            SplittingSection sec(s.field(), split_n, s);
            int coeff = splitting_coefficient(sec);
            out.payload = {{"coefficient", coeff}, {"splits", coeff != 0}};
            out.text << "coefficient at (x_0...x_n)^{p-1}: " << coeff << "\n";
            if (coeff == 0) out.verdict = "NOT-SPLIT";
        } else if (c_fan->parsed()) {
            Fan fan = fan_from_arg(fan_arg);
            bool smooth = is_smooth(fan), complete = is_complete(fan);
            out.payload = fan_to_json(fan);
            out.payload["smooth"] = smooth;
            out.payload["complete"] = complete;
            out.text << "rank " << fan.rank() << ", " << fan.ray_count() << " rays, "
                     << fan.max_cones().size() << " maximal cones\n"
                     << "smooth: " << smooth << ", complete: " << complete << "\n";
            if (smooth && complete) {
                auto g = fan_automorphisms(fan);
                out.payload["automorphisms"] = g.order();
                out.text << "fan automorphisms: " << g.order() << "\n";
                if (fan.rank() == 2) {
                    auto si = toric_surface_intersections(fan);
                    json selfints = json::array();
                    for (int i = 0; i < fan.ray_count(); ++i)
                        selfints.push_back(si.pairing[i][i].num);
                    out.payload["self_intersections"] = selfints;
                    out.text << "boundary self-intersections:";
                    for (int i = 0; i < fan.ray_count(); ++i)
                        out.text << " " << si.pairing[i][i].num;
                    out.text << "\n";
                }
            }
        } else if (c_h0->parsed()) {
            Fan fan = fan_from_arg(h0_fan);
            ToricDivisor d(&fan, parse_i64_list(h0_coeffs));
            auto sec = global_sections(d);
            out.payload = {{"h0", sec.h0()}, {"points", sec.points}};
            out.text << "h^0 = " << sec.h0() << "\n";
        } else if (c_hi->parsed()) {
            Fan fan = fan_from_arg(hi_fan);
            ToricDivisor d(&fan, parse_i64_list(hi_coeffs));
            int64_t h = cohomology(d, hi_deg);
            out.payload = {{"i", hi_deg}, {"hi", h}};
            out.text << "h^" << hi_deg << " = " << h << "\n";
        } else if (c_bott->parsed()) {
            Fan fan = fan_from_arg(bott_fan);
            ToricDivisor d(&fan, parse_i64_list(bott_coeffs));
            auto rep = bott_vanishing_log(d);
            json h = json::array();
            for (const auto& row : rep.h) h.push_back(row);
            out.payload = {{"ample", rep.ample}, {"h", h}, {"all_vanish", rep.all_vanish},
                           {"note", rep.note}};
            out.text << "ample: yes; higher log cohomology vanishes: "
                     << (rep.all_vanish ? "yes" : "NO") << "\n";
            out.verdict = rep.all_vanish ? "OK" : "FAIL";
        } else if (c_flat->parsed()) {
            Fan fan = fan_from_arg(flat_fan);
            std::vector<ToricDivisor> ls;
            {
                std::stringstream ss(flat_ls);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    ls.push_back(ToricDivisor(&fan, parse_i64_list(tok)));
            }
            std::vector<std::pair<int64_t, int64_t>> window;
            {
                std::stringstream ss(flat_window);
                std::string tok;
                while (std::getline(ss, tok, ';')) {
                    auto v = parse_i64_list(tok);
                    if (v.size() != 2) throw std::invalid_argument("window wants lo,hi pairs");
                    window.push_back({v[0], v[1]});
                }
            }
            auto rep = section_ring_flatness(&fan, ls, window);
            json viol = json::array();
            for (const auto& [lambda, h1] : rep.violations)
                viol.push_back({{"lambda", lambda}, {"h1", h1}});
            out.payload = {{"criterion_holds", rep.criterion_holds}, {"violations", viol}};
            out.text << "flatness criterion holds on the window: "
                     << (rep.criterion_holds ? "yes" : "no") << " ("
                     << rep.violations.size() << " violations)\n";
            if (!rep.criterion_holds) out.verdict = "VIOLATIONS";
        } else if (c_stype->parsed()) {
            const Field* F = Field::get(stype_p, stype_m);
            auto m = laurent_matrix_from_json(F, load_json_arg(stype_input));
            auto t = splitting_type(m);
            out.payload = {{"type", t.a}, {"sum", t.sum()},
                           {"nef_compatible", nef_obstruction(t, stype_p)}};
            out.text << "splitting type:";
            for (auto a : t.a) out.text << " " << a;
            out.text << "\n";
        } else if (c_restrict->parsed()) {
            json in = load_json_arg(restrict_input);
            std::vector<Poly> curve, divisor;
            for (const auto& f : in.at("curve")) curve.push_back(poly_from_json(f));
            for (const auto& f : in.at("divisor")) divisor.push_back(poly_from_json(f));
            if (curve.size() != 3) throw std::invalid_argument("curve needs three forms");
            CurveInP2 c{curve[0].field(), in.at("degree").get<int64_t>(), curve};
            auto m = restrict_log_cotangent(divisor, c);
            auto t = splitting_type(m);
            out.payload = {{"matrix", laurent_matrix_to_json(m)}, {"type", t.a}};
            out.text << "splitting type of the restriction:";
            for (auto a : t.a) out.text << " " << a;
            out.text << "\n";
        } else if (c_fixed->parsed()) {
            const Field* F = Field::get(fixed_p, fixed_m_field);
            std::vector<std::vector<int>> a;
            {
                std::stringstream ss(fixed_matrix);
                std::string tok;
                while (std::getline(ss, tok, ';')) a.push_back(parse_int_list(tok));
            }
            SemilinearMap sm(F, a);
            if (fixed_ext > 0) {
                auto fc = semilinear_fixed_points(sm, fixed_ext);
                out.payload = {{"count", fc.count}, {"dim", fc.dim}, {"m", fixed_ext}};
                out.text << "fixed points over F_{q^" << fixed_ext << "}: " << fc.count << "\n";
            } else {
                auto st = stabilized_fixed_points(sm);
                out.payload = {{"count", st.count}, {"field_degree", st.field_degree},
                               {"cap_hit", st.cap_hit}};
                out.text << "stabilized count: " << st.count << " at extension degree "
                         << st.field_degree << (st.cap_hit ? " (cap hit)" : "") << "\n";
                if (st.cap_hit) out.verdict = "CAP-HIT";
            }
        } else if (c_dynkin->parsed()) {
            auto d = MarkedDynkinDiagram::parse(dynkin_spec);
            out.payload["diagram"] = d.to_string();
            out.payload["dim"] = dim_G_mod_P(d);
            out.text << d.to_string() << ": dim G/P = " << dim_G_mod_P(d) << "\n";
            if (d.marked.size() == 1) {
                auto r = is_projective_space(d);
                out.payload["projective_space"] = r ? json(*r) : json(nullptr);
                if (r) out.text << "projective space P^" << *r << "\n";
                else out.text << "not a projective space\n";
            }
            auto v = classify_max_parabolic_quotients(d);
            const char* cls = v.cls == QuotientClass::ProjSpace   ? "ProjSpace"
                              : v.cls == QuotientClass::Incidence ? "Incidence"
                                                                  : "Neither";
            out.payload["classification"] = cls;
            out.payload["n"] = v.n;
            out.payload["reason"] = v.reason;
            out.text << "classification: " << cls << " (" << v.reason << ")\n";
        } else if (c_fano->parsed()) {
            std::string path = fano_csv.empty() ? data_dir + "/fano_threefolds.csv" : fano_csv;
            auto rows = load_fano_csv(path);
            auto rep = fano_rigidity_screen(rows);
            json jr = json::array();
            for (const auto& r : rep.rows) {
                jr.push_back({{"id", r.inv.id},
                              {"chi", r.chi_tangent},
                              {"flagged", r.flagged_nonrigid},
                              {"external", r.requires_external},
                              {"category", r.inv.category}});
                out.text << r.inv.id << "\tchi(T) = " << r.chi_tangent
                         << (r.flagged_nonrigid ? "\tnot F-liftable (non-rigid)" : "")
                         << (r.requires_external ? "\trequires external argument" : "") << "\n";
            }
            out.payload = {{"rows", jr}, {"negatives", rep.negative_ids}};
        } else if (c_sd->parsed()) {
            Fan fan = fan_from_arg(sd_fan);
            SurfaceDeltaState state = SurfaceDeltaState::full_boundary(fan);
            json steps = json::array();
            bool refused = false;
            for (int k = 0; k < sd_blowups && !refused; ++k) {
                auto corner = state.fan().max_cones()[k % state.fan().max_cones().size()];
                auto r = blowup_delta_descent(state, corner, sd_smooth);
                if (std::holds_alternative<SurfaceDeltaState>(r)) {
                    state = std::get<SurfaceDeltaState>(r);
                    steps.push_back({{"step", k}, {"accepted", true},
                                     {"rays", state.fan().ray_count()}});
                    out.text << "step " << k << ": accepted, " << state.fan().ray_count()
                             << " rays\n";
                } else {
                    refused = true;
                    auto reason = std::get<DescentRefusal>(r).reason;
                    steps.push_back({{"step", k}, {"accepted", false}, {"reason", reason}});
                    out.text << "step " << k << ": refused: " << reason << "\n";
                    out.verdict = "REFUSED";
                }
            }
            out.payload["steps"] = steps;
        } else if (c_repro->parsed()) {
            ReproOptions opt;
            opt.data_dir = data_dir;
            opt.seed = seed;
            opt.p_override = repro_p;
            std::vector<ReproResult> results;
            if (repro_target == "all") results = run_all_repro(opt);
            else results.push_back(run_repro_target(repro_target, opt));
            bool all_pass = true;
            json jr = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                jr.push_back({{"target", r.name}, {"verdict", r.pass ? "PASS" : "FAIL"},
                              {"millis", r.millis}, {"detail", r.payload}});
                out.text << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                         << (int)r.millis << " ms)\n";
            }
            out.payload["targets"] = jr;
            out.verdict = all_pass ? "PASS" : "FAIL";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    auto end = std::chrono::steady_clock::now();
    double millis = std::chrono::duration<double, std::milli>(end - start).count();
    return out.finish(command, millis);
}
