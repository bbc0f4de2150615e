#include "flift/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace flift {

namespace {

std::pair<int, int> pq_of(const Field* F) {
    return {F->p(), (int)F->q()};
}

const Field* field_from_pq(int p, long q) {
    int m = 0;
    long t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("q is not a power of p");
        t /= p;
        ++m;
    }
    if (m == 0) m = 1;
    return Field::get(p, m);
}

} // namespace

json poly_to_json(const Poly& f, const std::vector<std::string>& vars) {
    auto [p, q] = pq_of(f.field());
    json j;
    j["p"] = p;
    j["q"] = q;
    json names = json::array();
    for (int i = 0; i < f.nvars(); ++i)
        names.push_back(i < (int)vars.size() ? vars[i] : "x" + std::to_string(i));
    j["vars"] = names;
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["e"] = e;
        t["c"] = json::array({c});
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

Poly poly_from_json(const json& j) {
    const Field* F = field_from_pq(j.at("p").get<int>(), j.at("q").get<long>());
    int nvars = (int)j.at("vars").size();
    Poly f(F, nvars);
    for (const auto& t : j.at("terms")) {
        Exp e = t.at("e").get<Exp>();
        if ((int)e.size() != nvars)
            throw std::invalid_argument("polynomial term arity mismatch");
        const auto& c = t.at("c");
        int a0 = c.is_array() ? c.at(0).get<int>() : c.get<int>();
        if (c.is_array() && c.size() > 1 && c.at(1).get<int>() != 0)
            throw std::invalid_argument("expected an F_q polynomial, got a W2 coefficient");
        if (a0 < 0 || a0 >= F->q()) throw std::invalid_argument("coefficient code out of range");
        f.set_coeff(e, F->add(f.coeff(e), a0));
    }
    return f;
}

json w2poly_to_json(const W2Polynomial& f, const std::vector<std::string>& vars) {
    auto [p, q] = pq_of(f.field());
    json j;
    j["p"] = p;
    j["q"] = q;
    json names = json::array();
    for (int i = 0; i < f.nvars(); ++i)
        names.push_back(i < (int)vars.size() ? vars[i] : "x" + std::to_string(i));
    j["vars"] = names;
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["e"] = e;
        t["c"] = json::array({c.a0, c.a1});
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

W2Polynomial w2poly_from_json(const json& j) {
    const Field* F = field_from_pq(j.at("p").get<int>(), j.at("q").get<long>());
    int nvars = (int)j.at("vars").size();
    W2Polynomial f(F, nvars);
    for (const auto& t : j.at("terms")) {
        Exp e = t.at("e").get<Exp>();
        const auto& c = t.at("c");
        int a0 = c.at(0).get<int>();
        int a1 = c.size() > 1 ? c.at(1).get<int>() : 0;
        f.set_coeff(e, f.coeff(e) + WittScalar2(F, a0, a1));
    }
    return f;
}

json fan_to_json(const Fan& fan) {
    json j;
    j["rank"] = fan.rank();
    j["rays"] = fan.rays();
    json cones = json::array();
    for (const auto& c : fan.max_cones()) cones.push_back(c);
    j["cones"] = cones;
    return j;
}

Fan fan_from_json(const json& j) {
    int rank = j.at("rank").get<int>();
    std::vector<ZVec> rays = j.at("rays").get<std::vector<ZVec>>();
    std::vector<std::set<int>> cones;
    for (const auto& c : j.at("cones")) cones.push_back(c.get<std::set<int>>());
    return Fan(rank, std::move(rays), std::move(cones));
}

Fan catalog_fan(const std::string& name) {
    if (name == "P1") return Fan::projective_space(1);
    if (name == "P2") return Fan::projective_space(2);
    if (name == "P3") return Fan::projective_space(3);
    if (name == "P1xP1") return Fan::product_p1(2);
    if (name == "P1xP1xP1") return Fan::product_p1(3);
    if (name == "F0") return Fan::hirzebruch(0);
    if (name == "F1") return Fan::hirzebruch(1);
    if (name == "F2") return Fan::hirzebruch(2);
    if (name == "F3") return Fan::hirzebruch(3);
    if (name == "dP7") return Fan::del_pezzo(2);   // degree-7 del Pezzo = Bl_2 P^2
    if (name == "dP6") return Fan::del_pezzo(3);   // degree-6 del Pezzo = Bl_3 P^2
    if (name == "A1") return Fan::affine_line();
    throw std::invalid_argument("unknown catalog fan '" + name + "'");
}

std::vector<std::string> catalog_fan_names() {
    return {"P1", "P2", "P3", "P1xP1", "P1xP1xP1", "F0", "F1", "F2", "F3", "dP7", "dP6"};
}

json divisor_witness_to_json(const SplittingDivisorP1& d) {
    json j;
    json pts = json::array();
    for (int i = 0; i < (int)d.affine_mult.size(); ++i)
        if (d.affine_mult[i])
            pts.push_back(json::array({std::to_string(i), d.affine_mult[i]}));
    j["points"] = pts;
    j["infty"] = d.infty_mult;
    j["denominator"] = d.p - 1;
    return j;
}

json laurent_matrix_to_json(const LaurentTransitionMatrix& m) {
    json j;
    j["r"] = m.r;
    json rows = json::array();
    for (const auto& row : m.m) {
        json jr = json::array();
        for (const auto& e : row) {
            json entry;
            int64_t tval = e.is_zero() ? 0 : e.val();
            json num = json::array();
            for (const auto& [ee, c] : e.terms())
                num.push_back(json::array({ee - tval, c}));
            entry["num"] = num;
            entry["tval"] = tval;
            jr.push_back(entry);
        }
        rows.push_back(jr);
    }
    j["entries"] = rows;
    return j;
}

LaurentTransitionMatrix laurent_matrix_from_json(const Field* F, const json& j) {
    int r = j.at("r").get<int>();
    LaurentTransitionMatrix m(F, r);
    const auto& rows = j.at("entries");
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < r; ++c) {
            const auto& entry = rows.at(i).at(c);
            int64_t tval = entry.at("tval").get<int64_t>();
            for (const auto& term : entry.at("num"))
                m.m[i][c].set_coeff(term.at(0).get<int64_t>() + tval, term.at(1).get<int>());
        }
    return m;
}

} // namespace flift
