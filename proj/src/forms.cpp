#include "flift/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flift {

namespace {

// sort idx ascending, return permutation sign, or 0 on a repeat
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

LogForm::LogForm(const Field* F, int nvars, int degree, std::set<int> marked)
    : F_(F), nvars_(nvars), degree_(degree), marked_(std::move(marked)) {
    if (degree < 0) throw std::invalid_argument("form degree out of range");
    for (int i : marked_)
        if (i < 0 || i >= nvars) throw std::invalid_argument("marked index out of range");
}

LogForm LogForm::zero(const Field* F, int nvars, int degree, std::set<int> marked) {
    return LogForm(F, nvars, degree, std::move(marked));
}

LogForm LogForm::term(const Field* F, int nvars, std::vector<int> idx, Poly coeff,
                      std::set<int> marked) {
    LogForm r(F, nvars, (int)idx.size(), std::move(marked));
    int sign = sort_sign(idx);
    if (sign == 0 || coeff.is_zero()) return r;
    r.comps_[idx] = sign == 1 ? coeff : -coeff;
    return r;
}

LogForm LogForm::d_of(const Poly& g, std::set<int> marked) {
    LogForm r(g.field(), g.nvars(), 1, std::move(marked));
    for (int k = 0; k < g.nvars(); ++k) {
        Poly c = g.derivative(k);
        if (r.marked_.count(k)) c = c * Poly::variable(g.field(), g.nvars(), k);
        if (!c.is_zero()) r.comps_[{k}] = c;
    }
    return r;
}

Poly LogForm::component(const std::vector<int>& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Poly::zero(F_, nvars_) : it->second;
}

void LogForm::set_component(const std::vector<int>& idx, const Poly& g) {
    if ((int)idx.size() != degree_) throw std::invalid_argument("component arity mismatch");
    if (g.is_zero()) comps_.erase(idx);
    else comps_[idx] = g;
}

void LogForm::check_compatible(const LogForm& o) const {
    if (F_ != o.F_ || nvars_ != o.nvars_ || degree_ != o.degree_ || marked_ != o.marked_)
        throw std::invalid_argument("incompatible forms");
}

LogForm LogForm::operator+(const LogForm& o) const {
    check_compatible(o);
    LogForm r = *this;
    for (const auto& [idx, g] : o.comps_)
        r.set_component(idx, r.component(idx) + g);
    return r;
}

LogForm LogForm::operator-() const {
    LogForm r = *this;
    for (auto& [idx, g] : r.comps_) g = -g;
    return r;
}

LogForm LogForm::operator-(const LogForm& o) const { return *this + (-o); }

bool LogForm::operator==(const LogForm& o) const {
    return F_ == o.F_ && nvars_ == o.nvars_ && degree_ == o.degree_ && marked_ == o.marked_ &&
           comps_ == o.comps_;
}

LogForm LogForm::scaled(const Poly& g) const {
    LogForm r(F_, nvars_, degree_, marked_);
    if (g.is_zero()) return r;
    for (const auto& [idx, c] : comps_) {
        Poly cg = c * g;
        if (!cg.is_zero()) r.comps_[idx] = cg;
    }
    return r;
}

LogForm LogForm::wedge(const LogForm& o) const {
    if (F_ != o.F_ || nvars_ != o.nvars_ || marked_ != o.marked_)
        throw std::invalid_argument("incompatible forms");
    LogForm r(F_, nvars_, degree_ + o.degree_, marked_);
    for (const auto& [i1, g1] : comps_)
        for (const auto& [i2, g2] : o.comps_) {
            std::vector<int> idx = i1;
            idx.insert(idx.end(), i2.begin(), i2.end());
            int sign = sort_sign(idx);
            if (sign == 0) continue;
            Poly c = g1 * g2;
            if (sign == -1) c = -c;
            r.set_component(idx, r.component(idx) + c);
        }
    return r;
}

LogForm LogForm::d() const {
    LogForm r(F_, nvars_, degree_ + 1, marked_);
    for (const auto& [idx, g] : comps_) {
        // d(g e_I) = sum_k coeff_k e_k ^ e_I with dx_k = x_k dlog x_k on marked k
        for (int k = 0; k < nvars_; ++k) {
            Poly c = g.derivative(k);
            if (marked_.count(k)) c = c * Poly::variable(F_, nvars_, k);
            if (c.is_zero()) continue;
            std::vector<int> idx2 = {k};
            idx2.insert(idx2.end(), idx.begin(), idx.end());
            int sign = sort_sign(idx2);
            if (sign == 0) continue;
            if (sign == -1) c = -c;
            r.set_component(idx2, r.component(idx2) + c);
        }
    }
    return r;
}

std::string LogForm::to_string(const std::vector<std::string>& names) const {
    if (comps_.empty()) return "0";
    auto var_name = [&](int i) {
        if (i < (int)names.size()) return names[i];
        return "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, g] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << g.to_string(names) << ")";
        for (int i : idx) {
            os << (marked_.count(i) ? " dlog " : " d") << var_name(i);
            if (i != idx.back()) os << " ^";
        }
    }
    return os.str();
}

} // namespace flift
