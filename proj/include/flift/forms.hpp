#pragma once

#include "flift/poly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace flift {

/**
 * Polynomial differential j-form with optional logarithmic poles.
 *
 * On a chart with coordinates x_0..x_{n-1} and a marked subset S, the basis
 * covector for i is dx_i when i is unmarked and dlog x_i = dx_i/x_i when
 * i in S.  Components are indexed by strictly increasing index tuples.
 */
class LogForm {
public:
    LogForm() : F_(nullptr), nvars_(0), degree_(0) {}
    LogForm(const Field* F, int nvars, int degree, std::set<int> marked = {});

    static LogForm zero(const Field* F, int nvars, int degree, std::set<int> marked = {});
    /// the 1-form d(g), expressed in the marked basis
    static LogForm d_of(const Poly& g, std::set<int> marked = {});
    /// single basis term c * e_{I}
    static LogForm term(const Field* F, int nvars, std::vector<int> idx, Poly coeff,
                        std::set<int> marked = {});

    const Field* field() const { return F_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::set<int>& marked() const { return marked_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<std::vector<int>, Poly>& components() const { return comps_; }
    Poly component(const std::vector<int>& idx) const;
    void set_component(const std::vector<int>& idx, const Poly& g);

    LogForm operator+(const LogForm& o) const;
    LogForm operator-(const LogForm& o) const;
    LogForm operator-() const;
    bool operator==(const LogForm& o) const;
    bool operator!=(const LogForm& o) const { return !(*this == o); }

    LogForm scaled(const Poly& g) const;
    LogForm wedge(const LogForm& o) const;
    /// exterior derivative
    LogForm d() const;
    bool is_closed() const { return d().is_zero(); }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const LogForm& o) const;

    const Field* F_;
    int nvars_;
    int degree_;
    std::set<int> marked_;
    std::map<std::vector<int>, Poly> comps_;
};

} // namespace flift
