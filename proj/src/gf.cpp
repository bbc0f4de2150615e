#include "flift/gf.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace flift {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Built-in generator polynomials (Conway), low degree first, leading 1 dropped.
const std::map<std::pair<int, int>, std::vector<int>>& builtin_moduli() {
    static const std::map<std::pair<int, int>, std::vector<int>> tab = {
        {{2, 2}, {1, 1}},
        {{2, 3}, {1, 1, 0}},
        {{2, 4}, {1, 1, 0, 0}},
        {{2, 5}, {1, 0, 1, 0, 0}},
        {{2, 6}, {1, 1, 0, 1, 1, 0}},
        {{3, 2}, {2, 2}},
        {{3, 3}, {1, 2, 0}},
        {{3, 4}, {2, 0, 0, 2}},
        {{5, 2}, {2, 4}},
        {{7, 2}, {3, 6}},
    };
    return tab;
}

// FLIFT_FQ_MODULUS="p=3,m=2:2,2;p=2,m=4:1,1,0,0"
std::vector<int> env_modulus(int p, int m) {
    const char* env = std::getenv("FLIFT_FQ_MODULUS");
    if (!env) return {};
    std::stringstream ss(env);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
        int ep = 0, em = 0;
        auto colon = entry.find(':');
        if (colon == std::string::npos) continue;
        if (std::sscanf(entry.substr(0, colon).c_str(), "p=%d,m=%d", &ep, &em) != 2) continue;
        if (ep != p || em != m) continue;
        std::vector<int> mod;
        std::stringstream cs(entry.substr(colon + 1));
        std::string tok;
        while (std::getline(cs, tok, ','))
            mod.push_back(std::stoi(tok));
        if ((int)mod.size() != m)
            throw std::invalid_argument("FLIFT_FQ_MODULUS: expected " + std::to_string(m) +
                                        " coefficients for p=" + std::to_string(p));
        return mod;
    }
    return {};
}

// polynomial arithmetic on coefficient vectors mod p, for modulus handling
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    int m = (int)mod.size();
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (int d = (int)c.size() - 1; d >= m; --d) {
        int lead = c[d];
        if (lead == 0) continue;
        c[d] = 0;
        for (int i = 0; i < m; ++i)
            c[d - m + i] = ((c[d - m + i] - lead * mod[i]) % p + p) % p;
    }
    c.resize(m);
    return c;
}

} // namespace

Field::Field(int p, int m, std::vector<int> mod) : p_(p), m_(m), mod_(std::move(mod)) {
    if (!is_prime(p) || p > 13)
        throw std::invalid_argument("unsupported characteristic p=" + std::to_string(p));
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > 81) throw std::invalid_argument("unsupported field size q > 81");
    }
    if (m_ > 1 && (int)mod_.size() != m_)
        throw std::invalid_argument("modulus degree mismatch");

    // multiplication table via polynomial arithmetic
    mul_table_.assign(q_ * q_, 0);
    auto digits = [&](int a) {
        std::vector<int> d(m_);
        for (int i = 0; i < m_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    };
    auto code = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = m_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };
    for (int a = 0; a < q_; ++a)
        for (int b = a; b < q_; ++b) {
            int ab;
            if (m_ == 1) {
                ab = (a * b) % p_;
            } else {
                ab = code(poly_mul_mod(digits(a), digits(b), mod_, p_));
            }
            mul_table_[a * q_ + b] = ab;
            mul_table_[b * q_ + a] = ab;
        }
    inv_table_.assign(q_, 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_table_[a * q_ + b] == 1) { inv_table_[a] = b; break; }
    for (int a = 1; a < q_; ++a)
        if (inv_table_[a] == 0) throw std::logic_error("field construction: non-invertible element");
    check_irreducible();
}

void Field::check_irreducible() const {
    if (m_ == 1) return;
    // x^(q) == x and x^(p^d) != x for proper divisors d of m, in F_p[x]/(mod)
    auto frob_pow = [&](int a, int k) {
        int r = a;
        for (int i = 0; i < k; ++i) r = pow(r, p_);
        return r;
    };
    int x = p_; // code of the generator g (the class of x)
    if (frob_pow(x, m_) != x)
        throw std::logic_error("modulus is not irreducible (x^q != x)");
    for (int d = 1; d < m_; ++d)
        if (m_ % d == 0 && frob_pow(x, d) == x)
            throw std::logic_error("modulus is not irreducible (degree divides " + std::to_string(d) + ")");
}

const Field* Field::get(int p, int m) {
    static std::mutex mx;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    std::vector<int> mod;
    if (m > 1) {
        mod = env_modulus(p, m);
        if (mod.empty()) {
            auto bit = builtin_moduli().find(key);
            if (bit == builtin_moduli().end())
                throw std::invalid_argument("no generator polynomial for q = " + std::to_string(p) +
                                            "^" + std::to_string(m));
            mod = bit->second;
        }
    }
    auto field = std::unique_ptr<Field>(new Field(p, m, std::move(mod)));
    const Field* ptr = field.get();
    cache[key] = std::move(field);
    return ptr;
}

int Field::add(int a, int b) const {
    if (m_ == 1) return (a + b) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    if (m_ == 1) return (p_ - a) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_; mult *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const { return mul_table_[a * q_ + b]; }

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_table_[a];
}

int Field::pow(int a, long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::pow_p(int a, int k) const {
    int r = a;
    k = ((k % m_) + m_) % m_;
    for (int i = 0; i < k; ++i) r = pow(r, p_);
    return r;
}

int Field::from_int(long n) const {
    long r = n % p_;
    return (int)((r + p_) % p_);
}

std::string Field::to_string(int a) const {
    if (m_ == 1) return std::to_string(a);
    std::string s;
    int aa = a;
    for (int i = 0; i < m_; ++i) {
        int c = aa % p_; aa /= p_;
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += std::to_string(c);
        else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "g" : ("g^" + std::to_string(i));
        }
    }
    return s.empty() ? "0" : s;
}

int witt_carry(const Field* F, int a, int b) {
    int p = F->p();
    // binomial coefficients C(p,i)/p are integers for 0 < i < p
    long binom = 1; // C(p,i) running value
    int acc = 0;
    for (int i = 1; i < p; ++i) {
        binom = binom * (p - i + 1) / i;
        int ci = F->from_int(binom / p);
        int t = F->mul(ci, F->mul(F->pow(a, i), F->pow(b, p - i)));
        acc = F->add(acc, t);
    }
    return acc;
}

ExtField::ExtField(const Field* base, int k) : base_(base), k_(k) {
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) { mod_ = {1}; return; }
    // deterministic search for a monic irreducible of degree k over F_q:
    // iterate constant-first, test by the Frobenius fixed-point criterion
    long q = base->q();
    std::vector<int> cand(k, 0);
    auto next = [&]() {
        for (int i = 0; i < k; ++i) {
            if (cand[i] + 1 < q) { ++cand[i]; return true; }
            cand[i] = 0;
        }
        return false;
    };
    auto irreducible = [&](const std::vector<int>& mod) {
        // f of degree k is irreducible over F_q iff x^(q^k) == x mod f and
        // gcd(x^(q^(k/l)) - x, f) = 1 for every prime l | k
        std::vector<int> x(k, 0);
        if (k == 1) return true;
        x[1 % k] = 1;
        auto mulv = [&](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> c(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    c[i + j] = base_->add(c[i + j], base_->mul(a[i], b[j]));
            for (int d = (int)c.size() - 1; d >= k; --d) {
                int lead = c[d];
                if (!lead) continue;
                c[d] = 0;
                for (int i = 0; i < k; ++i)
                    c[d - k + i] = base_->sub(c[d - k + i], base_->mul(lead, mod[i]));
            }
            c.resize(k);
            return c;
        };
        auto q_power = [&](std::vector<int> a) {
            std::vector<int> r(k, 0); r[0] = 1;
            long e = q;
            while (e) {
                if (e & 1) r = mulv(r, a);
                a = mulv(a, a);
                e >>= 1;
            }
            return r;
        };
        auto degree_of = [&](const std::vector<int>& a) {
            for (int d = (int)a.size() - 1; d >= 0; --d)
                if (a[d]) return d;
            return -1;
        };
        // gcd of a residue with f itself (f represented by mod + monic x^k)
        auto gcd_with_f = [&](std::vector<int> a) {
            std::vector<int> f(k + 1);
            for (int i = 0; i < k; ++i) f[i] = mod[i];
            f[k] = 1;
            std::vector<int> g = f, h = a;
            h.resize(k + 1, 0);
            auto rem = [&](std::vector<int> num, const std::vector<int>& den) {
                int dd = degree_of(den);
                int lead_inv = base_->inv(den[dd]);
                for (int d = degree_of(num); d >= dd; d = degree_of(num)) {
                    int c = base_->mul(num[d], lead_inv);
                    for (int i = 0; i <= dd; ++i)
                        num[d - dd + i] = base_->sub(num[d - dd + i], base_->mul(c, den[i]));
                }
                return num;
            };
            while (degree_of(h) >= 0) {
                auto r = rem(g, h);
                g = h;
                h = r;
            }
            return degree_of(g);
        };
        std::vector<int> t = x;
        for (int d = 1; d <= k; ++d) {
            t = q_power(t);
            if (d < k && k % d == 0) {
                int kk = k / d;
                bool prime_cofactor = true;   // test only d = k/l for prime l
                for (int e2 = 2; e2 * e2 <= kk; ++e2)
                    if (kk % e2 == 0) { prime_cofactor = false; break; }
                if (prime_cofactor) {
                    std::vector<int> diff = t;
                    diff[1 % k] = base_->sub(diff[1 % k], 1);
                    if (gcd_with_f(diff) > 0) return false;
                }
            }
        }
        // t = x^(q^k) must reduce to x
        return t == x;
    };
    cand[0] = 1; // skip x^k (reducible)
    do {
        if (irreducible(cand)) { mod_ = cand; return; }
    } while (next());
    throw std::logic_error("no irreducible polynomial found (unreachable)");
}

ExtField::Elt ExtField::embed(int a) const {
    Elt e(k_, 0);
    e[0] = a;
    return e;
}

ExtField::Elt ExtField::gen() const {
    Elt e(k_, 0);
    if (k_ == 1) e[0] = 1;
    else e[1] = 1;
    return e;
}

bool ExtField::is_zero(const Elt& a) const {
    for (int c : a) if (c) return false;
    return true;
}

ExtField::Elt ExtField::add(const Elt& a, const Elt& b) const {
    Elt c(k_);
    for (int i = 0; i < k_; ++i) c[i] = base_->add(a[i], b[i]);
    return c;
}

ExtField::Elt ExtField::sub(const Elt& a, const Elt& b) const {
    Elt c(k_);
    for (int i = 0; i < k_; ++i) c[i] = base_->sub(a[i], b[i]);
    return c;
}

ExtField::Elt ExtField::reduce(std::vector<int> c) const {
    for (int d = (int)c.size() - 1; d >= k_; --d) {
        int lead = c[d];
        if (!lead) continue;
        c[d] = 0;
        for (int i = 0; i < k_; ++i)
            c[d - k_ + i] = base_->sub(c[d - k_ + i], base_->mul(lead, mod_[i]));
    }
    c.resize(k_);
    return c;
}

ExtField::Elt ExtField::mul(const Elt& a, const Elt& b) const {
    if (k_ == 1) return {base_->mul(a[0], b[0])};
    std::vector<int> c(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < k_; ++j)
            c[i + j] = base_->add(c[i + j], base_->mul(a[i], b[j]));
    }
    return reduce(std::move(c));
}

ExtField::Elt ExtField::mul_base(const Elt& a, int c) const {
    Elt r(k_);
    for (int i = 0; i < k_; ++i) r[i] = base_->mul(a[i], c);
    return r;
}

ExtField::Elt ExtField::frobenius(const Elt& a) const {
    // a^p by square-and-multiply
    Elt r = embed(1);
    Elt base_a = a;
    int e = p();
    while (e) {
        if (e & 1) r = mul(r, base_a);
        base_a = mul(base_a, base_a);
        e >>= 1;
    }
    return r;
}

ExtField::Elt ExtField::fp_basis(int i) const {
    // basis g_base^j * x^l with i = l*m + j
    int m = base_->m();
    int l = i / m, j = i % m;
    Elt e(k_, 0);
    int code = 1;
    for (int t = 0; t < j; ++t) code *= base_->p();  // code of g^j
    e[l] = code;
    return e;
}

std::vector<int> ExtField::fp_coords(const Elt& a) const {
    int m = base_->m(), p = base_->p();
    std::vector<int> out;
    out.reserve(fp_dim());
    for (int l = 0; l < k_; ++l) {
        int c = a[l];
        for (int j = 0; j < m; ++j) { out.push_back(c % p); c /= p; }
    }
    return out;
}

} // namespace flift
