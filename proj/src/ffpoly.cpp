/*
   Copyright 2026 the wblock authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "wb/ffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wb/numth.hpp"

namespace wb {

namespace {

using Vec = std::vector<std::uint32_t>;

// ---------------------------------------------------------------------
// Polynomial arithmetic over the prime field F_r, used only while the
// element table is being constructed (before exp/log exist).
// ---------------------------------------------------------------------

void pf_strip(Vec& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Vec pf_mul(const Vec& a, const Vec& b, std::uint32_t r) {
    if (a.empty() || b.empty())
        return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % r);
    }
    return out;
}

// Reduce a modulo monic f, in place.
void pf_mod(Vec& a, const Vec& f, std::uint32_t r) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (std::size_t i = 0; i < df; ++i) {
                std::uint64_t sub =
                    static_cast<std::uint64_t>(lead) * f[i] % r;
                std::uint32_t& c = a[shift + i];
                c = static_cast<std::uint32_t>((c + r - sub) % r);
            }
        }
        a.pop_back();
    }
    pf_strip(a);
}

Vec pf_powmod(Vec base, std::uint64_t e, const Vec& f, std::uint32_t r) {
    Vec result{1};
    pf_mod(base, f, r);
    while (e > 0) {
        if (e & 1) {
            result = pf_mul(result, base, r);
            pf_mod(result, f, r);
        }
        base = pf_mul(base, base, r);
        pf_mod(base, f, r);
        e >>= 1;
    }
    return result;
}

Vec pf_gcd(Vec a, Vec b, std::uint32_t r) {
    pf_strip(a);
    pf_strip(b);
    while (!b.empty()) {
        // Normalise b to monic so pf_mod applies.
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint64_t il = mod_pow(lead, r - 2, r);
            for (auto& c : b)
                c = static_cast<std::uint32_t>(c * il % r);
        }
        pf_mod(a, b, r);
        std::swap(a, b);
    }
    return a;
}

// Distinct-degree criterion: monic f of degree k is irreducible iff
// gcd(x^{r^m} - x, f) = 1 for all 1 <= m <= k/2.
bool pf_irreducible(const Vec& f, std::uint32_t r) {
    const std::size_t k = f.size() - 1;
    if (k == 1)
        return true;
    Vec t{0, 1};
    for (std::size_t m = 1; m <= k / 2; ++m) {
        t = pf_powmod(t, r, f, r);
        Vec diff = t;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + r - 1) % r);
        Vec g = pf_gcd(diff, f, r);
        if (g.size() > 1)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Polynomial arithmetic over a FieldElementTable.
// ---------------------------------------------------------------------

void vstrip(Vec& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Vec vmul(const FieldElementTable& F, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty())
        return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0)
                continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return out;
}

// Reduce a modulo f in place; f need not be monic.
void vmod(const FieldElementTable& F, Vec& a, const Vec& f) {
    const std::size_t df = f.size() - 1;
    const std::uint32_t ilead = F.inv(f.back());
    while (a.size() > df) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            std::uint32_t scale = F.mul(lead, ilead);
            for (std::size_t i = 0; i < df; ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(scale, f[i]));
        }
        a.pop_back();
    }
    vstrip(a);
}

Vec vgcd(const FieldElementTable& F, Vec a, Vec b) {
    vstrip(a);
    vstrip(b);
    while (!b.empty()) {
        vmod(F, a, b);
        std::swap(a, b);
    }
    return a;
}

Vec vpowmod(const FieldElementTable& F, Vec base, std::uint64_t e,
            const Vec& f) {
    Vec result{1};
    vmod(F, base, f);
    while (e > 0) {
        if (e & 1) {
            result = vmul(F, result, base);
            vmod(F, result, f);
        }
        base = vmul(F, base, base);
        vmod(F, base, f);
        e >>= 1;
    }
    return result;
}

bool v_is_irreducible(const FieldElementTable& F, const Vec& f) {
    const std::size_t k = f.size() - 1;
    if (k == 1)
        return true;
    // Cheap root scan decides degrees 2 and 3 outright and prunes the
    // rest, but only pays off over small fields.
    if (F.order() <= 256 || k <= 3) {
        for (std::uint32_t x = 0; x < F.order(); ++x) {
            std::uint32_t acc = 0;
            for (std::size_t i = f.size(); i-- > 0;)
                acc = F.add(F.mul(acc, x), f[i]);
            if (acc == 0)
                return false;
        }
        if (k <= 3)
            return true;
    }
    Vec t{0, 1};
    for (std::size_t m = 1; m <= k / 2; ++m) {
        t = vpowmod(F, t, F.order(), f);
        Vec diff = t;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = F.sub(diff[1], 1);
        Vec g = vgcd(F, diff, f);
        if (g.size() > 1)
            return false;
    }
    return true;
}

std::string poly_to_string(const Vec& coeffs, std::uint32_t order) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || coeffs[i] != 1)
            os << coeffs[i];
        if (i >= 1) {
            os << "x";
            if (i >= 2)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    os << " over GF(" << order << ")";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------
// FieldElementTable
// ---------------------------------------------------------------------

FieldElementTable::FieldElementTable(std::uint32_t order) {
    if (order < 2 || order > 65536)
        throw Error(ErrorKind::OutOfRange,
                    "field order must lie in [2, 65536], got " +
                        std::to_string(order));
    std::uint64_t r64 = 0;
    unsigned k = 0;
    if (!is_prime_power(order, &r64, &k))
        throw Error(ErrorKind::OutOfRange,
                    "field order must be a prime power, got " +
                        std::to_string(order));
    q_ = order;
    r_ = static_cast<std::uint32_t>(r64);
    k_ = k;

    // Modulus: lexicographically first monic irreducible of degree k
    // over F_r (irrelevant when k = 1).
    Vec h;
    if (k_ >= 2) {
        for (std::uint64_t code = 0;; ++code) {
            Vec cand(k_ + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < k_; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % r_);
                c /= r_;
            }
            cand[k_] = 1;
            if (pf_irreducible(cand, r_)) {
                h = cand;
                break;
            }
        }
    }

    auto pack = [&](const Vec& poly) {
        std::uint32_t code = 0;
        for (std::size_t i = poly.size(); i-- > 0;)
            code = code * r_ + poly[i];
        return code;
    };
    auto unpack = [&](std::uint32_t code) {
        Vec poly(k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
            poly[i] = code % r_;
            code /= r_;
        }
        pf_strip(poly);
        return poly;
    };

    // Find a generator: its order must hit every maximal divisor test.
    const std::uint64_t m = q_ - 1;
    std::vector<std::uint64_t> mprimes;
    if (m > 1) {
        mprimes = factor(m);
        mprimes.erase(std::unique(mprimes.begin(), mprimes.end()),
                      mprimes.end());
    }
    auto pf_pow_elem = [&](const Vec& a, std::uint64_t e) {
        if (k_ == 1) {
            std::uint64_t base = a.empty() ? 0 : a[0];
            return Vec{static_cast<std::uint32_t>(mod_pow(base, e, r_))};
        }
        return pf_powmod(a, e, h, r_);
    };
    Vec gen_poly;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        Vec a = unpack(cand);
        bool primitive = true;
        for (std::uint64_t w : mprimes) {
            Vec t = pf_pow_elem(a, m / w);
            pf_strip(t);
            if (t.size() == 1 && t[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_poly = a;
            gen_ = cand;
            break;
        }
    }
    if (m == 1)
        gen_ = 1;  // F_2 has a trivial unit group

    exp_.assign(m, 1);
    log_.assign(q_, 0);
    Vec cur{1};
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint32_t code = pack(cur);
        exp_[i] = code;
        log_[code] = static_cast<std::uint32_t>(i);
        if (k_ == 1) {
            std::uint64_t v = cur.empty() ? 0 : cur[0];
            cur = Vec{static_cast<std::uint32_t>(
                v * (gen_poly.empty() ? 0 : gen_poly[0]) % r_)};
        } else {
            cur = pf_mul(cur, gen_poly, r_);
            pf_mod(cur, h, r_);
        }
    }
}

std::uint32_t FieldElementTable::add(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 2)
        return a ^ b;
    if (k_ == 1)
        return (a + b) % r_;
    std::uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (a % r_ + b % r_) % r_ * mult;
        a /= r_;
        b /= r_;
        mult *= r_;
    }
    return out;
}

std::uint32_t FieldElementTable::neg(std::uint32_t a) const {
    if (r_ == 2)
        return a;
    if (k_ == 1)
        return (r_ - a) % r_;
    std::uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (r_ - a % r_) % r_ * mult;
        a /= r_;
        mult *= r_;
    }
    return out;
}

std::uint32_t FieldElementTable::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FieldElementTable::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= q_ - 1)
        s -= q_ - 1;
    return exp_[s];
}

std::uint32_t FieldElementTable::inv(std::uint32_t a) const {
    if (a == 0)
        throw Error(ErrorKind::OutOfRange, "inverse of zero");
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldElementTable::div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
}

std::uint32_t FieldElementTable::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0)
        return e == 0 ? 1 : 0;
    std::uint64_t m = q_ - 1;
    std::uint64_t l = log_[a] % m;
    return exp_[l * (e % m) % m];
}

std::uint64_t FieldElementTable::element_order(std::uint32_t a) const {
    if (a == 0)
        throw Error(ErrorKind::OutOfRange, "order of zero");
    std::uint64_t m = q_ - 1;
    if (m == 0)
        return 1;
    return m / std::gcd<std::uint64_t>(log_[a], m);
}

// ---------------------------------------------------------------------
// MonicPoly
// ---------------------------------------------------------------------

MonicPoly::MonicPoly(std::uint32_t order, std::vector<std::uint32_t> cs)
    : field_order(order), coeffs(std::move(cs)) {
    if (field_order < 2)
        throw Error(ErrorKind::OutOfRange, "coefficient field order < 2");
    if (coeffs.size() < 2)
        throw Error(ErrorKind::OutOfRange,
                    "monic polynomial needs degree >= 1");
    if (coeffs.back() != 1)
        throw Error(ErrorKind::OutOfRange,
                    "leading coefficient must be 1");
    for (std::uint32_t c : coeffs)
        if (c >= field_order)
            throw Error(ErrorKind::OutOfRange,
                        "coefficient code outside the field");
}

MonicPoly MonicPoly::from_index(std::uint32_t order, unsigned degree,
                                std::uint64_t index) {
    if (degree < 1)
        throw Error(ErrorKind::OutOfRange, "degree must be >= 1");
    std::vector<std::uint32_t> cs(degree + 1, 0);
    std::uint64_t rest = index;
    for (unsigned i = 0; i < degree; ++i) {
        cs[i] = static_cast<std::uint32_t>(rest % order);
        rest /= order;
    }
    if (rest != 0)
        throw Error(ErrorKind::OutOfRange,
                    "index exceeds the number of monic polynomials");
    cs[degree] = 1;
    return MonicPoly(order, std::move(cs));
}

std::string MonicPoly::render() const {
    return poly_to_string(coeffs, field_order);
}

// ---------------------------------------------------------------------
// Free polynomial operations
// ---------------------------------------------------------------------

namespace {

void check_field(const FieldElementTable& F, const MonicPoly& f) {
    if (f.field_order != F.order())
        throw Error(ErrorKind::InconsistentField,
                    "polynomial is over GF(" + std::to_string(f.field_order) +
                        ") but the table is GF(" + std::to_string(F.order()) +
                        ")");
}

}  // namespace

MonicPoly find_irreducible(const FieldElementTable& F, unsigned degree) {
    if (degree < 1)
        throw Error(ErrorKind::OutOfRange, "degree must be >= 1");
    for (std::uint64_t idx = 0;; ++idx) {
        MonicPoly cand = MonicPoly::from_index(F.order(), degree, idx);
        if (is_irreducible(F, cand))
            return cand;
    }
}

bool is_irreducible(const FieldElementTable& F, const MonicPoly& f) {
    check_field(F, f);
    return v_is_irreducible(F, f.coeffs);
}

std::uint32_t poly_eval(const FieldElementTable& F, const MonicPoly& f,
                        std::uint32_t x) {
    check_field(F, f);
    std::uint32_t acc = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

std::vector<std::uint32_t> poly_mulmod(const FieldElementTable& F,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const MonicPoly& f) {
    check_field(F, f);
    Vec out = vmul(F, a, b);
    vmod(F, out, f.coeffs);
    return out;
}

std::vector<std::uint32_t> poly_powmod(const FieldElementTable& F,
                                       const std::vector<std::uint32_t>& base,
                                       std::uint64_t e, const MonicPoly& f) {
    check_field(F, f);
    return vpowmod(F, base, e, f.coeffs);
}

std::uint64_t root_order(const FieldElementTable& F, const MonicPoly& f) {
    check_field(F, f);
    if (f.coeffs[0] == 0)
        throw Error(ErrorKind::NonInvertibleRoot,
                    "root order needs f(0) != 0");
    if (!is_irreducible(F, f))
        throw Error(ErrorKind::HypothesisViolation,
                    "root order needs an irreducible polynomial");
    std::uint64_t n = checked_pow(F.order(), f.degree()) - 1;
    // F_2 with a linear polynomial: the only unit is 1
    if (n == 1)
        return 1;
    auto primes = factor(n);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::uint64_t order = n;
    const Vec x{0, 1};
    for (std::uint64_t w : primes) {
        while (order % w == 0) {
            Vec t = vpowmod(F, x, order / w, f.coeffs);
            if (t.size() == 1 && t[0] == 1)
                order /= w;
            else
                break;
        }
    }
    return order;
}

MonicPoly star_involution(const FieldElementTable& F, const MonicPoly& f) {
    check_field(F, f);
    if (f.coeffs[0] == 0)
        throw Error(ErrorKind::NonInvertibleRoot,
                    "reciprocal of a polynomial with root zero");
    const unsigned e = f.degree();
    const std::uint32_t c0inv = F.inv(f.coeffs[0]);
    std::vector<std::uint32_t> out(e + 1);
    for (unsigned j = 0; j <= e; ++j)
        out[j] = F.mul(f.coeffs[e - j], c0inv);
    return MonicPoly(F.order(), std::move(out));
}

MonicPoly dagger_involution(const FieldElementTable& F, const MonicPoly& f,
                            std::uint32_t q) {
    check_field(F, f);
    if (q < 2 || static_cast<std::uint64_t>(q) * q != F.order())
        throw Error(ErrorKind::InconsistentField,
                    "dagger needs the field of order q^2 with q = " +
                        std::to_string(q));
    MonicPoly rec = star_involution(F, f);
    for (auto& c : rec.coeffs)
        c = F.pow(c, q);
    return rec;
}

// ---------------------------------------------------------------------
// QuotientField
// ---------------------------------------------------------------------

QuotientField::QuotientField(const FieldElementTable& base, MonicPoly modulus)
    : F_(&base), h_(std::move(modulus)), e_(h_.degree()) {
    check_field(base, h_);
    if (!is_irreducible(base, h_))
        throw Error(ErrorKind::HypothesisViolation,
                    "quotient modulus must be irreducible: " + h_.render());
    order_ = checked_pow(base.order(), e_);
    if (order_ >= 2) {
        std::uint64_t m = order_ - 1;
        if (m > 1) {
            unit_primes_ = factor(m);
            unit_primes_.erase(
                std::unique(unit_primes_.begin(), unit_primes_.end()),
                unit_primes_.end());
        }
    }
}

QuotientField::Elem QuotientField::zero() const { return Elem(e_, 0); }

QuotientField::Elem QuotientField::one() const {
    Elem v(e_, 0);
    v[0] = 1;
    return v;
}

QuotientField::Elem QuotientField::from_base(std::uint32_t c) const {
    Elem v(e_, 0);
    v[0] = c % F_->order();
    return v;
}

QuotientField::Elem QuotientField::gen() const {
    Elem v(e_, 0);
    if (e_ >= 2)
        v[1] = 1;
    // When e = 1 the modulus is linear, x - c, and y represents c.
    else
        v[0] = F_->neg(h_.coeffs[0]);
    return v;
}

bool QuotientField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(),
                       [](std::uint32_t c) { return c == 0; });
}

bool QuotientField::is_base(const Elem& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0)
            return false;
    return true;
}

QuotientField::Elem QuotientField::add(const Elem& a, const Elem& b) const {
    Elem out(e_);
    for (unsigned i = 0; i < e_; ++i)
        out[i] = F_->add(a[i], b[i]);
    return out;
}

QuotientField::Elem QuotientField::sub(const Elem& a, const Elem& b) const {
    Elem out(e_);
    for (unsigned i = 0; i < e_; ++i)
        out[i] = F_->sub(a[i], b[i]);
    return out;
}

QuotientField::Elem QuotientField::mul(const Elem& a, const Elem& b) const {
    Vec prod = vmul(*F_, a, b);
    vmod(*F_, prod, h_.coeffs);
    prod.resize(e_, 0);
    return prod;
}

QuotientField::Elem QuotientField::pow(const Elem& a, std::uint64_t e) const {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t QuotientField::element_order(const Elem& a) const {
    if (is_zero(a))
        throw Error(ErrorKind::OutOfRange, "order of zero");
    std::uint64_t o = order_ - 1;
    for (std::uint64_t w : unit_primes_) {
        while (o % w == 0 && pow(a, o / w) == one())
            o /= w;
    }
    return o;
}

QuotientField::Elem QuotientField::element_of_order(std::uint64_t n) const {
    if (n == 0 || (order_ - 1) % n != 0)
        throw Error(ErrorKind::HypothesisViolation,
                    std::to_string(n) + " does not divide the unit group "
                                        "order " +
                        std::to_string(order_ - 1));
    const std::uint64_t cofactor = (order_ - 1) / n;
    for (std::uint64_t code = 1; code < order_; ++code) {
        Elem cand(e_);
        std::uint64_t c = code;
        for (unsigned i = 0; i < e_; ++i) {
            cand[i] = static_cast<std::uint32_t>(c % F_->order());
            c /= F_->order();
        }
        Elem t = pow(cand, cofactor);
        if (!is_zero(t) && element_order(t) == n)
            return t;
    }
    throw Error(ErrorKind::HypothesisViolation,
                "no element of order " + std::to_string(n));
}

MonicPoly QuotientField::min_poly(const Elem& a) const {
    // Frobenius orbit of a.
    std::vector<Elem> orbit{a};
    Elem b = pow(a, F_->order());
    while (!(b == a)) {
        orbit.push_back(b);
        b = pow(b, F_->order());
    }
    // Product of (x - c) over the orbit, computed in R[x].
    std::vector<Elem> poly{one()};
    for (const Elem& c : orbit) {
        std::vector<Elem> next(poly.size() + 1, zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = add(next[i + 1], poly[i]);
            next[i] = sub(next[i], mul(c, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<std::uint32_t> down(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!is_base(poly[i]))
            throw Error(ErrorKind::HypothesisViolation,
                        "minimal polynomial coefficient escaped the base "
                        "field");
        down[i] = poly[i][0];
    }
    return MonicPoly(F_->order(), std::move(down));
}

// ---------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------

std::uint64_t min_poly_degree(std::uint64_t Q, std::uint64_t p,
                              std::uint64_t zeta_order) {
    if (Q < 2)
        throw Error(ErrorKind::OutOfRange, "Q must be >= 2");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime, got " + std::to_string(p));
    if ((Q - 1) % p != 0)
        throw Error(ErrorKind::HypothesisViolation,
                    "p must divide Q - 1");
    if (zeta_order == 0)
        throw Error(ErrorKind::HypothesisViolation,
                    "zeta_order must be a positive power of p");
    unsigned e = 0;
    std::uint64_t t = zeta_order;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1)
        throw Error(ErrorKind::HypothesisViolation,
                    "zeta_order must be a power of p, got " +
                        std::to_string(zeta_order));
    unsigned a = 0;
    t = Q - 1;
    while (t % p == 0) {
        t /= p;
        ++a;
    }
    return e <= a ? 1 : checked_pow(p, e - a);
}

std::uint64_t det_of_irreducible_semisimple(std::uint64_t zeta_order,
                                            std::uint64_t Q, unsigned d,
                                            std::uint64_t nprime) {
    if (d == 0)
        throw Error(ErrorKind::Degenerate,
                    "zero-dimensional eigenvalue block");
    if (Q < 2 || zeta_order == 0)
        throw Error(ErrorKind::OutOfRange, "need Q >= 2 and zeta_order >= 1");
    if (Q > UINT32_MAX)
        throw Error(ErrorKind::OutOfRange, "Q exceeds 32 bits");
    mpz_class top = mpz_pow(Q, d) - 1;
    mpz_class denom(static_cast<unsigned long>(Q - 1));
    if (!mpz_divisible_p(top.get_mpz_t(), denom.get_mpz_t()))
        throw Error(ErrorKind::HypothesisViolation, "internal: Q - 1 must "
                                                    "divide Q^d - 1");
    mpz_class sum = top / denom;
    mpz_class zo(static_cast<unsigned long>(zeta_order));
    if (!mpz_divisible_p(top.get_mpz_t(), zo.get_mpz_t()))
        throw Error(ErrorKind::HypothesisViolation,
                    "zeta_order must divide Q^d - 1");
    mpz_class red = sum % zo;
    std::uint64_t base = mpz_get_ui(red.get_mpz_t());
    return mod_mul(base % zeta_order, nprime % zeta_order, zeta_order);
}

// ---------------------------------------------------------------------
// Constructive lemma verification
// ---------------------------------------------------------------------

VerifyReport verify_degree_lemma(std::uint32_t q, std::uint64_t p,
                                 unsigned degree_bound) {
    VerifyReport rep;
    rep.suite = "degree-lemma q=" + std::to_string(q) +
                " p=" + std::to_string(p);
    if (q > 16)
        throw Error(ErrorKind::OutOfRange, "q must be <= 16");
    if (degree_bound < 1 || degree_bound > 8)
        throw Error(ErrorKind::OutOfRange,
                    "degree_bound must lie in [1, 8]");
    if (!is_prime_power(q))
        throw Error(ErrorKind::HypothesisViolation,
                    "q must be a prime power");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime");
    if (q % p == 0)
        throw Error(ErrorKind::HypothesisViolation, "p must not divide q");

    const std::uint64_t e = mult_order(static_cast<std::int64_t>(q), p);
    if (e > degree_bound)
        return rep;  // no qualifying polynomials inside the bound

    FieldElementTable F(q);
    QuotientField R(F, find_irreducible(F, static_cast<unsigned>(e)));
    const QuotientField::Elem omega = R.element_of_order(p);

    // Orbit representatives of (Z/p)^* under multiplication by q.
    std::vector<bool> seen(p, false);
    std::uint64_t reps = 0;
    for (std::uint64_t u = 1; u < p; ++u) {
        if (seen[u])
            continue;
        std::uint64_t v = u;
        do {
            seen[v] = true;
            v = v * (q % p) % p;
        } while (v != u);
        ++reps;

        MonicPoly delta = R.min_poly(R.pow(omega, u));
        ++rep.cases;
        if (!is_irreducible(F, delta))
            rep.record_violation("not irreducible: " + delta.render());
        // Root order exactly p, checked on the polynomial itself.
        Vec x{0, 1};
        Vec xp = vpowmod(F, x, p, delta.coeffs);
        // Order exactly p: x^p = 1 mod delta and x != 1 mod delta, the
        // latter failing only for delta = x - 1.
        bool order_p = xp.size() == 1 && xp[0] == 1 &&
                       !(delta.degree() == 1 && delta.coeffs[0] == F.neg(1));
        if (!order_p)
            rep.record_violation("root order is not p: " + delta.render());
        if (delta.degree() != e)
            rep.record_violation("degree " + std::to_string(delta.degree()) +
                                 " != ord(q mod p) = " + std::to_string(e) +
                                 ": " + delta.render());
        const MonicPoly rec = star_involution(F, delta);
        const bool self_reciprocal = rec == delta;
        if (delta.degree() % 2 == 0) {
            std::uint64_t half = delta.degree() / 2;
            if (mod_pow(q, half, p) != p - 1)
                rep.record_violation(
                    "even degree but p does not divide q^(e/2)+1: " +
                    delta.render());
            if (!self_reciprocal)
                rep.record_violation(
                    "even degree but not reciprocal-fixed: " +
                    delta.render());
        } else if (self_reciprocal) {
            rep.record_violation(
                "reciprocal-fixed polynomial of odd degree: " +
                delta.render());
        }
    }
    ++rep.cases;
    if (reps != (p - 1) / e)
        rep.record_violation("family size " + std::to_string(reps) +
                             " != (p-1)/e = " + std::to_string((p - 1) / e));
    return rep;
}

VerifyReport verify_unitary_lemma(std::uint32_t q, std::uint64_t p,
                                  unsigned degree_bound) {
    VerifyReport rep;
    rep.suite = "unitary-lemma q=" + std::to_string(q) +
                " p=" + std::to_string(p);
    if (static_cast<std::uint64_t>(q) * q > 65536)
        throw Error(ErrorKind::OutOfRange, "q^2 must be <= 65536");
    if (degree_bound < 1 || degree_bound > 8)
        throw Error(ErrorKind::OutOfRange,
                    "degree_bound must lie in [1, 8]");
    if (!is_prime_power(q))
        throw Error(ErrorKind::HypothesisViolation,
                    "q must be a prime power");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime");
    if ((q + 1) % p != 0)
        throw Error(ErrorKind::HypothesisViolation, "p must divide q + 1");

    const std::uint32_t Q = q * q;
    FieldElementTable F(Q);
    unsigned ahat = 0;
    {
        std::uint64_t t = Q - 1;
        while (t % p == 0) {
            t /= p;
            ++ahat;
        }
    }

    // Degree 1: every element of p-power order gives x - zeta.
    const std::uint64_t phat = checked_pow(p, ahat);
    const std::uint32_t zroot = F.pow(F.generator(), (Q - 1) / phat);
    std::uint32_t zeta = 1;
    for (std::uint64_t t = 0; t < phat; ++t) {
        MonicPoly delta(Q, {F.neg(zeta), 1});
        ++rep.cases;
        if (!(dagger_involution(F, delta, q) == delta))
            rep.record_violation("degree-1 not dagger-fixed: " +
                                 delta.render());
        if (F.pow(zeta, phat) != 1)
            rep.record_violation("constructed root order is not a p-power: " +
                                 delta.render());
        zeta = F.mul(zeta, zroot);
    }

    // Degree p: the roots of order p^{ahat+1}. Higher p-power orders
    // force degree p^2 > 8 >= degree_bound, so the bound admits none.
    if (p <= degree_bound) {
        QuotientField R(F, find_irreducible(F, static_cast<unsigned>(p)));
        const std::uint64_t big = checked_pow(p, ahat + 1);
        const QuotientField::Elem omega = R.element_of_order(big);
        std::vector<bool> seen(big, false);
        std::uint64_t reps = 0;
        for (std::uint64_t u = 1; u < big; ++u) {
            if (u % p == 0 || seen[u])
                continue;
            std::uint64_t v = u;
            do {
                seen[v] = true;
                v = v * (Q % big) % big;
            } while (v != u);
            ++reps;

            MonicPoly delta = R.min_poly(R.pow(omega, u));
            ++rep.cases;
            if (delta.degree() != p)
                rep.record_violation("orbit degree " +
                                     std::to_string(delta.degree()) +
                                     " != p: " + delta.render());
            if (!is_irreducible(F, delta))
                rep.record_violation("not irreducible: " + delta.render());
            Vec x{0, 1};
            Vec hi = vpowmod(F, x, big, delta.coeffs);
            Vec lo = vpowmod(F, x, big / p, delta.coeffs);
            bool exact = hi.size() == 1 && hi[0] == 1 &&
                         !(lo.size() == 1 && lo[0] == 1);
            if (!exact)
                rep.record_violation("root order is not exactly p^" +
                                     std::to_string(ahat + 1) + ": " +
                                     delta.render());
            if (!(dagger_involution(F, delta, q) == delta))
                rep.record_violation("degree-p not dagger-fixed: " +
                                     delta.render());
        }
        ++rep.cases;
        const std::uint64_t expect = checked_pow(p, ahat - 1) * (p - 1);
        if (reps != expect)
            rep.record_violation("family size " + std::to_string(reps) +
                                 " != " + std::to_string(expect));
    }
    return rep;
}

}  // namespace wb
