/*
   Copyright 2026 The ffhyp Authors

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

#include "ffhyp/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

namespace ffhyp {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    Coeffs out(r.begin(), r.end());
    const std::size_t n = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    for (std::size_t k = out.size(); k-- > n;) {
        std::uint64_t c = std::uint64_t(out[k]) * lead_inv % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) {
            std::size_t idx = k - n + j;
            out[idx] = static_cast<std::uint32_t>((out[idx] + (p - c) * f[j] % p) % p);
        }
    }
    out.resize(std::min(out.size(), n));
    trim(out);
    return out;
}

Coeffs mod_poly(Coeffs a, const Coeffs& f, std::uint32_t p) {
    return mul_mod(a, Coeffs{1}, f, p);
}

Coeffs gcd_poly(Coeffs a, Coeffs b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod_poly(a, b, p);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Ben-Or: no factor of degree <= n/2 divides poly.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Coeffs f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    Coeffs x{0, 1};
    Coeffs h = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        // h <- h^p mod f
        Coeffs acc{1};
        Coeffs base = h;
        for (std::uint32_t e = p; e; e >>= 1) {
            if (e & 1) acc = mul_mod(acc, base, f, p);
            base = mul_mod(base, base, f, p);
        }
        h = acc;
        Coeffs d = h;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        Coeffs g = gcd_poly(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, int m) {
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
        Coeffs c(m + 1, 0);
        std::uint64_t r = k;
        for (int i = 0; i < m; ++i) {
            c[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        c[m] = 1;
        if (is_irreducible_mod_p(c, p)) return c;
    }
    fail(Errc::InvalidArgument, "no irreducible polynomial found");
}

FieldDesc::FieldDesc(std::uint32_t p, int m, std::vector<std::uint32_t> modulus, int base_m)
    : p_(p), m_(m), base_m_(base_m), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < m; ++i) order_ *= p;
    base_order_ = 1;
    for (int i = 0; i < base_m; ++i) base_order_ *= p;
    if (m == 1) modulus_root_ = (p - modulus_[0] % p) % p;

    neg_.resize(order_);
    for (value_type a = 0; a < order_; ++a) {
        auto d = digits(a);
        for (auto& c : d) c = (p - c) % p;
        neg_[a] = from_digits(d);
    }
    if (p != 2 && m > 1 && order_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (value_type a = 0; a < order_; ++a)
            for (value_type b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }

    // find a primitive element by walking powers
    const std::uint32_t n = order_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    log_.assign(order_, 0);
    for (value_type g = 1; g < order_; ++g) {
        Coeffs gc = digits(g);
        trim(gc);
        Coeffs x{1};
        bool ok = true;
        std::vector<value_type> powers(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            Coeffs xd = x;
            powers[i] = from_digits(xd);
            if (i > 0 && powers[i] == 1) {
                ok = false;
                break;
            }
            x = mul_mod(x, gc, modulus_, p);
        }
        if (!ok) continue;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = powers[i];
            exp_[i + n] = powers[i];
            log_[powers[i]] = i;
        }
        exp_[2 * n] = powers[0];
        break;
    }

    const std::uint32_t step = (order_ - 1) / (base_order_ - 1);
    base_elements_.push_back(0);
    for (std::uint32_t i = 0; i < base_order_ - 1; ++i) base_elements_.push_back(exp_[i * step]);
    std::sort(base_elements_.begin(), base_elements_.end());
}

FieldDesc::value_type FieldDesc::add_digits(value_type a, value_type b) const noexcept {
    value_type out = 0, scale = 1;
    for (int i = 0; i < m_; ++i) {
        value_type s = (a % p_ + b % p_) % p_;
        out += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

FieldDesc::value_type FieldDesc::pow(value_type a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) fail(Errc::InvalidArgument, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t n = order_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (((e % n) + n) % n)) % n;
    return exp_[k];
}

FieldDesc::value_type FieldDesc::frob_p(value_type a, std::int64_t k) const {
    if (a == 0) return 0;
    k %= m_;
    if (k < 0) k += m_;
    std::uint64_t e = 1;
    for (std::int64_t i = 0; i < k; ++i) e = e * p_ % (order_ - 1 == 0 ? 1 : order_ - 1);
    if (order_ - 1 == 1) return a;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % (order_ - 1)];
}

FieldDesc::value_type FieldDesc::from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
}

std::vector<std::uint32_t> FieldDesc::digits(value_type a) const {
    std::vector<std::uint32_t> d(m_, 0);
    for (int i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

FieldDesc::value_type FieldDesc::from_digits(const std::vector<std::uint32_t>& c) const {
    value_type out = 0, scale = 1;
    for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(m_); ++i) {
        out += (c[i] % p_) * scale;
        scale *= p_;
    }
    return out;
}

FieldRef make_field(std::uint32_t p, int m, std::optional<std::vector<std::uint32_t>> modulus, int base_m) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) fail(Errc::InvalidArgument, "extension degree must be positive");
    if (base_m == 0) base_m = m;
    if (base_m < 1 || m % base_m != 0) fail(Errc::InvalidArgument, "subfield degree must divide the field degree");
    std::uint64_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        if (order > (1u << 16)) fail(Errc::FieldTooLarge, "field order above 2^16");
    }
    Coeffs mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) c %= p;
        trim(mod);
        if (mod.size() != static_cast<std::size_t>(m) + 1 || mod.back() != 1)
            fail(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        if (!is_irreducible_mod_p(mod, p)) fail(Errc::ReducibleModulus, "modulus is reducible");
    } else {
        mod = default_modulus(p, m);
    }

    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, int, Coeffs, int>, std::unique_ptr<FieldDesc>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, mod, base_m);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto desc = std::unique_ptr<FieldDesc>(new FieldDesc(p, m, mod, base_m));
    FieldRef out = desc.get();
    registry.emplace(std::move(key), std::move(desc));
    return out;
}

FieldRef make_constants_field(std::uint32_t p, int base_m, int ext) {
    return make_field(p, base_m * ext, std::nullopt, base_m);
}

FieldRef with_base(FieldRef f, int base_m) { return make_field(f->p(), f->m(), f->modulus(), base_m); }

std::vector<FieldElem> base_field_elements(FieldRef f) {
    std::vector<FieldElem> out;
    for (auto v : f->base_elements()) out.emplace_back(f, v);
    return out;
}

std::vector<FieldElem> base_field_units(FieldRef f) {
    std::vector<FieldElem> out;
    for (auto v : f->base_elements())
        if (v != 0) out.emplace_back(f, v);
    return out;
}

}  // namespace ffhyp
