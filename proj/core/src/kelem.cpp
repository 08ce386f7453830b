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

#include "ffhyp/kelem.hpp"

#include <string>

namespace ffhyp {

namespace {

constexpr std::uint64_t kMaxTauDegree = std::uint64_t(1) << 24;

}  // namespace

template <>
FqPoly gcd<FieldElem>(FqPoly a, FqPoly b) {
    FieldRef f = a.context() ? a.context() : b.context();
    auto raw = [](const FqPoly& p) {
        std::vector<std::uint32_t> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.push_back(c.value());
        return v;
    };
    std::vector<std::uint32_t> x = raw(a), y = raw(b);
    // x %= y, y nonzero with trimmed leading coefficient
    auto reduce = [f](std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& d) {
        if (r.size() < d.size()) return;
        const std::size_t dn = d.size() - 1;
        const std::uint32_t inv = f->inv(d.back());
        for (std::size_t k = r.size(); k-- > dn;) {
            if (r[k] == 0) continue;
            const std::uint32_t c = f->neg(f->mul(r[k], inv));
            for (std::size_t j = 0; j < dn; ++j)
                if (d[j] != 0) r[k - dn + j] = f->add(r[k - dn + j], f->mul(c, d[j]));
        }
        r.resize(dn);
        while (!r.empty() && r.back() == 0) r.pop_back();
    };
    while (!y.empty()) {
        reduce(x, y);
        std::swap(x, y);
    }
    if (x.empty()) return FqPoly(f);
    const std::uint32_t inv = f->inv(x.back());
    std::vector<FieldElem> out;
    out.reserve(x.size());
    for (auto v : x) out.emplace_back(f, f->mul(v, inv));
    return FqPoly(f, std::move(out));
}

KElem::KElem(FqPoly num) : num_(std::move(num)), den_(FieldElem::one(num_.context())) {}

KElem::KElem(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::InvalidArgument, "division by zero in K");
    normalize();
}

void KElem::normalize() {
    if (num_.is_zero()) {
        den_ = FqPoly(FieldElem::one(den_.context()));
        return;
    }
    if (den_.degree() > 0) {
        FqPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (!den_.is_monic()) {
        FieldElem inv = den_.lead().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

std::optional<FieldElem> KElem::as_constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.coeff(0);
}

KElem KElem::operator-() const { return KElem(-num_, den_, Reduced{}); }

KElem& KElem::operator+=(const KElem& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    FqPoly g = gcd(den_, o.den_);
    FqPoly a = o.den_ / g;
    FqPoly b = den_ / g;
    num_ = num_ * a + o.num_ * b;
    den_ = den_ * a;
    normalize();
    return *this;
}

KElem& KElem::operator-=(const KElem& o) { return *this += -o; }

KElem& KElem::operator*=(const KElem& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // reduce crosswise before multiplying
    FqPoly g1 = den_.is_one() ? den_ : gcd(o.num_, den_);
    FqPoly g2 = o.den_.is_one() ? o.den_ : gcd(num_, o.den_);
    FqPoly n = (num_ / g2) * (o.num_ / g1);
    FqPoly d = (den_ / g1) * (o.den_ / g2);
    num_ = std::move(n);
    den_ = std::move(d);
    if (!den_.is_monic()) normalize();
    return *this;
}

KElem& KElem::operator/=(const KElem& o) { return *this *= o.inverse(); }

KElem KElem::inverse() const {
    if (num_.is_zero()) fail(Errc::InvalidArgument, "division by zero in K");
    FieldElem inv = num_.lead().inverse();
    return KElem(den_ * inv, num_ * inv, Reduced{});
}

KElem KElem::pow(std::int64_t e) const {
    KElem base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    return KElem(base.num_.pow(k), base.den_.pow(k), Reduced{});
}

FqPoly frobenius_tau_poly(const FqPoly& a, std::int64_t n) {
    if (n == 0 || a.is_zero()) return a;
    FieldRef f = a.context();
    std::uint64_t qn = 1;
    const std::uint64_t q = f->base_order();
    std::int64_t k = n < 0 ? -n : n;
    for (std::int64_t i = 0; i < k; ++i) {
        qn *= q;
        if (qn > kMaxTauDegree) fail(Errc::InvalidArgument, "twist produces a tau-degree above the supported bound");
    }
    const auto& c = a.coeffs();
    if (n > 0) {
        if ((c.size() - 1) * qn > kMaxTauDegree)
            fail(Errc::InvalidArgument, "twist produces a tau-degree above the supported bound");
        std::vector<FieldElem> out((c.size() - 1) * qn + 1, FieldElem::zero(f));
        for (std::size_t i = 0; i < c.size(); ++i) out[i * qn] = c[i].frob(n);
        return FqPoly(f, std::move(out));
    }
    std::vector<FieldElem> out((c.size() - 1) / qn + 1, FieldElem::zero(f));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (i % qn != 0) fail(Errc::NoRoot, "element is not a q^" + std::to_string(k) + "-th power in K");
        out[i / qn] = c[i].frob(n);
    }
    return FqPoly(f, std::move(out));
}

KElem KElem::frob(std::int64_t n) const {
    if (n == 0) return *this;
    return KElem(frobenius_tau_poly(num_, n), frobenius_tau_poly(den_, n), Reduced{});
}

KElem frobenius(const KElem& x, std::int64_t n) { return x.frob(n); }

}  // namespace ffhyp
