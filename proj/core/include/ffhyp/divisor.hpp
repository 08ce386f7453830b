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

#ifndef FFHYP_DIVISOR_HPP
#define FFHYP_DIVISOR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ffhyp/kelem.hpp"

namespace ffhyp {

/*
   A point of the projective line: a K-rational point t = x, the point at infinity, or a
   closed point of the line over F_q given by a monic irreducible of degree >= 2.
   Degree-one closed points are stored as their rational root.
*/
class Point {
   public:
    enum class Kind { Infinity, Finite, Closed };

    Point() = default;
    static Point infinity() { return Point(); }
    static Point finite(KElem x);
    static Point finite(const FieldElem& c) { return finite(KElem(c)); }
    // p must be irreducible over F_q; degree one gives the finite root
    static Point closed(const FqPoly& p);

    Kind kind() const noexcept { return kind_; }
    bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_closed() const noexcept { return kind_ == Kind::Closed; }
    const KElem& x() const noexcept { return x_; }
    const FqPoly& poly() const noexcept { return poly_; }

    // degree over the coefficient field: deg p for closed points, else 1
    int degree() const noexcept { return kind_ == Kind::Closed ? poly_.degree() : 1; }
    // finite point with coordinate in F_{q'}
    bool is_constant() const noexcept { return kind_ == Kind::Finite && x_.is_constant(); }
    // point of the line over F_q: infinity, closed, or finite with coordinate in F_q
    bool is_base_rational() const;

    Point twist(std::int64_t n) const;

    friend bool operator==(const Point& a, const Point& b) {
        return a.kind_ == b.kind_ && a.x_ == b.x_ && a.poly_ == b.poly_;
    }
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        if (a.kind_ == Kind::Finite) return a.x_ <=> b.x_;
        if (a.kind_ == Kind::Closed) return a.poly_ <=> b.poly_;
        return std::strong_ordering::equal;
    }

   private:
    Kind kind_ = Kind::Infinity;
    KElem x_;
    FqPoly poly_;
};

class Divisor {
   public:
    using Terms = std::map<Point, std::int64_t>;

    Divisor() = default;
    explicit Divisor(const Point& p, std::int64_t k = 1) { add(p, k); }

    const Terms& terms() const noexcept { return terms_; }
    std::int64_t multiplicity(const Point& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }
    std::int64_t degree() const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_effective() const;
    bool is_base_rational() const;
    std::vector<Point> support() const;
    Divisor positive_part() const;
    // -(negative part), an effective divisor
    Divisor negative_part() const;

    void add(const Point& p, std::int64_t k);
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor operator-() const;
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(std::int64_t k, const Divisor& d);

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

   private:
    Terms terms_;
};

Divisor div_twist(const Divisor& E, std::int64_t n);

// whether two points have a common geometric point
bool points_meet(const Point& a, const Point& b);
bool supported_away(const Divisor& E, const Divisor& D);

// the roots of a closed point in the constants field, or FieldTooSmall
std::vector<Point> splice_closed(const Point& P, FieldRef constants);
// E with every closed point replaced by the sum of its roots
Divisor splice_divisor(const Divisor& E, FieldRef constants);

}  // namespace ffhyp

#endif
