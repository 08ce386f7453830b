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

#ifndef FFHYP_RR_HPP
#define FFHYP_RR_HPP

#include <vector>

#include "ffhyp/func.hpp"
#include "ffhyp/residue_ring.hpp"

namespace ffhyp {

// omega = coeff * dt
template <class R>
struct Differential {
    RationalFunction<R> coeff;

    friend bool operator==(const Differential& a, const Differential& b) { return a.coeff == b.coeff; }
};

template <class R>
Divisor differential_divisor(const Differential<R>& w) {
    return divisor_of(w.coeff) - Divisor(Point::infinity(), 2);
}

/*
   Basis of L(E) = {f : (f) + E >= 0}: G t^i / h for i = 0..deg E, where h collects the
   positive finite part of E and G the negative finite part. Numerators are monic with
   ascending degree.
*/
template <class R>
std::vector<RationalFunction<R>> rr_basis(const Divisor& E, typename R::context_type ctx);

// basis of {omega : (omega) >= E}, the dt-coefficients spanning L(-E - 2[inf])
template <class R>
std::vector<Differential<R>> omega_basis(const Divisor& E, typename R::context_type ctx);

// coefficient of (t-a)^(-1) in num/den at t = a
template <class R>
R laurent_residue(const Polynomial<R>& num, const Polynomial<R>& den, const R& a);

/*
   Residue of omega at P. At a closed point this is the sum of the residues at its
   geometric points, i.e. the trace of the local residue.
*/
template <class R>
R residue(const Differential<R>& w, const Point& P);

// residue at one root of a closed point, in the residue field F_{q'}[t]/(p)
ResidueElem local_residue(const Differential<FieldElem>& w, const Point& P, const ResidueRing& ring);

// D nonzero, effective, points over F_q; ZeroConductor or InvalidArgument otherwise
void validate_conductor(const Divisor& D);

/*
   Principal part along D of f: for each point x of D with multiplicity n the polar
   part r / p^n with deg r < n deg p (coordinates: coefficients of r), and at infinity
   the polynomial part without constant term (coordinates: coefficients of t..t^n).
   Poles of f outside D are ignored; a pole of order above n is an error.
*/
template <class R>
std::vector<R> principal_part_coords(const RationalFunction<R>& f, const Divisor& D);

// the function with the given principal-part coordinates and nothing else
template <class R>
RationalFunction<R> principal_part_lift(const std::vector<R>& coords, const Divisor& D, typename R::context_type ctx);

// an element of H^0(O(D)/O) with coordinates in F_q
class PrincipalPart {
   public:
    PrincipalPart(Divisor D, std::vector<FieldElem> coords);
    static PrincipalPart zero(const Divisor& D, FieldRef f);
    static PrincipalPart of(const RatFuncFq& f, const Divisor& D);
    static PrincipalPart of(const RatFunc& f, const Divisor& D);

    const Divisor& conductor() const noexcept { return D_; }
    const std::vector<FieldElem>& coords() const noexcept { return c_; }
    FieldRef field() const noexcept { return f_; }
    bool is_zero() const;

    // the function sum r_x / p_x^n_x + P(t) with P(0) = 0
    RatFuncFq lift() const;
    // action of a function regular on D: principal part of u * lift
    PrincipalPart act(const RatFuncFq& u) const;

    PrincipalPart operator-() const;
    friend PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b);
    friend PrincipalPart operator-(const PrincipalPart& a, const PrincipalPart& b) { return a + (-b); }
    friend PrincipalPart operator*(const FieldElem& c, const PrincipalPart& a);
    friend bool operator==(const PrincipalPart& a, const PrincipalPart& b) { return a.D_ == b.D_ && a.c_ == b.c_; }

   private:
    Divisor D_;
    std::vector<FieldElem> c_;
    FieldRef f_ = nullptr;
};

// sum over supp D of the traced residues of omega * lift(alpha)
template <class R>
R res_pairing(const Differential<R>& w, const PrincipalPart& alpha);

// differentials t^i dt / H, i < deg D, H irreducible of degree deg D + 1: a basis of a
// complement of the differentials vanishing on D
std::vector<Differential<FieldElem>> conductor_dual_differentials(const Divisor& D, FieldRef f);

}  // namespace ffhyp

#endif
