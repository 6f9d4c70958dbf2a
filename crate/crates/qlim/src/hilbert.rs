//! Exact Poincaré series.
//!
//! A graded vector space with finite-dimensional pieces is summarised by its
//! Poincaré series `sum_d dim(V_d) t^d`.  Everything of interest here is a
//! rational function in `t` with integer coefficients, so a series is stored
//! as a fraction of integer polynomials and *never* floated: equality is
//! decided by cross-multiplication and coefficients are extracted by long
//! division, which is exact whenever the denominator has constant term
//! `+/-1` (all denominators in this crate are products of `1 - t^k`).
//!
//! The named series:
//!
//! * [`algebra_series`]`(n)` — the bigraded algebra `A_n`;
//! * [`chi1`] — `A_1`, the rank-one case;
//! * [`chi2`] — the Steinberg multiplicity `dim Hom_{S_3}(St, A_2^d)`;
//! * [`chi20`], [`chi21`], [`chi22`] — Steinberg multiplicities of the three
//!   graded pieces of `A_2` as a module over `F_2[y_1, y_2]^{S_3}`:
//!   the polynomial part, and the spans of `{x_1, x_2, x_1', x_2'}`-words of
//!   exterior length one and two;
//! * [`a3_invariant_series`] — `A_3`-invariant polynomials in `F_2[y_1, y_2]`;
//! * [`dickson_series`] — `S_3`-invariant (Dickson) polynomials, the series
//!   of `F_2[c_2, c_3]` with `deg c_2 = 4`, `deg c_3 = 6`;
//! * [`chi0`] — the limit algebra `F_2[b_2, b_3] (x) E(d_3, d_3', d_5, d_5')`
//!   with degrees `4, 6, 3, 3, 5, 5`;
//! * [`lim1_polynomial`] — the (finite) series of the derived limit;
//! * [`xs_series`] — `chi0 + t * lim1`, the cohomology of the Borel
//!   construction the limit computation assembles.
//!
//! The closed-form identities tying these together are exposed as exact
//! predicates so the verification suite can certify them as rational
//! functions, not merely up to some order.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `t` with `BigInt` coefficients; `coeffs[d]` is the
/// coefficient of `t^d` and trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::term(1, 0)
    }

    /// The monomial `c * t^d`.
    pub fn term(c: i64, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::from(c);
        IntPoly { coeffs }.trimmed()
    }

    /// Builds a polynomial from low-degree-first coefficients.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        IntPoly { coeffs: cs.iter().map(|&c| BigInt::from(c)).collect() }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Low-degree-first coefficients up to and including `t^order`.
    pub fn coefficients(&self, order: usize) -> Vec<BigInt> {
        (0..=order).map(|d| self.coeff(d)).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        IntPoly { coeffs }.trimmed()
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect();
        IntPoly { coeffs }.trimmed()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.trimmed()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            let lead_neg = first && c.is_negative();
            let sign = if lead_neg { "-" } else { "" };
            match d {
                0 => write!(f, "{sign}{mag}")?,
                _ => {
                    if mag.is_one() {
                        write!(f, "{sign}")?;
                    } else {
                        write!(f, "{sign}{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `1 - t^k`.
pub fn one_minus(k: usize) -> IntPoly {
    &IntPoly::one() - &IntPoly::term(1, k)
}

/// `1 + t^k`.
pub fn one_plus(k: usize) -> IntPoly {
    &IntPoly::one() + &IntPoly::term(1, k)
}

/// A formal power series presented as a fraction `num / den` of integer
/// polynomials.  The constant term of `den` must be `+1` or `-1`, which
/// makes coefficient extraction exact over the integers.
#[derive(Clone)]
pub struct RationalSeries {
    num: IntPoly,
    den: IntPoly,
}

impl RationalSeries {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantDenominator);
        }
        if !c0.magnitude().is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        Ok(RationalSeries { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalSeries { num: p, den: IntPoly::one() }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn mul_poly(&self, p: &IntPoly) -> RationalSeries {
        RationalSeries { num: &self.num * p, den: self.den.clone() }
    }

    /// Exact equality as rational functions, decided by cross-multiplication
    /// (no expansion, no truncation).
    pub fn eq_series(&self, other: &RationalSeries) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The power-series coefficients of `t^0 .. t^order`, by long division.
    pub fn coefficients(&self, order: usize) -> Vec<BigInt> {
        let d0 = self.den.coeff(0);
        let mut out = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                c -= self.den.coeff(j) * &out[k - j];
            }
            // d0 is +/-1 so this division is exact.
            out.push(c / &d0);
        }
        out
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coefficients(degree).pop().unwrap()
    }

    /// Coefficients reinterpreted as dimensions; fails on any negative
    /// coefficient so dimension tables can never silently go wrong.
    pub fn dims(&self, order: usize) -> Result<Vec<usize>> {
        self.coefficients(order)
            .into_iter()
            .enumerate()
            .map(|(degree, c)| {
                if c.is_negative() {
                    return Err(Error::NegativeCoefficient { degree, value: c.to_string() });
                }
                Ok(usize::try_from(c.magnitude().clone()).expect("dimension fits in usize"))
            })
            .collect()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn over(num: IntPoly, dens: &[IntPoly]) -> RationalSeries {
    let den = dens.iter().fold(IntPoly::one(), |acc, d| &acc * d);
    RationalSeries::new(num, den).expect("unit constant term")
}

/// Poincaré series of `A_n = F_2[y_1..y_n] (x) E(x_1, x_1', .., x_n, x_n')`:
/// `(1+t)^{2n} / (1-t^2)^n`.
pub fn algebra_series(n: usize) -> RationalSeries {
    let mut num = IntPoly::one();
    let mut dens = Vec::new();
    for _ in 0..n {
        num = &num * &(&one_plus(1) * &one_plus(1));
        dens.push(one_minus(2));
    }
    over(num, &dens)
}

/// Poincaré series of the formal class algebra
/// `F_2[c_1, .., c_n] (x) E(q_1, q_3, .., q_{2n-1}, q_1', .., q_{2n-1}')`
/// with `deg c_j = 2j` and `deg q_{2j-1} = deg q_{2j-1}' = 2j - 1`:
/// `prod_j (1 + t^{2j-1})^2 / prod_j (1 - t^{2j})`.
pub fn class_algebra_series(n: usize) -> RationalSeries {
    let mut num = IntPoly::one();
    let mut dens = Vec::new();
    for j in 1..=n {
        num = &num * &(&one_plus(2 * j - 1) * &one_plus(2 * j - 1));
        dens.push(one_minus(2 * j));
    }
    over(num, &dens)
}

/// Poincaré series of the limit algebra
/// `F_2[b_2, b_3] (x) E(d_3, d_3', d_5, d_5')`, with `deg b_2 = 4`,
/// `deg b_3 = 6` and exterior generators in degrees `3, 3, 5, 5`:
/// `(1+t^3)^2 (1+t^5)^2 / ((1-t^4)(1-t^6))`.
pub fn chi0() -> RationalSeries {
    over(
        &(&one_plus(3) * &one_plus(3)) * &(&one_plus(5) * &one_plus(5)),
        &[one_minus(4), one_minus(6)],
    )
}

/// Poincaré series of the rank-one centralizer cohomology
/// `F_2[c_1, c_2] (x) E(e_1, e_1', e_3, e_3')` with generator degrees
/// `2, 4, 1, 1, 3, 3`: `(1+t)^2 (1+t^3)^2 / ((1-t^2)(1-t^4))`.
pub fn chi1() -> RationalSeries {
    over(
        &(&one_plus(1) * &one_plus(1)) * &(&one_plus(3) * &one_plus(3)),
        &[one_minus(2), one_minus(4)],
    )
}

/// Generating series of the Steinberg multiplicity
/// `dim_F2 Hom_{S_3}(St, A_2^d)`:
/// `[2t^2 (1+3t^2+3t^4+t^6) + 2t (1+2t^2+2t^4+2t^6+t^8)] / ((1-t^4)(1-t^6))`.
pub fn chi2() -> RationalSeries {
    let even = &IntPoly::term(2, 2) * &IntPoly::from_coeffs(&[1, 0, 3, 0, 3, 0, 1]);
    let odd = &IntPoly::term(2, 1) * &IntPoly::from_coeffs(&[1, 0, 2, 0, 2, 0, 2, 0, 1]);
    over(&even + &odd, &[one_minus(4), one_minus(6)])
}

/// Steinberg multiplicity series of the polynomial part `F_2[y_1, y_2]`:
/// `t^2 / ((1-t^2)(1-t^6))`.
pub fn chi20() -> RationalSeries {
    over(IntPoly::term(1, 2), &[one_minus(2), one_minus(6)])
}

/// Steinberg multiplicity series of the exterior-length-one part
/// `F_2[y_1, y_2] (x) <x_1, x_2, x_1', x_2'>` per four-dimensional block:
/// `(1+3t^2+3t^4+t^6) / ((1-t^4)(1-t^6))`.
pub fn chi21() -> RationalSeries {
    over(IntPoly::from_coeffs(&[1, 0, 3, 0, 3, 0, 1]), &[one_minus(4), one_minus(6)])
}

/// Steinberg multiplicity series of the exterior-length-two part:
/// `(1+t^2+t^4+t^6) / ((1-t^4)(1-t^6))`.
pub fn chi22() -> RationalSeries {
    over(IntPoly::from_coeffs(&[1, 0, 1, 0, 1, 0, 1]), &[one_minus(4), one_minus(6)])
}

/// Poincaré series of the `A_3`-invariants (the cyclic subgroup of order 3)
/// in `F_2[y_1, y_2]`: `(1+t^6) / ((1-t^4)(1-t^6))`.
pub fn a3_invariant_series() -> RationalSeries {
    over(one_plus(6), &[one_minus(4), one_minus(6)])
}

/// Poincaré series of the full `S_3`-invariants `F_2[c_2, c_3]` in
/// `F_2[y_1, y_2]` (the Dickson algebra): `1 / ((1-t^4)(1-t^6))`.
pub fn dickson_series() -> RationalSeries {
    over(IntPoly::one(), &[one_minus(4), one_minus(6)])
}

/// Dimension polynomial of the derived limit `lim^1`: two classes in degree
/// 3 and one in degree 6, nothing else.
pub fn lim1_polynomial() -> IntPoly {
    &IntPoly::term(2, 3) + &IntPoly::term(1, 6)
}

/// Poincaré series of the Borel construction the limit computes: degree `n`
/// contributes `lim` in degree `n` plus `lim^1` in degree `n - 1`, i.e.
/// `chi0 + t * lim1`.
pub fn xs_series() -> RationalSeries {
    chi0().add(&RationalSeries::from_poly(&IntPoly::term(1, 1) * &lim1_polynomial()))
}

/// The exact defect `chi0 + chi2 - chi1` as a polynomial.  That this
/// fraction collapses to the finite polynomial `2t^3 + t^6` — the `lim^1`
/// dimensions — is the Euler-characteristic bookkeeping behind the limit
/// computation; [`defect_polynomial`] computes it, the tests pin it.
pub fn defect_polynomial() -> Option<IntPoly> {
    let lhs = chi0().add(&chi2());
    // lhs - chi1 as a fraction, then check the denominator divides exactly
    // by long division against the claimed polynomial.
    let chi1 = chi1();
    let num = &(&lhs.num * &chi1.den) - &(&chi1.num * &lhs.den);
    let den = &lhs.den * &chi1.den;
    divide_exact(&num, &den)
}

/// Exact polynomial division `num / den`, or `None` if it does not divide.
fn divide_exact(num: &IntPoly, den: &IntPoly) -> Option<IntPoly> {
    if num.is_zero() {
        return Some(IntPoly::zero());
    }
    let nd = num.degree()?;
    let dd = den.degree()?;
    if nd < dd {
        return None;
    }
    // Long division from the top; the quotient must come out with integer
    // coefficients and zero remainder.
    let lead = den.coeff(dd);
    let mut rem = num.clone();
    let mut q = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem.coeff(k + dd);
        if c.is_zero() {
            continue;
        }
        if (&c % &lead) != BigInt::zero() {
            return None;
        }
        let f = &c / &lead;
        let shifted: IntPoly = {
            let mut coeffs = vec![BigInt::zero(); k];
            coeffs.extend(den.coefficients(dd).iter().map(|b| b * &f));
            IntPoly { coeffs }.trimmed()
        };
        rem = &rem - &shifted;
        q[k] = f;
    }
    rem.is_zero().then(|| IntPoly { coeffs: q }.trimmed())
}

/// `chi0 + chi2 = chi1 + (2t^3 + t^6)` as exact rational functions.
pub fn sum_identity_holds() -> bool {
    let lhs = chi0().add(&chi2());
    let rhs = chi1().add(&RationalSeries::from_poly(lim1_polynomial()));
    lhs.eq_series(&rhs)
}

/// `chi2 = (1 + 2t^2 + t^4) chi20 + t^2 chi21 + 2(t + t^3) chi22`: the
/// Steinberg multiplicity of `A_2` assembled from its exterior-word-length
/// pieces (a length-one word contributes a four-dimensional block twice in
/// odd degrees; length-two words regroup as shown).
pub fn decomposition_identity_holds() -> bool {
    let rhs = chi20()
        .mul_poly(&IntPoly::from_coeffs(&[1, 0, 2, 0, 1]))
        .add(&chi21().mul_poly(&IntPoly::term(1, 2)))
        .add(&chi22().mul_poly(&IntPoly::from_coeffs(&[0, 2, 0, 2])));
    chi2().eq_series(&rhs)
}

/// `2 chi20 + a3_invariants = 1/(1-t^2)^2`: counting `F_2[y_1, y_2]` by
/// Steinberg summands plus its `A_3`-invariants recovers the whole
/// polynomial algebra, as it must when every summand is `St` or the rank-one
/// projective over the order-3 subgroup.
pub fn free_rank_identity_holds() -> bool {
    let lhs = chi20().mul_poly(&IntPoly::term(2, 0)).add(&a3_invariant_series());
    let rhs = over(IntPoly::one(), &[one_minus(2), one_minus(2)]);
    lhs.eq_series(&rhs)
}

/// `chi21 = 3 chi20 + a3_invariants`.
pub fn chi21_identity_holds() -> bool {
    chi21().eq_series(&chi20().mul_poly(&IntPoly::term(3, 0)).add(&a3_invariant_series()))
}

/// `chi22 = chi20 + a3_invariants`.
pub fn chi22_identity_holds() -> bool {
    chi22().eq_series(&chi20().add(&a3_invariant_series()))
}
