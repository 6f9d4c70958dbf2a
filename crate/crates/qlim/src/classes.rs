//! Chern classes and symmetrised exterior classes in `A_n`.
//!
//! The polynomial classes are the elementary symmetric functions
//! `c_i = e_i(y_1, .., y_n)` of degree `2i`.  The odd-degree classes come in
//! three flavours per index `1 <= k <= n`, all of degree `2k - 1`:
//!
//! ```text
//!   q_{2k-1}        = sym(y_1 .. y_{k-1} x_k)            (Plain)
//!   q_{2k-1}'       = sym(y_1 .. y_{k-1} (x_k + x_k'))   (Primed)
//!   "replaced" q    = sym(y_1 .. y_{k-1} x_k')           (Replaced)
//! ```
//!
//! where `sym` is the orbit sum over distinct images ([`crate::graded::symmetrize`]).
//! The three flavours satisfy `Primed = Plain + Replaced`, and `Primed` is
//! also the image of `Plain` under the substitution `x_i -> x_i + x_i'`
//! ([`prime_twist`]); both facts are machine-checked rather than assumed.
//!
//! [`sl_restrict`] is the algebra map `A_n -> A_{n-1}` sending the last
//! generator of each family to the sum of the remaining ones — restriction
//! along the inclusion of the subgroup where the product of all diagonal
//! entries is trivial.  Composing it with the `n = 3` classes lands exactly
//! on the six generators of the realized limit ([`composite_images`]), which
//! is the bridge between the stable classes and the limit computation.

use crate::error::{Error, Result};
use crate::graded::{symmetrize, AlgebraMap, Element};
use crate::quillen;

/// Flavour of a symmetrised exterior class; see the module documentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Primed,
    Replaced,
}

/// The elementary symmetric class `c_i = e_i(y_1, .., y_n)`, degree `2i`;
/// `c_0 = 1`.
pub fn chern(n: usize, i: usize) -> Result<Element> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if i == 0 {
        return Ok(Element::one(n));
    }
    let seed = (1..=i).try_fold(Element::one(n), |acc, j| -> Result<Element> { Ok(acc * Element::y(n, j)?) })?;
    Ok(symmetrize(&seed))
}

/// The symmetrised exterior class of index `k` (degree `2k - 1`) in the
/// requested flavour.
pub fn quillen_e(n: usize, k: usize, variant: Variant) -> Result<Element> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let ys = (1..k).try_fold(Element::one(n), |acc, j| -> Result<Element> { Ok(acc * Element::y(n, j)?) })?;
    let last = match variant {
        Variant::Plain => Element::x(n, k)?,
        Variant::Replaced => Element::xp(n, k)?,
        Variant::Primed => Element::x(n, k)? + Element::xp(n, k)?,
    };
    Ok(symmetrize(&(ys * last)))
}

/// Independent construction of the same classes by direct enumeration: over
/// all subsets `S` of size `i` (for [`chern`]) resp. all pairs of a subset
/// `S` of size `k - 1` and an index `i` outside `S` (for [`quillen_e`]).
/// Used as the oracle the symmetrisation route is checked against.
pub mod enumerated {
    use itertools::Itertools;

    use super::Variant;
    use crate::error::Result;
    use crate::graded::Element;

    pub fn chern(n: usize, i: usize) -> Result<Element> {
        let mut out = Element::zero(n);
        for subset in (1..=n).combinations(i) {
            let term = subset
                .iter()
                .try_fold(Element::one(n), |acc, &j| -> Result<Element> { Ok(acc * Element::y(n, j)?) })?;
            out = out + term;
        }
        Ok(out)
    }

    pub fn quillen_e(n: usize, k: usize, variant: Variant) -> Result<Element> {
        let mut out = Element::zero(n);
        for subset in (1..=n).combinations(k - 1) {
            let ys = subset
                .iter()
                .try_fold(Element::one(n), |acc, &j| -> Result<Element> { Ok(acc * Element::y(n, j)?) })?;
            for i in 1..=n {
                if subset.contains(&i) {
                    continue;
                }
                let last = match variant {
                    Variant::Plain => Element::x(n, i)?,
                    Variant::Replaced => Element::xp(n, i)?,
                    Variant::Primed => Element::x(n, i)? + Element::xp(n, i)?,
                };
                out = out + ys.clone() * last;
            }
        }
        Ok(out)
    }
}

/// The substitution `x_i -> x_i + x_i'` (fixing `y_i` and `x_i'`), which
/// turns the Plain classes into the Primed ones.
pub fn prime_twist(n: usize) -> Result<AlgebraMap> {
    let y = (1..=n).map(|i| Element::y(n, i)).collect::<Result<Vec<_>>>()?;
    let x = (1..=n)
        .map(|i| Ok(Element::x(n, i)? + Element::xp(n, i)?))
        .collect::<Result<Vec<_>>>()?;
    let xp = (1..=n).map(|i| Element::xp(n, i)).collect::<Result<Vec<_>>>()?;
    AlgebraMap::new(n, n, y, x, xp)
}

/// Restriction `A_n -> A_{n-1}`: generators of index `< n` map to
/// themselves, and `y_n, x_n, x_n'` map to the sum of the remaining family
/// members.  Requires `n >= 2`.
pub fn sl_restrict(n: usize) -> Result<AlgebraMap> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n, n: 2 });
    }
    let m = n - 1;
    let sum =
        |f: fn(usize, usize) -> Result<Element>| -> Result<Element> {
            (1..=m).try_fold(Element::zero(m), |acc, i| -> Result<Element> { Ok(acc + f(m, i)?) })
        };
    let mut y = (1..=m).map(|i| Element::y(m, i)).collect::<Result<Vec<_>>>()?;
    y.push(sum(Element::y)?);
    let mut x = (1..=m).map(|i| Element::x(m, i)).collect::<Result<Vec<_>>>()?;
    x.push(sum(Element::x)?);
    let mut xp = (1..=m).map(|i| Element::xp(m, i)).collect::<Result<Vec<_>>>()?;
    xp.push(sum(Element::xp)?);
    AlgebraMap::new(n, m, y, x, xp)
}

/// One row of the composite-restriction table: class name, its restriction
/// to `A_2` computed through [`sl_restrict`], and what it must equal.
pub struct CompositeImage {
    pub name: &'static str,
    pub computed: Element,
    pub expected: Element,
}

/// Restricts the eight `n = 3` classes to `A_2` and pairs each with the
/// predicted value: `c_1` and `q_1` die, the rest land on the six limit
/// generators:
///
/// ```text
///   c_1 -> 0   c_2 -> b_2   c_3 -> b_3   q_1 -> 0
///   q_3 -> d_3   q_3' -> d_3'   q_5 -> d_5   q_5' -> d_5'
/// ```
pub fn composite_images() -> Result<Vec<CompositeImage>> {
    let rho = sl_restrict(3)?;
    let rows: Vec<(&'static str, Element, Element)> = vec![
        ("c1", chern(3, 1)?, Element::zero(2)),
        ("c2", chern(3, 2)?, quillen::b2()),
        ("c3", chern(3, 3)?, quillen::b3()),
        ("q1", quillen_e(3, 1, Variant::Plain)?, Element::zero(2)),
        ("q3", quillen_e(3, 2, Variant::Plain)?, quillen::d3()),
        ("q5", quillen_e(3, 3, Variant::Plain)?, quillen::d5()),
        ("q3p", quillen_e(3, 2, Variant::Primed)?, quillen::d3p()),
        ("q5p", quillen_e(3, 3, Variant::Primed)?, quillen::d5p()),
    ];
    rows.into_iter()
        .map(|(name, class, expected)| {
            Ok(CompositeImage { name, computed: rho.apply(&class)?, expected })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::symmetrize;

    #[test]
    fn chern_classes_match_enumeration() {
        for n in 1..=5 {
            for i in 0..=n {
                assert_eq!(
                    chern(n, i).unwrap(),
                    enumerated::chern(n, i).unwrap(),
                    "c_{i} in A_{n}"
                );
            }
        }
    }

    #[test]
    fn quillen_classes_match_enumeration() {
        for n in 1..=5 {
            for k in 1..=n {
                for variant in [Variant::Plain, Variant::Primed, Variant::Replaced] {
                    assert_eq!(
                        quillen_e(n, k, variant).unwrap(),
                        enumerated::quillen_e(n, k, variant).unwrap(),
                        "index {k} in A_{n}, {variant:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn classes_have_the_right_degrees_and_are_invariant() {
        for n in 1..=4 {
            for i in 1..=n {
                let c = chern(n, i).unwrap();
                assert_eq!(c.degree(), Some(2 * i));
                assert_eq!(symmetrize(&c), c);
            }
            for k in 1..=n {
                for variant in [Variant::Plain, Variant::Primed, Variant::Replaced] {
                    let q = quillen_e(n, k, variant).unwrap();
                    assert_eq!(q.degree(), Some(2 * k - 1));
                    assert_eq!(symmetrize(&q), q);
                    // Each term carries an exterior letter, so squares die.
                    assert!(q.pow(2).is_zero());
                }
            }
        }
    }

    #[test]
    fn chern_recursion() {
        // e_i(y_1..y_n) = e_i(y_1..y_{n-1}) + y_n e_{i-1}(y_1..y_{n-1}),
        // with the smaller side pushed into A_n via the obvious inclusion.
        let include = |n: usize| {
            let y: Vec<_> = (1..=n - 1).map(|i| Element::y(n, i).unwrap()).collect();
            let x: Vec<_> = (1..=n - 1).map(|i| Element::x(n, i).unwrap()).collect();
            let xp: Vec<_> = (1..=n - 1).map(|i| Element::xp(n, i).unwrap()).collect();
            AlgebraMap::new(n - 1, n, y, x, xp).unwrap()
        };
        for n in 2..=5 {
            let inc = include(n);
            for i in 1..=n - 1 {
                let lhs = chern(n, i).unwrap();
                let rhs = inc.apply(&chern(n - 1, i).unwrap()).unwrap()
                    + Element::y(n, n).unwrap() * inc.apply(&chern(n - 1, i - 1).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "recursion for c_{i} in A_{n}");
            }
        }
    }

    #[test]
    fn primed_is_plain_plus_replaced() {
        for n in 1..=4 {
            for k in 1..=n {
                let plain = quillen_e(n, k, Variant::Plain).unwrap();
                let replaced = quillen_e(n, k, Variant::Replaced).unwrap();
                let primed = quillen_e(n, k, Variant::Primed).unwrap();
                assert_eq!(primed, plain + replaced);
            }
        }
    }

    #[test]
    fn primed_is_the_twist_of_plain() {
        for n in 1..=4 {
            let twist = prime_twist(n).unwrap();
            for k in 1..=n {
                assert_eq!(
                    twist.apply(&quillen_e(n, k, Variant::Plain).unwrap()).unwrap(),
                    quillen_e(n, k, Variant::Primed).unwrap()
                );
            }
        }
    }

    #[test]
    fn small_symmetrized_classes_are_the_expected_literals() {
        let y = |i| Element::y(3, i).unwrap();
        let x = |i| Element::x(3, i).unwrap();
        assert_eq!(quillen_e(3, 1, Variant::Plain).unwrap(), x(1) + x(2) + x(3));
        assert_eq!(
            quillen_e(3, 2, Variant::Plain).unwrap(),
            y(1) * x(2) + y(2) * x(1) + y(1) * x(3) + y(3) * x(1) + y(2) * x(3) + y(3) * x(2)
        );
        // The top class has a stabilised seed: exactly three terms survive.
        assert_eq!(
            quillen_e(3, 3, Variant::Plain).unwrap(),
            y(1) * y(2) * x(3) + y(1) * y(3) * x(2) + y(2) * y(3) * x(1)
        );
    }

    #[test]
    fn restriction_composite_lands_on_the_limit_generators() {
        for row in composite_images().unwrap() {
            assert_eq!(row.computed, row.expected, "restriction of {}", row.name);
        }
    }

    #[test]
    fn restriction_rejects_rank_one() {
        assert!(sl_restrict(1).is_err());
    }
}
