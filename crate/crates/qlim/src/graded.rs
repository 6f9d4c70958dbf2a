//! The graded-commutative algebra
//!
//! ```text
//!   A_n = F_2[y_1, ..., y_n] (x) E(x_1, x_1', ..., x_n, x_n')
//! ```
//!
//! with `deg y_i = 2` and `deg x_i = deg x_i' = 1`.  Every coefficient is in
//! GF(2), so an element is just a finite set of monomials and addition is
//! symmetric difference.  Squares of exterior generators vanish; polynomial
//! generators have arbitrary exponents.
//!
//! Monomials carry a single canonical order used *everywhere* — element
//! storage, leading terms, degree bases and printing: the lexicographic order
//! on the interleaved exponent tuple
//!
//! ```text
//!   (a_1, e_{1,1}, e_{2,1}, a_2, e_{1,2}, e_{2,2}, ..., a_n, e_{1,n}, e_{2,n})
//! ```
//!
//! where `a_j` is the exponent of `y_j`, `e_{1,j}` of `x_j` and `e_{2,j}` of
//! `x_j'`.  Having exactly one order keeps leading-term arguments, basis
//! indexing and printed output mutually consistent.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{Arc, Mutex, OnceLock};

use gf2::BitVec;
use itertools::Itertools;

use crate::error::{Error, Result};

/// Hard cap on the number of index pairs; masks are stored in a `u32` and
/// basis enumeration loops over subsets of the exterior generators.
pub const MAX_GENERATOR_PAIRS: usize = 12;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_GENERATOR_PAIRS {
        return Err(Error::TooManyGenerators { n, max: MAX_GENERATOR_PAIRS });
    }
    Ok(())
}

fn check_index(index: usize, n: usize) -> Result<()> {
    if index == 0 || index > n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// A single monomial `y^a * x^e1 * x'^e2` in a fixed `A_n`.
///
/// `y[j]` is the exponent of `y_{j+1}`; bit `j` of `x` (resp. `xp`) says
/// whether `x_{j+1}` (resp. `x_{j+1}'`) divides the monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    y: Vec<u32>,
    x: u32,
    xp: u32,
}

impl Monomial {
    /// The unit monomial of `A_n`.
    pub fn one(n: usize) -> Self {
        Monomial { y: vec![0; n], x: 0, xp: 0 }
    }

    /// Builds a monomial from raw exponent data (1-based mask bits `< n`).
    pub fn from_parts(y: Vec<u32>, x: u32, xp: u32) -> Result<Self> {
        let n = y.len();
        check_n(n)?;
        let legal = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if x & !legal != 0 || xp & !legal != 0 {
            let bad = (x & !legal) | (xp & !legal);
            return Err(Error::IndexOutOfRange { index: bad.trailing_zeros() as usize + 1, n });
        }
        Ok(Monomial { y, x, xp })
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn degree(&self) -> usize {
        2 * self.y.iter().sum::<u32>() as usize
            + self.x.count_ones() as usize
            + self.xp.count_ones() as usize
    }

    pub fn y_exponent(&self, index: usize) -> u32 {
        self.y[index - 1]
    }

    pub fn has_x(&self, index: usize) -> bool {
        self.x >> (index - 1) & 1 == 1
    }

    pub fn has_xp(&self, index: usize) -> bool {
        self.xp >> (index - 1) & 1 == 1
    }

    /// Product of two monomials; `None` when an exterior generator repeats.
    pub fn times(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.n(), other.n());
        if self.x & other.x != 0 || self.xp & other.xp != 0 {
            return None;
        }
        let y = self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect();
        Some(Monomial { y, x: self.x | other.x, xp: self.xp | other.xp })
    }

    /// Applies the index permutation sending generator `i` to `perm[i]`
    /// simultaneously to the `y`, `x` and `x'` families.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        debug_assert_eq!(perm.len(), self.n());
        let mut y = vec![0; self.n()];
        let mut x = 0;
        let mut xp = 0;
        for i in 0..self.n() {
            y[perm[i]] = self.y[i];
            if self.x >> i & 1 == 1 {
                x |= 1 << perm[i];
            }
            if self.xp >> i & 1 == 1 {
                xp |= 1 << perm[i];
            }
        }
        Monomial { y, x, xp }
    }

    /// The canonical interleaved exponent tuple; the monomial order is plain
    /// lexicographic comparison of this tuple.
    pub fn exponent_tuple(&self) -> Vec<u32> {
        let mut t = Vec::with_capacity(3 * self.n());
        for j in 0..self.n() {
            t.push(self.y[j]);
            t.push(self.x >> j & 1);
            t.push(self.xp >> j & 1);
        }
        t
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Monomials of different algebras never share a container; ordering
        // by n first keeps the order total anyway.
        self.n().cmp(&other.n()).then_with(|| {
            for j in 0..self.n() {
                let o = (self.y[j], self.x >> j & 1, self.xp >> j & 1).cmp(&(
                    other.y[j],
                    other.x >> j & 1,
                    other.xp >> j & 1,
                ));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for j in 1..=self.n() {
            match self.y_exponent(j) {
                0 => {}
                1 => factors.push(format!("y{j}")),
                e => factors.push(format!("y{j}^{e}")),
            }
        }
        for j in 1..=self.n() {
            if self.has_x(j) {
                factors.push(format!("x{j}"));
            }
        }
        for j in 1..=self.n() {
            if self.has_xp(j) {
                factors.push(format!("xp{j}"));
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `A_n`: a GF(2) sum of monomials, stored as the set of
/// monomials with nonzero coefficient, ordered canonically.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeSet::new() }
    }

    pub fn one(n: usize) -> Self {
        Element::from_monomial(Monomial::one(n))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.n();
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Element { n, terms }
    }

    /// The generator `y_index` of `A_n`.
    pub fn y(n: usize, index: usize) -> Result<Self> {
        Self::y_power(n, index, 1)
    }

    /// The monomial `y_index^exp`.
    pub fn y_power(n: usize, index: usize, exp: u32) -> Result<Self> {
        check_n(n)?;
        check_index(index, n)?;
        let mut y = vec![0; n];
        y[index - 1] = exp;
        Ok(Element::from_monomial(Monomial { y, x: 0, xp: 0 }))
    }

    /// The generator `x_index` of `A_n`.
    pub fn x(n: usize, index: usize) -> Result<Self> {
        check_n(n)?;
        check_index(index, n)?;
        Ok(Element::from_monomial(Monomial { y: vec![0; n], x: 1 << (index - 1), xp: 0 }))
    }

    /// The generator `x_index'` of `A_n`.
    pub fn xp(n: usize, index: usize) -> Result<Self> {
        check_n(n)?;
        check_index(index, n)?;
        Ok(Element::from_monomial(Monomial { y: vec![0; n], x: 0, xp: 1 << (index - 1) }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing canonical order.
    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// The canonically largest monomial, if the element is nonzero.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    /// Flips the coefficient of `m` (characteristic-2 accumulation).
    fn toggle(&mut self, m: Monomial) {
        debug_assert_eq!(m.n(), self.n);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Sum in `A_n`; fails when the operands live in different algebras.
    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        if self.n != other.n {
            return Err(Error::GeneratorCountMismatch { left: self.n, right: other.n });
        }
        let (big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        for m in &small.terms {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    /// Product in `A_n`; fails when the operands live in different algebras.
    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        if self.n != other.n {
            return Err(Error::GeneratorCountMismatch { left: self.n, right: other.n });
        }
        let mut out = Element::zero(self.n);
        for a in &self.terms {
            for b in &other.terms {
                if let Some(m) = a.times(b) {
                    out.toggle(m);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Element {
        let mut out = Element::one(self.n);
        for _ in 0..exp {
            out = out.checked_mul(self).expect("same algebra");
        }
        out
    }

    /// `Some(d)` when every term has degree `d`; the zero element reports
    /// `None` (it is homogeneous of every degree).
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.iter().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, Element> {
        let mut out: BTreeMap<usize, Element> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Element::zero(self.n))
                .toggle(m.clone());
        }
        out
    }

    /// Applies an index permutation to every term.
    pub fn permuted(&self, perm: &[usize]) -> Element {
        let mut out = Element::zero(self.n);
        for m in &self.terms {
            out.toggle(m.permuted(perm));
        }
        out
    }
}

macro_rules! element_ops {
    ($($lhs:ty, $rhs:ty);* $(;)?) => {$(
        impl Add<$rhs> for $lhs {
            type Output = Element;
            fn add(self, rhs: $rhs) -> Element {
                self.checked_add(&rhs).expect("sum of elements of different algebras")
            }
        }
        impl Mul<$rhs> for $lhs {
            type Output = Element;
            fn mul(self, rhs: $rhs) -> Element {
                self.checked_mul(&rhs).expect("product of elements of different algebras")
            }
        }
    )*};
}

element_ops! {
    Element, Element;
    Element, &Element;
    &Element, Element;
    &Element, &Element;
}

impl fmt::Display for Element {
    /// Terms are printed in *decreasing* canonical order, so the leading
    /// monomial comes first and output is deterministic.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.terms.iter().rev().map(|m| m.to_string()).collect();
        write!(f, "{}", rendered.join("+"))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sum over the *distinct* images of `e` under the full symmetric group
/// permuting the index pairs `(y_i, x_i, x_i')`.
///
/// Summing distinct images (one term per orbit element) rather than all `n!`
/// group translates is what makes the classical symmetrised classes nonzero
/// in characteristic 2: a monomial with a nontrivial stabiliser would
/// otherwise be counted an even number of times and cancel.
pub fn symmetrize(e: &Element) -> Element {
    let n = e.n();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Element::zero(n);
    for perm in (0..n).permutations(n) {
        let image = e.permuted(&perm);
        // Key the image by its term tuples so `seen` needs no Element order.
        let key: Vec<u32> = image.terms().flat_map(|m| m.exponent_tuple()).collect();
        if seen.insert(key) {
            out = out.checked_add(&image).expect("same algebra");
        }
    }
    out
}

/// The ordered monomial basis of one degree component of `A_n`, together
/// with an index for constant-time lookups.  Obtain instances through
/// [`basis_in_degree`], which memoizes them.
pub struct DegreeBasis {
    n: usize,
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    fn build(n: usize, degree: usize) -> Result<Self> {
        check_n(n)?;
        let mut monomials = Vec::new();
        let masks = 1u32 << n;
        for x in 0..masks {
            for xp in 0..masks {
                let ext = (x.count_ones() + xp.count_ones()) as usize;
                if ext > degree || (degree - ext) % 2 != 0 {
                    continue;
                }
                let total = ((degree - ext) / 2) as u32;
                push_compositions(n, total, &mut |y| {
                    monomials.push(Monomial { y: y.to_vec(), x, xp });
                });
            }
        }
        // Decreasing canonical order: index 0 is the largest monomial, so the
        // first set bit of a coordinate vector is the leading term.
        monomials.sort_unstable_by(|a, b| b.cmp(a));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(DegreeBasis { n, degree, monomials, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous element in this basis.
    pub fn vector_of(&self, e: &Element) -> Result<BitVec> {
        if e.n() != self.n {
            return Err(Error::GeneratorCountMismatch { left: e.n(), right: self.n });
        }
        let mut v = BitVec::zeros(self.dim());
        for m in e.terms() {
            match self.position(m) {
                Some(i) => v.set(i, true),
                None => {
                    return Err(Error::DegreeMismatch { expected: self.degree, actual: m.degree() })
                }
            }
        }
        Ok(v)
    }

    /// Inverse of [`DegreeBasis::vector_of`].
    pub fn element_of(&self, v: &BitVec) -> Result<Element> {
        if v.len() != self.dim() {
            return Err(Error::VectorLength { len: v.len(), dim: self.dim() });
        }
        let mut e = Element::zero(self.n);
        for i in v.iter_ones() {
            e.toggle(self.monomials[i].clone());
        }
        Ok(e)
    }
}

/// All compositions of `total` into `n` ordered non-negative parts.
fn push_compositions(n: usize, total: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, remaining: u32, slots: usize, f: &mut impl FnMut(&[u32])) {
        if slots == 1 {
            buf.push(remaining);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=remaining {
            buf.push(v);
            rec(buf, remaining - v, slots - 1, f);
            buf.pop();
        }
    }
    if n == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut Vec::with_capacity(n), total, n, f);
}

static BASIS_CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<DegreeBasis>>>> = OnceLock::new();

/// The canonical monomial basis of the degree-`d` component of `A_n`, in
/// decreasing canonical order.  Memoized: repeated calls share one
/// allocation.
pub fn basis_in_degree(n: usize, degree: usize) -> Result<Arc<DegreeBasis>> {
    let cache = BASIS_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, degree)) {
        return Ok(Arc::clone(b));
    }
    let built = Arc::new(DegreeBasis::build(n, degree)?);
    cache.lock().unwrap().entry((n, degree)).or_insert_with(|| Arc::clone(&built));
    Ok(built)
}

/// Coordinates of a homogeneous element of degree `degree`.
pub fn to_vector(e: &Element, degree: usize) -> Result<BitVec> {
    basis_in_degree(e.n(), degree)?.vector_of(e)
}

/// Rebuilds an element from degree-`degree` coordinates.
pub fn from_vector(n: usize, degree: usize, v: &BitVec) -> Result<Element> {
    basis_in_degree(n, degree)?.element_of(v)
}

/// An algebra endo-/homomorphism `A_n -> A_m` given by generator images and
/// extended multiplicatively.  Images must be degree-preserving: `y_i` maps
/// to a homogeneous element of degree 2, `x_i` and `x_i'` to homogeneous
/// elements of degree 1 (zero images are allowed).
pub struct AlgebraMap {
    source_n: usize,
    target_n: usize,
    y_images: Vec<Element>,
    x_images: Vec<Element>,
    xp_images: Vec<Element>,
}

impl AlgebraMap {
    pub fn new(
        source_n: usize,
        target_n: usize,
        y_images: Vec<Element>,
        x_images: Vec<Element>,
        xp_images: Vec<Element>,
    ) -> Result<Self> {
        check_n(source_n)?;
        check_n(target_n)?;
        for (family, images, want) in [("y", &y_images, 2), ("x", &x_images, 1), ("xp", &xp_images, 1)] {
            if images.len() != source_n {
                return Err(Error::GeneratorCountMismatch { left: source_n, right: images.len() });
            }
            for (i, img) in images.iter().enumerate() {
                if img.n() != target_n {
                    return Err(Error::GeneratorCountMismatch { left: img.n(), right: target_n });
                }
                if !img.is_zero() && img.degree() != Some(want) {
                    return Err(Error::BadGeneratorImage {
                        what: format!("{family}{}", i + 1),
                        degree: want,
                    });
                }
            }
        }
        Ok(AlgebraMap { source_n, target_n, y_images, x_images, xp_images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let y = (1..=n).map(|i| Element::y(n, i)).collect::<Result<_>>()?;
        let x = (1..=n).map(|i| Element::x(n, i)).collect::<Result<_>>()?;
        let xp = (1..=n).map(|i| Element::xp(n, i)).collect::<Result<_>>()?;
        AlgebraMap::new(n, n, y, x, xp)
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    /// The matrix of the map on one degree component, with respect to the
    /// canonical bases of source and target; columns are images of the
    /// source basis monomials (column-vector convention).
    pub fn matrix_on_degree(&self, degree: usize) -> Result<gf2::BitMatrix> {
        let src = basis_in_degree(self.source_n, degree)?;
        let dst = basis_in_degree(self.target_n, degree)?;
        let mut m = gf2::BitMatrix::zeros(dst.dim(), src.dim());
        for (j, mono) in src.monomials().iter().enumerate() {
            let image = self.apply(&Element::from_monomial(mono.clone()))?;
            for i in dst.vector_of(&image)?.iter_ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    /// Evaluates the map on an element, monomial by monomial.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        if e.n() != self.source_n {
            return Err(Error::GeneratorCountMismatch { left: e.n(), right: self.source_n });
        }
        let mut out = Element::zero(self.target_n);
        for m in e.terms() {
            let mut prod = Element::one(self.target_n);
            for j in 1..=self.source_n {
                let exp = m.y_exponent(j);
                if exp > 0 {
                    prod = prod.checked_mul(&self.y_images[j - 1].pow(exp))?;
                }
            }
            for j in 1..=self.source_n {
                if m.has_x(j) {
                    prod = prod.checked_mul(&self.x_images[j - 1])?;
                }
            }
            for j in 1..=self.source_n {
                if m.has_xp(j) {
                    prod = prod.checked_mul(&self.xp_images[j - 1])?;
                }
            }
            out = out.checked_add(&prod)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(i: usize) -> Element {
        Element::y(2, i).unwrap()
    }

    fn x(i: usize) -> Element {
        Element::x(2, i).unwrap()
    }

    fn xp(i: usize) -> Element {
        Element::xp(2, i).unwrap()
    }

    #[test]
    fn exterior_generators_square_to_zero() {
        assert!(x(1).checked_mul(&x(1)).unwrap().is_zero());
        assert!(xp(2).checked_mul(&xp(2)).unwrap().is_zero());
        assert!(!y(1).checked_mul(&y(1)).unwrap().is_zero());
    }

    #[test]
    fn polynomial_product_expands() {
        let lhs = (&y(1) + &y(2)).checked_mul(&(&y(1) * &y(2))).unwrap();
        let expected = &(&y(1).pow(2) * &y(2)) + &(&y(1) * &y(2).pow(2));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn mixed_product_collects_terms() {
        // (x1 + x2)(y1 x2 + y2 x1) = (y1 + y2) x1 x2
        let lhs = (&x(1) + &x(2)) * &(&(&y(1) * &x(2)) + &(&y(2) * &x(1)));
        let rhs = &(&y(1) + &y(2)) * &(&x(1) * &x(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn addition_is_characteristic_two() {
        let e = &x(1) + &x(2);
        assert!(e.checked_add(&e).unwrap().is_zero());
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = Element::x(2, 1).unwrap();
        let b = Element::x(3, 1).unwrap();
        assert!(matches!(a.checked_mul(&b), Err(Error::GeneratorCountMismatch { .. })));
        assert!(matches!(a.checked_add(&b), Err(Error::GeneratorCountMismatch { .. })));
    }

    #[test]
    fn degree_and_homogeneity() {
        let m = &(&y(1) * &y(2)) * &x(1);
        assert_eq!(m.degree(), Some(5));
        let mixed = &m + &x(2);
        assert_eq!(mixed.degree(), None);
        assert!(!mixed.is_homogeneous());
        let parts = mixed.homogeneous_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], x(2));
    }

    #[test]
    fn basis_degree_one_order() {
        let b = basis_in_degree(2, 1).unwrap();
        let printed: Vec<String> = b.monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(printed, ["x1", "xp1", "x2", "xp2"]);
    }

    #[test]
    fn basis_degree_zero_is_the_unit() {
        let b = basis_in_degree(2, 0).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.monomial(0), &Monomial::one(2));
    }

    #[test]
    fn basis_dimension_matches_series_count() {
        // dim A_2 in degree 6: coefficient of t^6 in (1+t)^4/(1-t^2)^2 = 24,
        // cross-checked by direct enumeration in the series module's tests.
        assert_eq!(basis_in_degree(2, 6).unwrap().dim(), 24);
    }

    #[test]
    fn vector_round_trip() {
        let e = &(&y(1) * &x(2)) + &(&y(2) * &x(1));
        let v = to_vector(&e, 3).unwrap();
        assert_eq!(from_vector(2, 3, &v).unwrap(), e);
        assert!(to_vector(&Element::zero(2), 3).unwrap().is_zero());
        assert!(matches!(to_vector(&e, 4), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn symmetrize_single_exterior_generator() {
        assert_eq!(symmetrize(&x(1)), &x(1) + &x(2));
    }

    #[test]
    fn symmetrize_off_diagonal_term() {
        let e = &y(1) * &x(2);
        assert_eq!(symmetrize(&e), &(&y(1) * &x(2)) + &(&y(2) * &x(1)));
    }

    #[test]
    fn symmetrize_with_stabilized_term_sums_the_orbit() {
        // y1 y2 x3 has a stabiliser of order two; the orbit has exactly three
        // distinct monomials and none of them cancels.
        let n = 3;
        let y = |i| Element::y(n, i).unwrap();
        let x = |i| Element::x(n, i).unwrap();
        let e = &(&y(1) * &y(2)) * &x(3);
        let expected = &(&(&(&y(1) * &y(2)) * &x(3)) + &(&(&y(1) * &y(3)) * &x(2)))
            + &(&(&y(2) * &y(3)) * &x(1));
        assert_eq!(symmetrize(&e), expected);
        assert_eq!(symmetrize(&e).term_count(), 3);
    }

    #[test]
    fn symmetrize_fixes_invariants() {
        let inv = &(&y(1) * &x(2)) + &(&y(2) * &x(1));
        assert_eq!(symmetrize(&inv), inv);
    }

    #[test]
    fn algebra_map_validates_images() {
        // x1 may not map to a degree-2 element.
        let bad = AlgebraMap::new(
            1,
            1,
            vec![Element::y(1, 1).unwrap()],
            vec![Element::y(1, 1).unwrap()],
            vec![Element::xp(1, 1).unwrap()],
        );
        assert!(matches!(bad, Err(Error::BadGeneratorImage { .. })));
    }

    #[test]
    fn algebra_map_is_multiplicative_on_a_sample() {
        // The twist x_i -> x_i + x_i', identity elsewhere.
        let twist = AlgebraMap::new(
            2,
            2,
            vec![y(1), y(2)],
            vec![&x(1) + &xp(1), &x(2) + &xp(2)],
            vec![xp(1), xp(2)],
        )
        .unwrap();
        assert_eq!(twist.apply(&x(1)).unwrap(), &x(1) + &xp(1));
        let a = &(&y(1) * &x(1)) + &x(2);
        let b = &y(2) + &(&x(1) * &x(2));
        let prod_then_map = twist.apply(&(&a * &b)).unwrap();
        let map_then_prod = &twist.apply(&a).unwrap() * &twist.apply(&b).unwrap();
        assert_eq!(prod_then_map, map_then_prod);
    }

    #[test]
    fn identity_map_fixes_elements() {
        let id = AlgebraMap::identity(2).unwrap();
        let e = &(&y(1).pow(3) * &xp(2)) + &(&x(1) * &xp(1));
        assert_eq!(id.apply(&e).unwrap(), e);
    }

    fn arb_element(n: usize, max_terms: usize) -> impl Strategy<Value = Element> {
        let monomial = (
            proptest::collection::vec(0u32..3, n),
            0u32..(1 << n),
            0u32..(1 << n),
        )
            .prop_map(|(y, x, xp)| Monomial { y, x, xp });
        proptest::collection::vec(monomial, 0..max_terms).prop_map(move |ms| {
            let mut e = Element::zero(n);
            for m in ms {
                e.toggle(m);
            }
            e
        })
    }

    proptest! {
        #[test]
        fn multiplication_commutes(a in arb_element(3, 6), b in arb_element(3, 6)) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_associates(
            a in arb_element(2, 5),
            b in arb_element(2, 5),
            c in arb_element(2, 5),
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(
            a in arb_element(2, 5),
            b in arb_element(2, 5),
            c in arb_element(2, 5),
        ) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn symmetrize_lands_in_invariants(e in arb_element(3, 4)) {
            let s = symmetrize(&e);
            // Invariance under every transposition generates invariance
            // under the whole symmetric group.
            for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
                let mut perm: Vec<usize> = (0..3).collect();
                perm.swap(i, j);
                prop_assert_eq!(s.permuted(&perm), s.clone());
            }
        }

        #[test]
        fn coordinates_round_trip(e in arb_element(3, 6)) {
            for (d, part) in e.homogeneous_components() {
                let v = to_vector(&part, d).unwrap();
                prop_assert_eq!(from_vector(3, d, &v).unwrap(), part);
            }
        }
    }
}
