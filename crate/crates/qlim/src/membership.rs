//! The admissible-sequence calculus: deciding membership in the span of the
//! stable-class products, with checkable certificates.
//!
//! A *class word* ([`SeqT`]) is a formal monomial
//! `c^K = c_1^{k_1} .. c_n^{k_n} * q-letters` in the Chern classes and the
//! symmetrised exterior classes of `A_n`, recorded as the exponent vector
//! `k` plus two flag vectors `phi1` (plain letters `q_{2j-1}`) and `phi2`
//! (primed-slot letters).  For computations the primed slot is expanded in
//! the *replaced* flavour (`x'` instead of `x + x'`); since
//! `primed = plain + replaced` and plain squares vanish, the two choices
//! span the same subspace degree by degree — a fact the tests check rather
//! than assume.  Certificates are therefore stated in the replaced basis.
//!
//! The calculus rests on one combinatorial theorem: in the canonical
//! monomial order, the leading monomial of the expansion of `c^K` has
//! exponent sequence ([`SeqS`])
//!
//! ```text
//!   a_j = sum_{l >= j} k_l + #{ (i, l) : phi_i at l, l > j },
//!   eps_{i,j} = phi_{i,j},
//! ```
//!
//! the map `K -> alpha(K)` implemented by [`SeqT::leading_sequence`].  Its
//! image is exactly the set of *admissible* sequences — those with
//! `a_j - a_{j+1} >= eps_{1,j+1} + eps_{2,j+1}` — and on that set it has the
//! explicit inverse [`SeqT::from_leading`].  Distinct words get distinct
//! leading monomials, so expansions are linearly independent, and every
//! nonzero element of their span has an admissible leading sequence.
//!
//! [`ReduceEngine::reduce`] turns this into an algorithm: repeatedly strip
//! the leading monomial; if its sequence is admissible, subtract the
//! expansion of the unique word responsible for it (recording the word),
//! otherwise stop — the element is certifiably not in the span.  The
//! procedure terminates because the leading monomial strictly decreases.
//! [`MembershipTable`] answers the same question by plain linear algebra
//! (row reduction of all expansions) and is kept as an independent oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use gf2::{BitMatrix, BitVec, Subspace};

use crate::classes::{chern, quillen_e, Variant};
use crate::error::{Error, Result};
use crate::graded::{basis_in_degree, DegreeBasis, Element, Monomial};

/// The exponent sequence of a monomial of `A_n`, stored interleaved as
/// `(a_1, eps_{1,1}, eps_{2,1}, .., a_n, eps_{1,n}, eps_{2,n})`.  The
/// derived order (length, then lexicographic on the entries) agrees with
/// the canonical monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqS {
    n: usize,
    entries: Vec<u32>,
}

impl SeqS {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != 3 * n {
            return Err(Error::VectorLength { len: entries.len(), dim: 3 * n });
        }
        for j in 0..n {
            if entries[3 * j + 1] > 1 || entries[3 * j + 2] > 1 {
                return Err(Error::BadGeneratorImage {
                    what: format!("exterior flag at index {}", j + 1),
                    degree: 1,
                });
            }
        }
        Ok(SeqS { n, entries })
    }

    pub fn from_monomial(m: &Monomial) -> SeqS {
        SeqS { n: m.n(), entries: m.exponent_tuple() }
    }

    pub fn to_monomial(&self) -> Result<Monomial> {
        let mut x = 0u32;
        let mut xp = 0u32;
        for j in 0..self.n {
            x |= self.entries[3 * j + 1] << j;
            xp |= self.entries[3 * j + 2] << j;
        }
        Monomial::from_parts((0..self.n).map(|j| self.entries[3 * j]).collect(), x, xp)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The `y`-exponent at 1-based position `j`.
    pub fn y_exp(&self, j: usize) -> u32 {
        self.entries[3 * (j - 1)]
    }

    /// The plain exterior flag at 1-based position `j`.
    pub fn x_flag(&self, j: usize) -> bool {
        self.entries[3 * (j - 1) + 1] == 1
    }

    /// The primed exterior flag at 1-based position `j`.
    pub fn xp_flag(&self, j: usize) -> bool {
        self.entries[3 * (j - 1) + 2] == 1
    }

    pub fn degree(&self) -> usize {
        (1..=self.n)
            .map(|j| 2 * self.y_exp(j) as usize + self.x_flag(j) as usize + self.xp_flag(j) as usize)
            .sum()
    }

    /// The first position `j < n` where the gap condition
    /// `a_j - a_{j+1} >= eps_{1,j+1} + eps_{2,j+1}` fails, if any.
    pub fn first_gap_violation(&self) -> Option<usize> {
        (1..self.n).find(|&j| {
            let drop = self.x_flag(j + 1) as u32 + self.xp_flag(j + 1) as u32;
            self.y_exp(j) < self.y_exp(j + 1) + drop
        })
    }

    /// Whether the sequence is the leading sequence of a class word:
    /// the gap condition holds at every position.
    pub fn is_admissible(&self) -> bool {
        self.first_gap_violation().is_none()
    }
}

impl fmt::Display for SeqS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<String> = (1..=self.n)
            .map(|j| {
                format!("{},{},{}", self.y_exp(j), self.x_flag(j) as u8, self.xp_flag(j) as u8)
            })
            .collect();
        write!(f, "({})", groups.join(" | "))
    }
}

impl fmt::Debug for SeqS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A class word `c_1^{k_1} .. c_n^{k_n} * prod q * prod q'`; see the module
/// documentation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeqT {
    n: usize,
    k: Vec<u32>,
    phi1: Vec<bool>,
    phi2: Vec<bool>,
}

impl SeqT {
    pub fn new(n: usize, k: Vec<u32>, phi1: Vec<bool>, phi2: Vec<bool>) -> Result<Self> {
        for (what, len) in [("k", k.len()), ("phi1", phi1.len()), ("phi2", phi2.len())] {
            if len != n {
                return Err(Error::BadGeneratorImage { what: format!("{what} of length {len}"), degree: n });
            }
        }
        Ok(SeqT { n, k, phi1, phi2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn phi1(&self) -> &[bool] {
        &self.phi1
    }

    pub fn phi2(&self) -> &[bool] {
        &self.phi2
    }

    /// `deg c_j = 2j`, `deg q_{2j-1} = deg q_{2j-1}' = 2j - 1`.
    pub fn degree(&self) -> usize {
        (1..=self.n)
            .map(|j| {
                2 * j * self.k[j - 1] as usize
                    + (2 * j - 1) * (self.phi1[j - 1] as usize + self.phi2[j - 1] as usize)
            })
            .sum()
    }

    /// The exponent sequence of the leading monomial of the expansion
    /// (`alpha` of the module documentation).
    pub fn leading_sequence(&self) -> SeqS {
        let mut entries = Vec::with_capacity(3 * self.n);
        for j in 0..self.n {
            let a: u32 = self.k[j..].iter().sum::<u32>()
                + self.phi1[j + 1..].iter().filter(|&&b| b).count() as u32
                + self.phi2[j + 1..].iter().filter(|&&b| b).count() as u32;
            entries.push(a);
            entries.push(self.phi1[j] as u32);
            entries.push(self.phi2[j] as u32);
        }
        SeqS { n: self.n, entries }
    }

    /// Like [`SeqT::from_leading`], but reports *where* an inadmissible
    /// sequence breaks the gap condition.
    pub fn try_from_leading(s: &SeqS) -> Result<SeqT> {
        match s.first_gap_violation() {
            Some(j) => Err(Error::NotInImage { j }),
            None => Ok(Self::from_leading(s).expect("admissible")),
        }
    }

    /// Inverts [`SeqT::leading_sequence`] on admissible sequences; `None`
    /// when the sequence is not admissible.
    pub fn from_leading(s: &SeqS) -> Option<SeqT> {
        if !s.is_admissible() {
            return None;
        }
        let n = s.n;
        let phi1: Vec<bool> = (1..=n).map(|j| s.x_flag(j)).collect();
        let phi2: Vec<bool> = (1..=n).map(|j| s.xp_flag(j)).collect();
        let mut k = vec![0u32; n];
        k[n - 1] = s.y_exp(n);
        for j in 1..n {
            k[j - 1] = s.y_exp(j) - s.y_exp(j + 1) - (phi1[j] as u32 + phi2[j] as u32);
        }
        Some(SeqT { n, k, phi1, phi2 })
    }

    /// All class words of the given degree, in a fixed deterministic order.
    pub fn enumerate(n: usize, degree: usize) -> Vec<SeqT> {
        let mut out = Vec::new();
        for m1 in 0u32..(1 << n) {
            for m2 in 0u32..(1 << n) {
                let phi_deg: usize = (0..n)
                    .map(|j| (2 * (j + 1) - 1) * ((m1 >> j & 1) + (m2 >> j & 1)) as usize)
                    .sum();
                if phi_deg > degree {
                    continue;
                }
                let phi1: Vec<bool> = (0..n).map(|j| m1 >> j & 1 == 1).collect();
                let phi2: Vec<bool> = (0..n).map(|j| m2 >> j & 1 == 1).collect();
                weighted_compositions(n, degree - phi_deg, &mut |k| {
                    out.push(SeqT { n, k: k.to_vec(), phi1: phi1.clone(), phi2: phi2.clone() });
                });
            }
        }
        out
    }

    fn expand_with(&self, primed_slot: Variant) -> Result<Element> {
        let n = self.n;
        let mut out = Element::one(n);
        for j in 1..=n {
            if self.k[j - 1] > 0 {
                out = out * chern(n, j)?.pow(self.k[j - 1]);
            }
        }
        for j in 1..=n {
            if self.phi1[j - 1] {
                out = out * quillen_e(n, j, Variant::Plain)?;
            }
        }
        for j in 1..=n {
            if self.phi2[j - 1] {
                out = out * quillen_e(n, j, primed_slot)?;
            }
        }
        Ok(out)
    }

    /// Expansion with the primed slot in the replaced flavour — the basis
    /// in which certificates are stated and leading terms are controlled.
    pub fn expand_replaced(&self) -> Result<Element> {
        self.expand_with(Variant::Replaced)
    }

    /// Expansion with the primed slot in the genuine primed flavour.
    pub fn expand_primed(&self) -> Result<Element> {
        self.expand_with(Variant::Primed)
    }
}

impl fmt::Display for SeqT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for j in 1..=self.n {
            match self.k[j - 1] {
                0 => {}
                1 => factors.push(format!("c{j}")),
                e => factors.push(format!("c{j}^{e}")),
            }
        }
        for j in 1..=self.n {
            if self.phi1[j - 1] {
                factors.push(format!("q{}", 2 * j - 1));
            }
        }
        for j in 1..=self.n {
            if self.phi2[j - 1] {
                factors.push(format!("qp{}", 2 * j - 1));
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for SeqT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `k` with `sum_j 2 j k_j = total`, via the callback.
fn weighted_compositions(n: usize, total: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, slot: usize, n: usize, remaining: usize, f: &mut impl FnMut(&[u32])) {
        if slot == n {
            if remaining == 0 {
                f(buf);
            }
            return;
        }
        let w = 2 * (slot + 1);
        for k in 0..=remaining / w {
            buf.push(k as u32);
            rec(buf, slot + 1, n, remaining - w * k, f);
            buf.pop();
        }
    }
    if total % 2 != 0 {
        return;
    }
    rec(&mut Vec::with_capacity(n), 0, n, total, f);
}

/// Outcome of a reduction: the class words subtracted, and what was left.
pub struct Reduction {
    /// Words in the order they were stripped; their replaced-basis
    /// expansions sum (with the remainder) to the input.
    pub certificate: Vec<SeqT>,
    /// Zero exactly when the input lies in the span of the class words.
    pub remainder: Element,
}

impl Reduction {
    pub fn is_member(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// The leading-term reduction algorithm on one degree component of `A_n`,
/// with memoized expansions.
pub struct ReduceEngine {
    n: usize,
    degree: usize,
    basis: Arc<DegreeBasis>,
    cache: HashMap<SeqT, BitVec>,
}

impl ReduceEngine {
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        Ok(ReduceEngine { n, degree, basis: basis_in_degree(n, degree)?, cache: HashMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn expansion(&mut self, word: &SeqT) -> Result<&BitVec> {
        if !self.cache.contains_key(word) {
            let v = self.basis.vector_of(&word.expand_replaced()?)?;
            self.cache.insert(word.clone(), v);
        }
        Ok(&self.cache[word])
    }

    /// Reduces a homogeneous element of the engine's degree.  The zero
    /// element is accepted (and is trivially a member).
    pub fn reduce(&mut self, e: &Element) -> Result<Reduction> {
        if e.n() != self.n {
            return Err(Error::GeneratorCountMismatch { left: e.n(), right: self.n });
        }
        if !e.is_zero() {
            match e.degree() {
                None => return Err(Error::Inhomogeneous),
                Some(d) if d != self.degree => {
                    return Err(Error::DegreeMismatch { expected: self.degree, actual: d })
                }
                _ => {}
            }
        }
        let (certificate, r) = self.reduce_vector(self.basis.vector_of(e)?)?;
        Ok(Reduction { certificate, remainder: self.basis.element_of(&r)? })
    }

    /// The reduction loop on raw coordinate vectors (the monomial basis of
    /// the engine's degree).  Useful for bulk runs where materializing
    /// term sets would dominate.
    pub fn reduce_vector(&mut self, mut r: BitVec) -> Result<(Vec<SeqT>, BitVec)> {
        if r.len() != self.basis.dim() {
            return Err(Error::VectorLength { len: r.len(), dim: self.basis.dim() });
        }
        let mut certificate = Vec::new();
        while let Some(i) = r.first_one() {
            let s = SeqS::from_monomial(self.basis.monomial(i));
            let Some(word) = SeqT::from_leading(&s) else {
                break; // inadmissible leading sequence: not in the span
            };
            let v = self.expansion(&word)?;
            debug_assert_eq!(v.first_one(), Some(i), "leading-term property");
            r.xor_with(v);
            certificate.push(word);
        }
        Ok((certificate, r))
    }
}

/// Rank-based membership oracle: the row-reduced span of all class-word
/// expansions in one degree.
pub struct MembershipTable {
    n: usize,
    degree: usize,
    word_count: usize,
    basis: Arc<DegreeBasis>,
    span: Subspace,
}

impl MembershipTable {
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        let basis = basis_in_degree(n, degree)?;
        let words = SeqT::enumerate(n, degree);
        let rows = words
            .iter()
            .map(|w| basis.vector_of(&w.expand_replaced()?))
            .collect::<Result<Vec<_>>>()?;
        let span = Subspace::from_spanning(&BitMatrix::from_rows(basis.dim(), &rows));
        Ok(MembershipTable { n, degree, word_count: words.len(), basis, span })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of class words of this degree.
    pub fn word_count(&self) -> usize {
        self.word_count
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, e: &Element) -> Result<bool> {
        Ok(self.span.contains(&self.basis.vector_of(e)?))
    }

    /// Membership of a raw coordinate vector over the degree basis.
    pub fn contains_vector(&self, v: &BitVec) -> bool {
        self.span.contains(v)
    }
}

/// Reduces an arbitrary element, splitting it into homogeneous components
/// first (one [`Reduction`] per occurring degree, ascending).  The element
/// is in the span of the class words iff every component is.
pub fn reduce_element(e: &Element) -> Result<Vec<(usize, Reduction)>> {
    e.homogeneous_components()
        .into_iter()
        .map(|(d, part)| Ok((d, ReduceEngine::new(e.n(), d)?.reduce(&part)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert;
    use gf2::BitVec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn word(n: usize, k: &[u32], phi1: &[bool], phi2: &[bool]) -> SeqT {
        SeqT::new(n, k.to_vec(), phi1.to_vec(), phi2.to_vec()).unwrap()
    }

    #[test]
    fn sequence_of_a_monomial_and_back() {
        let e3 = quillen_e(2, 2, Variant::Plain).unwrap();
        let s = SeqS::from_monomial(e3.leading_monomial().unwrap());
        assert_eq!(s.entries(), [1, 0, 0, 0, 1, 0]);
        assert_eq!(s.to_string(), "(1,0,0 | 0,1,0)");
        assert_eq!(&s.to_monomial().unwrap(), e3.leading_monomial().unwrap());
        assert_eq!(s.degree(), 3);
    }

    #[test]
    fn alpha_on_the_degree_three_words() {
        let q3 = word(2, &[0, 0], &[false, true], &[false, false]);
        assert_eq!(q3.leading_sequence().entries(), [1, 0, 0, 0, 1, 0]);
        assert_eq!(q3.to_string(), "q3");
        let c1q1 = word(2, &[1, 0], &[true, false], &[false, false]);
        assert_eq!(c1q1.leading_sequence().entries(), [1, 1, 0, 0, 0, 0]);
        assert_eq!(c1q1.to_string(), "c1*q1");
    }

    #[test]
    fn admissibility_splits_the_conditions() {
        // (0,0,0 | 0,1,0) fails: the drop a_1 - a_2 = 0 cannot pay for the
        // exterior flag at position 2.
        let bad = SeqS::new(2, vec![0, 0, 0, 0, 1, 0]).unwrap();
        assert!(!bad.is_admissible());
        assert!(SeqT::from_leading(&bad).is_none());
        // (1,0,0 | 0,1,0) passes with k_1 = 0.
        let good = SeqS::new(2, vec![1, 0, 0, 0, 1, 0]).unwrap();
        assert!(good.is_admissible());
        assert_eq!(SeqT::from_leading(&good).unwrap().to_string(), "q3");
        // Plain y-exponent growth a_1 < a_2 is inadmissible even with no
        // exterior flags at all.
        let grow = SeqS::new(2, vec![0, 0, 0, 1, 0, 0]).unwrap();
        assert!(!grow.is_admissible());
    }

    #[test]
    fn enumeration_counts_match_the_class_series() {
        for n in 1..=4 {
            let dims = hilbert::class_algebra_series(n).dims(12).unwrap();
            for (d, expect) in dims.into_iter().enumerate() {
                assert_eq!(SeqT::enumerate(n, d).len(), expect, "n = {n}, degree {d}");
                for w in SeqT::enumerate(n, d) {
                    assert_eq!(w.degree(), d);
                }
            }
        }
    }

    #[test]
    fn leading_term_property_exhaustive_small() {
        for n in 1..=3 {
            for d in 0..=10 {
                for w in SeqT::enumerate(n, d) {
                    let e = w.expand_replaced().unwrap();
                    let lead = SeqS::from_monomial(e.leading_monomial().unwrap());
                    assert_eq!(lead, w.leading_sequence(), "word {w} (n = {n})");
                }
            }
        }
    }

    #[test]
    fn alpha_round_trips() {
        for n in 1..=3 {
            for d in 0..=10 {
                for w in SeqT::enumerate(n, d) {
                    assert_eq!(SeqT::from_leading(&w.leading_sequence()), Some(w.clone()));
                }
                for m in basis_in_degree(n, d).unwrap().monomials() {
                    let s = SeqS::from_monomial(m);
                    if let Some(w) = SeqT::from_leading(&s) {
                        assert_eq!(w.leading_sequence(), s);
                        assert_eq!(w.degree(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn reducing_a_bare_exterior_generator_fails_with_a_trace() {
        let mut engine = ReduceEngine::new(2, 1).unwrap();
        let x1 = Element::x(2, 1).unwrap();
        let r = engine.reduce(&x1).unwrap();
        assert!(!r.is_member());
        // One step: q1 = x1 + x2 is stripped, leaving x2, whose sequence
        // (0,0,0 | 0,1,0) is inadmissible.
        assert_eq!(r.certificate, vec![word(2, &[0, 0], &[true, false], &[false, false])]);
        assert_eq!(r.remainder, Element::x(2, 2).unwrap());
        // The oracle agrees.
        assert!(!MembershipTable::new(2, 1).unwrap().contains(&x1).unwrap());
    }

    #[test]
    fn reducing_a_product_of_members_succeeds_with_the_known_trace() {
        let target = crate::quillen::b2() * crate::quillen::d3();
        let mut engine = ReduceEngine::new(2, 7).unwrap();
        let r = engine.reduce(&target).unwrap();
        assert!(r.is_member());
        assert_eq!(
            r.certificate,
            vec![
                word(2, &[2, 0], &[false, true], &[false, false]), // c1^2 q3
                word(2, &[0, 1], &[false, true], &[false, false]), // c2 q3
            ]
        );
        assert!(MembershipTable::new(2, 7).unwrap().contains(&target).unwrap());
    }

    #[test]
    fn reduction_is_a_faithful_decomposition() {
        // remainder + sum of certificate expansions == input, always.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e9_2026);
        for d in 0..=9 {
            let basis = basis_in_degree(3, d).unwrap();
            let mut engine = ReduceEngine::new(3, d).unwrap();
            for _ in 0..20 {
                let v = BitVec::from_bools(
                    &(0..basis.dim()).map(|_| rng.gen_bool(0.4)).collect::<Vec<_>>(),
                );
                let e = basis.element_of(&v).unwrap();
                let r = engine.reduce(&e).unwrap();
                let rebuilt = r
                    .certificate
                    .iter()
                    .fold(r.remainder.clone(), |acc, w| acc + w.expand_replaced().unwrap());
                assert_eq!(rebuilt, e);
            }
        }
    }

    #[test]
    fn reduce_and_oracle_agree_on_all_small_monomials() {
        for n in 1..=2 {
            for d in 0..=10 {
                let table = MembershipTable::new(n, d).unwrap();
                let mut engine = ReduceEngine::new(n, d).unwrap();
                for m in basis_in_degree(n, d).unwrap().monomials() {
                    let e = Element::from_monomial(m.clone());
                    let r = engine.reduce(&e).unwrap();
                    assert_eq!(
                        r.is_member(),
                        table.contains(&e).unwrap(),
                        "monomial {m} (n = {n}, degree {d})"
                    );
                }
            }
        }
    }

    #[test]
    fn reduce_and_oracle_agree_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e55ed);
        for d in 0..=8 {
            let basis = basis_in_degree(3, d).unwrap();
            let table = MembershipTable::new(3, d).unwrap();
            let mut engine = ReduceEngine::new(3, d).unwrap();
            for _ in 0..25 {
                let v = BitVec::from_bools(
                    &(0..basis.dim()).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
                );
                let e = basis.element_of(&v).unwrap();
                let r = engine.reduce(&e).unwrap();
                assert_eq!(r.is_member(), table.contains(&e).unwrap());
                if !r.is_member() {
                    // The remainder's leading sequence certifies exclusion.
                    let lead = SeqS::from_monomial(r.remainder.leading_monomial().unwrap());
                    assert!(!lead.is_admissible());
                }
            }
        }
    }

    #[test]
    fn expansions_are_linearly_independent() {
        // Distinct leading terms make the expansions independent, so the
        // span dimension equals the word count.
        for n in 1..=3 {
            for d in 0..=8 {
                let table = MembershipTable::new(n, d).unwrap();
                assert_eq!(table.span().dim(), table.word_count(), "n = {n}, degree {d}");
            }
        }
    }

    #[test]
    fn primed_and_replaced_spans_coincide() {
        for n in 1..=3 {
            for d in 0..=8 {
                let basis = basis_in_degree(n, d).unwrap();
                let span_of = |primed: bool| {
                    let rows: Vec<BitVec> = SeqT::enumerate(n, d)
                        .iter()
                        .map(|w| {
                            let e = if primed {
                                w.expand_primed().unwrap()
                            } else {
                                w.expand_replaced().unwrap()
                            };
                            basis.vector_of(&e).unwrap()
                        })
                        .collect();
                    Subspace::from_spanning(&BitMatrix::from_rows(basis.dim(), &rows))
                };
                assert_eq!(span_of(true), span_of(false), "n = {n}, degree {d}");
            }
        }
    }

    #[test]
    fn inadmissibility_reports_the_failing_position() {
        // Gap condition fails at j = 2: a_2 - a_3 = 0 cannot pay for the
        // exterior flag at position 3.
        let s = SeqS::new(3, vec![2, 0, 0, 1, 0, 0, 1, 1, 0]).unwrap();
        assert_eq!(s.first_gap_violation(), Some(2));
        assert!(matches!(SeqT::try_from_leading(&s), Err(Error::NotInImage { j: 2 })));
        // And an admissible one round-trips through the fallible path too.
        let ok = SeqS::new(3, vec![2, 0, 0, 1, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(ok.first_gap_violation(), None);
        let w = SeqT::try_from_leading(&ok).unwrap();
        assert_eq!(w.leading_sequence(), ok);
    }

    #[test]
    fn inhomogeneous_inputs_split_by_degree() {
        let non_member =
            Element::x(2, 1).unwrap() + Element::y(2, 1).unwrap() * Element::x(2, 1).unwrap();
        let parts = reduce_element(&non_member).unwrap();
        assert_eq!(parts.iter().map(|(d, _)| *d).collect::<Vec<_>>(), vec![1, 3]);
        assert!(parts.iter().all(|(_, r)| !r.is_member()));

        let member = quillen_e(2, 1, Variant::Plain).unwrap() + quillen_e(2, 2, Variant::Plain).unwrap();
        let parts = reduce_element(&member).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, r)| r.is_member()));

        assert!(reduce_element(&Element::zero(2)).unwrap().is_empty());
    }

    #[test]
    fn engine_rejects_malformed_inputs() {
        let mut engine = ReduceEngine::new(2, 4).unwrap();
        let x = Element::x(2, 1).unwrap();
        let y = Element::y(2, 1).unwrap();
        assert!(matches!(engine.reduce(&x), Err(Error::DegreeMismatch { expected: 4, actual: 1 })));
        assert!(matches!(engine.reduce(&(x + y)), Err(Error::Inhomogeneous)));
        assert!(matches!(
            engine.reduce(&Element::x(3, 1).unwrap()),
            Err(Error::GeneratorCountMismatch { .. })
        ));
        assert!(engine.reduce(&Element::zero(2)).unwrap().is_member());
    }
}
