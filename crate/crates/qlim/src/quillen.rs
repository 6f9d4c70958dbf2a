//! The two-object limit over the Quillen category.
//!
//! The rank-two elementary abelian 2-subgroup contributes `A_2` with its
//! `Weyl = S_3` action by linear substitutions:
//!
//! ```text
//!   sigma: y1 -> y2 -> y1 + y2,  x1 -> x2 -> x1 + x2,  x1' -> x2' -> x1' + x2'
//!   tau:   swaps the index pairs 1 <-> 2
//! ```
//!
//! The rank-one subgroup contributes its centralizer cohomology
//! `F_2[c_1, c_2] (x) E(e_1, e_1', e_3, e_3')`, which restricts to `A_2` by
//!
//! ```text
//!   alpha: c1 -> y1+y2, c2 -> y1 y2, e1 -> x1+x2, e3 -> y1 x2 + y2 x1,
//!          e1' -> x1+x1'+x2+x2', e3' -> y1 (x2+x2') + y2 (x1+x1')
//! ```
//!
//! The degreewise limit of the two-object diagram sits in an exact sequence
//!
//! ```text
//!   0 -> lim -> (rank-one part)_d --phi--> Hom_{S_3}(St, A_2^d) -> lim^1 -> 0
//! ```
//!
//! where `phi(z)` is the Steinberg map with images
//! `f(a) = (1 + sigma^2) alpha(z)`, `f(b) = (1 + sigma) alpha(z)`; that this
//! pair is equivariant uses only `tau alpha = alpha`, which is machine-checked.
//! Consequently `lim = ker(phi)`; because `alpha` turns out to be injective
//! in every inspected degree, the limit is realized inside `A_2` as
//! `im(alpha) ∩ Fix(sigma)`, and [`lim_in_degree`] computes both sides.
//!
//! The realized limit is the sub*algebra* generated by six explicit classes
//! ([`b2`], [`b3`], [`d3`], [`d3p`], [`d5`], [`d5p`]) on which it is free
//! graded-commutative; [`subalgebra_span`] rebuilds its degree components
//! from generator products so the two descriptions can be compared verbatim.

use std::collections::HashMap;
use std::fmt;

use gf2::{BitMatrix, Subspace};

use crate::error::{Error, Result};
use crate::graded::{basis_in_degree, AlgebraMap, Element, Monomial};
use crate::s3rep::{S3Action, Subgroup};

fn gen_y(i: usize) -> Element {
    Element::y(2, i).expect("index 1 or 2 in A_2")
}

fn gen_x(i: usize) -> Element {
    Element::x(2, i).expect("index 1 or 2 in A_2")
}

fn gen_xp(i: usize) -> Element {
    Element::xp(2, i).expect("index 1 or 2 in A_2")
}

/// The order-3 substitution `sigma` on `A_2`.
pub fn sigma_map() -> AlgebraMap {
    AlgebraMap::new(
        2,
        2,
        vec![gen_y(2), gen_y(1) + gen_y(2)],
        vec![gen_x(2), gen_x(1) + gen_x(2)],
        vec![gen_xp(2), gen_xp(1) + gen_xp(2)],
    )
    .expect("literal images are degree-correct")
}

/// The order-2 substitution `tau` on `A_2` (swap of the index pairs).
pub fn tau_map() -> AlgebraMap {
    AlgebraMap::new(
        2,
        2,
        vec![gen_y(2), gen_y(1)],
        vec![gen_x(2), gen_x(1)],
        vec![gen_xp(2), gen_xp(1)],
    )
    .expect("literal images are degree-correct")
}

/// The `S_3`-action on the degree component `A_2^d`; the constructor
/// re-verifies the group relations on every degree.
pub fn action_on_degree(degree: usize) -> Result<S3Action> {
    S3Action::new(sigma_map().matrix_on_degree(degree)?, tau_map().matrix_on_degree(degree)?)
}

/// The monomials of `A_2^d` lying in the polynomial part `F_2[y_1, y_2]`.
pub fn poly_monomials(degree: usize) -> Result<Vec<Monomial>> {
    Ok(basis_in_degree(2, degree)?
        .monomials()
        .iter()
        .filter(|m| (1..=2).all(|j| !m.has_x(j) && !m.has_xp(j)))
        .cloned()
        .collect())
}

/// The `S_3`-action restricted to the polynomial part `F_2[y_1, y_2]^d`
/// (the span of the pure-`y` monomials, which both generators preserve).
pub fn poly_action_on_degree(degree: usize) -> Result<S3Action> {
    let monos = poly_monomials(degree)?;
    let index: HashMap<Monomial, usize> =
        monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let on_basis = |map: &AlgebraMap| -> Result<BitMatrix> {
        let mut out = BitMatrix::zeros(monos.len(), monos.len());
        for (j, m) in monos.iter().enumerate() {
            let image = map.apply(&Element::from_monomial(m.clone()))?;
            for term in image.terms() {
                let i = index.get(term).copied().ok_or(Error::NotInvariant)?;
                out.set(i, j, true);
            }
        }
        Ok(out)
    };
    S3Action::new(on_basis(&sigma_map())?, on_basis(&tau_map())?)
}

/// The images under restriction of the six rank-one centralizer generators.
pub struct RestrictionImages {
    pub c1: Element,
    pub c2: Element,
    pub e1: Element,
    pub e3: Element,
    pub e1p: Element,
    pub e3p: Element,
}

/// `alpha` on generators; see the module documentation for the list.
pub fn restriction_images() -> RestrictionImages {
    RestrictionImages {
        c1: gen_y(1) + gen_y(2),
        c2: gen_y(1) * gen_y(2),
        e1: gen_x(1) + gen_x(2),
        e3: gen_y(1) * gen_x(2) + gen_y(2) * gen_x(1),
        e1p: gen_x(1) + gen_xp(1) + gen_x(2) + gen_xp(2),
        e3p: gen_y(1) * (gen_x(2) + gen_xp(2)) + gen_y(2) * (gen_x(1) + gen_xp(1)),
    }
}

/// Exterior-factor flags of a rank-one monomial, one bit per generator.
pub const EXT_E1: u8 = 1 << 0;
pub const EXT_E3: u8 = 1 << 1;
pub const EXT_E1P: u8 = 1 << 2;
pub const EXT_E3P: u8 = 1 << 3;

/// A monomial `c1^a c2^b e1^? e3^? e1'^? e3'^?` in the rank-one centralizer
/// cohomology; these monomials are a basis, which is what makes the domain
/// of `phi` concrete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOneMonomial {
    pub c1: u32,
    pub c2: u32,
    /// Bitmask over [`EXT_E1`], [`EXT_E3`], [`EXT_E1P`], [`EXT_E3P`].
    pub exterior: u8,
}

impl RankOneMonomial {
    pub fn degree(&self) -> usize {
        let ext: usize = [(EXT_E1, 1), (EXT_E3, 3), (EXT_E1P, 1), (EXT_E3P, 3)]
            .iter()
            .filter(|(bit, _)| self.exterior & bit != 0)
            .map(|&(_, d)| d)
            .sum();
        2 * self.c1 as usize + 4 * self.c2 as usize + ext
    }

    /// All rank-one monomials of the given degree, in a fixed deterministic
    /// order.
    pub fn enumerate(degree: usize) -> Vec<RankOneMonomial> {
        let mut out = Vec::new();
        for exterior in 0u8..16 {
            for c2 in 0..=(degree / 4) as u32 {
                for c1 in 0..=(degree / 2) as u32 {
                    let m = RankOneMonomial { c1, c2, exterior };
                    if m.degree() == degree {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// The image in `A_2` under the restriction map `alpha`.
    pub fn alpha_image(&self) -> Element {
        let imgs = restriction_images();
        let mut out = imgs.c1.pow(self.c1) * imgs.c2.pow(self.c2);
        for (bit, img) in
            [(EXT_E1, &imgs.e1), (EXT_E3, &imgs.e3), (EXT_E1P, &imgs.e1p), (EXT_E3P, &imgs.e3p)]
        {
            if self.exterior & bit != 0 {
                out = out * img;
            }
        }
        out
    }
}

impl fmt::Display for RankOneMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.c1 {
            0 => {}
            1 => factors.push("c1".to_string()),
            e => factors.push(format!("c1^{e}")),
        }
        match self.c2 {
            0 => {}
            1 => factors.push("c2".to_string()),
            e => factors.push(format!("c2^{e}")),
        }
        for (bit, name) in [(EXT_E1, "e1"), (EXT_E3, "e3"), (EXT_E1P, "ep1"), (EXT_E3P, "ep3")] {
            if self.exterior & bit != 0 {
                factors.push(name.to_string());
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Applies `alpha` to a formal sum of rank-one monomials.
pub fn alpha_of_sum(terms: &[RankOneMonomial]) -> Element {
    terms
        .iter()
        .fold(Element::zero(2), |acc, m| acc + m.alpha_image())
}

/// Everything the degreewise limit computation produces in one degree.
pub struct LimDegree {
    pub degree: usize,
    /// Dimension of the rank-one part (number of rank-one monomials).
    pub domain_dim: usize,
    /// `dim Hom_{S_3}(St, A_2^d)`.
    pub hom_dim: usize,
    /// Rank of `phi`.
    pub rank_phi: usize,
    /// `dim lim = domain_dim - rank_phi`.
    pub lim_dim: usize,
    /// `dim lim^1 = hom_dim - rank_phi`.
    pub lim1_dim: usize,
    /// Rank of `alpha` on this degree (injectivity check).
    pub alpha_rank: usize,
    /// The limit realized in `A_2^d`: `im(alpha) ∩ Fix(sigma)`.
    pub realized_lim: Subspace,
}

/// Runs the limit computation in one degree.  Fails if `phi` does not land
/// in the Steinberg hom space — which would falsify the equivariance
/// argument, so it is checked rather than assumed.
pub fn lim_in_degree(degree: usize) -> Result<LimDegree> {
    let monos = RankOneMonomial::enumerate(degree);
    let f = monos.len();
    let basis = basis_in_degree(2, degree)?;
    let m = basis.dim();
    let action = action_on_degree(degree)?;
    let sigma = action.sigma();
    let sigma2 = sigma.mul(sigma);

    let mut alpha = BitMatrix::zeros(m, f);
    let mut phi = BitMatrix::zeros(2 * m, f);
    for (j, mono) in monos.iter().enumerate() {
        let w = basis.vector_of(&mono.alpha_image())?;
        for i in w.iter_ones() {
            alpha.set(i, j, true);
        }
        let mut u = sigma2.mul_vec(&w);
        u.xor_with(&w);
        let mut v = sigma.mul_vec(&w);
        v.xor_with(&w);
        for i in u.iter_ones() {
            phi.set(i, j, true);
        }
        for i in v.iter_ones() {
            phi.set(m + i, j, true);
        }
    }

    let hom = action.hom_from_st();
    let phi_cols = phi.transpose();
    for j in 0..f {
        if !hom.contains(&phi_cols.row(j)) {
            return Err(Error::BadAction {
                reason: format!("phi({}) is not Steinberg-equivariant in degree {degree}", monos[j]),
            });
        }
    }

    let rank_phi = phi.rank();
    let fix_sigma = action.invariants(Subgroup::Alternating);
    let image_span = Subspace::from_spanning(&alpha.transpose());
    let realized_lim = image_span.intersect(&fix_sigma)?;
    Ok(LimDegree {
        degree,
        domain_dim: f,
        hom_dim: hom.dim(),
        rank_phi,
        lim_dim: f - rank_phi,
        lim1_dim: hom.dim() - rank_phi,
        alpha_rank: alpha.rank(),
        realized_lim,
    })
}

/// The limit computation on all degrees up to and including `max_degree`.
pub fn lim_table(max_degree: usize) -> Result<Vec<LimDegree>> {
    (0..=max_degree).map(lim_in_degree).collect()
}

/// `b2 = y1^2 + y1 y2 + y2^2`, degree 4; equals `alpha(c1^2 + c2)`.
pub fn b2() -> Element {
    gen_y(1).pow(2) + gen_y(1) * gen_y(2) + gen_y(2).pow(2)
}

/// `b3 = y1^2 y2 + y1 y2^2`, degree 6; equals `alpha(c1 c2)`.
pub fn b3() -> Element {
    gen_y(1).pow(2) * gen_y(2) + gen_y(1) * gen_y(2).pow(2)
}

/// `d3 = y1 x2 + y2 x1`, degree 3; equals `alpha(e3)`.
pub fn d3() -> Element {
    gen_y(1) * gen_x(2) + gen_y(2) * gen_x(1)
}

/// `d3' = y1 (x2 + x2') + y2 (x1 + x1')`, degree 3; equals `alpha(e3')`.
pub fn d3p() -> Element {
    gen_y(1) * (gen_x(2) + gen_xp(2)) + gen_y(2) * (gen_x(1) + gen_xp(1))
}

/// `d5 = y1^2 x2 + y2^2 x1`, degree 5; equals `alpha(c1 e3 + c2 e1)`.
pub fn d5() -> Element {
    gen_y(1).pow(2) * gen_x(2) + gen_y(2).pow(2) * gen_x(1)
}

/// `d5' = y1^2 (x2 + x2') + y2^2 (x1 + x1')`, degree 5; equals
/// `alpha(c1 e3' + c2 e1')`.
pub fn d5p() -> Element {
    gen_y(1).pow(2) * (gen_x(2) + gen_xp(2)) + gen_y(2).pow(2) * (gen_x(1) + gen_xp(1))
}

/// The six generators of the realized limit with their names and their
/// preimages under `alpha`, as formal sums of rank-one monomials.
pub fn generator_certificates() -> Vec<(&'static str, Element, Vec<RankOneMonomial>)> {
    let m = |c1, c2, exterior| RankOneMonomial { c1, c2, exterior };
    vec![
        ("b2", b2(), vec![m(2, 0, 0), m(0, 1, 0)]),
        ("b3", b3(), vec![m(1, 1, 0)]),
        ("d3", d3(), vec![m(0, 0, EXT_E3)]),
        ("d3p", d3p(), vec![m(0, 0, EXT_E3P)]),
        ("d5", d5(), vec![m(1, 0, EXT_E3), m(0, 1, EXT_E1)]),
        ("d5p", d5p(), vec![m(1, 0, EXT_E3P), m(0, 1, EXT_E1P)]),
    ]
}

/// The degree-`d` component of the subalgebra generated by
/// `b2, b3, d3, d3', d5, d5'`, spanned by all products
/// `b2^i b3^j d3^? d3'^? d5^? d5'^?` of total degree `d`.
pub fn subalgebra_span(degree: usize) -> Result<Subspace> {
    let basis = basis_in_degree(2, degree)?;
    let exterior = [(3usize, d3()), (3, d3p()), (5, d5()), (5, d5p())];
    let mut rows = Vec::new();
    for mask in 0u8..16 {
        let mut ext_deg = 0;
        let mut product = Element::one(2);
        for (bit, (deg, gen)) in exterior.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                ext_deg += deg;
                product = product * gen;
            }
        }
        if ext_deg > degree {
            continue;
        }
        for j in 0..=(degree - ext_deg) / 6 {
            let rest = degree - ext_deg - 6 * j;
            if rest % 4 != 0 {
                continue;
            }
            let i = rest / 4;
            let word = product.clone() * b3().pow(j as u32) * b2().pow(i as u32);
            rows.push(basis.vector_of(&word)?);
        }
    }
    Ok(Subspace::from_spanning(&BitMatrix::from_rows(basis.dim(), &rows)))
}

/// Degreewise dimensions of the Borel-construction cohomology assembled
/// from the limit: degree `n` gets `lim(n) + lim^1(n-1)`.
pub fn xs_dims(max_degree: usize) -> Result<Vec<usize>> {
    let table = lim_table(max_degree)?;
    Ok((0..=max_degree)
        .map(|n| table[n].lim_dim + if n > 0 { table[n - 1].lim1_dim } else { 0 })
        .collect())
}

/// The degrees (with multiplicity) of the classes contributed by `lim^1`,
/// i.e. degree `n` appears `lim^1(n-1)` times.
pub fn suspension_degrees(max_degree: usize) -> Result<Vec<usize>> {
    let table = lim_table(max_degree.saturating_sub(1))?;
    let mut out = Vec::new();
    for r in &table {
        for _ in 0..r.lim1_dim {
            out.push(r.degree + 1);
        }
    }
    Ok(out)
}
