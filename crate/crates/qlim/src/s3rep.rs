//! GF(2) representations of the symmetric group `S_3`.
//!
//! `S_3 = <sigma, tau | sigma^3 = tau^2 = 1, tau sigma = sigma^2 tau>`.
//! A representation is a pair of matrices satisfying those relations; the
//! constructor machine-checks them, so an [`S3Action`] can always be trusted.
//!
//! Over GF(2) the group algebra splits as `F_2[S_3] = F_2[C_2] x M_2(F_2)`:
//! the matrix block is semisimple with the two-dimensional Steinberg module
//! `St` as its only simple, while the principal block sees only the trivial
//! simple and has the two-dimensional coset module `F_2[S_3/A_3]` as
//! projective cover.  Consequently every module is canonically
//! `(principal-block part) + St^r`, and the averaging idempotent
//! `eps = 1 + sigma + sigma^2` (idempotent because the characteristic is 2)
//! projects onto the principal-block part: `sigma` acts trivially there and
//! `eps` kills every Steinberg summand.  That observation drives
//! [`S3Action::projective_summands`].
//!
//! Morphisms out of `St` are computed honestly as a kernel: a map is a pair
//! of images `(u, v) = (f(a), f(b))` subject to the linearised equivariance
//! constraints, see [`S3Action::hom_from_st`].

use gf2::{BitMatrix, Subspace};

use crate::error::{Error, Result};

/// A finite-dimensional GF(2) representation of `S_3`, stored as the two
/// generator matrices acting on column vectors.
#[derive(Clone, Debug)]
pub struct S3Action {
    dim: usize,
    sigma: BitMatrix,
    tau: BitMatrix,
}

/// Multiplicities of the two projective indecomposables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summands {
    /// Copies of the Steinberg module `St`.
    pub steinberg: usize,
    /// Copies of the coset module `F_2[S_3/A_3]`.
    pub coset: usize,
}

/// Which invariants to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// The alternating (cyclic order-3) subgroup generated by `sigma`.
    Alternating,
    /// All of `S_3`.
    Full,
}

impl S3Action {
    /// Wraps two generator matrices, verifying the `S_3` presentation.
    pub fn new(sigma: BitMatrix, tau: BitMatrix) -> Result<Self> {
        let dim = sigma.rows();
        if sigma.cols() != dim || tau.rows() != dim || tau.cols() != dim {
            return Err(Error::BadAction { reason: "generator matrices must be square and of equal size".into() });
        }
        let id = BitMatrix::identity(dim);
        if sigma.mul(&sigma).mul(&sigma) != id {
            return Err(Error::BadAction { reason: "sigma^3 != 1".into() });
        }
        if tau.mul(&tau) != id {
            return Err(Error::BadAction { reason: "tau^2 != 1".into() });
        }
        if tau.mul(&sigma) != sigma.mul(&sigma).mul(&tau) {
            return Err(Error::BadAction { reason: "tau sigma != sigma^2 tau".into() });
        }
        Ok(S3Action { dim, sigma, tau })
    }

    /// The trivial one-dimensional representation.
    pub fn trivial() -> Self {
        S3Action { dim: 1, sigma: BitMatrix::identity(1), tau: BitMatrix::identity(1) }
    }

    /// The Steinberg module `St` on basis `(a, b)`:
    /// `sigma: a -> b -> a + b` and `tau` swaps `a` and `b`.
    pub fn steinberg() -> Self {
        let sigma = BitMatrix::from_fn(2, 2, |i, j| [[false, true], [true, true]][i][j]);
        let tau = BitMatrix::from_fn(2, 2, |i, j| i != j);
        S3Action::new(sigma, tau).expect("fixed matrices satisfy the relations")
    }

    /// The coset module `F_2[S_3/A_3]`: `sigma` fixes both cosets, `tau`
    /// swaps them.
    pub fn coset() -> Self {
        let tau = BitMatrix::from_fn(2, 2, |i, j| i != j);
        S3Action::new(BitMatrix::identity(2), tau).expect("fixed matrices satisfy the relations")
    }

    /// The regular representation on the basis
    /// `(1, sigma, sigma^2, tau, sigma tau, sigma^2 tau)`, by left
    /// multiplication.
    pub fn regular() -> Self {
        // Left multiplication by sigma cycles each column block; left
        // multiplication by tau uses tau sigma^k = sigma^{-k} tau.
        let perm_matrix = |perm: [usize; 6]| BitMatrix::from_fn(6, 6, |i, j| perm[j] == i);
        let sigma = perm_matrix([1, 2, 0, 4, 5, 3]);
        let tau = perm_matrix([3, 5, 4, 0, 2, 1]);
        S3Action::new(sigma, tau).expect("fixed matrices satisfy the relations")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &BitMatrix {
        &self.sigma
    }

    pub fn tau(&self) -> &BitMatrix {
        &self.tau
    }

    /// Tensor product, generators acting diagonally (Kronecker products).
    pub fn tensor(&self, other: &S3Action) -> S3Action {
        S3Action {
            dim: self.dim * other.dim,
            sigma: self.sigma.kronecker(&other.sigma),
            tau: self.tau.kronecker(&other.tau),
        }
    }

    /// Direct sum, generators acting blockwise.
    pub fn direct_sum(&self, other: &S3Action) -> S3Action {
        let dim = self.dim + other.dim;
        let block = |a: &BitMatrix, b: &BitMatrix| {
            BitMatrix::from_fn(dim, dim, |i, j| {
                if i < a.rows() && j < a.cols() {
                    a.get(i, j)
                } else if i >= a.rows() && j >= a.cols() {
                    b.get(i - a.rows(), j - a.cols())
                } else {
                    false
                }
            })
        };
        S3Action { dim, sigma: block(&self.sigma, &other.sigma), tau: block(&self.tau, &other.tau) }
    }

    /// The space `Hom_{S_3}(St, M)` as a subspace of `M + M`.
    ///
    /// A map `f` is the pair `(u, v) = (f(a), f(b))`.  Equivariance is
    /// equivalent to the three linear constraints
    ///
    /// ```text
    ///   tau u + v = 0        (f(tau a) = tau f(a))
    ///   sigma u + v = 0      (f(sigma a) = sigma f(a))
    ///   u + (1 + sigma) v = 0  (f(sigma b) = sigma f(b))
    /// ```
    ///
    /// and the remaining generator equation `f(tau b) = tau f(b)` follows
    /// from `tau^2 = 1`.  The result is the kernel of the stacked block
    /// matrix, coordinates ordered `u` then `v`.
    pub fn hom_from_st(&self) -> Subspace {
        let m = self.dim;
        let id = BitMatrix::identity(m);
        let sigma_plus_id = self.sigma.add(&id);
        let blocks = BitMatrix::from_fn(3 * m, 2 * m, |i, j| {
            let (block, r) = (i / m, i % m);
            let (left, c) = (j < m, j % m);
            match (block, left) {
                (0, true) => self.tau.get(r, c),
                (1, true) => self.sigma.get(r, c),
                (2, true) => id.get(r, c),
                (0, false) | (1, false) => id.get(r, c),
                (2, false) => sigma_plus_id.get(r, c),
                _ => unreachable!(),
            }
        });
        blocks.kernel_basis()
    }

    /// `dim Hom_{S_3}(St, M)` — the Steinberg multiplicity, valid for every
    /// module because the Steinberg block is semisimple.
    pub fn steinberg_multiplicity(&self) -> usize {
        self.hom_from_st().dim()
    }

    /// The matrix of the averaging idempotent `eps = 1 + sigma + sigma^2`.
    pub fn averaging_idempotent(&self) -> BitMatrix {
        let id = BitMatrix::identity(self.dim);
        id.add(&self.sigma).add(&self.sigma.mul(&self.sigma))
    }

    /// Splits `M = im(eps) + ker(eps)` for the idempotent
    /// `eps = 1 + sigma + sigma^2`: the image is the principal-block part
    /// (where `sigma` acts trivially), the kernel is the Steinberg part.
    pub fn idempotent_split(&self) -> (Subspace, Subspace) {
        let eps = self.averaging_idempotent();
        let image = Subspace::from_spanning(&eps.transpose());
        let kernel = eps.kernel_basis();
        (image, kernel)
    }

    /// Counts projective summands `M = St^r + (F_2[S_3/A_3])^s`.
    ///
    /// The Steinberg part is `ker(eps)`, giving `r`; on `im(eps)` the group
    /// acts through the order-2 quotient, and the module is projective there
    /// exactly when that action is free, i.e. `rank(tau + 1)` on the image
    /// is half its dimension.  Fails with [`Error::NotProjective`] whenever
    /// `M` has a non-projective (trivial) summand.
    pub fn projective_summands(&self) -> Result<Summands> {
        let (image, kernel) = self.idempotent_split();
        let id = BitMatrix::identity(self.dim);
        let tau_plus_id_t = self.tau.add(&id).transpose();
        // Row vectors w of im(eps) map to w * (tau + 1)^T; the rank of the
        // mapped basis is the number of free orbits.
        let moved = image.basis().mul(&tau_plus_id_t);
        let free = moved.rank();
        if kernel.dim() % 2 != 0 || 2 * free != image.dim() {
            return Err(Error::NotProjective { im_dim: image.dim(), ker_dim: kernel.dim() });
        }
        Ok(Summands { steinberg: kernel.dim() / 2, coset: free })
    }

    /// The subspace of vectors fixed by the chosen subgroup.
    pub fn invariants(&self, subgroup: Subgroup) -> Subspace {
        let id = BitMatrix::identity(self.dim);
        let sig = self.sigma.add(&id);
        match subgroup {
            Subgroup::Alternating => sig.kernel_basis(),
            Subgroup::Full => sig.vstack(&self.tau.add(&id)).kernel_basis(),
        }
    }

    /// Restricts the action to an invariant subspace, returning the action
    /// in the coordinates of the subspace's canonical basis.  Fails with
    /// [`Error::NotInvariant`] when the subspace is not preserved.
    pub fn restrict_to(&self, w: &Subspace) -> Result<S3Action> {
        if w.ambient_dim() != self.dim {
            return Err(Error::Ambient(gf2::AmbientMismatch { left: w.ambient_dim(), right: self.dim }));
        }
        let k = w.dim();
        let restrict = |g: &BitMatrix| -> Result<BitMatrix> {
            let mut out = BitMatrix::zeros(k, k);
            for (j, b) in w.basis_rows().enumerate() {
                let image = g.mul_vec(&b);
                let coords = w.coordinates_of(&image).ok_or(Error::NotInvariant)?;
                for i in coords.iter_ones() {
                    out.set(i, j, true);
                }
            }
            Ok(out)
        };
        S3Action::new(restrict(&self.sigma)?, restrict(&self.tau)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf2::BitVec;
    use proptest::prelude::*;

    #[test]
    fn presentation_is_enforced() {
        let id = BitMatrix::identity(2);
        let swap = BitMatrix::from_fn(2, 2, |i, j| i != j);
        // sigma of order 2 is rejected...
        assert!(matches!(
            S3Action::new(swap.clone(), id.clone()),
            Err(Error::BadAction { .. })
        ));
        // ...but sigma = 1, tau of order 2 is a perfectly good action.
        assert!(S3Action::new(id, swap).is_ok());
    }

    #[test]
    fn steinberg_has_no_invariants() {
        let st = S3Action::steinberg();
        assert_eq!(st.invariants(Subgroup::Alternating).dim(), 0);
        assert_eq!(st.invariants(Subgroup::Full).dim(), 0);
    }

    #[test]
    fn coset_invariants() {
        let c = S3Action::coset();
        assert_eq!(c.invariants(Subgroup::Alternating).dim(), 2);
        assert_eq!(c.invariants(Subgroup::Full).dim(), 1);
    }

    #[test]
    fn regular_invariants() {
        let r = S3Action::regular();
        // One fixed line per sigma-orbit on the group basis, and only the
        // all-ones vector survives tau as well.
        assert_eq!(r.invariants(Subgroup::Alternating).dim(), 2);
        let full = r.invariants(Subgroup::Full);
        assert_eq!(full.dim(), 1);
        assert!(full.contains(&BitVec::from_bools(&[true; 6])));
    }

    #[test]
    fn hom_counts_on_the_basic_modules() {
        assert_eq!(S3Action::steinberg().steinberg_multiplicity(), 1);
        assert_eq!(S3Action::coset().steinberg_multiplicity(), 0);
        assert_eq!(S3Action::trivial().steinberg_multiplicity(), 0);
        assert_eq!(S3Action::regular().steinberg_multiplicity(), 2);
    }

    #[test]
    fn regular_representation_decomposes() {
        let counts = S3Action::regular().projective_summands().unwrap();
        assert_eq!(counts, Summands { steinberg: 2, coset: 1 });
    }

    #[test]
    fn steinberg_tensor_steinberg() {
        let counts = S3Action::steinberg()
            .tensor(&S3Action::steinberg())
            .projective_summands()
            .unwrap();
        assert_eq!(counts, Summands { steinberg: 1, coset: 1 });
    }

    #[test]
    fn coset_tensor_steinberg() {
        let counts = S3Action::coset()
            .tensor(&S3Action::steinberg())
            .projective_summands()
            .unwrap();
        assert_eq!(counts, Summands { steinberg: 2, coset: 0 });
    }

    #[test]
    fn trivial_module_is_not_projective() {
        assert!(matches!(
            S3Action::trivial().projective_summands(),
            Err(Error::NotProjective { im_dim: 1, ker_dim: 0 })
        ));
        // A trivial summand hiding next to projectives is still detected.
        let m = S3Action::regular().direct_sum(&S3Action::trivial());
        assert!(m.projective_summands().is_err());
        assert_eq!(m.steinberg_multiplicity(), 2);
    }

    #[test]
    fn idempotent_split_is_a_direct_sum() {
        for m in [
            S3Action::steinberg(),
            S3Action::coset(),
            S3Action::regular(),
            S3Action::steinberg().tensor(&S3Action::regular()),
        ] {
            let (im, ker) = m.idempotent_split();
            assert_eq!(im.dim() + ker.dim(), m.dim());
            assert_eq!(im.intersect(&ker).unwrap().dim(), 0);
        }
    }

    #[test]
    fn restriction_to_steinberg_part_is_steinberg() {
        // Inside St (x) St the idempotent kernel is a Steinberg summand.
        let m = S3Action::steinberg().tensor(&S3Action::steinberg());
        let (_, ker) = m.idempotent_split();
        let st_part = m.restrict_to(&ker).unwrap();
        assert_eq!(st_part.dim(), 2);
        assert_eq!(st_part.steinberg_multiplicity(), 1);
        assert_eq!(st_part.invariants(Subgroup::Alternating).dim(), 0);
    }

    #[test]
    fn restriction_rejects_non_invariant_subspaces() {
        let st = S3Action::steinberg();
        // The line through the first basis vector is not sigma-stable.
        let line = Subspace::from_spanning(&BitMatrix::from_fn(1, 2, |_, j| j == 0));
        assert!(matches!(st.restrict_to(&line), Err(Error::NotInvariant)));
    }

    fn arb_projective(max_each: usize) -> impl Strategy<Value = (usize, usize, S3Action)> {
        (0..=max_each, 0..=max_each).prop_filter_map(
            "at least one summand",
            |(r, s)| {
                if r + s == 0 {
                    return None;
                }
                let mut pieces = Vec::new();
                pieces.extend(std::iter::repeat_with(S3Action::steinberg).take(r));
                pieces.extend(std::iter::repeat_with(S3Action::coset).take(s));
                let sum = pieces[1..]
                    .iter()
                    .fold(pieces[0].clone(), |acc, p| acc.direct_sum(p));
                Some((r, s, sum))
            },
        )
    }

    proptest! {
        #[test]
        fn summand_counts_recover_the_construction((r, s, m) in arb_projective(4)) {
            let counts = m.projective_summands().unwrap();
            prop_assert_eq!(counts, Summands { steinberg: r, coset: s });
            prop_assert_eq!(m.steinberg_multiplicity(), r);
            prop_assert_eq!(m.invariants(Subgroup::Full).dim(), s);
        }

        #[test]
        fn tensor_dims_and_hom_are_consistent(
            (r1, s1, m1) in arb_projective(2),
            (r2, s2, m2) in arb_projective(2),
        ) {
            let t = m1.tensor(&m2);
            prop_assert_eq!(t.dim(), m1.dim() * m2.dim());
            // St (x) St = coset + St, St (x) coset = St + St,
            // coset (x) coset = coset + coset; Steinberg multiplicities add up.
            prop_assert_eq!(t.steinberg_multiplicity(), r1 * r2 + 2 * (r1 * s2 + s1 * r2));
            let counts = t.projective_summands().unwrap();
            prop_assert_eq!(counts.coset, r1 * r2 + 2 * s1 * s2);
        }
    }
}
