//! Dense, bit-packed, exact linear algebra over GF(2).
//!
//! Everything in this crate is exact: a matrix is a grid of bits, addition is
//! XOR, and multiplication is AND-plus-parity.  Rows are packed 64 entries to
//! a `u64` word, so row operations run a word at a time.
//!
//! The central design rule is *canonicity*: every subspace is stored as the
//! reduced row-echelon form (RREF) of some spanning set, with zero rows
//! dropped.  The RREF basis of a subspace is unique, so two [`Subspace`]
//! values are equal as subspaces if and only if they are equal bit for bit.
//! All higher-level code relies on this to compare spaces of cocycles,
//! invariants and images without any extra normalisation step.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 coordinates per word.
///
/// Bits past `len` in the last word are kept at zero so that whole-word
/// operations (XOR, popcount, dot products) need no masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; words_for(len)] }
    }

    /// Builds a vector from explicit coordinates.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// The vector of the given length with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Adds `other` into `self` (XOR of coordinates).
    pub fn xor_with(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors of different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first (lowest-index) one, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Standard dot product: parity of the coordinatewise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot product of vectors of different lengths");
        let mut parity = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            parity ^= a & b;
        }
        parity.count_ones() % 2 == 1
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Error returned when combining subspaces of different ambient dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientMismatch {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for AmbientMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ambient dimensions differ: {} vs {}", self.left, self.right)
    }
}

impl std::error::Error for AmbientMismatch {}

/// A dense matrix over GF(2), stored row-major with bit-packed rows.
///
/// Zero rows and zero columns are allowed; a `0×n` or `n×0` matrix behaves as
/// the empty family of constraints or vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix with entry `(i, j)` equal to `f(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Stacks the given rows into a matrix.  `cols` must be supplied so the
    /// row list may be empty.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {} but the matrix has {cols} columns", r.len());
            m.data[i * m.stride..(i + 1) * m.stride].copy_from_slice(&r.words);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of range for {}x{}", self.rows, self.cols);
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of range for {}x{}", self.rows, self.cols);
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        assert!(i < self.rows, "row {i} out of range for {} rows", self.rows);
        BitVec { len: self.cols, words: self.data[i * self.stride..(i + 1) * self.stride].to_vec() }
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (i, j) = (i.min(j), i.max(j));
        let (head, tail) = self.data.split_at_mut(j * self.stride);
        head[i * self.stride..(i + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// Adds row `src` into row `dst`.
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        assert!(dst != src, "xor_row with dst == src would zero the row");
        let s = src * self.stride;
        let d = dst * self.stride;
        for w in 0..self.stride {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    /// Matrix-vector product, treating `v` as a column vector.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length {} does not match {} columns", v.len(), self.cols);
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut parity = 0u64;
            for w in 0..self.stride {
                parity ^= self.data[i * self.stride + w] & v.words[w];
            }
            if parity.count_ones() % 2 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions {} and {} do not match", self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let s = k * other.stride;
                    let d = i * out.stride;
                    for w in 0..other.stride {
                        out.data[d + w] ^= other.data[s + w];
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum (XOR) of two matrices of equal shape.
    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum of matrices of different shapes");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Vertical concatenation: `self` on top of `other`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "vstack of matrices with different column counts");
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&other.data);
        out
    }

    /// Appends one extra column holding `col`.
    pub fn augment_col(&self, col: &BitVec) -> BitMatrix {
        assert_eq!(col.len(), self.rows, "augment column has wrong length");
        let mut out = BitMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for w in 0..self.stride {
                out.data[i * out.stride + w] = self.data[i * self.stride + w];
            }
            if col.get(i) {
                out.set(i, self.cols, true);
            }
        }
        out
    }

    /// Kronecker (tensor) product.  Entry `((i1, i2), (j1, j2))` of the
    /// result is `self[i1, j1] * other[i2, j2]`, with the second index
    /// varying fastest.
    pub fn kronecker(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                if self.get(i1, j1) {
                    for i2 in 0..other.rows {
                        for j2 in 0..other.cols {
                            if other.get(i2, j2) {
                                out.set(i1 * other.rows + i2, j1 * other.cols + j2, true);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form together with the pivot columns, ascending.
    ///
    /// The shape is preserved: zero rows stay in place below the pivot rows.
    /// RREF over a field is unique, so row-equivalent matrices produce
    /// bit-identical results.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            if let Some(p) = (next_row..m.rows).find(|&i| m.get(i, col)) {
                m.swap_rows(next_row, p);
                for i in 0..m.rows {
                    if i != next_row && m.get(i, col) {
                        m.xor_row(i, next_row);
                    }
                }
                pivots.push(col);
                next_row += 1;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The kernel `{v : self * v = 0}` as a canonical subspace of the column
    /// coordinate space.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row_idx, &p) in pivots.iter().enumerate() {
                if r.get(row_idx, free) {
                    v.set(p, true);
                }
            }
            rows.push(v);
        }
        Subspace::from_spanning(&BitMatrix::from_rows(self.cols, &rows))
    }

    /// One solution of `self * x = b`, if the system is consistent.  Free
    /// coordinates are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let (r, pivots) = self.augment_col(b).rref();
        if pivots.last() == Some(&self.cols) {
            return None; // a pivot in the augmented column: inconsistent
        }
        let mut x = BitVec::zeros(self.cols);
        for (row_idx, &p) in pivots.iter().enumerate() {
            if r.get(row_idx, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// A subspace of GF(2)^n in canonical form: the stored basis is the RREF of
/// any spanning set, with zero rows removed.  Canonical form makes equality
/// of subspaces literal equality of the struct.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace of GF(2)^n.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: BitMatrix::zeros(0, ambient), pivots: Vec::new() }
    }

    /// The whole space GF(2)^n.
    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: BitMatrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// The span of the rows of `m`, canonicalised.
    pub fn from_spanning(m: &BitMatrix) -> Self {
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        let rows: Vec<BitVec> = (0..rank).map(|i| r.row(i)).collect();
        Subspace { ambient: m.cols(), basis: BitMatrix::from_rows(m.cols(), &rows), pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// The canonical (RREF) basis, one vector per row.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        self.reduce(v).is_zero()
    }

    /// The residue of `v` after subtracting its projection onto the pivot
    /// coordinates; zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut w = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w.get(p) {
                w.xor_with(&self.basis.row(i));
            }
        }
        w
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace.  Because the basis is in RREF, the coordinate on basis
    /// vector `i` is just the entry of `v` at pivot `i`.
    pub fn coordinates_of(&self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut coords = BitVec::zeros(self.dim());
        let mut w = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w.get(p) {
                coords.set(i, true);
                w.xor_with(&self.basis.row(i));
            }
        }
        if w.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, AmbientMismatch> {
        if self.ambient != other.ambient {
            return Err(AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(Subspace::from_spanning(&self.basis.vstack(&other.basis)))
    }

    /// Intersection of two subspaces.
    ///
    /// Each space is first converted to constraint form: the kernel of a
    /// basis matrix `B` (as a map on column vectors) is the annihilator of
    /// the row space of `B` under the standard bilinear form, and the row
    /// space is exactly the solution set of its annihilator's equations.
    /// Stacking both constraint sets and taking the kernel gives the
    /// intersection, already canonical.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, AmbientMismatch> {
        if self.ambient != other.ambient {
            return Err(AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let ann_self = self.basis.kernel_basis();
        let ann_other = other.basis.kernel_basis();
        Ok(ann_self.basis.vstack(&ann_other.basis).kernel_basis())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace dim {} of GF(2)^{} [", self.dim(), self.ambient)?;
        for r in self.basis_rows() {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}
